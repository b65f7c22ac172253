// Copyright 2026 The stabmub Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "stabmub/phase_space.h"

#include <algorithm>
#include <functional>

#include "stabmub/error.h"

namespace stabmub {

SympMap compose(const Field &f, const SympMap &x, const SympMap &y) {
    return {
        f.mul(x.a, y.a) ^ f.mul(x.b, y.c),
        f.mul(x.a, y.b) ^ f.mul(x.b, y.d),
        f.mul(x.c, y.a) ^ f.mul(x.d, y.c),
        f.mul(x.c, y.b) ^ f.mul(x.d, y.d),
    };
}

Elem det(const Field &f, const SympMap &m) {
    return f.mul(m.a, m.d) ^ f.mul(m.b, m.c);
}

SympMap inverse(const Field &f, const SympMap &m) {
    Elem di = f.inv(det(f, m));
    return {f.mul(m.d, di), f.mul(m.b, di), f.mul(m.c, di), f.mul(m.a, di)};
}

SympMap power(const Field &f, const SympMap &m, std::uint64_t k) {
    SympMap result = SympMap::identity();
    SympMap base = m;
    while (k != 0) {
        if (k & 1) {
            result = compose(f, result, base);
        }
        base = compose(f, base, base);
        k >>= 1;
    }
    return result;
}

std::vector<SympMap> enumerate_sl2(const Field &f) {
    std::vector<SympMap> out;
    const Elem q = f.size();
    for (Elem a = 0; a < q; a++) {
        for (Elem b = 0; b < q; b++) {
            for (Elem c = 0; c < q; c++) {
                for (Elem d = 0; d < q; d++) {
                    if ((f.mul(a, d) ^ f.mul(b, c)) == 1) {
                        out.push_back({a, b, c, d});
                    }
                }
            }
        }
    }
    return out;
}

std::string to_string(const SympMap &m) {
    return "[[" + std::to_string(m.a) + "," + std::to_string(m.b) + "],[" + std::to_string(m.c) + "," +
           std::to_string(m.d) + "]]";
}

Direction direction_of(const Field &f, PhaseVec v) {
    if (v.a != 0) {
        return {{1, f.div(v.b, v.a)}};
    }
    if (v.b != 0) {
        return {{0, 1}};
    }
    throw Error(ErrorKind::InvalidConfig, "the zero vector spans no direction");
}

std::uint32_t direction_index(const Field &f, const Direction &d) {
    return d.rep.a == 1 ? d.rep.b : f.size();
}

Direction direction_from_index(const Field &f, std::uint32_t idx) {
    if (idx == f.size()) {
        return {{0, 1}};
    }
    return {{1, idx}};
}

std::vector<Direction> enumerate_directions(const Field &f) {
    std::vector<Direction> out;
    for (std::uint32_t k = 0; k <= f.size(); k++) {
        out.push_back(direction_from_index(f, k));
    }
    return out;
}

Line line_through(const Field &f, PhaseVec point, const Direction &dir) {
    if (dir.rep.a == 1) {
        return {dir, {0, point.b ^ f.mul(point.a, dir.rep.b)}};
    }
    return {dir, {point.a, 0}};
}

std::uint32_t line_index(const Field &f, const Line &l) {
    std::uint32_t coord = l.dir.rep.a == 1 ? l.off.b : l.off.a;
    return direction_index(f, l.dir) * f.size() + coord;
}

Line line_from_index(const Field &f, std::uint32_t idx) {
    Direction d = direction_from_index(f, idx / f.size());
    Elem c = idx % f.size();
    if (d.rep.a == 1) {
        return {d, {0, c}};
    }
    return {d, {c, 0}};
}

std::vector<Line> enumerate_lines(const Field &f) {
    std::vector<Line> out;
    const std::uint32_t count = f.size() * (f.size() + 1);
    out.reserve(count);
    for (std::uint32_t k = 0; k < count; k++) {
        out.push_back(line_from_index(f, k));
    }
    return out;
}

bool line_contains(const Field &f, const Line &l, PhaseVec x) {
    PhaseVec diff = x + l.off;
    // diff must be proportional to the direction representative.
    return symplectic_form(f, diff, l.dir.rep) == 0;
}

AffineMap compose(const Field &f, const AffineMap &g, const AffineMap &h) {
    // g(h(x)) = A(B(x + w) + v) = AB(x + w + B^{-1} v).
    PhaseVec pulled = apply(f, inverse(f, h.linear), g.shift);
    return {compose(f, g.linear, h.linear), h.shift + pulled};
}

PhaseVec act_affine(const Field &f, const AffineMap &g, PhaseVec x) {
    return apply(f, g.linear, x + g.shift);
}

Line act_affine(const Field &f, const AffineMap &g, const Line &l) {
    PhaseVec point = act_affine(f, g, l.off);
    Direction dir = direction_of(f, apply(f, g.linear, l.dir.rep));
    return line_through(f, point, dir);
}

std::vector<std::uint32_t> direction_permutation(const Field &f, const SympMap &m) {
    std::vector<std::uint32_t> perm;
    for (const auto &d : enumerate_directions(f)) {
        perm.push_back(direction_index(f, direction_of(f, apply(f, m, d.rep))));
    }
    return perm;
}

std::vector<std::size_t> cycle_type(const std::vector<std::uint32_t> &perm) {
    std::vector<bool> seen(perm.size(), false);
    std::vector<std::size_t> lengths;
    for (std::size_t start = 0; start < perm.size(); start++) {
        if (seen[start]) {
            continue;
        }
        std::size_t len = 0;
        for (std::size_t k = start; !seen[k]; k = perm[k]) {
            seen[k] = true;
            len++;
        }
        lengths.push_back(len);
    }
    std::sort(lengths.begin(), lengths.end(), std::greater<>());
    return lengths;
}

}  // namespace stabmub
