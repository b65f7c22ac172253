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

#ifndef STABMUB_PHASE_SPACE_H
#define STABMUB_PHASE_SPACE_H

#include <cstdint>
#include <string>
#include <vector>

#include "stabmub/gf.h"

namespace stabmub {

/// Vector a*e1 + b*e2 of the two-dimensional space V = F^2.
///
/// Coordinates are raw bit patterns; the field is supplied by the caller. The phase space is
/// identified with V, with the origin at the zero vector.
struct PhaseVec {
    Elem a = 0;
    Elem b = 0;

    friend bool operator==(const PhaseVec &, const PhaseVec &) = default;
    friend PhaseVec operator+(PhaseVec u, PhaseVec v) {
        return {u.a ^ v.a, u.b ^ v.b};
    }
};

inline constexpr PhaseVec kE1{1, 0};
inline constexpr PhaseVec kE2{0, 1};

/// Index a + b * 2^n. This is the "bit-pattern order" used for multiplier tables.
inline std::uint32_t vec_index(const Field &f, PhaseVec v) {
    return v.a | (v.b << f.degree());
}
inline PhaseVec vec_from_index(const Field &f, std::uint32_t idx) {
    return {idx & (f.size() - 1), idx >> f.degree()};
}
inline PhaseVec scale(const Field &f, Elem lambda, PhaseVec v) {
    return {f.mul(lambda, v.a), f.mul(lambda, v.b)};
}

/// S((a,b),(c,d)) = ad + bc. Symmetric and alternating in characteristic 2; S(e1, e2) = 1.
inline Elem symplectic_form(const Field &f, PhaseVec u, PhaseVec v) {
    return f.mul(u.a, v.b) ^ f.mul(u.b, v.a);
}

/// 2x2 matrix [[a, b], [c, d]] over F acting on column vectors. Elements of SL(2, F) have ad + bc = 1.
struct SympMap {
    Elem a = 1;
    Elem b = 0;
    Elem c = 0;
    Elem d = 1;

    static constexpr SympMap identity() {
        return {1, 0, 0, 1};
    }
    bool is_identity() const {
        return a == 1 && b == 0 && c == 0 && d == 1;
    }
    friend bool operator==(const SympMap &, const SympMap &) = default;
    friend auto operator<=>(const SympMap &, const SympMap &) = default;
};

inline PhaseVec apply(const Field &f, const SympMap &m, PhaseVec v) {
    return {f.mul(m.a, v.a) ^ f.mul(m.b, v.b), f.mul(m.c, v.a) ^ f.mul(m.d, v.b)};
}
SympMap compose(const Field &f, const SympMap &x, const SympMap &y);
Elem det(const Field &f, const SympMap &m);
inline Elem matrix_trace(const SympMap &m) {
    return m.a ^ m.d;
}
/// Throws Error(InverseOfZero) for singular matrices.
SympMap inverse(const Field &f, const SympMap &m);
SympMap power(const Field &f, const SympMap &m, std::uint64_t k);
/// Every element of SL(2, F), ordered by (a, b, c, d).
std::vector<SympMap> enumerate_sl2(const Field &f);
std::string to_string(const SympMap &m);

/// One-dimensional subspace F*rep with rep normalized: (1, b) or (0, 1).
struct Direction {
    PhaseVec rep;
    friend bool operator==(const Direction &, const Direction &) = default;
};

/// Direction spanned by a nonzero vector.
Direction direction_of(const Field &f, PhaseVec v);
/// (1, b) has index b; (0, 1) has index 2^n. Directions are ordered by this index.
std::uint32_t direction_index(const Field &f, const Direction &d);
Direction direction_from_index(const Field &f, std::uint32_t idx);
std::vector<Direction> enumerate_directions(const Field &f);

/// Affine line off + F*dir.rep. For dir (1, b) the offset has zero e1-coordinate; for dir (0, 1)
/// it has zero e2-coordinate.
struct Line {
    Direction dir;
    PhaseVec off;
    friend bool operator==(const Line &, const Line &) = default;
};

/// The unique line through `point` parallel to `dir`, in canonical form.
Line line_through(const Field &f, PhaseVec point, const Direction &dir);
/// direction_index * 2^n + (nonzero offset coordinate).
std::uint32_t line_index(const Field &f, const Line &l);
Line line_from_index(const Field &f, std::uint32_t idx);
/// All |F|(|F|+1) lines ordered by line_index.
std::vector<Line> enumerate_lines(const Field &f);
bool line_contains(const Field &f, const Line &l, PhaseVec x);

/// Element (A, v) of GL(V) x| V acting as x -> A(x + v).
struct AffineMap {
    SympMap linear;
    PhaseVec shift;
    friend bool operator==(const AffineMap &, const AffineMap &) = default;
};

/// Group law: compose(g, h) acts as g after h.
AffineMap compose(const Field &f, const AffineMap &g, const AffineMap &h);
PhaseVec act_affine(const Field &f, const AffineMap &g, PhaseVec x);
Line act_affine(const Field &f, const AffineMap &g, const Line &l);
/// Permutation of direction indices induced by a linear map.
std::vector<std::uint32_t> direction_permutation(const Field &f, const SympMap &m);
/// Cycle lengths of a permutation, descending.
std::vector<std::size_t> cycle_type(const std::vector<std::uint32_t> &perm);

}  // namespace stabmub

#endif
