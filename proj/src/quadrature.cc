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

#include "stabmub/quadrature.h"

#include <algorithm>

#include "stabmub/error.h"
#include "stabmub/parallel.h"

namespace stabmub {

namespace {

GaussianInt rotate(const GaussianInt &z, Z4 k) {
    switch (k.value()) {
        case 0:
            return z;
        case 1:
            return {-z.im, z.re};
        case 2:
            return {-z.re, -z.im};
        default:
            return {z.im, -z.re};
    }
}

nlohmann::json line_json(const Line &l) {
    return {{"dir", {l.dir.rep.a, l.dir.rep.b}}, {"off", {l.off.a, l.off.b}}};
}

}  // namespace

Monomial Monomial::identity(std::size_t dim) {
    Monomial m;
    m.target.resize(dim);
    m.phase.assign(dim, Z4(0));
    for (std::size_t c = 0; c < dim; c++) {
        m.target[c] = static_cast<std::uint32_t>(c);
    }
    return m;
}

OperatorMatrix Monomial::to_matrix() const {
    const std::size_t d = dim();
    std::vector<GaussianInt> nums(d * d, GaussianInt{0, 0});
    for (std::size_t c = 0; c < d; c++) {
        nums[target[c] * d + c] = unit_power(phase[c].value());
    }
    return OperatorMatrix(d, std::move(nums), 0);
}

Monomial Monomial::adjoint() const {
    Monomial out;
    out.target.resize(dim());
    out.phase.resize(dim());
    for (std::size_t c = 0; c < dim(); c++) {
        out.target[target[c]] = static_cast<std::uint32_t>(c);
        out.phase[target[c]] = -phase[c];
    }
    return out;
}

Monomial operator*(const Monomial &m, const Monomial &n) {
    Monomial out;
    out.target.resize(n.dim());
    out.phase.resize(n.dim());
    for (std::size_t c = 0; c < n.dim(); c++) {
        out.target[c] = m.target[n.target[c]];
        out.phase[c] = n.phase[c] + m.phase[n.target[c]];
    }
    return out;
}

OperatorMatrix Monomial::conjugate(const OperatorMatrix &x) const {
    const std::size_t d = dim();
    std::vector<GaussianInt> nums(d * d, GaussianInt{0, 0});
    for (std::size_t r = 0; r < d; r++) {
        for (std::size_t c = 0; c < d; c++) {
            nums[target[r] * d + target[c]] = rotate(x.numerator(r, c), phase[r] - phase[c]);
        }
    }
    return OperatorMatrix(d, std::move(nums), x.log2_den());
}

ExactVector Monomial::apply(const ExactVector &x) const {
    ExactVector out(dim());
    for (std::size_t c = 0; c < dim(); c++) {
        out[target[c]] = GaussianDyadic::unit(phase[c].value()) * x[c];
    }
    return out;
}

WeylSystem::WeylSystem(const MultiplierSpec &spec) : field_(&spec.field()) {
    const Elem q = field_->size();
    mixed_.resize(std::size_t{q} * q);
    for (Elem a2 = 0; a2 < q; a2++) {
        for (Elem a1 = 0; a1 < q; a1++) {
            mixed_[a1 | (std::size_t{a2} << field_->degree())] = spec.g({a1, 0}, {0, a2});
        }
    }
}

Monomial WeylSystem::monomial(PhaseVec v) const {
    const Field &f = *field_;
    Monomial m;
    m.target.resize(f.size());
    m.phase.resize(f.size());
    const Z4 base = mixed(v.a, v.b);
    for (Elem gamma = 0; gamma < f.size(); gamma++) {
        m.target[gamma] = gamma ^ v.a;
        m.phase[gamma] = base + Z4::twice(f.trace(f.mul(v.b, gamma)));
    }
    return m;
}

OperatorMatrix quadrature_projection(const WeylSystem &w, const Line &l) {
    const Field &f = w.field();
    const std::size_t d = f.size();
    const Elem a1 = l.dir.rep.a;
    const Elem a2 = l.dir.rep.b;
    const Elem b1 = l.off.a;
    const Elem b2 = l.off.b;
    std::vector<GaussianInt> nums(d * d, GaussianInt{0, 0});
    for (Elem gamma = 0; gamma < d; gamma++) {
        const Elem coef = f.mul(a2, b1 ^ gamma) ^ f.mul(a1, b2);
        for (Elem lambda = 0; lambda < d; lambda++) {
            Z4 phase = w.mixed(f.mul(lambda, a1), f.mul(lambda, a2)) + Z4::twice(f.trace(f.mul(lambda, coef)));
            std::size_t row = gamma ^ f.mul(lambda, a1);
            GaussianInt &slot = nums[row * d + gamma];
            slot = slot + unit_power(phase.value());
        }
    }
    return OperatorMatrix(d, std::move(nums), f.degree());
}

OperatorMatrix quadrature_projection_from_weyl(const WeylSystem &w, const Line &l) {
    const Field &f = w.field();
    OperatorMatrix sum(f.size());
    for (Elem lambda = 0; lambda < f.size(); lambda++) {
        PhaseVec lu = scale(f, lambda, l.dir.rep);
        int sign = f.trace(symplectic_form(f, l.off, lu));
        OperatorMatrix term = w.matrix(lu);
        sum = sign ? sum - term : sum + term;
    }
    return GaussianDyadic(1, 0, f.degree()) * sum;
}

ExactVector mub_vector(const WeylSystem &w, const Line &l) {
    const Field &f = w.field();
    ExactVector psi(f.size());
    if (l.dir.rep.a == 0) {
        psi[0] = GaussianDyadic(1);
    } else {
        const Elem b = l.dir.rep.b;
        for (Elem mu = 0; mu < f.size(); mu++) {
            psi[mu] = GaussianDyadic::unit(w.mixed(mu, f.mul(mu, b)).value());
        }
    }
    return w.monomial(l.off).apply(psi);
}

ExactVector normalize_phase(const ExactVector &x) {
    for (const auto &e : x) {
        if (!e.is_zero()) {
            GaussianDyadic s = e.conj();
            ExactVector out;
            out.reserve(x.size());
            for (const auto &y : x) {
                out.push_back(s * y);
            }
            return out;
        }
    }
    return x;
}

QuadratureSystem build_quadrature(const MultiplierSpec &spec, unsigned jobs) {
    QuadratureSystem q{spec, WeylSystem(spec), {}};
    const Field &f = spec.field();
    const auto lines = enumerate_lines(f);
    q.projections.resize(lines.size());
    parallel_for(lines.size(), jobs, [&](std::uint64_t k) { q.projections[k] = quadrature_projection(q.weyl, lines[k]); });
    return q;
}

OperatorMatrix metap_unitary(const SympMap &A, const MultiplierSpec &spec, const WeylSystem &w) {
    const Field &f = spec.field();
    SympMap shifted{A.a ^ 1u, A.b, A.c, A.d ^ 1u};
    if (det(f, shifted) == 0) {
        throw Error(ErrorKind::SingularShift, "A + I is singular for A = " + to_string(A));
    }
    const SympMap shift_inv = inverse(f, shifted);
    const std::size_t d = f.size();
    std::vector<GaussianInt> nums(d * d, GaussianInt{0, 0});
    const std::uint32_t points = f.size() * f.size();
    for (std::uint32_t iu = 0; iu < points; iu++) {
        PhaseVec u = vec_from_index(f, iu);
        Z4 coef = spec.g(u, apply(f, shift_inv, u));
        Monomial m = w.monomial(u);
        for (std::size_t c = 0; c < d; c++) {
            GaussianInt &slot = nums[m.target[c] * d + c];
            slot = slot + unit_power((coef + m.phase[c]).value());
        }
    }
    return OperatorMatrix(d, std::move(nums), f.degree());
}

OperatorMatrix covariance_unitary(const SympMap &A, const QuadratureSystem &q) {
    const Field &f = q.field();
    if (A.is_identity()) {
        return OperatorMatrix::identity(f.size());
    }
    const TorusSpec &t = q.spec.torus();
    if (!t.contains(f, A)) {
        throw Error(ErrorKind::NotInTorus, "element " + to_string(A) + " is not in the " +
                                               std::string(kind_name(t.kind)) + " torus");
    }
    if (t.kind == TorusKind::Split) {
        Monomial m = Monomial::identity(f.size());
        for (Elem gamma = 0; gamma < f.size(); gamma++) {
            m.target[gamma] = f.mul(gamma, A.a);
        }
        return m.to_matrix();
    }
    return metap_unitary(A, q.spec, q.weyl);
}

Report verify_definition(const QuadratureSystem &q, unsigned jobs) {
    const Field &f = q.field();
    const auto lines = enumerate_lines(f);
    const std::size_t L = lines.size();
    const GaussianDyadic one(1);
    const GaussianDyadic overlap(1, 0, f.degree());
    Report report;

    CheckResult proj{"definition.rank_one_projection"};
    std::vector<char> bad(L, 0);
    parallel_for(L, jobs, [&](std::uint64_t k) {
        const OperatorMatrix &P = q.projections[k];
        bad[k] = !(P.adjoint() == P && P * P == P && P.trace() == one);
    });
    for (std::size_t k = 0; k < L; k++) {
        proj.checked++;
        if (bad[k]) {
            const OperatorMatrix &P = q.projections[k];
            proj.fail({{"line", line_json(lines[k])},
                       {"hermitian", P.adjoint() == P},
                       {"idempotent", P * P == P},
                       {"trace", P.trace().str()}});
        }
    }
    report.add(proj);

    CheckResult resolution{"definition.resolution_of_identity"};
    const std::uint32_t q_size = f.size();
    for (std::uint32_t dir = 0; dir <= q_size; dir++) {
        OperatorMatrix sum(q_size);
        for (std::uint32_t c = 0; c < q_size; c++) {
            sum = sum + q.projections[dir * q_size + c];
        }
        resolution.checked++;
        if (!sum.is_identity()) {
            resolution.fail({{"direction", dir}});
        }
    }
    report.add(resolution);

    CheckResult overlaps{"definition.trace_overlaps"};
    const std::uint64_t total = std::uint64_t{L} * L;
    auto check_pair = [&](std::uint64_t t) {
        std::size_t i = t / L;
        std::size_t j = t % L;
        if (i == j) {
            return false;
        }
        GaussianDyadic tr = trace_product(q.projections[i], q.projections[j]);
        bool same_dir = i / q_size == j / q_size;
        return !(tr == (same_dir ? GaussianDyadic() : overlap));
    };
    auto first = find_first_failure(total, jobs, check_pair);
    std::uint64_t same = std::uint64_t{q_size + 1} * q_size * (q_size - 1);
    overlaps.details["ordered_pairs"] = std::uint64_t{L} * (L - 1);
    overlaps.details["cross_direction_pairs"] = std::uint64_t{L} * (L - 1) - same;
    overlaps.details["same_direction_pairs"] = same;
    overlaps.checked = std::uint64_t{L} * (L - 1);
    if (first) {
        std::size_t i = *first / L;
        std::size_t j = *first % L;
        overlaps.checked = 0;
        for (std::uint64_t t = 0; t <= *first; t++) {
            overlaps.checked += (t / L != t % L) ? 1 : 0;
        }
        overlaps.fail({{"line1", line_json(lines[i])},
                       {"line2", line_json(lines[j])},
                       {"trace", trace_product(q.projections[i], q.projections[j]).str()}});
    }
    report.add(overlaps);
    return report;
}

std::vector<AffineMap> semidirect_elements(const TorusSpec &t, const Field &f) {
    std::vector<AffineMap> out;
    const std::uint32_t points = f.size() * f.size();
    for (const auto &A : t.elements(f)) {
        for (std::uint32_t iv = 0; iv < points; iv++) {
            out.push_back({A, vec_from_index(f, iv)});
        }
    }
    return out;
}

std::vector<AffineMap> translations(const Field &f) {
    std::vector<AffineMap> out;
    const std::uint32_t points = f.size() * f.size();
    for (std::uint32_t iv = 0; iv < points; iv++) {
        out.push_back({SympMap::identity(), vec_from_index(f, iv)});
    }
    return out;
}

CheckResult verify_covariance(const QuadratureSystem &q, const std::vector<AffineMap> &group, unsigned jobs) {
    const Field &f = q.field();
    const auto lines = enumerate_lines(f);
    const std::size_t L = lines.size();
    CheckResult out{"covariance"};

    // Distinct linear parts, each with U(A) and the cache U(A) Q(l) U(A)^* over all lines.
    std::vector<SympMap> linear;
    for (const auto &g : group) {
        if (std::find(linear.begin(), linear.end(), g.linear) == linear.end()) {
            linear.push_back(g.linear);
        }
    }
    std::vector<OperatorMatrix> unitaries(linear.size());
    std::vector<OperatorMatrix> adjoints(linear.size());
    std::vector<std::vector<OperatorMatrix>> conjugated(linear.size());
    for (std::size_t a = 0; a < linear.size(); a++) {
        unitaries[a] = covariance_unitary(linear[a], q);
        adjoints[a] = unitaries[a].adjoint();
        conjugated[a].resize(L);
    }
    parallel_for(linear.size() * L, jobs, [&](std::uint64_t t) {
        std::size_t a = t / L;
        conjugated[a][t % L] = unitaries[a] * q.projections[t % L] * adjoints[a];
    });
    std::vector<std::size_t> linear_of(group.size());
    for (std::size_t k = 0; k < group.size(); k++) {
        linear_of[k] = std::find(linear.begin(), linear.end(), group[k].linear) - linear.begin();
    }

    const std::uint64_t total = std::uint64_t{group.size()} * L;
    auto fails = [&](std::uint64_t t) {
        const AffineMap &g = group[t / L];
        const std::size_t a = linear_of[t / L];
        const Line &l = lines[t % L];
        OperatorMatrix translated = q.weyl.monomial(g.shift).conjugate(q.projections[t % L]);
        Line shifted = act_affine(f, AffineMap{SympMap::identity(), g.shift}, l);
        const OperatorMatrix &expected = q.at(act_affine(f, g, l));
        // U X U^* depends only on X, so the cache applies whenever X equals Q(l + v) exactly.
        if (translated == q.at(shifted)) {
            return !(conjugated[a][line_index(f, shifted)] == expected);
        }
        return !(unitaries[a] * translated * adjoints[a] == expected);
    };
    auto first = find_first_failure(total, jobs, fails);
    out.checked = first ? *first + 1 : total;
    out.details["group_elements"] = group.size();
    out.details["lines"] = L;
    if (first) {
        const AffineMap &g = group[*first / L];
        out.fail({{"A", {{"a", g.linear.a}, {"b", g.linear.b}, {"c", g.linear.c}, {"d", g.linear.d}}},
                  {"v", {g.shift.a, g.shift.b}},
                  {"line", line_json(lines[*first % L])}});
    }
    return out;
}

std::string equivalence_key(const MultiplierSpec &spec) {
    const Field &f = spec.field();
    MultiplierTable std_table = to_standard(spec.table(), spec.change_of_basis());
    std::string key = "stabmub-key-v1;n=" + std::to_string(f.degree()) + ";modulus=" + std::to_string(f.modulus()) + ";g=";
    key.reserve(key.size() + std_table.g.size());
    for (Z4 z : std_table.g) {
        key.push_back(static_cast<char>('0' + z.value()));
    }
    return key;
}

}  // namespace stabmub
