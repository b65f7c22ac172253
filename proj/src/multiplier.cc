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

#include "stabmub/multiplier.h"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "stabmub/error.h"
#include "stabmub/parallel.h"

namespace stabmub {

namespace {

nlohmann::json vec_json(PhaseVec v) {
    return nlohmann::json::array({v.a, v.b});
}

nlohmann::json map_json(const SympMap &m) {
    return {{"a", m.a}, {"b", m.b}, {"c", m.c}, {"d", m.d}};
}

}  // namespace

SignSequence SignSequence::parse(std::string_view text, unsigned n) {
    if (text.size() != n) {
        throw Error(ErrorKind::InvalidConfig, "sign sequence '" + std::string(text) + "' must have exactly " +
                                                  std::to_string(n) + " characters");
    }
    SignSequence s;
    for (char c : text) {
        if (c == '+') {
            s.r.push_back(1);
        } else if (c == '-') {
            s.r.push_back(-1);
        } else {
            throw Error(ErrorKind::InvalidConfig, "sign sequence '" + std::string(text) + "' may contain only + and -");
        }
    }
    return s;
}

std::vector<SignSequence> SignSequence::all(unsigned n) {
    std::vector<SignSequence> out;
    for (std::uint32_t k = 0; k < (1u << n); k++) {
        SignSequence s;
        for (unsigned i = 0; i < n; i++) {
            s.r.push_back(((k >> (n - 1 - i)) & 1u) ? -1 : 1);
        }
        out.push_back(std::move(s));
    }
    return out;
}

std::string SignSequence::str() const {
    std::string out;
    for (int x : r) {
        out.push_back(x > 0 ? '+' : '-');
    }
    return out;
}

Z4 h_eval(Elem alpha, const SelfDualBasis &basis, const SignSequence &signs) {
    const auto z = basis.coordinates(alpha);
    int total = 0;
    for (std::size_t i = 0; i < z.size(); i++) {
        total += signs.r[i] * z[i] * z[i];
    }
    return Z4(total);
}

MultiplierSpec::MultiplierSpec(const Field &field, TorusKind kind, SelfDualBasis basis, SignSequence signs)
    : field_(&field),
      kind_(kind),
      basis_(std::move(basis)),
      signs_(std::move(signs)),
      torus_(stabmub::torus(kind, field)) {
    if (!same_field(basis_.field(), field)) {
        throw Error(ErrorKind::MixedFields, "self-dual basis belongs to a different field");
    }
    if (signs_.r.size() != field.degree()) {
        throw Error(ErrorKind::InvalidConfig, "sign sequence length must equal n = " + std::to_string(field.degree()));
    }
    for (int x : signs_.r) {
        if (x != 1 && x != -1) {
            throw Error(ErrorKind::InvalidConfig, "signs must be +1 or -1");
        }
    }
    if (kind == TorusKind::Nonsplit) {
        frame_ = nonsplit_frame(field);
        eps_ = frame_->epsilon;
        eps_bar_ = frame_->epsilon.conj();
        eps_sq_ = frame_->eps_sq;
    }
    h_table_.resize(field.size());
    for (Elem a = 0; a < field.size(); a++) {
        h_table_[a] = h_eval(a, basis_, signs_);
    }
}

MultiplierSpec MultiplierSpec::make(unsigned n, TorusKind kind, SignSequence signs) {
    const Field &f = Field::get(n);
    return MultiplierSpec(f, kind, SelfDualBasis::find(f), std::move(signs));
}

SympMap MultiplierSpec::change_of_basis() const {
    return frame_ ? frame_->change_of_basis : SympMap::identity();
}

ExtElement MultiplierSpec::bplus(PhaseVec u, PhaseVec v) const {
    const ExtField &ext = ExtField::of(*field_);
    if (!frame_) {
        // S(u, e1) = u.b and S(v, e2) = v.a.
        return ext.embed(field_->mul(u.b, v.a));
    }
    // S(x, y) = x.a y.b + x.b y.a, with e = (conj eps, eps) in frame coordinates.
    const auto &e = frame_->e_in_frame;
    const ExtElement e_bar0 = e[0].conj();
    const ExtElement e_bar1 = e[1].conj();
    ExtElement s_ue = ext.embed(u.a) * e[1] + ext.embed(u.b) * e[0];
    ExtElement s_vebar = ext.embed(v.a) * e_bar1 + ext.embed(v.b) * e_bar0;
    return s_ue * s_vebar;
}

Elem MultiplierSpec::bplus_diag(PhaseVec u) const {
    if (!frame_) {
        return field_->mul(u.a, u.b);
    }
    ExtElement b = bplus(u, u);
    if (!b.in_base()) {
        throw Error(ErrorKind::DegenerateFrame, "B+(u, u) left the base field");
    }
    return b.a();
}

Z4 MultiplierSpec::g0(PhaseVec u, PhaseVec v) const {
    if (!frame_) {
        return Z4::twice(field_->trace(field_->mul(u.b, v.a)));
    }
    return Z4::twice(ext_trace(bplus(u, v), eps_sq_));
}

Z4 MultiplierSpec::g(PhaseVec u, PhaseVec v) const {
    const Field &f = *field_;
    return h(f.sqrt(bplus_diag(u + v))) - h(f.sqrt(bplus_diag(u))) - h(f.sqrt(bplus_diag(v))) + g0(u, v);
}

MultiplierTable MultiplierSpec::table() const {
    MultiplierTable t{field_, frame(), {}};
    const std::uint32_t P = t.points();
    t.g.resize(std::size_t{P} * P);
    std::vector<Elem> diag_h(P);
    for (std::uint32_t i = 0; i < P; i++) {
        diag_h[i] = bplus_diag(vec_from_index(*field_, i));
    }
    for (std::uint32_t iu = 0; iu < P; iu++) {
        PhaseVec u = vec_from_index(*field_, iu);
        Z4 hu = h(field_->sqrt(diag_h[iu]));
        for (std::uint32_t iv = 0; iv < P; iv++) {
            PhaseVec v = vec_from_index(*field_, iv);
            Z4 value = h(field_->sqrt(diag_h[iu ^ iv])) - hu - h(field_->sqrt(diag_h[iv])) + g0(u, v);
            t.g[std::size_t{iu} * P + iv] = value;
        }
    }
    return t;
}

Report check_weyl_multiplier(const MultiplierTable &m, const WeylCheckOptions &opts) {
    const Field &f = *m.field;
    const std::uint32_t P = m.points();
    const std::uint64_t pairs = std::uint64_t{P} * P;
    Report report;

    CheckResult m1{"M.1"};
    CheckResult m2{"M.2"};
    for (std::uint64_t k = 0; k < pairs; k++) {
        std::uint32_t iu = static_cast<std::uint32_t>(k / P);
        std::uint32_t iv = static_cast<std::uint32_t>(k % P);
        PhaseVec u = vec_from_index(f, iu);
        PhaseVec v = vec_from_index(f, iv);
        Elem s = symplectic_form(f, u, v);
        if (s == 0) {
            m1.checked++;
            if (m.at(iu, iv) != Z4(0)) {
                m1.fail({{"u", vec_json(u)}, {"v", vec_json(v)}, {"g", m.at(iu, iv).value()}});
            }
        }
        m2.checked++;
        Z4 defect = m.at(iv, iu) - m.at(iu, iv);
        if (defect != Z4::twice(f.trace(s))) {
            m2.fail({{"u", vec_json(u)},
                     {"v", vec_json(v)},
                     {"g_uv", m.at(iu, iv).value()},
                     {"g_vu", m.at(iv, iu).value()},
                     {"tr_S", f.trace(s)}});
        }
    }
    report.add(m1);
    report.add(m2);

    CheckResult cocycle{"cocycle"};
    auto breaks = [&](std::uint32_t iu, std::uint32_t iv, std::uint32_t iw) {
        return m.at(iu ^ iv, iw) + m.at(iu, iv) != m.at(iu, iv ^ iw) + m.at(iv, iw);
    };
    auto witness = [&](std::uint32_t iu, std::uint32_t iv, std::uint32_t iw) {
        return nlohmann::json{{"u", vec_json(vec_from_index(f, iu))},
                              {"v", vec_json(vec_from_index(f, iv))},
                              {"w", vec_json(vec_from_index(f, iw))}};
    };
    if (!opts.cocycle_samples) {
        const std::uint64_t triples = pairs * P;
        auto first = find_first_failure(triples, opts.jobs, [&](std::uint64_t t) {
            return breaks(static_cast<std::uint32_t>(t / pairs), static_cast<std::uint32_t>((t / P) % P),
                          static_cast<std::uint32_t>(t % P));
        });
        cocycle.checked = first ? *first + 1 : triples;
        cocycle.details["mode"] = "exhaustive";
        if (first) {
            std::uint64_t t = *first;
            cocycle.fail(witness(static_cast<std::uint32_t>(t / pairs), static_cast<std::uint32_t>((t / P) % P),
                                 static_cast<std::uint32_t>(t % P)));
        }
    } else {
        std::mt19937_64 rng(opts.seed);
        cocycle.details["mode"] = "sampled";
        cocycle.details["seed"] = opts.seed;
        const std::uint64_t mask = P - 1;
        for (std::uint64_t k = 0; k < *opts.cocycle_samples; k++) {
            auto iu = static_cast<std::uint32_t>(rng() & mask);
            auto iv = static_cast<std::uint32_t>(rng() & mask);
            auto iw = static_cast<std::uint32_t>(rng() & mask);
            cocycle.checked++;
            if (breaks(iu, iv, iw)) {
                cocycle.fail(witness(iu, iv, iw));
                break;
            }
        }
    }
    report.add(cocycle);
    return report;
}

CheckResult check_invariance(const MultiplierTable &m, const std::vector<SympMap> &group, Frame group_frame,
                             unsigned jobs) {
    if (group_frame != m.frame) {
        throw Error(ErrorKind::FrameMismatch, "group and multiplier are written in different coordinate frames");
    }
    const Field &f = *m.field;
    const std::uint32_t P = m.points();
    const std::uint64_t pairs = std::uint64_t{P} * P;
    std::vector<std::vector<std::uint32_t>> images(group.size(), std::vector<std::uint32_t>(P));
    for (std::size_t a = 0; a < group.size(); a++) {
        for (std::uint32_t i = 0; i < P; i++) {
            images[a][i] = vec_index(f, apply(f, group[a], vec_from_index(f, i)));
        }
    }
    CheckResult out{"invariance"};
    const std::uint64_t total = pairs * group.size();
    auto first = find_first_failure(total, jobs, [&](std::uint64_t t) {
        const auto &img = images[t / pairs];
        auto iu = static_cast<std::uint32_t>((t % pairs) / P);
        auto iv = static_cast<std::uint32_t>(t % P);
        return m.at(img[iu], img[iv]) != m.at(iu, iv);
    });
    out.checked = first ? *first + 1 : total;
    if (first) {
        std::uint64_t t = *first;
        PhaseVec u = vec_from_index(f, static_cast<std::uint32_t>((t % pairs) / P));
        PhaseVec v = vec_from_index(f, static_cast<std::uint32_t>(t % P));
        const SympMap &A = group[t / pairs];
        out.fail({{"A", map_json(A)},
                  {"u", vec_json(u)},
                  {"v", vec_json(v)},
                  {"g_uv", m.at(u, v).value()},
                  {"g_AuAv", m.at(apply(f, A, u), apply(f, A, v)).value()}});
    }
    return out;
}

MultiplierTable average_multiplier(const MultiplierTable &m0, const std::vector<SympMap> &group) {
    const Field &f = *m0.field;
    std::set<SympMap> members(group.begin(), group.end());
    if (!members.count(SympMap::identity())) {
        throw Error(ErrorKind::NotAGroup, "subgroup must contain the identity");
    }
    for (const auto &x : group) {
        if (det(f, x) != 1) {
            throw Error(ErrorKind::NotAGroup, "element " + to_string(x) + " is not in SL(2, F)");
        }
        if (!members.count(inverse(f, x))) {
            throw Error(ErrorKind::NotAGroup, "inverse of " + to_string(x) + " is missing");
        }
        for (const auto &y : group) {
            if (!members.count(compose(f, x, y))) {
                throw Error(ErrorKind::NotAGroup, "product of " + to_string(x) + " and " + to_string(y) + " is missing");
            }
        }
    }
    MultiplierTable out{m0.field, m0.frame, std::vector<Z4>(m0.g.size())};
    const std::uint32_t P = m0.points();
    for (const auto &A : members) {
        std::vector<std::uint32_t> img(P);
        for (std::uint32_t i = 0; i < P; i++) {
            img[i] = vec_index(f, apply(f, A, vec_from_index(f, i)));
        }
        for (std::uint32_t iu = 0; iu < P; iu++) {
            for (std::uint32_t iv = 0; iv < P; iv++) {
                out.g[std::size_t{iu} * P + iv] += m0.at(img[iu], img[iv]);
            }
        }
    }
    return out;
}

MultiplierTable to_standard(const MultiplierTable &m, const SympMap &change_of_basis) {
    const Field &f = *m.field;
    const SympMap Pi = inverse(f, change_of_basis);
    const std::uint32_t P = m.points();
    std::vector<std::uint32_t> pull(P);
    for (std::uint32_t i = 0; i < P; i++) {
        pull[i] = vec_index(f, apply(f, Pi, vec_from_index(f, i)));
    }
    MultiplierTable out{m.field, Frame::Standard, std::vector<Z4>(m.g.size())};
    for (std::uint32_t ix = 0; ix < P; ix++) {
        for (std::uint32_t iy = 0; iy < P; iy++) {
            out.g[std::size_t{ix} * P + iy] = m.at(pull[ix], pull[iy]);
        }
    }
    return out;
}

Z4 metap_argument(PhaseVec u, const SympMap &A, const MultiplierSpec &spec) {
    const Field &f = spec.field();
    SympMap shifted{A.a ^ 1u, A.b, A.c, A.d ^ 1u};
    if (det(f, shifted) == 0) {
        throw Error(ErrorKind::SingularShift, "A + I is singular for A = " + to_string(A));
    }
    return spec.g(u, apply(f, inverse(f, shifted), u));
}

Z4 split_closed_form(const MultiplierSpec &spec, Elem a1, Elem a2) {
    const Field &f = spec.field();
    return spec.h(f.sqrt(f.mul(a1, a2)));
}

namespace {

Elem eps_norm_of(const MultiplierSpec &spec) {
    if (!spec.nonsplit()) {
        throw Error(ErrorKind::InvalidConfig, "closed form requires a nonsplit multiplier");
    }
    return spec.nonsplit()->eps_norm;
}

// Tr[a1 a2 N + (a1 + a2) (a1 a2 N)^{1/2}].
int sign_bit(const Field &f, Elem a1, Elem a2, Elem N) {
    Elem p = f.mul(f.mul(a1, a2), N);
    return f.trace(p ^ f.mul(a1 ^ a2, f.sqrt(p)));
}

}  // namespace

Z4 nonsplit_closed_form(const MultiplierSpec &spec, Elem a1, Elem a2) {
    const Field &f = spec.field();
    Elem N = eps_norm_of(spec);
    return spec.h(f.sqrt(f.mul(a1, a2))) + Z4::twice(sign_bit(f, a1, a2, N));
}

Z4 nonsplit_metap_closed_form(const MultiplierSpec &spec, Elem a1, Elem a2) {
    const Field &f = spec.field();
    Elem N = eps_norm_of(spec);
    Elem rn = f.sqrt(N);
    Z4 bracket = spec.h(f.mul(a1, rn)) + spec.h(f.mul(a2, rn)) + spec.h(f.sqrt(f.mul(a1, a2)));
    return -bracket + Z4::twice(sign_bit(f, a1, a2, N));
}

Report appendix_identity_check(const MultiplierSpec &spec) {
    if (spec.kind() != TorusKind::Nonsplit) {
        throw Error(ErrorKind::InvalidConfig, "the appendix identities concern nonsplit multipliers");
    }
    const Field &f = spec.field();
    const SympMap &A = spec.torus().generator;
    CheckResult direct{"appendix.mult_non_split"};
    CheckResult shifted{"appendix.mult_non_split_2"};
    for (Elem a1 = 0; a1 < f.size(); a1++) {
        for (Elem a2 = 0; a2 < f.size(); a2++) {
            Z4 lhs = spec.g({a1, 0}, {0, a2});
            Z4 rhs = nonsplit_closed_form(spec, a1, a2);
            direct.checked++;
            if (lhs != rhs) {
                direct.fail({{"alpha1", a1}, {"alpha2", a2}, {"definitional", lhs.value()}, {"closed", rhs.value()}});
            }
            Z4 lhs2 = metap_argument({a1, a2}, A, spec);
            Z4 rhs2 = nonsplit_metap_closed_form(spec, a1, a2);
            shifted.checked++;
            if (lhs2 != rhs2) {
                shifted.fail(
                    {{"alpha1", a1}, {"alpha2", a2}, {"definitional", lhs2.value()}, {"closed", rhs2.value()}});
            }
        }
    }
    Report r;
    r.add(direct);
    r.add(shifted);
    return r;
}

SignTableExhaustion exhaust_sign_tables_n1() {
    // V = GF(2)^2 has 4 points; bit (iu * 4 + iv) of a mask set means m(u, v) = -1.
    const Field &f = Field::get(1);
    SignTableExhaustion out;
    for (std::uint32_t mask = 0; mask < (1u << 16); mask++) {
        out.tables++;
        auto neg = [&](std::uint32_t iu, std::uint32_t iv) { return static_cast<int>((mask >> (iu * 4 + iv)) & 1u); };
        bool cocycle = true;
        for (std::uint32_t iu = 0; iu < 4 && cocycle; iu++) {
            for (std::uint32_t iv = 0; iv < 4 && cocycle; iv++) {
                for (std::uint32_t iw = 0; iw < 4 && cocycle; iw++) {
                    cocycle = (neg(iu ^ iv, iw) ^ neg(iu, iv)) == (neg(iu, iv ^ iw) ^ neg(iv, iw));
                }
            }
        }
        if (!cocycle) {
            continue;
        }
        out.cocycles++;
        bool weyl = true;
        for (std::uint32_t iu = 0; iu < 4 && weyl; iu++) {
            for (std::uint32_t iv = 0; iv < 4 && weyl; iv++) {
                Elem s = symplectic_form(f, vec_from_index(f, iu), vec_from_index(f, iv));
                if (s == 0 && neg(iu, iv)) {
                    weyl = false;
                }
                // conj(m(u, v)) m(v, u) for +-1 values is the xor of the two sign bits.
                if ((neg(iu, iv) ^ neg(iv, iu)) != f.trace(s)) {
                    weyl = false;
                }
            }
        }
        out.weyl += weyl ? 1 : 0;
    }
    return out;
}

std::vector<CyclicSubgroup> cyclic_subgroups(const Field &f) {
    std::map<std::vector<SympMap>, CyclicSubgroup> seen;
    for (const auto &A : enumerate_sl2(f)) {
        std::vector<SympMap> powers{SympMap::identity()};
        for (SympMap x = A; !x.is_identity(); x = compose(f, x, A)) {
            powers.push_back(x);
        }
        std::vector<SympMap> key = powers;
        std::sort(key.begin(), key.end());
        seen.try_emplace(key, CyclicSubgroup{A, powers});
    }
    std::vector<CyclicSubgroup> out;
    for (auto &[key, group] : seen) {
        out.push_back(std::move(group));
    }
    std::sort(out.begin(), out.end(), [](const CyclicSubgroup &x, const CyclicSubgroup &y) {
        if (x.elements.size() != y.elements.size()) {
            return x.elements.size() < y.elements.size();
        }
        return x.generator < y.generator;
    });
    return out;
}

}  // namespace stabmub
