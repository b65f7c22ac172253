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

#ifndef STABMUB_MULTIPLIER_H
#define STABMUB_MULTIPLIER_H

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stabmub/gf.h"
#include "stabmub/phase_space.h"
#include "stabmub/report.h"
#include "stabmub/sl2.h"

namespace stabmub {

/// Integer mod 4. A multiplier value i^g is stored as its exponent g.
class Z4 {
   public:
    constexpr Z4() = default;
    constexpr Z4(int v) : v_(static_cast<std::uint8_t>(((v % 4) + 4) % 4)) {
    }
    /// The embedding Z2 -> Z4, z -> 2z.
    static constexpr Z4 twice(int bit) {
        return Z4(2 * (bit & 1));
    }
    constexpr int value() const {
        return v_;
    }
    friend constexpr Z4 operator+(Z4 a, Z4 b) {
        return Z4(a.v_ + b.v_);
    }
    friend constexpr Z4 operator-(Z4 a, Z4 b) {
        return Z4(a.v_ - b.v_ + 4);
    }
    constexpr Z4 operator-() const {
        return Z4(4 - v_);
    }
    Z4 &operator+=(Z4 b) {
        return *this = *this + b;
    }
    friend constexpr bool operator==(Z4, Z4) = default;

   private:
    std::uint8_t v_ = 0;
};

/// Signs r_1..r_n, each +1 or -1.
struct SignSequence {
    std::vector<int> r;

    /// One character per sign, '+' or '-'. Throws Error(InvalidConfig) on bad characters or length.
    static SignSequence parse(std::string_view text, unsigned n);
    /// All 2^n sequences in lexicographic order of their strings ("+" before "-").
    static std::vector<SignSequence> all(unsigned n);
    static SignSequence plus(unsigned n) {
        return {std::vector<int>(n, 1)};
    }
    std::string str() const;
    friend bool operator==(const SignSequence &, const SignSequence &) = default;
};

/// Dense g-table over V x V in a fixed coordinate frame. Entry (u, v) sits at
/// vec_index(u) * |V| + vec_index(v).
struct MultiplierTable {
    const Field *field = nullptr;
    Frame frame = Frame::Standard;
    std::vector<Z4> g;

    std::uint32_t points() const {
        return field->size() * field->size();
    }
    Z4 at(std::uint32_t iu, std::uint32_t iv) const {
        return g[std::size_t{iu} * points() + iv];
    }
    Z4 at(PhaseVec u, PhaseVec v) const {
        return at(vec_index(*field, u), vec_index(*field, v));
    }
    friend bool operator==(const MultiplierTable &a, const MultiplierTable &b) {
        return same_field(*a.field, *b.field) && a.frame == b.frame && a.g == b.g;
    }
};

/// A T-invariant Z4-valued Weyl multiplier m = i^g built from h and the forms B+.
///
/// Split: standard coordinates, B+(u, v) = S(u, e1) S(v, e2), g0 = 2 Tr B+.
/// Nonsplit: {e1, e2} frame coordinates, B+(u, v) = S(u, e) S(v, conj e), g0 = 2 extTr B+ with
/// extTr(eps^2) = 0.
class MultiplierSpec {
   public:
    MultiplierSpec(const Field &field, TorusKind kind, SelfDualBasis basis, SignSequence signs);
    /// Default choices: Field::get(n) and SelfDualBasis::find.
    static MultiplierSpec make(unsigned n, TorusKind kind, SignSequence signs);

    const Field &field() const {
        return *field_;
    }
    TorusKind kind() const {
        return kind_;
    }
    Frame frame() const {
        return torus_.frame;
    }
    const SelfDualBasis &basis() const {
        return basis_;
    }
    const SignSequence &signs() const {
        return signs_;
    }
    const TorusSpec &torus() const {
        return torus_;
    }
    /// Present for nonsplit specs.
    const std::optional<NonsplitFrame> &nonsplit() const {
        return frame_;
    }
    /// Maps the spec's coordinates to standard coordinates (identity for split).
    SympMap change_of_basis() const;

    /// h(sum z_i w_i) = sum r_i z_i^2 mod 4.
    Z4 h(Elem alpha) const {
        return h_table_[alpha];
    }
    /// B+(u, u), which lies in F for both kinds.
    Elem bplus_diag(PhaseVec u) const;
    /// B+(u, v) in the extension. Split values are embedded.
    ExtElement bplus(PhaseVec u, PhaseVec v) const;
    /// 2 Tr B+(u, v) (split) or 2 extTr B+(u, v) (nonsplit), evaluated through the extension.
    Z4 g0(PhaseVec u, PhaseVec v) const;
    Z4 g(PhaseVec u, PhaseVec v) const;

    MultiplierTable table() const;

   private:
    const Field *field_;
    TorusKind kind_;
    SelfDualBasis basis_;
    SignSequence signs_;
    TorusSpec torus_;
    std::optional<NonsplitFrame> frame_;
    std::vector<Z4> h_table_;
    ExtElement eps_{ExtField::of(*field_).embed(0)};
    ExtElement eps_bar_{ExtField::of(*field_).embed(0)};
    ExtElement eps_sq_{ExtField::of(*field_).embed(0)};
};

/// h evaluated directly from the basis coordinates z_i = Tr(alpha w_i).
Z4 h_eval(Elem alpha, const SelfDualBasis &basis, const SignSequence &signs);

/// (M.1), (M.2) and the cocycle identity. Triples are exhaustive when cocycle_samples is empty,
/// otherwise drawn from a seeded mt19937_64.
struct WeylCheckOptions {
    std::optional<std::uint64_t> cocycle_samples;
    std::uint64_t seed = 0;
    unsigned jobs = 1;
};
Report check_weyl_multiplier(const MultiplierTable &m, const WeylCheckOptions &opts = {});

/// m(Au, Av) = m(u, v) over group x V x V. Throws Error(FrameMismatch) when the group is written
/// in a different frame from the table.
CheckResult check_invariance(const MultiplierTable &m, const std::vector<SympMap> &group, Frame group_frame,
                             unsigned jobs = 1);

/// Product over the group of m0(Au, Av). Throws Error(NotAGroup) unless the list is closed under
/// composition and inverses and contains I.
MultiplierTable average_multiplier(const MultiplierTable &m0, const std::vector<SympMap> &group);

/// m in standard coordinates: m_std(x, y) = m(P^{-1} x, P^{-1} y).
MultiplierTable to_standard(const MultiplierTable &m, const SympMap &change_of_basis);

/// g(u, (A + I)^{-1} u). Throws Error(SingularShift) when A + I is singular.
Z4 metap_argument(PhaseVec u, const SympMap &A, const MultiplierSpec &spec);

/// i-exponents of the displayed closed forms for m(a1 e1, a2 e2) and m(u, (A+I)^{-1} u).
Z4 split_closed_form(const MultiplierSpec &spec, Elem a1, Elem a2);
Z4 nonsplit_closed_form(const MultiplierSpec &spec, Elem a1, Elem a2);
Z4 nonsplit_metap_closed_form(const MultiplierSpec &spec, Elem a1, Elem a2);

/// For a nonsplit spec, compares the definitional g with both closed forms over F x F.
Report appendix_identity_check(const MultiplierSpec &spec);

/// Every +-1-valued table on V x V at n = 1 satisfying the cocycle identity, and whether any of
/// them is a Weyl multiplier.
struct SignTableExhaustion {
    std::uint64_t tables = 0;
    std::uint64_t cocycles = 0;
    std::uint64_t weyl = 0;
};
SignTableExhaustion exhaust_sign_tables_n1();

/// Cyclic subgroups of SL(2, F), each as the element list of its generator with the least
/// (a, b, c, d), ordered by (order, generator).
struct CyclicSubgroup {
    SympMap generator;
    std::vector<SympMap> elements;
};
std::vector<CyclicSubgroup> cyclic_subgroups(const Field &f);

}  // namespace stabmub

#endif
