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

#ifndef STABMUB_QUADRATURE_H
#define STABMUB_QUADRATURE_H

#include <cstdint>
#include <string>
#include <vector>

#include "stabmub/multiplier.h"
#include "stabmub/operator_matrix.h"
#include "stabmub/phase_space.h"
#include "stabmub/report.h"

namespace stabmub {

/// Operator phi_c -> i^phase[c] phi_target[c], with target a permutation.
struct Monomial {
    std::vector<std::uint32_t> target;
    std::vector<Z4> phase;

    static Monomial identity(std::size_t dim);
    std::size_t dim() const {
        return target.size();
    }
    OperatorMatrix to_matrix() const;
    Monomial adjoint() const;
    /// M X M^*, in O(dim^2).
    OperatorMatrix conjugate(const OperatorMatrix &x) const;
    ExactVector apply(const ExactVector &x) const;
    friend Monomial operator*(const Monomial &m, const Monomial &n);
    friend bool operator==(const Monomial &, const Monomial &) = default;
};

/// The Weyl system centered at the origin, in the spec's coordinates:
///     W(a1 e1 + a2 e2) phi_g = m(a1 e1, a2 e2) (-1)^Tr(a2 g) phi_(g + a1).
class WeylSystem {
   public:
    explicit WeylSystem(const MultiplierSpec &spec);

    const Field &field() const {
        return *field_;
    }
    std::size_t dim() const {
        return field_->size();
    }
    /// g(a1 e1, a2 e2).
    Z4 mixed(Elem a1, Elem a2) const {
        return mixed_[a1 | (std::size_t{a2} << field_->degree())];
    }
    Monomial monomial(PhaseVec v) const;
    OperatorMatrix matrix(PhaseVec v) const {
        return monomial(v).to_matrix();
    }

   private:
    const Field *field_;
    std::vector<Z4> mixed_;
};

/// Q(v + F u) from the explicit matrix-element formula.
OperatorMatrix quadrature_projection(const WeylSystem &w, const Line &l);
/// Q(v + F u) = (1/|F|) sum_lambda (-1)^Tr S(v, lambda u) W(lambda u), summed operator by operator.
OperatorMatrix quadrature_projection_from_weyl(const WeylSystem &w, const Line &l);

/// Unnormalized eigenvector spanning the range of Q(l): W(off) psi_D with psi_D[mu] = m(mu e1, mu b e2)
/// for D = F(1, b), and phi_0 for D = F e2. Every entry on the support is a fourth root of unity.
ExactVector mub_vector(const WeylSystem &w, const Line &l);
/// Multiplies x by the conjugate of its first nonzero entry e, which becomes |e|^2 (1 for mub_vector output).
ExactVector normalize_phase(const ExactVector &x);

/// Projections for every line, indexed by line_index.
struct QuadratureSystem {
    MultiplierSpec spec;
    WeylSystem weyl;
    std::vector<OperatorMatrix> projections;

    const Field &field() const {
        return spec.field();
    }
    const OperatorMatrix &at(const Line &l) const {
        return projections[line_index(field(), l)];
    }
};

QuadratureSystem build_quadrature(const MultiplierSpec &spec, unsigned jobs = 1);

/// (1/|F|) sum_u m(u, (A + I)^{-1} u) W(u). Throws Error(SingularShift) if A + I is singular.
OperatorMatrix metap_unitary(const SympMap &A, const MultiplierSpec &spec, const WeylSystem &w);
/// Split tori: the permutation phi_g -> phi_(g a) for A = diag(a, 1/a). Nonsplit tori: metap_unitary.
/// The identity maps to the identity matrix. Throws Error(NotInTorus) for A outside the spec's torus.
OperatorMatrix covariance_unitary(const SympMap &A, const QuadratureSystem &q);

/// Definition items (i) rank-1 projection, (ii) resolution of the identity per direction,
/// (iii) tr(P1 P2) over all ordered pairs of distinct lines: 1/|F| across directions and 0 within one.
Report verify_definition(const QuadratureSystem &q, unsigned jobs = 1);

/// Elements (A, v) of T x| V ordered by (torus power, vec_index(v)).
std::vector<AffineMap> semidirect_elements(const TorusSpec &t, const Field &f);
/// Pure translations (I, v).
std::vector<AffineMap> translations(const Field &f);

/// U(A) W(v) Q(l) (U(A) W(v))^* = Q((A, v) . l) for every listed element and every line.
CheckResult verify_covariance(const QuadratureSystem &q, const std::vector<AffineMap> &group, unsigned jobs = 1);

/// Canonical serialization of (n, modulus, multiplier table in standard coordinates). The
/// symplectic form is S((a, b), (c, d)) = ad + bc for every system, so it is not stored.
std::string equivalence_key(const MultiplierSpec &spec);
inline std::string equivalence_key(const QuadratureSystem &q) {
    return equivalence_key(q.spec);
}

}  // namespace stabmub

#endif
