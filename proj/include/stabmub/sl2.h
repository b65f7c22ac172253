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

#ifndef STABMUB_SL2_H
#define STABMUB_SL2_H

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "stabmub/gf.h"
#include "stabmub/phase_space.h"

namespace stabmub {

/// Element classes of SL(2, F) in characteristic 2. The identity gets its own tag.
enum class ElementTag { Identity, Split, Nonsplit, Unipotent };
std::string_view tag_name(ElementTag tag);

struct ElementClass {
    ElementTag tag;
    /// Roots of X^2 + tr(A) X + 1, embedded in the quadratic extension. Absent for the identity.
    std::optional<std::pair<ExtElement, ExtElement>> eigenvalues;
};

/// Requires det A = 1 (throws Error(InvalidConfig) otherwise). Roots are found by exhaustive scan,
/// first over F and then over the extension.
ElementClass classify_element(const Field &f, const SympMap &A);

/// [[t, 1], [1, 0]] for t = xi + 1/xi: a representative of every non-identity class with trace t.
SympMap companion(const Field &f, Elem trace);

/// U in SL(2, F) with U * companion(tr A) * U^{-1} = A, chosen by the first applicable rule:
/// b != 0, c != 0, or A diagonal. Throws Error(IdentityInput) for A = I.
SympMap conjugator(const Field &f, const SympMap &A);

enum class TorusKind { Split, Nonsplit };
std::string_view kind_name(TorusKind kind);
/// Accepts "split" or "nonsplit"; throws Error(InvalidConfig) otherwise.
TorusKind parse_kind(std::string_view text);

/// Which coordinates a matrix or multiplier is written in.
enum class Frame { Standard, NonsplitEigen };

/// Eigen-data of the maximal nonsplit torus generated by the companion matrix of xi.
///
/// The eigenvector e of companion(xi + 1/xi) is (xi, 1) scaled by (xi + 1/xi)^{-1/2}, so that
/// S(e, conj(e)) = 1. With eps = (xi + 1)^{-1/2}, the real frame is
///     e1 = conj(eps) e + eps conj(e),    e2 = eps e + conj(eps) conj(e),
/// and the torus generator is stored in {e1, e2} coordinates.
struct NonsplitFrame {
    ExtElement xi;
    ExtElement epsilon;
    ExtElement eps_sq;
    /// eps * conj(eps), an element of F.
    Elem eps_norm = 0;
    /// e in standard coordinates.
    std::array<ExtElement, 2> e;
    /// e in {e1, e2} coordinates; equals (conj(eps), eps).
    std::array<ExtElement, 2> e_in_frame;
    PhaseVec e1;
    PhaseVec e2;
    /// Columns e1, e2: maps frame coordinates to standard coordinates. Determinant 1.
    SympMap change_of_basis;
    /// The companion matrix (standard coordinates).
    SympMap companion_generator;
    /// The same map in frame coordinates.
    SympMap generator;
};

/// Deterministic given the choice xi = ExtField::norm_one_generator().
NonsplitFrame nonsplit_frame(const Field &f);

struct TorusSpec {
    TorusKind kind;
    Frame frame;
    SympMap generator;
    /// Eigenvalue of the generator; lies in F (embedded) for split tori.
    ExtElement xi;
    std::uint64_t order;

    /// generator^k for k = 0 .. order-1.
    std::vector<SympMap> elements(const Field &f) const;
    bool contains(const Field &f, const SympMap &A) const;
};

/// Maximal torus. Split: diag(xi, 1/xi) in standard coordinates with xi generating F*, order |F|-1.
/// Nonsplit: the NonsplitFrame generator in frame coordinates, order |F|+1.
TorusSpec torus(TorusKind kind, const Field &f);

}  // namespace stabmub

#endif
