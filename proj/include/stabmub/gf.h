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

#ifndef STABMUB_GF_H
#define STABMUB_GF_H

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace stabmub {

/// Bit pattern of a GF(2^n) element in the polynomial basis. Bit k is the coefficient of X^k.
using Elem = std::uint32_t;

inline constexpr unsigned kMaxDegree = 16;

class FieldElement;

/// GF(2^n) for 1 <= n <= 16, represented as Z2[X] / (modulus).
///
/// Hot loops work on raw `Elem` values through the member functions; `FieldElement` is the
/// checked value type for everything else. A `Field` is immutable after construction and is
/// referenced (not copied) by the elements and structures built on it.
class Field {
   public:
    /// Throws Error(NotIrreducible) if `modulus` is not an irreducible polynomial of degree n.
    Field(unsigned n, std::uint32_t modulus);
    Field(const Field &) = delete;
    Field &operator=(const Field &) = delete;

    /// Process-wide instance using `default_modulus(n)`.
    static const Field &get(unsigned n);
    /// Numerically least irreducible polynomial of degree n (X for n = 1, X^2+X+1, X^3+X+1, ...).
    static std::uint32_t default_modulus(unsigned n);
    /// Exhaustive trial division by every polynomial of degree <= deg/2.
    static bool is_irreducible(std::uint32_t poly);
    /// Shift-and-xor product reduced modulo `modulus`. Independent of the lookup tables.
    static Elem clmul_reduce(Elem a, Elem b, unsigned n, std::uint32_t modulus);

    unsigned degree() const {
        return n_;
    }
    std::uint32_t modulus() const {
        return modulus_;
    }
    std::uint32_t size() const {
        return size_;
    }
    bool contains(Elem a) const {
        return a < size_;
    }

    Elem mul(Elem a, Elem b) const {
        if (a == 0 || b == 0) {
            return 0;
        }
        return exp_[log_[a] + log_[b]];
    }
    Elem square(Elem a) const {
        return mul(a, a);
    }
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const {
        return mul(a, inv(b));
    }
    Elem pow(Elem a, std::uint64_t e) const;
    /// a^(2^(n-1)), the inverse of the Frobenius map.
    Elem sqrt(Elem a) const {
        return sqrt_[a];
    }
    /// Absolute trace to Z2.
    int trace(Elem a) const {
        return __builtin_parity(a & trace_mask_);
    }
    /// Sum of the Frobenius orbit a + a^2 + ... + a^(2^(n-1)), computed directly.
    Elem frobenius_trace_sum(Elem a) const;

    /// Least element (in bit-pattern order) of multiplicative order 2^n - 1.
    Elem multiplicative_generator() const {
        return generator_;
    }
    std::uint64_t multiplicative_order(Elem a) const;

    FieldElement element(Elem bits) const;
    FieldElement zero() const;
    FieldElement one() const;

   private:
    unsigned n_;
    std::uint32_t modulus_;
    std::uint32_t size_;
    Elem generator_ = 1;
    Elem trace_mask_ = 0;
    std::vector<Elem> exp_;
    std::vector<std::uint32_t> log_;
    std::vector<Elem> sqrt_;
};

/// Element of a `Field`. Binary operations throw Error(MixedFields) on operands from different fields.
class FieldElement {
   public:
    FieldElement(const Field &field, Elem bits);

    const Field &field() const {
        return *field_;
    }
    Elem bits() const {
        return bits_;
    }
    bool is_zero() const {
        return bits_ == 0;
    }

    FieldElement inv() const;
    FieldElement pow(std::uint64_t e) const;
    FieldElement square() const;
    FieldElement sqrt() const;
    int trace() const;

    FieldElement &operator+=(const FieldElement &other);
    FieldElement &operator*=(const FieldElement &other);
    friend FieldElement operator+(FieldElement a, const FieldElement &b) {
        return a += b;
    }
    // Characteristic 2: subtraction is addition.
    friend FieldElement operator-(FieldElement a, const FieldElement &b) {
        return a += b;
    }
    friend FieldElement operator*(FieldElement a, const FieldElement &b) {
        return a *= b;
    }
    friend FieldElement operator/(FieldElement a, const FieldElement &b) {
        return a *= b.inv();
    }
    friend bool operator==(const FieldElement &a, const FieldElement &b);

    std::string str() const;

   private:
    const Field *field_;
    Elem bits_;
};

bool same_field(const Field &a, const Field &b);

class ExtElement;

/// Quadratic extension GF(2^(2n)) = F[Z] / (Z^2 + tZ + u), elements a + b*zeta with a, b in F.
class ExtField {
   public:
    /// Scans t = 1, 2, ... (outer) and u = 0, 1, ... (inner) for the first irreducible X^2 + tX + u.
    explicit ExtField(const Field &base);
    ExtField(const ExtField &) = delete;
    ExtField &operator=(const ExtField &) = delete;

    /// Process-wide extension over a field equal to `base` (same degree and modulus). Its base
    /// is a cached field with static lifetime, not `base` itself.
    static const ExtField &of(const Field &base);

    const Field &base() const {
        return *base_;
    }
    Elem t() const {
        return t_;
    }
    Elem u() const {
        return u_;
    }
    std::uint64_t size() const {
        return std::uint64_t{base_->size()} * base_->size();
    }

    ExtElement element(Elem a, Elem b) const;
    ExtElement embed(Elem a) const;
    /// Element with index a + b * 2^n; this is the enumeration order of the extension.
    ExtElement from_index(std::uint64_t index) const;
    ExtElement zeta() const;

    /// Least element (by index) of order 2^(2n) - 1.
    ExtElement multiplicative_generator() const;
    /// g^(2^n - 1) for g = multiplicative_generator(): generates the norm-one group M of order 2^n + 1.
    ExtElement norm_one_generator() const;
    std::uint64_t multiplicative_order(const ExtElement &x) const;

   private:
    const Field *base_;
    Elem t_ = 0;
    Elem u_ = 0;
};

class ExtElement {
   public:
    ExtElement(const ExtField &ext, Elem a, Elem b);

    const ExtField &ext() const {
        return *ext_;
    }
    /// Coordinate along 1.
    Elem a() const {
        return a_;
    }
    /// Coordinate along zeta.
    Elem b() const {
        return b_;
    }
    std::uint64_t index() const {
        return std::uint64_t{a_} | (std::uint64_t{b_} << ext_->base().degree());
    }
    bool is_zero() const {
        return a_ == 0 && b_ == 0;
    }
    bool in_base() const {
        return b_ == 0;
    }
    /// The base-field value; requires in_base().
    FieldElement base_value() const;

    /// x^(2^n), computed from the conjugate root zeta + t.
    ExtElement conj() const;
    /// x * conj(x), always in the base field.
    FieldElement norm() const;
    ExtElement inv() const;
    ExtElement pow(std::uint64_t e) const;
    /// x^(2^(2n-1)).
    ExtElement sqrt() const;

    ExtElement &operator+=(const ExtElement &other);
    ExtElement &operator*=(const ExtElement &other);
    friend ExtElement operator+(ExtElement a, const ExtElement &b) {
        return a += b;
    }
    friend ExtElement operator-(ExtElement a, const ExtElement &b) {
        return a += b;
    }
    friend ExtElement operator*(ExtElement a, const ExtElement &b) {
        return a *= b;
    }
    friend ExtElement operator/(ExtElement a, const ExtElement &b) {
        return a *= b.inv();
    }
    friend bool operator==(const ExtElement &x, const ExtElement &y);

    std::string str() const;

   private:
    const ExtField *ext_;
    Elem a_;
    Elem b_;
};

/// Z2-linear extension of the trace to the quadratic extension: writing x = a + b * eps_sq with
/// a, b in F, returns Tr(a). Throws Error(DegenerateFrame) when eps_sq lies in F.
int ext_trace(const ExtElement &x, const ExtElement &eps_sq);

/// Z2-basis {w_1..w_n} of F with Tr(w_i w_j) = delta_ij.
class SelfDualBasis {
   public:
    /// Throws Error(InvalidConfig) unless `omegas` passes the trace-orthonormality check.
    SelfDualBasis(const Field &field, std::vector<Elem> omegas);

    /// Backtracking search over strictly increasing element tuples; the first hit is returned.
    /// Throws Error(NotFound) if the search is exhausted.
    static SelfDualBasis find(const Field &field);
    /// Every self-dual basis, as strictly increasing tuples, in lexicographic order.
    static std::vector<SelfDualBasis> enumerate(const Field &field);

    const Field &field() const {
        return *field_;
    }
    std::span<const Elem> omegas() const {
        return omegas_;
    }
    /// z_i = Tr(alpha * w_i), the coordinates of alpha in this basis.
    std::vector<int> coordinates(Elem alpha) const;
    Elem combine(std::span<const int> coords) const;

    friend bool operator==(const SelfDualBasis &a, const SelfDualBasis &b) {
        return same_field(*a.field_, *b.field_) && a.omegas_ == b.omegas_;
    }

   private:
    const Field *field_;
    std::vector<Elem> omegas_;
};

/// Distinct prime factors of m, ascending.
std::vector<std::uint64_t> prime_factors(std::uint64_t m);

}  // namespace stabmub

#endif
