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

#include "stabmub/gf.h"

#include <array>
#include <bit>
#include <map>
#include <memory>
#include <mutex>

#include "stabmub/error.h"

namespace stabmub {

namespace {

unsigned poly_degree(std::uint64_t p) {
    return 63u - static_cast<unsigned>(std::countl_zero(p));
}

std::uint64_t poly_mod(std::uint64_t a, std::uint64_t m) {
    unsigned dm = poly_degree(m);
    while (a != 0 && poly_degree(a) >= dm) {
        a ^= m << (poly_degree(a) - dm);
    }
    return a;
}

std::string bits_str(Elem e) {
    return std::to_string(e);
}

}  // namespace

std::vector<std::uint64_t> prime_factors(std::uint64_t m) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = 2; p * p <= m; p++) {
        if (m % p == 0) {
            out.push_back(p);
            while (m % p == 0) {
                m /= p;
            }
        }
    }
    if (m > 1) {
        out.push_back(m);
    }
    return out;
}

bool Field::is_irreducible(std::uint32_t poly) {
    if (poly < 2) {
        return false;
    }
    unsigned deg = poly_degree(poly);
    for (unsigned d = 1; 2 * d <= deg; d++) {
        for (std::uint64_t q = std::uint64_t{1} << d; q < (std::uint64_t{2} << d); q++) {
            if (poly_mod(poly, q) == 0) {
                return false;
            }
        }
    }
    return true;
}

std::uint32_t Field::default_modulus(unsigned n) {
    if (n < 1 || n > kMaxDegree) {
        throw Error(ErrorKind::DegreeTooLarge, "field degree must be in [1, 16], got " + std::to_string(n));
    }
    for (std::uint32_t p = 1u << n; p < (2u << n); p++) {
        if (is_irreducible(p)) {
            return p;
        }
    }
    throw Error(ErrorKind::NotFound, "no irreducible polynomial of degree " + std::to_string(n));
}

Elem Field::clmul_reduce(Elem a, Elem b, unsigned n, std::uint32_t modulus) {
    std::uint64_t acc = 0;
    for (unsigned k = 0; k < n; k++) {
        if ((b >> k) & 1u) {
            acc ^= std::uint64_t{a} << k;
        }
    }
    return static_cast<Elem>(poly_mod(acc, modulus));
}

Field::Field(unsigned n, std::uint32_t modulus) : n_(n), modulus_(modulus), size_(0) {
    if (n < 1 || n > kMaxDegree) {
        throw Error(ErrorKind::DegreeTooLarge, "field degree must be in [1, 16], got " + std::to_string(n));
    }
    if (modulus < (1u << n) || modulus >= (2u << n) || !is_irreducible(modulus)) {
        throw Error(ErrorKind::NotIrreducible,
                    "modulus " + std::to_string(modulus) + " is not an irreducible polynomial of degree " +
                        std::to_string(n));
    }
    size_ = 1u << n;
    const std::uint64_t group_order = size_ - 1;
    const auto factors = prime_factors(group_order);

    auto slow_pow = [&](Elem a, std::uint64_t e) {
        Elem r = 1;
        while (e != 0) {
            if (e & 1) {
                r = clmul_reduce(r, a, n_, modulus_);
            }
            a = clmul_reduce(a, a, n_, modulus_);
            e >>= 1;
        }
        return r;
    };
    for (Elem g = 1; g < size_; g++) {
        bool primitive = true;
        for (auto p : factors) {
            if (slow_pow(g, group_order / p) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) {
            generator_ = g;
            break;
        }
    }

    exp_.resize(2 * group_order);
    log_.assign(size_, 0);
    Elem x = 1;
    for (std::uint64_t k = 0; k < group_order; k++) {
        exp_[k] = x;
        exp_[k + group_order] = x;
        log_[x] = static_cast<std::uint32_t>(k);
        x = clmul_reduce(x, generator_, n_, modulus_);
    }

    for (unsigned k = 0; k < n_; k++) {
        if (frobenius_trace_sum(Elem{1} << k) == 1) {
            trace_mask_ |= Elem{1} << k;
        }
    }

    sqrt_.resize(size_);
    for (Elem a = 0; a < size_; a++) {
        Elem r = a;
        for (unsigned k = 1; k < n_; k++) {
            r = mul(r, r);
        }
        sqrt_[a] = r;
    }
}

const Field &Field::get(unsigned n) {
    static std::array<std::unique_ptr<Field>, kMaxDegree + 1> cache;
    static std::mutex mu;
    if (n < 1 || n > kMaxDegree) {
        throw Error(ErrorKind::DegreeTooLarge, "field degree must be in [1, 16], got " + std::to_string(n));
    }
    std::lock_guard<std::mutex> lock(mu);
    if (!cache[n]) {
        cache[n] = std::make_unique<Field>(n, default_modulus(n));
    }
    return *cache[n];
}

Elem Field::frobenius_trace_sum(Elem a) const {
    Elem sum = 0;
    Elem x = a;
    for (unsigned k = 0; k < n_; k++) {
        sum ^= x;
        x = clmul_reduce(x, x, n_, modulus_);
    }
    return sum;
}

Elem Field::inv(Elem a) const {
    if (a == 0) {
        throw Error(ErrorKind::InverseOfZero, "inverse of zero in GF(2^" + std::to_string(n_) + ")");
    }
    const std::uint32_t order = size_ - 1;
    return exp_[(order - log_[a]) % order];
}

Elem Field::pow(Elem a, std::uint64_t e) const {
    if (e == 0) {
        return 1;
    }
    if (a == 0) {
        return 0;
    }
    const std::uint64_t order = size_ - 1;
    return exp_[static_cast<std::size_t>((static_cast<unsigned __int128>(log_[a]) * e) % order)];
}

std::uint64_t Field::multiplicative_order(Elem a) const {
    if (a == 0) {
        throw Error(ErrorKind::InverseOfZero, "zero has no multiplicative order");
    }
    std::uint64_t order = size_ - 1;
    for (auto p : prime_factors(size_ - 1)) {
        while (order % p == 0 && pow(a, order / p) == 1) {
            order /= p;
        }
    }
    return order;
}

FieldElement Field::element(Elem bits) const {
    return FieldElement(*this, bits);
}

FieldElement Field::zero() const {
    return FieldElement(*this, 0);
}

FieldElement Field::one() const {
    return FieldElement(*this, 1);
}

bool same_field(const Field &a, const Field &b) {
    return &a == &b || (a.degree() == b.degree() && a.modulus() == b.modulus());
}

FieldElement::FieldElement(const Field &field, Elem bits) : field_(&field), bits_(bits) {
    if (!field.contains(bits)) {
        throw Error(ErrorKind::InvalidConfig,
                    "bit pattern " + std::to_string(bits) + " outside GF(2^" + std::to_string(field.degree()) + ")");
    }
}

namespace {

void require_same(const Field &a, const Field &b) {
    if (!same_field(a, b)) {
        throw Error(ErrorKind::MixedFields, "operands belong to GF(2^" + std::to_string(a.degree()) + ") and GF(2^" +
                                                std::to_string(b.degree()) + ")");
    }
}

}  // namespace

FieldElement FieldElement::inv() const {
    return FieldElement(*field_, field_->inv(bits_));
}

FieldElement FieldElement::pow(std::uint64_t e) const {
    return FieldElement(*field_, field_->pow(bits_, e));
}

FieldElement FieldElement::square() const {
    return FieldElement(*field_, field_->square(bits_));
}

FieldElement FieldElement::sqrt() const {
    return FieldElement(*field_, field_->sqrt(bits_));
}

int FieldElement::trace() const {
    return field_->trace(bits_);
}

FieldElement &FieldElement::operator+=(const FieldElement &other) {
    require_same(*field_, *other.field_);
    bits_ ^= other.bits_;
    return *this;
}

FieldElement &FieldElement::operator*=(const FieldElement &other) {
    require_same(*field_, *other.field_);
    bits_ = field_->mul(bits_, other.bits_);
    return *this;
}

bool operator==(const FieldElement &a, const FieldElement &b) {
    return same_field(*a.field_, *b.field_) && a.bits_ == b.bits_;
}

std::string FieldElement::str() const {
    return bits_str(bits_);
}

ExtField::ExtField(const Field &base) : base_(&base) {
    const Elem q = base.size();
    for (Elem t = 0; t < q; t++) {
        for (Elem u = 0; u < q; u++) {
            bool has_root = false;
            for (Elem x = 0; x < q && !has_root; x++) {
                has_root = (base.mul(x, x) ^ base.mul(t, x) ^ u) == 0;
            }
            if (!has_root) {
                t_ = t;
                u_ = u;
                return;
            }
        }
    }
    throw Error(ErrorKind::NotFound, "no irreducible quadratic over GF(2^" + std::to_string(base.degree()) + ")");
}

const ExtField &ExtField::of(const Field &base) {
    struct Entry {
        std::unique_ptr<Field> owned;
        std::unique_ptr<ExtField> ext;
    };
    static std::map<std::pair<unsigned, std::uint32_t>, Entry> cache;
    static std::mutex mu;
    const Field &canonical = Field::get(base.degree());
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(base.degree(), base.modulus());
    auto it = cache.find(key);
    if (it == cache.end()) {
        Entry entry;
        const Field *field = &canonical;
        if (!same_field(canonical, base)) {
            entry.owned = std::make_unique<Field>(base.degree(), base.modulus());
            field = entry.owned.get();
        }
        entry.ext = std::make_unique<ExtField>(*field);
        it = cache.emplace(key, std::move(entry)).first;
    }
    return *it->second.ext;
}

ExtElement ExtField::element(Elem a, Elem b) const {
    return ExtElement(*this, a, b);
}

ExtElement ExtField::embed(Elem a) const {
    return ExtElement(*this, a, 0);
}

ExtElement ExtField::from_index(std::uint64_t index) const {
    const unsigned n = base_->degree();
    return ExtElement(*this, static_cast<Elem>(index & (base_->size() - 1)), static_cast<Elem>(index >> n));
}

ExtElement ExtField::zeta() const {
    return ExtElement(*this, 0, 1);
}

std::uint64_t ExtField::multiplicative_order(const ExtElement &x) const {
    if (x.is_zero()) {
        throw Error(ErrorKind::InverseOfZero, "zero has no multiplicative order");
    }
    const std::uint64_t group_order = size() - 1;
    std::uint64_t order = group_order;
    for (auto p : prime_factors(group_order)) {
        while (order % p == 0 && x.pow(order / p) == embed(1)) {
            order /= p;
        }
    }
    return order;
}

ExtElement ExtField::multiplicative_generator() const {
    const std::uint64_t group_order = size() - 1;
    const auto factors = prime_factors(group_order);
    for (std::uint64_t idx = 1; idx < size(); idx++) {
        ExtElement g = from_index(idx);
        bool primitive = true;
        for (auto p : factors) {
            if (g.pow(group_order / p) == embed(1)) {
                primitive = false;
                break;
            }
        }
        if (primitive) {
            return g;
        }
    }
    throw Error(ErrorKind::NotFound, "extension has no multiplicative generator");
}

ExtElement ExtField::norm_one_generator() const {
    return multiplicative_generator().pow(base_->size() - 1);
}

ExtElement::ExtElement(const ExtField &ext, Elem a, Elem b) : ext_(&ext), a_(a), b_(b) {
    if (!ext.base().contains(a) || !ext.base().contains(b)) {
        throw Error(ErrorKind::InvalidConfig, "extension coordinates outside the base field");
    }
}

FieldElement ExtElement::base_value() const {
    if (b_ != 0) {
        throw Error(ErrorKind::MixedFields, "extension element " + str() + " is not in the base field");
    }
    return FieldElement(ext_->base(), a_);
}

ExtElement ExtElement::conj() const {
    const Field &f = ext_->base();
    return ExtElement(*ext_, a_ ^ f.mul(b_, ext_->t()), b_);
}

FieldElement ExtElement::norm() const {
    return (*this * conj()).base_value();
}

ExtElement ExtElement::inv() const {
    if (is_zero()) {
        throw Error(ErrorKind::InverseOfZero, "inverse of zero in the quadratic extension");
    }
    const Field &f = ext_->base();
    ExtElement c = conj();
    Elem ninv = f.inv(norm().bits());
    return ExtElement(*ext_, f.mul(c.a_, ninv), f.mul(c.b_, ninv));
}

ExtElement ExtElement::pow(std::uint64_t e) const {
    ExtElement result = ext_->embed(1);
    ExtElement base = *this;
    while (e != 0) {
        if (e & 1) {
            result *= base;
        }
        base *= base;
        e >>= 1;
    }
    return result;
}

ExtElement ExtElement::sqrt() const {
    ExtElement r = *this;
    const unsigned steps = 2 * ext_->base().degree() - 1;
    for (unsigned k = 0; k < steps; k++) {
        r *= r;
    }
    return r;
}

ExtElement &ExtElement::operator+=(const ExtElement &other) {
    if (ext_ != &other.ext()) {
        require_same(ext_->base(), other.ext().base());
    }
    a_ ^= other.a_;
    b_ ^= other.b_;
    return *this;
}

ExtElement &ExtElement::operator*=(const ExtElement &other) {
    if (ext_ != &other.ext()) {
        require_same(ext_->base(), other.ext().base());
    }
    const Field &f = ext_->base();
    Elem bd = f.mul(b_, other.b_);
    Elem na = f.mul(a_, other.a_) ^ f.mul(bd, ext_->u());
    Elem nb = f.mul(a_, other.b_) ^ f.mul(b_, other.a_) ^ f.mul(bd, ext_->t());
    a_ = na;
    b_ = nb;
    return *this;
}

bool operator==(const ExtElement &x, const ExtElement &y) {
    return same_field(x.ext().base(), y.ext().base()) && x.a_ == y.a_ && x.b_ == y.b_;
}

std::string ExtElement::str() const {
    return "(" + bits_str(a_) + "," + bits_str(b_) + ")";
}

int ext_trace(const ExtElement &x, const ExtElement &eps_sq) {
    const Field &f = x.ext().base();
    if (eps_sq.b() == 0) {
        throw Error(ErrorKind::DegenerateFrame, "eps^2 lies in the base field; the {1, eps^2} split is undefined");
    }
    // x = a + b * eps_sq, solved coordinate-wise along zeta.
    Elem b = f.div(x.b(), eps_sq.b());
    Elem a = x.a() ^ f.mul(b, eps_sq.a());
    return f.trace(a);
}

SelfDualBasis::SelfDualBasis(const Field &field, std::vector<Elem> omegas) : field_(&field), omegas_(std::move(omegas)) {
    const unsigned n = field.degree();
    if (omegas_.size() != n) {
        throw Error(ErrorKind::InvalidConfig, "self-dual basis needs exactly n elements");
    }
    for (std::size_t i = 0; i < n; i++) {
        if (!field.contains(omegas_[i])) {
            throw Error(ErrorKind::InvalidConfig, "basis element outside the field");
        }
        for (std::size_t j = 0; j < n; j++) {
            int want = i == j ? 1 : 0;
            if (field.trace(field.mul(omegas_[i], omegas_[j])) != want) {
                throw Error(ErrorKind::InvalidConfig, "Tr(w_i w_j) != delta_ij at i=" + std::to_string(i) +
                                                          ", j=" + std::to_string(j));
            }
        }
    }
    // Z2 rank check by elimination on the bit patterns.
    std::vector<Elem> rows(omegas_);
    unsigned rank = 0;
    for (unsigned bit = 0; bit < n; bit++) {
        for (std::size_t r = rank; r < rows.size(); r++) {
            if ((rows[r] >> bit) & 1u) {
                std::swap(rows[r], rows[rank]);
                for (std::size_t s = 0; s < rows.size(); s++) {
                    if (s != rank && ((rows[s] >> bit) & 1u)) {
                        rows[s] ^= rows[rank];
                    }
                }
                rank++;
                break;
            }
        }
    }
    if (rank != n) {
        throw Error(ErrorKind::InvalidConfig, "basis elements are linearly dependent");
    }
}

namespace {

template <typename Visit>
bool self_dual_search(const Field &f, std::vector<Elem> &chosen, Elem start, Visit &&visit) {
    if (chosen.size() == f.degree()) {
        return visit(chosen);
    }
    for (Elem c = start; c < f.size(); c++) {
        if (f.trace(f.mul(c, c)) != 1) {
            continue;
        }
        bool orthogonal = true;
        for (Elem w : chosen) {
            if (f.trace(f.mul(c, w)) != 0) {
                orthogonal = false;
                break;
            }
        }
        if (!orthogonal) {
            continue;
        }
        chosen.push_back(c);
        if (self_dual_search(f, chosen, c + 1, visit)) {
            return true;
        }
        chosen.pop_back();
    }
    return false;
}

}  // namespace

SelfDualBasis SelfDualBasis::find(const Field &field) {
    std::vector<Elem> chosen;
    std::vector<Elem> found;
    self_dual_search(field, chosen, 1, [&](const std::vector<Elem> &b) {
        found = b;
        return true;
    });
    if (found.empty()) {
        throw Error(ErrorKind::NotFound, "no self-dual basis of GF(2^" + std::to_string(field.degree()) + ")");
    }
    return SelfDualBasis(field, found);
}

std::vector<SelfDualBasis> SelfDualBasis::enumerate(const Field &field) {
    std::vector<SelfDualBasis> out;
    std::vector<Elem> chosen;
    self_dual_search(field, chosen, 1, [&](const std::vector<Elem> &b) {
        out.emplace_back(field, b);
        return false;
    });
    return out;
}

std::vector<int> SelfDualBasis::coordinates(Elem alpha) const {
    std::vector<int> z(omegas_.size());
    for (std::size_t i = 0; i < omegas_.size(); i++) {
        z[i] = field_->trace(field_->mul(alpha, omegas_[i]));
    }
    return z;
}

Elem SelfDualBasis::combine(std::span<const int> coords) const {
    Elem out = 0;
    for (std::size_t i = 0; i < omegas_.size() && i < coords.size(); i++) {
        if (coords[i] & 1) {
            out ^= omegas_[i];
        }
    }
    return out;
}

}  // namespace stabmub
