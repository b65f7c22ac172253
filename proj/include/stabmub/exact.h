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

#ifndef STABMUB_EXACT_H
#define STABMUB_EXACT_H

#include <algorithm>
#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace stabmub {

using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision integer with an inline int64 representation.
///
/// Values that fit in int64 never allocate; overflow promotes to a shared immutable BigInt, and
/// results that fit again are demoted. Invariant: big_ is set iff the value does not fit in int64.
class ExactInt {
   public:
    ExactInt() = default;
    ExactInt(std::int64_t v) : small_(v) {
    }
    explicit ExactInt(const BigInt &v) {
        assign(v);
    }

    bool is_small() const {
        return big_ == nullptr;
    }
    std::int64_t small() const {
        return small_;
    }
    BigInt big() const {
        return big_ ? *big_ : BigInt(small_);
    }
    std::optional<std::int64_t> to_int64() const {
        if (big_) {
            return std::nullopt;
        }
        return small_;
    }
    bool is_zero() const {
        return !big_ && small_ == 0;
    }
    int sign() const {
        if (big_) {
            return big_->sign();
        }
        return (small_ > 0) - (small_ < 0);
    }
    /// Number of trailing zero bits; 64+ is reported as 64 for zero.
    unsigned trailing_zeros() const {
        if (!big_) {
            return small_ == 0 ? 64u : static_cast<unsigned>(__builtin_ctzll(static_cast<std::uint64_t>(small_)));
        }
        return static_cast<unsigned>(boost::multiprecision::lsb(abs(*big_)));
    }

    ExactInt shl(unsigned k) const {
        if (!big_ && k < 62) {
            std::int64_t lim = std::int64_t{1} << (62 - k);
            if (small_ < lim && small_ > -lim) {
                return ExactInt(small_ * (std::int64_t{1} << k));
            }
        }
        return ExactInt(BigInt(big() << k));
    }
    /// Exact division by 2^k; the caller guarantees divisibility.
    ExactInt shr_exact(unsigned k) const {
        if (!big_) {
            return ExactInt(k >= 63 ? 0 : small_ / (std::int64_t{1} << k));
        }
        BigInt v = *big_;
        bool neg = v.sign() < 0;
        BigInt m = (neg ? BigInt(-v) : v) >> k;
        return ExactInt(neg ? BigInt(-m) : m);
    }

    friend ExactInt operator+(const ExactInt &x, const ExactInt &y) {
        std::int64_t r;
        if (!x.big_ && !y.big_ && !__builtin_add_overflow(x.small_, y.small_, &r)) {
            return ExactInt(r);
        }
        return ExactInt(BigInt(x.big() + y.big()));
    }
    friend ExactInt operator-(const ExactInt &x, const ExactInt &y) {
        std::int64_t r;
        if (!x.big_ && !y.big_ && !__builtin_sub_overflow(x.small_, y.small_, &r)) {
            return ExactInt(r);
        }
        return ExactInt(BigInt(x.big() - y.big()));
    }
    friend ExactInt operator*(const ExactInt &x, const ExactInt &y) {
        std::int64_t r;
        if (!x.big_ && !y.big_ && !__builtin_mul_overflow(x.small_, y.small_, &r)) {
            return ExactInt(r);
        }
        return ExactInt(BigInt(x.big() * y.big()));
    }
    ExactInt operator-() const {
        return ExactInt(0) - *this;
    }
    ExactInt &operator+=(const ExactInt &y) {
        return *this = *this + y;
    }
    ExactInt &operator-=(const ExactInt &y) {
        return *this = *this - y;
    }
    friend bool operator==(const ExactInt &x, const ExactInt &y) {
        if (!x.big_ && !y.big_) {
            return x.small_ == y.small_;
        }
        // Canonical representation: a small value never equals a big one.
        if (!x.big_ || !y.big_) {
            return false;
        }
        return *x.big_ == *y.big_;
    }

    std::string str() const {
        return big_ ? big_->str() : std::to_string(small_);
    }
    /// Inverse of str(). Throws Error(ParseError) on malformed input.
    static ExactInt parse(const std::string &text);

   private:
    void assign(const BigInt &v) {
        if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
            small_ = static_cast<std::int64_t>(v);
            big_.reset();
        } else {
            small_ = 0;
            big_ = std::make_shared<const BigInt>(v);
        }
    }

    std::int64_t small_ = 0;
    std::shared_ptr<const BigInt> big_;
};

/// re + i*im over the integers.
struct GaussianInt {
    ExactInt re;
    ExactInt im;

    bool is_zero() const {
        return re.is_zero() && im.is_zero();
    }
    GaussianInt conj() const {
        return {re, -im};
    }
    friend GaussianInt operator+(const GaussianInt &x, const GaussianInt &y) {
        return {x.re + y.re, x.im + y.im};
    }
    friend GaussianInt operator-(const GaussianInt &x, const GaussianInt &y) {
        return {x.re - y.re, x.im - y.im};
    }
    friend GaussianInt operator*(const GaussianInt &x, const GaussianInt &y) {
        return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
    }
    friend bool operator==(const GaussianInt &x, const GaussianInt &y) {
        return x.re == y.re && x.im == y.im;
    }
    unsigned trailing_zeros() const {
        return std::min(re.trailing_zeros(), im.trailing_zeros());
    }
    GaussianInt shl(unsigned k) const {
        return {re.shl(k), im.shl(k)};
    }
    GaussianInt shr_exact(unsigned k) const {
        return {re.shr_exact(k), im.shr_exact(k)};
    }
};

/// i^g for g mod 4.
inline GaussianInt unit_power(int g) {
    switch (((g % 4) + 4) % 4) {
        case 0:
            return {1, 0};
        case 1:
            return {0, 1};
        case 2:
            return {-1, 0};
        default:
            return {0, -1};
    }
}

/// (re + i*im) / 2^log2_den, kept canonical: log2_den is 0 or at least one numerator is odd.
class GaussianDyadic {
   public:
    GaussianDyadic() = default;
    GaussianDyadic(GaussianInt num, unsigned log2_den = 0) : num_(std::move(num)), k_(log2_den) {
        canonicalize();
    }
    GaussianDyadic(std::int64_t re, std::int64_t im = 0, unsigned log2_den = 0)
        : GaussianDyadic(GaussianInt{re, im}, log2_den) {
    }
    static GaussianDyadic unit(int g) {
        return GaussianDyadic(unit_power(g));
    }

    const ExactInt &re_num() const {
        return num_.re;
    }
    const ExactInt &im_num() const {
        return num_.im;
    }
    const GaussianInt &num() const {
        return num_;
    }
    unsigned log2_den() const {
        return k_;
    }
    bool is_zero() const {
        return num_.is_zero();
    }

    GaussianDyadic conj() const {
        return GaussianDyadic(num_.conj(), k_);
    }
    /// |z|^2, a nonnegative real dyadic.
    GaussianDyadic norm() const {
        return *this * conj();
    }

    friend GaussianDyadic operator+(const GaussianDyadic &x, const GaussianDyadic &y) {
        unsigned k = std::max(x.k_, y.k_);
        return GaussianDyadic(x.num_.shl(k - x.k_) + y.num_.shl(k - y.k_), k);
    }
    friend GaussianDyadic operator-(const GaussianDyadic &x, const GaussianDyadic &y) {
        unsigned k = std::max(x.k_, y.k_);
        return GaussianDyadic(x.num_.shl(k - x.k_) - y.num_.shl(k - y.k_), k);
    }
    friend GaussianDyadic operator*(const GaussianDyadic &x, const GaussianDyadic &y) {
        return GaussianDyadic(x.num_ * y.num_, x.k_ + y.k_);
    }
    GaussianDyadic operator-() const {
        return GaussianDyadic(GaussianInt{-num_.re, -num_.im}, k_);
    }
    friend bool operator==(const GaussianDyadic &x, const GaussianDyadic &y) {
        return x.k_ == y.k_ && x.num_ == y.num_;
    }

    /// "re/2^k + im/2^k i" in lowest terms, for reports.
    std::string str() const;

   private:
    void canonicalize() {
        if (num_.is_zero()) {
            k_ = 0;
            return;
        }
        unsigned tz = std::min(num_.trailing_zeros(), k_);
        if (tz > 0) {
            num_ = num_.shr_exact(tz);
            k_ -= tz;
        }
    }

    GaussianInt num_{0, 0};
    unsigned k_ = 0;
};

}  // namespace stabmub

#endif
