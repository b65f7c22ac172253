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

#include "stabmub/exact.h"

#include <cctype>

#include "stabmub/error.h"
#include "stabmub/operator_matrix.h"

namespace stabmub {

ExactInt ExactInt::parse(const std::string &text) {
    std::size_t start = (!text.empty() && text[0] == '-') ? 1 : 0;
    if (text.size() == start) {
        throw Error(ErrorKind::ParseError, "empty integer literal");
    }
    for (std::size_t k = start; k < text.size(); k++) {
        if (!std::isdigit(static_cast<unsigned char>(text[k]))) {
            throw Error(ErrorKind::ParseError, "malformed integer literal '" + text + "'");
        }
    }
    return ExactInt(BigInt(text));
}

std::string GaussianDyadic::str() const {
    std::string den = k_ == 0 ? "" : "/2^" + std::to_string(k_);
    if (num_.im.is_zero()) {
        return num_.re.str() + den;
    }
    if (num_.re.is_zero()) {
        return num_.im.str() + "i" + den;
    }
    std::string im = num_.im.sign() < 0 ? (-num_.im).str() : num_.im.str();
    return "(" + num_.re.str() + (num_.im.sign() < 0 ? "-" : "+") + im + "i)" + den;
}

OperatorMatrix::OperatorMatrix(std::size_t dim) : dim_(dim), k_(0), nums_(dim * dim, GaussianInt{0, 0}) {
}

OperatorMatrix::OperatorMatrix(std::size_t dim, std::vector<GaussianInt> nums, unsigned log2_den)
    : dim_(dim), k_(log2_den), nums_(std::move(nums)) {
    if (nums_.size() != dim * dim) {
        throw Error(ErrorKind::InvalidConfig, "operator matrix needs dim^2 entries");
    }
    canonicalize();
}

OperatorMatrix OperatorMatrix::identity(std::size_t dim) {
    OperatorMatrix m(dim);
    for (std::size_t k = 0; k < dim; k++) {
        m.nums_[k * dim + k] = GaussianInt{1, 0};
    }
    return m;
}

OperatorMatrix OperatorMatrix::from_entries(std::size_t dim, const std::vector<GaussianDyadic> &entries) {
    if (entries.size() != dim * dim) {
        throw Error(ErrorKind::InvalidConfig, "operator matrix needs dim^2 entries");
    }
    unsigned k = 0;
    for (const auto &e : entries) {
        k = std::max(k, e.log2_den());
    }
    std::vector<GaussianInt> nums;
    nums.reserve(entries.size());
    for (const auto &e : entries) {
        nums.push_back(e.num().shl(k - e.log2_den()));
    }
    return OperatorMatrix(dim, std::move(nums), k);
}

void OperatorMatrix::canonicalize() {
    if (k_ == 0) {
        return;
    }
    unsigned tz = k_;
    for (const auto &x : nums_) {
        if (!x.is_zero()) {
            tz = std::min(tz, x.trailing_zeros());
            if (tz == 0) {
                return;
            }
        }
    }
    for (auto &x : nums_) {
        x = x.shr_exact(tz);
    }
    k_ -= tz;
}

OperatorMatrix OperatorMatrix::adjoint() const {
    OperatorMatrix out(dim_);
    out.k_ = k_;
    for (std::size_t r = 0; r < dim_; r++) {
        for (std::size_t c = 0; c < dim_; c++) {
            out.nums_[c * dim_ + r] = nums_[r * dim_ + c].conj();
        }
    }
    return out;
}

GaussianDyadic OperatorMatrix::trace() const {
    GaussianInt acc{0, 0};
    for (std::size_t k = 0; k < dim_; k++) {
        acc = acc + nums_[k * dim_ + k];
    }
    return GaussianDyadic(acc, k_);
}

bool OperatorMatrix::is_zero() const {
    for (const auto &x : nums_) {
        if (!x.is_zero()) {
            return false;
        }
    }
    return true;
}

bool OperatorMatrix::is_identity() const {
    return *this == identity(dim_);
}

OperatorMatrix operator*(const OperatorMatrix &x, const OperatorMatrix &y) {
    const std::size_t d = x.dim_;
    if (y.dim_ != d) {
        throw Error(ErrorKind::InvalidConfig, "dimension mismatch in matrix product");
    }
    std::vector<GaussianInt> out(d * d, GaussianInt{0, 0});
    for (std::size_t r = 0; r < d; r++) {
        for (std::size_t m = 0; m < d; m++) {
            const GaussianInt &a = x.nums_[r * d + m];
            if (a.is_zero()) {
                continue;
            }
            for (std::size_t c = 0; c < d; c++) {
                const GaussianInt &b = y.nums_[m * d + c];
                if (!b.is_zero()) {
                    out[r * d + c] = out[r * d + c] + a * b;
                }
            }
        }
    }
    return OperatorMatrix(d, std::move(out), x.k_ + y.k_);
}

namespace {

OperatorMatrix add_sub(const OperatorMatrix &x, const OperatorMatrix &y, bool subtract) {
    const std::size_t d = x.dim();
    if (y.dim() != d) {
        throw Error(ErrorKind::InvalidConfig, "dimension mismatch in matrix sum");
    }
    unsigned k = std::max(x.log2_den(), y.log2_den());
    std::vector<GaussianInt> out;
    out.reserve(d * d);
    for (std::size_t r = 0; r < d; r++) {
        for (std::size_t c = 0; c < d; c++) {
            GaussianInt a = x.numerator(r, c).shl(k - x.log2_den());
            GaussianInt b = y.numerator(r, c).shl(k - y.log2_den());
            out.push_back(subtract ? a - b : a + b);
        }
    }
    return OperatorMatrix(d, std::move(out), k);
}

}  // namespace

OperatorMatrix operator+(const OperatorMatrix &x, const OperatorMatrix &y) {
    return add_sub(x, y, false);
}

OperatorMatrix operator-(const OperatorMatrix &x, const OperatorMatrix &y) {
    return add_sub(x, y, true);
}

OperatorMatrix operator*(const GaussianDyadic &s, const OperatorMatrix &x) {
    std::vector<GaussianInt> out;
    out.reserve(x.nums_.size());
    for (const auto &e : x.nums_) {
        out.push_back(s.num() * e);
    }
    return OperatorMatrix(x.dim_, std::move(out), x.k_ + s.log2_den());
}

GaussianDyadic trace_product(const OperatorMatrix &x, const OperatorMatrix &y) {
    const std::size_t d = x.dim();
    if (y.dim() != d) {
        throw Error(ErrorKind::InvalidConfig, "dimension mismatch in trace product");
    }
    GaussianInt acc{0, 0};
    for (std::size_t r = 0; r < d; r++) {
        for (std::size_t c = 0; c < d; c++) {
            const GaussianInt &a = x.numerator(r, c);
            if (!a.is_zero()) {
                acc = acc + a * y.numerator(c, r);
            }
        }
    }
    return GaussianDyadic(acc, x.log2_den() + y.log2_den());
}

GaussianDyadic inner(const ExactVector &x, const ExactVector &y) {
    if (x.size() != y.size()) {
        throw Error(ErrorKind::InvalidConfig, "dimension mismatch in inner product");
    }
    GaussianDyadic acc;
    for (std::size_t k = 0; k < x.size(); k++) {
        acc = acc + x[k].conj() * y[k];
    }
    return acc;
}

std::optional<OperatorMatrix> projector(const ExactVector &x) {
    GaussianDyadic n = inner(x, x);
    if (!n.im_num().is_zero() || n.re_num().sign() <= 0) {
        return std::nullopt;
    }
    BigInt v = n.re_num().big();
    if ((v & (v - 1)) != 0) {
        return std::nullopt;
    }
    // <x, x> = 2^(msb - log2_den), so dividing by it shifts the common denominator.
    const unsigned msb = static_cast<unsigned>(boost::multiprecision::msb(v));
    const std::size_t d = x.size();
    std::vector<GaussianDyadic> entries;
    entries.reserve(d * d);
    for (std::size_t r = 0; r < d; r++) {
        for (std::size_t c = 0; c < d; c++) {
            entries.push_back(x[r] * x[c].conj() * GaussianDyadic(1, 0, msb));
        }
    }
    OperatorMatrix outer = OperatorMatrix::from_entries(d, entries);
    std::vector<GaussianInt> nums;
    nums.reserve(d * d);
    for (std::size_t r = 0; r < d; r++) {
        for (std::size_t c = 0; c < d; c++) {
            nums.push_back(outer.numerator(r, c).shl(n.log2_den()));
        }
    }
    return OperatorMatrix(d, std::move(nums), outer.log2_den());
}

ExactVector apply(const OperatorMatrix &m, const ExactVector &x) {
    const std::size_t d = m.dim();
    if (x.size() != d) {
        throw Error(ErrorKind::InvalidConfig, "dimension mismatch in matrix-vector product");
    }
    ExactVector out(d);
    for (std::size_t r = 0; r < d; r++) {
        GaussianDyadic acc;
        for (std::size_t c = 0; c < d; c++) {
            if (!x[c].is_zero() && !m.numerator(r, c).is_zero()) {
                acc = acc + m.at(r, c) * x[c];
            }
        }
        out[r] = acc;
    }
    return out;
}

}  // namespace stabmub
