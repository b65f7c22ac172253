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

#ifndef STABMUB_OPERATOR_MATRIX_H
#define STABMUB_OPERATOR_MATRIX_H

#include <cstddef>
#include <optional>
#include <vector>

#include "stabmub/exact.h"

namespace stabmub {

/// Square matrix over the Gaussian dyadics, stored as Gaussian-integer numerators over a common
/// power-of-two denominator. Row/column r is the basis vector phi_r, r a field element bit pattern.
///
/// Canonical form: log2_den is 0 or some numerator is odd. Equality is therefore entrywise equality.
class OperatorMatrix {
   public:
    OperatorMatrix() = default;
    /// Zero matrix.
    explicit OperatorMatrix(std::size_t dim);
    OperatorMatrix(std::size_t dim, std::vector<GaussianInt> nums, unsigned log2_den);

    static OperatorMatrix identity(std::size_t dim);
    /// Row-major entries.
    static OperatorMatrix from_entries(std::size_t dim, const std::vector<GaussianDyadic> &entries);

    std::size_t dim() const {
        return dim_;
    }
    unsigned log2_den() const {
        return k_;
    }
    const GaussianInt &numerator(std::size_t r, std::size_t c) const {
        return nums_[r * dim_ + c];
    }
    GaussianDyadic at(std::size_t r, std::size_t c) const {
        return GaussianDyadic(nums_[r * dim_ + c], k_);
    }

    OperatorMatrix adjoint() const;
    GaussianDyadic trace() const;
    bool is_zero() const;
    bool is_identity() const;

    friend OperatorMatrix operator*(const OperatorMatrix &x, const OperatorMatrix &y);
    friend OperatorMatrix operator+(const OperatorMatrix &x, const OperatorMatrix &y);
    friend OperatorMatrix operator-(const OperatorMatrix &x, const OperatorMatrix &y);
    friend OperatorMatrix operator*(const GaussianDyadic &s, const OperatorMatrix &x);
    friend bool operator==(const OperatorMatrix &x, const OperatorMatrix &y) {
        return x.dim_ == y.dim_ && x.k_ == y.k_ && x.nums_ == y.nums_;
    }

   private:
    void canonicalize();

    std::size_t dim_ = 0;
    unsigned k_ = 0;
    std::vector<GaussianInt> nums_;
};

/// tr(XY) without forming the product.
GaussianDyadic trace_product(const OperatorMatrix &x, const OperatorMatrix &y);

using ExactVector = std::vector<GaussianDyadic>;

/// <x, y> = sum conj(x_k) y_k.
GaussianDyadic inner(const ExactVector &x, const ExactVector &y);
/// x x^* / <x, x>. Empty when <x, x> is not a power of two, since the quotient then leaves the ring.
std::optional<OperatorMatrix> projector(const ExactVector &x);
/// m x.
ExactVector apply(const OperatorMatrix &m, const ExactVector &x);

}  // namespace stabmub

#endif
