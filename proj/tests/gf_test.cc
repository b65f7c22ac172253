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


#include <gtest/gtest.h>

#include <set>

#include "stabmub/error.h"
#include "stabmub/gf.h"
#include "stabmub/sl2.h"

namespace stabmub {
namespace {

// Schoolbook carry-less multiply followed by long division; shares no code with Field.
std::uint64_t naive_mul(std::uint64_t a, std::uint64_t b, unsigned n, std::uint64_t modulus) {
    std::uint64_t prod = 0;
    for (unsigned k = 0; k < 32; k++) {
        if ((b >> k) & 1) {
            prod ^= a << k;
        }
    }
    for (int k = 63; k >= static_cast<int>(n); k--) {
        if ((prod >> k) & 1) {
            prod ^= modulus << (k - n);
        }
    }
    return prod;
}

bool naive_irreducible(std::uint64_t poly, unsigned deg) {
    // No factor of degree d in [1, deg/2]: trial division over every polynomial of that degree.
    for (std::uint64_t d = 2; d < (std::uint64_t{1} << (deg / 2 + 1)); d++) {
        std::uint64_t r = poly;
        int dd = 63 - __builtin_clzll(d);
        for (int k = 63; k >= dd; k--) {
            if ((r >> k) & 1) {
                r ^= d << (k - dd);
            }
        }
        if (r == 0) {
            return false;
        }
    }
    return true;
}

TEST(FieldTest, DefaultModulusIsLeastIrreducible) {
    EXPECT_EQ(Field::default_modulus(1), 0b10u);
    EXPECT_EQ(Field::default_modulus(2), 0b111u);
    EXPECT_EQ(Field::default_modulus(3), 0b1011u);
    EXPECT_EQ(Field::default_modulus(4), 0b10011u);
    for (unsigned n = 2; n <= 12; n++) {
        std::uint64_t least = 0;
        for (std::uint64_t p = std::uint64_t{1} << n; p < (std::uint64_t{2} << n); p++) {
            if (naive_irreducible(p, n)) {
                least = p;
                break;
            }
        }
        EXPECT_EQ(Field::default_modulus(n), least) << "n = " << n;
    }
}

TEST(FieldTest, RejectsReducibleModulus) {
    EXPECT_THROW(Field(2, 0b101), Error);
    try {
        Field(3, 0b1111);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotIrreducible);
    }
}

TEST(FieldTest, Gf4OmegaSquared) {
    const Field &f = Field::get(2);
    EXPECT_EQ(f.mul(0b10, 0b10), 0b11u);
}

TEST(FieldTest, MultiplicationMatchesNaiveProduct) {
    for (unsigned n = 1; n <= 6; n++) {
        const Field &f = Field::get(n);
        for (Elem a = 0; a < f.size(); a++) {
            for (Elem b = 0; b < f.size(); b++) {
                ASSERT_EQ(f.mul(a, b), naive_mul(a, b, n, f.modulus()));
                ASSERT_EQ(Field::clmul_reduce(a, b, n, f.modulus()), f.mul(a, b));
            }
        }
    }
    const Field &f16 = Field::get(16);
    for (Elem a = 1; a < f16.size(); a += 977) {
        for (Elem b = 3; b < f16.size(); b += 1543) {
            ASSERT_EQ(f16.mul(a, b), naive_mul(a, b, 16, f16.modulus()));
        }
    }
}

TEST(FieldTest, InverseAndCharacteristic) {
    const Field &f = Field::get(3);
    for (Elem a = 1; a < f.size(); a++) {
        EXPECT_EQ(f.mul(f.inv(a), a), 1u);
        EXPECT_EQ(a ^ a, 0u);
    }
    try {
        f.inv(0);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::InverseOfZero);
    }
}

TEST(FieldTest, ElementTypeChecksFields) {
    const Field &f2 = Field::get(2);
    const Field &f3 = Field::get(3);
    FieldElement w = f2.element(2);
    EXPECT_EQ((w * w).bits(), 3u);
    EXPECT_EQ((w + w).bits(), 0u);
    EXPECT_EQ((w / w).bits(), 1u);
    try {
        (void)(w + f3.element(1));
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::MixedFields);
    }
    EXPECT_THROW(f2.zero().inv(), Error);
    EXPECT_THROW(f2.element(4), Error);
}

TEST(FieldTest, TraceExamples) {
    EXPECT_EQ(Field::get(1).trace(1), 1);
    EXPECT_EQ(Field::get(2).trace(0b10), 1);
    EXPECT_EQ(Field::get(2).trace(1), 0);
}

TEST(FieldTest, TraceIsFrobeniusSumAndLinear) {
    for (unsigned n = 1; n <= 8; n++) {
        const Field &f = Field::get(n);
        std::set<int> image;
        for (Elem a = 0; a < f.size(); a++) {
            std::uint64_t sum = 0;
            std::uint64_t x = a;
            for (unsigned k = 0; k < n; k++) {
                sum ^= x;
                x = naive_mul(x, x, n, f.modulus());
            }
            ASSERT_LE(sum, 1u);
            ASSERT_EQ(f.trace(a), static_cast<int>(sum));
            ASSERT_EQ(f.frobenius_trace_sum(a), sum);
            image.insert(f.trace(a));
        }
        EXPECT_EQ(image.size(), 2u) << "trace is onto Z2";
        for (Elem a = 0; a < f.size() && n <= 5; a++) {
            for (Elem b = 0; b < f.size(); b++) {
                ASSERT_EQ(f.trace(a ^ b), f.trace(a) ^ f.trace(b));
            }
        }
    }
}

TEST(FieldTest, SqrtExamples) {
    const Field &f = Field::get(2);
    EXPECT_EQ(f.sqrt(0), 0u);
    EXPECT_EQ(f.sqrt(1), 1u);
    EXPECT_EQ(f.sqrt(0b10), 0b11u);
}

TEST(FieldTest, FrobeniusProperties) {
    for (unsigned n = 1; n <= 4; n++) {
        const Field &f = Field::get(n);
        for (Elem a = 0; a < f.size(); a++) {
            ASSERT_EQ(f.square(f.sqrt(a)), a);
            ASSERT_EQ(f.sqrt(f.square(a)), a);
            ASSERT_EQ(f.pow(a, f.size()), a);
            for (Elem b = 0; b < f.size(); b++) {
                ASSERT_EQ(f.square(a ^ b), f.square(a) ^ f.square(b));
                ASSERT_EQ(f.square(f.mul(a, b)), f.mul(f.square(a), f.square(b)));
                ASSERT_EQ(f.sqrt(a ^ b), f.sqrt(a) ^ f.sqrt(b));
            }
        }
    }
}

TEST(FieldTest, MultiplicativeGenerator) {
    EXPECT_EQ(Field::get(1).multiplicative_generator(), 1u);
    EXPECT_EQ(Field::get(2).multiplicative_generator(), 0b10u);
    EXPECT_EQ(Field::get(2).multiplicative_order(0b10), 3u);
    for (unsigned n = 1; n <= 10; n++) {
        const Field &f = Field::get(n);
        const Elem g = f.multiplicative_generator();
        EXPECT_EQ(f.multiplicative_order(g), f.size() - 1u);
        for (Elem c = 1; c < g; c++) {
            EXPECT_LT(f.multiplicative_order(c), f.size() - 1u);
        }
    }
}

TEST(ExtFieldTest, ModulusScan) {
    const std::pair<Elem, Elem> expected[] = {{1, 1}, {1, 2}, {1, 1}, {1, 8}};
    for (unsigned n = 1; n <= 4; n++) {
        const ExtField &ext = ExtField::of(Field::get(n));
        EXPECT_EQ(ext.t(), expected[n - 1].first);
        EXPECT_EQ(ext.u(), expected[n - 1].second);
        const Field &f = ext.base();
        for (Elem x = 0; x < f.size(); x++) {
            EXPECT_NE(f.mul(x, x) ^ f.mul(ext.t(), x) ^ ext.u(), 0u);
        }
    }
}

TEST(ExtFieldTest, ConjugationAndNorm) {
    for (unsigned n = 1; n <= 3; n++) {
        const ExtField &ext = ExtField::of(Field::get(n));
        const Field &f = ext.base();
        for (std::uint64_t i = 0; i < ext.size(); i++) {
            ExtElement x = ext.from_index(i);
            ASSERT_EQ(x.conj().conj(), x);
            ASSERT_EQ(x.conj(), x.pow(f.size()));
            ASSERT_EQ(x.conj() == x, x.in_base());
            ASSERT_TRUE((x * x.conj()).in_base());
            ASSERT_EQ(x.norm().bits(), (x * x.conj()).a());
            ASSERT_EQ(x.sqrt() * x.sqrt(), x);
            for (std::uint64_t j = 0; j < ext.size(); j++) {
                ExtElement y = ext.from_index(j);
                ASSERT_EQ((x * y).conj(), x.conj() * y.conj());
            }
        }
    }
}

TEST(ExtFieldTest, NormOneGenerator) {
    for (unsigned n = 1; n <= 6; n++) {
        const ExtField &ext = ExtField::of(Field::get(n));
        ExtElement xi = ext.norm_one_generator();
        EXPECT_EQ(xi.norm().bits(), 1u);
        EXPECT_EQ(ext.multiplicative_order(xi), ext.base().size() + 1u);
        EXPECT_EQ(ext.multiplicative_order(ext.multiplicative_generator()), ext.size() - 1u);
    }
    const ExtField &e1 = ExtField::of(Field::get(1));
    ExtElement xi = e1.norm_one_generator();
    EXPECT_EQ(xi.pow(3), e1.embed(1));
    EXPECT_FALSE(xi == e1.embed(1));
}

TEST(ExtFieldTest, ExtendedTrace) {
    for (unsigned n = 1; n <= 4; n++) {
        const Field &f = Field::get(n);
        const ExtField &ext = ExtField::of(f);
        const ExtElement eps_sq = nonsplit_frame(f).eps_sq;
        EXPECT_EQ(ext_trace(eps_sq, eps_sq), 0);
        for (Elem a = 0; a < f.size(); a++) {
            EXPECT_EQ(ext_trace(ext.embed(a), eps_sq), f.trace(a));
        }
        for (std::uint64_t i = 0; i < ext.size(); i++) {
            for (std::uint64_t j = 0; j < ext.size() && n <= 2; j++) {
                ExtElement x = ext.from_index(i);
                ExtElement y = ext.from_index(j);
                ASSERT_EQ(ext_trace(x + y, eps_sq), ext_trace(x, eps_sq) ^ ext_trace(y, eps_sq));
            }
        }
        try {
            ext_trace(ext.embed(1), ext.embed(1));
            FAIL();
        } catch (const Error &e) {
            EXPECT_EQ(e.kind(), ErrorKind::DegenerateFrame);
        }
    }
    const Field &f1 = Field::get(1);
    const ExtElement eps_sq = nonsplit_frame(f1).eps_sq;
    EXPECT_EQ(ext_trace(ExtField::of(f1).embed(1) + eps_sq, eps_sq), 1);
}

TEST(SelfDualBasisTest, Examples) {
    const SelfDualBasis b1 = SelfDualBasis::find(Field::get(1));
    EXPECT_EQ(std::vector<Elem>(b1.omegas().begin(), b1.omegas().end()), std::vector<Elem>{1});
    const SelfDualBasis b2 = SelfDualBasis::find(Field::get(2));
    EXPECT_EQ(std::vector<Elem>(b2.omegas().begin(), b2.omegas().end()), (std::vector<Elem>{0b10, 0b11}));
}

TEST(SelfDualBasisTest, TraceOrthonormalAndIndependent) {
    for (unsigned n = 1; n <= 12; n++) {
        const Field &f = Field::get(n);
        const SelfDualBasis b = SelfDualBasis::find(f);
        ASSERT_EQ(b.omegas().size(), n);
        for (unsigned i = 0; i < n; i++) {
            for (unsigned j = 0; j < n; j++) {
                EXPECT_EQ(f.trace(f.mul(b.omegas()[i], b.omegas()[j])), i == j ? 1 : 0);
            }
        }
        if (n <= 8) {
            std::set<Elem> span;
            for (Elem alpha = 0; alpha < f.size(); alpha++) {
                auto z = b.coordinates(alpha);
                ASSERT_EQ(b.combine(z), alpha);
                span.insert(b.combine(z));
            }
            EXPECT_EQ(span.size(), f.size());
        }
    }
}

TEST(SelfDualBasisTest, EnumerationIsSortedAndStartsWithFind) {
    for (unsigned n = 1; n <= 4; n++) {
        const Field &f = Field::get(n);
        auto all = SelfDualBasis::enumerate(f);
        ASSERT_FALSE(all.empty());
        EXPECT_TRUE(all.front() == SelfDualBasis::find(f));
        for (std::size_t k = 1; k < all.size(); k++) {
            auto a = all[k - 1].omegas();
            auto b = all[k].omegas();
            EXPECT_TRUE(std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end()));
        }
    }
    EXPECT_THROW(SelfDualBasis(Field::get(2), {1, 2}), Error);
}

TEST(PrimeFactorsTest, Values) {
    EXPECT_EQ(prime_factors(1), std::vector<std::uint64_t>{});
    EXPECT_EQ(prime_factors(255), (std::vector<std::uint64_t>{3, 5, 17}));
    EXPECT_EQ(prime_factors(65535), (std::vector<std::uint64_t>{3, 5, 17, 257}));
}

}  // namespace
}  // namespace stabmub
