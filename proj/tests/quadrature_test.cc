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

#include <random>
#include <set>

#include "stabmub/error.h"
#include "stabmub/quadrature.h"

namespace stabmub {
namespace {

const GaussianDyadic kOne(1);

MultiplierSpec spec_of(unsigned n, TorusKind kind, const char *signs) {
    return MultiplierSpec::make(n, kind, SignSequence::parse(signs, n));
}

TEST(WeylSystemTest, N1Examples) {
    MultiplierSpec spec = spec_of(1, TorusKind::Nonsplit, "+");
    WeylSystem w(spec);
    EXPECT_TRUE(w.matrix({0, 0}).is_identity());
    OperatorMatrix x = w.matrix(kE1);
    EXPECT_EQ(x.at(0, 0), GaussianDyadic(0));
    EXPECT_EQ(x.at(1, 0), kOne);
    EXPECT_EQ(x.at(0, 1), kOne);
    OperatorMatrix z = w.matrix(kE2);
    EXPECT_EQ(z.at(0, 0), kOne);
    EXPECT_EQ(z.at(1, 1), GaussianDyadic(-1));
    EXPECT_EQ(z.at(0, 1), GaussianDyadic(0));
    ExactVector phi0 = {kOne, GaussianDyadic(0)};
    ExactVector out = w.monomial({1, 1}).apply(phi0);
    EXPECT_EQ(out[0], GaussianDyadic(0));
    EXPECT_EQ(out[1], GaussianDyadic::unit(3));
}

TEST(WeylSystemTest, RepresentationLaws) {
    for (unsigned n = 1; n <= 3; n++) {
        const Field &f = Field::get(n);
        for (TorusKind kind : {TorusKind::Split, TorusKind::Nonsplit}) {
            for (const auto &r : SignSequence::all(n)) {
                MultiplierSpec spec = MultiplierSpec::make(n, kind, r);
                WeylSystem w(spec);
                const std::uint32_t P = f.size() * f.size();
                std::vector<Monomial> W;
                for (std::uint32_t i = 0; i < P; i++) {
                    W.push_back(w.monomial(vec_from_index(f, i)));
                    ASSERT_EQ(W.back() * W.back().adjoint(), Monomial::identity(f.size()));
                }
                for (std::uint32_t i = 0; i < P; i++) {
                    for (std::uint32_t j = 0; j < P; j++) {
                        PhaseVec u = vec_from_index(f, i);
                        PhaseVec v = vec_from_index(f, j);
                        Monomial uv = W[i] * W[j];
                        Monomial lhs = W[vec_index(f, u + v)];
                        // W(u + v) = m(u, v) W(u) W(v).
                        for (auto &p : uv.phase) {
                            p += spec.g(u, v);
                        }
                        ASSERT_EQ(lhs, uv);
                        // W(u) W(v) = (-1)^Tr S(u, v) W(v) W(u).
                        Monomial vu = W[j] * W[i];
                        for (auto &p : vu.phase) {
                            p += Z4::twice(f.trace(symplectic_form(f, u, v)));
                        }
                        ASSERT_EQ(W[i] * W[j], vu);
                    }
                }
            }
        }
    }
}

TEST(WeylSystemTest, SampledLawsAtN4) {
    const Field &f = Field::get(4);
    MultiplierSpec spec = spec_of(4, TorusKind::Nonsplit, "+-+-");
    WeylSystem w(spec);
    std::mt19937_64 rng(2026);
    for (int k = 0; k < 10000; k++) {
        PhaseVec u = vec_from_index(f, static_cast<std::uint32_t>(rng() & 0xff));
        PhaseVec v = vec_from_index(f, static_cast<std::uint32_t>(rng() & 0xff));
        Monomial uv = w.monomial(u) * w.monomial(v);
        for (auto &p : uv.phase) {
            p += spec.g(u, v);
        }
        ASSERT_EQ(w.monomial(u + v), uv);
        Monomial vu = w.monomial(v) * w.monomial(u);
        for (auto &p : vu.phase) {
            p += Z4::twice(f.trace(symplectic_form(f, u, v)));
        }
        ASSERT_EQ(w.monomial(u) * w.monomial(v), vu);
    }
}

TEST(WeylSystemTest, OrdinaryOnDirections) {
    for (unsigned n = 1; n <= 3; n++) {
        const Field &f = Field::get(n);
        WeylSystem w(MultiplierSpec::make(n, TorusKind::Nonsplit, SignSequence::plus(n)));
        for (const auto &d : enumerate_directions(f)) {
            for (Elem a = 0; a < f.size(); a++) {
                for (Elem b = 0; b < f.size(); b++) {
                    PhaseVec x = scale(f, a, d.rep);
                    PhaseVec y = scale(f, b, d.rep);
                    ASSERT_EQ(w.monomial(x) * w.monomial(y), w.monomial(x + y));
                }
            }
        }
    }
}

TEST(QuadratureTest, VerticalLinesAreBasisProjections) {
    for (unsigned n = 1; n <= 3; n++) {
        const Field &f = Field::get(n);
        WeylSystem w(MultiplierSpec::make(n, TorusKind::Split, SignSequence::plus(n)));
        const Direction vertical{kE2};
        for (Elem gamma = 0; gamma < f.size(); gamma++) {
            OperatorMatrix Q = quadrature_projection(w, line_through(f, {gamma, 0}, vertical));
            for (std::size_t r = 0; r < f.size(); r++) {
                for (std::size_t c = 0; c < f.size(); c++) {
                    ASSERT_EQ(Q.at(r, c), GaussianDyadic(r == gamma && c == gamma ? 1 : 0));
                }
            }
        }
    }
}

TEST(QuadratureTest, ThreeRoutesAgree) {
    for (unsigned n = 1; n <= 3; n++) {
        const Field &f = Field::get(n);
        for (TorusKind kind : {TorusKind::Split, TorusKind::Nonsplit}) {
            for (const auto &r : SignSequence::all(n)) {
                WeylSystem w(MultiplierSpec::make(n, kind, r));
                for (const auto &l : enumerate_lines(f)) {
                    OperatorMatrix explicit_q = quadrature_projection(w, l);
                    ASSERT_EQ(explicit_q, quadrature_projection_from_weyl(w, l));
                    ExactVector v = mub_vector(w, l);
                    for (const auto &z : v) {
                        ASSERT_TRUE(z.is_zero() || z.norm() == kOne);
                    }
                    ASSERT_EQ(*projector(v), explicit_q);
                    ExactVector nv = normalize_phase(v);
                    std::size_t k = 0;
                    while (nv[k].is_zero()) {
                        k++;
                    }
                    ASSERT_EQ(nv[k], kOne);
                }
            }
        }
    }
}

TEST(QuadratureTest, N1OverlapsAreZeroOrHalf) {
    for (TorusKind kind : {TorusKind::Split, TorusKind::Nonsplit}) {
        QuadratureSystem q = build_quadrature(spec_of(1, kind, "+"));
        ASSERT_EQ(q.projections.size(), 6u);
        for (std::size_t i = 0; i < 6; i++) {
            for (std::size_t j = 0; j < 6; j++) {
                if (i == j) {
                    continue;
                }
                GaussianDyadic t = trace_product(q.projections[i], q.projections[j]);
                EXPECT_TRUE(t == GaussianDyadic(0) || t == GaussianDyadic(1, 0, 1));
                EXPECT_EQ(t == GaussianDyadic(0), i / 2 == j / 2);
            }
        }
    }
}

TEST(QuadratureTest, N1BasesAreEigenbasesOfWeylOperators) {
    for (TorusKind kind : {TorusKind::Split, TorusKind::Nonsplit}) {
        for (const char *s : {"+", "-"}) {
            const Field &f = Field::get(1);
            MultiplierSpec spec = spec_of(1, kind, s);
            WeylSystem w(spec);
            for (const auto &l : enumerate_lines(f)) {
                ExactVector v = mub_vector(w, l);
                ExactVector wv = w.monomial(l.dir.rep).apply(v);
                // W(d) v = c v with c a fourth root of unity.
                std::size_t k0 = v[0].is_zero() ? 1 : 0;
                GaussianDyadic c = wv[k0] * v[k0].conj();
                EXPECT_EQ(c.norm(), kOne);
                for (std::size_t k = 0; k < v.size(); k++) {
                    EXPECT_EQ(wv[k], c * v[k]);
                }
            }
        }
    }
}

TEST(QuadratureTest, BuildSizesAndDefinition) {
    EXPECT_EQ(build_quadrature(spec_of(2, TorusKind::Split, "++")).projections.size(), 20u);
    for (unsigned n = 1; n <= 3; n++) {
        for (TorusKind kind : {TorusKind::Split, TorusKind::Nonsplit}) {
            for (const auto &r : SignSequence::all(n)) {
                QuadratureSystem q = build_quadrature(MultiplierSpec::make(n, kind, r), 2);
                Report rep = verify_definition(q);
                EXPECT_TRUE(rep.passed()) << rep.to_json().dump();
            }
        }
    }
    QuadratureSystem q1 = build_quadrature(spec_of(1, TorusKind::Nonsplit, "+"));
    const Report q1_report = verify_definition(q1);
    const CheckResult &overlap = q1_report.checks.back();
    EXPECT_EQ(overlap.name, "definition.trace_overlaps");
    EXPECT_EQ(overlap.details["cross_direction_pairs"], 24);
}

TEST(QuadratureTest, CorruptedSystemFails) {
    QuadratureSystem q = build_quadrature(spec_of(2, TorusKind::Nonsplit, "+-"));
    q.projections[5] = OperatorMatrix::identity(4);
    Report rep = verify_definition(q);
    EXPECT_FALSE(rep.passed());
    EXPECT_EQ(rep.checks.front().name, "definition.rank_one_projection");
    EXPECT_FALSE(rep.checks.front().passed);
    EXPECT_EQ(rep.checks.front().counterexample["line"], nlohmann::json({{"dir", {1, 1}}, {"off", {0, 1}}}));
}

TEST(QuadratureTest, ParallelBuildIsDeterministic) {
    MultiplierSpec spec = spec_of(3, TorusKind::Nonsplit, "-+-");
    QuadratureSystem a = build_quadrature(spec, 1);
    QuadratureSystem b = build_quadrature(spec, 4);
    EXPECT_EQ(a.projections, b.projections);
    EXPECT_EQ(verify_definition(a, 1).to_json(), verify_definition(b, 4).to_json());
}

TEST(CovarianceUnitaryTest, N1NonsplitColumn) {
    QuadratureSystem q = build_quadrature(spec_of(1, TorusKind::Nonsplit, "+"));
    const SympMap A = q.spec.torus().generator;
    OperatorMatrix U = covariance_unitary(A, q);
    EXPECT_EQ(U.at(0, 0), GaussianDyadic(1, -1, 1));
    EXPECT_EQ(U.at(1, 0), GaussianDyadic(-1, -1, 1));
    EXPECT_TRUE((U * U.adjoint()).is_identity());
    EXPECT_TRUE(covariance_unitary(SympMap::identity(), q).is_identity());
    try {
        covariance_unitary(SympMap{0, 1, 1, 0}, q);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotInTorus);
    }
}

TEST(CovarianceUnitaryTest, SplitIsOrdinaryPermutationRepresentation) {
    for (unsigned n = 2; n <= 4; n++) {
        const Field &f = Field::get(n);
        QuadratureSystem q = build_quadrature(MultiplierSpec::make(n, TorusKind::Split, SignSequence::plus(n)));
        const TorusSpec &t = q.spec.torus();
        OperatorMatrix U = covariance_unitary(t.generator, q);
        for (Elem g = 0; g < f.size(); g++) {
            for (Elem c = 0; c < f.size(); c++) {
                ASSERT_EQ(U.at(c, g), GaussianDyadic(c == f.mul(g, t.xi.a()) ? 1 : 0));
            }
        }
        OperatorMatrix Uk = OperatorMatrix::identity(f.size());
        for (std::uint64_t k = 0; k < t.order; k++) {
            ASSERT_EQ(Uk, covariance_unitary(power(f, t.generator, k), q));
            Uk = Uk * U;
        }
        EXPECT_TRUE(Uk.is_identity());
    }
}

TEST(CovarianceUnitaryTest, MetapIsUnitaryOnEveryTorusElement) {
    for (unsigned n = 1; n <= 3; n++) {
        const Field &f = Field::get(n);
        for (const auto &r : SignSequence::all(n)) {
            QuadratureSystem q = build_quadrature(MultiplierSpec::make(n, TorusKind::Nonsplit, r));
            for (const auto &A : q.spec.torus().elements(f)) {
                OperatorMatrix U = covariance_unitary(A, q);
                ASSERT_TRUE((U * U.adjoint()).is_identity());
                for (const auto &l : enumerate_lines(f)) {
                    ASSERT_EQ(U * q.at(l) * U.adjoint(), q.at(act_affine(f, AffineMap{A, {0, 0}}, l)));
                }
            }
        }
    }
}

TEST(CovarianceUnitaryTest, MetapAlsoServesSplitTori) {
    for (unsigned n = 2; n <= 3; n++) {
        const Field &f = Field::get(n);
        QuadratureSystem q = build_quadrature(MultiplierSpec::make(n, TorusKind::Split, SignSequence::plus(n)));
        for (const auto &A : q.spec.torus().elements(f)) {
            if (A.is_identity()) {
                continue;
            }
            OperatorMatrix U = metap_unitary(A, q.spec, q.weyl);
            ASSERT_TRUE((U * U.adjoint()).is_identity());
            for (const auto &l : enumerate_lines(f)) {
                ASSERT_EQ(U * q.at(l) * U.adjoint(), q.at(act_affine(f, AffineMap{A, {0, 0}}, l)));
            }
        }
        EXPECT_THROW(metap_unitary(SympMap::identity(), q.spec, q.weyl), Error);
    }
}

TEST(CovarianceTest, FullGroupSweeps) {
    for (unsigned n = 1; n <= 2; n++) {
        for (TorusKind kind : {TorusKind::Split, TorusKind::Nonsplit}) {
            for (const auto &r : SignSequence::all(n)) {
                QuadratureSystem q = build_quadrature(MultiplierSpec::make(n, kind, r));
                const auto group = semidirect_elements(q.spec.torus(), q.field());
                CheckResult c = verify_covariance(q, group);
                EXPECT_TRUE(c.passed) << c.to_json().dump();
                EXPECT_EQ(c.details["group_elements"], group.size());
            }
        }
    }
    EXPECT_EQ(semidirect_elements(torus(TorusKind::Nonsplit, Field::get(1)), Field::get(1)).size(), 12u);
    EXPECT_EQ(semidirect_elements(torus(TorusKind::Nonsplit, Field::get(3)), Field::get(3)).size(), 576u);
}

TEST(CovarianceTest, TranslationsAlone) {
    for (unsigned n = 1; n <= 3; n++) {
        for (TorusKind kind : {TorusKind::Split, TorusKind::Nonsplit}) {
            QuadratureSystem q = build_quadrature(MultiplierSpec::make(n, kind, SignSequence::plus(n)));
            EXPECT_TRUE(verify_covariance(q, translations(q.field())).passed);
        }
    }
}

TEST(CovarianceTest, NonsplitTorusIsTransitiveOnBases) {
    for (unsigned n = 1; n <= 4; n++) {
        const Field &f = Field::get(n);
        const TorusSpec t = torus(TorusKind::Nonsplit, f);
        std::set<std::uint32_t> orbit;
        const Line base = line_from_index(f, 0);
        for (const auto &A : t.elements(f)) {
            orbit.insert(direction_index(f, act_affine(f, AffineMap{A, {0, 0}}, base).dir));
        }
        EXPECT_EQ(orbit.size(), f.size() + 1u);
    }
}

TEST(EquivalenceKeyTest, Examples) {
    MultiplierSpec a = spec_of(1, TorusKind::Nonsplit, "+");
    EXPECT_EQ(equivalence_key(a), equivalence_key(spec_of(1, TorusKind::Nonsplit, "+")));
    EXPECT_NE(equivalence_key(a), equivalence_key(spec_of(1, TorusKind::Nonsplit, "-")));
    EXPECT_EQ(equivalence_key(a), "stabmub-key-v1;n=1;modulus=2;g=0000001303010130");
    QuadratureSystem q = build_quadrature(a);
    EXPECT_EQ(equivalence_key(q), equivalence_key(a));
}

}  // namespace
}  // namespace stabmub
