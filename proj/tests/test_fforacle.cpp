/*
Copyright 2026 The dflag Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#include <gtest/gtest.h>

#include <cstdlib>
#include <optional>
#include <set>

#include "dflag/classifier.hpp"
#include "dflag/fforacle.hpp"
#include "support.hpp"

using namespace dflag;
using namespace dflag::fforacle;
using liecomb::GroupDatum;
using liecomb::KParabolicSpec;
using liecomb::ParabolicSpec;
using liecomb::SymmetricPairSpec;

TEST(Field, Arithmetic)
{
    for (int q : {2, 3, 5}) {
        const PrimeField f(q);
        for (int a = 1; a < q; ++a) {
            EXPECT_EQ(f.mul(a, f.inv(a)), 1);
            EXPECT_EQ(f.add(a, f.neg(a)), 0);
        }
    }
    EXPECT_THROW(PrimeField(4), InvalidInput);
    EXPECT_THROW(PrimeField(7), InvalidInput);
}

TEST(Matrix, RrefAndInverse)
{
    const PrimeField f(3);
    Matrix m(2, 3);
    m.data = {1, 2, 0, 2, 1, 0};
    EXPECT_EQ(rref(f, m), 1);
    EXPECT_EQ(m.rows, 1);
    Matrix a(2, 2);
    a.data = {1, 1, 0, 2};
    EXPECT_EQ(multiply(f, a, inverse(f, a)), Matrix::identity(2));
}

TEST(EnumerateFlags, Examples)
{
    EXPECT_EQ(enumerate_flags(GroupDatum::gl(2), {1, 1}, 2, 1000).size(), 3u);
    EXPECT_EQ(enumerate_flags(GroupDatum::gl(3), {1, 1, 1}, 2, 1000).size(), 21u);
    EXPECT_EQ(enumerate_flags(GroupDatum::sp(2), {1, 2, 1}, 2, 1000).size(), 15u);
}

TEST(EnumerateFlags, MatchClosedFormsAndAreDistinct)
{
    for (int q : {2, 3}) {
        for (const auto& g : {GroupDatum::gl(3), GroupDatum::gl(4), GroupDatum::sp(2), GroupDatum::sp(3)}) {
            for (const auto& P : fixtures::all_parabolics(g)) {
                if (g == GroupDatum::sp(3) && q == 3 && P.length() > 4) {
                    continue;
                }
                const auto flags = enumerate_flags(g, P.blocks, q, 1000000);
                EXPECT_EQ(flags.size(), flag_count(g, P.blocks, q)) << P.to_string() << " q=" << q;
                std::set<std::string> keys;
                for (const auto& pt : flags) {
                    keys.insert(detail::encode(pt.subspaces));
                }
                EXPECT_EQ(keys.size(), flags.size());
            }
        }
    }
    EXPECT_EQ(gaussian_binomial(4, 2, 2), 35u);
    EXPECT_EQ(q_multinomial({1, 1, 1}, 2), 21u);
}

TEST(EnumerateFlags, BudgetExceeded)
{
    EXPECT_THROW(enumerate_flags(GroupDatum::gl(4), {1, 1, 1, 1}, 2, 100), BudgetExceeded);
}

TEST(GroupPoints, Orders)
{
    const auto gl2 = group_points(GroupDatum::gl(2), 2, 100000);
    EXPECT_TRUE(gl2.enumerated);
    EXPECT_EQ(gl2.elements.size(), 6u);
    EXPECT_EQ(group_points(GroupDatum::gl(3), 2, 100000).elements.size(), 168u);
    const auto sp4 = group_points(GroupDatum::sp(2), 2, 100000);
    EXPECT_EQ(sp4.elements.size(), 720u);
    const auto big = group_points(GroupDatum::gl(4), 3, 1000);
    EXPECT_FALSE(big.enumerated);
    EXPECT_FALSE(big.group.generators.empty());
}

TEST(GroupPoints, GeneratorsPreserveTheForm)
{
    for (int q : {2, 3, 5}) {
        const PrimeField f(q);
        const auto sp = group_generators(f, GroupDatum::sp(3));
        const auto omega = form_matrix(f, FormKind::Symplectic, 6);
        for (const auto& g : sp.generators) {
            EXPECT_TRUE(preserves_form(f, g, omega));
        }
        if (q != 2) {
            const auto so = orthogonal_generators(f, 5);
            const auto s = form_matrix(f, FormKind::Orthogonal, 5);
            for (const auto& g : so.generators) {
                EXPECT_TRUE(preserves_form(f, g, s));
            }
        }
    }
}

TEST(CountK, Examples)
{
    const auto p11 = SymmetricPairSpec::aiii(1, 1);
    EXPECT_EQ(count_K_orbits(p11, ParabolicSpec::borel(p11.group), KParabolicSpec::whole(p11), 2), 3u);
    const auto p21 = SymmetricPairSpec::aiii(2, 1);
    EXPECT_EQ(count_K_orbits(p21, ParabolicSpec::borel(p21.group), KParabolicSpec::whole(p21), 2), 6u);
    EXPECT_EQ(count_K_orbits(p11, ParabolicSpec::whole(p11.group), KParabolicSpec::borel(p11), 3), 1u);
}

TEST(CountK, ClansForAllSmallSignatures)
{
    for (int n = 2; n <= 4; ++n) {
        for (int p = 1; p < n; ++p) {
            const auto pair = SymmetricPairSpec::aiii(p, n - p);
            for (int q : {2, 3}) {
                EXPECT_EQ(count_K_orbits(pair, ParabolicSpec::borel(pair.group), KParabolicSpec::whole(pair), q),
                          liecomb::enumerate_clans(p, n - p).size())
                    << pair.to_string() << " q=" << q;
            }
        }
    }
}

TEST(CountK, ReducedCountMatchesDirectCount)
{
    struct Case {
        SymmetricPairSpec pair;
        int q;
    };
    const std::vector<Case> cases {{SymmetricPairSpec::aiii(1, 2), 2}, {SymmetricPairSpec::aiii(2, 1), 3},
                                   {SymmetricPairSpec::ai(3), 3},     {SymmetricPairSpec::aii(4), 3},
                                   {SymmetricPairSpec::ci(2), 3},     {SymmetricPairSpec::cii(1, 1), 3}};
    for (const auto& c : cases) {
        for (const auto& P : fixtures::all_parabolics(c.pair.group)) {
            for (const auto& Q : fixtures::all_k_parabolics(c.pair)) {
                EXPECT_EQ(count_K_orbits(c.pair, P, Q, c.q), count_K_orbits_direct(c.pair, P, Q, c.q))
                    << c.pair.to_string() << " P=" << P.to_string() << " Q=" << Q.to_string();
            }
        }
    }
}

TEST(CountTriple, Examples)
{
    const auto g2 = GroupDatum::gl(2);
    const auto B2 = ParabolicSpec::borel(g2);
    EXPECT_EQ(count_triple_orbits(g2, B2, B2, std::nullopt, 2), 2u);
    const auto g3 = GroupDatum::gl(3);
    for (int q : {2, 3}) {
        EXPECT_EQ(count_triple_orbits(g3, ParabolicSpec::make(g3, {2, 1}), ParabolicSpec::make(g3, {1, 2}),
                                      std::nullopt, q),
                  2u);
    }
    const auto B3 = ParabolicSpec::borel(g3);
    EXPECT_LT(count_triple_orbits(g3, B3, B3, B3, 2), count_triple_orbits(g3, B3, B3, B3, 3));
}

TEST(CountTriple, ReducedCountMatchesDirectCount)
{
    const auto g = GroupDatum::gl(3);
    const auto ps = fixtures::all_parabolics(g);
    for (const auto& a : ps) {
        for (const auto& b : ps) {
            for (const auto& c : ps) {
                EXPECT_EQ(count_triple_orbits(g, a, b, c, 2), count_triple_orbits_direct(g, {a, b, c}, 2));
            }
        }
    }
}

TEST(CountTriple, TableFiniteTriplesAreBoundedInGl4)
{
    const auto g = GroupDatum::gl(4);
    std::vector<ParabolicSpec> ps;
    for (const auto& P : fixtures::all_parabolics(g)) {
        if (!P.is_whole()) {
            ps.push_back(P);
        }
    }
    for (std::size_t i = 0; i < ps.size(); ++i) {
        for (std::size_t j = i; j < ps.size(); ++j) {
            for (std::size_t k = j; k < ps.size(); ++k) {
                const auto v = classifier::mwz_classify(ps[i], ps[j], ps[k]);
                const auto r = triple_growth_probe(g, {ps[i], ps[j], ps[k]}, {2, 3});
                EXPECT_EQ(v.finite, r.hint == GrowthHint::Bounded)
                    << ps[i].to_string() << " " << ps[j].to_string() << " " << ps[k].to_string();
            }
        }
    }
}

TEST(GrowthProbe, Examples)
{
    const auto p22 = SymmetricPairSpec::aiii(2, 2);
    const auto r = growth_probe(p22, ParabolicSpec::borel(p22.group), KParabolicSpec::borel(p22), {2, 3});
    EXPECT_EQ(r.hint, GrowthHint::Growing);
    ASSERT_EQ(r.counts.size(), 2u);
    EXPECT_EQ(r.counts[0].points, 315u * 9u);
    EXPECT_EQ(r.counts[1].points, 2080u * 16u);
    const auto p12 = SymmetricPairSpec::aiii(1, 2);
    EXPECT_EQ(growth_probe(p12, ParabolicSpec::borel(p12.group), KParabolicSpec {{{1}, {1, 1}}}).hint,
              GrowthHint::Bounded);
    const auto p11 = SymmetricPairSpec::aiii(1, 1);
    const auto b = growth_probe(p11, ParabolicSpec::borel(p11.group), KParabolicSpec::whole(p11));
    EXPECT_EQ(b.hint, GrowthHint::Bounded);
    EXPECT_EQ(b.counts[0].orbits, 3u);
}

TEST(GrowthProbe, Hints)
{
    EXPECT_EQ(growth_hint({{2, 1, 4}, {3, 1, 4}}), GrowthHint::Bounded);
    EXPECT_EQ(growth_hint({{2, 1, 4}, {3, 1, 5}}), GrowthHint::Growing);
    EXPECT_EQ(growth_hint({{2, 1, 4}, {3, 1, 5}, {5, 1, 5}}), GrowthHint::Irregular);
}

TEST(GrowthProbe, BudgetIsEnforced)
{
    const auto p22 = SymmetricPairSpec::aiii(2, 2);
    EXPECT_THROW(growth_probe(p22, ParabolicSpec::borel(p22.group), KParabolicSpec::borel(p22), {2, 3}, 100),
                 BudgetExceeded);
}

TEST(UnionFind, AuditSumsToPointCount)
{
    UnionFind uf(10);
    uf.unite(0, 1);
    uf.unite(2, 3);
    uf.unite(1, 3);
    EXPECT_EQ(uf.components(), 7u);
    EXPECT_EQ(uf.audit(), 10u);
}
