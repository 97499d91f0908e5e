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

#include <algorithm>
#include <set>
#include <string>

#include "dflag/classifier.hpp"
#include "dflag/fforacle.hpp"
#include "support.hpp"

using namespace dflag;
using namespace dflag::classifier;
using liecomb::Composition;
using liecomb::GroupDatum;
using liecomb::KParabolicSpec;
using liecomb::ParabolicSpec;
using liecomb::SymmetricPairSpec;
using liecomb::SymplecticComposition;

namespace {

std::set<std::string> labels(const TripleFlagVerdict& v)
{
    std::set<std::string> out;
    for (const auto& r : v.matched_rows) {
        out.insert(r.label());
    }
    return out;
}

TripleFlagVerdict A(const char* a, const char* b, const char* c)
{
    return mwz_classify_A(Composition::parse(a), Composition::parse(b), Composition::parse(c));
}

TripleFlagVerdict C(const char* a, const char* b, const char* c)
{
    return mwz_classify_C(SymplecticComposition::parse(a), SymplecticComposition::parse(b),
                          SymplecticComposition::parse(c));
}

ParabolicSpec shape(const GroupDatum& g, std::vector<int> blocks) { return ParabolicSpec::make(g, std::move(blocks)); }

} // namespace

TEST(MwzA, Examples)
{
    const auto s = A("3,1", "1,1,1,1", "1,1,1,1");
    EXPECT_TRUE(s.finite);
    EXPECT_TRUE(labels(s).count("S_{4,4}"));
    const auto d = A("2,2", "2,2", "2,2");
    EXPECT_TRUE(d.finite);
    EXPECT_TRUE(labels(d).count("D_4"));
    const auto inf = A("1,1,1", "1,1,1", "1,1,1");
    EXPECT_FALSE(inf.finite);
    EXPECT_TRUE(inf.matched_rows.empty());
    const auto e = A("2,2", "2,1,1", "2,1,1");
    EXPECT_TRUE(e.finite);
    EXPECT_TRUE(labels(e).count("E_6"));
}

TEST(MwzA, NormalizesTheTriple)
{
    const auto v = A("1,1,2", "1,3", "2,1,1");
    EXPECT_EQ(v.normalized_triple[0], (std::vector<int> {3, 1}));
    EXPECT_EQ(v.normalized_triple[1], (std::vector<int> {2, 1, 1}));
    EXPECT_EQ(v.normalized_triple[2], (std::vector<int> {2, 1, 1}));
}

TEST(MwzA, Errors)
{
    EXPECT_THROW(A("2,1", "2,2", "1,1,1,1"), InvalidInput);
    EXPECT_THROW(A("4", "2,2", "1,1,1,1"), InvalidInput);
}

TEST(MwzA, InvariantUnderPermutations)
{
    const auto g = GroupDatum::gl(4);
    std::vector<std::vector<int>> shapes;
    for (const auto& P : fixtures::all_parabolics(g)) {
        if (!P.is_whole()) {
            shapes.push_back(P.blocks);
        }
    }
    for (const auto& a : shapes) {
        for (const auto& b : shapes) {
            for (const auto& c : shapes) {
                const auto v = mwz_classify_A(Composition(a), Composition(b), Composition(c));
                EXPECT_EQ(v.finite, !v.matched_rows.empty());
                auto ra = a;
                std::reverse(ra.begin(), ra.end());
                const auto w = mwz_classify_A(Composition(c), Composition(ra), Composition(b));
                EXPECT_EQ(labels(v), labels(w));
                EXPECT_EQ(v.normalized_triple, w.normalized_triple);
            }
        }
    }
}

TEST(MwzA, EbAcceptsTheOneAnywhereAndSaysSo)
{
    const auto v = A("3,2", "1,2,2", "2,1,1,1");
    EXPECT_TRUE(labels(v).count("E^{(b)}_7"));
    ASSERT_FALSE(v.notes.empty());
}

TEST(MwzC, Examples)
{
    const auto d = C("2,2", "2,2", "1,1,1,1");
    EXPECT_TRUE(d.finite);
    EXPECT_TRUE(labels(d).count("SpD_6"));
    const auto e = C("2,2", "1,2,1", "1,2,1");
    EXPECT_TRUE(e.finite);
    EXPECT_TRUE(labels(e).count("SpE_6"));
    const auto y = C("1,2,1", "1,2,1", "1,2,1");
    EXPECT_TRUE(y.finite);
    EXPECT_EQ(labels(y), (std::set<std::string> {"SpY_{4,3}"}));
    const auto d5 = C("3,3", "3,3", "2,2,2");
    EXPECT_TRUE(d5.finite);
    EXPECT_TRUE(labels(d5).count("SpD_5"));
}

TEST(MwzC, SpYExampleAgreesWithTheOracle)
{
    const auto g = GroupDatum::sp(2);
    const auto L = shape(g, {1, 2, 1});
    const auto r = fforacle::triple_growth_probe(g, {L, L, L}, {3, 5});
    EXPECT_EQ(r.hint, fforacle::GrowthHint::Bounded);
}

TEST(MwzC, Errors)
{
    EXPECT_THROW(C("2,2", "2,2", "3,3"), InvalidInput);
    EXPECT_THROW(C("4", "2,2", "2,2"), InvalidInput);
    EXPECT_THROW(SymplecticComposition::parse("1,3"), InvalidInput);
}

TEST(Triple, ExamplesFromTheAiiiSection)
{
    // P maximal: row D_{r+2}
    for (auto [p, q] : std::vector<std::pair<int, int>> {{2, 2}, {1, 3}, {2, 3}}) {
        const auto pair = SymmetricPairSpec::aiii(p, q);
        const int n = p + q;
        for (const auto& Q : fixtures::all_k_parabolics(pair)) {
            const auto v = finiteness_via_triple(pair, shape(pair.group, {n - 1, 1}), Q);
            ASSERT_EQ(v.status, Status::FiniteProven) << Q.to_string();
            ASSERT_TRUE(v.witness);
            EXPECT_EQ(v.witness->criterion, "triple");
            EXPECT_TRUE(v.witness->p_prime.has_value());
        }
        const auto D = finiteness_via_triple(pair, shape(pair.group, {n - 2, 2}), KParabolicSpec::borel(pair));
        ASSERT_EQ(D.status, Status::FiniteProven);
        EXPECT_TRUE(std::any_of(D.witness->table_rows.begin(), D.witness->table_rows.end(),
                                [](const auto& r) { return r.rfind("D_", 0) == 0; }));
    }
    // Q = (mirabolic, GL_q), P arbitrary: row S_{q,r}
    const auto pair = SymmetricPairSpec::aiii(3, 2);
    const auto v = finiteness_via_triple(pair, ParabolicSpec::borel(pair.group), KParabolicSpec {{{2, 1}, {2}}});
    ASSERT_EQ(v.status, Status::FiniteProven);
    EXPECT_TRUE(std::any_of(v.witness->table_rows.begin(), v.witness->table_rows.end(),
                            [](const auto& r) { return r.rfind("S_", 0) == 0; }));
}

TEST(Triple, UnknownCarriesNoWitness)
{
    const auto pair = SymmetricPairSpec::aii(4);
    const auto v = finiteness_via_triple(pair, ParabolicSpec::borel(pair.group), KParabolicSpec::borel(pair));
    EXPECT_EQ(v.status, Status::Unknown);
    EXPECT_FALSE(v.witness);
}

TEST(Triple, WholeGroupIsTrivial)
{
    const auto pair = SymmetricPairSpec::aiii(2, 2);
    const auto v = finiteness_via_triple(pair, ParabolicSpec::whole(pair.group), KParabolicSpec::borel(pair));
    EXPECT_EQ(v.status, Status::FiniteProven);
    ASSERT_TRUE(v.witness);
}

TEST(Intersection, AiiiBorelExactVerdicts)
{
    const auto pair = SymmetricPairSpec::aiii(2, 2);
    const auto B = ParabolicSpec::borel(pair.group);
    const auto inf = finiteness_via_intersection(pair, B, KParabolicSpec::borel(pair));
    EXPECT_EQ(inf.status, Status::InfiniteProven);
    ASSERT_TRUE(inf.witness);
    EXPECT_EQ(*inf.witness->p3, ParabolicSpec::make(pair.group, {2, 2}, liecomb::Orientation::Opposite));
    EXPECT_TRUE(liecomb::is_product_open(*inf.witness->p2, *inf.witness->p3));
    const auto fin = finiteness_via_intersection(pair, B, KParabolicSpec {{{2}, {1, 1}}});
    EXPECT_EQ(fin.status, Status::FiniteProven);
}

TEST(Intersection, HermitianCaseQEqualsK)
{
    const auto ci = SymmetricPairSpec::ci(2);
    const auto v = finiteness_via_intersection(ci, ParabolicSpec::borel(ci.group), KParabolicSpec::whole(ci));
    EXPECT_EQ(v.status, Status::FiniteProven);
}

TEST(Intersection, NoExactVerdictWithoutBorel)
{
    const auto pair = SymmetricPairSpec::aiii(2, 2);
    const auto v = finiteness_via_intersection(pair, shape(pair.group, {1, 1, 2}), KParabolicSpec::borel(pair));
    EXPECT_NE(v.status, Status::InfiniteProven);
}

TEST(Intersection, AgreesWithTheFiveCaseTable)
{
    for (int n = 2; n <= 6; ++n) {
        for (int p = 1; 2 * p <= n; ++p) {
            const auto pair = SymmetricPairSpec::aiii(p, n - p);
            const auto B = ParabolicSpec::borel(pair.group);
            for (const auto& Q : fixtures::all_k_parabolics(pair)) {
                const auto c = classify_AIII_borel(p, n - p, Composition(Q.factors[0]), Composition(Q.factors[1]));
                const auto v = finiteness_via_intersection(pair, B, Q);
                EXPECT_EQ(c.primary != AiiiBorelCase::Infinite, v.status == Status::FiniteProven)
                    << pair.to_string() << " " << Q.to_string();
                EXPECT_NE(v.status, Status::Unknown);
            }
        }
    }
}

TEST(AiiiBorel, Examples)
{
    EXPECT_EQ(classify_AIII_borel(1, 5, Composition({1}), Composition({1, 1, 1, 1, 1})).primary, AiiiBorelCase::III);
    EXPECT_EQ(classify_AIII_borel(2, 3, Composition({2}), Composition({2, 1})).primary, AiiiBorelCase::IV);
    EXPECT_EQ(classify_AIII_borel(3, 3, Composition({3}), Composition({1, 1, 1})).primary, AiiiBorelCase::Infinite);
    EXPECT_EQ(classify_AIII_borel(3, 4, Composition({3}), Composition({4})).primary, AiiiBorelCase::I);
    EXPECT_EQ(classify_AIII_borel(3, 4, Composition({3}), Composition({1, 3})).primary, AiiiBorelCase::II);
    EXPECT_EQ(classify_AIII_borel(3, 4, Composition({2, 1}), Composition({4})).primary, AiiiBorelCase::V);
    EXPECT_THROW(classify_AIII_borel(3, 2, Composition({3}), Composition({2})), InvalidInput);
    EXPECT_THROW(classify_AIII_borel(2, 3, Composition({3}), Composition({2})), InvalidInput);
}

TEST(AiiiBorel, Mirabolic)
{
    EXPECT_TRUE(is_mirabolic({3, 1}));
    EXPECT_TRUE(is_mirabolic({1, 3}));
    EXPECT_FALSE(is_mirabolic({2, 2}));
    EXPECT_FALSE(is_mirabolic({1, 1, 2}));
}

TEST(Summary, Examples)
{
    const auto aii = SymmetricPairSpec::aii(4);
    const auto rows = summary_lookup(aii, shape(aii.group, {2, 2}), KParabolicSpec::borel(aii));
    ASSERT_FALSE(rows.empty());
    EXPECT_EQ(rows.front().citation(), "AII summary, row 1");
    const auto ci = SymmetricPairSpec::ci(2);
    const auto crow = summary_lookup(ci, shape(ci.group, {2, 2}), KParabolicSpec::borel(ci));
    ASSERT_FALSE(crow.empty());
    EXPECT_EQ(crow.front().citation(), "CI summary, row 1");
    const auto ai = SymmetricPairSpec::ai(3);
    EXPECT_TRUE(summary_lookup(ai, ParabolicSpec::borel(ai.group), KParabolicSpec::borel(ai)).empty());
}

TEST(Summary, CoveredCasesAreProven)
{
    std::vector<SymmetricPairSpec> pairs {SymmetricPairSpec::ai(3),      SymmetricPairSpec::ai(4),
                                          SymmetricPairSpec::aii(4),     SymmetricPairSpec::aiii(2, 2),
                                          SymmetricPairSpec::aiii(2, 3), SymmetricPairSpec::ci(2),
                                          SymmetricPairSpec::ci(3),      SymmetricPairSpec::cii(1, 2)};
    for (const auto& pair : pairs) {
        for (const auto& P : fixtures::all_parabolics(pair.group)) {
            for (const auto& Q : fixtures::all_k_parabolics(pair)) {
                if (summary_lookup(pair, P, Q).empty()) {
                    continue;
                }
                const auto a = finiteness_via_triple(pair, P, Q).status;
                const auto b = finiteness_via_intersection(pair, P, Q).status;
                EXPECT_TRUE(a == Status::FiniteProven || b == Status::FiniteProven)
                    << pair.to_string() << " P=" << P.to_string() << " Q=" << Q.to_string();
            }
        }
    }
}

TEST(Classify, MergesBothCriteria)
{
    const auto pair = SymmetricPairSpec::aiii(2, 2);
    const auto c = classify(pair, ParabolicSpec::borel(pair.group), KParabolicSpec::borel(pair));
    EXPECT_EQ(c.verdict.status, Status::InfiniteProven);
    EXPECT_FALSE(c.conflict);
    const auto d = classify(pair, shape(pair.group, {2, 2}), KParabolicSpec::borel(pair));
    EXPECT_EQ(d.verdict.status, Status::FiniteProven);
    EXPECT_FALSE(d.summary.empty());
}

TEST(Classify, ProvenVerdictsAlwaysCarryWitnesses)
{
    for (const auto& pair : {SymmetricPairSpec::aiii(1, 3), SymmetricPairSpec::ai(3), SymmetricPairSpec::cii(1, 1)}) {
        for (const auto& P : fixtures::all_parabolics(pair.group)) {
            for (const auto& Q : fixtures::all_k_parabolics(pair)) {
                const auto c = classify(pair, P, Q);
                EXPECT_EQ(c.verdict.status != Status::Unknown, c.verdict.witness.has_value());
                EXPECT_FALSE(c.conflict);
            }
        }
    }
}
