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

#include <thread>
#include <vector>

#include "dflag/branching.hpp"
#include "support.hpp"

using namespace dflag;
using namespace dflag::branching;
using liecomb::GroupDatum;
using liecomb::ParabolicSpec;
using liecomb::SymmetricPairSpec;

namespace {

Partition P(std::vector<int> v) { return Partition(std::move(v)); }

std::vector<Partition> up_to(int max_size, int max_rows)
{
    std::vector<Partition> out;
    for (int s = 0; s <= max_size; ++s) {
        for (auto& p : partitions_of(s, max_rows)) {
            out.push_back(std::move(p));
        }
    }
    return out;
}

} // namespace

TEST(Partition, ParseAndValidate)
{
    EXPECT_EQ(Partition::parse("2,1,0"), P({2, 1}));
    EXPECT_EQ(P({2, 1}).to_string(), "(2,1)");
    EXPECT_EQ(Partition().to_string(), "()");
    EXPECT_THROW(Partition::parse("1,2"), InvalidInput);
    EXPECT_THROW(Partition::parse("2,-1"), InvalidInput);
    EXPECT_EQ(partitions_of(4, 4).size(), 5u);
    EXPECT_EQ(partitions_of(4, 2).size(), 3u);
}

TEST(LR, Examples)
{
    EXPECT_EQ(lr_coefficient(P({2}), P({1}), P({1})), 1u);
    EXPECT_EQ(lr_coefficient(P({2, 1}), P({1}), P({1, 1})), 1u);
    EXPECT_EQ(lr_coefficient(P({3, 2, 1}), P({2, 1}), P({2, 1})), 2u);
    EXPECT_EQ(lr_coefficient(P({3, 1}), P({2, 1}), P({1})), 1u);
    EXPECT_EQ(lr_coefficient(P({2}), P({1}), P({2})), 0u);
    EXPECT_FALSE(lr_sizes_match(P({2}), P({1}), P({2})));
}

TEST(LR, Symmetry)
{
    const auto ps = up_to(6, 6);
    for (const auto& nu : ps) {
        for (const auto& a : ps) {
            for (const auto& b : ps) {
                if (a.size() + b.size() == nu.size()) {
                    EXPECT_EQ(lr_coefficient(nu, a, b), lr_coefficient(nu, b, a));
                }
            }
        }
    }
}

TEST(LR, PieriAddsOneBox)
{
    // c^nu_{lambda,(1)} is 1 exactly when nu is lambda plus one addable box
    for (const auto& l : up_to(5, 5)) {
        std::uint64_t total = 0;
        for (const auto& nu : partitions_of(l.size() + 1, l.size() + 1)) {
            total += lr_coefficient(nu, l, P({1}));
        }
        std::uint64_t corners = 0;
        for (int i = 0; i <= l.length(); ++i) {
            if (i == 0 || l[static_cast<std::size_t>(i)] < l[static_cast<std::size_t>(i - 1)]) {
                ++corners;
            }
        }
        EXPECT_EQ(total, corners) << l.to_string();
    }
}

TEST(LR, ConcurrentCallsAgree)
{
    std::vector<std::uint64_t> got(4);
    std::vector<std::thread> ts;
    for (int t = 0; t < 4; ++t) {
        ts.emplace_back([&, t] { got[static_cast<std::size_t>(t)] = lr_coefficient(P({4, 3, 2, 1}), P({3, 2, 1}), P({2, 1, 1})); });
    }
    for (auto& t : ts) {
        t.join();
    }
    for (auto v : got) {
        EXPECT_EQ(v, got[0]);
    }
}

TEST(Restrict, Examples)
{
    const auto one = restrict_to_levi(P({1}), 1, 1);
    EXPECT_EQ(one.terms.size(), 2u);
    EXPECT_EQ(one.terms.at({P({1}), P({})}), 1u);
    EXPECT_EQ(one.terms.at({P({}), P({1})}), 1u);
    const auto six = restrict_to_levi(P({2, 1}), 2, 2);
    EXPECT_EQ(six.terms.size(), 6u);
    EXPECT_TRUE(six.multiplicity_free());
    const auto big = restrict_to_levi(P({3, 2, 1}), 2, 2);
    EXPECT_EQ(big.terms.at({P({2, 1}), P({2, 1})}), 2u);
    EXPECT_FALSE(big.multiplicity_free());
    EXPECT_THROW(restrict_to_levi(P({1, 1, 1}), 1, 1), InvalidInput);
}

TEST(Restrict, DimensionAudit)
{
    for (int n = 2; n <= 4; ++n) {
        for (const auto& l : up_to(6, n)) {
            for (int p = 1; p < n; ++p) {
                std::uint64_t total = 0;
                for (const auto& [k, m] : restrict_to_levi(l, p, n - p).terms) {
                    total += m * weyl_dim_gl(k.first, p) * weyl_dim_gl(k.second, n - p);
                }
                EXPECT_EQ(total, weyl_dim_gl(l, n));
            }
        }
    }
}

TEST(Tensor, Examples)
{
    const auto sq = tensor_decompose(P({1}), P({1}), 2);
    EXPECT_EQ(sq.terms.size(), 2u);
    EXPECT_EQ(sq.terms.at(P({2})), 1u);
    EXPECT_EQ(sq.terms.at(P({1, 1})), 1u);
    EXPECT_EQ(tensor_decompose(P({2, 1}), P({2, 1}), 3).terms.at(P({3, 2, 1})), 2u);
    for (int k = 1; k <= 6; ++k) {
        for (int n = 1; n <= 4; ++n) {
            EXPECT_TRUE(tensor_decompose(P({k}), P({1}), n).multiplicity_free());
        }
    }
}

TEST(Tensor, DimensionAuditAndPieri)
{
    for (int n = 1; n <= 4; ++n) {
        const auto ps = up_to(6, n);
        for (const auto& a : ps) {
            for (const auto& b : ps) {
                if (a.size() + b.size() > 8) {
                    continue;
                }
                std::uint64_t total = 0;
                for (const auto& [k, m] : tensor_decompose(a, b, n).terms) {
                    total += m * weyl_dim_gl(k, n);
                }
                EXPECT_EQ(total, weyl_dim_gl(a, n) * weyl_dim_gl(b, n));
            }
            for (int k = 1; k <= 4; ++k) {
                EXPECT_TRUE(tensor_decompose(a, P({k}), n).multiplicity_free());
            }
        }
    }
}

TEST(WeylDim, Examples)
{
    EXPECT_EQ(weyl_dim_gl(P({1}), 3), 3u);
    EXPECT_EQ(weyl_dim_gl(P({2, 1}), 3), 8u);
    EXPECT_EQ(weyl_dim_gl(P({}), 5), 1u);
    EXPECT_EQ(weyl_dim_gl(P({2}), 4), 10u);
    EXPECT_THROW(weyl_dim_gl(P({1, 1}), 1), InvalidInput);
}

TEST(HighestWeight, Examples)
{
    EXPECT_EQ(highest_weight_of_parabolic(ParabolicSpec::make(GroupDatum::gl(4), {2, 2})), P({1, 1}));
    EXPECT_EQ(highest_weight_of_parabolic(ParabolicSpec::make(GroupDatum::gl(3), {1, 1, 1})), P({2, 1}));
    EXPECT_EQ(highest_weight_of_parabolic(ParabolicSpec::make(GroupDatum::gl(4), {1, 3})), P({1}));
    EXPECT_THROW(highest_weight_of_parabolic(ParabolicSpec::make(GroupDatum::sp(2), {2, 2})), InvalidInput);
}

TEST(Probes, Restriction)
{
    const auto g3 = GroupDatum::gl(3);
    EXPECT_TRUE(spherical_probe_restriction(ParabolicSpec::make(g3, {1, 2}), 1, 2, 6).multiplicity_free);
    const auto borel = spherical_probe_restriction(ParabolicSpec::borel(GroupDatum::gl(4)), 2, 2, 3);
    EXPECT_FALSE(borel.multiplicity_free);
    ASSERT_TRUE(borel.failing_k);
    EXPECT_EQ(*borel.failing_k, 1);
    EXPECT_EQ(borel.witness->first, (PairPartition {P({2, 1}), P({2, 1})}));
    EXPECT_TRUE(spherical_probe_restriction(ParabolicSpec::borel(GroupDatum::gl(2)), 1, 1, 6).multiplicity_free);
}

TEST(Probes, Tensor)
{
    const auto p22 = SymmetricPairSpec::aiii(2, 2);
    EXPECT_TRUE(spherical_probe_tensor(ParabolicSpec::make(p22.group, {2, 2}), p22, 3, 3).multiplicity_free);
    const auto ai = SymmetricPairSpec::ai(3);
    const auto t = spherical_probe_tensor(ParabolicSpec::borel(ai.group), ai, 2, 2);
    EXPECT_FALSE(t.multiplicity_free);
    for (int n = 2; n <= 5; ++n) {
        const auto pair = SymmetricPairSpec::aiii(1, n - 1);
        EXPECT_TRUE(spherical_probe_tensor(ParabolicSpec::make(pair.group, {1, n - 1}), pair, 1, 1).multiplicity_free);
    }
}

TEST(Probes, TensorImpliesRestriction)
{
    for (int n = 2; n <= 5; ++n) {
        for (const auto& P : fixtures::all_parabolics(GroupDatum::gl(n))) {
            for (int p = 1; p < n; ++p) {
                const auto pair = SymmetricPairSpec::aiii(p, n - p);
                if (spherical_probe_tensor(P, pair, 3, 3).multiplicity_free) {
                    EXPECT_TRUE(spherical_probe_restriction(P, p, n - p, 3).multiplicity_free)
                        << pair.to_string() << " " << P.to_string();
                }
            }
        }
    }
}
