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

#pragma once

#include <vector>

#include "dflag/liecomb.hpp"

namespace dflag::fixtures {

/// Palindromic compositions of n with any middle part (isotropic flag types for SO_n).
inline std::vector<std::vector<int>> orthogonal_shapes_of(int n)
{
    std::vector<std::vector<int>> out;
    for (int k = 0; 2 * k <= n; ++k) {
        for (const auto& half : liecomb::compositions_of(k)) {
            if (half.empty() && n == 2 * k) {
                continue;
            }
            out.push_back(liecomb::PalindromicComposition(half, n - 2 * k).full());
        }
    }
    return out;
}

/// Every parabolic of K in factor-shape form.
inline std::vector<liecomb::KParabolicSpec> all_k_parabolics(const liecomb::SymmetricPairSpec& pair)
{
    using liecomb::PairKind;
    std::vector<liecomb::KParabolicSpec> out;
    switch (pair.kind) {
    case PairKind::AIII:
        for (const auto& a : liecomb::compositions_of(pair.p)) {
            for (const auto& b : liecomb::compositions_of(pair.q)) {
                out.push_back({{a, b}});
            }
        }
        break;
    case PairKind::CII:
        for (const auto& a : liecomb::symplectic_shapes_of(pair.p)) {
            for (const auto& b : liecomb::symplectic_shapes_of(pair.q)) {
                out.push_back({{a, b}});
            }
        }
        break;
    case PairKind::CI:
        for (const auto& a : liecomb::compositions_of(pair.group.n)) {
            out.push_back({{a}});
        }
        break;
    case PairKind::AI:
        for (const auto& a : orthogonal_shapes_of(pair.group.n)) {
            out.push_back({{a}});
        }
        break;
    case PairKind::AII:
        for (const auto& a : liecomb::symplectic_shapes_of(pair.group.n / 2)) {
            out.push_back({{a}});
        }
        break;
    }
    return out;
}

/// Every standard parabolic of the group, the whole group included.
inline std::vector<liecomb::ParabolicSpec> all_parabolics(const liecomb::GroupDatum& g)
{
    std::vector<liecomb::ParabolicSpec> out;
    const auto shapes = g.is_type_a() ? liecomb::compositions_of(g.n) : liecomb::symplectic_shapes_of(g.n);
    for (const auto& s : shapes) {
        out.push_back(liecomb::ParabolicSpec::make(g, s));
    }
    return out;
}

} // namespace dflag::fixtures
