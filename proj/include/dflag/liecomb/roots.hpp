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

#include <set>
#include <string>
#include <vector>

#include "dflag/liecomb/types.hpp"

namespace dflag::liecomb {

/// A root as its coefficient vector in the basis e_1..e_n of the weight lattice.
///
/// Type A roots are e_i - e_j; type C roots are +-e_i +- e_j and +-2e_i. A root is positive
/// (for the upper-triangular Borel) iff its first nonzero coefficient is positive.
struct Root {
    std::vector<int> coeffs;

    bool is_positive() const
    {
        for (int c : coeffs) {
            if (c != 0) {
                return c > 0;
            }
        }
        return false;
    }

    std::string to_string() const
    {
        std::string out;
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            const int c = coeffs[i];
            if (c == 0) {
                continue;
            }
            out += c > 0 ? (out.empty() ? "" : "+") : "-";
            if (c == 2 || c == -2) {
                out += "2";
            }
            out += "e" + std::to_string(i + 1);
        }
        return out;
    }

    auto operator<=>(const Root&) const = default;
};

using RootSet = std::set<Root>;

namespace detail {

/// Weight of the coordinate vector at 0-based position `a` of the natural module.
/// For Sp_2n with the anti-diagonal form, positions n..2n-1 carry -e_n..-e_1.
inline std::vector<int> position_weight(const GroupDatum& g, int a)
{
    std::vector<int> w(static_cast<std::size_t>(g.n), 0);
    if (g.is_type_a() || a < g.n) {
        w[static_cast<std::size_t>(a)] = 1;
    } else {
        w[static_cast<std::size_t>(2 * g.n - 1 - a)] = -1;
    }
    return w;
}

} // namespace detail

/// Root of the matrix entry (row, col), 0-based, row != col.
inline Root root_at(const GroupDatum& g, int row, int col)
{
    auto a = detail::position_weight(g, row);
    const auto b = detail::position_weight(g, col);
    for (std::size_t i = 0; i < a.size(); ++i) {
        a[i] -= b[i];
    }
    return Root {a};
}

/// The type-A root (i, j) = e_i - e_j with 1-based indices.
inline Root type_a_root(int n, int i, int j) { return root_at(GroupDatum::gl(n), i - 1, j - 1); }

inline RootSet full_root_system(const GroupDatum& g)
{
    RootSet out;
    const int d = g.dim();
    for (int a = 0; a < d; ++a) {
        for (int b = 0; b < d; ++b) {
            if (a != b) {
                out.insert(root_at(g, a, b));
            }
        }
    }
    return out;
}

inline RootSet positive_roots(const GroupDatum& g)
{
    RootSet out;
    for (const auto& r : full_root_system(g)) {
        if (r.is_positive()) {
            out.insert(r);
        }
    }
    return out;
}

/// True when the matrix entry (row, col) lies in Lie(P) for P's block structure.
inline bool entry_in_parabolic(const ParabolicSpec& P, const std::vector<int>& block_of, int row, int col)
{
    return P.orientation == Orientation::Standard ? block_of[static_cast<std::size_t>(row)]
                                                         <= block_of[static_cast<std::size_t>(col)]
                                                  : block_of[static_cast<std::size_t>(row)]
                                                         >= block_of[static_cast<std::size_t>(col)];
}

/// Roots whose root spaces lie in Lie(P): the Levi roots plus the nilradical on P's side.
inline RootSet parabolic_root_set(const ParabolicSpec& P)
{
    P.validate();
    RootSet out;
    const auto block_of = P.block_of_position();
    const int d = P.group.dim();
    for (int a = 0; a < d; ++a) {
        for (int b = 0; b < d; ++b) {
            if (a != b && entry_in_parabolic(P, block_of, a, b)) {
                out.insert(root_at(P.group, a, b));
            }
        }
    }
    return out;
}

/// Levi roots of P (entries inside a diagonal block).
inline RootSet levi_root_set(const ParabolicSpec& P)
{
    RootSet out;
    const auto block_of = P.block_of_position();
    const int d = P.group.dim();
    for (int a = 0; a < d; ++a) {
        for (int b = 0; b < d; ++b) {
            if (a != b && block_of[static_cast<std::size_t>(a)] == block_of[static_cast<std::size_t>(b)]) {
                out.insert(root_at(P.group, a, b));
            }
        }
    }
    return out;
}

/// Lie(P2) + Lie(P3) = Lie(G), i.e. the product P2 P3 is open in G.
inline bool is_product_open(const ParabolicSpec& P2, const ParabolicSpec& P3)
{
    if (P2.group != P3.group) {
        throw InvalidInput("is_product_open: parabolics of different groups (" + P2.group.to_string()
                           + " vs " + P3.group.to_string() + ")");
    }
    RootSet u = parabolic_root_set(P2);
    const RootSet r3 = parabolic_root_set(P3);
    u.insert(r3.begin(), r3.end());
    return u == full_root_system(P2.group);
}

/// The parabolic with the same blocks and the other orientation.
inline ParabolicSpec opposite(const ParabolicSpec& P)
{
    auto out = P;
    out.orientation = P.orientation == Orientation::Standard ? Orientation::Opposite : Orientation::Standard;
    return out;
}

} // namespace dflag::liecomb
