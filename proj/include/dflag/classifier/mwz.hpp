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

#include <algorithm>
#include <array>
#include <set>
#include <string>
#include <vector>

#include "dflag/liecomb/types.hpp"

// Triple flag varieties X_lambda x X_mu x X_nu of finite type under the diagonal group action.
//
// Type A (GL_n), lengths (l(X), l(Y), l(Z)) up to reordering:
//   S_{q,r}       (2, q, r)  X = (n-1, 1)
//   D_{r+2}       (2, 2, r)
//   E_6/E_7/E_8   (2, 3, 3/4/5)
//   E^{(a)}_{r+3} (2, 3, r)  X = (n-2, 2), n >= 4
//   E^{(b)}_{r+3} (2, 3, r)  Y has a part equal to 1
// Type C (Sp_2n), same conventions:
//   SpD_{r+2}       (2, 2, r)  X = Y = (n, n)
//   SpE_6/7/8       (2, 3, 3/4/5)  X = (n, n)
//   SpE^{(b)}_{r+3} (2, 3, r)  X = (n, n), Y = (1, 2n-2, 1), r >= 3
//   SpY_{4,r}       (3, 3, r)  X = Y = (1, 2n-2, 1), r >= 3

namespace dflag::classifier {

enum class RowFamily { S, D, E6, E7, E8, Ea, Eb, SpD, SpE6, SpE7, SpE8, SpEb, SpY };

struct TableRow {
    RowFamily family;
    int q = 0;
    int r = 0;

    static std::string subscript(int k)
    {
        const auto s = std::to_string(k);
        return s.size() == 1 ? "_" + s : "_{" + s + "}";
    }

    /// Instantiated label, e.g. S_{4,4}, D_4, E^{(b)}_6, SpY_{4,3}.
    std::string label() const
    {
        switch (family) {
        case RowFamily::S:
            return "S_{" + std::to_string(q) + "," + std::to_string(r) + "}";
        case RowFamily::D:
            return "D" + subscript(r + 2);
        case RowFamily::E6:
            return "E_6";
        case RowFamily::E7:
            return "E_7";
        case RowFamily::E8:
            return "E_8";
        case RowFamily::Ea:
            return "E^{(a)}" + subscript(r + 3);
        case RowFamily::Eb:
            return "E^{(b)}" + subscript(r + 3);
        case RowFamily::SpD:
            return "SpD" + subscript(r + 2);
        case RowFamily::SpE6:
            return "SpE_6";
        case RowFamily::SpE7:
            return "SpE_7";
        case RowFamily::SpE8:
            return "SpE_8";
        case RowFamily::SpEb:
            return "SpE^{(b)}" + subscript(r + 3);
        case RowFamily::SpY:
            return "SpY_{4," + std::to_string(r) + "}";
        }
        return "?";
    }

    /// Row name as it appears in the classification list, e.g. S_{q,r}.
    std::string family_label() const
    {
        switch (family) {
        case RowFamily::S:
            return "S_{q,r}";
        case RowFamily::D:
            return "D_{r+2}";
        case RowFamily::E6:
            return "E_6";
        case RowFamily::E7:
            return "E_7";
        case RowFamily::E8:
            return "E_8";
        case RowFamily::Ea:
            return "E^{(a)}_{r+3}";
        case RowFamily::Eb:
            return "E^{(b)}_{r+3}";
        case RowFamily::SpD:
            return "SpD_{r+2}";
        case RowFamily::SpE6:
            return "SpE_6";
        case RowFamily::SpE7:
            return "SpE_7";
        case RowFamily::SpE8:
            return "SpE_8";
        case RowFamily::SpEb:
            return "SpE^{(b)}_{r+3}";
        case RowFamily::SpY:
            return "SpY_{4,r}";
        }
        return "?";
    }

    bool is_symplectic() const { return family >= RowFamily::SpD; }

    auto operator<=>(const TableRow&) const = default;
};

struct TripleFlagVerdict {
    bool finite = false;
    std::vector<TableRow> matched_rows;
    /// Parts sorted descending within each entry, entries ordered by (length, parts).
    std::array<std::vector<int>, 3> normalized_triple;
    std::vector<std::string> notes;
};

namespace detail {

inline std::array<std::vector<int>, 3> normalize_triple(std::array<std::vector<int>, 3> t)
{
    for (auto& c : t) {
        c = liecomb::detail::sorted_desc(c);
    }
    std::sort(t.begin(), t.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) {
            return a.size() < b.size();
        }
        return a < b;
    });
    return t;
}

inline bool has_part_one(const std::vector<int>& v) { return std::find(v.begin(), v.end(), 1) != v.end(); }

inline constexpr std::array<std::array<int, 3>, 6> kSlotOrders {{
    {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};

inline TripleFlagVerdict finish(std::set<TableRow> rows, std::array<std::vector<int>, 3> triple)
{
    TripleFlagVerdict v;
    v.matched_rows.assign(rows.begin(), rows.end());
    v.finite = !v.matched_rows.empty();
    v.normalized_triple = normalize_triple(std::move(triple));
    return v;
}

} // namespace detail

/// Classifies the GL_n triple flag variety of (lambda, mu, nu), trying every slot assignment.
inline TripleFlagVerdict mwz_classify_A(const liecomb::Composition& lambda, const liecomb::Composition& mu,
                                        const liecomb::Composition& nu)
{
    const int n = lambda.size();
    if (mu.size() != n || nu.size() != n) {
        throw InvalidInput("mwz_classify_A: compositions have different sizes (" + std::to_string(lambda.size())
                           + ", " + std::to_string(mu.size()) + ", " + std::to_string(nu.size()) + ")");
    }
    const std::array<const liecomb::Composition*, 3> in {&lambda, &mu, &nu};
    for (const auto* c : in) {
        if (c->length() < 2) {
            throw InvalidInput("mwz_classify_A: improper parabolic (composition " + c->to_string()
                               + " has length 1)");
        }
    }
    std::set<TableRow> rows;
    bool used_eb = false;
    for (const auto& order : detail::kSlotOrders) {
        const auto X = in[static_cast<std::size_t>(order[0])]->sorted_desc();
        const auto Y = in[static_cast<std::size_t>(order[1])]->sorted_desc();
        const auto Z = in[static_cast<std::size_t>(order[2])]->sorted_desc();
        const int lx = static_cast<int>(X.size());
        const int ly = static_cast<int>(Y.size());
        const int lz = static_cast<int>(Z.size());
        if (lx != 2) {
            continue;
        }
        if (X == std::vector<int> {n - 1, 1}) {
            rows.insert({RowFamily::S, std::min(ly, lz), std::max(ly, lz)});
        }
        if (ly == 2) {
            rows.insert({RowFamily::D, 0, lz});
        }
        if (ly == 3) {
            if (lz == 3) {
                rows.insert({RowFamily::E6});
            } else if (lz == 4) {
                rows.insert({RowFamily::E7});
            } else if (lz == 5) {
                rows.insert({RowFamily::E8});
            }
            if (n >= 4 && X == std::vector<int> {n - 2, 2}) {
                rows.insert({RowFamily::Ea, 0, lz});
            }
            if (detail::has_part_one(Y)) {
                rows.insert({RowFamily::Eb, 0, lz});
                used_eb = true;
            }
        }
    }
    auto v = detail::finish(std::move(rows), {lambda.parts(), mu.parts(), nu.parts()});
    if (used_eb) {
        v.notes.push_back("E^{(b)}: the part 1 of the length-3 entry is accepted in any position");
    }
    return v;
}

/// Classifies the Sp_2n triple flag variety of three symplectic shapes.
inline TripleFlagVerdict mwz_classify_C(const liecomb::SymplecticComposition& lambda,
                                        const liecomb::SymplecticComposition& mu,
                                        const liecomb::SymplecticComposition& nu)
{
    const int n = lambda.rank();
    if (mu.rank() != n || nu.rank() != n) {
        throw InvalidInput("mwz_classify_C: compositions have different sizes");
    }
    const std::array<const liecomb::SymplecticComposition*, 3> in {&lambda, &mu, &nu};
    for (const auto* c : in) {
        if (c->length() < 2) {
            throw InvalidInput("mwz_classify_C: improper parabolic (composition " + c->to_string()
                               + " has length 1)");
        }
    }
    const std::vector<int> siegel {n, n};
    const auto line = liecomb::detail::sorted_desc({1, 2 * n - 2, 1});
    std::set<TableRow> rows;
    for (const auto& order : detail::kSlotOrders) {
        const auto X = in[static_cast<std::size_t>(order[0])]->sorted_desc();
        const auto Y = in[static_cast<std::size_t>(order[1])]->sorted_desc();
        const auto Z = in[static_cast<std::size_t>(order[2])]->sorted_desc();
        const int lx = static_cast<int>(X.size());
        const int ly = static_cast<int>(Y.size());
        const int lz = static_cast<int>(Z.size());
        if (lx == 2 && ly == 2 && X == siegel && Y == siegel) {
            rows.insert({RowFamily::SpD, 0, lz});
        }
        if (lx == 2 && ly == 3 && X == siegel) {
            if (lz == 3) {
                rows.insert({RowFamily::SpE6});
            } else if (lz == 4) {
                rows.insert({RowFamily::SpE7});
            } else if (lz == 5) {
                rows.insert({RowFamily::SpE8});
            }
            if (n >= 2 && Y == line && lz >= 3) {
                rows.insert({RowFamily::SpEb, 0, lz});
            }
        }
        if (n >= 2 && lx == 3 && ly == 3 && X == line && Y == line && lz >= 3) {
            rows.insert({RowFamily::SpY, 4, lz});
        }
    }
    return detail::finish(std::move(rows), {lambda.full(), mu.full(), nu.full()});
}

/// Triple verdict for three parabolics of the same group, dispatching on the family.
/// Improper members are rejected, as in mwz_classify_A/C.
inline TripleFlagVerdict mwz_classify(const liecomb::ParabolicSpec& a, const liecomb::ParabolicSpec& b,
                                      const liecomb::ParabolicSpec& c)
{
    if (a.group != b.group || a.group != c.group) {
        throw InvalidInput("mwz_classify: parabolics of different groups");
    }
    if (a.group.is_type_a()) {
        return mwz_classify_A(a.shape_a(), b.shape_a(), c.shape_a());
    }
    return mwz_classify_C(a.shape_c(), b.shape_c(), c.shape_c());
}

} // namespace dflag::classifier
