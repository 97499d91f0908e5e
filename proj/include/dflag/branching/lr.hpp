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

#include <array>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "dflag/branching/partition.hpp"

namespace dflag::branching {

/// Multiplicities of the irreducible constituents, keyed by highest weight.
template <typename Target>
struct LRDecomposition {
    std::map<Target, std::uint64_t> terms;

    bool multiplicity_free() const
    {
        return std::all_of(terms.begin(), terms.end(), [](const auto& t) { return t.second == 1; });
    }

    /// First constituent (in key order) with multiplicity > 1.
    std::optional<std::pair<Target, std::uint64_t>> first_repeated() const
    {
        for (const auto& [k, m] : terms) {
            if (m > 1) {
                return std::make_pair(k, m);
            }
        }
        return std::nullopt;
    }
};

using PairPartition = std::pair<Partition, Partition>;

namespace detail {

/// Littlewood-Richardson tableaux of shape nu / inner with the given content, built one label
/// at a time: label j fills a horizontal strip, and in every row r the j's in rows <= r never
/// outnumber the (j-1)'s in rows < r (lattice condition). `visit` gets each final shape nu.
template <typename Visit>
void lr_tableaux(const Partition& inner, const Partition& content, int max_rows, const Partition* outer,
                 Visit&& visit)
{
    const auto rows = static_cast<std::size_t>(max_rows);
    std::vector<int> shape(rows, 0);
    for (std::size_t r = 0; r < rows; ++r) {
        shape[r] = inner[r];
    }
    const auto labels = static_cast<std::size_t>(content.length());
    // cum[j][r] = number of label j in rows < r
    std::vector<std::vector<int>> cum(labels, std::vector<int>(rows + 1, 0));
    std::vector<int> old;

    std::function<void(std::size_t)> next_label;
    std::function<void(std::size_t, std::size_t, int, const std::vector<int>&)> fill_row;

    fill_row = [&](std::size_t j, std::size_t r, int remaining, const std::vector<int>& before) {
        if (remaining == 0) {
            for (std::size_t s = r; s < rows; ++s) {
                cum[j][s + 1] = cum[j][s];
            }
            next_label(j + 1);
            return;
        }
        if (r == rows) {
            return;
        }
        int cap = remaining;
        if (r > 0) {
            cap = std::min(cap, before[r - 1] - shape[r]);
        }
        if (outer != nullptr) {
            cap = std::min(cap, (*outer)[r] - shape[r]);
        }
        if (j > 0) {
            cap = std::min(cap, cum[j - 1][r] - cum[j][r]);
        }
        for (int a = cap; a >= 0; --a) {
            shape[r] += a;
            cum[j][r + 1] = cum[j][r] + a;
            fill_row(j, r + 1, remaining - a, before);
            shape[r] -= a;
        }
    };

    next_label = [&](std::size_t j) {
        if (j == labels) {
            visit(shape);
            return;
        }
        const std::vector<int> before = shape;
        fill_row(j, 0, content[j], before);
    };
    next_label(0);
}

} // namespace detail

/// c^outer_{inner1, inner2}; 0 when the sizes do not add up (see lr_sizes_match).
inline std::uint64_t lr_coefficient(const Partition& outer, const Partition& inner1, const Partition& inner2)
{
    if (outer.size() != inner1.size() + inner2.size() || !outer.contains(inner1) || !outer.contains(inner2)) {
        return 0;
    }
    static std::mutex mu;
    static std::map<std::array<Partition, 3>, std::uint64_t> memo;
    const std::array<Partition, 3> key {outer, inner1, inner2};
    {
        std::lock_guard<std::mutex> lock(mu);
        if (const auto it = memo.find(key); it != memo.end()) {
            return it->second;
        }
    }
    std::uint64_t count = 0;
    detail::lr_tableaux(inner1, inner2, outer.length(), &outer, [&](const std::vector<int>&) { ++count; });
    std::lock_guard<std::mutex> lock(mu);
    memo.emplace(key, count);
    return count;
}

inline bool lr_sizes_match(const Partition& outer, const Partition& inner1, const Partition& inner2)
{
    return outer.size() == inner1.size() + inner2.size();
}

/// V_lambda tensor V_mu for GL_n, constituents with at most n rows.
inline LRDecomposition<Partition> tensor_decompose(const Partition& lambda, const Partition& mu, int n)
{
    if (lambda.length() > n || mu.length() > n) {
        throw InvalidInput("tensor_decompose: weights must have at most " + std::to_string(n) + " rows");
    }
    LRDecomposition<Partition> out;
    detail::lr_tableaux(lambda, mu, n, nullptr, [&](const std::vector<int>& shape) { ++out.terms[Partition(shape)]; });
    return out;
}

/// Restriction of V_lambda from GL_{p+q} to GL_p x GL_q.
inline LRDecomposition<PairPartition> restrict_to_levi(const Partition& lambda, int p, int q)
{
    if (p < 1 || q < 1) {
        throw InvalidInput("restrict_to_levi needs p, q >= 1");
    }
    if (lambda.length() > p + q) {
        throw InvalidInput("restrict_to_levi: " + lambda.to_string() + " has more than p + q rows");
    }
    LRDecomposition<PairPartition> out;
    // mu ranges over partitions inside lambda with at most p rows
    std::vector<int> mu;
    std::function<void(std::size_t, int)> rec = [&](std::size_t r, int cap) {
        const Partition m(mu);
        const int rest = lambda.size() - m.size();
        for (const auto& nu : partitions_of(rest, q, lambda[0])) {
            if (!lambda.contains(nu)) {
                continue;
            }
            if (const auto c = lr_coefficient(lambda, m, nu); c > 0) {
                out.terms[{m, nu}] = c;
            }
        }
        if (static_cast<int>(r) == p) {
            return;
        }
        for (int x = 1; x <= std::min(cap, lambda[r]); ++x) {
            mu.push_back(x);
            rec(r + 1, x);
            mu.pop_back();
        }
    };
    rec(0, lambda[0]);
    return out;
}

} // namespace dflag::branching
