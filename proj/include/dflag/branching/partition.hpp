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
#include <compare>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "dflag/liecomb/types.hpp"

namespace dflag::branching {

/// A polynomial highest weight of GL_n: weakly decreasing nonnegative parts, trailing zeros dropped.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts)
        : parts_(std::move(parts))
    {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 0) {
                throw InvalidInput("partition parts must be nonnegative: " + liecomb::detail::join_ints(parts_));
            }
            if (i > 0 && parts_[i] > parts_[i - 1]) {
                throw InvalidInput("partition parts must be weakly decreasing: "
                                   + liecomb::detail::join_ints(parts_));
            }
        }
        while (!parts_.empty() && parts_.back() == 0) {
            parts_.pop_back();
        }
    }

    /// "2,1,0"; the empty string and "0" give the empty partition.
    static Partition parse(std::string_view text)
    {
        if (liecomb::detail::trim(text).empty()) {
            return Partition();
        }
        try {
            return Partition(liecomb::detail::parse_int_list(text, 0));
        } catch (const ParseError&) {
            throw;
        } catch (const InvalidInput& e) {
            throw ParseError(std::string(e.what()) + " (token '" + std::string(text) + "')");
        }
    }

    const std::vector<int>& parts() const noexcept { return parts_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    bool empty() const noexcept { return parts_.empty(); }

    /// Part i (0-based), zero beyond the length.
    int operator[](std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }

    bool contains(const Partition& mu) const
    {
        if (mu.length() > length()) {
            return false;
        }
        for (std::size_t i = 0; i < mu.parts_.size(); ++i) {
            if (mu.parts_[i] > parts_[i]) {
                return false;
            }
        }
        return true;
    }

    Partition scaled(int k) const
    {
        std::vector<int> v = parts_;
        for (int& x : v) {
            x *= k;
        }
        return Partition(std::move(v));
    }

    std::string to_string() const { return "(" + liecomb::detail::join_ints(parts_) + ")"; }

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

/// All partitions of n with at most `max_rows` rows and parts at most `max_part`, in reverse
/// lexicographic order.
inline std::vector<Partition> partitions_of(int n, int max_rows, int max_part = -1)
{
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rest, int cap) {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        if (static_cast<int>(cur.size()) == max_rows) {
            return;
        }
        for (int x = std::min(rest, cap); x >= 1; --x) {
            cur.push_back(x);
            rec(rest - x, x);
            cur.pop_back();
        }
    };
    rec(n, max_part < 0 ? n : max_part);
    return out;
}

/// Dimension of the GL_n irreducible with highest weight lambda (Weyl product formula).
inline std::uint64_t weyl_dim_gl(const Partition& lambda, int n)
{
    if (lambda.length() > n) {
        throw InvalidInput("weyl_dim_gl: " + lambda.to_string() + " has more than " + std::to_string(n) + " rows");
    }
    // prod_{i<j} (l_i - l_j + j - i) / (j - i), reduced as we go to keep the numbers small
    unsigned __int128 num = 1;
    unsigned __int128 den = 1;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            num *= static_cast<unsigned>(lambda[static_cast<std::size_t>(i)] - lambda[static_cast<std::size_t>(j)] + j - i);
            den *= static_cast<unsigned>(j - i);
            unsigned __int128 a = num;
            unsigned __int128 b = den;
            while (b != 0) {
                const auto t = a % b;
                a = b;
                b = t;
            }
            num /= a;
            den /= a;
        }
    }
    if (den != 1) {
        throw std::logic_error("weyl_dim_gl: non-integral dimension");
    }
    return static_cast<std::uint64_t>(num);
}

} // namespace dflag::branching
