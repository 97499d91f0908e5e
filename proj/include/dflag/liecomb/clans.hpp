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
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "dflag/errors.hpp"

namespace dflag::liecomb {

/// A clan of signature (p, q): a word over {+, -} and pair labels, each label used twice.
///
/// Labels are numbered 1, 2, ... by first occurrence, so equal clans are equal sequences.
struct Clan {
    static constexpr int kPlus = -1;
    static constexpr int kMinus = -2;

    std::vector<int> symbols;

    std::string to_string() const
    {
        std::string out = "(";
        for (std::size_t i = 0; i < symbols.size(); ++i) {
            if (i != 0) {
                out += ",";
            }
            const int s = symbols[i];
            out += s == kPlus ? "+" : s == kMinus ? "-" : std::to_string(s);
        }
        return out + ")";
    }

    auto operator<=>(const Clan&) const = default;
};

/// All clans of signature (p, q) in lexicographic order of their symbol sequences.
inline std::vector<Clan> enumerate_clans(int p, int q)
{
    if (p < 0 || q < 0 || p + q < 1) {
        throw InvalidInput("enumerate_clans needs p, q >= 0 and p + q >= 1");
    }
    const int n = p + q;
    std::vector<Clan> out;
    std::vector<int> word;
    std::vector<int> open; // labels seen once
    int next_label = 1;
    int plus = 0;
    int minus = 0;
    std::function<void()> rec = [&]() {
        const int pos = static_cast<int>(word.size());
        const int remaining = n - pos;
        if (remaining < static_cast<int>(open.size())) {
            return;
        }
        if (remaining == 0) {
            if (open.empty() && plus - minus == p - q) {
                out.push_back(Clan {word});
            }
            return;
        }
        word.push_back(Clan::kPlus);
        ++plus;
        rec();
        --plus;
        word.back() = Clan::kMinus;
        ++minus;
        rec();
        --minus;
        word.pop_back();
        for (std::size_t i = 0; i < open.size(); ++i) {
            const int label = open[i];
            open.erase(open.begin() + static_cast<std::ptrdiff_t>(i));
            word.push_back(label);
            rec();
            word.pop_back();
            open.insert(open.begin() + static_cast<std::ptrdiff_t>(i), label);
        }
        open.push_back(next_label);
        word.push_back(next_label++);
        rec();
        word.pop_back();
        --next_label;
        open.pop_back();
    };
    rec();
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace dflag::liecomb
