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
#include <cstdlib>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "dflag/liecomb/roots.hpp"

namespace dflag::liecomb {

/// A Weyl group element as a signed permutation: images()[i-1] = +-w(i).
///
/// Type A elements never carry signs. Composition is (u * w)(i) = u(w(i)).
class WeylElement {
public:
    explicit WeylElement(std::vector<int> images, bool signed_allowed = false)
        : images_(std::move(images))
    {
        const int n = static_cast<int>(images_.size());
        std::vector<bool> seen(static_cast<std::size_t>(n), false);
        for (int x : images_) {
            const int a = std::abs(x);
            if (a < 1 || a > n || seen[static_cast<std::size_t>(a - 1)]) {
                throw InvalidInput("Weyl element is not a (signed) permutation");
            }
            if (x < 0 && !signed_allowed) {
                throw InvalidInput("type A Weyl elements carry no signs");
            }
            seen[static_cast<std::size_t>(a - 1)] = true;
        }
    }

    static WeylElement identity(int n)
    {
        std::vector<int> v(static_cast<std::size_t>(n));
        std::iota(v.begin(), v.end(), 1);
        return WeylElement(std::move(v));
    }

    const std::vector<int>& images() const noexcept { return images_; }
    int n() const noexcept { return static_cast<int>(images_.size()); }

    /// Image of the signed index k (1-based, sign carried along).
    int apply(int k) const
    {
        const int v = images_[static_cast<std::size_t>(std::abs(k) - 1)];
        return k < 0 ? -v : v;
    }

    WeylElement operator*(const WeylElement& w) const
    {
        std::vector<int> out(images_.size());
        for (std::size_t i = 0; i < out.size(); ++i) {
            out[i] = apply(w.images_[i]);
        }
        return WeylElement(std::move(out), true);
    }

    WeylElement inverse() const
    {
        std::vector<int> out(images_.size());
        for (std::size_t i = 0; i < images_.size(); ++i) {
            const int x = images_[i];
            const int sign = x < 0 ? -1 : 1;
            out[static_cast<std::size_t>(std::abs(x) - 1)] = sign * static_cast<int>(i + 1);
        }
        return WeylElement(std::move(out), true);
    }

    /// Action on weight coefficient vectors: e_i -> sign * e_|w(i)|.
    Root act(const Root& r) const
    {
        Root out {std::vector<int>(r.coeffs.size(), 0)};
        for (std::size_t i = 0; i < r.coeffs.size(); ++i) {
            const int x = images_[i];
            out.coeffs[static_cast<std::size_t>(std::abs(x) - 1)] += (x < 0 ? -1 : 1) * r.coeffs[i];
        }
        return out;
    }

    bool is_identity() const
    {
        for (std::size_t i = 0; i < images_.size(); ++i) {
            if (images_[i] != static_cast<int>(i + 1)) {
                return false;
            }
        }
        return true;
    }

    std::string to_string() const
    {
        std::string out = "[";
        for (std::size_t i = 0; i < images_.size(); ++i) {
            out += (i ? "," : "") + std::to_string(images_[i]);
        }
        return out + "]";
    }

    auto operator<=>(const WeylElement&) const = default;

private:
    std::vector<int> images_;
};

/// Simple reflection s_i, 1 <= i <= rank. For type C, s_n negates the last coordinate.
inline WeylElement simple_reflection(const GroupDatum& g, int i)
{
    if (i < 1 || i > g.rank()) {
        throw InvalidInput("simple reflection index out of range");
    }
    auto v = WeylElement::identity(g.n).images();
    if (i < g.n) {
        std::swap(v[static_cast<std::size_t>(i - 1)], v[static_cast<std::size_t>(i)]);
    } else {
        v[static_cast<std::size_t>(g.n - 1)] = -g.n;
    }
    return WeylElement(std::move(v), true);
}

/// Number of positive roots sent to negative roots.
inline int length(const WeylElement& w, const RootSet& positive)
{
    int count = 0;
    for (const auto& r : positive) {
        if (!w.act(r).is_positive()) {
            ++count;
        }
    }
    return count;
}

inline int length(const GroupDatum& g, const WeylElement& w) { return length(w, positive_roots(g)); }

/// Every element of W in lexicographic order of image vectors.
inline std::vector<WeylElement> weyl_group(const GroupDatum& g)
{
    std::vector<int> perm(static_cast<std::size_t>(g.n));
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<WeylElement> out;
    const bool signs = !g.is_type_a();
    do {
        if (!signs) {
            out.emplace_back(perm);
            continue;
        }
        for (unsigned mask = 0; mask < (1U << g.n); ++mask) {
            auto v = perm;
            for (int i = 0; i < g.n; ++i) {
                if ((mask >> i) & 1U) {
                    v[static_cast<std::size_t>(i)] = -v[static_cast<std::size_t>(i)];
                }
            }
            out.emplace_back(std::move(v), true);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::sort(out.begin(), out.end());
    return out;
}

/// Indices i of the simple reflections lying in W_P (positions i, i+1 share a block; for type C
/// s_n lies in W_P iff the middle block exists).
inline std::vector<int> parabolic_simple_reflections(const ParabolicSpec& P)
{
    const auto block_of = P.block_of_position();
    std::vector<int> out;
    const auto& g = P.group;
    for (int i = 1; i <= g.rank(); ++i) {
        // s_i swaps positions i-1 and i (0-based); for type C, s_n swaps n-1 and n.
        if (block_of[static_cast<std::size_t>(i - 1)] == block_of[static_cast<std::size_t>(i)]) {
            out.push_back(i);
        }
    }
    return out;
}

struct DoubleCosets {
    std::size_t count = 0;
    /// Minimal-length representative of each double coset, sorted by (length, images).
    std::vector<WeylElement> representatives;
    std::vector<int> lengths;
};

namespace detail {

class IndexUnionFind {
public:
    explicit IndexUnionFind(std::size_t n)
        : parent_(n),
          size_(n, 1)
    {
        std::iota(parent_.begin(), parent_.end(), std::size_t {0});
    }

    std::size_t find(std::size_t x)
    {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    void unite(std::size_t a, std::size_t b)
    {
        a = find(a);
        b = find(b);
        if (a == b) {
            return;
        }
        if (size_[a] < size_[b]) {
            std::swap(a, b);
        }
        parent_[b] = a;
        size_[a] += size_[b];
    }

private:
    std::vector<std::size_t> parent_;
    std::vector<std::size_t> size_;
};

} // namespace detail

/// W_P \ W / W_P2 by exhaustive enumeration, with a unique minimal-length representative per class.
inline DoubleCosets bruhat_double_cosets(const ParabolicSpec& P, const ParabolicSpec& P2)
{
    if (P.group != P2.group) {
        throw InvalidInput("bruhat_double_cosets: parabolics of different groups");
    }
    if (P.orientation != Orientation::Standard || P2.orientation != Orientation::Standard) {
        throw InvalidInput("bruhat_double_cosets: both parabolics must be Standard");
    }
    P.validate();
    P2.validate();
    const auto& g = P.group;
    const auto elements = weyl_group(g);
    std::map<WeylElement, std::size_t> index;
    for (std::size_t i = 0; i < elements.size(); ++i) {
        index.emplace(elements[i], i);
    }
    std::vector<WeylElement> left;
    std::vector<WeylElement> right;
    for (int i : parabolic_simple_reflections(P)) {
        left.push_back(simple_reflection(g, i));
    }
    for (int i : parabolic_simple_reflections(P2)) {
        right.push_back(simple_reflection(g, i));
    }
    detail::IndexUnionFind uf(elements.size());
    for (std::size_t i = 0; i < elements.size(); ++i) {
        for (const auto& s : left) {
            uf.unite(i, index.at(s * elements[i]));
        }
        for (const auto& t : right) {
            uf.unite(i, index.at(elements[i] * t));
        }
    }
    const auto positive = positive_roots(g);
    std::map<std::size_t, std::vector<std::size_t>> classes;
    for (std::size_t i = 0; i < elements.size(); ++i) {
        classes[uf.find(i)].push_back(i);
    }
    std::vector<std::pair<int, WeylElement>> reps;
    for (const auto& [root, members] : classes) {
        int best = -1;
        int ties = 0;
        std::size_t arg = 0;
        for (std::size_t m : members) {
            const int l = length(elements[m], positive);
            if (best < 0 || l < best) {
                best = l;
                arg = m;
                ties = 1;
            } else if (l == best) {
                ++ties;
            }
        }
        if (ties != 1) {
            throw std::logic_error("double coset with non-unique minimal-length representative");
        }
        reps.emplace_back(best, elements[arg]);
    }
    std::sort(reps.begin(), reps.end());
    DoubleCosets out;
    out.count = reps.size();
    for (auto& [l, w] : reps) {
        out.lengths.push_back(l);
        out.representatives.push_back(std::move(w));
    }
    return out;
}

/// A reduced word (sequence of simple reflection indices) with w = s_{a_1} ... s_{a_k}.
inline std::vector<int> reduced_word(const GroupDatum& g, WeylElement w)
{
    const auto positive = positive_roots(g);
    std::vector<int> word;
    int l = length(w, positive);
    while (l > 0) {
        bool found = false;
        for (int i = 1; i <= g.rank(); ++i) {
            auto shorter = simple_reflection(g, i) * w;
            const int ls = length(shorter, positive);
            if (ls < l) {
                word.push_back(i);
                w = std::move(shorter);
                l = ls;
                found = true;
                break;
            }
        }
        if (!found) {
            throw std::logic_error("reduced_word: no descent found");
        }
    }
    return word;
}

/// Validates a diagram automorphism given as sigma[i-1] = image of simple root i.
/// Type A: identity or the flip i -> n-i; type C: identity only.
inline void validate_diagram_action(const GroupDatum& g, const std::vector<int>& sigma)
{
    const int r = g.rank();
    if (static_cast<int>(sigma.size()) != r) {
        throw InvalidInput("diagram action must list one image per simple root");
    }
    bool identity = true;
    bool flip = true;
    for (int i = 1; i <= r; ++i) {
        const int s = sigma[static_cast<std::size_t>(i - 1)];
        identity = identity && s == i;
        flip = flip && s == r + 1 - i;
    }
    if (identity || (g.is_type_a() && flip)) {
        return;
    }
    throw InvalidInput("not a Dynkin diagram automorphism of " + g.to_string());
}

inline std::vector<int> identity_diagram_action(const GroupDatum& g)
{
    std::vector<int> sigma(static_cast<std::size_t>(g.rank()));
    std::iota(sigma.begin(), sigma.end(), 1);
    return sigma;
}

inline std::vector<int> flip_diagram_action(const GroupDatum& g)
{
    auto sigma = identity_diagram_action(g);
    std::reverse(sigma.begin(), sigma.end());
    return sigma;
}

/// theta(v) for theta acting on W through a diagram automorphism.
inline WeylElement apply_diagram_action(const GroupDatum& g, const std::vector<int>& sigma, const WeylElement& v)
{
    auto out = WeylElement::identity(g.n);
    for (int i : reduced_word(g, v)) {
        out = out * simple_reflection(g, sigma[static_cast<std::size_t>(i - 1)]);
    }
    return out;
}

/// { v in W : theta(v) = v^{-1} }, sorted by images.
inline std::vector<WeylElement> twisted_involutions(const GroupDatum& g, const std::vector<int>& sigma)
{
    validate_diagram_action(g, sigma);
    std::vector<WeylElement> out;
    for (const auto& v : weyl_group(g)) {
        if (apply_diagram_action(g, sigma, v) == v.inverse()) {
            out.push_back(v);
        }
    }
    return out;
}

} // namespace dflag::liecomb
