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

#include <cstdint>
#include <deque>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "dflag/fforacle/groups.hpp"

namespace dflag::fforacle {

/// A point of a flag variety: nested subspaces, each as its canonical RREF basis.
struct FlagPoint {
    std::vector<Matrix> subspaces;

    std::vector<int> dims() const
    {
        std::vector<int> out;
        for (const auto& s : subspaces) {
            out.push_back(s.rows);
        }
        return out;
    }

    bool operator==(const FlagPoint&) const = default;
};

namespace detail {

inline std::string encode(const std::vector<Matrix>& subspaces)
{
    std::string out;
    for (const auto& s : subspaces) {
        out.append(s.data.begin(), s.data.end());
    }
    return out;
}

inline std::vector<Matrix> decode(const std::string& key, int d, const std::vector<int>& dims)
{
    std::vector<Matrix> out;
    std::size_t off = 0;
    for (int k : dims) {
        Matrix m(k, d);
        std::copy(key.begin() + static_cast<std::ptrdiff_t>(off),
                  key.begin() + static_cast<std::ptrdiff_t>(off + m.data.size()), m.data.begin());
        off += m.data.size();
        out.push_back(std::move(m));
    }
    return out;
}

/// g acting on column vectors; a row basis R goes to R g^T, then back to RREF.
inline std::string act(const PrimeField& f, const Matrix& g, const std::string& key, int d,
                       const std::vector<int>& dims)
{
    std::string out;
    out.reserve(key.size());
    std::size_t off = 0;
    Matrix img;
    for (int k : dims) {
        img = Matrix(k, d);
        for (int r = 0; r < k; ++r) {
            for (int c = 0; c < d; ++c) {
                const int x = static_cast<std::uint8_t>(key[off + static_cast<std::size_t>(r * d + c)]);
                if (x == 0) {
                    continue;
                }
                for (int j = 0; j < d; ++j) {
                    img.at(r, j) = f.add(img.at(r, j), f.mul(x, g.at(j, c)));
                }
            }
        }
        off += static_cast<std::size_t>(k * d);
        if (rref(f, img) != k) {
            throw std::logic_error("act: generator is singular");
        }
        out.append(img.data.begin(), img.data.end());
    }
    return out;
}

} // namespace detail

/// The orbit of a base configuration of subspaces under a generating set, with the
/// permutation each generator induces on it. Points are numbered in breadth-first order.
class PointSpace {
public:
    static PointSpace orbit(const PrimeField& f, const std::vector<Matrix>& base, const MatrixGroup& gens,
                            std::uint64_t budget, const std::string& what)
    {
        PointSpace s;
        s.d_ = gens.d;
        for (const auto& m : base) {
            auto c = m;
            rref(f, c);
            s.dims_.push_back(c.rows);
        }
        std::vector<Matrix> canon;
        for (auto m : base) {
            rref(f, m);
            canon.push_back(std::move(m));
        }
        s.add(detail::encode(canon));
        s.perms_.assign(gens.generators.size(), {});
        for (std::size_t i = 0; i < s.keys_.size(); ++i) {
            for (std::size_t g = 0; g < gens.generators.size(); ++g) {
                auto img = detail::act(f, gens.generators[g], s.keys_[i], s.d_, s.dims_);
                auto it = s.index_.find(img);
                std::uint32_t j = 0;
                if (it == s.index_.end()) {
                    if (s.keys_.size() >= budget) {
                        throw BudgetExceeded(s.keys_.size() + 1, budget, what);
                    }
                    j = s.add(std::move(img));
                } else {
                    j = it->second;
                }
                s.perms_[g].push_back(j);
            }
        }
        return s;
    }

    std::size_t size() const noexcept { return keys_.size(); }
    int dim() const noexcept { return d_; }
    const std::vector<int>& subspace_dims() const noexcept { return dims_; }
    const std::vector<std::vector<std::uint32_t>>& permutations() const noexcept { return perms_; }

    FlagPoint point(std::size_t i) const { return FlagPoint {detail::decode(keys_[i], d_, dims_)}; }

    /// Permutation induced by a matrix that preserves the space.
    std::vector<std::uint32_t> permutation(const PrimeField& f, const Matrix& g) const
    {
        std::vector<std::uint32_t> out(keys_.size());
        for (std::size_t i = 0; i < keys_.size(); ++i) {
            const auto it = index_.find(detail::act(f, g, keys_[i], d_, dims_));
            if (it == index_.end()) {
                throw std::logic_error("permutation: matrix does not preserve the point space");
            }
            out[i] = it->second;
        }
        return out;
    }

private:
    std::uint32_t add(std::string key)
    {
        const auto j = static_cast<std::uint32_t>(keys_.size());
        index_.emplace(key, j);
        keys_.push_back(std::move(key));
        return j;
    }

    int d_ = 0;
    std::vector<int> dims_;
    std::vector<std::string> keys_;
    std::unordered_map<std::string, std::uint32_t> index_;
    std::vector<std::vector<std::uint32_t>> perms_;
};

// Closed forms. Counts stay far below 2^64 at desk scale; intermediate products use 128 bits.

inline std::uint64_t gaussian_binomial(int n, int k, int q)
{
    if (k < 0 || k > n) {
        return 0;
    }
    // [n;k] = [n-1;k-1] + q^k [n-1;k]
    std::vector<std::vector<std::uint64_t>> t(static_cast<std::size_t>(n + 1),
                                              std::vector<std::uint64_t>(static_cast<std::size_t>(n + 1), 0));
    for (int m = 0; m <= n; ++m) {
        t[static_cast<std::size_t>(m)][0] = 1;
        std::uint64_t qk = 1;
        for (int j = 1; j <= m; ++j) {
            qk *= static_cast<std::uint64_t>(q);
            t[static_cast<std::size_t>(m)][static_cast<std::size_t>(j)]
                = t[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(j - 1)]
                  + (j <= m - 1 ? qk * t[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(j)] : 0);
        }
    }
    return t[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

/// q-multinomial coefficient of a composition: the number of GL flags of that shape.
inline std::uint64_t q_multinomial(const std::vector<int>& parts, int q)
{
    std::uint64_t out = 1;
    int total = 0;
    for (int p : parts) {
        total += p;
        out *= gaussian_binomial(total, p, q);
    }
    return out;
}

inline std::uint64_t ipow(int q, int e)
{
    std::uint64_t out = 1;
    for (int i = 0; i < e; ++i) {
        out *= static_cast<std::uint64_t>(q);
    }
    return out;
}

/// Isotropic flags of Sp_2n with the given half: [n;k] prod_{i=n-k+1..n} (1 + q^i) [k; half].
inline std::uint64_t symplectic_flag_count(int n, const std::vector<int>& half, int q)
{
    int k = 0;
    for (int h : half) {
        k += h;
    }
    std::uint64_t out = gaussian_binomial(n, k, q);
    for (int i = n - k + 1; i <= n; ++i) {
        out *= 1 + ipow(q, i);
    }
    return out * q_multinomial(half, q);
}

/// Isotropic flags of the split quadric in dimension N with the given half; a flag ending in a
/// Lagrangian of SO_2m is counted in one family only.
inline std::uint64_t orthogonal_flag_count(int N, const std::vector<int>& half, int q)
{
    int k = 0;
    for (int h : half) {
        k += h;
    }
    const int m = N / 2;
    unsigned __int128 num = 1;
    unsigned __int128 den = 1;
    for (int i = 0; i < k; ++i) {
        if (N % 2 == 1) {
            num *= ipow(q, 2 * (m - i)) - 1;
        } else {
            num *= (ipow(q, m - i) - 1) * (ipow(q, m - i - 1) + 1);
        }
        den *= ipow(q, i + 1) - 1;
    }
    auto out = static_cast<std::uint64_t>(num / den);
    if (N % 2 == 0 && k == m && m > 0) {
        out /= 2;
    }
    return out * q_multinomial(half, q);
}

/// |G/P(F_q)| from the closed forms.
inline std::uint64_t flag_count(const liecomb::GroupDatum& g, const std::vector<int>& blocks, int q)
{
    if (g.is_type_a()) {
        return q_multinomial(blocks, q);
    }
    const auto shape = liecomb::SymplecticComposition::from_full(blocks);
    return symplectic_flag_count(g.n, shape.half(), q);
}

/// All F_q-points of G/P, deduplicated, in breadth-first order from the coordinate flag.
inline std::vector<FlagPoint> enumerate_flags(const liecomb::GroupDatum& g, const std::vector<int>& blocks, int q,
                                              std::uint64_t budget)
{
    const PrimeField f(q);
    const auto P = liecomb::ParabolicSpec::make(g, blocks);
    const auto expected = flag_count(g, blocks, q);
    if (expected > budget) {
        throw BudgetExceeded(expected, budget, "enumerate_flags " + P.to_string());
    }
    const auto space = PointSpace::orbit(f, base_flag(P), group_generators(f, g), budget, P.to_string());
    std::vector<FlagPoint> out;
    out.reserve(space.size());
    const auto omega = form_matrix(f, FormKind::Symplectic, g.dim());
    for (std::size_t i = 0; i < space.size(); ++i) {
        auto pt = space.point(i);
        if (!g.is_type_a()) {
            for (const auto& s : pt.subspaces) {
                if (multiply(f, multiply(f, s, omega), transpose(s)) != Matrix(s.rows, s.rows)) {
                    throw std::logic_error("enumerate_flags: non-isotropic subspace");
                }
            }
        }
        out.push_back(std::move(pt));
    }
    return out;
}

} // namespace dflag::fforacle
