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
#include <numeric>
#include <set>
#include <vector>

#include "dflag/liecomb/roots.hpp"
#include "dflag/liecomb/weyl.hpp"

// Fixed realizations of theta on the natural module (positions 0-based):
//   AIII  conjugation by diag(I_p, -I_q)
//   AI    g -> (g^T)^{-1}, symmetric form = identity
//   AII   g -> J (g^T)^{-1} J^{-1}, J = [[0, I_m], [-I_m, 0]]
//   CI    conjugation by diag(I_n, -I_n) on Sp_2n (anti-diagonal symplectic form); K = GL_n
//   CII   conjugation by +1 on positions {0..p-1} u {2n-p..2n-1}, -1 elsewhere; K = Sp_2p x Sp_2q

namespace dflag::liecomb {

namespace detail {

inline void check_pair_group(const SymmetricPairSpec& pair, const ParabolicSpec& P)
{
    if (P.group != pair.group) {
        throw InvalidInput("parabolic " + P.to_string() + " does not belong to " + pair.to_string());
    }
}

/// Coordinate sets of the flag subspaces fixed by P (the standard or opposite coordinate flag).
inline std::vector<std::set<int>> coordinate_flag(const ParabolicSpec& P)
{
    std::vector<std::set<int>> flag;
    const int d = P.group.dim();
    std::set<int> cur;
    int pos = 0;
    for (std::size_t b = 0; b + 1 < P.blocks.size(); ++b) {
        const std::size_t idx = P.orientation == Orientation::Standard ? b : P.blocks.size() - 1 - b;
        for (int k = 0; k < P.blocks[idx]; ++k, ++pos) {
            cur.insert(P.orientation == Orientation::Standard ? pos : d - 1 - pos);
        }
        flag.push_back(cur);
    }
    return flag;
}

/// Counts of positions of each block that fall into `subset`, in flag order.
inline std::vector<int> restrict_blocks(const ParabolicSpec& P, const std::function<bool(int)>& subset)
{
    std::vector<int> counts(P.blocks.size(), 0);
    const auto block_of = P.block_of_position();
    for (int a = 0; a < P.group.dim(); ++a) {
        if (subset(a)) {
            ++counts[static_cast<std::size_t>(block_of[static_cast<std::size_t>(a)])];
        }
    }
    if (P.orientation == Orientation::Opposite) {
        std::reverse(counts.begin(), counts.end());
    }
    return counts;
}

} // namespace detail

/// Representative of the conjugacy class of theta(P).
///
/// Inner involutions (AIII, CI, CII) fix every conjugacy class; AI and AII send P to a parabolic
/// conjugate to the opposite one, represented as Standard with the reversed composition.
inline ParabolicSpec theta_on_parabolic(const SymmetricPairSpec& pair, const ParabolicSpec& P)
{
    detail::check_pair_group(pair, P);
    P.validate();
    switch (pair.kind) {
    case PairKind::AIII:
    case PairKind::CI:
    case PairKind::CII:
        return P;
    case PairKind::AI:
    case PairKind::AII: {
        auto blocks = P.blocks;
        std::reverse(blocks.begin(), blocks.end());
        return ParabolicSpec::make(P.group, std::move(blocks), Orientation::Standard);
    }
    }
    return P;
}

/// Whether the coordinate realization of P is preserved by the fixed theta.
inline bool is_theta_stable(const SymmetricPairSpec& pair, const ParabolicSpec& P)
{
    detail::check_pair_group(pair, P);
    P.validate();
    switch (pair.kind) {
    case PairKind::AIII:
    case PairKind::CI:
    case PairKind::CII:
        // conjugation by a diagonal matrix preserves every parabolic containing the diagonal torus
        return true;
    case PairKind::AI:
    case PairKind::AII: {
        // theta(Stab(flag)) = Stab(flag^perp), perp taken for the form defining theta
        const int d = P.group.dim();
        const int m = d / 2;
        auto partner = [&](int j) { return pair.kind == PairKind::AI ? j : (j + m) % d; };
        const auto flag = detail::coordinate_flag(P);
        std::set<std::set<int>> members(flag.begin(), flag.end());
        for (const auto& s : flag) {
            std::set<int> perp;
            for (int j = 0; j < d; ++j) {
                if (s.count(partner(j)) == 0) {
                    perp.insert(j);
                }
            }
            if (members.count(perp) == 0) {
                return false;
            }
        }
        return true;
    }
    }
    return false;
}

/// Q = K n P in factor-shape form, for theta-stable P in the fixed realization.
inline KParabolicSpec intersect_with_K(const SymmetricPairSpec& pair, const ParabolicSpec& P)
{
    if (!is_theta_stable(pair, P)) {
        throw InvalidInput("intersect_with_K: " + P.to_string() + " is not theta-stable for "
                           + pair.to_string());
    }
    KParabolicSpec out;
    const int d = P.group.dim();
    switch (pair.kind) {
    case PairKind::AIII:
        out.factors.push_back(detail::drop_zeros(detail::restrict_blocks(P, [&](int a) { return a < pair.p; })));
        out.factors.push_back(detail::drop_zeros(detail::restrict_blocks(P, [&](int a) { return a >= pair.p; })));
        break;
    case PairKind::CI:
        out.factors.push_back(detail::drop_zeros(detail::restrict_blocks(P, [&](int a) { return a < pair.group.n; })));
        break;
    case PairKind::CII: {
        auto in_first = [&](int a) { return a < pair.p || a >= d - pair.p; };
        out.factors.push_back(detail::drop_zeros(detail::restrict_blocks(P, in_first)));
        out.factors.push_back(detail::drop_zeros(detail::restrict_blocks(P, [&](int a) { return !in_first(a); })));
        break;
    }
    case PairKind::AI:
    case PairKind::AII:
        // a theta-stable flag is self-dual; K n P is the stabilizer of its isotropic half
        out.factors.push_back(P.blocks);
        break;
    }
    out.validate(pair);
    return out;
}

/// A theta-stable parabolic of G, up to K-conjugacy, with its intersection with K.
struct ThetaStableCandidate {
    ParabolicSpec parabolic;
    /// Part of each block lying in the first factor of K (AIII, CII) or in the Lagrangian E (CI).
    std::vector<int> split_first;
    std::vector<int> split_second;
    KParabolicSpec k_parabolic;
};

struct CandidateSearch {
    std::vector<ThetaStableCandidate> candidates;
    bool truncated = false;
};

/// Enumerates theta-stable parabolics (shape plus block splitting) in lexicographic order.
///
/// AIII: compositions a of n with a_i = b_i + c_i, sum b = p, Q = (b, c) without zeros.
/// CI: halves h with |h| <= n, h_i = b_i + c_i, Q = (b, n - |h|, reversed c) without zeros.
/// CII: halves with h_i = b_i + c_i, sum b <= p, sum c <= q; each factor gets its isotropic part.
/// AI, AII: self-dual (palindromic) shapes; Q carries the same shape.
inline CandidateSearch theta_stable_candidates(const SymmetricPairSpec& pair, std::size_t cap = 200000)
{
    CandidateSearch out;
    const auto& g = pair.group;
    auto push = [&](ThetaStableCandidate c) {
        if (out.candidates.size() >= cap) {
            out.truncated = true;
            return false;
        }
        out.candidates.push_back(std::move(c));
        return true;
    };
    // all splittings of `parts` into b + c with sum(b) in [lo_b, hi_b], sum(c) in [lo_c, hi_c]
    auto for_splits = [](const std::vector<int>& parts, int lo_b, int hi_b, int lo_c, int hi_c,
                         const std::function<bool(const std::vector<int>&, const std::vector<int>&)>& f) {
        std::vector<int> b(parts.size());
        std::vector<int> c(parts.size());
        bool keep_going = true;
        std::function<void(std::size_t, int, int)> rec = [&](std::size_t i, int sb, int sc) {
            if (!keep_going) {
                return;
            }
            if (i == parts.size()) {
                if (sb >= lo_b && sb <= hi_b && sc >= lo_c && sc <= hi_c) {
                    keep_going = f(b, c);
                }
                return;
            }
            for (int x = parts[i]; x >= 0; --x) {
                b[i] = x;
                c[i] = parts[i] - x;
                rec(i + 1, sb + x, sc + parts[i] - x);
            }
        };
        rec(0, 0, 0);
        return keep_going;
    };

    switch (pair.kind) {
    case PairKind::AIII:
        for (const auto& a : compositions_of(g.n)) {
            const bool ok = for_splits(a, pair.p, pair.p, pair.q, pair.q, [&](const auto& b, const auto& c) {
                KParabolicSpec k {{detail::drop_zeros(b), detail::drop_zeros(c)}};
                return push({ParabolicSpec::make(g, a), b, c, std::move(k)});
            });
            if (!ok) {
                break;
            }
        }
        break;
    case PairKind::CI:
    case PairKind::CII: {
        std::vector<std::vector<int>> halves;
        for (int k = 0; k <= g.n; ++k) {
            for (auto& h : compositions_of(k)) {
                halves.push_back(std::move(h));
            }
        }
        std::sort(halves.begin(), halves.end(), [&](const auto& x, const auto& y) {
            return SymplecticComposition(x, 2 * (g.n - std::accumulate(x.begin(), x.end(), 0))).full()
                   < SymplecticComposition(y, 2 * (g.n - std::accumulate(y.begin(), y.end(), 0))).full();
        });
        for (const auto& h : halves) {
            const int hs = std::accumulate(h.begin(), h.end(), 0);
            const auto shape = SymplecticComposition(h, 2 * (g.n - hs));
            const auto P = ParabolicSpec::type_c(shape);
            bool ok = true;
            if (pair.kind == PairKind::CI) {
                ok = for_splits(h, 0, hs, 0, hs, [&](const auto& b, const auto& c) {
                    std::vector<int> qparts = b;
                    qparts.push_back(g.n - hs);
                    qparts.insert(qparts.end(), c.rbegin(), c.rend());
                    KParabolicSpec k {{detail::drop_zeros(qparts)}};
                    return push({P, b, c, std::move(k)});
                });
            } else {
                ok = for_splits(h, 0, pair.p, 0, pair.q, [&](const auto& b, const auto& c) {
                    const int sb = std::accumulate(b.begin(), b.end(), 0);
                    const int sc = std::accumulate(c.begin(), c.end(), 0);
                    KParabolicSpec k {{SymplecticComposition(detail::drop_zeros(b), 2 * (pair.p - sb)).full(),
                                       SymplecticComposition(detail::drop_zeros(c), 2 * (pair.q - sc)).full()}};
                    return push({P, b, c, std::move(k)});
                });
            }
            if (!ok) {
                break;
            }
        }
        break;
    }
    case PairKind::AI:
    case PairKind::AII: {
        std::vector<std::vector<int>> shapes;
        for (int k = 0; 2 * k <= g.n; ++k) {
            for (const auto& h : compositions_of(k)) {
                const int middle = g.n - 2 * k;
                if (h.empty() && middle == 0) {
                    continue;
                }
                shapes.push_back(PalindromicComposition(h, middle).full());
            }
        }
        std::sort(shapes.begin(), shapes.end());
        for (const auto& s : shapes) {
            if (!push({ParabolicSpec::make(g, s), {}, {}, KParabolicSpec {{s}}})) {
                break;
            }
        }
        break;
    }
    }
    return out;
}

/// Simple-root action of theta: the flip for the outer involutions AI, AII (rank >= 2), else identity.
inline std::vector<int> theta_diagram_action(const SymmetricPairSpec& pair)
{
    if (pair.kind == PairKind::AI || pair.kind == PairKind::AII) {
        return flip_diagram_action(pair.group);
    }
    return identity_diagram_action(pair.group);
}

} // namespace dflag::liecomb
