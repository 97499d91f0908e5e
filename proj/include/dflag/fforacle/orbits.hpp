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
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dflag/fforacle/flags.hpp"

namespace dflag::fforacle {

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

/// Point budget: DFLAG_BUDGET if set to a positive integer, else 10^7.
inline std::uint64_t default_budget()
{
    if (const char* env = std::getenv("DFLAG_BUDGET")) {
        char* end = nullptr;
        const auto v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) {
            return v;
        }
    }
    return kDefaultBudget;
}

/// Union-find with path halving and union by size.
class UnionFind {
public:
    explicit UnionFind(std::size_t n)
        : parent_(n),
          size_(n, 1),
          components_(n)
    {
        std::iota(parent_.begin(), parent_.end(), std::uint32_t {0});
    }

    std::uint32_t find(std::uint32_t x)
    {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    void unite(std::uint32_t a, std::uint32_t b)
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
        --components_;
    }

    std::size_t components() const noexcept { return components_; }

    /// Sum of component sizes; equals the number of points.
    std::uint64_t audit()
    {
        std::uint64_t total = 0;
        for (std::uint32_t i = 0; i < parent_.size(); ++i) {
            if (find(i) == i) {
                total += size_[i];
            }
        }
        return total;
    }

private:
    std::vector<std::uint32_t> parent_;
    std::vector<std::uint32_t> size_;
    std::size_t components_;
};

namespace detail {

/// Orbits of the group generated by the given permutations of a product of spaces.
inline std::uint64_t count_product_orbits(const std::vector<std::size_t>& sizes,
                                          const std::vector<std::vector<const std::vector<std::uint32_t>*>>& perms,
                                          std::uint64_t budget, const std::string& what)
{
    unsigned __int128 total = 1;
    for (auto s : sizes) {
        total *= s;
    }
    if (total > budget) {
        throw BudgetExceeded(total > UINT64_MAX ? UINT64_MAX : static_cast<std::uint64_t>(total), budget, what);
    }
    const auto n = static_cast<std::size_t>(total);
    UnionFind uf(n);
    const std::size_t factors = sizes.size();
    std::vector<std::size_t> coord(factors, 0);
    for (std::size_t idx = 0; idx < n; ++idx) {
        for (const auto& gen : perms) {
            std::size_t img = 0;
            for (std::size_t k = 0; k < factors; ++k) {
                img = img * sizes[k] + (*gen[k])[coord[k]];
            }
            uf.unite(static_cast<std::uint32_t>(idx), static_cast<std::uint32_t>(img));
        }
        for (std::size_t k = factors; k-- > 0;) {
            if (++coord[k] < sizes[k]) {
                break;
            }
            coord[k] = 0;
        }
    }
    if (uf.audit() != n) {
        throw std::logic_error("orbit audit failed: component sizes do not sum to the point count");
    }
    return uf.components();
}

inline void check_flag_budget(const liecomb::ParabolicSpec& P, int q, std::uint64_t budget)
{
    const auto c = flag_count(P.group, P.blocks, q);
    if (c > budget) {
        throw BudgetExceeded(c, budget, "flag variety " + P.to_string());
    }
}

} // namespace detail

struct OrbitCount {
    int q = 0;
    /// Points of the product variety.
    std::uint64_t points = 0;
    std::uint64_t orbits = 0;
};

/// K(F_q)-orbits on X_P x Z_Q, computed as Q(F_q)-orbits on X_P (Q fixes the base point of Z_Q,
/// on which K(F_q) acts transitively by construction).
inline OrbitCount k_orbit_census(const liecomb::SymmetricPairSpec& pair, const liecomb::ParabolicSpec& P,
                                 const liecomb::KParabolicSpec& Q, int q, std::uint64_t budget)
{
    if (P.group != pair.group) {
        throw InvalidInput("parabolic " + P.to_string() + " does not belong to " + pair.to_string());
    }
    const PrimeField f(q);
    const auto real = realize_pair(f, pair, Q);
    detail::check_flag_budget(P, q, budget);
    const auto x = PointSpace::orbit(f, base_flag(P), real.g, budget, "flag variety " + P.to_string());
    const auto z = PointSpace::orbit(f, real.z_base, real.k, budget, "K/Q for " + Q.to_string());
    std::vector<std::vector<std::uint32_t>> perms;
    for (const auto& g : real.q.generators) {
        perms.push_back(x.permutation(f, g));
    }
    std::vector<std::vector<const std::vector<std::uint32_t>*>> refs;
    for (const auto& p : perms) {
        refs.push_back({&p});
    }
    OrbitCount out;
    out.q = q;
    out.points = static_cast<std::uint64_t>(x.size()) * z.size();
    out.orbits = detail::count_product_orbits({x.size()}, refs, budget, "K-orbit count");
    return out;
}

/// Number of K(F_q)-orbits on X_P(F_q) x Z_Q(F_q).
inline std::uint64_t count_K_orbits(const liecomb::SymmetricPairSpec& pair, const liecomb::ParabolicSpec& P,
                                    const liecomb::KParabolicSpec& Q, int q, std::uint64_t budget = default_budget())
{
    return k_orbit_census(pair, P, Q, q, budget).orbits;
}

/// Same count by the diagonal K(F_q) action on the full product; used as a cross-check.
inline std::uint64_t count_K_orbits_direct(const liecomb::SymmetricPairSpec& pair, const liecomb::ParabolicSpec& P,
                                           const liecomb::KParabolicSpec& Q, int q,
                                           std::uint64_t budget = default_budget())
{
    const PrimeField f(q);
    const auto real = realize_pair(f, pair, Q);
    detail::check_flag_budget(P, q, budget);
    const auto x = PointSpace::orbit(f, base_flag(P), real.g, budget, "flag variety " + P.to_string());
    const auto z = PointSpace::orbit(f, real.z_base, real.k, budget, "K/Q for " + Q.to_string());
    std::vector<std::vector<std::uint32_t>> perms;
    for (const auto& g : real.k.generators) {
        perms.push_back(x.permutation(f, g));
    }
    std::vector<std::vector<const std::vector<std::uint32_t>*>> refs;
    for (std::size_t i = 0; i < perms.size(); ++i) {
        refs.push_back({&perms[i], &z.permutations()[i]});
    }
    return detail::count_product_orbits({x.size(), z.size()}, refs, budget, "K-orbit count (direct)");
}

/// G(F_q)-orbits on X_1 x X_2 (x X_3): P_i(F_q)-orbits on the other factors, where X_i is the
/// largest factor.
inline OrbitCount triple_orbit_census(const liecomb::GroupDatum& g, const std::vector<liecomb::ParabolicSpec>& ps,
                                      int q, std::uint64_t budget)
{
    if (ps.size() < 2 || ps.size() > 3) {
        throw InvalidInput("count_triple_orbits takes two or three parabolics");
    }
    for (const auto& P : ps) {
        if (P.group != g) {
            throw InvalidInput("parabolic " + P.to_string() + " does not belong to " + g.to_string());
        }
        detail::check_flag_budget(P, q, budget);
    }
    const PrimeField f(q);
    const auto gens = group_generators(f, g);
    std::size_t base = 0;
    std::vector<std::uint64_t> counts;
    for (std::size_t i = 0; i < ps.size(); ++i) {
        counts.push_back(flag_count(g, ps[i].blocks, q));
        if (counts[i] > counts[base]) {
            base = i;
        }
    }
    std::vector<PointSpace> spaces;
    std::vector<std::size_t> sizes;
    for (std::size_t i = 0; i < ps.size(); ++i) {
        if (i != base) {
            spaces.push_back(PointSpace::orbit(f, base_flag(ps[i]), gens, budget, "flag variety " + ps[i].to_string()));
            sizes.push_back(spaces.back().size());
        }
    }
    const auto stab = parabolic_generators(f, ps[base]);
    std::vector<std::vector<std::vector<std::uint32_t>>> perms(stab.generators.size());
    for (std::size_t k = 0; k < stab.generators.size(); ++k) {
        for (const auto& s : spaces) {
            perms[k].push_back(s.permutation(f, stab.generators[k]));
        }
    }
    std::vector<std::vector<const std::vector<std::uint32_t>*>> refs;
    for (const auto& p : perms) {
        std::vector<const std::vector<std::uint32_t>*> r;
        for (const auto& x : p) {
            r.push_back(&x);
        }
        refs.push_back(std::move(r));
    }
    OrbitCount out;
    out.q = q;
    out.points = std::accumulate(counts.begin(), counts.end(), std::uint64_t {1}, std::multiplies<>());
    out.orbits = detail::count_product_orbits(sizes, refs, budget, "triple orbit count");
    return out;
}

/// Orbits of diagonal G(F_q) on G/P1 x G/P2 (x G/P3 when given).
inline std::uint64_t count_triple_orbits(const liecomb::GroupDatum& g, const liecomb::ParabolicSpec& P1,
                                         const liecomb::ParabolicSpec& P2,
                                         const std::optional<liecomb::ParabolicSpec>& P3, int q,
                                         std::uint64_t budget = default_budget())
{
    std::vector<liecomb::ParabolicSpec> ps {P1, P2};
    if (P3) {
        ps.push_back(*P3);
    }
    return triple_orbit_census(g, ps, q, budget).orbits;
}

/// Same count by the diagonal action of G(F_q) generators on the whole product.
inline std::uint64_t count_triple_orbits_direct(const liecomb::GroupDatum& g,
                                                const std::vector<liecomb::ParabolicSpec>& ps, int q,
                                                std::uint64_t budget = default_budget())
{
    const PrimeField f(q);
    const auto gens = group_generators(f, g);
    std::vector<PointSpace> spaces;
    std::vector<std::size_t> sizes;
    for (const auto& P : ps) {
        detail::check_flag_budget(P, q, budget);
        spaces.push_back(PointSpace::orbit(f, base_flag(P), gens, budget, "flag variety " + P.to_string()));
        sizes.push_back(spaces.back().size());
    }
    std::vector<std::vector<const std::vector<std::uint32_t>*>> refs(gens.generators.size());
    for (std::size_t k = 0; k < gens.generators.size(); ++k) {
        for (const auto& s : spaces) {
            refs[k].push_back(&s.permutations()[k]);
        }
    }
    return detail::count_product_orbits(sizes, refs, budget, "triple orbit count (direct)");
}

enum class GrowthHint { Bounded, Growing, Irregular };

inline std::string to_string(GrowthHint h)
{
    switch (h) {
    case GrowthHint::Bounded:
        return "Bounded";
    case GrowthHint::Growing:
        return "Growing";
    case GrowthHint::Irregular:
        return "Irregular";
    }
    return "?";
}

/// Orbit counts per q. The hint is empirical, not a proof.
struct OrbitCountReport {
    std::vector<OrbitCount> counts;
    GrowthHint hint = GrowthHint::Bounded;
};

/// Field sizes probed by default: {2, 3} for AIII, {3, 5} for the other pairs.
inline std::vector<int> default_qlist(const liecomb::SymmetricPairSpec& pair)
{
    if (pair.kind == liecomb::PairKind::AIII) {
        return {2, 3};
    }
    return {3, 5};
}

inline GrowthHint growth_hint(const std::vector<OrbitCount>& counts)
{
    bool equal = true;
    bool increasing = true;
    for (std::size_t i = 1; i < counts.size(); ++i) {
        equal = equal && counts[i].orbits == counts[0].orbits;
        increasing = increasing && counts[i].orbits > counts[i - 1].orbits;
    }
    return equal ? GrowthHint::Bounded : increasing ? GrowthHint::Growing : GrowthHint::Irregular;
}

inline OrbitCountReport growth_probe(const liecomb::SymmetricPairSpec& pair, const liecomb::ParabolicSpec& P,
                                     const liecomb::KParabolicSpec& Q, std::vector<int> qlist = {},
                                     std::uint64_t budget = default_budget())
{
    if (qlist.empty()) {
        qlist = default_qlist(pair);
    }
    std::sort(qlist.begin(), qlist.end());
    qlist.erase(std::unique(qlist.begin(), qlist.end()), qlist.end());
    if (qlist.size() < 2) {
        throw InvalidInput("growth_probe needs at least two field sizes");
    }
    OrbitCountReport out;
    for (int q : qlist) {
        out.counts.push_back(k_orbit_census(pair, P, Q, q, budget));
    }
    out.hint = growth_hint(out.counts);
    return out;
}

/// Growth probe for a triple (or pair) flag variety under diagonal G.
inline OrbitCountReport triple_growth_probe(const liecomb::GroupDatum& g, const std::vector<liecomb::ParabolicSpec>& ps,
                                            std::vector<int> qlist, std::uint64_t budget = default_budget())
{
    std::sort(qlist.begin(), qlist.end());
    qlist.erase(std::unique(qlist.begin(), qlist.end()), qlist.end());
    if (qlist.size() < 2) {
        throw InvalidInput("growth probe needs at least two field sizes");
    }
    OrbitCountReport out;
    for (int q : qlist) {
        out.counts.push_back(triple_orbit_census(g, ps, q, budget));
    }
    out.hint = growth_hint(out.counts);
    return out;
}

} // namespace dflag::fforacle
