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
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dflag/classifier/mwz.hpp"
#include "dflag/liecomb/roots.hpp"
#include "dflag/liecomb/theta.hpp"

namespace dflag::classifier {

enum class Status { FiniteProven, InfiniteProven, Unknown };

inline std::string to_string(Status s)
{
    switch (s) {
    case Status::FiniteProven:
        return "FiniteProven";
    case Status::InfiniteProven:
        return "InfiniteProven";
    case Status::Unknown:
        return "Unknown";
    }
    return "?";
}

/// The reduction behind a proven verdict.
struct Witness {
    /// "triple" (theta-stable P'), "intersection" (open pair P2, P3) or "trivial" (P = G).
    std::string criterion;
    std::optional<liecomb::ParabolicSpec> p_prime;
    std::optional<liecomb::ParabolicSpec> p2;
    std::optional<liecomb::ParabolicSpec> p3;
    /// Shape of theta(P) used in the triple criterion.
    std::optional<liecomb::ParabolicSpec> theta_p;
    std::vector<std::string> table_rows;
    std::string citation;
};

struct DoubleFlagVerdict {
    Status status = Status::Unknown;
    std::optional<Witness> witness;
    /// The theta-stable search hit its cap; an Unknown may then be incomplete.
    bool truncated = false;
    std::vector<std::string> notes;
};

namespace detail {

inline void check_double_flag_input(const liecomb::SymmetricPairSpec& pair, const liecomb::ParabolicSpec& P,
                                    const liecomb::KParabolicSpec& Q)
{
    if (P.group != pair.group) {
        throw InvalidInput("parabolic " + P.to_string() + " does not belong to " + pair.to_string());
    }
    P.validate();
    Q.validate(pair);
}

inline std::vector<std::string> row_labels(const TripleFlagVerdict& v)
{
    std::vector<std::string> out;
    for (const auto& r : v.matched_rows) {
        out.push_back(r.label());
    }
    return out;
}

inline DoubleFlagVerdict trivial_verdict(const std::string& why)
{
    DoubleFlagVerdict v;
    v.status = Status::FiniteProven;
    v.witness = Witness {"trivial", {}, {}, {}, {}, {}, why};
    return v;
}

} // namespace detail

/// Sufficient criterion: some theta-stable P' with K n P' ~ Q makes (P, theta(P), P') finite.
///
/// Candidates are tried in the canonical search order; the first hit is the witness.
inline DoubleFlagVerdict finiteness_via_triple(const liecomb::SymmetricPairSpec& pair,
                                               const liecomb::ParabolicSpec& P, const liecomb::KParabolicSpec& Q,
                                               std::size_t cap = 200000)
{
    detail::check_double_flag_input(pair, P, Q);
    if (P.is_whole()) {
        return detail::trivial_verdict("G/P is a point; K acts transitively on K/Q");
    }
    const auto theta_p = liecomb::theta_on_parabolic(pair, P);
    const auto search = liecomb::theta_stable_candidates(pair, cap);
    DoubleFlagVerdict out;
    out.truncated = search.truncated;
    bool any_candidate = false;
    for (const auto& c : search.candidates) {
        if (!c.k_parabolic.conjugate_to(Q, pair)) {
            continue;
        }
        any_candidate = true;
        Witness w;
        w.criterion = "triple";
        w.p_prime = c.parabolic;
        w.theta_p = theta_p;
        if (c.parabolic.is_whole()) {
            // the triple degenerates to G/P x G/theta(P), finite by the Bruhat decomposition
            w.table_rows = {"Bruhat"};
            w.citation = "P' = G, Bruhat decomposition";
            out.status = Status::FiniteProven;
            out.witness = std::move(w);
            return out;
        }
        const auto t = mwz_classify(P, theta_p, c.parabolic);
        if (t.finite) {
            w.table_rows = detail::row_labels(t);
            w.citation = std::string(c.parabolic.group.is_type_a() ? "type A" : "type C")
                         + " triple flag table, row " + t.matched_rows.front().family_label();
            out.status = Status::FiniteProven;
            out.witness = std::move(w);
            out.notes.insert(out.notes.end(), t.notes.begin(), t.notes.end());
            return out;
        }
    }
    if (!any_candidate) {
        out.notes.push_back("no theta-stable P' with K n P' conjugate to " + Q.to_string());
    }
    if (out.truncated) {
        out.notes.push_back("theta-stable search truncated at " + std::to_string(cap) + " candidates");
    }
    return out;
}

namespace detail {

/// (P2, P3) with P2 n P3 = Q inside K, for the pairs where K is a Levi subgroup of G.
struct IntersectionPair {
    liecomb::ParabolicSpec p2;
    liecomb::ParabolicSpec p3;
    std::vector<int> k_blocks; // fine block index of each coordinate of K's natural module
    std::vector<int> coarse;   // index of the K factor (Levi block of P3) of each coordinate
};

inline std::optional<IntersectionPair> intersection_pair(const liecomb::SymmetricPairSpec& pair,
                                                         const liecomb::KParabolicSpec& Q)
{
    using liecomb::Orientation;
    using liecomb::ParabolicSpec;
    const auto& g = pair.group;
    if (pair.kind == liecomb::PairKind::AIII) {
        std::vector<int> shape = Q.factors[0];
        shape.insert(shape.end(), Q.factors[1].begin(), Q.factors[1].end());
        IntersectionPair ip {ParabolicSpec::make(g, shape),
                             ParabolicSpec::make(g, {pair.p, pair.q}, Orientation::Opposite), {}, {}};
        ip.k_blocks = ip.p2.block_of_position();
        for (int a = 0; a < g.n; ++a) {
            ip.coarse.push_back(a < pair.p ? 0 : 1);
        }
        return ip;
    }
    if (pair.kind == liecomb::PairKind::CI) {
        std::vector<int> shape = Q.factors[0];
        shape.insert(shape.end(), Q.factors[0].rbegin(), Q.factors[0].rend());
        IntersectionPair ip {ParabolicSpec::make(g, shape),
                             ParabolicSpec::make(g, {g.n, g.n}, Orientation::Opposite), {}, {}};
        ip.k_blocks = ParabolicSpec::make(liecomb::GroupDatum::gl(g.n), Q.factors[0]).block_of_position();
        ip.coarse.assign(static_cast<std::size_t>(g.n), 0);
        return ip;
    }
    return std::nullopt;
}

/// Roots of the parabolic Q of K, built from Q's blocks on the first Levi block(s) of P3.
inline liecomb::RootSet k_parabolic_roots(const liecomb::SymmetricPairSpec& pair, const IntersectionPair& ip)
{
    liecomb::RootSet out;
    const int m = static_cast<int>(ip.k_blocks.size());
    for (int a = 0; a < m; ++a) {
        for (int b = 0; b < m; ++b) {
            const auto ua = static_cast<std::size_t>(a);
            const auto ub = static_cast<std::size_t>(b);
            if (a != b && ip.coarse[ua] == ip.coarse[ub] && ip.k_blocks[ua] <= ip.k_blocks[ub]) {
                out.insert(liecomb::root_at(pair.group, a, b));
            }
        }
    }
    return out;
}

} // namespace detail

/// Criterion through a pair (P2, P3) with Q = P2 n P3 and P2 P3 open in G.
///
/// Implemented for AIII and CI, where K is the Levi of P3. With P1 a Borel subgroup the
/// verdict is exact in both directions.
inline DoubleFlagVerdict finiteness_via_intersection(const liecomb::SymmetricPairSpec& pair,
                                                     const liecomb::ParabolicSpec& P1,
                                                     const liecomb::KParabolicSpec& Q)
{
    detail::check_double_flag_input(pair, P1, Q);
    if (P1.is_whole()) {
        return detail::trivial_verdict("G/P is a point; K acts transitively on K/Q");
    }
    const auto ip = detail::intersection_pair(pair, Q);
    DoubleFlagVerdict out;
    if (!ip) {
        out.notes.push_back("intersection criterion is implemented for AIII and CI only");
        return out;
    }
    auto inter = liecomb::parabolic_root_set(ip->p2);
    const auto r3 = liecomb::parabolic_root_set(ip->p3);
    std::erase_if(inter, [&](const liecomb::Root& r) { return r3.count(r) == 0; });
    if (inter != detail::k_parabolic_roots(pair, *ip)) {
        throw std::logic_error("finiteness_via_intersection: P2 n P3 differs from Q for " + Q.to_string());
    }
    const bool open = liecomb::is_product_open(ip->p2, ip->p3);
    const auto t = mwz_classify(P1, ip->p2, ip->p3);
    Witness w;
    w.criterion = "intersection";
    w.p2 = ip->p2;
    w.p3 = ip->p3;
    w.table_rows = detail::row_labels(t);
    out.notes = t.notes;
    if (t.finite) {
        w.citation = std::string(P1.group.is_type_a() ? "type A" : "type C") + " triple flag table, row "
                     + t.matched_rows.front().family_label();
        out.status = Status::FiniteProven;
        out.witness = std::move(w);
    } else if (open && P1.is_borel()) {
        w.citation = std::string(P1.group.is_type_a() ? "type A" : "type C")
                     + " triple flag table (no row matches; exact for P1 = B with P2 P3 open)";
        out.status = Status::InfiniteProven;
        out.witness = std::move(w);
    } else if (!open) {
        out.notes.push_back("P2 P3 is not open");
    }
    return out;
}

enum class AiiiBorelCase { I, II, III, IV, V, Infinite };

inline std::string to_string(AiiiBorelCase c)
{
    switch (c) {
    case AiiiBorelCase::I:
        return "i";
    case AiiiBorelCase::II:
        return "ii";
    case AiiiBorelCase::III:
        return "iii";
    case AiiiBorelCase::IV:
        return "iv";
    case AiiiBorelCase::V:
        return "v";
    case AiiiBorelCase::Infinite:
        return "Infinite";
    }
    return "?";
}

struct AiiiBorelResult {
    AiiiBorelCase primary = AiiiBorelCase::Infinite;
    /// Every matching case in table order i..v.
    std::vector<AiiiBorelCase> all;
};

inline bool is_mirabolic(const std::vector<int>& parts)
{
    return parts.size() == 2 && (parts[0] == 1 || parts[1] == 1);
}

/// K = GL_p x GL_q orbits on G/B x K/Q, Q = Q1 x Q2, for q >= p.
///
/// Overlapping rows are reported in `all`; `primary` takes iii, iv, i, ii, v in that order.
inline AiiiBorelResult classify_AIII_borel(int p, int q, const liecomb::Composition& Q1,
                                           const liecomb::Composition& Q2)
{
    if (p < 1 || q < 1) {
        throw InvalidInput("classify_AIII_borel needs p, q >= 1");
    }
    if (p > q) {
        throw InvalidInput("classify_AIII_borel needs p <= q (swap the factors), got p=" + std::to_string(p)
                           + ", q=" + std::to_string(q));
    }
    if (Q1.size() != p || Q2.size() != q) {
        throw InvalidInput("classify_AIII_borel: Q1 must be a composition of p and Q2 of q");
    }
    const bool q1_whole = Q1.length() == 1;
    const bool q2_whole = Q2.length() == 1;
    AiiiBorelResult out;
    if (q1_whole && q2_whole) {
        out.all.push_back(AiiiBorelCase::I);
    }
    if (q1_whole && is_mirabolic(Q2.parts())) {
        out.all.push_back(AiiiBorelCase::II);
    }
    if (p == 1) {
        out.all.push_back(AiiiBorelCase::III);
    }
    if (p == 2 && q1_whole && Q2.length() <= 2) {
        out.all.push_back(AiiiBorelCase::IV);
    }
    if (is_mirabolic(Q1.parts()) && q2_whole) {
        out.all.push_back(AiiiBorelCase::V);
    }
    for (auto c : {AiiiBorelCase::III, AiiiBorelCase::IV, AiiiBorelCase::I, AiiiBorelCase::II, AiiiBorelCase::V}) {
        if (std::find(out.all.begin(), out.all.end(), c) != out.all.end()) {
            out.primary = c;
            break;
        }
    }
    return out;
}

struct SummaryRow {
    liecomb::PairKind table;
    int row = 0;
    std::string description;

    std::string citation() const { return liecomb::to_string(table) + " summary, row " + std::to_string(row); }
};

/// Rows of the per-pair summary tables covering (P, Q). Empty means not covered, not infinite.
inline std::vector<SummaryRow> summary_lookup(const liecomb::SymmetricPairSpec& pair,
                                              const liecomb::ParabolicSpec& P, const liecomb::KParabolicSpec& Q)
{
    using liecomb::PairKind;
    detail::check_double_flag_input(pair, P, Q);
    std::vector<SummaryRow> out;
    const int len = P.length();
    const int n = pair.group.n;
    auto same_class = [&](std::vector<std::vector<int>> factors) {
        return Q.conjugate_to(liecomb::KParabolicSpec {std::move(factors)}, pair);
    };
    switch (pair.kind) {
    case PairKind::AI:
        if (n < 3) {
            break;
        }
        if (len == 2) {
            out.push_back({pair.kind, 1, "P maximal, Q arbitrary"});
        }
        if (len == 3 && n % 2 == 0 && same_class({{n / 2, n / 2}})) {
            out.push_back({pair.kind, 2, "P with three blocks, Q Siegel, n even"});
        }
        break;
    case PairKind::AII:
        if (n < 4) {
            break;
        }
        if (len == 2) {
            out.push_back({pair.kind, 1, "P maximal, Q arbitrary"});
        }
        if (len == 3 && same_class({{n / 2, n / 2}})) {
            out.push_back({pair.kind, 2, "P with three blocks, Q Siegel"});
        }
        break;
    case PairKind::AIII: {
        const auto& q1 = Q.factors[0];
        const auto& q2 = Q.factors[1];
        if (is_mirabolic(q1) && q2.size() == 1) {
            out.push_back({pair.kind, 1, "Q1 mirabolic, Q2 = GL_q"});
        }
        if (q1.size() == 1 && is_mirabolic(q2)) {
            out.push_back({pair.kind, 2, "Q1 = GL_p, Q2 mirabolic"});
        }
        if (len == 2) {
            out.push_back({pair.kind, 3, "P maximal, Q arbitrary"});
        }
        if (len == 3 && q1.size() == 1 && q2.size() == 2) {
            out.push_back({pair.kind, 4, "P with three blocks, Q1 = GL_p, Q2 maximal"});
        }
        if (len == 3 && q1.size() == 2 && q2.size() == 1) {
            out.push_back({pair.kind, 5, "P with three blocks, Q1 maximal, Q2 = GL_q"});
        }
        if (pair.p == 1) {
            out.push_back({pair.kind, 6, "p = 1, Q2 arbitrary"});
        }
        if (pair.p == 2 && q1.size() == 1 && q2.size() == 2) {
            out.push_back({pair.kind, 7, "p = 2, Q1 = GL_2, Q2 maximal"});
        }
        break;
    }
    case PairKind::CI:
        if (n < 2) {
            break;
        }
        if (P.blocks == std::vector<int> {n, n}) {
            out.push_back({pair.kind, 1, "P Siegel, Q arbitrary"});
        }
        if (P.blocks == std::vector<int> {1, 2 * n - 2, 1}) {
            out.push_back({pair.kind, 2, "P = (1, 2n-2, 1), Q arbitrary"});
        }
        break;
    case PairKind::CII: {
        if (P.blocks == std::vector<int> {n, n}) {
            out.push_back({pair.kind, 1, "P Siegel, Q arbitrary"});
        }
        const auto& b = P.blocks;
        if (b.size() == 3 && b[0] == b[2] && b[0] < n
            && same_class({{pair.p, pair.p}, {pair.q, pair.q}})) {
            out.push_back({pair.kind, 2, "P = (m, 2n-2m, m), Q Siegel x Siegel"});
        }
        break;
    }
    }
    return out;
}

/// Both criteria plus the summary tables, merged into one verdict.
struct Classification {
    DoubleFlagVerdict verdict;
    DoubleFlagVerdict via_triple;
    DoubleFlagVerdict via_intersection;
    std::vector<SummaryRow> summary;
    /// The two criteria returned opposite proven verdicts.
    bool conflict = false;
};

inline Classification classify(const liecomb::SymmetricPairSpec& pair, const liecomb::ParabolicSpec& P,
                               const liecomb::KParabolicSpec& Q)
{
    Classification c;
    c.via_triple = finiteness_via_triple(pair, P, Q);
    c.via_intersection = finiteness_via_intersection(pair, P, Q);
    c.summary = summary_lookup(pair, P, Q);
    const auto ti = c.via_triple.status;
    const auto ii = c.via_intersection.status;
    c.conflict = (ti == Status::FiniteProven && ii == Status::InfiniteProven);
    if (ii == Status::InfiniteProven && !c.conflict) {
        c.verdict = c.via_intersection;
    } else if (ti == Status::FiniteProven) {
        c.verdict = c.via_triple;
    } else if (ii == Status::FiniteProven) {
        c.verdict = c.via_intersection;
    } else {
        c.verdict.status = Status::Unknown;
        c.verdict.truncated = c.via_triple.truncated;
        c.verdict.notes = c.via_triple.notes;
        c.verdict.notes.insert(c.verdict.notes.end(), c.via_intersection.notes.begin(),
                               c.via_intersection.notes.end());
    }
    return c;
}

} // namespace dflag::classifier
