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
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "dflag/fforacle/matrix.hpp"
#include "dflag/liecomb/roots.hpp"
#include "dflag/liecomb/types.hpp"

// Forms on F_q^d (0-based positions, partner of a is d-1-a):
//   symplectic  Omega[a][d-1-a] = +1 for a < d/2, -1 otherwise
//   orthogonal  S[a][d-1-a] = 1 (split form, odd q only)

namespace dflag::fforacle {

enum class FormKind { None, Symplectic, Orthogonal };

inline int partner(int d, int a) { return d - 1 - a; }

inline Matrix form_matrix(const PrimeField& f, FormKind kind, int d)
{
    Matrix m(d, d);
    for (int a = 0; a < d; ++a) {
        if (kind == FormKind::Symplectic) {
            m.at(a, partner(d, a)) = a < d / 2 ? 1 : f.neg(1);
        } else if (kind == FormKind::Orthogonal) {
            m.at(a, partner(d, a)) = 1;
        }
    }
    return m;
}

/// M^T F M == F.
inline bool preserves_form(const PrimeField& f, const Matrix& m, const Matrix& form)
{
    return multiply(f, multiply(f, transpose(m), form), m) == form;
}

/// A subgroup of GL_d(F_q) given by generators.
struct MatrixGroup {
    std::string name;
    int d = 0;
    FormKind form = FormKind::None;
    std::vector<Matrix> generators;
};

/// Root element for the matrix entry (a, b): I + E_ab for GL, exp(E_ab + c E_{b'a'}) in the form group.
inline Matrix root_element(const PrimeField& f, FormKind kind, int d, int a, int b)
{
    if (a == b) {
        throw InvalidInput("root_element: diagonal entry");
    }
    Matrix x(d, d);
    x.at(a, b) = 1;
    if (kind == FormKind::None) {
        return exp_nilpotent(f, x);
    }
    const auto form = form_matrix(f, kind, d);
    if (b == partner(d, a)) {
        if (kind == FormKind::Orthogonal) {
            throw InvalidInput("root_element: no orthogonal root at an anti-diagonal entry");
        }
        const auto m = exp_nilpotent(f, x);
        if (!preserves_form(f, m, form)) {
            throw std::logic_error("root_element: long root element does not preserve the form");
        }
        return m;
    }
    for (int c : {1, f.q() - 1}) {
        auto y = x;
        y.at(partner(d, b), partner(d, a)) = static_cast<std::uint8_t>(c);
        const auto m = exp_nilpotent(f, y);
        if (preserves_form(f, m, form)) {
            return m;
        }
    }
    throw std::logic_error("root_element: no sign preserves the form");
}

/// Split torus generators: t at each position (GL) or t, 1/t at each partner pair (forms).
inline std::vector<Matrix> torus_generators(const PrimeField& f, FormKind kind, int d)
{
    std::vector<Matrix> out;
    const int t = f.primitive_root();
    if (t == 1) {
        return out;
    }
    for (int a = 0; a < d; ++a) {
        auto m = Matrix::identity(d);
        if (kind == FormKind::None) {
            m.at(a, a) = static_cast<std::uint8_t>(t);
        } else {
            const int b = partner(d, a);
            if (b <= a) {
                continue;
            }
            m.at(a, a) = static_cast<std::uint8_t>(t);
            m.at(b, b) = f.inv(t);
        }
        out.push_back(std::move(m));
    }
    return out;
}

/// Root elements for the accepted entries plus the torus, duplicates removed.
template <typename Accept>
std::vector<Matrix> generators_for(const PrimeField& f, FormKind kind, int d, Accept accept)
{
    std::vector<Matrix> out;
    std::unordered_set<std::string> seen;
    for (int a = 0; a < d; ++a) {
        for (int b = 0; b < d; ++b) {
            if (a == b || !accept(a, b)) {
                continue;
            }
            if (kind == FormKind::Orthogonal && b == partner(d, a)) {
                continue;
            }
            auto m = root_element(f, kind, d, a, b);
            if (seen.insert(m.key()).second) {
                out.push_back(std::move(m));
            }
        }
    }
    for (auto& m : torus_generators(f, kind, d)) {
        if (seen.insert(m.key()).second) {
            out.push_back(std::move(m));
        }
    }
    return out;
}

inline FormKind form_of(const liecomb::GroupDatum& g)
{
    return g.is_type_a() ? FormKind::None : FormKind::Symplectic;
}

/// Generators of G(F_q) on its natural module.
inline MatrixGroup group_generators(const PrimeField& f, const liecomb::GroupDatum& g)
{
    const auto kind = form_of(g);
    return {g.to_string(), g.dim(), kind, generators_for(f, kind, g.dim(), [](int, int) { return true; })};
}

/// Generators of SO_d(F_q) for the split form (odd q).
inline MatrixGroup orthogonal_generators(const PrimeField& f, int d)
{
    if (f.q() % 2 == 0) {
        throw InvalidInput("orthogonal groups are only realized over fields of odd size");
    }
    return {"SO_" + std::to_string(d), d, FormKind::Orthogonal,
            generators_for(f, FormKind::Orthogonal, d, [](int, int) { return true; })};
}

/// Generators of P(F_q): root elements inside P and the torus.
inline MatrixGroup parabolic_generators(const PrimeField& f, const liecomb::ParabolicSpec& P)
{
    const auto block_of = P.block_of_position();
    const auto kind = form_of(P.group);
    return {P.to_string(), P.group.dim(), kind, generators_for(f, kind, P.group.dim(), [&](int a, int b) {
                return liecomb::entry_in_parabolic(P, block_of, a, b);
            })};
}

/// Coordinate span of the given positions, as an RREF basis.
inline Matrix coordinate_span(int d, const std::vector<int>& positions)
{
    std::set<int> sorted(positions.begin(), positions.end());
    Matrix m(static_cast<int>(sorted.size()), d);
    int r = 0;
    for (int a : sorted) {
        m.at(r++, a) = 1;
    }
    return m;
}

/// Base point of G/P: the coordinate flag fixed by the Standard or Opposite parabolic.
/// For Sp only the isotropic members are kept; they determine the flag.
inline std::vector<Matrix> base_flag(const liecomb::ParabolicSpec& P)
{
    const int d = P.group.dim();
    std::vector<Matrix> out;
    int s = 0;
    const int limit = P.group.is_type_a() ? d - 1 : P.group.n;
    for (std::size_t i = 0; i + 1 < P.blocks.size(); ++i) {
        s += P.blocks[i];
        if (s > limit) {
            break;
        }
        std::vector<int> pos;
        for (int k = 0; k < s; ++k) {
            pos.push_back(P.orientation == liecomb::Orientation::Standard ? k : d - 1 - k);
        }
        out.push_back(coordinate_span(d, pos));
    }
    return out;
}

/// K, its parabolic Q and the base point of K/Q, all acting on the natural module of G.
struct PairRealization {
    MatrixGroup g;
    MatrixGroup k;
    MatrixGroup q;
    std::vector<Matrix> z_base;
};

namespace detail {

/// Positions of the natural module of G carrying each factor of K, in the factor's own order.
inline std::vector<std::vector<int>> k_regions(const liecomb::SymmetricPairSpec& pair)
{
    const int d = pair.group.dim();
    std::vector<std::vector<int>> regions;
    switch (pair.kind) {
    case liecomb::PairKind::AIII:
        regions.resize(2);
        for (int a = 0; a < d; ++a) {
            regions[a < pair.p ? 0 : 1].push_back(a);
        }
        break;
    case liecomb::PairKind::CI:
        regions.resize(1);
        for (int a = 0; a < pair.group.n; ++a) {
            regions[0].push_back(a);
        }
        break;
    case liecomb::PairKind::CII:
        regions.resize(2);
        for (int a = 0; a < d; ++a) {
            regions[a < pair.p || a >= d - pair.p ? 0 : 1].push_back(a);
        }
        break;
    case liecomb::PairKind::AI:
    case liecomb::PairKind::AII:
        regions.resize(1);
        for (int a = 0; a < d; ++a) {
            regions[0].push_back(a);
        }
        break;
    }
    return regions;
}

} // namespace detail

/// Fixed realization used by the oracle. AI uses SO of the split form and AII the Sp of the
/// anti-diagonal form; both are K-conjugate choices and do not change orbit counts.
inline PairRealization realize_pair(const PrimeField& f, const liecomb::SymmetricPairSpec& pair,
                                    const liecomb::KParabolicSpec& Q)
{
    Q.validate(pair);
    const int d = pair.group.dim();
    FormKind k_form = form_of(pair.group);
    if (pair.kind == liecomb::PairKind::AI) {
        if (f.q() % 2 == 0) {
            throw InvalidInput("AI needs a field of odd size (SO_n is realized by a symmetric form)");
        }
        k_form = FormKind::Orthogonal;
    } else if (pair.kind == liecomb::PairKind::AII) {
        k_form = FormKind::Symplectic;
    }
    const auto regions = detail::k_regions(pair);
    std::vector<int> region_of(static_cast<std::size_t>(d), -1);
    std::vector<int> block_of(static_cast<std::size_t>(d), -1);
    PairRealization out;
    out.g = group_generators(f, pair.group);
    for (std::size_t r = 0; r < regions.size(); ++r) {
        const auto& pos = regions[r];
        const auto& shape = Q.factors[r];
        int i = 0;
        for (std::size_t b = 0; b < shape.size(); ++b) {
            for (int k = 0; k < shape[b]; ++k, ++i) {
                region_of[static_cast<std::size_t>(pos[static_cast<std::size_t>(i)])] = static_cast<int>(r);
                block_of[static_cast<std::size_t>(pos[static_cast<std::size_t>(i)])] = static_cast<int>(b);
            }
        }
        // base point: coordinate flag of the factor (isotropic half only for palindromic shapes)
        const int limit = pair.k_factors_palindromic() ? static_cast<int>(pos.size()) / 2
                                                       : static_cast<int>(pos.size()) - 1;
        int s = 0;
        for (std::size_t b = 0; b + 1 < shape.size(); ++b) {
            s += shape[b];
            if (s > limit) {
                break;
            }
            out.z_base.push_back(coordinate_span(d, std::vector<int>(pos.begin(), pos.begin() + s)));
        }
    }
    auto in_k = [&](int a, int b) {
        const auto ra = region_of[static_cast<std::size_t>(a)];
        return ra >= 0 && ra == region_of[static_cast<std::size_t>(b)];
    };
    out.k = {"K", d, k_form, generators_for(f, k_form, d, in_k)};
    out.q = {"Q", d, k_form, generators_for(f, k_form, d, [&](int a, int b) {
                 return in_k(a, b) && block_of[static_cast<std::size_t>(a)] <= block_of[static_cast<std::size_t>(b)];
             })};
    return out;
}

/// |GL_d(F_q)| or |Sp_2n(F_q)|.
inline std::uint64_t group_order(const liecomb::GroupDatum& g, int q)
{
    std::uint64_t out = 1;
    if (g.is_type_a()) {
        std::uint64_t qd = 1;
        for (int i = 0; i < g.n; ++i) {
            qd *= static_cast<std::uint64_t>(q);
        }
        std::uint64_t qi = 1;
        for (int i = 0; i < g.n; ++i) {
            out *= qd - qi;
            qi *= static_cast<std::uint64_t>(q);
        }
        return out;
    }
    std::uint64_t q2i = 1;
    for (int i = 1; i <= g.n; ++i) {
        q2i *= static_cast<std::uint64_t>(q) * static_cast<std::uint64_t>(q);
        out *= q2i - 1;
    }
    for (int i = 0; i < g.n * g.n; ++i) {
        out *= static_cast<std::uint64_t>(q);
    }
    return out;
}

struct GroupPoints {
    MatrixGroup group;
    /// Closure of the generators; empty when the order exceeds the budget.
    std::vector<Matrix> elements;
    std::uint64_t order = 0;
    bool enumerated = false;
};

/// Generators of G(F_q) and, when |G(F_q)| fits in the budget, all elements (sorted by entries).
inline GroupPoints group_points(const liecomb::GroupDatum& g, int q, std::uint64_t budget)
{
    const PrimeField f(q);
    GroupPoints out {group_generators(f, g), {}, group_order(g, q), false};
    if (out.order > budget) {
        return out;
    }
    std::unordered_set<std::string> seen;
    std::vector<Matrix> frontier {Matrix::identity(g.dim())};
    seen.insert(frontier.front().key());
    out.elements = frontier;
    while (!frontier.empty()) {
        std::vector<Matrix> next;
        for (const auto& m : frontier) {
            for (const auto& s : out.group.generators) {
                auto p = multiply(f, m, s);
                if (seen.insert(p.key()).second) {
                    next.push_back(p);
                    out.elements.push_back(std::move(p));
                }
            }
        }
        frontier = std::move(next);
    }
    std::sort(out.elements.begin(), out.elements.end(),
              [](const Matrix& a, const Matrix& b) { return a.data < b.data; });
    out.enumerated = true;
    return out;
}

} // namespace dflag::fforacle
