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
#include <charconv>
#include <compare>
#include <functional>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "dflag/errors.hpp"

namespace dflag::liecomb {

namespace detail {

inline std::string join_ints(const std::vector<int>& v, char sep = ',')
{
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i != 0) {
            out.push_back(sep);
        }
        out += std::to_string(v[i]);
    }
    return out;
}

inline std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) {
        s.remove_suffix(1);
    }
    return s;
}

inline std::vector<std::string_view> split(std::string_view s, char sep)
{
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        out.push_back(trim(s.substr(start, pos == std::string_view::npos ? pos : pos - start)));
        if (pos == std::string_view::npos) {
            break;
        }
        start = pos + 1;
    }
    return out;
}

/// Parses "a,b,c" into integers; every token must be an integer >= min_value.
inline std::vector<int> parse_int_list(std::string_view text, int min_value)
{
    std::vector<int> out;
    if (trim(text).empty()) {
        throw ParseError("empty integer list");
    }
    for (auto token : split(text, ',')) {
        int value = 0;
        const auto* first = token.data();
        const auto* last = token.data() + token.size();
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (token.empty() || ec != std::errc {} || ptr != last) {
            throw ParseError("not an integer: '" + std::string(token) + "' in '" + std::string(text) + "'");
        }
        if (value < min_value) {
            throw ParseError("out of range: '" + std::string(token) + "' in '" + std::string(text) + "' (minimum "
                             + std::to_string(min_value) + ")");
        }
        out.push_back(value);
    }
    return out;
}

inline std::vector<int> sorted_desc(std::vector<int> v)
{
    std::sort(v.begin(), v.end(), std::greater<> {});
    return v;
}

inline std::vector<int> drop_zeros(const std::vector<int>& v)
{
    std::vector<int> out;
    std::copy_if(v.begin(), v.end(), std::back_inserter(out), [](int x) { return x != 0; });
    return out;
}

} // namespace detail

/// Block sizes of a type-A parabolic, in flag order.
class Composition {
public:
    explicit Composition(std::vector<int> parts)
        : parts_(std::move(parts))
    {
        if (parts_.empty()) {
            throw InvalidInput("composition must have at least one part");
        }
        for (int x : parts_) {
            if (x < 1) {
                throw InvalidInput("composition parts must be positive: " + detail::join_ints(parts_));
            }
        }
    }

    static Composition parse(std::string_view text) { return Composition(detail::parse_int_list(text, 1)); }

    const std::vector<int>& parts() const noexcept { return parts_; }
    int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    std::vector<int> sorted_desc() const { return detail::sorted_desc(parts_); }
    std::string to_string() const { return detail::join_ints(parts_); }

    auto operator<=>(const Composition&) const = default;

private:
    std::vector<int> parts_;
};

/// A palindrome (h_1..h_l, [m], h_l..h_1) stored as its left half plus the middle part.
///
/// A zero middle means "no middle part". Shapes of self-dual flags: the symplectic variant
/// (SymplecticComposition) additionally requires the middle part to be even.
class PalindromicComposition {
public:
    PalindromicComposition(std::vector<int> half, int middle)
        : half_(std::move(half)),
          middle_(middle)
    {
        for (int x : half_) {
            if (x < 1) {
                throw InvalidInput("palindromic composition parts must be positive");
            }
        }
        if (middle_ < 0) {
            throw InvalidInput("middle part must be nonnegative");
        }
        if (half_.empty() && middle_ == 0) {
            throw InvalidInput("palindromic composition must be nonempty");
        }
    }

    /// Splits a full palindrome; an odd length means the centre entry is the middle part.
    static PalindromicComposition from_full(const std::vector<int>& parts)
    {
        if (parts.empty()) {
            throw InvalidInput("empty composition");
        }
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (parts[i] != parts[parts.size() - 1 - i]) {
                throw InvalidInput("composition is not palindromic: " + detail::join_ints(parts));
            }
        }
        const std::size_t h = parts.size() / 2;
        std::vector<int> half(parts.begin(), parts.begin() + static_cast<std::ptrdiff_t>(h));
        const int middle = parts.size() % 2 == 1 ? parts[h] : 0;
        return {std::move(half), middle};
    }

    const std::vector<int>& half() const noexcept { return half_; }
    int middle() const noexcept { return middle_; }
    /// Sum of the half; the dimension of the largest isotropic member of the flag.
    int isotropic_dim() const { return std::accumulate(half_.begin(), half_.end(), 0); }
    int size() const { return 2 * isotropic_dim() + middle_; }
    int length() const { return 2 * static_cast<int>(half_.size()) + (middle_ > 0 ? 1 : 0); }

    std::vector<int> full() const
    {
        std::vector<int> out = half_;
        if (middle_ > 0) {
            out.push_back(middle_);
        }
        out.insert(out.end(), half_.rbegin(), half_.rend());
        return out;
    }

    std::vector<int> sorted_desc() const { return detail::sorted_desc(full()); }
    std::string to_string() const { return detail::join_ints(full()); }

    auto operator<=>(const PalindromicComposition&) const = default;

private:
    std::vector<int> half_;
    int middle_;
};

/// Type-C parabolic shape: |lambda| = 2n, palindromic, middle part even.
class SymplecticComposition : public PalindromicComposition {
public:
    SymplecticComposition(std::vector<int> half, int middle)
        : PalindromicComposition(std::move(half), middle)
    {
        if (this->middle() % 2 != 0) {
            throw InvalidInput("symplectic composition needs an even middle part: " + to_string());
        }
    }

    explicit SymplecticComposition(const PalindromicComposition& p)
        : SymplecticComposition(p.half(), p.middle())
    {
    }

    static SymplecticComposition from_full(const std::vector<int>& parts)
    {
        return SymplecticComposition(PalindromicComposition::from_full(parts));
    }

    static SymplecticComposition parse(std::string_view text)
    {
        try {
            return from_full(detail::parse_int_list(text, 1));
        } catch (const ParseError&) {
            throw;
        } catch (const InvalidInput& e) {
            throw ParseError(std::string(e.what()) + " (input '" + std::string(text) + "')");
        }
    }

    /// Rank n of Sp_2n.
    int rank() const { return size() / 2; }
};

enum class Family { GeneralLinear, Symplectic };

struct GroupDatum {
    Family family = Family::GeneralLinear;
    int n = 1;

    static GroupDatum gl(int n)
    {
        if (n < 1) {
            throw InvalidInput("GL_n needs n >= 1");
        }
        return {Family::GeneralLinear, n};
    }
    static GroupDatum sp(int n)
    {
        if (n < 1) {
            throw InvalidInput("Sp_2n needs n >= 1");
        }
        return {Family::Symplectic, n};
    }

    /// Dimension of the natural module.
    int dim() const noexcept { return family == Family::Symplectic ? 2 * n : n; }
    /// Rank of the Weyl group (number of simple reflections).
    int rank() const noexcept { return family == Family::Symplectic ? n : n - 1; }
    bool is_type_a() const noexcept { return family == Family::GeneralLinear; }

    std::string to_string() const
    {
        return is_type_a() ? "GL_" + std::to_string(n) : "Sp_" + std::to_string(2 * n);
    }

    auto operator<=>(const GroupDatum&) const = default;
};

enum class Orientation { Standard, Opposite };

/// A parabolic subgroup containing the upper (Standard) or lower (Opposite) triangular Borel.
///
/// `blocks` lists the diagonal block sizes over the natural module, so for type C it is the
/// full palindrome.
struct ParabolicSpec {
    GroupDatum group;
    std::vector<int> blocks;
    Orientation orientation = Orientation::Standard;

    static ParabolicSpec make(GroupDatum group, std::vector<int> blocks,
                              Orientation orientation = Orientation::Standard)
    {
        ParabolicSpec p {group, std::move(blocks), orientation};
        p.validate();
        return p;
    }

    static ParabolicSpec type_a(const Composition& shape, Orientation orientation = Orientation::Standard)
    {
        return make(GroupDatum::gl(shape.size()), shape.parts(), orientation);
    }

    static ParabolicSpec type_c(const SymplecticComposition& shape,
                                Orientation orientation = Orientation::Standard)
    {
        return make(GroupDatum::sp(shape.rank()), shape.full(), orientation);
    }

    static ParabolicSpec borel(GroupDatum group)
    {
        return make(group, std::vector<int>(static_cast<std::size_t>(group.dim()), 1));
    }

    static ParabolicSpec whole(GroupDatum group) { return make(group, {group.dim()}); }

    void validate() const
    {
        if (blocks.empty()) {
            throw InvalidInput("parabolic needs at least one block");
        }
        int total = 0;
        for (int b : blocks) {
            if (b < 1) {
                throw InvalidInput("parabolic block sizes must be positive");
            }
            total += b;
        }
        if (total != group.dim()) {
            throw InvalidInput("parabolic shape " + detail::join_ints(blocks) + " does not have size "
                               + std::to_string(group.dim()) + " for " + group.to_string());
        }
        if (!group.is_type_a()) {
            (void)SymplecticComposition::from_full(blocks);
        }
    }

    int length() const noexcept { return static_cast<int>(blocks.size()); }
    bool is_whole() const noexcept { return blocks.size() == 1; }
    bool is_borel() const
    {
        return std::all_of(blocks.begin(), blocks.end(), [](int b) { return b == 1; });
    }

    Composition shape_a() const { return Composition(blocks); }
    SymplecticComposition shape_c() const { return SymplecticComposition::from_full(blocks); }

    /// Block index of each coordinate 0..dim-1.
    std::vector<int> block_of_position() const
    {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(group.dim()));
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            out.insert(out.end(), static_cast<std::size_t>(blocks[b]), static_cast<int>(b));
        }
        return out;
    }

    std::string to_string() const
    {
        return group.to_string() + "[" + detail::join_ints(blocks) + "]"
               + (orientation == Orientation::Opposite ? "^op" : "");
    }

    auto operator<=>(const ParabolicSpec&) const = default;
};

enum class PairKind { AI, AII, AIII, CI, CII };

inline std::string to_string(PairKind k)
{
    switch (k) {
    case PairKind::AI:
        return "AI";
    case PairKind::AII:
        return "AII";
    case PairKind::AIII:
        return "AIII";
    case PairKind::CI:
        return "CI";
    case PairKind::CII:
        return "CII";
    }
    return "?";
}

struct SymmetricPairSpec {
    PairKind kind = PairKind::AIII;
    int p = 0;
    int q = 0;
    GroupDatum group;

    static SymmetricPairSpec aiii(int p, int q)
    {
        if (p < 1 || q < 1) {
            throw InvalidInput("AIII(p,q) needs p, q >= 1");
        }
        return {PairKind::AIII, p, q, GroupDatum::gl(p + q)};
    }
    static SymmetricPairSpec ai(int n) { return {PairKind::AI, 0, 0, GroupDatum::gl(n)}; }
    static SymmetricPairSpec aii(int n)
    {
        if (n < 2 || n % 2 != 0) {
            throw InvalidInput("AII needs an even ambient rank, got " + std::to_string(n));
        }
        return {PairKind::AII, 0, 0, GroupDatum::gl(n)};
    }
    static SymmetricPairSpec ci(int n) { return {PairKind::CI, 0, 0, GroupDatum::sp(n)}; }
    static SymmetricPairSpec cii(int p, int q)
    {
        if (p < 1 || q < 1) {
            throw InvalidInput("CII(p,q) needs p, q >= 1");
        }
        return {PairKind::CII, p, q, GroupDatum::sp(p + q)};
    }

    /// Parses AI, AII, AIII:p,q, CI, CII:p,q; `n` supplies the rank for the kinds without p,q.
    static SymmetricPairSpec parse(std::string_view token, int n = 0)
    {
        token = detail::trim(token);
        const auto colon = token.find(':');
        const auto head = token.substr(0, colon);
        auto need_n = [&]() {
            if (n < 1) {
                throw ParseError("pair '" + std::string(token) + "' needs a rank (--n)");
            }
            return n;
        };
        auto pq = [&]() {
            if (colon == std::string_view::npos) {
                throw ParseError("pair '" + std::string(token) + "' needs p,q (e.g. AIII:2,2)");
            }
            const auto v = detail::parse_int_list(token.substr(colon + 1), 1);
            if (v.size() != 2) {
                throw ParseError("pair '" + std::string(token) + "' needs exactly two numbers p,q");
            }
            return v;
        };
        try {
            if (head == "AIII") {
                const auto v = pq();
                return aiii(v[0], v[1]);
            }
            if (head == "CII") {
                const auto v = pq();
                return cii(v[0], v[1]);
            }
            if (colon != std::string_view::npos) {
                throw ParseError("pair '" + std::string(token) + "' does not take p,q");
            }
            if (head == "AI") {
                return ai(need_n());
            }
            if (head == "AII") {
                return aii(need_n());
            }
            if (head == "CI") {
                return ci(need_n());
            }
        } catch (const ParseError&) {
            throw;
        } catch (const InvalidInput& e) {
            throw ParseError(std::string(e.what()) + " (token '" + std::string(token) + "')");
        }
        throw ParseError("unknown pair kind '" + std::string(head) + "'");
    }

    std::string to_string() const
    {
        switch (kind) {
        case PairKind::AIII:
            return "AIII(" + std::to_string(p) + "," + std::to_string(q) + ")";
        case PairKind::CII:
            return "CII(" + std::to_string(p) + "," + std::to_string(q) + ")";
        default:
            return liecomb::to_string(kind) + " on " + group.to_string();
        }
    }

    /// Number of simple factors of K that carry a flag variety.
    int k_factor_count() const { return kind == PairKind::AIII || kind == PairKind::CII ? 2 : 1; }

    /// True when the factor shapes of K are palindromic (isotropic flags).
    bool k_factors_palindromic() const
    {
        return kind == PairKind::AI || kind == PairKind::AII || kind == PairKind::CII;
    }

    /// Size of the natural module of each factor of K.
    std::vector<int> k_factor_dims() const
    {
        switch (kind) {
        case PairKind::AIII:
            return {p, q};
        case PairKind::CII:
            return {2 * p, 2 * q};
        case PairKind::CI:
            return {group.n};
        case PairKind::AI:
        case PairKind::AII:
            return {group.n};
        }
        return {};
    }

    auto operator<=>(const SymmetricPairSpec&) const = default;
};

/// A parabolic of K given by one shape per factor of K, each in full (ordered) form.
///
/// AIII: (composition of p, composition of q); CI: composition of n; CII: (palindrome of 2p,
/// palindrome of 2q) with even middles; AI: palindrome of n (isotropic flag type for SO_n);
/// AII: palindrome of n with even middle (isotropic flag type for Sp_n).
struct KParabolicSpec {
    std::vector<std::vector<int>> factors;

    static KParabolicSpec parse(std::string_view text)
    {
        KParabolicSpec out;
        for (auto token : detail::split(text, ';')) {
            out.factors.push_back(detail::parse_int_list(token, 1));
        }
        return out;
    }

    /// The parabolic K itself (every factor a single block).
    static KParabolicSpec whole(const SymmetricPairSpec& pair)
    {
        KParabolicSpec out;
        for (int d : pair.k_factor_dims()) {
            out.factors.push_back({d});
        }
        return out;
    }

    /// Borel subgroup of K.
    static KParabolicSpec borel(const SymmetricPairSpec& pair)
    {
        KParabolicSpec out;
        for (int d : pair.k_factor_dims()) {
            if (pair.k_factors_palindromic()) {
                std::vector<int> f(static_cast<std::size_t>(d / 2), 1);
                const int mid = d % 2;
                std::vector<int> full = f;
                if (mid > 0) {
                    full.push_back(mid);
                }
                full.insert(full.end(), f.begin(), f.end());
                out.factors.push_back(full);
            } else {
                out.factors.push_back(std::vector<int>(static_cast<std::size_t>(d), 1));
            }
        }
        return out;
    }

    void validate(const SymmetricPairSpec& pair) const
    {
        const auto dims = pair.k_factor_dims();
        if (factors.size() != dims.size()) {
            throw InvalidInput("K-parabolic for " + pair.to_string() + " needs "
                               + std::to_string(dims.size()) + " factor shape(s), got "
                               + std::to_string(factors.size()));
        }
        for (std::size_t i = 0; i < dims.size(); ++i) {
            (void)Composition(factors[i]);
            if (std::accumulate(factors[i].begin(), factors[i].end(), 0) != dims[i]) {
                throw InvalidInput("K-factor shape " + detail::join_ints(factors[i]) + " must have size "
                                   + std::to_string(dims[i]));
            }
            if (pair.kind == PairKind::AI) {
                (void)PalindromicComposition::from_full(factors[i]);
            } else if (pair.kind == PairKind::AII || pair.kind == PairKind::CII) {
                (void)SymplecticComposition::from_full(factors[i]);
            }
        }
    }

    /// Conjugacy key: factor shapes with parts sorted (palindromes by sorted half and middle).
    std::vector<std::vector<int>> canonical_key(const SymmetricPairSpec& pair) const
    {
        std::vector<std::vector<int>> key;
        for (const auto& f : factors) {
            if (pair.k_factors_palindromic()) {
                const auto pc = PalindromicComposition::from_full(f);
                auto half = pc.half();
                int middle = pc.middle();
                // In SO_2m an isotropic (m-1)-space lies in one Lagrangian of each family, so
                // the connected stabilizer of a flag with middle part 2 also fixes a Lagrangian.
                if (pair.kind == PairKind::AI && pc.size() % 2 == 0 && middle == 2) {
                    half.push_back(1);
                    middle = 0;
                }
                auto k = detail::sorted_desc(half);
                k.push_back(-middle);
                key.push_back(std::move(k));
            } else {
                key.push_back(detail::sorted_desc(f));
            }
        }
        return key;
    }

    bool conjugate_to(const KParabolicSpec& other, const SymmetricPairSpec& pair) const
    {
        return canonical_key(pair) == other.canonical_key(pair);
    }

    std::string to_string() const
    {
        std::string out;
        for (std::size_t i = 0; i < factors.size(); ++i) {
            if (i != 0) {
                out.push_back(';');
            }
            out += detail::join_ints(factors[i]);
        }
        return out;
    }

    auto operator<=>(const KParabolicSpec&) const = default;
};

/// All compositions of n in lexicographic order.
inline std::vector<std::vector<int>> compositions_of(int n)
{
    std::vector<std::vector<int>> out;
    if (n == 0) {
        out.push_back({});
        return out;
    }
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int rest) {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int x = 1; x <= rest; ++x) {
            cur.push_back(x);
            rec(rest - x);
            cur.pop_back();
        }
    };
    rec(n);
    return out;
}

/// All symplectic (even-middle) palindromic shapes of size 2n, as full part lists, lexicographic.
inline std::vector<std::vector<int>> symplectic_shapes_of(int n)
{
    std::vector<std::vector<int>> out;
    for (int k = 0; k <= n; ++k) {
        for (const auto& half : compositions_of(k)) {
            if (half.empty() && n == 0) {
                continue;
            }
            out.push_back(SymplecticComposition(half, 2 * (n - k)).full());
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace dflag::liecomb
