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

#include <optional>
#include <string>

#include "dflag/branching/lr.hpp"
#include "dflag/liecomb/theta.hpp"

// Truncated multiplicity-freeness sweeps. The duals in the sphericity criteria are dropped:
// for GL_n, V_lambda^* restricts to GL_p x GL_q with the multiplicities of V_lambda.

namespace dflag::branching {

/// lambda = sum of the fundamental weights at the break points of P's composition.
inline Partition highest_weight_of_parabolic(const liecomb::ParabolicSpec& P)
{
    if (!P.group.is_type_a()) {
        throw InvalidInput("highest_weight_of_parabolic needs a GL_n parabolic, got " + P.to_string());
    }
    if (P.orientation != liecomb::Orientation::Standard) {
        throw InvalidInput("highest_weight_of_parabolic needs a Standard parabolic, got " + P.to_string());
    }
    P.validate();
    const int n = P.group.n;
    std::vector<int> lambda(static_cast<std::size_t>(n), 0);
    int s = 0;
    for (std::size_t b = 0; b + 1 < P.blocks.size(); ++b) {
        s += P.blocks[b];
        for (int i = 0; i < s; ++i) {
            ++lambda[static_cast<std::size_t>(i)];
        }
    }
    return Partition(lambda);
}

struct RestrictionProbe {
    bool multiplicity_free = true;
    int k_max = 0;
    std::optional<int> failing_k;
    /// The repeated constituent at the failing k.
    std::optional<std::pair<PairPartition, std::uint64_t>> witness;
};

/// Restriction of V_{k lambda(P)} to GL_p x GL_q is multiplicity-free for 0 <= k <= k_max.
inline RestrictionProbe spherical_probe_restriction(const liecomb::ParabolicSpec& P, int p, int q, int k_max)
{
    if (k_max < 1) {
        throw InvalidInput("spherical_probe_restriction needs k_max >= 1");
    }
    if (p + q != P.group.n) {
        throw InvalidInput("spherical_probe_restriction: p + q must equal n");
    }
    const auto lambda = highest_weight_of_parabolic(P);
    RestrictionProbe out;
    out.k_max = k_max;
    for (int k = 1; k <= k_max; ++k) {
        const auto d = restrict_to_levi(lambda.scaled(k), p, q);
        if (auto rep = d.first_repeated()) {
            out.multiplicity_free = false;
            out.failing_k = k;
            out.witness = std::move(rep);
            return out;
        }
    }
    return out;
}

struct TensorProbe {
    bool multiplicity_free = true;
    int k_max = 0;
    int l_max = 0;
    Partition lambda;
    Partition lambda_theta;
    std::optional<std::pair<int, int>> failing;
    std::optional<std::pair<Partition, std::uint64_t>> witness;
};

/// V_{k lambda} (x) V_{l lambda^theta} is multiplicity-free for k <= k_max, l <= l_max, where
/// lambda^theta is the weight of theta(P).
inline TensorProbe spherical_probe_tensor(const liecomb::ParabolicSpec& P, const liecomb::SymmetricPairSpec& pair,
                                          int k_max, int l_max)
{
    if (!pair.group.is_type_a()) {
        throw InvalidInput("spherical_probe_tensor covers the GL family only, got " + pair.to_string());
    }
    if (k_max < 1 || l_max < 1) {
        throw InvalidInput("spherical_probe_tensor needs k_max, l_max >= 1");
    }
    TensorProbe out;
    out.k_max = k_max;
    out.l_max = l_max;
    out.lambda = highest_weight_of_parabolic(P);
    out.lambda_theta = highest_weight_of_parabolic(liecomb::theta_on_parabolic(pair, P));
    const int n = P.group.n;
    for (int k = 1; k <= k_max; ++k) {
        for (int l = 1; l <= l_max; ++l) {
            const auto d = tensor_decompose(out.lambda.scaled(k), out.lambda_theta.scaled(l), n);
            if (auto rep = d.first_repeated()) {
                out.multiplicity_free = false;
                out.failing = std::make_pair(k, l);
                out.witness = std::move(rep);
                return out;
            }
        }
    }
    return out;
}

} // namespace dflag::branching
