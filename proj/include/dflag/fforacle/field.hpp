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

#include <array>
#include <cstdint>
#include <string>

#include "dflag/errors.hpp"

namespace dflag::fforacle {

/// Arithmetic in F_q for the primes q in {2, 3, 5}.
class PrimeField {
public:
    explicit PrimeField(int q)
        : q_(q)
    {
        if (q != 2 && q != 3 && q != 5) {
            throw InvalidInput("finite field size must be one of 2, 3, 5; got " + std::to_string(q));
        }
        for (int a = 1; a < q; ++a) {
            for (int b = 1; b < q; ++b) {
                if (a * b % q == 1) {
                    inv_[static_cast<std::size_t>(a)] = static_cast<std::uint8_t>(b);
                }
            }
        }
    }

    int q() const noexcept { return q_; }

    std::uint8_t add(int a, int b) const noexcept { return static_cast<std::uint8_t>((a + b) % q_); }
    std::uint8_t sub(int a, int b) const noexcept { return static_cast<std::uint8_t>((a - b + q_) % q_); }
    std::uint8_t mul(int a, int b) const noexcept { return static_cast<std::uint8_t>(a * b % q_); }
    std::uint8_t neg(int a) const noexcept { return static_cast<std::uint8_t>((q_ - a) % q_); }
    /// Inverse of a nonzero element.
    std::uint8_t inv(int a) const noexcept { return inv_[static_cast<std::size_t>(a)]; }
    /// Reduction of an arbitrary integer.
    std::uint8_t from_int(long long v) const noexcept
    {
        const long long r = v % q_;
        return static_cast<std::uint8_t>(r < 0 ? r + q_ : r);
    }

    /// A generator of the multiplicative group.
    std::uint8_t primitive_root() const noexcept { return q_ == 2 ? 1 : 2; }

private:
    int q_;
    std::array<std::uint8_t, 5> inv_ {};
};

} // namespace dflag::fforacle
