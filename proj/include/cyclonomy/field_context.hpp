/*
   Copyright 2026 The Cyclonomy Authors

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
#include <string>
#include <vector>

#include "cyclonomy/bigint.hpp"

namespace cyclonomy {

/// The p-th cyclotomic field Q(zeta_p) for an odd prime p. Elements are
/// stored on the power basis 1, zeta, ..., zeta^(p-2).
class FieldContext {
public:
    /// Throws NotAnOddPrime unless p is an odd prime.
    static FieldContext create(std::uint64_t p)
    {
        if (p < 3 || !is_prime(p))
            detail::fail(Errc::NotAnOddPrime, std::to_string(p) + " is not an odd prime");
        return FieldContext(p);
    }

    std::uint64_t p() const noexcept { return p_; }
    std::size_t degree() const noexcept { return static_cast<std::size_t>(p_ - 1); }

    /// Coefficients of Phi_p = 1 + X + ... + X^(p-1), lowest degree first.
    std::vector<Integer> modulus() const { return std::vector<Integer>(p_, Integer(1)); }

    friend bool operator==(const FieldContext&, const FieldContext&) = default;

private:
    explicit FieldContext(std::uint64_t p) : p_(p) {}

    std::uint64_t p_;
};

inline FieldContext ctx_new(std::uint64_t p) { return FieldContext::create(p); }

namespace detail {

inline void require_same(const FieldContext& a, const FieldContext& b)
{
    if (a != b)
        fail(Errc::ContextMismatch,
             "elements of Q(zeta_" + std::to_string(a.p()) + ") and Q(zeta_" + std::to_string(b.p()) + ")");
}

} // namespace detail
} // namespace cyclonomy
