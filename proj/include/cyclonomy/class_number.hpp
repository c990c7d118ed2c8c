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
#include <numeric>
#include <string>
#include <vector>

#include "cyclonomy/ideal.hpp"

namespace cyclonomy {

/// Largest coefficient box tried per prime ideal during certification.
inline constexpr std::uint64_t kCertificationHeight = 3;

struct PrincipalityCheck {
    std::uint64_t q;
    std::uint64_t f;
    std::uint64_t g;
    CycIdeal prime;
    CycInt witness;
};

struct ClassNumberCertificate {
    std::uint64_t p;
    RationalInterval minkowski;
    std::vector<PrincipalityCheck> primes_checked;
    std::uint64_t class_number;
};

/**
 * Certifies h(Q(zeta_p)) = 1 for p in {3, 5, 7}: every prime ideal of norm
 * at most the upper Minkowski bound must have a generator inside a small
 * coefficient box. Throws UnsupportedPrime outside {3, 5, 7} and
 * CertificationFailed if some prime resists the search.
 */
inline ClassNumberCertificate class_number_small(const FieldContext& ctx)
{
    const auto p = ctx.p();
    if (p != 3 && p != 5 && p != 7)
        detail::fail(Errc::UnsupportedPrime, "class number certification supports p in {3, 5, 7} only");

    ClassNumberCertificate cert{p, minkowski_bound(ctx), {}, 1};
    const Integer limit = floor(cert.minkowski.hi);
    for (std::uint64_t q = 2; Integer(static_cast<unsigned long>(q)) <= limit; ++q) {
        if (!is_prime(q))
            continue;
        auto split = prime_split(ctx, q);
        for (auto& prime : split.primes) {
            if (prime.norm() > limit)
                continue;
            std::optional<CycInt> witness;
            for (std::uint64_t h = 1; h <= kCertificationHeight && !witness; ++h)
                witness = is_principal_bounded(prime, h);
            if (!witness)
                detail::fail(Errc::CertificationFailed,
                             "no generator found for a prime above " + std::to_string(q));
            cert.primes_checked.push_back({q, split.f, split.g, prime, *witness});
        }
    }
    return cert;
}

/// Finite abelian group Z/d_1 x ... x Z/d_k with d_1 | d_2 | ... | d_k.
class ClassGroupModel {
public:
    explicit ClassGroupModel(std::vector<std::uint64_t> invariant_factors) : factors_(std::move(invariant_factors))
    {
        for (std::size_t i = 0; i < factors_.size(); ++i) {
            if (factors_[i] < 1)
                detail::fail(Errc::OutOfRange, "invariant factors must be positive");
            if (i + 1 < factors_.size() && factors_[i + 1] % factors_[i] != 0)
                detail::fail(Errc::OutOfRange, "invariant factors must form a divisibility chain");
        }
    }

    const std::vector<std::uint64_t>& invariant_factors() const noexcept { return factors_; }

    std::uint64_t order() const
    {
        return std::accumulate(factors_.begin(), factors_.end(), std::uint64_t{1}, std::multiplies<>{});
    }

    /// Exponent of the group (the last invariant factor).
    std::uint64_t exponent() const { return factors_.empty() ? 1 : factors_.back(); }

    /// n * x, additively, reduced.
    std::vector<std::uint64_t> power(const std::vector<std::uint64_t>& x, std::uint64_t n) const
    {
        check(x);
        std::vector<std::uint64_t> out(x.size());
        for (std::size_t i = 0; i < x.size(); ++i)
            out[i] = mulmod(x[i] % factors_[i], n % factors_[i], factors_[i]);
        return out;
    }

    bool is_identity(const std::vector<std::uint64_t>& x) const
    {
        check(x);
        for (std::size_t i = 0; i < x.size(); ++i)
            if (x[i] % factors_[i] != 0)
                return false;
        return true;
    }

private:
    void check(const std::vector<std::uint64_t>& x) const
    {
        if (x.size() != factors_.size())
            detail::fail(Errc::BadLength, "element has " + std::to_string(x.size()) + " components, group has " +
                                              std::to_string(factors_.size()));
    }

    std::vector<std::uint64_t> factors_;
};

/**
 * The coprime-power lemma on one instance: with gcd(n, h) = 1, x^n = e
 * forces x = e. x is recovered from x^n as (x^n)^(n^-1 mod exponent), and
 * the recovery is checked. Throws NotCoprime when gcd(n, h) != 1.
 */
inline bool coprime_power_trivial(const ClassGroupModel& group, const std::vector<std::uint64_t>& x, std::uint64_t n)
{
    const std::uint64_t h = group.order();
    if (gcd_u64(n, h) != 1)
        detail::fail(Errc::NotCoprime, "gcd(n, h) = " + std::to_string(gcd_u64(n, h)));
    const auto xn = group.power(x, n);
    const std::uint64_t e = group.exponent();
    std::uint64_t inv = 0;
    for (std::uint64_t k = 0; k < e; ++k)
        if (mulmod(n % e, k, e) == 1 % e) {
            inv = k;
            break;
        }
    const auto back = group.power(xn, inv);
    for (std::size_t i = 0; i < x.size(); ++i)
        detail::ensure(back[i] == x[i] % group.invariant_factors()[i], "x not recovered from x^n");
    return !group.is_identity(xn) || group.is_identity(x);
}

} // namespace cyclonomy
