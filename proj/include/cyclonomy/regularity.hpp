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

#include <algorithm>
#include <cstdint>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "cyclonomy/bigint.hpp"

namespace cyclonomy {

struct BernoulliValue {
    std::uint64_t n;
    Integer numerator;
    Integer denominator; ///< positive, coprime to numerator

    Rational value() const { return Rational(numerator, denominator); }
    friend bool operator==(const BernoulliValue&, const BernoulliValue&) = default;
};

/**
 * Memoized exact Bernoulli numbers, B_1 = -1/2, from
 *   sum_{k=0}^{n} C(n+1, k) B_k = 0.
 * Growth is serialized by a mutex; reads of computed entries are copies.
 */
class BernoulliTable {
public:
    BernoulliValue get(std::uint64_t n)
    {
        std::lock_guard lock(mutex_);
        extend(n);
        const Rational& b = values_[n];
        return {n, b.get_num(), b.get_den()};
    }

    /// Copy of every entry computed so far.
    std::vector<BernoulliValue> snapshot() const
    {
        std::lock_guard lock(mutex_);
        std::vector<BernoulliValue> out;
        for (std::size_t i = 0; i < values_.size(); ++i)
            out.push_back({i, values_[i].get_num(), values_[i].get_den()});
        return out;
    }

    std::size_t size() const
    {
        std::lock_guard lock(mutex_);
        return values_.size();
    }

    /// Adopts cached values in index order while each satisfies the
    /// recurrence against the entries before it; stops at the first gap or
    /// mismatch. Returns the number of entries accepted.
    std::size_t seed(const std::vector<BernoulliValue>& cached)
    {
        std::lock_guard lock(mutex_);
        std::size_t accepted = 0;
        for (const auto& entry : cached) {
            if (entry.n < values_.size()) {
                if (values_[entry.n] != entry.value())
                    break;
                ++accepted;
                continue;
            }
            if (entry.n != values_.size() || entry.denominator <= 0)
                break;
            Rational candidate(entry.numerator, entry.denominator);
            candidate.canonicalize();
            if (candidate.get_num() != entry.numerator || candidate != next_value())
                break;
            values_.push_back(candidate);
            ++accepted;
        }
        return accepted;
    }

private:
    Rational next_value() const
    {
        const std::uint64_t n = values_.size();
        if (n == 0)
            return 1;
        Rational sum = 0;
        for (std::uint64_t k = 0; k < n; ++k)
            if (values_[k] != 0)
                sum += Rational(binomial(n + 1, k)) * values_[k];
        Rational out = -sum / Rational(Integer(static_cast<unsigned long>(n + 1)));
        out.canonicalize();
        return out;
    }

    void extend(std::uint64_t n)
    {
        while (values_.size() <= n)
            values_.push_back(next_value());
    }

    mutable std::mutex mutex_;
    std::vector<Rational> values_;
};

inline BernoulliTable& default_bernoulli_table()
{
    static BernoulliTable table;
    return table;
}

inline BernoulliValue bernoulli(std::uint64_t n) { return default_bernoulli_table().get(n); }

/// prod of primes q with (q - 1) | n, for even n >= 2.
inline Integer vsc_denominator(std::uint64_t n)
{
    if (n < 2 || n % 2 != 0)
        detail::fail(Errc::OddIndex, "index " + std::to_string(n) + " is not an even number >= 2");
    Integer out = 1;
    for (std::uint64_t d = 1; d <= n; ++d)
        if (n % d == 0 && is_prime(d + 1))
            out *= static_cast<unsigned long>(d + 1);
    return out;
}

struct RegularityReport {
    std::uint64_t p;
    bool regular;
    /// (p, n) with p | numerator(B_n), n even in [2, p-3].
    std::vector<std::pair<std::uint64_t, std::uint64_t>> irregular_pairs;
};

/// Kummer's criterion on the numerators of B_2, B_4, ..., B_{p-3}.
inline RegularityReport is_regular(std::uint64_t p, BernoulliTable& table = default_bernoulli_table())
{
    if (p < 3 || !is_prime(p))
        detail::fail(Errc::NotAnOddPrime, std::to_string(p) + " is not an odd prime");
    RegularityReport report{p, true, {}};
    for (std::uint64_t n = 2; n + 3 <= p; n += 2) {
        if (mod_nonneg(table.get(n).numerator, p) == 0)
            report.irregular_pairs.emplace_back(p, n);
    }
    report.regular = report.irregular_pairs.empty();
    return report;
}

/// Reports for every odd prime in [lo, hi], ascending, sharing one table.
inline std::vector<RegularityReport> regularity_range(std::uint64_t lo, std::uint64_t hi,
                                                      BernoulliTable& table = default_bernoulli_table())
{
    std::vector<RegularityReport> out;
    if (hi >= 3)
        table.get(hi);
    for (std::uint64_t p = std::max<std::uint64_t>(lo, 3); p <= hi; ++p)
        if (is_prime(p))
            out.push_back(is_regular(p, table));
    return out;
}

inline std::vector<std::uint64_t> irregular_primes_upto(std::uint64_t N, BernoulliTable& table = default_bernoulli_table())
{
    std::vector<std::uint64_t> out;
    for (const auto& r : regularity_range(3, N, table))
        if (!r.regular)
            out.push_back(r.p);
    return out;
}

} // namespace cyclonomy
