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
#include <random>
#include <utility>
#include <vector>

#include "cyclonomy/bigint.hpp"

// Polynomials over GF(q), q prime, as little-endian coefficient vectors.

namespace cyclonomy::detail::gf {

using Coeffs = std::vector<std::uint64_t>;

class Field {
public:
    explicit Field(std::uint64_t q) : q_(q) {}

    std::uint64_t modulus() const noexcept { return q_; }

    static void trim(Coeffs& f)
    {
        while (!f.empty() && f.back() == 0)
            f.pop_back();
    }

    static long degree(const Coeffs& f) { return static_cast<long>(f.size()) - 1; }

    std::uint64_t inv(std::uint64_t a) const { return cyclonomy::powmod(a, q_ - 2, q_); }

    Coeffs add(Coeffs a, const Coeffs& b) const
    {
        if (a.size() < b.size())
            a.resize(b.size(), 0);
        for (std::size_t i = 0; i < b.size(); ++i)
            a[i] = (a[i] + b[i]) % q_;
        trim(a);
        return a;
    }

    Coeffs sub(Coeffs a, const Coeffs& b) const
    {
        if (a.size() < b.size())
            a.resize(b.size(), 0);
        for (std::size_t i = 0; i < b.size(); ++i)
            a[i] = (a[i] + q_ - b[i]) % q_;
        trim(a);
        return a;
    }

    Coeffs mul(const Coeffs& a, const Coeffs& b) const
    {
        if (a.empty() || b.empty())
            return {};
        Coeffs out(a.size() + b.size() - 1, 0);
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j)
                out[i + j] = (out[i + j] + mulmod(a[i], b[j], q_)) % q_;
        trim(out);
        return out;
    }

    /// Quotient and remainder of a by nonzero b.
    std::pair<Coeffs, Coeffs> divmod(Coeffs a, Coeffs b) const
    {
        trim(a);
        trim(b);
        if (a.size() < b.size())
            return {{}, a};
        const std::uint64_t lead_inv = inv(b.back());
        Coeffs quot(a.size() - b.size() + 1, 0);
        while (!a.empty() && a.size() >= b.size()) {
            const std::size_t shift = a.size() - b.size();
            const std::uint64_t factor = mulmod(a.back(), lead_inv, q_);
            quot[shift] = factor;
            for (std::size_t i = 0; i < b.size(); ++i)
                a[i + shift] = (a[i + shift] + q_ - mulmod(factor, b[i], q_)) % q_;
            trim(a);
        }
        trim(quot);
        return {quot, a};
    }

    Coeffs rem(const Coeffs& a, const Coeffs& b) const { return divmod(a, b).second; }

    Coeffs monic(Coeffs f) const
    {
        trim(f);
        if (f.empty())
            return f;
        const std::uint64_t li = inv(f.back());
        for (auto& c : f)
            c = mulmod(c, li, q_);
        return f;
    }

    /// Monic gcd.
    Coeffs gcd(Coeffs a, Coeffs b) const
    {
        trim(a);
        trim(b);
        while (!b.empty()) {
            Coeffs r = rem(a, b);
            a = std::move(b);
            b = std::move(r);
        }
        return monic(a);
    }

    /// base^exponent mod m.
    Coeffs pow_mod(Coeffs base, const Integer& exponent, const Coeffs& m) const
    {
        Coeffs result = rem(Coeffs{1}, m);
        base = rem(base, m);
        for (auto i = mpz_sizeinbase(exponent.get_mpz_t(), 2); i-- > 0;) {
            result = rem(mul(result, result), m);
            if (mpz_tstbit(exponent.get_mpz_t(), i))
                result = rem(mul(result, base), m);
        }
        return result;
    }

private:
    std::uint64_t q_;
};

/// All monic degree-f divisors of a squarefree F whose irreducible factors
/// all have degree f, by exhaustive enumeration of the q^f candidates.
inline std::vector<Coeffs> equal_degree_exhaustive(const Field& k, const Coeffs& F, std::size_t f)
{
    const std::uint64_t q = k.modulus();
    std::vector<Coeffs> out;
    Coeffs h(f + 1, 0);
    h[f] = 1;
    const auto wanted = static_cast<std::size_t>(Field::degree(F)) / f;
    for (;;) {
        if (k.rem(F, h).empty()) {
            out.push_back(h);
            if (out.size() == wanted)
                break;
        }
        std::size_t i = 0;
        while (i < f && ++h[i] == q)
            h[i++] = 0;
        if (i == f)
            break;
    }
    return out;
}

/// Cantor-Zassenhaus equal-degree splitting. For q = 2 the splitting
/// polynomial is the trace a + a^2 + ... + a^(2^(f-1)); otherwise
/// a^((q^f - 1)/2) - 1.
inline std::vector<Coeffs> equal_degree_random(const Field& k, const Coeffs& F, std::size_t f, std::mt19937_64& rng)
{
    const std::uint64_t q = k.modulus();
    if (static_cast<std::size_t>(Field::degree(F)) == f)
        return {k.monic(F)};

    Integer half;
    if (q != 2) {
        mpz_ui_pow_ui(half.get_mpz_t(), q, f);
        half = (half - 1) / 2;
    }
    std::uniform_int_distribution<std::uint64_t> coeff(0, q - 1);
    const auto n = static_cast<std::size_t>(Field::degree(F));
    for (;;) {
        Coeffs a(n);
        for (auto& c : a)
            c = coeff(rng);
        Field::trim(a);
        if (Field::degree(a) < 1)
            continue;
        Coeffs b;
        if (q == 2) {
            Coeffs term = k.rem(a, F);
            b = term;
            for (std::size_t i = 1; i < f; ++i) {
                term = k.rem(k.mul(term, term), F);
                b = k.add(b, term);
            }
        } else {
            b = k.sub(k.pow_mod(a, half, F), Coeffs{1});
        }
        Coeffs d = k.gcd(F, b);
        const auto dd = Field::degree(d);
        if (dd <= 0 || dd >= Field::degree(F))
            continue;
        auto left = equal_degree_random(k, d, f, rng);
        auto right = equal_degree_random(k, k.divmod(F, d).first, f, rng);
        left.insert(left.end(), right.begin(), right.end());
        return left;
    }
}

} // namespace cyclonomy::detail::gf
