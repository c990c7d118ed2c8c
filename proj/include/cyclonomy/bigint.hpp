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

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <type_traits>

#include "cyclonomy/error.hpp"

namespace cyclonomy {

using Integer = mpz_class;
using Rational = mpq_class;

template <class T>
concept ExactCoefficient = std::is_same_v<T, Integer> || std::is_same_v<T, Rational>;

inline std::string to_string(const Integer& n) { return n.get_str(); }

inline std::string to_string(const Rational& q)
{
    if (q.get_den() == 1)
        return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

/// Parses "n" or "a/b" (optional sign on a). Result is canonical.
inline Rational parse_rational(std::string_view text)
{
    std::string s(text);
    auto slash = s.find('/');
    auto parse_int = [&](const std::string& part) {
        Integer out;
        if (part.empty() || out.set_str(part, 10) != 0)
            detail::fail(Errc::ParseError, "not a rational number: '" + s + "'");
        return out;
    };
    auto strip = [](std::string t) {
        auto b = t.find_first_not_of(" \t");
        auto e = t.find_last_not_of(" \t");
        return b == std::string::npos ? std::string{} : t.substr(b, e - b + 1);
    };
    if (slash == std::string::npos)
        return Rational(parse_int(strip(s)));
    Integer num = parse_int(strip(s.substr(0, slash)));
    std::string den_text = strip(s.substr(slash + 1));
    if (!den_text.empty() && den_text.front() == '-')
        detail::fail(Errc::ParseError, "denominator must be positive: '" + s + "'");
    Integer den = parse_int(den_text);
    if (den == 0)
        detail::fail(Errc::ParseError, "zero denominator: '" + s + "'");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Integer pow(const Integer& base, unsigned long exponent)
{
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
    return out;
}

inline Rational pow(const Rational& base, unsigned long exponent)
{
    Rational out(pow(Integer(base.get_num()), exponent), pow(Integer(base.get_den()), exponent));
    return out;
}

inline Integer binomial(unsigned long n, unsigned long k)
{
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

/// Exact integer k-th root: the r with r^k == n, if any.
inline std::optional<Integer> exact_root(const Integer& n, unsigned long k)
{
    Integer r;
    if (n < 0 && k % 2 == 0)
        return std::nullopt;
    if (mpz_root(r.get_mpz_t(), n.get_mpz_t(), k) == 0)
        return std::nullopt;
    return r;
}

/// n mod m in [0, m).
inline std::uint64_t mod_nonneg(const Integer& n, std::uint64_t m)
{
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), n.get_mpz_t(), Integer(static_cast<unsigned long>(m)).get_mpz_t());
    return r.get_ui();
}

/// Trial-division primality; intended for desk-scale arguments.
constexpr bool is_prime(std::uint64_t n) noexcept
{
    if (n < 2)
        return false;
    if (n % 2 == 0)
        return n == 2;
    for (std::uint64_t d = 3; d <= n / d; d += 2)
        if (n % d == 0)
            return false;
    return true;
}

constexpr std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) noexcept
{
    while (b != 0) {
        auto t = a % b;
        a = b;
        b = t;
    }
    return a;
}

constexpr std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept
{
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

constexpr std::uint64_t powmod(std::uint64_t base, std::uint64_t exponent, std::uint64_t m) noexcept
{
    std::uint64_t result = 1 % m;
    base %= m;
    while (exponent > 0) {
        if (exponent & 1)
            result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exponent >>= 1;
    }
    return result;
}

/// Multiplicative order of a modulo m; requires gcd(a, m) = 1.
constexpr std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m) noexcept
{
    a %= m;
    std::uint64_t x = a, k = 1;
    while (x != 1 % m) {
        x = mulmod(x, a, m);
        ++k;
    }
    return k;
}

} // namespace cyclonomy
