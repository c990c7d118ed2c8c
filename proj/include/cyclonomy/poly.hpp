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

#include <utility>
#include <vector>

#include "cyclonomy/bigint.hpp"

// Dense univariate polynomials as coefficient vectors, lowest degree first.
// Only what the norm and discriminant computations need.

namespace cyclonomy::poly {

template <ExactCoefficient C>
using Poly = std::vector<C>;

template <ExactCoefficient C>
void trim(Poly<C>& f)
{
    while (!f.empty() && f.back() == 0)
        f.pop_back();
}

/// Degree, with -1 for the zero polynomial.
template <ExactCoefficient C>
long degree(const Poly<C>& f)
{
    long d = static_cast<long>(f.size()) - 1;
    while (d >= 0 && f[static_cast<std::size_t>(d)] == 0)
        --d;
    return d;
}

inline Poly<Rational> to_rational(const Poly<Integer>& f)
{
    Poly<Rational> out;
    out.reserve(f.size());
    for (const auto& c : f)
        out.emplace_back(c);
    return out;
}

template <ExactCoefficient C>
Poly<C> derivative(const Poly<C>& f)
{
    Poly<C> out;
    for (std::size_t i = 1; i < f.size(); ++i)
        out.push_back(f[i] * static_cast<unsigned long>(i));
    trim(out);
    return out;
}

/// Remainder of f modulo a nonzero g over Q.
inline Poly<Rational> remainder(Poly<Rational> f, Poly<Rational> g)
{
    trim(f);
    trim(g);
    const auto dg = degree(g);
    const Rational lead = g.back();
    while (degree(f) >= dg) {
        const auto shift = static_cast<std::size_t>(degree(f) - dg);
        const Rational factor = f.back() / lead;
        for (std::size_t i = 0; i < g.size(); ++i)
            f[i + shift] -= factor * g[i];
        trim(f);
    }
    return f;
}

/// Res(f, g) by the Euclidean recursion
///   Res(f, g) = (-1)^(deg f * deg g) * lc(g)^(deg f - deg r) * Res(g, r),  r = f mod g.
inline Rational resultant(Poly<Rational> f, Poly<Rational> g)
{
    trim(f);
    trim(g);
    if (f.empty() || g.empty())
        return 0;
    Rational acc = 1;
    for (;;) {
        const auto m = degree(f);
        const auto n = degree(g);
        if (n == 0)
            return acc * pow(g[0], static_cast<unsigned long>(m));
        if (m == 0)
            return acc * pow(f[0], static_cast<unsigned long>(n));
        Poly<Rational> r = remainder(f, g);
        if (r.empty())
            return 0;
        const auto k = degree(r);
        if ((m * n) % 2 != 0)
            acc = -acc;
        acc *= pow(g.back(), static_cast<unsigned long>(m - k));
        f = std::move(g);
        g = std::move(r);
    }
}

/// disc(f) = (-1)^(n(n-1)/2) / lc(f) * Res(f, f').
inline Rational discriminant(const Poly<Rational>& f)
{
    const auto n = degree(f);
    Rational r = resultant(f, derivative(f)) / f[static_cast<std::size_t>(n)];
    if ((n * (n - 1) / 2) % 2 != 0)
        r = -r;
    return r;
}

} // namespace cyclonomy::poly
