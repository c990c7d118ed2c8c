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
#include <vector>

#include "cyclonomy/cyclo.hpp"

namespace cyclonomy {

/// Gal(Q(zeta_p)/Q) as the cyclic group generated by sigma: zeta -> zeta^g,
/// g the least primitive root mod p.
class GaloisGroup {
public:
    explicit GaloisGroup(const FieldContext& ctx) : ctx_(ctx), g_(least_primitive_root(ctx.p())) {}

    const FieldContext& context() const noexcept { return ctx_; }
    std::uint64_t generator() const noexcept { return g_; }
    std::size_t order() const noexcept { return ctx_.degree(); }

    /// Exponent k with sigma^i = sigma_k.
    std::uint64_t exponent_of(std::size_t i) const { return powmod(g_, i, ctx_.p()); }

    template <ExactCoefficient C>
    CyclotomicElement<C> apply(std::size_t i, const CyclotomicElement<C>& a) const
    {
        return galois_apply(static_cast<long>(exponent_of(i % order())), a);
    }

    static std::uint64_t least_primitive_root(std::uint64_t p)
    {
        for (std::uint64_t g = 2; g < p; ++g)
            if (multiplicative_order(g, p) == p - 1)
                return g;
        return 1; // p = 2 only; contexts exclude it
    }

private:
    FieldContext ctx_;
    std::uint64_t g_;
};

/// Map sigma^i -> values[i].
struct Cocycle {
    GaloisGroup group;
    std::vector<CycRat> values;
};

namespace detail {

inline void require_norm_one(const CycRat& eta)
{
    const Rational n = norm(eta);
    if (n != 1)
        fail(Errc::NormNotOne, "eta has norm " + to_string(n), to_string(n));
}

} // namespace detail

/// c(sigma^n) = prod_{i=0}^{n-1} sigma^i(eta); c(1) = 1. Requires norm(eta) = 1.
inline Cocycle cocycle_from_eta(const CycRat& eta)
{
    detail::require_norm_one(eta);
    GaloisGroup group(eta.context());
    std::vector<CycRat> values;
    values.reserve(group.order());
    values.push_back(CycRat::one(eta.context()));
    for (std::size_t n = 1; n < group.order(); ++n)
        values.push_back(values.back() * group.apply(n - 1, eta));
    return {group, std::move(values)};
}

/// c(sigma^(i+j)) == sigma^i(c(sigma^j)) * c(sigma^i) for all i, j, with
/// exponents taken mod the group order; every value must be nonzero.
inline bool verify_cocycle(const Cocycle& c)
{
    const auto d = c.group.order();
    if (c.values.size() != d)
        return false;
    for (const auto& v : c.values)
        if (v.context() != c.group.context() || v.is_zero())
            return false;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            if (c.values[(i + j) % d] != c.group.apply(i, c.values[j]) * c.values[i])
                return false;
    return true;
}

/// b(theta) = sum_i c(sigma^i) sigma^i(theta). For a cocycle built from eta
/// and b != 0: eta * sigma(b) = b.
inline CycRat resolvent(const Cocycle& c, const CycRat& theta)
{
    CycRat b(c.group.context());
    for (std::size_t i = 0; i < c.values.size(); ++i)
        b += c.values[i] * c.group.apply(i, theta);
    return b;
}

/// Nonzero eps with eta * sigma(eps) = eps, from the first nonzero resolvent
/// b(zeta^j), j = 0, 1, ..., p-2.
inline CycRat hilbert90_witness(const CycRat& eta)
{
    const Cocycle c = cocycle_from_eta(eta);
    const auto& ctx = eta.context();
    for (std::size_t j = 0; j < c.group.order(); ++j) {
        CycRat b = resolvent(c, CycRat::zeta_power(ctx, static_cast<long>(j)));
        if (b.is_zero())
            continue;
        detail::ensure(eta * c.group.apply(1, b) == b, "resolvent does not satisfy eta sigma(b) = b");
        return b;
    }
    detail::fail(Errc::ExhaustedBasis, "every resolvent on the power basis vanished");
}

/// Integral witness: hilbert90_witness scaled by the lcm of its denominators.
inline CycInt hilbert90_integral(const CycRat& eta)
{
    if (!is_integral(eta))
        detail::fail(Errc::NotIntegralEta, "eta is not in Z[zeta_p]");
    CycRat eps = hilbert90_witness(eta);
    eps *= Rational(common_denominator(eps));
    auto out = to_integral(eps);
    detail::ensure(out.has_value() && !out->is_zero(), "scaled witness is not a nonzero integral element");
    return std::move(*out);
}

} // namespace cyclonomy
