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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cyclonomy/bigint.hpp"
#include "cyclonomy/field_context.hpp"
#include "cyclonomy/poly.hpp"

namespace cyclonomy {

/**
 * Element of Z[zeta_p] (C = Integer) or Q(zeta_p) (C = Rational) on the
 * power basis 1, zeta, ..., zeta^(p-2), little-endian.
 *
 * The coefficient vector always has length p - 1, so equality is plain
 * coefficientwise comparison. Rational coefficients are kept canonical.
 */
template <ExactCoefficient C>
class CyclotomicElement {
public:
    using coefficient_type = C;

    explicit CyclotomicElement(const FieldContext& ctx) : ctx_(ctx), coeffs_(ctx.degree()) {}

    CyclotomicElement(const FieldContext& ctx, std::vector<C> coeffs) : ctx_(ctx), coeffs_(std::move(coeffs))
    {
        if (coeffs_.size() != ctx_.degree())
            detail::fail(Errc::BadLength, "expected " + std::to_string(ctx_.degree()) + " coefficients, got " +
                                              std::to_string(coeffs_.size()));
        if constexpr (std::is_same_v<C, Rational>)
            for (auto& c : coeffs_)
                c.canonicalize();
    }

    static CyclotomicElement from_integer(const FieldContext& ctx, const C& n)
    {
        CyclotomicElement out(ctx);
        out.coeffs_[0] = n;
        return out;
    }

    static CyclotomicElement one(const FieldContext& ctx) { return from_integer(ctx, C(1)); }

    /// zeta^k for any integer k (negative allowed).
    static CyclotomicElement zeta_power(const FieldContext& ctx, long k)
    {
        const auto p = static_cast<long>(ctx.p());
        const auto e = static_cast<std::size_t>(((k % p) + p) % p);
        CyclotomicElement out(ctx);
        if (e + 1 == ctx.p()) {
            for (auto& c : out.coeffs_)
                c = -1;
        } else {
            out.coeffs_[e] = 1;
        }
        return out;
    }

    /// lambda = zeta - 1.
    static CyclotomicElement lambda(const FieldContext& ctx)
    {
        CyclotomicElement out(ctx);
        out.coeffs_[0] = -1;
        out.coeffs_[1] += 1;
        return out;
    }

    const FieldContext& context() const noexcept { return ctx_; }
    std::size_t size() const noexcept { return coeffs_.size(); }
    const C& operator[](std::size_t i) const { return coeffs_[i]; }
    std::span<const C> coefficients() const noexcept { return coeffs_; }

    bool is_zero() const
    {
        for (const auto& c : coeffs_)
            if (c != 0)
                return false;
        return true;
    }

    friend bool operator==(const CyclotomicElement& a, const CyclotomicElement& b)
    {
        return a.ctx_ == b.ctx_ && a.coeffs_ == b.coeffs_;
    }

    CyclotomicElement& operator+=(const CyclotomicElement& rhs)
    {
        detail::require_same(ctx_, rhs.ctx_);
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            coeffs_[i] += rhs.coeffs_[i];
        return *this;
    }

    CyclotomicElement& operator-=(const CyclotomicElement& rhs)
    {
        detail::require_same(ctx_, rhs.ctx_);
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            coeffs_[i] -= rhs.coeffs_[i];
        return *this;
    }

    CyclotomicElement& operator*=(const C& scalar)
    {
        for (auto& c : coeffs_)
            c *= scalar;
        return *this;
    }

    CyclotomicElement& operator*=(const CyclotomicElement& rhs)
    {
        detail::require_same(ctx_, rhs.ctx_);
        // Cyclic convolution modulo X^p - 1, then fold zeta^(p-1).
        const auto p = static_cast<std::size_t>(ctx_.p());
        std::vector<C> buf(p);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i] == 0)
                continue;
            for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
                auto& slot = buf[i + j < p ? i + j : i + j - p];
                slot += coeffs_[i] * rhs.coeffs_[j];
            }
        }
        fold(buf);
        return *this;
    }

    friend CyclotomicElement operator+(CyclotomicElement a, const CyclotomicElement& b) { return a += b; }
    friend CyclotomicElement operator-(CyclotomicElement a, const CyclotomicElement& b) { return a -= b; }
    friend CyclotomicElement operator*(CyclotomicElement a, const CyclotomicElement& b) { return a *= b; }
    friend CyclotomicElement operator*(CyclotomicElement a, const C& s) { return a *= s; }
    friend CyclotomicElement operator*(const C& s, CyclotomicElement a) { return a *= s; }

    friend CyclotomicElement operator-(CyclotomicElement a)
    {
        for (auto& c : a.coeffs_)
            c = -c;
        return a;
    }

    /// Replace the coefficients with the reduction of a length-p vector whose
    /// index is the exponent of zeta modulo p.
    void fold(std::vector<C>& buf)
    {
        const C top = buf.back();
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            coeffs_[i] = buf[i] - top;
    }

private:
    FieldContext ctx_;
    std::vector<C> coeffs_;
};

using CycInt = CyclotomicElement<Integer>;
using CycRat = CyclotomicElement<Rational>;

/// Representative of raw(zeta) on the power basis, for a polynomial of any
/// degree: exponents are taken mod p, then zeta^(p-1) = -(1 + ... + zeta^(p-2)).
template <ExactCoefficient C>
CyclotomicElement<C> reduce(const FieldContext& ctx, std::span<const C> raw)
{
    std::vector<C> buf(ctx.p());
    for (std::size_t i = 0; i < raw.size(); ++i)
        buf[i % ctx.p()] += raw[i];
    CyclotomicElement<C> out(ctx);
    out.fold(buf);
    return out;
}

template <ExactCoefficient C>
CyclotomicElement<C> reduce(const FieldContext& ctx, const std::vector<C>& raw)
{
    return reduce(ctx, std::span<const C>(raw));
}

template <ExactCoefficient C>
CyclotomicElement<C> pow(CyclotomicElement<C> base, unsigned long exponent)
{
    auto result = CyclotomicElement<C>::one(base.context());
    while (exponent > 0) {
        if (exponent & 1)
            result *= base;
        exponent >>= 1;
        if (exponent > 0)
            base *= base;
    }
    return result;
}

/// sigma_k : zeta -> zeta^k. Throws NotCoprime when p | k.
template <ExactCoefficient C>
CyclotomicElement<C> galois_apply(long k, const CyclotomicElement<C>& a)
{
    const auto& ctx = a.context();
    const auto p = static_cast<long>(ctx.p());
    const long kk = ((k % p) + p) % p;
    if (kk == 0)
        detail::fail(Errc::NotCoprime, "Galois exponent " + std::to_string(k) + " is divisible by p");
    std::vector<C> buf(ctx.p());
    for (std::size_t i = 0; i < a.size(); ++i)
        buf[static_cast<std::size_t>((static_cast<long>(i) * kk) % p)] = a[i];
    CyclotomicElement<C> out(ctx);
    out.fold(buf);
    return out;
}

/// prod_{k=2}^{p-1} sigma_k(a); a times this is norm(a).
template <ExactCoefficient C>
CyclotomicElement<C> conjugate_product(const CyclotomicElement<C>& a)
{
    auto out = CyclotomicElement<C>::one(a.context());
    for (long k = 2; k < static_cast<long>(a.context().p()); ++k)
        out *= galois_apply(k, a);
    return out;
}

/// Norm down to Q, computed as Res(Phi_p, a(X)).
template <ExactCoefficient C>
C norm(const CyclotomicElement<C>& a)
{
    poly::Poly<Rational> f(a.context().p(), Rational(1));
    poly::Poly<Rational> g(a.coefficients().begin(), a.coefficients().end());
    Rational r = poly::resultant(std::move(f), std::move(g));
    if constexpr (std::is_same_v<C, Integer>) {
        detail::ensure(r.get_den() == 1, "norm of an integral element is not an integer");
        return r.get_num();
    } else {
        return r;
    }
}

/// Trace down to Q as the sum of all conjugates; the sum must be rational.
template <ExactCoefficient C>
C trace(const CyclotomicElement<C>& a)
{
    CyclotomicElement<C> sum(a.context());
    for (long k = 1; k < static_cast<long>(a.context().p()); ++k)
        sum += galois_apply(k, a);
    for (std::size_t i = 1; i < sum.size(); ++i)
        detail::ensure(sum[i] == 0, "conjugate sum has an irrational component");
    return sum[0];
}

inline CycRat to_rational(const CycInt& a)
{
    std::vector<Rational> c(a.coefficients().begin(), a.coefficients().end());
    return CycRat(a.context(), std::move(c));
}

inline bool is_integral(const CycRat& a)
{
    for (const auto& c : a.coefficients())
        if (c.get_den() != 1)
            return false;
    return true;
}

inline std::optional<CycInt> to_integral(const CycRat& a)
{
    if (!is_integral(a))
        return std::nullopt;
    std::vector<Integer> c;
    c.reserve(a.size());
    for (const auto& q : a.coefficients())
        c.emplace_back(q.get_num());
    return CycInt(a.context(), std::move(c));
}

/// Least common multiple of the coefficient denominators.
inline Integer common_denominator(const CycRat& a)
{
    Integer l = 1;
    for (const auto& q : a.coefficients())
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    return l;
}

/// Field inverse in Q(zeta_p): conjugate_product(a) / norm(a).
inline CycRat inverse(const CycRat& a)
{
    if (a.is_zero())
        detail::fail(Errc::ZeroDivisor, "inverse of zero");
    const Rational n = norm(a);
    return conjugate_product(a) * Rational(1 / n);
}

/// a / b if the quotient lies in Z[zeta_p], nullopt otherwise.
inline std::optional<CycInt> divide_exact(const CycInt& a, const CycInt& b)
{
    detail::require_same(a.context(), b.context());
    if (b.is_zero())
        detail::fail(Errc::ZeroDivisor, "division by zero");
    const Integer n = norm(b);
    CycInt num = a * conjugate_product(b);
    std::vector<Integer> q(num.size());
    for (std::size_t i = 0; i < num.size(); ++i) {
        if (!mpz_divisible_p(num[i].get_mpz_t(), n.get_mpz_t()))
            return std::nullopt;
        mpz_divexact(q[i].get_mpz_t(), num[i].get_mpz_t(), n.get_mpz_t());
    }
    return CycInt(a.context(), std::move(q));
}

/// Largest t with lambda^t | a. Throws ZeroInput for a = 0.
inline unsigned long lambda_valuation(const CycInt& a)
{
    if (a.is_zero())
        detail::fail(Errc::ZeroInput, "lambda-adic valuation of zero");
    const auto lam = CycInt::lambda(a.context());
    unsigned long t = 0;
    CycInt cur = a;
    while (auto q = divide_exact(cur, lam)) {
        cur = std::move(*q);
        ++t;
    }
    return t;
}

/// Image under Z[zeta_p] -> Z[zeta_p]/(lambda) = Z/p, i.e. zeta -> 1.
inline std::uint64_t reduce_mod_lambda(const CycInt& a)
{
    Integer s = 0;
    for (const auto& c : a.coefficients())
        s += c;
    return mod_nonneg(s, a.context().p());
}

/// Discriminant of Q(zeta_p), as the discriminant of Phi_p.
inline Integer discriminant(const FieldContext& ctx)
{
    const Rational d = poly::discriminant(poly::Poly<Rational>(ctx.p(), Rational(1)));
    detail::ensure(d.get_den() == 1, "discriminant of a monic integer polynomial is not an integer");
    return d.get_num();
}

namespace detail {

inline bool all_divisible(const CycInt& a, std::uint64_t m)
{
    for (const auto& c : a.coefficients())
        if (mod_nonneg(c, m) != 0)
            return false;
    return true;
}

// Exponent order used by the bounded searches: 0, 1, -1, 2, -2, ...
inline long centered(std::uint64_t index)
{
    const auto half = static_cast<long>((index + 1) / 2);
    return index % 2 == 1 ? half : -half;
}

} // namespace detail

/// The n in [0, p) with p | a^p - n in Z[zeta_p].
inline std::uint64_t pth_power_residue(const CycInt& a)
{
    const auto& ctx = a.context();
    const CycInt ap = pow(a, ctx.p());
    for (std::uint64_t n = 0; n < ctx.p(); ++n) {
        if (detail::all_divisible(ap - CycInt::from_integer(ctx, Integer(static_cast<unsigned long>(n))), ctx.p()))
            return n;
    }
    detail::fail(Errc::InternalInconsistency, "a^p is not congruent to an integer modulo p");
}

} // namespace cyclonomy
