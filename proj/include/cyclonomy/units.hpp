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
#include <utility>
#include <vector>

#include "cyclonomy/cyclo.hpp"

namespace cyclonomy {

/// A unit of Z[zeta_p]. Construction goes through as_unit, which checks
/// norm(value) = 1 (Q(zeta_p) is totally imaginary, so unit norms are +1).
class UnitElem {
public:
    const CycInt& value() const noexcept { return value_; }
    const Integer& norm_witness() const noexcept { return norm_; }
    const FieldContext& context() const noexcept { return value_.context(); }

    friend bool operator==(const UnitElem& a, const UnitElem& b) { return a.value_ == b.value_; }

    friend UnitElem operator*(const UnitElem& a, const UnitElem& b) { return UnitElem(a.value_ * b.value_); }

private:
    explicit UnitElem(CycInt v) : value_(std::move(v)), norm_(1) {}

    friend UnitElem as_unit(const CycInt& a);
    friend UnitElem unit_inverse(const UnitElem& u);
    friend UnitElem pow(const UnitElem& u, long exponent);
    friend UnitElem negate(const UnitElem& u);

    CycInt value_;
    Integer norm_;
};

/// Throws NotAUnit (value() = the offending norm) unless norm(a) = 1.
inline UnitElem as_unit(const CycInt& a)
{
    const Integer n = norm(a);
    if (n != 1)
        detail::fail(Errc::NotAUnit, "element has norm " + to_string(n), to_string(n));
    return UnitElem(a);
}

inline UnitElem unit_inverse(const UnitElem& u)
{
    UnitElem inv(conjugate_product(u.value()));
    detail::ensure(inv.value() * u.value() == CycInt::one(u.context()), "unit inverse does not invert");
    return inv;
}

/// u^exponent; negative exponents go through the inverse.
inline UnitElem pow(const UnitElem& u, long exponent)
{
    if (exponent < 0)
        return pow(unit_inverse(u), -exponent);
    return UnitElem(pow(u.value(), static_cast<unsigned long>(exponent)));
}

inline UnitElem negate(const UnitElem& u) { return UnitElem(-u.value()); }

/// (1 - zeta^k) / (1 - zeta) = 1 + zeta + ... + zeta^(k-1), 2 <= k <= p-1.
inline UnitElem cyclotomic_unit(const FieldContext& ctx, std::uint64_t k)
{
    if (k < 2 || k > ctx.p() - 1)
        detail::fail(Errc::OutOfRange, "cyclotomic unit index must lie in [2, p-1]");
    std::vector<Integer> c(ctx.degree());
    for (std::uint64_t i = 0; i < k; ++i)
        c[i] = 1;
    return as_unit(CycInt(ctx, std::move(c)));
}

struct RealDecomposition {
    std::uint64_t n; ///< exponent of zeta, in [0, p)
    CycInt x;        ///< fixed by complex conjugation
};

/// u = zeta^n * x with x real. Matches t = u / conj(u) against the 2p
/// torsion candidates +-zeta^m; t = zeta^(2n).
inline RealDecomposition decompose_real(const UnitElem& u)
{
    const auto& ctx = u.context();
    const auto p = ctx.p();
    const CycInt conj = galois_apply(-1, u.value());
    const CycInt t = u.value() * conjugate_product(conj);

    for (std::uint64_t m = 0; m < p; ++m) {
        const CycInt z = CycInt::zeta_power(ctx, static_cast<long>(m));
        if (t == -z)
            detail::fail(Errc::MinusSignCase, "u / conj(u) = -zeta^" + std::to_string(m));
        if (t != z)
            continue;
        const std::uint64_t n = (m * ((p + 1) / 2)) % p;
        CycInt x = CycInt::zeta_power(ctx, -static_cast<long>(n)) * u.value();
        detail::ensure(galois_apply(-1, x) == x, "real part is not fixed by conjugation");
        return {n, std::move(x)};
    }
    detail::fail(Errc::NoTorsionMatch, "u / conj(u) is not a root of unity");
}

/// The n in [0, p) with p | u - n, if any. At most one exists.
inline std::optional<std::uint64_t> congruent_integer_mod_p(const UnitElem& u)
{
    const auto& ctx = u.context();
    for (std::uint64_t n = 0; n < ctx.p(); ++n)
        if (detail::all_divisible(u.value() - CycInt::from_integer(ctx, Integer(static_cast<unsigned long>(n))),
                                  ctx.p()))
            return n;
    return std::nullopt;
}

/**
 * Bounded search for v with v^p = u, over v = +-zeta^a * prod g_i^(b_i),
 * 0 <= a < p, |b_i| <= bound. Exponent vectors are visited with each
 * coordinate in the order 0, 1, -1, 2, -2, ..., so small witnesses come
 * first. nullopt only means "not in this box".
 *
 * (+-zeta^a w)^p = +-w^p, so each exponent vector needs one p-th power; the
 * ζ-exponent of the returned root is 0.
 */
inline std::optional<UnitElem> kummer_search(const UnitElem& u, std::span<const UnitElem> generators,
                                             std::uint64_t bound)
{
    const auto& ctx = u.context();
    for (const auto& g : generators)
        detail::require_same(ctx, g.context());
    const std::uint64_t width = 2 * bound + 1;
    std::vector<std::uint64_t> digits(generators.size(), 0);
    const CycInt neg_u = -u.value();

    std::vector<UnitElem> inverses;
    inverses.reserve(generators.size());
    for (const auto& g : generators)
        inverses.push_back(unit_inverse(g));

    for (;;) {
        auto w = as_unit(CycInt::one(ctx));
        for (std::size_t i = 0; i < generators.size(); ++i) {
            const long b = detail::centered(digits[i]);
            const UnitElem& base = b < 0 ? inverses[i] : generators[i];
            w = w * pow(base, b < 0 ? -b : b);
        }
        const CycInt wp = pow(w.value(), ctx.p());
        if (wp == u.value())
            return w;
        if (wp == neg_u) {
            auto v = negate(w);
            detail::ensure(pow(v.value(), ctx.p()) == u.value(), "kummer_search root check");
            return v;
        }
        std::size_t i = 0;
        while (i < digits.size() && ++digits[i] == width)
            digits[i++] = 0;
        if (i == digits.size())
            return std::nullopt;
    }
}

/// Polynomial with cyclotomic-integer coefficients, index = degree.
class IntPolynomial {
public:
    explicit IntPolynomial(std::vector<CycInt> coeffs) : coeffs_(std::move(coeffs))
    {
        while (!coeffs_.empty() && coeffs_.back().is_zero())
            coeffs_.pop_back();
    }

    /// -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    const CycInt& operator[](std::size_t i) const { return coeffs_[i]; }
    std::span<const CycInt> coefficients() const noexcept { return coeffs_; }

    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == CycInt::one(coeffs_.back().context()); }

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

private:
    std::vector<CycInt> coeffs_;
};

/**
 * P_u(X) = ((lambda X - 1)^p + u) / lambda^p, for a unit u with
 * lambda^p | u - 1. The coefficient of X^k is C(p,k) (-1)^(p-k) / lambda^(p-k)
 * for k >= 1 and (u - 1) / lambda^p for k = 0.
 */
inline IntPolynomial build_Pu(const UnitElem& u)
{
    const auto& ctx = u.context();
    const auto p = ctx.p();
    const CycInt lam = CycInt::lambda(ctx);
    const CycInt shifted = u.value() - CycInt::one(ctx);
    if (!shifted.is_zero() && lambda_valuation(shifted) < p)
        detail::fail(Errc::HypothesisFailed, "lambda^p does not divide u - 1");

    auto exact = [](const CycInt& a, const CycInt& b) {
        auto q = divide_exact(a, b);
        detail::ensure(q.has_value(), "P_u coefficient is not integral");
        return std::move(*q);
    };

    std::vector<CycInt> coeffs;
    coeffs.reserve(p + 1);
    coeffs.push_back(exact(shifted, pow(lam, p)));
    for (std::uint64_t k = 1; k <= p; ++k) {
        Integer c = binomial(p, k);
        if ((p - k) % 2 != 0)
            c = -c;
        coeffs.push_back(exact(CycInt::from_integer(ctx, c), pow(lam, p - k)));
    }
    IntPolynomial out(std::move(coeffs));
    detail::ensure(out.degree() == static_cast<long>(p) && out.is_monic(), "P_u is not monic of degree p");
    return out;
}

} // namespace cyclonomy
