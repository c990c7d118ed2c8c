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
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "cyclonomy/cyclo.hpp"
#include "cyclonomy/detail/gf_poly.hpp"
#include "cyclonomy/hnf.hpp"

namespace cyclonomy {

/**
 * Nonzero ideal of Z[zeta_p] as a full-rank sublattice of Z^(p-1) in row
 * Hermite normal form. The HNF is canonical, so ideal equality is matrix
 * equality. Construction checks the HNF shape and closure under zeta.
 */
class CycIdeal {
public:
    const FieldContext& context() const noexcept { return ctx_; }
    const IntMatrix& basis() const noexcept { return basis_; }

    /// Lattice index [Z[zeta_p] : I], the product of the HNF diagonal.
    Integer norm() const
    {
        Integer n = 1;
        for (std::size_t i = 0; i < basis_.size(); ++i)
            n *= basis_[i][i];
        return n;
    }

    bool contains(const CycInt& a) const
    {
        detail::require_same(ctx_, a.context());
        return lattice_contains(basis_, IntRow(a.coefficients().begin(), a.coefficients().end()));
    }

    CycInt row_element(std::size_t i) const { return CycInt(ctx_, basis_[i]); }

    friend bool operator==(const CycIdeal& a, const CycIdeal& b) { return a.ctx_ == b.ctx_ && a.basis_ == b.basis_; }

    /// HNF of the Z-span of the given lattice vectors; throws ZeroIdeal when
    /// they are all zero. The span must already be zeta-stable.
    static CycIdeal from_lattice_rows(const FieldContext& ctx, const std::vector<CycInt>& rows)
    {
        HermiteBuilder hb(ctx.degree());
        bool any = false;
        for (const auto& r : rows) {
            detail::require_same(ctx, r.context());
            if (r.is_zero())
                continue;
            any = true;
            hb.insert(IntRow(r.coefficients().begin(), r.coefficients().end()));
        }
        if (!any)
            detail::fail(Errc::ZeroIdeal, "all generators are zero");
        detail::ensure(hb.full_rank(), "nonzero ideal lattice is not of full rank");
        return CycIdeal(ctx, hb.result());
    }

private:
    CycIdeal(const FieldContext& ctx, IntMatrix basis) : ctx_(ctx), basis_(std::move(basis))
    {
        detail::ensure(is_hermite_normal_form(basis_), "ideal basis is not in Hermite normal form");
        const auto zeta = CycInt::zeta_power(ctx_, 1);
        for (std::size_t i = 0; i < basis_.size(); ++i)
            detail::ensure(contains(zeta * row_element(i)), "ideal lattice is not closed under zeta");
    }

    FieldContext ctx_;
    IntMatrix basis_;
};

/// HNF of the lattice spanned by g * zeta^i over all generators g, 0 <= i <= p-2.
inline CycIdeal ideal_from_generators(const FieldContext& ctx, std::span<const CycInt> gens)
{
    std::vector<CycInt> rows;
    const auto zeta = CycInt::zeta_power(ctx, 1);
    for (const auto& g : gens) {
        detail::require_same(ctx, g.context());
        CycInt shifted = g;
        for (std::size_t i = 0; i < ctx.degree(); ++i) {
            rows.push_back(shifted);
            shifted *= zeta;
        }
    }
    return CycIdeal::from_lattice_rows(ctx, rows);
}

inline CycIdeal ideal_from_generators(const FieldContext& ctx, std::initializer_list<CycInt> gens)
{
    return ideal_from_generators(ctx, std::span<const CycInt>(gens.begin(), gens.size()));
}

inline CycIdeal ideal_mul(const CycIdeal& a, const CycIdeal& b)
{
    detail::require_same(a.context(), b.context());
    std::vector<CycInt> rows;
    rows.reserve(a.basis().size() * b.basis().size());
    for (std::size_t i = 0; i < a.basis().size(); ++i)
        for (std::size_t j = 0; j < b.basis().size(); ++j)
            rows.push_back(a.row_element(i) * b.row_element(j));
    return CycIdeal::from_lattice_rows(a.context(), rows);
}

/// I + J, the ideal gcd.
inline CycIdeal ideal_sum(const CycIdeal& a, const CycIdeal& b)
{
    detail::require_same(a.context(), b.context());
    std::vector<CycInt> rows;
    for (std::size_t i = 0; i < a.basis().size(); ++i)
        rows.push_back(a.row_element(i));
    for (std::size_t i = 0; i < b.basis().size(); ++i)
        rows.push_back(b.row_element(i));
    return CycIdeal::from_lattice_rows(a.context(), rows);
}

inline Integer ideal_norm(const CycIdeal& a) { return a.norm(); }

// ---------------------------------------------------------------------------
// Splitting of rational primes.

/// Seed for the randomized equal-degree factorization.
inline constexpr std::uint64_t kDefaultSplitSeed = 0x5eed'c1c1'0001ULL;

/// Exhaustive factor search is used while q^f stays at or below this.
inline constexpr std::uint64_t kExhaustiveSplitLimit = 10'000;

struct SplittingData {
    std::uint64_t q;
    std::uint64_t e;
    std::uint64_t f;
    std::uint64_t g;
    std::vector<CycIdeal> primes;
    /// Monic factors h_i of Phi_p mod q (coefficients in [0, q)); primes[i] = (q, h_i(zeta)).
    std::vector<std::vector<std::uint64_t>> factors;
};

inline SplittingData prime_split(const FieldContext& ctx, std::uint64_t q, std::uint64_t seed = kDefaultSplitSeed)
{
    if (!is_prime(q))
        detail::fail(Errc::NotPrime, std::to_string(q) + " is not prime");
    const auto p = ctx.p();
    const CycInt q_elem = CycInt::from_integer(ctx, Integer(static_cast<unsigned long>(q)));
    if (q == p) {
        auto prime = ideal_from_generators(ctx, {CycInt::lambda(ctx), q_elem});
        return {q, p - 1, 1, 1, {prime}, {{p - 1, 1}}};
    }

    const std::uint64_t f = multiplicative_order(q % p, p);
    const std::uint64_t g = (p - 1) / f;
    detail::gf::Field k(q);
    const detail::gf::Coeffs phi(p, 1);

    std::vector<detail::gf::Coeffs> factors;
    std::uint64_t qf = 1;
    bool small = true;
    for (std::uint64_t i = 0; i < f && small; ++i) {
        if (qf > kExhaustiveSplitLimit / q)
            small = false;
        qf *= q;
    }
    if (small) {
        factors = detail::gf::equal_degree_exhaustive(k, phi, f);
    } else {
        std::mt19937_64 rng(seed);
        factors = detail::gf::equal_degree_random(k, phi, f, rng);
    }
    std::sort(factors.begin(), factors.end(), [](const auto& a, const auto& b) {
        return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
    });
    detail::ensure(factors.size() == g, "wrong number of factors of Phi_p mod q");

    SplittingData out{q, 1, f, g, {}, {}};
    for (const auto& h : factors) {
        std::vector<Integer> lifted;
        for (auto c : h)
            lifted.emplace_back(static_cast<unsigned long>(c));
        out.primes.push_back(ideal_from_generators(ctx, {q_elem, reduce(ctx, lifted)}));
        out.factors.push_back(h);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Minkowski bound.

struct RationalInterval {
    Rational lo;
    Rational hi;
};

inline const Rational kPiLower{Integer("314159265358979"), Integer("100000000000000")};
inline const Rational kPiUpper{Integer("314159265358980"), Integer("100000000000000")};

namespace detail {

// floor(sqrt(n)) by Newton's iteration from above.
inline Integer isqrt_newton(const Integer& n)
{
    if (n < 2)
        return n;
    Integer x = Integer(1) << static_cast<mp_bitcnt_t>((mpz_sizeinbase(n.get_mpz_t(), 2) + 1) / 2 + 1);
    for (;;) {
        Integer y = (x + n / x) / 2;
        if (y >= x)
            return x;
        x = y;
    }
}

// lo <= sqrt(n) <= hi with hi - lo = 2^-bits.
inline RationalInterval sqrt_enclosure(const Integer& n, unsigned bits)
{
    const Integer scale = Integer(1) << bits;
    const Integer s = isqrt_newton(n * scale * scale);
    RationalInterval out{Rational(s, scale), Rational(s + 1, scale)};
    out.lo.canonicalize();
    out.hi.canonicalize();
    return out;
}

} // namespace detail

/// Rigorous enclosure of sqrt(|disc|) (4/pi)^r2 n!/n^n, n = p - 1, r2 = n/2.
inline RationalInterval minkowski_bound(const FieldContext& ctx)
{
    const auto n = static_cast<unsigned long>(ctx.degree());
    const unsigned long r2 = n / 2;
    Integer disc = discriminant(ctx);
    const auto root = detail::sqrt_enclosure(abs(disc), 96);

    Integer fact;
    mpz_fac_ui(fact.get_mpz_t(), n);
    Rational shape(fact, pow(Integer(n), n));
    shape.canonicalize();

    const Rational four_over_pi_lo = pow(Rational(4) / kPiUpper, r2);
    const Rational four_over_pi_hi = pow(Rational(4) / kPiLower, r2);
    return {root.lo * four_over_pi_lo * shape, root.hi * four_over_pi_hi * shape};
}

/// Floor of a nonnegative rational.
inline Integer floor(const Rational& q)
{
    Integer out;
    mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return out;
}

// ---------------------------------------------------------------------------
// Principality and class numbers.

/// Searches a in I with every coefficient in [-height, height] and
/// |norm(a)| = norm(I); such an a generates I. nullopt is inconclusive.
inline std::optional<CycInt> is_principal_bounded(const CycIdeal& ideal, std::uint64_t height)
{
    const auto& ctx = ideal.context();
    const Integer target = ideal.norm();
    const std::size_t n = ctx.degree();
    const std::uint64_t width = 2 * height + 1;
    std::vector<std::uint64_t> digits(n, 0);
    for (;;) {
        std::size_t i = 0;
        while (i < n && ++digits[i] == width)
            digits[i++] = 0;
        if (i == n)
            return std::nullopt;
        std::vector<Integer> c(n);
        for (std::size_t j = 0; j < n; ++j)
            c[j] = detail::centered(digits[j]);
        CycInt a(ctx, std::move(c));
        if (ideal.contains(a) && abs(norm(a)) == target)
            return a;
    }
}

} // namespace cyclonomy
