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

#include "cyclonomy/units.hpp"

namespace cyclonomy {

struct FermatTriple {
    Integer a;
    Integer b;
    Integer c;
    std::uint64_t exponent;

    friend bool operator==(const FermatTriple&, const FermatTriple&) = default;
};

enum class FermatCase { CaseI, CaseII, Degenerate };

constexpr std::string_view to_string(FermatCase c) noexcept
{
    switch (c) {
    case FermatCase::CaseI: return "CaseI";
    case FermatCase::CaseII: return "CaseII";
    case FermatCase::Degenerate: return "Degenerate";
    }
    return "Unknown";
}

/// Degenerate when abc = 0 or gcd(a, b, c) != 1; otherwise Case I iff p does not divide abc.
inline FermatCase classify_case(const FermatTriple& t, std::uint64_t p)
{
    const Integer prod = t.a * t.b * t.c;
    if (prod == 0)
        return FermatCase::Degenerate;
    Integer g;
    mpz_gcd(g.get_mpz_t(), t.a.get_mpz_t(), t.b.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
    if (g != 1)
        return FermatCase::Degenerate;
    return mod_nonneg(prod, p) == 0 ? FermatCase::CaseII : FermatCase::CaseI;
}

/// All 1 <= a <= b < c <= bound with a^n + b^n = c^n, in (a, b) order.
inline std::vector<FermatTriple> flt_search(std::uint64_t exponent, std::uint64_t bound)
{
    std::vector<FermatTriple> out;
    std::vector<Integer> powers(bound + 1);
    for (std::uint64_t i = 0; i <= bound; ++i)
        powers[i] = pow(Integer(static_cast<unsigned long>(i)), exponent);
    for (std::uint64_t a = 1; a <= bound; ++a) {
        for (std::uint64_t b = a; b <= bound; ++b) {
            const Integer sum = powers[a] + powers[b];
            if (sum > powers[bound])
                break;
            if (auto c = exact_root(sum, exponent))
                out.push_back({Integer(static_cast<unsigned long>(a)), Integer(static_cast<unsigned long>(b)), *c,
                               exponent});
        }
    }
    return out;
}

struct QTableRow {
    std::uint64_t m;       ///< eta = zeta^m
    CycInt q;              ///< (x + eta y) / lambda
    std::uint64_t residue; ///< q mod (lambda)
};

/// q(zeta^m) = (x + zeta^m y) / lambda for m = 0..p-1. Requires lambda | x + y.
inline std::vector<QTableRow> q_table(const CycInt& x, const CycInt& y)
{
    detail::require_same(x.context(), y.context());
    const auto& ctx = x.context();
    if (reduce_mod_lambda(x + y) != 0)
        detail::fail(Errc::HypothesisFailed, "lambda does not divide x + y");
    const CycInt lam = CycInt::lambda(ctx);
    std::vector<QTableRow> rows;
    rows.reserve(ctx.p());
    for (std::uint64_t m = 0; m < ctx.p(); ++m) {
        auto q = divide_exact(x + CycInt::zeta_power(ctx, static_cast<long>(m)) * y, lam);
        detail::ensure(q.has_value(), "lambda does not divide x + eta y");
        const auto r = reduce_mod_lambda(*q);
        rows.push_back({m, std::move(*q), r});
    }
    return rows;
}

/// The unique m with q(zeta^m) = 0 mod (lambda). Requires lambda | x + y and
/// lambda not dividing y; under those the residues form a permutation of Z/p.
inline std::uint64_t eta_zero(const CycInt& x, const CycInt& y)
{
    if (reduce_mod_lambda(y) == 0)
        detail::fail(Errc::HypothesisFailed, "lambda divides y");
    const auto rows = q_table(x, y);
    std::vector<std::uint64_t> zeros;
    for (const auto& r : rows)
        if (r.residue == 0)
            zeros.push_back(r.m);
    if (zeros.size() != 1)
        detail::fail(Errc::NonUniqueZero, std::to_string(zeros.size()) + " roots of unity with q(eta) in (lambda)");
    return zeros.front();
}

/// prod_{m=0}^{p-1} (x + zeta^m y) == x^p + y^p; a mismatch is an InternalInconsistency.
inline bool product_identity_check(const CycInt& x, const CycInt& y)
{
    detail::require_same(x.context(), y.context());
    const auto& ctx = x.context();
    auto prod = CycInt::one(ctx);
    for (std::uint64_t m = 0; m < ctx.p(); ++m)
        prod *= x + CycInt::zeta_power(ctx, static_cast<long>(m)) * y;
    detail::ensure(prod == pow(x, ctx.p()) + pow(y, ctx.p()), "prod (x + eta y) != x^p + y^p");
    return true;
}

/// Candidate solution of x^p + y^p = eps (1 - zeta)^(p(m+1)) z^p.
struct DescentInstance {
    CycInt x;
    CycInt y;
    CycInt z;
    UnitElem epsilon;
    std::uint64_t m;
};

enum class Eq1Clause { None, YDivisibleByLambda, ZDivisibleByLambda, EquationFails };

struct Eq1Verdict {
    bool valid;
    Eq1Clause failed; ///< None when valid
    std::string reason;
};

inline Eq1Verdict verify_eq1(const DescentInstance& d)
{
    const auto& ctx = d.x.context();
    detail::require_same(ctx, d.y.context());
    detail::require_same(ctx, d.z.context());
    detail::require_same(ctx, d.epsilon.context());
    if (reduce_mod_lambda(d.y) == 0)
        return {false, Eq1Clause::YDivisibleByLambda, "y is divisible by lambda"};
    if (reduce_mod_lambda(d.z) == 0)
        return {false, Eq1Clause::ZDivisibleByLambda, "z is divisible by lambda"};
    const auto p = ctx.p();
    const CycInt lhs = pow(d.x, p) + pow(d.y, p);
    const CycInt one_minus_zeta = -CycInt::lambda(ctx);
    const CycInt rhs = d.epsilon.value() * pow(one_minus_zeta, p * (d.m + 1)) * pow(d.z, p);
    if (lhs != rhs)
        return {false, Eq1Clause::EquationFails, "x^p + y^p != eps (1 - zeta)^(p(m+1)) z^p"};
    return {true, Eq1Clause::None, {}};
}

} // namespace cyclonomy
