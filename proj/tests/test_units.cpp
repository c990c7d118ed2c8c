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

#include <gtest/gtest.h>

#include <random>

#include <cyclonomy/element_io.hpp>
#include <cyclonomy/units.hpp>

#include "oracles.hpp"

using namespace cyclonomy;

namespace {

CycInt elem(std::uint64_t p, std::vector<long> c)
{
    std::vector<Integer> v(c.begin(), c.end());
    return CycInt(ctx_new(p), std::move(v));
}

// zeta^a * prod of cyclotomic units raised to small exponents.
std::vector<UnitElem> sample_units(const FieldContext& ctx)
{
    std::vector<UnitElem> out;
    const auto p = ctx.p();
    for (long a = 0; a < static_cast<long>(p); ++a)
        out.push_back(as_unit(CycInt::zeta_power(ctx, a)));
    for (std::uint64_t k = 2; k < p; ++k) {
        const auto c = cyclotomic_unit(ctx, k);
        for (long e : {1L, 2L, -1L, -2L})
            out.push_back(pow(c, e) * as_unit(CycInt::zeta_power(ctx, static_cast<long>(k + e))));
    }
    if (p >= 5)
        out.push_back(cyclotomic_unit(ctx, 2) * pow(cyclotomic_unit(ctx, 3), -1));
    return out;
}

} // namespace

TEST(AsUnit, Examples)
{
    const auto c5 = ctx_new(5);
    EXPECT_NO_THROW(as_unit(elem(5, {1, 1, 0, 0})));
    EXPECT_NO_THROW(as_unit(CycInt::one(c5)));
    try {
        as_unit(CycInt::lambda(c5));
        FAIL() << "lambda accepted as a unit";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::NotAUnit);
        EXPECT_EQ(e.value(), "5");
    }
    EXPECT_THROW(as_unit(CycInt(c5)), Error);
}

TEST(UnitInverse, Examples)
{
    EXPECT_EQ(unit_inverse(as_unit(CycInt::zeta_power(ctx_new(3), 1))).value(), elem(3, {-1, -1}));
    EXPECT_EQ(unit_inverse(as_unit(CycInt::one(ctx_new(7)))).value(), CycInt::one(ctx_new(7)));
    const auto u = as_unit(elem(5, {1, 1, 0, 0}));
    const auto inv = unit_inverse(u);
    EXPECT_EQ(inv.value(), elem(5, {0, -1, 0, -1}));
    EXPECT_EQ(inv.value() * u.value(), CycInt::one(ctx_new(5)));
}

TEST(UnitInverse, InvertsSampleUnits)
{
    for (std::uint64_t p : {3u, 5u, 7u, 11u}) {
        const auto ctx = ctx_new(p);
        for (const auto& u : sample_units(ctx))
            EXPECT_EQ(u.value() * unit_inverse(u).value(), CycInt::one(ctx)) << u.value();
    }
}

TEST(CyclotomicUnit, Examples)
{
    const auto c5 = ctx_new(5);
    EXPECT_EQ(cyclotomic_unit(c5, 2).value(), elem(5, {1, 1, 0, 0}));
    EXPECT_EQ(cyclotomic_unit(c5, 3).value(), elem(5, {1, 1, 1, 0}));
    for (std::uint64_t p : {3u, 5u, 7u, 11u, 13u}) {
        const auto ctx = ctx_new(p);
        for (std::uint64_t k = 2; k < p; ++k) {
            const auto u = cyclotomic_unit(ctx, k);
            EXPECT_EQ(norm(u.value()), 1);
            // (1 - zeta^k) = (1 - zeta) u
            EXPECT_EQ(CycInt::lambda(ctx) * u.value(), CycInt::zeta_power(ctx, static_cast<long>(k)) - CycInt::one(ctx));
        }
        EXPECT_THROW(cyclotomic_unit(ctx, 1), Error);
        EXPECT_THROW(cyclotomic_unit(ctx, p), Error);
    }
}

TEST(DecomposeReal, Examples)
{
    const auto c5 = ctx_new(5);
    auto d = decompose_real(as_unit(elem(5, {1, 1, 0, 0})));
    EXPECT_EQ(d.n, 3u);
    EXPECT_EQ(d.x, elem(5, {0, 0, 1, 1}));
    d = decompose_real(as_unit(CycInt::one(c5)));
    EXPECT_EQ(d.n, 0u);
    EXPECT_EQ(d.x, CycInt::one(c5));
    d = decompose_real(as_unit(CycInt::zeta_power(c5, 1)));
    EXPECT_EQ(d.n, 1u);
    EXPECT_EQ(d.x, CycInt::one(c5));
}

TEST(DecomposeReal, RoundTrip)
{
    for (std::uint64_t p : {3u, 5u, 7u, 11u}) {
        const auto ctx = ctx_new(p);
        for (const auto& u : sample_units(ctx)) {
            const auto d = decompose_real(u);
            EXPECT_LT(d.n, p);
            EXPECT_EQ(CycInt::zeta_power(ctx, static_cast<long>(d.n)) * d.x, u.value());
            EXPECT_EQ(galois_apply(static_cast<long>(p - 1), d.x), d.x);
        }
    }
}

TEST(CongruentInteger, Examples)
{
    const auto c3 = ctx_new(3);
    EXPECT_EQ(congruent_integer_mod_p(as_unit(CycInt::from_integer(c3, -1))), 2u);
    EXPECT_EQ(congruent_integer_mod_p(as_unit(CycInt::one(c3))), 1u);
    EXPECT_EQ(congruent_integer_mod_p(as_unit(CycInt::zeta_power(c3, 1))), std::nullopt);
}

TEST(CongruentInteger, ConsistentWithResidueModLambda)
{
    for (std::uint64_t p : {3u, 5u, 7u}) {
        const auto ctx = ctx_new(p);
        for (const auto& v : sample_units(ctx)) {
            for (const auto& u : {v, as_unit(pow(v.value(), p))}) {
                if (auto n = congruent_integer_mod_p(u)) {
                    EXPECT_EQ(*n, reduce_mod_lambda(u.value()));
                }
            }
            // p-th powers are always congruent to an integer.
            EXPECT_TRUE(congruent_integer_mod_p(as_unit(pow(v.value(), p))).has_value());
        }
    }
}

TEST(CongruentInteger, ImpliesLambdaPowerCongruence)
{
    // p | u - n  =>  lambda^p | u^(p-1) - 1.
    for (std::uint64_t p : {3u, 5u}) {
        const auto ctx = ctx_new(p);
        for (const auto& v : sample_units(ctx)) {
            for (const auto& u : {v, as_unit(pow(v.value(), p))}) {
                if (!congruent_integer_mod_p(u))
                    continue;
                const CycInt diff = pow(u.value(), p - 1) - CycInt::one(ctx);
                if (!diff.is_zero()) {
                    EXPECT_GE(lambda_valuation(diff), p) << u.value();
                }
            }
        }
    }
}

TEST(KummerSearch, Examples)
{
    const auto c3 = ctx_new(3);
    const std::vector<UnitElem> zeta{as_unit(CycInt::zeta_power(c3, 1))};
    auto v = kummer_search(as_unit(CycInt::from_integer(c3, -1)), zeta, 1);
    ASSERT_TRUE(v.has_value());
    EXPECT_EQ(pow(v->value(), 3), CycInt::from_integer(c3, -1));
    EXPECT_EQ(v->value(), CycInt::from_integer(c3, -1));

    v = kummer_search(as_unit(CycInt::one(c3)), zeta, 1);
    ASSERT_TRUE(v.has_value());
    EXPECT_EQ(v->value(), CycInt::one(c3));

    const auto g = as_unit(elem(5, {1, 1, 0, 0}));
    const auto u = as_unit(pow(g.value(), 5));
    v = kummer_search(u, std::vector<UnitElem>{g}, 2);
    ASSERT_TRUE(v.has_value());
    EXPECT_EQ(pow(v->value(), 5), u.value());
}

TEST(KummerSearch, FindsRootsOfPowersInsideTheBox)
{
    for (std::uint64_t p : {5u, 7u}) {
        const auto ctx = ctx_new(p);
        const std::vector<UnitElem> gens{cyclotomic_unit(ctx, 2), cyclotomic_unit(ctx, 3)};
        for (long a = -2; a <= 2; ++a) {
            for (long b = -2; b <= 2; ++b) {
                const auto v = pow(gens[0], a) * pow(gens[1], b) * as_unit(CycInt::zeta_power(ctx, a + 2 * b));
                const auto u = as_unit(pow(v.value(), p));
                const auto root = kummer_search(u, gens, 2);
                ASSERT_TRUE(root.has_value()) << a << " " << b;
                EXPECT_EQ(pow(root->value(), p), u.value());
            }
        }
    }
}

TEST(KummerSearch, NotFoundOutsideTheBox)
{
    const auto ctx = ctx_new(5);
    const auto g = cyclotomic_unit(ctx, 2);
    // 1 + zeta is not a 5th power of anything in the box.
    EXPECT_FALSE(kummer_search(g, std::vector<UnitElem>{g}, 3).has_value());
    // (1 + zeta)^15 needs exponent 3.
    const auto u = as_unit(pow(g.value(), 15));
    EXPECT_FALSE(kummer_search(u, std::vector<UnitElem>{g}, 2).has_value());
    EXPECT_TRUE(kummer_search(u, std::vector<UnitElem>{g}, 3).has_value());
}

TEST(BuildPu, Examples)
{
    const auto c3 = ctx_new(3);
    const auto pu = build_Pu(as_unit(CycInt::one(c3)));
    ASSERT_EQ(pu.degree(), 3);
    EXPECT_TRUE(pu.is_monic());
    EXPECT_EQ(pu[0], CycInt(c3));
    EXPECT_EQ(pu[1], elem(3, {1, 1}));
    EXPECT_EQ(pu[2], elem(3, {2, 1}));
    EXPECT_EQ(pu[3], CycInt::one(c3));
    try {
        build_Pu(as_unit(CycInt::zeta_power(c3, 1)));
        FAIL() << "zeta accepted";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::HypothesisFailed);
    }
}

TEST(BuildPu, DefiningIdentityHolds)
{
    // u = v^(p(p-1)) satisfies lambda^p | u - 1.
    for (std::uint64_t p : {3u, 5u, 7u}) {
        const auto ctx = ctx_new(p);
        const auto lam = CycInt::lambda(ctx);
        std::vector<UnitElem> units{as_unit(CycInt::one(ctx)), as_unit(CycInt::from_integer(ctx, -1))};
        units.push_back(as_unit(pow(cyclotomic_unit(ctx, 2).value(), p * (p - 1))));
        for (const auto& u : units) {
            const CycInt diff = u.value() - CycInt::one(ctx);
            if (!diff.is_zero() && lambda_valuation(diff) < p) {
                EXPECT_THROW(build_Pu(u), Error);
                continue;
            }
            const auto pu = build_Pu(u);
            ASSERT_EQ(pu.degree(), static_cast<long>(p));
            EXPECT_TRUE(pu.is_monic());
            // (lambda X - 1)^p + u, expanded by repeated multiplication.
            std::vector<CycInt> lhs{CycInt::one(ctx)};
            for (std::uint64_t i = 0; i < p; ++i) {
                std::vector<CycInt> next(lhs.size() + 1, CycInt(ctx));
                for (std::size_t j = 0; j < lhs.size(); ++j) {
                    next[j] -= lhs[j];
                    next[j + 1] += lam * lhs[j];
                }
                lhs = std::move(next);
            }
            lhs[0] += u.value();
            const auto lam_p = pow(lam, p);
            for (std::size_t k = 0; k <= p; ++k)
                EXPECT_EQ(lhs[k], lam_p * pu[k]) << "p=" << p << " k=" << k;
        }
    }
}
