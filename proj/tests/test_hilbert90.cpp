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

#include <cyclonomy/hilbert90.hpp>

#include "oracles.hpp"

using namespace cyclonomy;

namespace {

Errc code_of(auto&& fn)
{
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no cyclonomy::Error thrown";
    return Errc::InternalInconsistency;
}

CycRat zeta(const FieldContext& ctx, long k) { return CycRat::zeta_power(ctx, k); }

CycRat rat(const CycInt& a) { return to_rational(a); }

bool satisfies(const CycRat& eta, const CycRat& eps)
{
    const GaloisGroup G(eta.context());
    return !eps.is_zero() && eta * G.apply(1, eps) == eps;
}

} // namespace

TEST(GaloisGroup, Generator)
{
    EXPECT_EQ(GaloisGroup(ctx_new(3)).generator(), 2u);
    EXPECT_EQ(GaloisGroup(ctx_new(5)).generator(), 2u);
    EXPECT_EQ(GaloisGroup(ctx_new(7)).generator(), 3u);
    EXPECT_EQ(GaloisGroup(ctx_new(23)).generator(), 5u);
    const GaloisGroup G(ctx_new(11));
    std::vector<bool> hit(11, false);
    for (std::size_t i = 0; i < G.order(); ++i)
        hit[G.exponent_of(i)] = true;
    for (std::uint64_t k = 1; k < 11; ++k)
        EXPECT_TRUE(hit[k]);
}

TEST(Cocycle, FromZetaAtFive)
{
    const auto c5 = ctx_new(5);
    const auto c = cocycle_from_eta(zeta(c5, 1));
    ASSERT_EQ(c.values.size(), 4u);
    EXPECT_EQ(c.values[0], CycRat::one(c5));
    EXPECT_EQ(c.values[1], zeta(c5, 1));
    EXPECT_EQ(c.values[2], zeta(c5, 3));
    EXPECT_EQ(c.values[3], zeta(c5, 2));
    EXPECT_TRUE(verify_cocycle(c));
}

TEST(Cocycle, TrivialAndNormErrors)
{
    const auto c7 = ctx_new(7);
    const auto c = cocycle_from_eta(CycRat::one(c7));
    for (const auto& v : c.values)
        EXPECT_EQ(v, CycRat::one(c7));
    EXPECT_TRUE(verify_cocycle(c));
    try {
        cocycle_from_eta(CycRat::from_integer(c7, 2));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::NormNotOne);
        EXPECT_EQ(e.value(), "64");
    }
    EXPECT_EQ(code_of([&] { cocycle_from_eta(CycRat(c7)); }), Errc::NormNotOne);
}

TEST(Cocycle, CorruptionIsDetected)
{
    const auto c5 = ctx_new(5);
    for (std::size_t i = 0; i < 4; ++i) {
        auto c = cocycle_from_eta(zeta(c5, 1));
        c.values[i] *= zeta(c5, 1);
        EXPECT_FALSE(verify_cocycle(c)) << i;
    }
    auto c = cocycle_from_eta(zeta(c5, 1));
    c.values.pop_back();
    EXPECT_FALSE(verify_cocycle(c));
}

TEST(Resolvent, Examples)
{
    for (std::uint64_t p : {3u, 5u, 7u}) {
        const auto ctx = ctx_new(p);
        const auto c = cocycle_from_eta(CycRat::one(ctx));
        EXPECT_EQ(resolvent(c, CycRat::one(ctx)), CycRat::from_integer(ctx, static_cast<long>(p - 1)));
        EXPECT_EQ(resolvent(c, zeta(ctx, 1)), CycRat::from_integer(ctx, -1));
    }
    const auto c5 = ctx_new(5);
    const auto eta = zeta(c5, 1);
    const auto b = resolvent(cocycle_from_eta(eta), zeta(c5, 1));
    if (!b.is_zero()) {
        EXPECT_TRUE(satisfies(eta, b));
    }
}

TEST(Witness, Examples)
{
    const auto c5 = ctx_new(5);
    EXPECT_TRUE(satisfies(zeta(c5, 1), zeta(c5, 4)));
    EXPECT_TRUE(satisfies(zeta(c5, 1), hilbert90_witness(zeta(c5, 1))));
    EXPECT_TRUE(satisfies(CycRat::one(c5), hilbert90_witness(CycRat::one(c5))));

    const GaloisGroup G(c5);
    const auto w = rat(CycInt::one(c5) + CycInt::zeta_power(c5, 1));
    const auto eta = w * inverse(G.apply(1, w));
    EXPECT_TRUE(satisfies(eta, w));
    EXPECT_TRUE(satisfies(eta, hilbert90_witness(eta)));
    EXPECT_EQ(code_of([&] { hilbert90_witness(CycRat::from_integer(c5, 3)); }), Errc::NormNotOne);
}

TEST(Witness, Integral)
{
    const auto c5 = ctx_new(5);
    const auto eps = hilbert90_integral(zeta(c5, 1));
    EXPECT_TRUE(satisfies(zeta(c5, 1), rat(eps)));
    EXPECT_EQ(hilbert90_integral(CycRat::one(c5)), CycInt::from_integer(c5, 4));

    // Witness of an integral unit quotient that picks up denominators before scaling.
    const GaloisGroup G(c5);
    const auto w = rat(CycInt::one(c5) + CycInt::zeta_power(c5, 1));
    const auto eta = w * inverse(G.apply(1, w));
    ASSERT_TRUE(is_integral(eta));
    const auto e = hilbert90_integral(eta);
    EXPECT_FALSE(e.is_zero());
    EXPECT_TRUE(satisfies(eta, rat(e)));

    const auto w2 = rat(CycInt(c5, {Integer(2), Integer(1), Integer(0), Integer(0)}));
    const auto eta2 = w2 * inverse(G.apply(1, w2));
    ASSERT_FALSE(is_integral(eta2));
    EXPECT_EQ(code_of([&] { hilbert90_integral(eta2); }), Errc::NotIntegralEta);
}

TEST(Witness, RandomRoundTrip)
{
    std::mt19937_64 rng(51);
    for (std::uint64_t p : {3u, 5u, 7u}) {
        const auto ctx = ctx_new(p);
        const GaloisGroup G(ctx);
        for (int trial = 0; trial < 200; ++trial) {
            const auto w = rat(oracle::random_nonzero_element(ctx, rng, -10, 10));
            const auto eta = w * inverse(G.apply(1, w));
            ASSERT_EQ(norm(eta), 1);
            const auto c = cocycle_from_eta(eta);
            ASSERT_TRUE(verify_cocycle(c));
            // Full product wraps around to the norm.
            EXPECT_EQ(c.values.back() * G.apply(G.order() - 1, eta), CycRat::one(ctx));
            ASSERT_TRUE(satisfies(eta, hilbert90_witness(eta)));
        }
    }
}

TEST(Resolvent, Linear)
{
    std::mt19937_64 rng(52);
    for (std::uint64_t p : {3u, 5u, 7u}) {
        const auto ctx = ctx_new(p);
        const GaloisGroup G(ctx);
        for (int trial = 0; trial < 20; ++trial) {
            const auto w = rat(oracle::random_nonzero_element(ctx, rng, -5, 5));
            const auto c = cocycle_from_eta(w * inverse(G.apply(1, w)));
            const auto t1 = rat(oracle::random_element(ctx, rng, -5, 5));
            const auto t2 = rat(oracle::random_element(ctx, rng, -5, 5));
            EXPECT_EQ(resolvent(c, t1 + t2), resolvent(c, t1) + resolvent(c, t2));
            EXPECT_EQ(resolvent(c, t1 * Rational(3, 7)), resolvent(c, t1) * Rational(3, 7));
        }
    }
}
