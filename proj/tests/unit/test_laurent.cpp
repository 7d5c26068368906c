/*
   Copyright 2026 The quantj Authors

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

#include <doctest.h>

#include "quantj/errors.hpp"
#include "quantj/laurent.hpp"
#include "test_util.hpp"

using namespace quantj;
using quantj::testing::gf;
using quantj::testing::random_series;

TEST_CASE("ord_and_sgn examples") {
    auto F3 = gf(3);
    auto monic = LaurentSeries::from_poly(Poly(F3, {2, 0, 1, 1}), 10);
    CHECK(monic.sgn() == 1);
    auto t3 = LaurentSeries::from_poly(Poly::monomial(F3, 1, 3), 10);
    CHECK(t3.ord() == -3);
    CHECK(t3.sgn() == 1);
    auto lin = LaurentSeries::from_poly(Poly(F3, {1, 2}), 10);
    CHECK(lin.ord() == -1);
    CHECK(lin.sgn() == 2);
    CHECK_THROWS_AS(LaurentSeries::zero(F3, 5).ord_and_sgn(), PrecisionError);
}

TEST_CASE("nearest_poly_norm examples") {
    auto F2 = gf(2);
    auto poly = LaurentSeries::from_poly(Poly(F2, {1, 1, 0, 1}), 12);
    auto d0 = poly.nearest_poly_norm();
    CHECK(!d0.exponent.has_value());
    CHECK(d0.prec == 12);
    CHECK(LaurentSeries::monomial(F2, 1, 1, 12).nearest_poly_norm().exponent == 1);
    auto x = LaurentSeries::from_poly(Poly::T(F2), 12) + LaurentSeries::monomial(F2, 1, 2, 12);
    CHECK(x.nearest_poly_norm().exponent == 2);
}

TEST_CASE("laurent_inv examples") {
    auto F2 = gf(2);
    auto one_plus_u = LaurentSeries::from_coeffs(F2, 0, {1, 1}, 10);
    auto inv = one_plus_u.inverse();
    CHECK(inv.prec() == 10);
    for (int k = 0; k < 10; ++k) CHECK(inv.coeff(k) == 1);
    auto u = LaurentSeries::monomial(F2, 1, 1, 10);
    auto uinv = u.inverse();
    CHECK(uinv.val() == -1);
    CHECK(uinv.coeff(-1) == 1);
    CHECK(uinv.rel_prec() == 9);
    // 1 + u^4 + u^8 + ... to O(u^16); its inverse times itself must be 1
    std::vector<Elem> c(16, 0);
    for (int k = 0; k < 16; k += 4) c[k] = 1;
    auto geo = LaurentSeries::from_coeffs(F2, 0, c, 16);
    auto ginv = geo.inverse();
    CHECK(compare(ginv * geo, LaurentSeries::constant(F2, 1, 100), 16).equal());
    CHECK(compare(ginv, LaurentSeries::from_coeffs(F2, 0, {1, 0, 0, 0, 1}, 100), 16).equal());
    CHECK_THROWS_AS(LaurentSeries::zero(F2, 3).inverse(), PrecisionError);
}

TEST_CASE("precision propagation rules") {
    auto F3 = gf(3);
    std::mt19937_64 rng(11);
    auto x = random_series(F3, -2, 7, rng);  // prec 5
    auto y = random_series(F3, 1, 9, rng);   // prec 10
    CHECK((x + y).prec() == 5);
    CHECK((x * y).prec() == std::min(x.prec() + y.val(), y.prec() + x.val()));
    CHECK(x.inverse().rel_prec() == x.rel_prec());
    CHECK(x.frobenius().prec() == 3 * x.prec());
}

TEST_CASE("ultrametric multiplicativity and inverse involution (sampled)") {
    std::mt19937_64 rng(2024);
    for (auto q : {2u, 3u, 4u, 5u, 9u}) {
        auto F = gf(q);
        for (int trial = 0; trial < 40; ++trial) {
            std::int64_t vx = static_cast<std::int64_t>(rng() % 9) - 4, vy = static_cast<std::int64_t>(rng() % 9) - 4;
            auto x = random_series(F, vx, 6 + static_cast<std::int64_t>(rng() % 10), rng);
            auto y = random_series(F, vy, 6 + static_cast<std::int64_t>(rng() % 10), rng);
            auto xy = x * y;
            CHECK(xy.ord() == x.ord() + y.ord());
            CHECK(xy.sgn() == F->mul(x.sgn(), y.sgn()));
            auto back = x.inverse().inverse();
            CHECK(compare(back, x, x.prec()).equal());
            CHECK(compare(x * x.inverse(), LaurentSeries::constant(F, 1, 1000), x.rel_prec()).equal());
        }
    }
}

TEST_CASE("distance to nearest polynomial is translation invariant (sampled)") {
    std::mt19937_64 rng(5);
    for (auto q : {2u, 3u, 4u}) {
        auto F = gf(q);
        for (int trial = 0; trial < 60; ++trial) {
            auto x = random_series(F, -3, 14, rng);
            auto p = LaurentSeries::from_poly(quantj::testing::random_poly(F, 5, rng), 100);
            auto a = x.nearest_poly_norm(), b = (x + p).nearest_poly_norm();
            CHECK(a.exponent == b.exponent);
        }
    }
}

TEST_CASE("raising precision never changes previously reported coefficients") {
    std::mt19937_64 rng(99);
    auto F = gf(3);
    for (int trial = 0; trial < 30; ++trial) {
        auto hi = random_series(F, -2, 30, rng);
        auto lo = hi.truncated_rel(12);
        auto inv_lo = lo.inverse(), inv_hi = hi.inverse();
        CHECK(compare(inv_lo, inv_hi, inv_lo.prec()).equal());
        auto cube_lo = lo.pow(3), cube_hi = hi.pow(3);
        CHECK(compare(cube_lo, cube_hi, cube_lo.prec()).equal());
    }
}

TEST_CASE("comparisons are three-valued") {
    auto F2 = gf(2);
    auto a = LaurentSeries::from_coeffs(F2, 0, {1, 0, 1}, 3);
    auto b = LaurentSeries::from_coeffs(F2, 0, {1, 0, 1, 1}, 6);
    CHECK(compare(a, b, 3).equal());
    CHECK(compare(a, b, 5).kind == Comparison::Kind::Undecidable);
    auto c = LaurentSeries::from_coeffs(F2, 0, {1, 1}, 6);
    auto cmp = compare(b, c, 6);
    CHECK(cmp.differs());
    CHECK(cmp.exponent == 1);
    CHECK(compare_coeffs(b, c, 1).equal());
}

TEST_CASE("from_ratfn matches exact division") {
    auto F3 = gf(3);
    RatFn r(Poly(F3, {1, 2}), Poly(F3, {2, 0, 1}));
    auto s = LaurentSeries::from_ratfn(r, 20);
    auto back = s * LaurentSeries::from_poly(r.den(), 40);
    CHECK(compare(back, LaurentSeries::from_poly(r.num(), 40), back.prec()).equal());
    CHECK(s.val() == 1);
}
