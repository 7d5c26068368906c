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

#include <random>

#include "quantj/drinfeld.hpp"
#include "quantj/errors.hpp"
#include "test_util.hpp"

using namespace quantj;
using quantj::testing::gf;

namespace {

QuadDescPtr desc(std::uint32_t q, const char* a, const char* b) {
    auto F = gf(q);
    return QuadDesc::make(Poly::parse(F, a), F->parse(b));
}

RatFn rf(const FieldPtr& F, const char* s) { return RatFn(Poly::parse(F, s)); }

SkewRat random_skew(const FieldPtr& F, int deg, std::mt19937_64& rng) {
    std::vector<RatFn> c;
    for (int k = 0; k <= deg; ++k) {
        Poly num = testing::random_poly(F, 2, rng), den = testing::random_poly(F, 1, rng);
        if (den.is_zero()) den = Poly::constant(F, 1);
        c.push_back(RatFn(num, den));
    }
    if (c.back().is_zero()) c.back() = RatFn::constant(F, 1);
    return SkewRat(F, c);
}

std::vector<Poly> monics_upto(const FieldPtr& F, int deg) {
    std::vector<Poly> out;
    for (int k = 0; k <= deg; ++k) for_each_monic(F, k, [&](const Poly& p) { out.push_back(p); });
    return out;
}

bool divides(const Poly& a, const Poly& b) { return (b % a).is_zero(); }

// coefficientwise agreement below the smaller precision of each pair
bool agree(const SkewLaurent& a, const SkewLaurent& b) {
    if (a.degree() != b.degree()) return false;
    for (int k = 0; k <= a.degree(); ++k) {
        const auto& x = a.coeff(k);
        const auto& y = b.coeff(k);
        if (!compare(x, y, std::min(x.prec(), y.prec())).equal()) return false;
    }
    return true;
}

std::int64_t min_rel(const SkewLaurent& a) {
    std::int64_t r = INT64_MAX;
    for (const auto& c : a.coeffs()) r = std::min(r, c.rel_prec());
    return r;
}

}  // namespace

TEST_CASE("skew product examples") {
    auto F = gf(2);
    const SkewRat tau(F, {RatFn(F), RatFn::constant(F, 1)});
    const SkewRat T = SkewRat::constant(rf(F, "T"));
    CHECK(tau * T == SkewRat(F, {RatFn(F), rf(F, "T^2")}));
    const SkewRat u = tau + T;
    CHECK(u * u == SkewRat(F, {rf(F, "T^2"), rf(F, "T^2 + T"), RatFn::constant(F, 1)}));
    auto [s, r] = right_divmod(u * u, u);
    CHECK(s == u);
    CHECK(r.is_zero());
    CHECK_THROWS_AS(right_divmod(u, SkewRat::zero(F)), DomainError);
}

TEST_CASE("skew ring axioms and division (sampled)") {
    std::mt19937_64 rng(7);
    for (std::uint32_t q : {2u, 3u}) {
        auto F = gf(q);
        for (int trial = 0; trial < 25; ++trial) {
            const auto a = random_skew(F, 2, rng), b = random_skew(F, 1, rng), c = random_skew(F, 2, rng);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK((b + c) * a == b * a + c * a);
            CHECK((a * b).degree() == a.degree() + b.degree());
            const auto u = a * c + b;
            auto [s, r] = right_divmod(u, a);
            CHECK(r.degree() < a.degree());
            CHECK(s * a + r == u);
        }
    }
}

TEST_CASE("additive evaluation") {
    std::mt19937_64 rng(11);
    for (std::uint32_t q : {2u, 3u, 4u}) {
        auto F = gf(q);
        for (int trial = 0; trial < 10; ++trial) {
            const auto h = random_skew(F, 2, rng);
            const RatFn x(testing::random_poly(F, 2, rng)), y(testing::random_poly(F, 2, rng));
            CHECK(h.eval(x + y) == h.eval(x) + h.eval(y));
            const Elem c = testing::random_elem(*F, rng);
            CHECK(h.eval(x.scaled(c)) == h.eval(x).scaled(c));
        }
    }
}

TEST_CASE("Carlitz module examples") {
    for (std::uint32_t q : {2u, 3u}) {
        auto F = gf(q);
        CHECK(carlitz(Poly::T(F)) == SkewRat(F, {rf(F, "T"), RatFn::constant(F, 1)}));
        const Poly Tq_T = Poly::monomial(F, 1, static_cast<int>(q)) + Poly::T(F);
        CHECK(carlitz(Poly::T(F).pow(2)) == SkewRat(F, {rf(F, "T^2"), RatFn(Tq_T), RatFn::constant(F, 1)}));
        for (Elem c = 1; c < q; ++c) CHECK(carlitz(Poly::constant(F, c)) == SkewRat::constant(RatFn::constant(F, c)));
    }
}

TEST_CASE("Carlitz commutativity and multiplicativity (deg <= 4, sampled)") {
    std::mt19937_64 rng(3);
    for (std::uint32_t q : {2u, 3u}) {
        auto F = gf(q);
        for (int trial = 0; trial < 20; ++trial) {
            Poly m = testing::random_poly(F, 1 + trial % 4, rng), n = testing::random_poly(F, 4 - trial % 4, rng);
            if (m.is_zero() || n.is_zero()) continue;
            const auto rm = carlitz(m), rn = carlitz(n);
            CHECK(rm * rn == rn * rm);
            CHECK(rm * rn == carlitz(m * n));
            CHECK(carlitz(m + n) == rm + rn);
            CHECK(rm.degree() == m.degree());
            CHECK(rm.coeff(0) == RatFn(m));
        }
    }
}

TEST_CASE("rho_m' right-divides rho_m iff m' | m") {
    for (auto [q, deg] : {std::pair{2u, 4}, std::pair{3u, 2}}) {
        auto F = gf(q);
        const auto ms = monics_upto(F, deg);
        std::vector<SkewRat> rhos;
        for (const auto& m : ms) rhos.push_back(carlitz(m));
        for (std::size_t i = 0; i < ms.size(); ++i)
            for (std::size_t j = 0; j < ms.size(); ++j) {
                const bool skew = right_divmod(rhos[i], rhos[j]).second.is_zero();
                CHECK(skew == divides(ms[j], ms[i]));
            }
    }
}

TEST_CASE("left ideal generators") {
    auto F = gf(3);
    const auto T = Poly::T(F);
    CHECK(left_ideal_generator<RatFn>({carlitz(T), carlitz(T + Poly::constant(F, 1))}) == SkewRat::constant(RatFn::constant(F, 1)));
    const Poly m = T.pow(2) + Poly::constant(F, 1), m2 = T + Poly::constant(F, 2);
    CHECK(left_ideal_generator<RatFn>({carlitz(m), carlitz(m * m2)}) == carlitz(m));
    CHECK(left_ideal_generator<RatFn>({carlitz(m * m2), carlitz(m * T)}) == carlitz(m));
    const SkewRat h(F, {rf(F, "T"), rf(F, "2*T^2")});
    CHECK(left_ideal_generator<RatFn>({h}) == h.left_scaled(rf(F, "2*T^2").inverse()));
}

TEST_CASE("star action of principal ideals on Carlitz is trivial") {
    for (std::uint32_t q : {2u, 3u}) {
        auto F = gf(q);
        const auto ms = monics_upto(F, 3);
        const std::vector<SkewRat> ring{carlitz(Poly::T(F))};
        for (const auto& m : ms) {
            const auto st = star_action<RatFn>(ring, {carlitz(m)});
            CHECK(st.rho_ideal == carlitz(m));
            CHECK(st.starred[0] == ring[0]);
        }
        const auto unit = star_action<RatFn>(ring, {SkewRat::constant(RatFn::constant(F, 1))});
        CHECK(unit.rho_ideal == SkewRat::constant(RatFn::constant(F, 1)));
        CHECK(unit.starred[0] == ring[0]);
    }
}

TEST_CASE("Carlitz exponential satisfies e(Tz) = rho_T(e(z)) exactly") {
    for (std::uint32_t q : {2u, 3u}) {
        auto F = gf(q);
        const auto c = carlitz_exp_coeffs(F, 5);
        const auto T = rf(F, "T");
        for (std::size_t k = 1; k < c.size(); ++k) CHECK(c[k] * T.frobenius(static_cast<unsigned>(k)) == T * c[k] + c[k - 1].frobenius(1));
    }
}

TEST_CASE("exponential of F_q[T] is a rescaled Carlitz exponential") {
    // e(z) = xi^{-1} e_C(xi z), so c_k D_k = (c_1 D_1)^{(q^k-1)/(q-1)}
    for (std::uint32_t q : {2u, 3u}) {
        auto D = desc(q, "T", "1");
        auto F = D->field();
        auto amb = Ambient::poly_ring(D);
        LatticeProvider prov = [&](int bound) {
            FilteredBasis L{amb, bound, {}, 0};
            for (int k = 0; k <= bound; ++k) {
                Coords c(static_cast<std::size_t>(k) + 1, 0);
                c.back() = 1;
                L.rows.push_back(c);
            }
            return L;
        };
        const int z_bound = static_cast<int>(q * q * q) + 1;
        const auto e = exp_adaptive(prov, 8, 12, z_bound);
        REQUIRE(e.c.size() == 4);
        CHECK(e.prec >= 16);
        const auto Dk = carlitz_exp_coeffs(F, 3);
        const auto base = e.c[1] * LaurentSeries::from_ratfn(Dk[1].inverse(), 400);
        std::uint64_t qk = 1;
        for (unsigned k = 1; k <= 3; ++k) {
            qk *= q;
            const auto lhs = e.c[k] * LaurentSeries::from_ratfn(Dk[k].inverse(), 400);
            const auto rhs = base.pow((qk - 1) / (q - 1));
            CHECK(compare(lhs, rhs, std::min(lhs.prec(), rhs.prec())).equal());
        }
        for (int m = 1; m < z_bound; ++m)
            if (m % (q - 1) != 0) CHECK(e.power_sums[m - 1].is_zero());
        const auto img = drinfeld_from_exp(e, QuadElem::from_poly(D, Poly::T(F)));
        CHECK(img.rho.degree() == 1);
        CHECK(img.residual->below(12));
    }
}

TEST_CASE("Drinfeld module of a_0 and a_1 for f^2 = T^2 f + 1 over F_2") {
    auto D = desc(2, "T^2", "1");
    auto F = D->field();
    auto R = Ambient::of_order(OrderDesc::standard(D));
    const auto f = QuadElem::gen(D);
    const auto fT = f * QuadElem::from_poly(D, Poly::T(F));  // f, fT generate A_f
    for (int i = 0; i < 2; ++i) {
        CAPTURE(i);
        auto I = ideal_a(R, i);
        LatticeProvider prov = [&](int bound) { return ideal_filtered_basis(I, bound); };
        const auto e = exp_adaptive(prov, 8, 12, 17);
        CHECK(e.c.size() == 5);
        const auto rf_ = drinfeld_from_exp(e, f);
        const auto rfT = drinfeld_from_exp(e, fT);
        CHECK(rf_.rho.degree() == 2);
        CHECK(rfT.rho.degree() == 3);
        CHECK(rf_.residual->below(12));
        CHECK(rfT.residual->below(12));
        CHECK(min_rel(rf_.rho) >= 12);
        // ring relations
        CHECK(agree(rf_.rho * rfT.rho, rfT.rho * rf_.rho));
        CHECK(agree(drinfeld_from_exp(e, f * f).rho, rf_.rho * rf_.rho));
        CHECK(agree(drinfeld_from_exp(e, f * f + fT).rho, rf_.rho * rf_.rho + rfT.rho));
        // independent recomputation at higher precision
        const auto e16 = exp_adaptive(prov, 8, 16, 17);
        CHECK(agree(drinfeld_from_exp(e16, f).rho, rf_.rho));
        // sensitivity: a coefficient moved by u^1 breaks the functional equation
        for (int k = 1; k <= 2; ++k) {
            std::vector<LaurentSeries> c = rf_.rho.coeffs();
            c[k] = c[k] + LaurentSeries::monomial(F, 1, 1, c[k].prec());
            CHECK_FALSE(functional_eq_residual(e, SkewLaurent(F, c), 17).below(12));
        }
    }
}

TEST_CASE("star action of (f) on the a_1 module is trivial to precision") {
    auto D = desc(2, "T^2", "1");
    auto R = Ambient::of_order(OrderDesc::standard(D));
    auto I = ideal_a(R, 1);
    LatticeProvider prov = [&](int bound) { return ideal_filtered_basis(I, bound); };
    const auto e = exp_adaptive(prov, 8, 24, 17);
    const auto f = QuadElem::gen(D);
    const auto rf_ = drinfeld_from_exp(e, f).rho;
    const auto rfT = drinfeld_from_exp(e, f * QuadElem::from_poly(D, Poly::T(D->field()))).rho;
    const auto st = star_action<LaurentSeries>({rf_, rfT}, {rf_});
    CHECK(agree(st.rho_ideal, rf_.normalized()));
    CHECK(agree(st.starred[0], rf_));
    CHECK(agree(st.starred[1], rfT));
}

TEST_CASE("drinfeld_from_exp refuses constants and short z_bound") {
    auto D = desc(2, "T^2", "1");
    auto R = Ambient::of_order(OrderDesc::standard(D));
    auto I = ideal_a(R, 0);
    LatticeProvider prov = [&](int bound) { return ideal_filtered_basis(I, bound); };
    const auto e = exp_adaptive(prov, 8, 8, 4);
    CHECK_THROWS_AS(drinfeld_from_exp(e, QuadElem::one(D)), DomainError);
    CHECK_THROWS_AS(drinfeld_from_exp(e, QuadElem::gen(D)), PrecisionError);
}
