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

#include <set>

#include "quantj/errors.hpp"
#include "quantj/lattice.hpp"
#include "test_util.hpp"

using namespace quantj;
using quantj::testing::gf;

namespace {

QuadDescPtr desc(std::uint32_t q, const char* a, const char* b) {
    auto F = gf(q);
    return QuadDesc::make(Poly::parse(F, a), F->parse(b));
}

AmbientPtr ring_of(const QuadDescPtr& D) { return Ambient::of_order(OrderDesc::standard(D)); }

QuadElem poly(const QuadDescPtr& D, const char* s) { return QuadElem::from_poly(D, Poly::parse(D->field(), s)); }

// every F_q combination of the listed elements
std::vector<QuadElem> all_combinations(const QuadDescPtr& D, const std::vector<QuadElem>& basis) {
    std::vector<QuadElem> out{QuadElem::zero(D)};
    for (const auto& b : basis) {
        std::vector<QuadElem> next;
        for (const auto& z : out)
            for (Elem c = 0; c < D->q(); ++c) next.push_back(z + b.scaled(c));
        out = std::move(next);
    }
    return out;
}

bool contains_elem(const std::vector<QuadElem>& v, const QuadElem& z) { return std::find(v.begin(), v.end(), z) != v.end(); }

}  // namespace

TEST_CASE("af_basis for a = T^2, b = 1 over F_2") {
    auto D = desc(2, "T^2", "1");
    auto B = af_basis(*OrderDesc::standard(D), 4);
    REQUIRE(B.size() == 4);
    std::vector<int> degs;
    for (const auto& e : B) degs.push_back(e.degree);
    CHECK(degs == std::vector<int>{0, 2, 3, 4});
    auto f = QuadElem::gen(D);
    CHECK(B[0].elem == QuadElem::one(D));
    CHECK(B[1].elem == f);
    CHECK(B[2].elem == f.scaled(RatFn(Poly::parse(D->field(), "T"))));
    CHECK(B[3].elem == f * f);
    CHECK(B[3].elem == QuadElem(D, RatFn::constant(D->field(), 1), RatFn(D->a())));
    for (const auto& e : B) {
        CHECK_FALSE((e.l == 0 && e.m > 0));
        CHECK(deg_at_inf1(e.elem) == e.degree);
    }
}

TEST_CASE("membership examples") {
    for (const auto& D : {desc(2, "T^2", "1"), desc(3, "T^2 + 2", "2"), desc(2, "T^3", "1"), desc(5, "T", "2")}) {
        auto R = ring_of(D);
        auto f = QuadElem::gen(D);
        auto T = poly(D, "T");
        auto m = membership(T, R);
        if (D->d() > 1) {
            CHECK_FALSE(m.member);
            CHECK(m.failing_degree == 1);
        }
        auto z = f * (f * T);
        auto c = membership(z, R);
        CHECK(c.member);
        CHECK(R->combine(c.coords) == z);
    }
    auto D = desc(2, "T^2", "1");
    auto R = ring_of(D);
    auto f = QuadElem::gen(D);
    // f^2 T reduces to T + T^3 f
    auto z = f * f * poly(D, "T");
    CHECK(z == QuadElem::from_polys(D, Poly::parse(D->field(), "T"), Poly::parse(D->field(), "T^3")));
    auto m = membership(z, R);
    CHECK(m.member);
    CHECK(m.coords == Coords{0, 0, 0, 0, 0, 1});
    // T^2 f + T = f^2 + 1 + T is not in A_f
    CHECK_FALSE(membership(QuadElem::from_polys(D, Poly::parse(D->field(), "T"), Poly::parse(D->field(), "T^2")), R).member);
    CHECK_FALSE(membership(f.inverse(), R).member);
}

TEST_CASE("membership agrees with enumeration of A_f up to degree 8 (q=2, d=2)") {
    auto D = desc(2, "T^2", "1");
    auto R = ring_of(D);
    std::vector<QuadElem> basis;
    for (const auto& e : af_basis(*R->order(), 8)) basis.push_back(e.elem);
    const auto members = all_combinations(D, basis);
    REQUIRE(members.size() == 256);
    for (const auto& z : members) {
        auto m = membership(z, R);
        CHECK(m.member);
        CHECK(R->combine(m.coords) == z);
    }
    // every x + y f with deg x <= 4, deg y <= 2: exactly the enumerated ones are members
    int hits = 0;
    for (std::uint32_t xs = 0; xs < 32; ++xs)
        for (std::uint32_t ys = 0; ys < 8; ++ys) {
            std::vector<Elem> xc, yc;
            for (int i = 0; i < 5; ++i) xc.push_back((xs >> i) & 1);
            for (int i = 0; i < 3; ++i) yc.push_back((ys >> i) & 1);
            auto z = QuadElem::from_polys(D, Poly(D->field(), xc), Poly(D->field(), yc));
            const bool expect = contains_elem(members, z);
            hits += expect;
            CHECK(membership(z, R).member == expect);
        }
    CHECK(hits > 4);
}

TEST_CASE("ideal_filtered_basis examples") {
    auto D = desc(2, "T^2", "1");
    auto R = ring_of(D);
    auto unit = ideal_filtered_basis(unit_ideal(R), 7);
    CHECK(unit.degrees() == std::vector<int>{0, 2, 3, 4, 5, 6, 7});
    auto a1 = ideal_filtered_basis(ideal_a(R, 1), 5);
    CHECK(a1.degrees() == std::vector<int>{2, 3, 4, 5});
    for (std::size_t i = 0; i < a1.size(); ++i) {
        CHECK(membership(a1.element(i), R).member);
        CHECK(a1.element(i).iota1(1).sgn() == 1);
    }
    // oracle: all A_f-combinations beta_1 f + beta_2 fT with generous coefficient degrees
    auto f = QuadElem::gen(D), fT = f * poly(D, "T");
    std::vector<QuadElem> betas;
    for (const auto& e : af_basis(*R->order(), 7)) betas.push_back(e.elem);
    auto span_b = all_combinations(D, {betas[0], betas[1], betas[2], betas[3], betas[4]});
    std::set<std::string> low;
    for (const auto& b1 : span_b)
        for (const auto& b2 : span_b) {
            auto z = b1 * f + b2 * fT;
            if (!z.is_zero() && deg_at_inf1(z) <= 5) {
                low.insert(z.to_string());
                auto m = membership(z, R);
                REQUIRE(m.member);
                CHECK(a1.coordinates(m.coords).has_value());
            }
        }
    CHECK(low.size() + 1 == 16);  // 2^{#rows}
    CHECK_THROWS_AS(ideal_filtered_basis(ideal_a(R, 1), 1), DomainError);
}

TEST_CASE("filtered basis of a_i matches {fT^m : m <= i} + {f^l T^m : l >= 2}") {
    for (const auto& D : {desc(2, "T^2", "1"), desc(3, "T^2", "1"), desc(2, "T^3", "1"), desc(3, "2*T^3 + T", "2"), desc(4, "T^2 + g", "g")}) {
        auto R = ring_of(D);
        const int d = D->d();
        for (int i = 0; i < d; ++i) {
            const int bound = 4 * d + 1;
            auto B = ideal_filtered_basis(ideal_a(R, i), bound);
            Echelon E(D->field());
            for (const auto& e : af_basis(*R->order(), bound))
                if ((e.l == 1 && e.m <= i) || e.l >= 2) E.insert(membership(e.elem, R).coords);
            CHECK(B == filtered_from_echelon(R, E, bound));
        }
    }
}

TEST_CASE("filtered basis is monotone in bound and stable in slack") {
    auto D = desc(3, "T^2 + 2", "2");
    auto R = ring_of(D);
    auto f = QuadElem::gen(D);
    IdealGens I{R, {f * f + QuadElem::one(D), f * poly(D, "T") + f}};
    auto big = ideal_filtered_basis(I, 12);
    for (int b = 6; b < 12; ++b) CHECK(big.truncated(b) == ideal_filtered_basis(I, b));
    SlackPolicy more;
    more.initial = big.slack_used + 1;
    auto again = ideal_filtered_basis(I, 12, more);
    CHECK(again.rows == big.rows);
}

TEST_CASE("ideal_product, power law and containment") {
    auto D = desc(2, "T^2", "1");
    auto R = ring_of(D);
    auto a0 = ideal_a(R, 0), a1 = ideal_a(R, 1);
    CHECK(ideal_equal(ideal_product(unit_ideal(R), a1), a1).equal);
    CHECK(ideal_equal(ideal_product(a1, a1), a0).equal);
    CHECK(ideal_contains(a1, QuadElem::gen(D), 6).contained);
    auto bad = ideal_contains(a0, QuadElem::gen(D) * poly(D, "T"), 6);
    CHECK_FALSE(bad.contained);
    // oracle: fT in (f) iff T in A_f
    CHECK_FALSE(membership(poly(D, "T"), R).member);
    CHECK_FALSE(ideal_equal(a0, a1).equal);
    CHECK_THROWS_AS(ideal_contains(a1, QuadElem::gen(D).pow(4), 5), UndecidableError);

    auto D3 = desc(2, "T^3", "1");
    auto R3 = ring_of(D3);
    CHECK(ideal_equal(ideal_product(ideal_a(R3, 2), ideal_a(R3, 2)), ideal_a(R3, 1)).equal);
    CHECK(ideal_equal(ideal_power(ideal_a(R3, 2), 3), ideal_a(R3, 0)).equal);
}

TEST_CASE("principal containment agrees with the quotient oracle (sampled)") {
    std::mt19937_64 rng(7);
    auto D = desc(3, "T^2", "1");
    auto R = ring_of(D);
    auto basis = af_basis(*R->order(), 6);
    auto rand_elem = [&] {
        QuadElem z = QuadElem::zero(D);
        for (const auto& e : basis) z = z + e.elem.scaled(quantj::testing::random_elem(*D->field(), rng));
        return z.is_zero() ? QuadElem::one(D) : z;
    };
    for (int trial = 0; trial < 20; ++trial) {
        auto g = rand_elem();
        auto z = trial % 2 ? g * rand_elem() : rand_elem();
        const bool expect = membership(z / g, R).member;
        const int bound = deg_at_inf1(z) + 2;
        CHECK(ideal_contains(principal_ideal(R, g), z, bound).contained == expect);
    }
}

TEST_CASE("dual ideals and invertibility") {
    auto D = desc(2, "T^2", "1");
    auto R = ring_of(D);
    auto f = QuadElem::gen(D);
    auto dual_f = ideal_dual(ideal_a(R, 0), 6);
    CHECK(dual_f.denom == f);
    CHECK(dual_f.numer == ideal_filtered_basis(unit_ideal(R), 6));
    CHECK(dual_f.element(0) == (f - QuadElem::from_poly(D, D->a())).scaled(D->field()->inv(D->b())));
    auto dual_1 = ideal_dual(unit_ideal(R), 6);
    CHECK(dual_1.numer.degrees() == std::vector<int>{0, 2, 3, 4, 5, 6});

    for (const auto& Dx : {desc(2, "T^2", "1"), desc(3, "T^2", "1"), desc(2, "T^3", "1"), desc(3, "T^3 + T", "1")}) {
        auto Rx = ring_of(Dx);
        for (int i = 0; i < Dx->d(); ++i) {
            auto I = ideal_a(Rx, i);
            auto dual = ideal_dual(I, 4 * Dx->d());
            for (std::size_t r = 0; r < dual.numer.size(); ++r)
                for (const auto& h : I.gens) CHECK(membership(dual.element(r) * h, Rx).member);
            auto cert = invertibility_certificate(I, 4 * Dx->d());
            CHECK(cert.certified);
            QuadElem sum = QuadElem::zero(Dx);
            for (const auto& t : cert.terms) sum = sum + t;
            CHECK(sum == QuadElem::one(Dx));
        }
    }
}

TEST_CASE("two_generator") {
    auto D = desc(2, "T^2", "1");
    auto R = ring_of(D);
    auto f = QuadElem::gen(D);
    auto p = two_generator(ideal_a(R, 0), f, 8);
    REQUIRE(p);
    CHECK(p->h == f);
    auto t = two_generator(ideal_a(R, 1), f, 8);
    REQUIRE(t);
    CHECK(t->cert.equal);
    CHECK(t->h == f * poly(D, "T"));

    auto D3 = desc(2, "T^3", "1");
    auto R3 = ring_of(D3);
    auto a2 = ideal_a(R3, 2);
    auto t3 = two_generator(a2, QuadElem::gen(D3), 12);
    REQUIRE(t3);
    CHECK(ideal_equal(IdealGens{R3, {t3->g, t3->h}}, a2).equal);
}

TEST_CASE("conductor, expansion and contraction for f = f0^2 over F_2") {
    auto F = gf(2);
    auto D0 = QuadDesc::make(Poly::parse(F, "T"), 1);
    auto pair = make_order_pair(D0, 2);
    CHECK(pair.R->a() == Poly::parse(F, "T^2"));
    CHECK(pair.R->b() == 1);
    auto c = conductor(pair, 10);
    // oracle: x A subset R checked on the A-basis up to degree 12
    for (std::size_t i = 0; i < c.size(); ++i)
        for (int k = 0; k <= 12; ++k) CHECK(pair.R_amb->coordinates(c.element(i) * pair.A_amb->element(k)).member);
    CHECK(c.degrees().front() == 2);
    CHECK_FALSE(invertibility_certificate(IdealGens{pair.R_amb, {c.element(0), c.element(1)}}, 10).certified);

    auto one = QuadElem::one(D0);
    auto F0 = pair.R->gen();
    auto good = principal_ideal(pair.R_amb, F0 * QuadElem::from_poly(D0, Poly::parse(F, "T")) + one);
    CHECK(prime_to_conductor(pair, good, 10));
    CHECK(contraction(pair, expansion(pair, good, 12)) == ideal_filtered_basis(good, 12));
    auto bad = principal_ideal(pair.R_amb, F0 + one);
    CHECK_FALSE(prime_to_conductor(pair, bad, 10));
    CHECK_FALSE(contraction(pair, expansion(pair, bad, 12)) == ideal_filtered_basis(bad, 12));
}

TEST_CASE("epsilon lattice examples") {
    auto D = desc(2, "T^2", "1");
    auto L = epsilon_lattice(D, 1, 0, 4);
    REQUIRE(L.basis.size() == 3);
    auto F = D->field();
    CHECK(L.basis.element(0) == poly(D, "T^2"));
    CHECK(L.basis.element(1) == poly(D, "T^3"));
    CHECK(L.basis.element(2) == poly(D, "T^4 + 1"));
    CHECK(epsilon_lattice_bruteforce(D, 2, 4) == L.basis);
    for (auto* Dx : {&D}) {
        auto Q = qseq(**Dx, 4);
        for (int N = 1; N <= 4; ++N) {
            auto B = epsilon_lattice_bruteforce(*Dx, N * 2, 10, BruteMethod::Kernel);
            CHECK(B.coordinates(Q[N].coeffs()).has_value());
        }
    }
    auto B1 = epsilon_lattice_bruteforce(D, D->d(), 6);
    CHECK_FALSE(B1.coordinates(Coords{1}).has_value());
    CHECK_THROWS_AS(epsilon_lattice(D, 1, 2, 4), DomainError);
}

TEST_CASE("epsilon lattice closed form equals brute force (subset)") {
    for (const auto& D : {desc(2, "T", "1"), desc(2, "T^2", "1"), desc(3, "T^2", "1"), desc(2, "T^3 + T", "1"), desc(3, "2*T^3", "2")}) {
        const int d = D->d();
        for (int N = 0; N <= 3; ++N)
            for (int l = 0; l < d; ++l) {
                const int bound = N * d + l + 4;
                auto closed = epsilon_lattice(D, N, l, bound).basis;
                CAPTURE(D->describe());
                CAPTURE(N);
                CAPTURE(l);
                CHECK(closed == epsilon_lattice_bruteforce(D, N * d + l, bound, BruteMethod::Kernel));
                if (bound <= 9) CHECK(closed == epsilon_lattice_bruteforce(D, N * d + l, bound, BruteMethod::Enumerate));
            }
    }
}
