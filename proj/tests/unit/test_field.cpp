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
#include "quantj/field.hpp"
#include "test_util.hpp"

using namespace quantj;
using quantj::testing::gf;

TEST_CASE("field axioms hold on all of F_q for q <= 9") {
    for (auto q : quantj::testing::small_orders()) {
        CAPTURE(q);
        auto F = gf(q);
        REQUIRE(F->q() == q);
        for (Elem a = 0; a < q; ++a) {
            CHECK(F->add(a, F->neg(a)) == 0);
            if (a) CHECK(F->mul(a, F->inv(a)) == 1);
            for (Elem b = 0; b < q; ++b) {
                CHECK(F->add(a, b) == F->add(b, a));
                CHECK(F->mul(a, b) == F->mul(b, a));
                for (Elem c = 0; c < q; ++c) {
                    CHECK(F->add(F->add(a, b), c) == F->add(a, F->add(b, c)));
                    CHECK(F->mul(F->mul(a, b), c) == F->mul(a, F->mul(b, c)));
                    CHECK(F->mul(a, F->add(b, c)) == F->add(F->mul(a, b), F->mul(a, c)));
                }
            }
        }
    }
}

TEST_CASE("Frobenius fixes F_q and the generator has order q-1") {
    for (auto q : quantj::testing::small_orders()) {
        auto F = gf(q);
        for (Elem a = 0; a < q; ++a) CHECK(F->pow(a, q) == a);
        Elem g = F->generator();
        for (std::uint32_t k = 1; k + 1 < q; ++k) CHECK(F->pow(g, k) != 1);
    }
}

TEST_CASE("literal formatting round-trips") {
    auto F4 = gf(4);
    for (Elem a = 0; a < 4; ++a) CHECK(F4->parse(F4->format(a)) == a);
    CHECK(F4->parse("g") == F4->generator());
    CHECK(F4->format(1) == "g^0");
    auto F5 = gf(5);
    CHECK(F5->parse("4") == 4);
    CHECK_THROWS_AS(F5->parse("5"), InputError);
    CHECK_THROWS_AS(F5->parse("g^2"), InputError);
    CHECK_THROWS_AS(F5->parse("x"), InputError);
}

TEST_CASE("non-primitive or bad moduli are rejected") {
    CHECK_THROWS_AS(Field::prime(4), InputError);
    CHECK_THROWS_AS(Field::extension(2, {1, 0, 1}), InputError);     // X^2+1 = (X+1)^2
    CHECK_THROWS_AS(Field::extension(3, {1, 0, 1}), InputError);     // X^2+1 irreducible, X of order 4 < 8
    CHECK_THROWS_AS(Field::extension(2, {1, 1, 0}), InputError);     // not monic
    CHECK_NOTHROW(Field::extension(3, {2, 1, 1}));
    CHECK_THROWS_AS(gf(3)->inv(0), DomainError);
}
