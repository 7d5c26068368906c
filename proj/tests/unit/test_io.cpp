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

#include <filesystem>
#include <fstream>
#include <random>

#include "quantj/errors.hpp"
#include "quantj/ops.hpp"
#include "quantj/verify.hpp"
#include "test_util.hpp"

using namespace quantj;
using quantj::testing::gf;

namespace {

Instance inst(const Json& j) { return parse_instance(j); }

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        std::random_device rd;
        path = std::filesystem::temp_directory_path() / ("quantj-test-" + std::to_string(rd()));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
};

std::size_t entries(const std::filesystem::path& dir) {
    return static_cast<std::size_t>(std::distance(std::filesystem::directory_iterator(dir), std::filesystem::directory_iterator()));
}

}  // namespace

TEST_CASE("series json round trip") {
    std::mt19937_64 rng(11);
    for (std::uint32_t q : {2u, 3u, 4u, 9u}) {
        const auto F = gf(q);
        for (int t = 0; t < 50; ++t) {
            const std::int64_t val = static_cast<std::int64_t>(rng() % 41) - 20;
            const auto s = testing::random_series(F, val, 1 + static_cast<std::int64_t>(rng() % 12), rng);
            const Json j = series_to_json(s);
            CHECK(j["val"] == s.val());
            CHECK(j["prec"] == s.prec());
            CHECK(identical(series_from_json(F, j), s));
            CHECK(series_to_json(series_from_json(F, Json::parse(j.dump()))).dump() == j.dump());
        }
        const auto z = LaurentSeries::zero(F, 7);
        CHECK(identical(series_from_json(F, series_to_json(z)), z));
    }
    const auto F4 = gf(4);
    CHECK(series_to_json(LaurentSeries::monomial(F4, 2, -3, 0))["coeffs"][0].is_string());
    CHECK_THROWS_AS(series_from_json(gf(3), Json{{"val", 0}, {"prec", 2}, {"coeffs", {1, 5}}}), InputError);
    CHECK_THROWS_AS(series_from_json(gf(3), Json{{"val", 0}, {"prec", 1}, {"coeffs", {1, 1}}}), InputError);
    CHECK_THROWS_AS(series_from_json(gf(3), Json{{"val", 0}}), InputError);
}

TEST_CASE("parse_quad") {
    const auto F = gf(3);
    const auto D = QuadDesc::make(Poly::parse(F, "T^2"), F->parse("1"));
    const auto f = QuadElem::gen(D);
    const auto T = QuadElem::from_poly(D, Poly::T(F));
    CHECK(parse_quad(D, "f") == f);
    CHECK(parse_quad(D, "f^2") == parse_quad(D, "T^2*f + 1"));
    CHECK(parse_quad(D, "(f + T)*(f - T)") == f * f - T * T);
    CHECK(parse_quad(D, "-f + 4") == parse_quad(D, "2*f + 1"));
    for (const char* bad : {"", "f +", "(f", "f^", "x", "T**2", "g"}) CHECK_THROWS_AS(parse_quad(D, bad), InputError);

    const auto F4 = gf(4);
    const auto D4 = QuadDesc::make(Poly::parse(F4, "T"), F4->parse("1"));
    CHECK(parse_quad(D4, "g^3") == QuadElem::one(D4));
}

TEST_CASE("instance parsing") {
    const auto ok = inst({{"q", 2}, {"a", "T^2"}, {"b", "1"}, {"f0", {{"a", "T"}, {"b", "1"}}}, {"k", 2}});
    CHECK(ok.desc->d() == 2);
    CHECK(ok.desc0);
    CHECK(ok.P() == 16);
    CHECK(ok.canonical()["k"] == 2);
    CHECK(inst({{"q", 4}, {"p", 2}, {"modulus", {1, 1, 1}}, {"a", "T"}, {"b", "g"}}).field->q() == 4);

    const std::vector<Json> bad{
        Json::array(),
        {{"a", "T"}, {"b", "1"}},
        {{"q", 2}, {"a", "T^2 +"}, {"b", "1"}},
        {{"q", 2}, {"a", "T^2"}, {"b", "0"}},
        {{"q", 6}, {"a", "T"}, {"b", "1"}},
        {{"q", 4}, {"p", 2}, {"modulus", {1, 0, 1}}, {"a", "T"}, {"b", "1"}},
        {{"q", 2}, {"a", "T^2"}, {"b", "1"}, {"N_max", 1}},
        {{"q", 2}, {"a", "T^2"}, {"b", "1"}, {"precision", -2}},
        {{"q", 2}, {"a", "T^2"}, {"b", "1"}, {"inject", "everything"}},
        {{"q", 2}, {"a", "T^3"}, {"b", "1"}, {"f0", {{"a", "T"}, {"b", "1"}}}, {"k", 2}},
    };
    for (const auto& j : bad) CHECK_THROWS_AS(parse_instance(j), InputError);
}

TEST_CASE("cache: miss, hit, eviction, transparency") {
    TempDir tmp;
    const auto in = inst({{"q", 2}, {"a", "T^2"}, {"b", "1"}});
    const Json inputs{{"instance", in.canonical()}, {"ideal", 1}, {"P", 12}};
    int calls = 0;
    auto compute = [&] {
        ++calls;
        return op_ideal_j(in, 1, 12);
    };

    Cache cache(tmp.path);
    CacheStatus st{};
    const std::string first = cache.get_or_compute("ideal-j", inputs, compute, &st).dump(2);
    CHECK(st == CacheStatus::Miss);
    CHECK(entries(tmp.path) == 1);
    const std::string second = cache.get_or_compute("ideal-j", inputs, compute, &st).dump(2);
    CHECK(st == CacheStatus::Hit);
    CHECK(calls == 1);
    CHECK(first == second);

    Cache off(std::nullopt);
    CHECK(off.get_or_compute("ideal-j", inputs, compute, &st).dump(2) == first);
    CHECK(st == CacheStatus::Disabled);

    // higher precision is a different record
    Json higher = inputs;
    higher["P"] = 16;
    CHECK(Cache::key("ideal-j", higher) != Cache::key("ideal-j", inputs));
    CHECK(Cache::key("ideal-j", inputs) == Cache::key("ideal-j", Json::parse(inputs.dump())));

    const auto file = tmp.path / (Cache::key("ideal-j", inputs) + ".json");
    {
        std::ofstream out(file, std::ios::trunc);
        out << "{\"key\": \"trunc";
    }
    CHECK(cache.get_or_compute("ideal-j", inputs, compute, &st).dump(2) == first);
    CHECK(st == CacheStatus::Evicted);
    CHECK(calls == 3);
    cache.get_or_compute("ideal-j", inputs, compute, &st);
    CHECK(st == CacheStatus::Hit);

    // a regular file where the directory should be
    CHECK_THROWS_AS(Cache(file).get_or_compute("x", inputs, compute), Error);
}

TEST_CASE("suites: reports, seeds and fault injection") {
    const auto good = inst({{"name", "good"}, {"q", 2}, {"a", "T^2"}, {"b", "1"}});
    const auto r = run_suite("quadfield", good);
    CHECK(r.pass());
    CHECK(r.checks.size() == 2);
    CHECK(r.to_json()["suite"] == "quadfield");

    const auto bad = inst({{"name", "bad"}, {"q", 2}, {"a", "T^2"}, {"b", "1"}, {"inject", "qseq"}});
    const auto rb = run_suite("quadfield", bad);
    CHECK_FALSE(rb.pass());
    for (const auto& c : rb.checks) {
        CHECK_FALSE(c.pass);
        CHECK(c.detail["n"] == 3);
    }

    const auto s3 = inst({{"q", 3}, {"a", "T^2"}, {"b", "2"}, {"seed", 7}});
    CHECK(run_suite("skew", s3).to_json().dump() == run_suite("skew", s3).to_json().dump());
    CHECK(run_suite("epsilon-lattice", good).pass());
    CHECK_THROWS_AS(run_suite("nonsense", good), InputError);
}

TEST_CASE("ops payloads") {
    const auto in = inst({{"q", 2}, {"a", "T^2"}, {"b", "1"}});
    const Json qj = op_quantum_j(in, 12, 12);
    CHECK(qj["branches"].size() == 2);
    CHECK(qj["limit_set"].size() == 2);
    const Json pr = op_product(in, 12, 12);
    CHECK(pr["product_equal"] == true);
    CHECK(op_lattice_eps(in, 2, 1, 11)["bruteforce_equal"] == true);
    const Json dr = op_drinfeld(in, 1, "f", 12, 0);
    CHECK(dr["pass"] == true);
    CHECK(dr["degree"] == 2);
    CHECK_THROWS_AS(op_drinfeld(in, 1, "T", 12, 0), InputError);
    CHECK_THROWS_AS(op_ideal_j(in, 2, 12), InputError);
    CHECK_THROWS_AS(op_zeta(inst({{"q", 3}, {"a", "T^2"}, {"b", "1"}}), 1, "unit", 12, ZetaKernel::Goss), DomainError);
    CHECK_THROWS_AS(op_zeta(in, 1, "eps:x", 12, ZetaKernel::Goss), InputError);

    const auto d1 = inst({{"q", 2}, {"a", "T"}, {"b", "1"}});
    const Json one = op_quantum_j(d1, 12, 12);
    REQUIRE(one["branches"].size() == 1);
    CHECK(one["branches"][0]["limit"] == op_ideal_j(d1, 0, 12)["j"]);
}
