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

#include <cctype>
#include <chrono>
#include <fstream>
#include <random>
#include <sstream>

#include "quantj/errors.hpp"
#include "quantj/io.hpp"
#include "quantj/zeta.hpp"

namespace quantj {

Json series_to_json(const LaurentSeries& s) {
    const FieldPtr& F = s.field();
    Json coeffs = Json::array();
    if (!s.is_zero())
        for (std::int64_t e = s.val(); e < s.prec(); ++e) {
            const Elem c = s.coeff(e);
            if (F->is_prime())
                coeffs.push_back(c);
            else
                coeffs.push_back(F->format(c));
        }
    Json out;
    out["val"] = s.is_zero() ? s.prec() : s.val();
    out["prec"] = s.prec();
    out["coeffs"] = std::move(coeffs);
    return out;
}

LaurentSeries series_from_json(const FieldPtr& F, const Json& j) {
    try {
        const std::int64_t val = j.at("val").get<std::int64_t>(), prec = j.at("prec").get<std::int64_t>();
        std::vector<Elem> c;
        for (const auto& x : j.at("coeffs")) {
            if (x.is_number_integer()) {
                const auto v = x.get<std::int64_t>();
                if (v < 0 || v >= static_cast<std::int64_t>(F->q())) throw InputError("coefficient out of range");
                c.push_back(static_cast<Elem>(v));
            } else {
                c.push_back(F->parse(x.get<std::string>()));
            }
        }
        if (static_cast<std::int64_t>(c.size()) != prec - val) throw InputError("coeffs length must equal prec - val");
        if (c.empty()) return LaurentSeries::zero(F, prec);
        return LaurentSeries::from_coeffs(F, val, std::move(c), prec);
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("series JSON: ") + e.what());
    }
}

namespace {

class QuadParser {
   public:
    QuadParser(const QuadDescPtr& D, std::string_view s) : D_(D), s_(s) {}

    QuadElem run() {
        QuadElem v = expr();
        skip();
        if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
        return v;
    }

   private:
    [[noreturn]] void fail(const std::string& what) const {
        throw InputError("ring element literal '" + std::string(s_) + "': " + what + " at offset " + std::to_string(i_));
    }
    void skip() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    bool eat(char c) {
        skip();
        if (i_ < s_.size() && s_[i_] == c) {
            ++i_;
            return true;
        }
        return false;
    }
    std::uint64_t integer() {
        skip();
        if (i_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[i_]))) fail("expected an integer");
        std::uint64_t v = 0;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
            v = v * 10 + static_cast<std::uint64_t>(s_[i_++] - '0');
            if (v > (1u << 30)) fail("integer too large");
        }
        return v;
    }
    QuadElem constant(Elem c) const { return QuadElem::from_poly(D_, Poly::constant(D_->field(), c)); }
    QuadElem expr() {
        QuadElem v = term();
        for (;;) {
            if (eat('+'))
                v = v + term();
            else if (eat('-'))
                v = v - term();
            else
                return v;
        }
    }
    QuadElem term() {
        QuadElem v = power();
        while (eat('*')) v = v * power();
        return v;
    }
    QuadElem power() {
        QuadElem v = unary();
        if (eat('^')) v = v.pow(static_cast<unsigned>(integer()));
        return v;
    }
    QuadElem unary() {
        if (eat('-')) return -unary();
        return atom();
    }
    QuadElem atom() {
        skip();
        if (i_ >= s_.size()) fail("unexpected end");
        const char c = s_[i_];
        if (c == '(') {
            ++i_;
            QuadElem v = expr();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return constant(D_->field()->from_int(static_cast<std::int64_t>(integer())));
        ++i_;
        if (c == 'T') return QuadElem::from_poly(D_, Poly::T(D_->field()));
        if (c == 'f') return QuadElem::gen(D_);
        if (c == 'g' && !D_->field()->is_prime()) return constant(D_->field()->generator());
        --i_;
        fail("unexpected '" + std::string(1, c) + "'");
    }

    QuadDescPtr D_;
    std::string_view s_;
    std::size_t i_ = 0;
};

}  // namespace

QuadElem parse_quad(const QuadDescPtr& desc, std::string_view text) { return QuadParser(desc, text).run(); }

Json Instance::canonical() const {
    Json j;
    j["q"] = q;
    if (!modulus.empty()) {
        j["p"] = p;
        j["modulus"] = modulus;
    }
    j["a"] = desc->a().to_string();
    j["b"] = field->format(desc->b());
    if (desc0) {
        j["f0"] = {{"a", desc0->a().to_string()}, {"b", field->format(desc0->b())}};
        j["k"] = k;
    }
    return j;
}

Instance parse_instance(const Json& j) {
    Instance in;
    try {
        if (!j.is_object()) throw InputError("instance must be a JSON object");
        in.name = j.value("name", std::string("unnamed"));
        in.q = j.at("q").get<std::uint32_t>();
        if (j.contains("modulus")) {
            in.p = j.at("p").get<std::uint32_t>();
            in.modulus = j.at("modulus").get<std::vector<std::uint32_t>>();
            in.field = Field::extension(in.p, in.modulus);
            if (in.field->q() != in.q) throw InputError("q does not match p^deg(modulus)");
        } else {
            in.field = Field::prime(in.q);
            in.p = in.q;
        }
        in.a = j.at("a").get<std::string>();
        in.b = j.at("b").get<std::string>();
        in.desc = QuadDesc::make(Poly::parse(in.field, in.a), in.field->parse(in.b));
        if (j.contains("f0")) {
            const auto& f0 = j.at("f0");
            in.f0 = std::pair{f0.at("a").get<std::string>(), f0.at("b").get<std::string>()};
            in.k = j.at("k").get<int>();
            if (in.k < 1) throw InputError("k must be >= 1");
            in.desc0 = QuadDesc::make(Poly::parse(in.field, in.f0->first), in.field->parse(in.f0->second));
            const auto pw = OrderDesc::power_of(in.desc0, in.k);
            if (!(pw->a() == in.desc->a()) || pw->b() != in.desc->b())
                throw InputError("a, b do not describe f0^" + std::to_string(in.k) + " (expected " + pw->describe() + ")");
        }
        in.precision = j.value("precision", std::int64_t{0});
        if (in.precision < 0 || in.precision > 4096) throw InputError("precision out of range [1, 4096]");
        in.N_max = j.value("N_max", 12);
        if (in.N_max < 2 || in.N_max > 64) throw InputError("N_max out of range [2, 64]");
        if (j.contains("bound")) in.bound = j.at("bound").get<int>();
        in.seed = j.value("seed", std::uint64_t{1});
        in.inject = j.value("inject", std::string());
        if (!in.inject.empty() && in.inject != "qseq") throw InputError("unknown fault injection '" + in.inject + "'");
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("instance: ") + e.what());
    } catch (const DomainError& e) {
        throw InputError(std::string("instance: ") + e.what());
    }
    return in;
}

Instance load_instance(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read instance file " + path.string());
    Json j;
    try {
        j = Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw InputError(path.string() + ": " + e.what());
    }
    Instance inst = parse_instance(j);
    if (inst.name == "unnamed") inst.name = path.stem().string();
    return inst;
}

std::string to_string(CacheStatus s) {
    switch (s) {
        case CacheStatus::Disabled: return "disabled";
        case CacheStatus::Hit: return "hit";
        case CacheStatus::Miss: return "miss";
        case CacheStatus::Evicted: return "evicted";
    }
    return "?";
}

Cache::Cache(std::optional<std::filesystem::path> dir) : dir_(std::move(dir)) {
    if (!dir_) return;
    std::error_code ec;
    std::filesystem::create_directories(*dir_, ec);
    if (ec || !std::filesystem::is_directory(*dir_)) throw Error("cache directory " + dir_->string() + ": " + (ec ? ec.message() : "not a directory"));
}

std::string Cache::key(const std::string& operation, const Json& inputs) {
    const Json k = {{"operation", operation}, {"inputs", inputs}, {"version", kVersion}};
    return content_hash(k.dump());
}

Json Cache::get_or_compute(const std::string& operation, const Json& inputs, const std::function<Json()>& compute, CacheStatus* status) {
    auto set = [&](CacheStatus s) {
        if (status) *status = s;
    };
    if (!dir_) {
        set(CacheStatus::Disabled);
        return compute();
    }
    const std::string k = key(operation, inputs);
    const auto file = *dir_ / (k + ".json");
    bool evicted = false;
    if (std::filesystem::exists(file)) {
        std::ifstream in(file);
        try {
            const Json rec = Json::parse(in);
            if (rec.at("key").get<std::string>() == k && rec.at("operation") == operation && rec.at("inputs") == inputs) {
                set(CacheStatus::Hit);
                return rec.at("payload");
            }
        } catch (const nlohmann::json::exception&) {
        }
        std::error_code ec;
        std::filesystem::remove(file, ec);
        if (ec) throw Error("cannot evict corrupt cache entry " + file.string() + ": " + ec.message());
        evicted = true;
    }
    const auto t0 = std::chrono::steady_clock::now();
    Json payload = compute();
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    Json rec;
    rec["key"] = k;
    rec["operation"] = operation;
    rec["inputs"] = inputs;
    rec["version"] = kVersion;
    rec["seconds"] = seconds;
    rec["payload"] = payload;
    std::random_device rd;
    const auto tmp = *dir_ / (k + ".tmp." + std::to_string(rd()));
    {
        std::ofstream out(tmp);
        out << rec.dump(1) << '\n';
        if (!out) throw Error("cannot write cache entry " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, file, ec);
    if (ec) throw Error("cannot publish cache entry " + file.string() + ": " + ec.message());
    set(evicted ? CacheStatus::Evicted : CacheStatus::Miss);
    return payload;
}

}  // namespace quantj
