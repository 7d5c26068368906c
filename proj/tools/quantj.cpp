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

#include <omp.h>

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "quantj/errors.hpp"
#include "quantj/ops.hpp"
#include "quantj/verify.hpp"

using namespace quantj;

namespace {

enum Exit { kOk = 0, kVerification = 1, kUndecided = 2, kInput = 3 };

void report_error(const char* kind, const std::string& message) {
    std::cerr << Json{{"error", {{"kind", kind}, {"message", message}}}}.dump() << '\n';
}

ZetaKernel parse_kernel(const std::string& s) {
    if (s == "goss") return ZetaKernel::Goss;
    if (s == "serial") return ZetaKernel::EnumerateSerial;
    if (s == "parallel") return ZetaKernel::EnumerateParallel;
    throw InputError("unknown kernel '" + s + "'");
}

Json read_series_arg(const std::string& arg) {
    if (!arg.empty() && arg.front() == '{') return Json::parse(arg);
    std::ifstream in(arg);
    if (!in) throw InputError("cannot read series file '" + arg + "'");
    return Json::parse(in);
}

bool payload_pass(const Json& j) {
    for (const char* key : {"pass", "bruteforce_equal", "product_equal"})
        if (j.contains(key) && j[key].is_boolean() && !j[key].get<bool>()) return false;
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quantj: modular invariants of quadratic function-field orders"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    std::vector<std::string> instance_paths;
    std::int64_t precision = 0;
    int N_max = 0;
    int threads = 0;
    std::string cache_dir = ".quantj-cache";
    bool no_cache = false;

    auto common = [&](CLI::App* sub, bool many_instances = false) {
        auto* opt = sub->add_option("--instance", instance_paths, "instance JSON file")->required()->check(CLI::ExistingFile);
        if (!many_instances) opt->expected(1);
        sub->add_option("--precision", precision, "coefficients of j below the leading term (default from the instance)")->check(CLI::Range(1, 4096));
        sub->add_option("--N-max", N_max, "largest N for the quantum sequences")->check(CLI::Range(2, 64));
        sub->add_option("--threads", threads, "OpenMP threads")->check(CLI::Range(1, 1024));
        sub->add_option("--cache-dir", cache_dir, "result cache directory");
        sub->add_flag("--no-cache", no_cache, "disable the result cache");
    };

    auto* quantum = app.add_subcommand("quantum-j", "branch limits of j along the quantum sequence");
    common(quantum);

    int ideal = 0;
    auto* ideal_j = app.add_subcommand("ideal-j", "j of the ideal a_i");
    common(ideal_j);
    ideal_j->add_option("--ideal", ideal, "index i of a_i")->required();

    int weight = 0;
    std::string lattice = "unit", kernel = "goss";
    auto* zeta = app.add_subcommand("zeta", "sign-normalised zeta value of a lattice");
    common(zeta);
    zeta->add_option("--weight", weight, "weight n")->required();
    zeta->add_option("--lattice", lattice, "unit | ideal:i | eps:N:l");
    zeta->add_option("--kernel", kernel, "goss | serial | parallel");

    std::vector<int> eps;
    int bound = 0;
    auto* lat = app.add_subcommand("lattice", "closed-form epsilon lattice, checked against enumeration");
    common(lat);
    lat->add_option("--epsilon", eps, "N l")->required()->expected(2);
    lat->add_option("--bound", bound, "degree bound (default N d + l + 6)");

    std::string gen = "f";
    int z_bound = 0;
    auto* drin = app.add_subcommand("drinfeld", "Drinfeld module attached to a_i");
    common(drin);
    drin->add_option("--ideal", ideal, "index i of a_i")->required();
    drin->add_option("--gen", gen, "ring element g, an expression in T and f");
    drin->add_option("--z-bound", z_bound, "degree cutoff for the functional-equation residual");

    auto* product = app.add_subcommand("product", "product of branch limits against product of ideal j's");
    common(product);

    std::string series_arg;
    int height = 2;
    auto* recog = app.add_subcommand("recognize", "search for a low-height algebraic relation");
    common(recog);
    recog->add_option("--series", series_arg, "series JSON or a file holding it")->required();
    recog->add_option("--height", height, "height bound")->check(CLI::Range(0, 16));

    std::string suite;
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    common(verify, true);
    verify->add_option("--suite", suite, "suite name")->required()->check(CLI::IsMember(suite_names()));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        report_error("usage", e.what());
        return kInput;
    }

    try {
        if (threads > 0) omp_set_num_threads(threads);
        std::vector<Instance> insts;
        for (const auto& p : instance_paths) {
            insts.push_back(load_instance(p));
            if (N_max > 0) insts.back().N_max = N_max;
            if (precision > 0) insts.back().precision = precision;
        }
        const Instance& inst = insts.front();
        const std::int64_t P = inst.P();

        if (verify->parsed()) {
            Json out = Json::array();
            bool ok = true;
            for (const auto& in : insts) {
                const auto r = run_suite(suite, in);
                ok = ok && r.pass();
                out.push_back(r.to_json());
            }
            std::cout << (out.size() == 1 ? out[0] : out).dump(2) << '\n';
            return ok ? kOk : kVerification;
        }

        std::string op;
        Json inputs{{"instance", inst.canonical()}, {"P", P}};
        std::function<Json()> compute;
        if (quantum->parsed()) {
            op = "quantum-j";
            inputs["N_max"] = inst.N_max;
            compute = [&] { return op_quantum_j(inst, P, inst.N_max); };
        } else if (ideal_j->parsed()) {
            op = "ideal-j";
            inputs["ideal"] = ideal;
            compute = [&] { return op_ideal_j(inst, ideal, P); };
        } else if (zeta->parsed()) {
            op = "zeta";
            const auto k = parse_kernel(kernel);
            inputs["weight"] = weight;
            inputs["lattice"] = lattice;
            // every kernel returns the same value; the kernel is not part of the key
            compute = [&, k] { return op_zeta(inst, weight, lattice, P, k); };
        } else if (lat->parsed()) {
            op = "lattice";
            const int b = bound > 0 ? bound : eps[0] * inst.desc->d() + eps[1] + 6;
            inputs.erase("P");
            inputs["N"] = eps[0];
            inputs["l"] = eps[1];
            inputs["bound"] = b;
            compute = [&, b] { return op_lattice_eps(inst, eps[0], eps[1], b); };
        } else if (drin->parsed()) {
            op = "drinfeld";
            inputs["ideal"] = ideal;
            inputs["gen"] = parse_quad(inst.desc, gen).to_string();
            inputs["z_bound"] = z_bound;
            compute = [&] { return op_drinfeld(inst, ideal, gen, P, z_bound); };
        } else if (product->parsed()) {
            op = "product";
            inputs["N_max"] = inst.N_max;
            compute = [&] { return op_product(inst, P, inst.N_max); };
        } else {
            op = "recognize";
            const auto s = series_from_json(inst.field, read_series_arg(series_arg));
            inputs.erase("P");
            inputs["series"] = series_to_json(s);
            inputs["height"] = height;
            compute = [&, s] { return op_recognize(inst, s, height); };
        }

        Cache cache(no_cache ? std::nullopt : std::optional<std::filesystem::path>(cache_dir));
        CacheStatus status = CacheStatus::Disabled;
        const Json out = cache.get_or_compute(op, inputs, compute, &status);
        std::cerr << Json{{"cache", to_string(status)}, {"key", Cache::key(op, inputs)}}.dump() << '\n';
        std::cout << out.dump(2) << '\n';
        return payload_pass(out) ? kOk : kVerification;
    } catch (const VerificationError& e) {
        report_error("verification", e.what());
        return kVerification;
    } catch (const PrecisionError& e) {
        report_error("precision", e.what());
        return kUndecided;
    } catch (const UndecidableError& e) {
        report_error("undecidable", e.what());
        return kUndecided;
    } catch (const InputError& e) {
        report_error("input", e.what());
        return kInput;
    } catch (const DomainError& e) {
        report_error("domain", e.what());
        return kInput;
    } catch (const Json::exception& e) {
        report_error("input", e.what());
        return kInput;
    } catch (const std::filesystem::filesystem_error& e) {
        report_error("io", e.what());
        return kInput;
    } catch (const Error& e) {
        report_error("io", e.what());
        return kInput;
    }
}
