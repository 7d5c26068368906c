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

#include "quantj/ops.hpp"

#include "quantj/errors.hpp"

namespace quantj {

AmbientPtr standard_ring(const Instance& inst) { return Ambient::of_order(OrderDesc::standard(inst.desc)); }

namespace {

Json gens_json(const IdealGens& I) {
    Json g = Json::array();
    for (const auto& z : I.gens) g.push_back(z.to_string());
    return g;
}

void check_ideal_index(const Instance& inst, int i) {
    if (i < 0 || i >= inst.desc->d()) throw InputError("ideal index must lie in [0, " + std::to_string(inst.desc->d() - 1) + "]");
}

Json series_list(const std::vector<LaurentSeries>& v) {
    Json out = Json::array();
    for (const auto& s : v) out.push_back(series_to_json(s));
    return out;
}

}  // namespace

Json op_quantum_j(const Instance& inst, std::int64_t P, int N_max) {
    const auto qj = quantum_j(inst.desc, P, N_max);
    Json out;
    out["operation"] = "quantum-j";
    out["instance"] = inst.canonical();
    out["P"] = P;
    out["N_max"] = N_max;
    out["branches"] = Json::array();
    for (const auto& b : qj.branches) {
        Json br;
        br["l"] = b.l;
        br["converged"] = b.converged;
        br["confirmed"] = b.confirmed;
        br["N_stable"] = b.N_stable;
        br["limit"] = b.limit ? series_to_json(*b.limit) : Json(nullptr);
        br["sequence"] = Json::array();
        for (const auto& [N, j] : b.sequence) br["sequence"].push_back({{"N", N}, {"j", series_to_json(j)}});
        out["branches"].push_back(std::move(br));
    }
    out["limit_set"] = Json::array();
    for (const auto& [j, m] : qj.limit_set) out["limit_set"].push_back({{"j", series_to_json(j)}, {"multiplicity", m}});
    return out;
}

Json op_ideal_j(const Instance& inst, int i, std::int64_t P) {
    check_ideal_index(inst, i);
    const auto I = ideal_a(standard_ring(inst), i);
    const auto j = j_of_ideal(I, P);
    Json out;
    out["operation"] = "ideal-j";
    out["instance"] = inst.canonical();
    out["ideal"] = "a_" + std::to_string(i);
    out["generators"] = gens_json(I);
    out["P"] = P;
    out["j"] = series_to_json(j.value);
    out["zeta_prec"] = j.zeta_prec;
    out["provenance"] = j.provenance;
    return out;
}

Json op_zeta(const Instance& inst, int weight, const std::string& lattice, std::int64_t P, ZetaKernel kernel) {
    LatticeProvider prov;
    int b0 = 0;
    const int d = inst.desc->d();
    if (lattice == "unit") {
        auto I = unit_ideal(standard_ring(inst));
        prov = [I](int b) { return ideal_filtered_basis(I, b); };
        b0 = 2 * d + 2;
    } else if (lattice.rfind("ideal:", 0) == 0) {
        const int i = std::stoi(lattice.substr(6));
        check_ideal_index(inst, i);
        auto I = ideal_a(standard_ring(inst), i);
        prov = [I](int b) { return ideal_filtered_basis(I, b); };
        b0 = 3 * d + 2;
    } else if (lattice.rfind("eps:", 0) == 0) {
        const auto colon = lattice.find(':', 4);
        if (colon == std::string::npos) throw InputError("lattice eps:N:l expected");
        const int N = std::stoi(lattice.substr(4, colon - 4)), l = std::stoi(lattice.substr(colon + 1));
        if (N < 0 || l < 0 || l >= d) throw InputError("eps lattice needs N >= 0 and 0 <= l < d");
        auto desc = inst.desc;
        prov = [desc, N, l](int b) { return epsilon_lattice(desc, N, l, b).basis; };
        b0 = N * d + d + 2;
    } else {
        throw InputError("unknown lattice '" + lattice + "' (unit, ideal:i, eps:N:l)");
    }
    const auto z = zeta_adaptive(prov, b0, weight, P, kernel);
    Json out;
    out["operation"] = "zeta";
    out["instance"] = inst.canonical();
    out["weight"] = weight;
    out["lattice"] = lattice;
    out["lattice_id"] = z.lattice_id;
    out["P"] = P;
    out["value"] = series_to_json(z.value);
    out["degree_cutoff"] = z.degree_cutoff;
    return out;
}

Json op_lattice_eps(const Instance& inst, int N, int l, int bound) {
    const int d = inst.desc->d();
    if (N < 0 || l < 0 || l >= d) throw InputError("eps lattice needs N >= 0 and 0 <= l < d");
    if (bound <= 0) bound = N * d + l + 6;
    const auto L = epsilon_lattice(inst.desc, N, l, bound);
    const auto brute = epsilon_lattice_bruteforce(inst.desc, N * d + l, bound);
    Json out;
    out["operation"] = "lattice";
    out["instance"] = inst.canonical();
    out["N"] = N;
    out["l"] = l;
    out["bound"] = bound;
    out["degrees"] = L.basis.degrees();
    out["basis"] = Json::array();
    for (std::size_t r = 0; r < L.basis.size(); ++r) out["basis"].push_back(L.basis.element(r).x().num().to_string());
    out["bruteforce_equal"] = L.basis == brute;
    return out;
}

Json op_drinfeld(const Instance& inst, int i, const std::string& gen, std::int64_t P, int z_bound) {
    check_ideal_index(inst, i);
    const auto R = standard_ring(inst);
    const QuadElem g = parse_quad(inst.desc, gen);
    if (!membership(g, R).member) throw InputError("'" + gen + "' is not in the order A_f");
    const int D = deg_at_inf1(g);
    if (D <= 0) throw InputError("the generator must be nonconstant");
    const std::int64_t q = inst.field->q();
    if (z_bound <= 0) {
        std::int64_t z = q;
        for (int k = 0; k < D; ++k) z *= q;
        z_bound = static_cast<int>(z + 1);
    }
    auto I = ideal_a(R, i);
    LatticeProvider prov = [I](int b) { return ideal_filtered_basis(I, b); };
    const auto e = exp_adaptive(prov, 3 * inst.desc->d() + 2, P, z_bound);
    const auto img = drinfeld_from_exp(e, g);
    Json out;
    out["operation"] = "drinfeld";
    out["instance"] = inst.canonical();
    out["ideal"] = "a_" + std::to_string(i);
    out["gen"] = g.to_string();
    out["P"] = P;
    out["z_bound"] = z_bound;
    out["exp"] = {{"c", series_list(e.c)}, {"prec", e.prec}, {"lattice_id", e.lattice_id}};
    out["rho"] = series_list(img.rho.coeffs());
    out["degree"] = img.rho.degree();
    out["residual_exponent"] = img.residual->exponent;
    out["threshold_exponent"] = P - 4;
    out["pass"] = img.residual->below(P) && img.rho.degree() == D;
    return out;
}

Json op_product(const Instance& inst, std::int64_t P, int N_max) {
    const auto qj = quantum_j(inst.desc, P, N_max);
    const auto R = standard_ring(inst);
    std::vector<LaurentSeries> ideal_js, limits;
    for (int i = 0; i < inst.desc->d(); ++i) ideal_js.push_back(j_of_ideal(ideal_a(R, i), P).value);
    for (const auto& b : qj.branches)
        if (b.limit) limits.push_back(*b.limit);
    const auto pr = quantum_product(qj, ideal_js, P);
    Json out;
    out["operation"] = "product";
    out["instance"] = inst.canonical();
    out["P"] = P;
    out["branch_limits"] = series_list(limits);
    out["ideal_js"] = series_list(ideal_js);
    out["from_branches"] = series_to_json(pr.from_branches);
    out["from_ideals"] = series_to_json(pr.from_ideals);
    out["multiset_equal"] = pr.multiset_equal;
    out["product_equal"] = pr.product_equal;
    return out;
}

Json op_recognize(const Instance& inst, const LaurentSeries& s, int height) {
    const auto r = recognize_algebraic(s, inst.desc, height);
    Json out;
    out["operation"] = "recognize";
    out["instance"] = inst.canonical();
    out["height"] = height;
    out["series"] = series_to_json(s);
    if (r)
        out["result"] = {{"x", r->x.to_string()}, {"y", r->y.to_string()}, {"checked_to", r->checked_to}};
    else
        out["result"] = nullptr;
    return out;
}

}  // namespace quantj
