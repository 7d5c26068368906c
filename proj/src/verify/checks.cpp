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

#include "quantj/verify.hpp"

#include <omp.h>

#include <random>

#include "quantj/errors.hpp"
#include "quantj/ops.hpp"

namespace quantj {

bool Report::pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

Json Report::to_json() const {
    Json out;
    out["suite"] = suite;
    out["instance"] = instance;
    out["pass"] = pass();
    out["checks"] = Json::array();
    for (const auto& c : checks) {
        Json j{{"name", c.name}, {"pass", c.pass}};
        if (!c.detail.is_null()) j["detail"] = c.detail;
        out["checks"].push_back(std::move(j));
    }
    return out;
}

namespace {

AmbientPtr ring_of(const QuadDescPtr& D) { return Ambient::of_order(OrderDesc::standard(D)); }

std::string tag(const QuadDescPtr& D) { return D->describe(); }

// Runs body; an exception becomes a failing check carrying the message.
template <class Fn>
Check guarded(std::string name, Fn&& body) {
    try {
        return body(std::move(name));
    } catch (const Error& e) {
        return Check{std::move(name), false, Json{{"error", e.what()}}};
    }
}

bool series_agree_below(const LaurentSeries& a, const LaurentSeries& b) {
    return compare(a, b, std::min(a.prec(), b.prec())).equal();
}

}  // namespace

std::vector<Check> check_epsilon_closed_form(const QuadDescPtr& D, int N_max, int extra) {
    std::vector<Check> out;
    const int d = D->d();
    for (int N = 1; N <= N_max; ++N)
        for (int l = 0; l < d; ++l) {
            const int bound = N * d + l + extra;
            out.push_back(guarded("eps closed form N=" + std::to_string(N) + " l=" + std::to_string(l) + " bound=" + std::to_string(bound), [&](std::string name) {
                const auto closed = epsilon_lattice(D, N, l, bound).basis;
                const auto brute = epsilon_lattice_bruteforce(D, N * d + l, bound);
                Check c{name, closed == brute, nullptr};
                if (!c.pass) c.detail = {{"closed_degrees", closed.degrees()}, {"brute_degrees", brute.degrees()}};
                return c;
            }));
        }
    return out;
}

std::vector<Check> check_qn_distance(const QuadDescPtr& D, int n_max, bool perturb) {
    auto Q = qseq(*D, n_max);
    if (perturb && Q.size() > 3) Q[3] = Q[3] + Poly::constant(D->field(), 1);
    const auto f = QuadElem::gen(D);
    Check c{"||Q_n f|| = q^-(n+1)d for n <= " + std::to_string(n_max) + " (" + tag(D) + ")", true, nullptr};
    for (int n = 0; n <= n_max; ++n) {
        const int expect = (n + 1) * D->d();
        const auto dist = (f.scaled(RatFn(Q[n]))).iota1(expect + 4).nearest_poly_norm();
        if (dist.exponent != expect) {
            c.pass = false;
            c.detail = {{"n", n}, {"Q_n", Q[n].to_string()}, {"expected_exponent", expect},
                        {"exponent", dist.exponent ? Json(*dist.exponent) : Json("zero to precision")}};
            break;
        }
    }
    return {c};
}

std::vector<Check> check_binet(const QuadDescPtr& D, int n_max, bool perturb) {
    auto Q = qseq(*D, n_max);
    if (perturb && Q.size() > 3) Q[3] = Q[3] + Poly::constant(D->field(), 1);
    const auto f = QuadElem::gen(D), fs = f.conj();
    Check c{"f^(n+1) - f*^(n+1) = Q_n (f - f*) for n <= " + std::to_string(n_max) + " (" + tag(D) + ")", true, nullptr};
    for (int n = 0; n <= n_max; ++n)
        if (!(f.pow(static_cast<unsigned>(n + 1)) - fs.pow(static_cast<unsigned>(n + 1)) == (f - fs).scaled(RatFn(Q[n])))) {
            c.pass = false;
            c.detail = {{"n", n}, {"Q_n", Q[n].to_string()}};
            break;
        }
    return {c};
}

std::vector<Check> check_power_law(const QuadDescPtr& D) {
    std::vector<Check> out;
    const auto R = ring_of(D);
    const int d = D->d();
    const auto top = ideal_a(R, d - 1);
    for (int i = 1; i < d; ++i)
        out.push_back(guarded("a_" + std::to_string(i) + " a_" + std::to_string(d - 1) + " = a_" + std::to_string(i - 1) + " (" + tag(D) + ")", [&](std::string name) {
            const auto cert = ideal_equal(ideal_product(ideal_a(R, i), top), ideal_a(R, i - 1));
            Check c{name, cert.equal, nullptr};
            if (!c.pass) c.detail = {{"bound", cert.bound}, {"left_in_right", cert.j_in_i.contained}, {"right_in_left", cert.i_in_j.contained}};
            return c;
        }));
    out.push_back(guarded("a_" + std::to_string(d - 1) + "^" + std::to_string(d) + " = (f) (" + tag(D) + ")", [&](std::string name) {
        const auto cert = ideal_equal(ideal_power(top, static_cast<unsigned>(d)), principal_ideal(R, QuadElem::gen(D)));
        Check c{name, cert.equal, nullptr};
        if (!c.pass) c.detail = {{"bound", cert.bound}};
        return c;
    }));
    return out;
}

std::vector<Check> check_invertibility(const QuadDescPtr& D) {
    std::vector<Check> out;
    const auto R = ring_of(D);
    const int bound = 4 * D->d();
    for (int i = 0; i < D->d(); ++i) {
        const auto I = ideal_a(R, i);
        out.push_back(guarded("1 in a_" + std::to_string(i) + " a_" + std::to_string(i) + "* (" + tag(D) + ")", [&](std::string name) {
            const auto cert = invertibility_certificate(I, bound);
            QuadElem sum = QuadElem::zero(D);
            Json terms = Json::array();
            for (const auto& t : cert.terms) {
                sum = sum + t;
                terms.push_back(t.to_string());
            }
            Check c{name, cert.certified && sum == QuadElem::one(D), nullptr};
            if (!c.pass) c.detail = {{"bound", cert.bound}, {"terms", terms}};
            return c;
        }));
        out.push_back(guarded("a_" + std::to_string(i) + " = (g, h) (" + tag(D) + ")", [&](std::string name) {
            const auto tg = two_generator(I, QuadElem::gen(D), bound);
            Check c{name, tg && tg->cert.equal, nullptr};
            if (c.pass)
                c.detail = {{"g", tg->g.to_string()}, {"h", tg->h.to_string()}};
            else
                c.detail = {{"bound", bound}};
            return c;
        }));
    }
    return out;
}

std::vector<Check> check_conductor(const QuadDescPtr& D0, int k) {
    std::vector<Check> out;
    out.push_back(guarded("conductor and contraction/expansion, f = f0^" + std::to_string(k) + " (" + tag(D0) + ")", [&](std::string name) {
        const auto pair = make_order_pair(D0, static_cast<unsigned>(k));
        const int d = pair.R->d();
        const int bound = 5 * d;
        const auto c = conductor(pair, bound);
        Check chk{name, true, nullptr};
        // conductor elements times the A-basis stay in R
        for (std::size_t i = 0; i < c.size() && chk.pass; ++i)
            for (int m = 0; m <= bound; ++m)
                if (pair.A_amb->has_degree(m) && !pair.R_amb->coordinates(c.element(i) * pair.A_amb->element(m)).member) {
                    chk.pass = false;
                    chk.detail = {{"conductor_element", c.element(i).to_string()}, {"A_basis_degree", m}};
                    break;
                }
        // ideals of R prime to the conductor: contraction(expansion(I)) = I
        const auto one = QuadElem::one(D0);
        const auto F = pair.R->gen();
        for (const auto& g : {F * QuadElem::from_poly(D0, Poly::T(D0->field())) + one, F.pow(2) + F + one}) {
            if (!chk.pass) break;
            const auto I = principal_ideal(pair.R_amb, g);
            if (!membership(g, pair.R_amb).member || !prime_to_conductor(pair, I, bound)) continue;
            if (!(contraction(pair, expansion(pair, I, bound + 2)) == ideal_filtered_basis(I, bound + 2))) {
                chk.pass = false;
                chk.detail = {{"ideal_generator", g.to_string()}};
            }
        }
        return chk;
    }));
    return out;
}

std::vector<Check> check_zeta_kernels(const QuadDescPtr& D) {
    std::vector<Check> out;
    const int d = D->d(), q = static_cast<int>(D->q());
    const auto R = ring_of(D);
    std::vector<std::pair<std::string, FilteredBasis>> lattices;
    for (int i = 0; i < d; ++i) lattices.emplace_back("a_" + std::to_string(i), ideal_filtered_basis(ideal_a(R, i), 2 * d + 3));
    for (int l = 0; l < d; ++l) lattices.emplace_back("eps N=2 l=" + std::to_string(l), epsilon_lattice(D, 2, l, 2 * d + l + 4).basis);
    for (const auto& [label, L] : lattices)
        out.push_back(guarded("goss = enumeration on " + label + " (" + tag(D) + ")", [&](std::string name) {
            Check c{name, true, nullptr};
            for (int n : {q - 1, q * q - 1, 1, q + 1}) {
                const std::int64_t A = n * L.degree(0) + 8;
                const auto g = sign_one_power_sum(L, n, A, ZetaKernel::Goss);
                const auto s = sign_one_power_sum(L, n, A, ZetaKernel::EnumerateSerial);
                const auto p = sign_one_power_sum(L, n, A, ZetaKernel::EnumerateParallel);
                if (!series_agree_below(g, s) || !identical(s, p)) {
                    c.pass = false;
                    c.detail = {{"n", n}, {"goss", series_to_json(g)}, {"serial", series_to_json(s)}, {"parallel", series_to_json(p)}};
                    break;
                }
            }
            return c;
        }));
    return out;
}

std::vector<Check> check_j_eps_identity(const QuadDescPtr& D, std::int64_t P, int N_max) {
    std::vector<Check> out;
    for (int N = 1; N <= N_max; ++N)
        for (int l = 0; l < D->d(); ++l)
            out.push_back(guarded("g^(q+1)/Delta = 1/(1/(T^q-T) - J) N=" + std::to_string(N) + " l=" + std::to_string(l) + " (" + tag(D) + ")", [&](std::string name) {
                const auto e = g_delta_j_eps(D, N, l, P);
                const std::int64_t prec = std::min(e.j.prec(), e.j_via_J.prec());
                const auto cmp = compare(e.j, e.j_via_J, prec);
                Check c{name, cmp.equal() && prec - e.j.val() >= P, nullptr};
                c.detail = {{"compared_below", prec}};
                if (!c.pass) c.detail["first_difference"] = cmp.exponent;
                return c;
            }));
    return out;
}

namespace {

struct QuantumData {
    QuantumJResult qj;
    std::vector<LaurentSeries> limits, ideal_js;
};

QuantumData quantum_data(const QuadDescPtr& D, std::int64_t P, int N_max) {
    QuantumData out{quantum_j(D, P, N_max), {}, {}};
    for (const auto& b : out.qj.branches)
        if (b.limit) out.limits.push_back(*b.limit);
    const auto R = ring_of(D);
    for (int i = 0; i < D->d(); ++i) out.ideal_js.push_back(j_of_ideal(ideal_a(R, i), P).value);
    return out;
}

}  // namespace

std::vector<Check> check_quantum_set(const QuadDescPtr& D, std::int64_t P, int N_max) {
    return {guarded("j^qt(f) = {j(a_i)} to " + std::to_string(P) + " coefficients (" + tag(D) + ")", [&](std::string name) {
        const auto data = quantum_data(D, P, N_max);
        bool all = true;
        Json branches = Json::array();
        for (const auto& b : data.qj.branches) {
            all = all && b.converged;
            branches.push_back({{"l", b.l}, {"converged", b.converged}, {"N_stable", b.N_stable}, {"confirmed", b.confirmed}});
        }
        Check c{name, all && same_multiset(data.limits, data.ideal_js, P), Json{{"branches", branches}}};
        if (!c.pass) {
            Json lim = Json::array(), ids = Json::array();
            for (const auto& s : data.limits) lim.push_back(series_to_json(s));
            for (const auto& s : data.ideal_js) ids.push_back(series_to_json(s));
            c.detail["limits"] = lim;
            c.detail["ideal_js"] = ids;
        }
        return c;
    })};
}

std::vector<Check> check_quantum_product(const QuadDescPtr& D, std::int64_t P, int N_max) {
    return {guarded("prod branch limits = prod j(a_i) (" + tag(D) + ")", [&](std::string name) {
        const auto data = quantum_data(D, P, N_max);
        const auto pr = quantum_product(data.qj, data.ideal_js, P);
        Check c{name, pr.product_equal, nullptr};
        if (!c.pass) c.detail = {{"from_branches", series_to_json(pr.from_branches)}, {"from_ideals", series_to_json(pr.from_ideals)}};
        return c;
    })};
}

std::vector<Check> check_class_invariance(const QuadDescPtr& D, std::int64_t P) {
    std::vector<Check> out;
    const auto R = ring_of(D);
    const auto j1 = j_of_ideal(unit_ideal(R), P).value;
    const QuadElem alpha = QuadElem::gen(D) + QuadElem::from_poly(D, Poly::T(D->field()));
    std::vector<LaurentSeries> js;
    for (int i = 0; i < D->d(); ++i) {
        const auto I = ideal_a(R, i);
        const auto ji = j_of_ideal(I, P).value;
        js.push_back(ji);
        out.push_back(guarded("j((f+T) a_" + std::to_string(i) + ") = j(a_" + std::to_string(i) + ") (" + tag(D) + ")", [&](std::string name) {
            const auto moved = j_of_ideal(ideal_product(principal_ideal(R, alpha), I), P).value;
            Check c{name, agree_to(ji, moved, P), nullptr};
            if (!c.pass) c.detail = {{"j", series_to_json(ji)}, {"moved", series_to_json(moved)}};
            return c;
        }));
        // a_0 = (f) is principal; the others are not
        const bool principal = i == 0;
        Check c{"j(a_" + std::to_string(i) + ") " + (principal ? "=" : "!=") + " j((1)) (" + tag(D) + ")", agree_to(ji, j1, P) == principal, nullptr};
        if (!c.pass) c.detail = {{"j", series_to_json(ji)}, {"j_unit", series_to_json(j1)}};
        out.push_back(std::move(c));
    }
    Check inj{"j(a_i) pairwise distinct (" + tag(D) + ")", dedupe(js, P).size() == js.size(), nullptr};
    out.push_back(std::move(inj));
    return out;
}

std::vector<Check> check_drinfeld(const QuadDescPtr& D, std::int64_t P, int max_ideal) {
    std::vector<Check> out;
    const auto R = ring_of(D);
    const auto f = QuadElem::gen(D);
    const auto fT = f * QuadElem::from_poly(D, Poly::T(D->field()));
    const std::int64_t q = D->q();
    std::int64_t z = q;
    for (int k = 0; k <= D->d(); ++k) z *= q;  // room for f (deg d) and fT (deg d+1)
    const int z_bound = static_cast<int>(z + 1);
    for (int i = 0; i <= std::min(max_ideal, D->d() - 1); ++i) {
        const std::string which = "a_" + std::to_string(i) + " (" + tag(D) + ")";
        const auto I = ideal_a(R, i);
        LatticeProvider prov = [I](int b) { return ideal_filtered_basis(I, b); };
        std::optional<ExpSeries> e;
        out.push_back(guarded("exponential has q-power support on " + which, [&](std::string name) {
            e = exp_adaptive(prov, 3 * D->d() + 2, P, z_bound);
            return Check{name, true, Json{{"z_bound", z_bound}, {"coefficient_precision", e->prec}}};
        }));
        if (!e) continue;
        out.push_back(guarded("deg_tau rho_f = d and e(fz) = rho_f(e(z)) on " + which, [&](std::string name) {
            const auto img = drinfeld_from_exp(*e, f);
            const auto imgT = drinfeld_from_exp(*e, fT);
            Check c{name, img.rho.degree() == D->d() && imgT.rho.degree() == D->d() + 1 && img.residual->below(P) && imgT.residual->below(P), nullptr};
            c.detail = {{"deg_rho_f", img.rho.degree()}, {"residual_exponent", img.residual->exponent}, {"threshold_exponent", P - 4}};
            return c;
        }));
        out.push_back(guarded("perturbed rho_f fails the functional equation on " + which, [&](std::string name) {
            const auto img = drinfeld_from_exp(*e, f);
            Check c{name, true, nullptr};
            for (int k = 1; k <= img.rho.degree(); ++k) {
                auto coeffs = img.rho.coeffs();
                coeffs[k] = coeffs[k] + LaurentSeries::monomial(D->field(), 1, 1, coeffs[k].prec());
                const auto r = functional_eq_residual(*e, SkewLaurent(D->field(), coeffs), z_bound);
                if (r.below(P)) {
                    c.pass = false;
                    c.detail = {{"perturbed_coefficient", k}, {"residual_exponent", r.exponent}};
                }
            }
            return c;
        }));
    }
    return out;
}

std::vector<Check> check_skew(const FieldPtr& F, int max_deg, std::uint64_t seed) {
    std::vector<Check> out;
    const std::string fq = "F_" + std::to_string(F->q());
    std::vector<Poly> monics;
    for (int k = 0; k <= max_deg; ++k) for_each_monic(F, k, [&](const Poly& p) { monics.push_back(p); });
    std::vector<SkewRat> rho;
    for (const auto& m : monics) rho.push_back(carlitz(m));

    Check comm{"Carlitz rho_m rho_m' = rho_m' rho_m = rho_mm' (deg <= " + std::to_string(max_deg) + ", " + fq + ")", true, nullptr};
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, monics.size() - 1);
    std::uniform_int_distribution<Elem> scal(1, F->q() - 1);
    for (int t = 0; t < 200 && comm.pass; ++t) {
        const std::size_t i = pick(rng), j = pick(rng);
        const Poly m = monics[i].scaled(scal(rng)), n = monics[j];
        const auto rm = carlitz(m), mn = rm * rho[j];
        if (!(mn == rho[j] * rm) || !(mn == carlitz(m * n))) {
            comm.pass = false;
            comm.detail = {{"m", m.to_string()}, {"m_prime", n.to_string()}};
        }
    }
    out.push_back(std::move(comm));

    Check div{"rho_m' right-divides rho_m iff m' | m (deg <= " + std::to_string(max_deg) + ", " + fq + ")", true, nullptr};
    for (std::size_t i = 0; i < monics.size() && div.pass; ++i)
        for (std::size_t j = 0; j < monics.size(); ++j) {
            if (monics[j].degree() > monics[i].degree()) continue;  // both sides plainly fail
            const bool skew = right_divmod(rho[i], rho[j]).second.is_zero();
            const bool poly = (monics[i] % monics[j]).is_zero();
            if (skew != poly) {
                div.pass = false;
                div.detail = {{"m", monics[i].to_string()}, {"m_prime", monics[j].to_string()}, {"skew_divides", skew}};
                break;
            }
        }
    out.push_back(std::move(div));

    Check star{"(m) * rho = rho for principal (m) (" + fq + ")", true, nullptr};
    const std::vector<SkewRat> ring{carlitz(Poly::T(F))};
    for (std::size_t i = 0; i < monics.size() && star.pass; ++i) {
        if (monics[i].degree() > 3) continue;
        const auto st = star_action<RatFn>(ring, {rho[i]});
        if (!(st.rho_ideal == rho[i]) || !(st.starred[0] == ring[0])) {
            star.pass = false;
            star.detail = {{"m", monics[i].to_string()}, {"starred", st.starred[0].to_string()}};
        }
    }
    out.push_back(std::move(star));
    return out;
}

std::vector<Check> check_determinism(const Instance& inst, std::int64_t P) {
    std::vector<Check> out;
    const int saved = omp_get_max_threads();
    // every series in a payload at P must reappear, coefficient for coefficient, at P + 4
    auto walk = [](const Json& a, const Json& b, auto&& self, std::string path, Json& witness) -> bool {
        if (a.is_object() && a.contains("coeffs") && a.contains("prec")) {
            const auto va = a["val"].get<std::int64_t>(), pa = a["prec"].get<std::int64_t>();
            const auto vb = b["val"].get<std::int64_t>(), pb = b["prec"].get<std::int64_t>();
            if (pb < pa) {
                witness = {{"path", path}, {"reason", "precision dropped"}};
                return false;
            }
            for (std::int64_t e = std::min(va, vb); e < pa; ++e) {
                auto at = [](const Json& s, std::int64_t v, std::int64_t e) { return e < v ? Json(0) : s["coeffs"][static_cast<std::size_t>(e - v)]; };
                const Json ca = at(a, va, e), cb = at(b, vb, e);
                const bool za = ca == Json(0) || ca == Json("0"), zb = cb == Json(0) || cb == Json("0");
                if (!(ca == cb || (za && zb))) {
                    witness = {{"path", path}, {"exponent", e}};
                    return false;
                }
            }
            return true;
        }
        if (a.is_object()) {
            for (auto it = a.begin(); it != a.end(); ++it) {
                if (it.key() == "P" || it.key() == "zeta_prec" || it.key() == "sequence" || it.key() == "exp" || it.key() == "N_stable" ||
                    it.key() == "confirmed" || it.key() == "residual_exponent" || it.key() == "threshold_exponent" || it.key() == "lattice_id")
                    continue;
                if (!b.contains(it.key()) || !self(*it, b[it.key()], self, path + "/" + it.key(), witness)) return false;
            }
            return true;
        }
        if (a.is_array()) {
            if (a.size() != b.size()) {
                witness = {{"path", path}, {"reason", "length"}};
                return false;
            }
            for (std::size_t i = 0; i < a.size(); ++i)
                if (!self(a[i], b[i], self, path + "/" + std::to_string(i), witness)) return false;
            return true;
        }
        return true;
    };
    auto rerun = [&](const std::string& label, const std::function<Json(std::int64_t)>& op) {
        out.push_back(guarded(label + " at P+4 reproduces P", [&](std::string name) {
            const Json a = op(P), b = op(P + 4);
            Json witness;
            Check c{name, walk(a, b, walk, "", witness), nullptr};
            if (!c.pass) c.detail = witness;
            return c;
        }));
    };
    for (int i = 0; i < inst.desc->d(); ++i) rerun("ideal-j a_" + std::to_string(i), [&](std::int64_t p) { return op_ideal_j(inst, i, p); });
    rerun("quantum-j", [&](std::int64_t p) { return op_quantum_j(inst, p, inst.N_max); });
    rerun("zeta weight q-1 on a_0", [&](std::int64_t p) { return op_zeta(inst, static_cast<int>(inst.q) - 1, "ideal:0", p, ZetaKernel::Goss); });
    if (inst.desc->d() >= 1)
        rerun("drinfeld a_0, gen f", [&](std::int64_t p) { return op_drinfeld(inst, 0, "f", p, 0); });

    out.push_back(guarded("byte-identical JSON across thread counts", [&](std::string name) {
        std::string first;
        Check c{name, true, nullptr};
        for (int threads : {1, 2, 4}) {
            omp_set_num_threads(threads);
            Json j = op_quantum_j(inst, P, inst.N_max);
            j["zeta_parallel"] = op_zeta(inst, static_cast<int>(inst.q) - 1, "eps:2:0", 8, ZetaKernel::EnumerateParallel);
            const std::string s = j.dump();
            if (first.empty())
                first = s;
            else if (s != first) {
                c.pass = false;
                c.detail = {{"threads", threads}};
            }
        }
        omp_set_num_threads(saved);
        return c;
    }));
    omp_set_num_threads(saved);
    return out;
}

std::vector<std::string> suite_names() {
    return {"quadfield", "epsilon-lattice", "ideals", "zeta", "j-eps", "quantum", "drinfeld", "skew", "determinism", "all"};
}

Report run_suite(const std::string& name, const Instance& inst) {
    const auto names = suite_names();
    if (std::find(names.begin(), names.end(), name) == names.end()) throw InputError("unknown suite '" + name + "'");
    Report r{name, inst.name, {}};
    auto add = [&](std::vector<Check> cs) {
        for (auto& c : cs) r.checks.push_back(std::move(c));
    };
    auto want = [&](const char* s) { return name == s || name == "all"; };
    const auto& D = inst.desc;
    const std::int64_t P = inst.P();
    const bool perturb = inst.inject == "qseq";
    if (want("quadfield")) {
        add(check_qn_distance(D, 8, perturb));
        add(check_binet(D, 12, perturb));
    }
    if (want("epsilon-lattice")) add(check_epsilon_closed_form(D, 4, 6));
    if (want("ideals")) {
        add(check_power_law(D));
        add(check_invertibility(D));
        if (inst.desc0) add(check_conductor(inst.desc0, inst.k));
    }
    if (want("zeta")) add(check_zeta_kernels(D));
    if (want("j-eps")) add(check_j_eps_identity(D, P, inst.N_max));
    if (want("quantum")) {
        add(check_quantum_set(D, P, inst.N_max));
        add(check_quantum_product(D, P, inst.N_max));
        add(check_class_invariance(D, P));
    }
    if (want("drinfeld")) add(check_drinfeld(D, std::min<std::int64_t>(P, 12), D->d() - 1));
    if (want("skew")) add(check_skew(inst.field, inst.q <= 3 ? 4 : 2, inst.seed));
    if (want("determinism")) add(check_determinism(inst, P));
    return r;
}

}  // namespace quantj
