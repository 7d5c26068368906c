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

#include "quantj/zeta.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <exception>
#include <limits>
#include <mutex>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "quantj/errors.hpp"

namespace quantj {

std::string to_string(ZetaKernel k) {
    switch (k) {
        case ZetaKernel::Goss: return "goss";
        case ZetaKernel::EnumerateSerial: return "enumerate-serial";
        case ZetaKernel::EnumerateParallel: return "enumerate-parallel";
    }
    return "?";
}

namespace {

using i128 = __int128;
constexpr i128 kHuge = static_cast<i128>(std::numeric_limits<std::int64_t>::max() / 4);

i128 sat(i128 x) { return std::min(x, kHuge); }

// Sum over the sign-1 elements of degree D_k of x^{-n}, for every block, through
// e_V(z) = sum alpha_i z^{q^i}, V = span of the rows below:
//   sum_{v in V} (z - v)^{-n} = G_n(1/e_V(z)),  G_1 = t, G_m = t (G_{m-1} + sum_i alpha_i G_{m - q^i}),
// and e_{V + F_q w}(z) = e_V(z) - e_V(w)^{1-q} e_V(z)^q. ord t_k is known exactly from
// the row degrees and increases with k; once it reaches abs_prec every later block
// sum (bounded by |t_k|) is invisible.
LaurentSeries goss_sum(const FilteredBasis& L, int n, std::int64_t A, int* cutoff) {
    const FieldPtr& F = L.ambient->field();
    const std::int64_t q = F->q();
    LaurentSeries total = LaurentSeries::zero(F, A);
    if (L.size() == 0) throw PrecisionError("lattice has no element of degree <= " + std::to_string(L.bound));
    const std::int64_t D0 = L.degree(0);
    const std::int64_t rho = std::max<std::int64_t>(A - D0, 1);
    int levels = 0;  // alpha_i needed for i <= levels, q^levels <= n
    for (std::int64_t qi = q; qi <= n; qi *= q) ++levels;

    std::vector<LaurentSeries> betas;
    std::vector<LaurentSeries> alpha;  // alpha[i-1] = alpha_i, i >= 1
    i128 qk = 1, lower = 0;             // q^k, sum_{j<k} D_j (q-1) q^j
    std::int64_t prec = A;
    for (std::size_t k = 0;; ++k) {
        if (k == L.size()) {
            const i128 tail = sat(static_cast<i128>(L.bound + 1) * qk - lower);
            prec = std::min<std::int64_t>(A, static_cast<std::int64_t>(tail));
            break;
        }
        const std::int64_t Dk = L.degree(k);
        const i128 tau = sat(static_cast<i128>(Dk) * qk - lower);
        if (tau >= A) break;
        LaurentSeries E = L.series(k, -Dk + rho);
        for (const auto& b : betas) E = E - b * E.frobenius(1);
        const LaurentSeries t = E.inverse();

        std::vector<LaurentSeries> G;
        G.reserve(static_cast<std::size_t>(n));
        G.push_back(t.truncated(A));
        for (int m = 2; m <= n; ++m) {
            LaurentSeries acc = G[m - 2];
            std::int64_t qi = q;
            for (std::size_t i = 0; i < alpha.size() && qi < m; ++i, qi *= q) acc += alpha[i] * G[m - qi - 1];
            G.push_back((t * acc).truncated(A));
        }
        total += G.back();

        const LaurentSeries beta = t.pow(static_cast<std::uint64_t>(q - 1));
        if (static_cast<int>(alpha.size()) < levels) alpha.push_back(LaurentSeries::zero(F, A + 1));
        for (std::size_t i = alpha.size(); i-- > 0;) {
            const LaurentSeries prev = i == 0 ? beta : beta * alpha[i - 1].frobenius(1);
            alpha[i] = (alpha[i] - prev).truncated(A + 1);
        }
        betas.push_back(beta);
        lower = sat(lower + static_cast<i128>(Dk) * (q - 1) * qk);
        qk = sat(qk * q);
        if (cutoff) *cutoff = static_cast<int>(Dk);
    }
    return total.truncated(prec);
}

LaurentSeries enumerate_sum(const FilteredBasis& L, int n, std::int64_t A, bool parallel, int* cutoff) {
    const FieldPtr& F = L.ambient->field();
    const std::uint64_t q = F->q();
    LaurentSeries total = LaurentSeries::zero(F, A);
    std::int64_t prec = A;
    for (std::size_t k = 0;; ++k) {
        if (k == L.size()) {
            prec = std::min<std::int64_t>(A, static_cast<std::int64_t>(n) * (L.bound + 1));
            break;
        }
        const std::int64_t Dk = L.degree(k);
        if (n * Dk >= A) break;
        const std::int64_t p = A - (n + 1) * Dk;
        std::vector<LaurentSeries> rows;
        for (std::size_t i = 0; i <= k; ++i) rows.push_back(L.series(i, p));
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < k; ++i) {
            if (count > (std::uint64_t{1} << 40) / q) throw DomainError("block too large to enumerate");
            count *= q;
        }
        std::uint64_t chunks = 1;
#ifdef _OPENMP
        if (parallel) chunks = std::min<std::uint64_t>(count, 8 * static_cast<std::uint64_t>(omp_get_max_threads()));
#endif
        std::vector<LaurentSeries> partial(chunks, LaurentSeries::zero(F, A));
        std::exception_ptr error;
        std::mutex error_mu;
#pragma omp parallel for schedule(dynamic, 1) if (parallel && chunks > 1)
        for (std::int64_t c = 0; c < static_cast<std::int64_t>(chunks); ++c) {
            try {
                const std::uint64_t begin = count / chunks * c + std::min<std::uint64_t>(c, count % chunks);
                const std::uint64_t end = begin + count / chunks + (static_cast<std::uint64_t>(c) < count % chunks ? 1 : 0);
                // digits of the counter; Gray digit i = (s_i - s_{i+1}) mod q, and stepping
                // the counter adds 1 to Gray digit j = number of trailing (q-1) digits.
                std::vector<std::uint64_t> s(k + 1, 0);
                std::uint64_t x = begin;
                for (std::size_t i = 0; i < k; ++i, x /= q) s[i] = x % q;
                // Gray digits are integer labels of field elements; a step moves label g to
                // g + 1 (mod q), i.e. adds (elem(g+1) - elem(g)) times the row.
                auto gray = [&](std::size_t i) { return static_cast<Elem>((s[i] + q - s[i + 1]) % q); };
                LaurentSeries v = rows[k];
                for (std::size_t i = 0; i < k; ++i)
                    if (const Elem g = gray(i)) v += rows[i].scaled(g);
                LaurentSeries acc = LaurentSeries::zero(F, A);
                for (std::uint64_t idx = begin; idx < end; ++idx) {
                    acc += v.inverse().pow(static_cast<std::uint64_t>(n)).truncated(A);
                    if (idx + 1 == end) break;
                    std::size_t j = 0;
                    while (j < k && s[j] == q - 1) s[j++] = 0;
                    const Elem before = gray(j);
                    ++s[j];
                    const Elem step = F->sub(gray(j), before);
                    v += step == 1 ? rows[j] : rows[j].scaled(step);
                }
                partial[c] = std::move(acc);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mu);
                if (!error) error = std::current_exception();
            }
        }
        if (error) std::rethrow_exception(error);
        for (const auto& s : partial) total += s;
        if (cutoff) *cutoff = static_cast<int>(Dk);
    }
    return total.truncated(prec);
}

}  // namespace

LaurentSeries sign_one_power_sum(const FilteredBasis& L, int n, std::int64_t abs_prec, ZetaKernel kernel, int* degree_cutoff) {
    if (n < 1) throw DomainError("weight must be >= 1");
    if (kernel == ZetaKernel::Goss) return goss_sum(L, n, abs_prec, degree_cutoff);
    return enumerate_sum(L, n, abs_prec, kernel == ZetaKernel::EnumerateParallel, degree_cutoff);
}

ZetaValue zeta_lattice(const FilteredBasis& L, int n, std::int64_t rel_prec, ZetaKernel kernel) {
    const std::int64_t q = L.ambient->field()->q();
    if (n < 1 || n % (q - 1) != 0) throw DomainError("zeta weight must be a positive multiple of q - 1");
    if (rel_prec < 1) throw DomainError("precision must be >= 1");
    if (L.size() == 0) throw PrecisionError("lattice has no element of degree <= " + std::to_string(L.bound));
    const std::int64_t A = static_cast<std::int64_t>(n) * L.degree(0) + rel_prec;
    ZetaValue z{n, "", LaurentSeries::zero(L.ambient->field(), 0), 0, kernel};
    z.value = sign_one_power_sum(L, n, A, kernel, &z.degree_cutoff);
    if (z.value.prec() < A)
        throw PrecisionError("lattice bound " + std::to_string(L.bound) + " certifies zeta only below u^" + std::to_string(z.value.prec()));
    z.lattice_id = lattice_id(L);
    return z;
}

ZetaValue zeta_adaptive(const LatticeProvider& lattice, int initial_bound, int n, std::int64_t rel_prec, ZetaKernel kernel) {
    int bound = std::max(initial_bound, 1);
    for (int attempt = 0;; ++attempt) {
        try {
            return zeta_lattice(lattice(bound), n, rel_prec, kernel);
        } catch (const PrecisionError&) {
            if (attempt >= 8) throw;
            bound *= 2;
        }
    }
}

std::string content_hash(const std::string& data) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1) throw Error("SHA-256 failed");
    static const char* hex = "0123456789abcdef";
    std::string out;
    for (unsigned i = 0; i < len; ++i) {
        out += hex[md[i] >> 4];
        out += hex[md[i] & 15];
    }
    return out;
}

std::string lattice_id(const FilteredBasis& L) {
    std::string s = L.ambient->kind() == Ambient::Kind::Order ? "order:" + L.ambient->order()->describe() : "poly:" + L.ambient->desc()->describe();
    s += "|bound=" + std::to_string(L.bound) + "|";
    for (const auto& r : L.rows) {
        for (Elem c : r) s += std::to_string(c) + ",";
        s += ";";
    }
    return content_hash(s);
}

namespace {

Poly Tq_minus_T(const FieldPtr& F, unsigned power) {
    std::uint64_t e = 1;
    for (unsigned i = 0; i < power; ++i) e *= F->q();
    return Poly::monomial(F, 1, static_cast<int>(e)) - Poly::T(F);
}

// Relative precision of a j value, or 0 when its denominator vanished.
std::int64_t rel_or_zero(const std::optional<LaurentSeries>& s) { return s ? s->rel_prec() : 0; }

}  // namespace

LaurentSeries j_from_J(const FieldPtr& F, const LaurentSeries& J) {
    const Poly t1 = Tq_minus_T(F, 1), t2 = Tq_minus_T(F, 2);
    const std::int64_t q = F->q();
    const std::int64_t p = J.prec() + q + 1;
    const LaurentSeries C = LaurentSeries::from_ratfn(RatFn(t2, t1.pow(static_cast<unsigned>(q + 1))), p);
    const LaurentSeries inv = LaurentSeries::from_ratfn(RatFn(Poly::constant(F, 1), t1), p);
    const LaurentSeries den = inv - C * J;
    if (den.is_zero()) throw PrecisionError("j denominator is zero to precision u^" + std::to_string(den.prec()));
    return den.inverse();
}

namespace {

LatticeProvider ideal_provider(const IdealGens& I) {
    return [I](int bound) { return ideal_filtered_basis(I, bound); };
}

int ideal_initial_bound(const IdealGens& I) {
    int m = INT32_MAX;
    for (const auto& g : I.gens)
        if (!g.is_zero()) m = std::min(m, deg_at_inf1(g));
    return m + 2 * I.ring->order()->d() + 2;
}

std::int64_t cap_for(std::int64_t P) { return 16 * P + 512; }

}  // namespace

JValue J_of_ideal(const IdealGens& I, std::int64_t P) {
    if (P < 1) throw DomainError("precision must be >= 1");
    const int q = static_cast<int>(I.ring->field()->q());
    const auto prov = ideal_provider(I);
    const int b0 = ideal_initial_bound(I);
    const ZetaValue z1 = zeta_adaptive(prov, b0, q - 1, P);
    const ZetaValue z2 = zeta_adaptive(prov, b0, q * q - 1, P);
    JValue out{LaurentSeries::zero(I.ring->field(), 0), "", 0};
    out.value = (z2.value * z1.value.pow(static_cast<std::uint64_t>(q + 1)).inverse()).truncated_rel(P);
    out.provenance = "zeta(q^2-1)/zeta(q-1)^(q+1) over the ideal, " + to_string(z1.kernel) + " block sums";
    out.zeta_prec = P;
    return out;
}

JValue j_of_ideal(const IdealGens& I, std::int64_t P) {
    if (P < 1) throw DomainError("precision must be >= 1");
    const FieldPtr& F = I.ring->field();
    const int q = static_cast<int>(F->q());
    const auto prov = ideal_provider(I);
    const int b0 = ideal_initial_bound(I);
    for (std::int64_t Pz = P + 8;; ) {
        const ZetaValue z1 = zeta_adaptive(prov, b0, q - 1, Pz);
        const ZetaValue z2 = zeta_adaptive(prov, b0, q * q - 1, Pz);
        const LaurentSeries J = z2.value * z1.value.pow(static_cast<std::uint64_t>(q + 1)).inverse();
        std::optional<LaurentSeries> j;
        try {
            j = j_from_J(F, J);
        } catch (const PrecisionError&) {
        }
        const std::int64_t rel = rel_or_zero(j);
        if (rel >= P) {
            JValue out{j->truncated_rel(P), "", 0};
            out.value = j->truncated_rel(P);
            out.provenance = "1/(1/(T^q-T) - (T^(q^2)-T)/(T^q-T)^(q+1) J), J from ideal zeta values";
            out.zeta_prec = Pz;
            return out;
        }
        if (Pz >= cap_for(P)) throw PrecisionError("j(ideal) did not reach " + std::to_string(P) + " coefficients with zeta precision " + std::to_string(Pz));
        Pz = std::min(cap_for(P), Pz + std::max<std::int64_t>(8, P - rel + 4));
    }
}

EpsForms g_delta_j_eps(const QuadDescPtr& desc, int N, int l, std::int64_t P) {
    if (P < 1) throw DomainError("precision must be >= 1");
    const FieldPtr& F = desc->field();
    const int q = static_cast<int>(F->q());
    const int d = desc->d();
    if (l < 0 || l >= d) throw DomainError("l must lie in [0, d-1]");
    LatticeProvider prov = [&](int bound) { return epsilon_lattice(desc, N, l, bound).basis; };
    const int b0 = N * d + d + 2;
    const Poly t1 = Tq_minus_T(F, 1), t2 = Tq_minus_T(F, 2);
    for (std::int64_t Pz = P + 8;;) {
        const ZetaValue z1 = zeta_adaptive(prov, b0, q - 1, Pz);
        const ZetaValue z2 = zeta_adaptive(prov, b0, q * q - 1, Pz);
        const std::int64_t pp = std::max(z1.value.prec(), z2.value.prec()) + 2 * q * q + 8;
        const LaurentSeries s1 = LaurentSeries::from_poly(t1, pp), s2 = LaurentSeries::from_poly(t2, pp);
        const LaurentSeries z1q1 = z1.value.pow(static_cast<std::uint64_t>(q + 1));
        const LaurentSeries z0 = LaurentSeries::zero(F, 0);
        EpsForms out{N, l, z0, z0, z0, z0, z0, Pz};
        out.N = N;
        out.l = l;
        out.zeta_prec = Pz;
        out.g = -(s1 * z1.value);
        out.delta = -(s2 * z2.value) + s1.frobenius(1) * z1q1;
        out.J = LaurentSeries::from_ratfn(RatFn(t2, t1.pow(static_cast<unsigned>(q + 1))), pp) * z2.value * z1q1.inverse();
        std::int64_t rel = 0;
        if (!out.delta.is_zero()) {
            out.j = out.g.pow(static_cast<std::uint64_t>(q + 1)) * out.delta.inverse();
            try {
                // J_eps already carries (T^{q^2} - T)/(T^q - T)^{q+1}
                const LaurentSeries den = LaurentSeries::from_ratfn(RatFn(Poly::constant(F, 1), t1), pp) - out.J;
                if (den.is_zero()) throw PrecisionError("J_eps denominator is zero to precision");
                out.j_via_J = den.inverse();
                rel = std::min(out.j.rel_prec(), out.j_via_J.rel_prec());
            } catch (const PrecisionError&) {
            }
        }
        if (rel >= P) return out;
        if (Pz >= cap_for(P)) throw PrecisionError("Delta_eps did not leave " + std::to_string(P) + " coefficients (N=" + std::to_string(N) + ", l=" + std::to_string(l) + ")");
        Pz = std::min(cap_for(P), Pz + std::max<std::int64_t>(8, P - rel + 4));
    }
}

bool agree_to(const LaurentSeries& a, const LaurentSeries& b, std::int64_t P) {
    if (a.is_zero() || b.is_zero()) return false;
    if (a.val() != b.val() || a.rel_prec() < P || b.rel_prec() < P) return false;
    return compare_coeffs(a, b, P).equal();
}

QuantumJResult quantum_j(const QuadDescPtr& desc, std::int64_t P, int N_max, int N0) {
    if (P < 1) throw DomainError("precision must be >= 1");
    if (N_max < N0 + 1) throw DomainError("N_max must exceed N0");
    QuantumJResult out;
    out.P = P;
    const int d = desc->d();
    for (int l = 0; l < d; ++l) {
        QuantumBranch br;
        br.l = l;
        int run = 0;
        for (int N = N0; N <= N_max; ++N) {
            const LaurentSeries j = g_delta_j_eps(desc, N, l, P).j.truncated_rel(P);
            if (!br.sequence.empty() && agree_to(br.sequence.back().second, j, P))
                ++run;
            else
                run = 1;
            br.sequence.emplace_back(N, j);
            if (run >= 3) {
                br.confirmed = true;
                break;
            }
            if (run == 2 && N == N_max) break;
        }
        if (run >= 2) {
            br.converged = true;
            br.N_stable = br.sequence[br.sequence.size() - static_cast<std::size_t>(run)].first;
            br.limit = br.sequence.back().second;
        }
        out.branches.push_back(std::move(br));
    }
    std::vector<LaurentSeries> limits;
    for (const auto& b : out.branches)
        if (b.limit) limits.push_back(*b.limit);
    if (limits.empty()) throw UndecidableError("no branch of j_eps stabilized by N = " + std::to_string(N_max));
    out.limit_set = dedupe(limits, P);
    return out;
}

std::vector<std::pair<LaurentSeries, int>> dedupe(const std::vector<LaurentSeries>& values, std::int64_t P) {
    std::vector<std::pair<LaurentSeries, int>> out;
    for (const auto& v : values) {
        auto it = std::find_if(out.begin(), out.end(), [&](const auto& e) { return agree_to(e.first, v, P); });
        if (it == out.end())
            out.emplace_back(v, 1);
        else
            ++it->second;
    }
    return out;
}

bool same_multiset(const std::vector<LaurentSeries>& a, const std::vector<LaurentSeries>& b, std::int64_t P) {
    if (a.size() != b.size()) return false;
    std::vector<bool> used(b.size(), false);
    for (const auto& x : a) {
        bool found = false;
        for (std::size_t i = 0; i < b.size() && !found; ++i)
            if (!used[i] && agree_to(x, b[i], P)) used[i] = found = true;
        if (!found) return false;
    }
    return true;
}

ProductResult quantum_product(const QuantumJResult& qj, const std::vector<LaurentSeries>& ideal_js, std::int64_t P) {
    std::vector<LaurentSeries> limits;
    for (const auto& b : qj.branches) {
        if (!b.converged) throw UndecidableError("branch l=" + std::to_string(b.l) + " did not converge");
        limits.push_back(b.limit->truncated_rel(P));
    }
    if (ideal_js.empty() || limits.empty()) throw DomainError("empty product");
    ProductResult out{limits.front(), ideal_js.front().truncated_rel(P), false, false};
    for (std::size_t i = 1; i < limits.size(); ++i) out.from_branches = out.from_branches * limits[i];
    for (std::size_t i = 1; i < ideal_js.size(); ++i) out.from_ideals = out.from_ideals * ideal_js[i].truncated_rel(P);
    out.multiset_equal = same_multiset(limits, ideal_js, P);
    out.product_equal = agree_to(out.from_branches, out.from_ideals, P);
    return out;
}

std::optional<Recognized> recognize_algebraic(const LaurentSeries& s, const QuadDescPtr& desc, int height) {
    if (height < 0) throw DomainError("height must be >= 0");
    if (s.is_zero()) throw PrecisionError("series is zero to precision");
    const FieldPtr& F = desc->field();
    const int d = desc->d();
    for (int h = 0; h <= height; ++h) {
        const std::int64_t lo = std::min<std::int64_t>({s.val() - h, -h - d, -h});
        const std::int64_t hi = s.prec() - h;  // exclusive
        const std::int64_t unknowns = 3 * (h + 1);
        if (hi - lo <= unknowns)
            throw PrecisionError("need more than " + std::to_string(unknowns) + " known coefficients for height " + std::to_string(h));
        const LaurentSeries f1 = desc->root1(hi + h + d + 1);
        auto column = [&](const LaurentSeries& x) {
            Coords v(static_cast<std::size_t>(hi - lo), 0);
            for (std::int64_t e = std::max(lo, x.val()); e < hi; ++e) v[static_cast<std::size_t>(e - lo)] = x.coeff(e);
            return v;
        };
        // unknown order: q0_0..q0_h, p0_0..p0_h, p1_0..p1_h; the relation is s q0 - p0 - p1 f = 0
        std::vector<Coords> cols;
        for (int i = 0; i <= h; ++i) cols.push_back(column(s.shifted(-i)));
        for (int i = 0; i <= h; ++i) cols.push_back(column(LaurentSeries::monomial(F, F->neg(1), -i, hi)));
        for (int i = 0; i <= h; ++i) cols.push_back(column(-f1.shifted(-i)));
        for (const auto& x : kernel(F, cols)) {
            std::vector<Elem> q0(x.begin(), x.begin() + h + 1), p0(x.begin() + h + 1, x.begin() + 2 * h + 2), p1(x.begin() + 2 * h + 2, x.end());
            const Poly Q0(F, q0);
            if (Q0.is_zero()) continue;
            return Recognized{RatFn(Poly(F, p0), Q0), RatFn(Poly(F, p1), Q0), hi};
        }
    }
    return std::nullopt;
}

}  // namespace quantj
