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

#include "quantj/drinfeld.hpp"

#include <algorithm>
#include <limits>

namespace quantj {

SkewRat carlitz(const Poly& m) {
    if (m.is_zero()) throw DomainError("carlitz(0)");
    const FieldPtr& F = m.field();
    const SkewRat rho_T(F, {RatFn(Poly::T(F)), RatFn::constant(F, 1)});
    SkewRat out = SkewRat::zero(F), power = SkewRat::constant(RatFn::constant(F, 1));
    for (int i = 0; i <= m.degree(); ++i) {
        if (m.coeff(i) != 0) out = out + power.left_scaled(RatFn::constant(F, m.coeff(i)));
        if (i < m.degree()) power = power * rho_T;
    }
    return out;
}

std::vector<RatFn> carlitz_exp_coeffs(const FieldPtr& F, int K) {
    std::vector<RatFn> c{RatFn::constant(F, 1)};
    Poly D = Poly::constant(F, 1);
    std::uint64_t qk = 1;
    for (int k = 1; k <= K; ++k) {
        qk *= F->q();
        D = (Poly::monomial(F, 1, static_cast<int>(qk)) - Poly::T(F)) * D.frobenius(1);
        c.push_back(RatFn(Poly::constant(F, 1), D));
    }
    return c;
}

namespace {

bool is_q_power(std::uint64_t n, std::uint64_t q) {
    while (n % q == 0) n /= q;
    return n == 1;
}

}  // namespace

ExpSeries exp_from_lattice(const FilteredBasis& L, std::int64_t P, int z_bound) {
    const FieldPtr& F = L.ambient->field();
    const std::int64_t q = F->q();
    if (z_bound <= q) throw DomainError("z_bound must exceed q");
    if (L.size() == 0) throw PrecisionError("lattice bound " + std::to_string(L.bound) + " leaves no element");
    const std::int64_t D0 = std::max(L.degree(0), 0);
    const std::int64_t target = P + 4;
    const std::int64_t cap = 16 * P + 512;
    for (std::int64_t W = P + 8;;) {
        ExpSeries e;
        e.z_bound = z_bound;
        e.lattice_id = lattice_id(L);
        // E(m) = sum_{c in F_q^*} c^{-m} sum_{sgn 1} = -sum_{sgn 1} if (q-1) | m, else 0
        for (int m = 1; m < z_bound; ++m) {
            const std::int64_t A = m * D0 + W;
            if (m % (q - 1) != 0) {
                e.power_sums.push_back(LaurentSeries::zero(F, A));
                continue;
            }
            LaurentSeries s = sign_one_power_sum(L, m, A);
            if (s.prec() < A) throw PrecisionError("lattice bound " + std::to_string(L.bound) + " too small for E(" + std::to_string(m) + ")");
            e.power_sums.push_back(-s);
        }
        // b_n = sum_{m=1}^n E(m) b_{n-m}, b_0 = 1
        std::vector<LaurentSeries> b{LaurentSeries::constant(F, 1, z_bound * D0 + W + 1)};
        for (int n = 1; n < z_bound; ++n) {
            LaurentSeries acc = e.power_sums[0] * b[n - 1];
            for (int m = 2; m <= n; ++m) acc += e.power_sums[m - 1] * b[n - m];
            if (!is_q_power(static_cast<std::uint64_t>(n) + 1, q) && !acc.is_zero())
                throw VerificationError("exponential has a nonzero coefficient at z^" + std::to_string(n + 1) + " (ord " + std::to_string(acc.val()) + ")");
            b.push_back(std::move(acc));
        }
        std::int64_t worst = std::numeric_limits<std::int64_t>::max();
        for (std::int64_t qk = 1; qk < z_bound; qk *= q) {
            e.c.push_back(b[qk - 1]);
            if (qk > 1) worst = std::min(worst, e.c.back().is_zero() ? 0 : e.c.back().rel_prec());
        }
        e.prec = worst;
        if (worst >= target) return e;
        if (W >= cap) throw PrecisionError("exponential coefficients stuck at " + std::to_string(worst) + " coefficients");
        W = std::min(cap, W + std::max<std::int64_t>(8, target - worst + 4));
    }
}

ExpSeries exp_adaptive(const LatticeProvider& lattice, int initial_bound, std::int64_t P, int z_bound) {
    int bound = std::max(initial_bound, 1);
    for (int attempt = 0;; ++attempt) {
        try {
            return exp_from_lattice(lattice(bound), P, z_bound);
        } catch (const PrecisionError& err) {
            if (attempt >= 8 || std::string(err.what()).rfind("lattice bound", 0) != 0) throw;
            bound *= 2;
        }
    }
}

DrinfeldImage drinfeld_from_exp(const ExpSeries& e, const QuadElem& g) {
    const int D = deg_at_inf1(g);
    if (D <= 0) throw DomainError("g must be nonconstant");
    const int K = static_cast<int>(e.c.size()) - 1;
    if (K < D) throw PrecisionError("z_bound too small: need q^" + std::to_string(D) + " < z_bound");
    std::int64_t rel = 0;
    for (const auto& c : e.c) rel = std::max(rel, c.rel_prec());
    const LaurentSeries g0 = g.iota1(-D + rel + 8);
    std::vector<LaurentSeries> gs{g0};
    for (int k = 1; k <= K; ++k) {
        LaurentSeries acc = e.c[k] * (g0.frobenius(static_cast<unsigned>(k)) - g0);
        for (int j = 1; j < k; ++j) acc = acc - gs[j] * e.c[k - j].frobenius(static_cast<unsigned>(j));
        if (k > D && !acc.is_zero())
            throw VerificationError("rho_g has a nonzero tau^" + std::to_string(k) + " coefficient beyond deg g = " + std::to_string(D));
        gs.push_back(std::move(acc));
    }
    if (gs[D].is_zero()) throw PrecisionError("leading coefficient of rho_g is zero to precision");
    gs.erase(gs.begin() + D + 1, gs.end());
    DrinfeldImage img{g, SkewLaurent(g0.field(), gs), std::nullopt};
    img.residual = functional_eq_residual(e, img.rho, e.z_bound);
    return img;
}

Residual functional_eq_residual(const ExpSeries& e, const SkewLaurent& rho, int z_bound) {
    if (rho.is_zero()) throw DomainError("rho is zero");
    const std::int64_t q = rho.field()->q();
    const LaurentSeries& g0 = rho.coeff(0);
    Residual out{std::numeric_limits<std::int64_t>::max(), -1};
    std::int64_t qk = 1;
    for (int k = 0; k < static_cast<int>(e.c.size()) && qk < z_bound; ++k, qk *= q) {
        std::vector<LaurentSeries> terms{e.c[k] * g0.frobenius(static_cast<unsigned>(k))};
        LaurentSeries diff = terms[0];
        for (int j = 0; j <= std::min(k, rho.degree()); ++j) {
            terms.push_back(rho.coeff(j) * e.c[k - j].frobenius(static_cast<unsigned>(j)));
            diff = diff - terms.back();
        }
        std::int64_t scale = std::numeric_limits<std::int64_t>::max();
        for (const auto& t : terms)
            if (!t.is_zero()) scale = std::min(scale, t.val());
        const std::int64_t ex = (diff.is_zero() ? diff.prec() : diff.val()) - scale;
        if (ex < out.exponent) out = Residual{ex, k};
    }
    return out;
}

}  // namespace quantj
