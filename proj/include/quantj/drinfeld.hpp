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

#ifndef QUANTJ_DRINFELD_HPP
#define QUANTJ_DRINFELD_HPP

#include <optional>
#include <string>
#include <vector>

#include "quantj/skew.hpp"
#include "quantj/zeta.hpp"

namespace quantj {

/// rho_m for the Carlitz module, rho_T = T + tau.
SkewRat carlitz(const Poly& m);

/// Coefficients 1/D_k of the Carlitz exponential, D_k = (T^{q^k} - T) D_{k-1}^q.
std::vector<RatFn> carlitz_exp_coeffs(const FieldPtr& field, int K);

/// e(z) = sum_k c_k z^{q^k} of an unnormalized lattice, c_0 = 1.
struct ExpSeries {
    std::vector<LaurentSeries> c;            // c_0 .. c_K, q^K < z_bound
    std::vector<LaurentSeries> power_sums;   // E(1) .. E(z_bound - 1) over nonzero lattice elements
    std::string lattice_id;
    int z_bound = 0;
    std::int64_t prec = 0;  // smallest relative precision among c_1 .. c_K
};

/// Power sums E(m), then 1/(1 - sum E(m) z^m) = e(z)/z. Every coefficient away from
/// z^{q^k - 1} must vanish to precision (VerificationError otherwise). The working
/// precision is raised until each c_k carries P + 4 coefficients.
ExpSeries exp_from_lattice(const FilteredBasis& L, std::int64_t P, int z_bound);
/// exp_from_lattice with the lattice bound raised until the power sums are certified.
ExpSeries exp_adaptive(const LatticeProvider& lattice, int initial_bound, std::int64_t P, int z_bound);

struct Residual {
    /// The worst equation satisfies |lhs - rhs| <= q^{-exponent} max|term|.
    std::int64_t exponent = 0;
    int worst_k = -1;
    bool below(std::int64_t P, std::int64_t guard = 4) const { return exponent >= P - guard; }
};

struct DrinfeldImage {
    QuadElem g;
    SkewLaurent rho;
    std::optional<Residual> residual;
};

/// Solves c_k g_0^{q^k} = sum_{j<=k} g_j c_{k-j}^{q^j} for g_1, g_2, ... with g_0 = iota_1(g).
/// Coefficients past deg g must vanish to precision (VerificationError with the index
/// otherwise); the result has tau-degree deg g.
DrinfeldImage drinfeld_from_exp(const ExpSeries& e, const QuadElem& g);

/// Compares e(g z) with rho_g(e(z)) coefficientwise at z^{q^k}, q^k < z_bound.
Residual functional_eq_residual(const ExpSeries& e, const SkewLaurent& rho, int z_bound);

template <class C>
struct StarAction {
    SkewPoly<C> rho_ideal;
    std::vector<SkewPoly<C>> starred;  // X with rho_ideal rho_a = X rho_ideal
};

/// rho_I = generator of the left ideal of the images of I's generators; each image of a
/// ring generator is conjugated through it by right division with zero remainder.
template <class C>
StarAction<C> star_action(const std::vector<SkewPoly<C>>& ring_images, const std::vector<SkewPoly<C>>& ideal_images) {
    StarAction<C> out{left_ideal_generator(ideal_images), {}};
    for (const auto& rho : ring_images) {
        auto [x, r] = right_divmod(out.rho_ideal * rho, out.rho_ideal);
        if (!r.is_zero()) throw VerificationError("rho_I rho_a is not right-divisible by rho_I: remainder " + r.to_string());
        out.starred.push_back(std::move(x));
    }
    return out;
}

}  // namespace quantj

#endif
