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

#ifndef QUANTJ_ZETA_HPP
#define QUANTJ_ZETA_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "quantj/lattice.hpp"

namespace quantj {

/// How a zeta sum visits a lattice.
///  Goss: closed-form degree-block sums through the exponential of the lower rows.
///  EnumerateSerial / EnumerateParallel: every element, Gray-code order within a block.
enum class ZetaKernel { Goss, EnumerateSerial, EnumerateParallel };
std::string to_string(ZetaKernel k);

struct ZetaValue {
    int n = 0;
    std::string lattice_id;
    LaurentSeries value;
    int degree_cutoff = 0;  // largest row degree that entered the sum
    ZetaKernel kernel = ZetaKernel::Goss;
};

/// Sum of iota_1(x)^{-n} over the sign-1 elements of L, correct to `rel_prec` coefficients
/// past the leading term g_min^{-n}. The reported precision may be lower only when L's
/// bound is too small; then PrecisionError is thrown.
/// Requires (q - 1) | n.
ZetaValue zeta_lattice(const FilteredBasis& L, int n, std::int64_t rel_prec, ZetaKernel kernel = ZetaKernel::Goss);

/// Same sum for any n >= 1, to absolute precision abs_prec (or the largest precision the
/// bound of L certifies, whichever is smaller).
LaurentSeries sign_one_power_sum(const FilteredBasis& L, int n, std::int64_t abs_prec, ZetaKernel kernel = ZetaKernel::Goss,
                                 int* degree_cutoff = nullptr);

/// Builds the filtered basis of one lattice at a requested bound.
using LatticeProvider = std::function<FilteredBasis(int bound)>;
/// zeta_lattice with the bound of the lattice raised (doubling) until it suffices.
ZetaValue zeta_adaptive(const LatticeProvider& lattice, int initial_bound, int n, std::int64_t rel_prec,
                        ZetaKernel kernel = ZetaKernel::Goss);

/// Lowercase hex SHA-256.
std::string content_hash(const std::string& data);
/// Content hash of the ambient description, bound and rows.
std::string lattice_id(const FilteredBasis& L);

struct JValue {
    LaurentSeries value;
    std::string provenance;
    std::int64_t zeta_prec = 0;  // relative precision of the zeta values used
};

/// The common denominator 1/(T^q - T) - (T^{q^2} - T)/(T^q - T)^{q+1} J and its inverse.
LaurentSeries j_from_J(const FieldPtr& field, const LaurentSeries& J);

/// J = zeta(q^2 - 1)/zeta(q - 1)^{q+1} over the ideal, P relative coefficients.
JValue J_of_ideal(const IdealGens& I, std::int64_t P);
/// j(I) to P relative coefficients; the zeta precision is raised until the cancellation
/// in the denominator leaves P coefficients. Throws PrecisionError past the cap.
JValue j_of_ideal(const IdealGens& I, std::int64_t P);

struct EpsForms {
    int N = 0, l = 0;
    LaurentSeries g, delta, j, J;  // J includes (T^{q^2} - T)/(T^q - T)^{q+1}
    LaurentSeries j_via_J;
    std::int64_t zeta_prec = 0;
};
/// g_eps, Delta_eps, j_eps = g^{q+1}/Delta and J_eps over Lambda_eps, eps = q^{-Nd-l};
/// j is returned with P relative coefficients.
EpsForms g_delta_j_eps(const QuadDescPtr& desc, int N, int l, std::int64_t P);

struct QuantumBranch {
    int l = 0;
    std::vector<std::pair<int, LaurentSeries>> sequence;  // (N, j_eps)
    bool converged = false;
    int N_stable = -1;  // first N of the agreeing run
    bool confirmed = false;  // a third consecutive N agreed as well
    std::optional<LaurentSeries> limit;
};

struct QuantumJResult {
    std::int64_t P = 0;
    std::vector<QuantumBranch> branches;
    /// Distinct limits to precision P with multiplicities.
    std::vector<std::pair<LaurentSeries, int>> limit_set;
};

/// Equal valuation and equal first P coefficients.
bool agree_to(const LaurentSeries& a, const LaurentSeries& b, std::int64_t P);

/// For each l: j_eps for N = N0, N0+1, ... until two consecutive values agree to P
/// coefficients (plus a third when N_max allows; a disagreement restarts the run).
/// Throws UndecidableError if no branch converges.
QuantumJResult quantum_j(const QuadDescPtr& desc, std::int64_t P, int N_max, int N0 = 1);

/// Multiset of values with multiplicities, compared to precision P.
std::vector<std::pair<LaurentSeries, int>> dedupe(const std::vector<LaurentSeries>& values, std::int64_t P);
bool same_multiset(const std::vector<LaurentSeries>& a, const std::vector<LaurentSeries>& b, std::int64_t P);

struct ProductResult {
    LaurentSeries from_branches;
    LaurentSeries from_ideals;
    bool multiset_equal = false;
    bool product_equal = false;
};
/// Product over the d branch limits against the product of j(a_i), i = 0..d-1.
ProductResult quantum_product(const QuantumJResult& qj, const std::vector<LaurentSeries>& ideal_js, std::int64_t P);

struct Recognized {
    RatFn x, y;  // s = x + y f to precision
    std::int64_t checked_to = 0;
};
/// Searches p0, p1, q0 of degree <= height with s q0 - p0 - p1 iota_1(f) = 0 to the
/// precision of s. Candidates are consistent to precision only. nullopt = no relation.
/// Throws PrecisionError when the linear system is underdetermined.
std::optional<Recognized> recognize_algebraic(const LaurentSeries& s, const QuadDescPtr& desc, int height);

}  // namespace quantj

#endif
