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

#ifndef QUANTJ_LATTICE_HPP
#define QUANTJ_LATTICE_HPP

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "quantj/linalg.hpp"
#include "quantj/quadfield.hpp"

namespace quantj {

class OrderDesc;
using OrderPtr = std::shared_ptr<const OrderDesc>;

/// The order A_F = F_q[F, FT, ..., FT^{d-1}] of a unit-like generator F in K with
/// F^2 = a F + b, deg a = d. Usually F = f; for an instance declared as f = f0^k the same
/// order is also available inside the field presented by f0.
class OrderDesc {
   public:
    static OrderPtr standard(QuadDescPtr desc);
    /// F = f0^k where f0 generates `desc0`; a and b are read off trace and norm of F.
    static OrderPtr power_of(QuadDescPtr desc0, unsigned k);

    const QuadDescPtr& desc() const noexcept { return desc_; }
    const QuadElem& gen() const noexcept { return gen_; }
    const Poly& a() const noexcept { return a_; }
    Elem b() const noexcept { return b_; }
    int d() const noexcept { return a_.degree(); }
    const FieldPtr& field() const noexcept { return desc_->field(); }
    std::string describe() const;

   private:
    OrderDesc(QuadDescPtr desc, QuadElem gen, Poly a, Elem b)
        : desc_(std::move(desc)), gen_(std::move(gen)), a_(std::move(a)), b_(b) {}
    QuadDescPtr desc_;
    QuadElem gen_;
    Poly a_;
    Elem b_;
};

struct AfBasisElem {
    int l, m;
    int degree;
    QuadElem elem;  // F^l T^m reduced to x + y f
};

/// All F^l T^m (l >= 1, 0 <= m < d) and 1 with degree l d + m <= deg_bound, by degree.
std::vector<AfBasisElem> af_basis(const OrderDesc& order, int deg_bound);

class Ambient;
using AmbientPtr = std::shared_ptr<const Ambient>;

struct Membership {
    bool member = false;
    Coords coords;                       // on success
    std::optional<int> failing_degree;  // on refusal; -1 = nonzero remainder of negative degree
};

/// A graded F_q basis {e_k} of a discrete subring of K with exactly one element per
/// degree in a fixed set: A_F (degrees 0 and >= d) or F_q[T] (all degrees >= 0).
/// Lattices are stored as coordinate vectors over it.
class Ambient {
   public:
    enum class Kind { Order, PolyRing };
    static AmbientPtr of_order(OrderPtr order);
    static AmbientPtr poly_ring(QuadDescPtr desc);

    Kind kind() const noexcept { return kind_; }
    const QuadDescPtr& desc() const noexcept { return desc_; }
    const OrderPtr& order() const noexcept { return order_; }
    const FieldPtr& field() const noexcept { return desc_->field(); }

    bool has_degree(int k) const noexcept;
    QuadElem element(int k) const;
    Elem sgn(int k) const;
    LaurentSeries series(int k, std::int64_t prec) const;

    QuadElem combine(const Coords& c) const;
    LaurentSeries combine_series(const Coords& c, std::int64_t prec) const;

    /// Exact decision with coordinates. `certify = false` skips the final exact check and
    /// is only valid when z is known to lie in the ambient ring.
    Membership coordinates(const QuadElem& z, bool certify = true) const;

    bool same_as(const Ambient& o) const noexcept;

   private:
    Ambient(Kind kind, QuadDescPtr desc, OrderPtr order) : kind_(kind), desc_(std::move(desc)), order_(std::move(order)) {}
    void ensure(int k) const;

    Kind kind_;
    QuadDescPtr desc_;
    OrderPtr order_;
    mutable std::mutex mu_;
    mutable std::vector<Poly> x_, y_;  // e_k = x_k + y_k f, filled on demand
    mutable std::vector<Poly> s_, t_;  // F^l = s_l + t_l F
    mutable std::vector<LaurentSeries> ser1_;  // series(k, 1), for coordinates()
};

/// Degree-filtered basis of a lattice: the unique reduced echelon basis of its elements
/// of degree <= bound, one row per occurring degree, each row of sign 1.
struct FilteredBasis {
    AmbientPtr ambient;
    int bound = 0;
    std::vector<Coords> rows;  // ascending degree
    int slack_used = 0;

    std::size_t size() const noexcept { return rows.size(); }
    int degree(std::size_t i) const { return top_index(rows.at(i)); }
    std::vector<int> degrees() const;
    QuadElem element(std::size_t i) const { return ambient->combine(rows.at(i)); }
    LaurentSeries series(std::size_t i, std::int64_t prec) const { return ambient->combine_series(rows.at(i), prec); }
    /// Row multipliers expressing v, or nullopt if v is not in the span.
    std::optional<Coords> coordinates(const Coords& v) const;
    FilteredBasis truncated(int new_bound) const;
    /// Same ambient, bound and rows.
    friend bool operator==(const FilteredBasis& a, const FilteredBasis& b);
};

/// Canonical basis of the span of `e` restricted to degree <= bound.
FilteredBasis filtered_from_echelon(const AmbientPtr& ambient, const Echelon& e, int bound);

struct IdealGens {
    AmbientPtr ring;  // Ambient::of_order
    std::vector<QuadElem> gens;
    std::string to_string() const;
};

/// a_i = (F, F T, ..., F T^i), 0 <= i <= d - 1; a_0 = (F).
IdealGens ideal_a(const AmbientPtr& ring, int i);
IdealGens unit_ideal(const AmbientPtr& ring);
IdealGens principal_ideal(const AmbientPtr& ring, const QuadElem& z);

Membership membership(const QuadElem& z, const AmbientPtr& ring);

struct SlackPolicy {
    int initial = 0;
    int window = 0;  // 0: 2d
    int cap = 0;     // 0: 8d + 32
};

/// Span of {beta g : beta in af_basis, g in gens} restricted to degree <= bound. The
/// products are generated up to degree bound + slack; slack grows until the restricted
/// dimension is unchanged for `window` consecutive steps. Throws UndecidableError if
/// that does not happen below the cap, InputError if a generator is not in A_F.
FilteredBasis ideal_filtered_basis(const IdealGens& I, int bound, const SlackPolicy& policy = {});

/// Pairwise products, scaled to sign 1, duplicates dropped.
IdealGens ideal_product(const IdealGens& I, const IdealGens& J);
IdealGens ideal_power(const IdealGens& I, unsigned n);

struct Containment {
    bool contained = false;
    int bound = 0;
    /// Row multipliers in the target's filtered basis, one per tested element.
    std::vector<Coords> coords;
    std::optional<std::size_t> failing_index;
};

/// Throws UndecidableError when deg z > bound.
Containment ideal_contains(const IdealGens& I, const QuadElem& z, int bound);
Containment ideal_contains_all(const IdealGens& I, const std::vector<QuadElem>& zs, int bound);

struct EqualityCert {
    bool equal = false;
    int bound = 0;
    Containment j_in_i, i_in_j;
};

/// Max generator degree over both sides plus 2d.
int default_bound(const IdealGens& I, const IdealGens& J);
/// Mutual containment at `bound` (default_bound if absent), doubling up to 3 times while
/// a filtered basis fails to stabilize.
EqualityCert ideal_equal(const IdealGens& I, const IdealGens& J, std::optional<int> bound = std::nullopt);

/// I* = denom^{-1} numer with numer = {alpha in A_F : alpha h in denom A_F for every
/// generator h}, denom the first generator. numer is exact up to its bound.
struct DualIdeal {
    QuadElem denom;
    FilteredBasis numer;
    QuadElem element(std::size_t i) const { return numer.element(i) / denom; }
};
DualIdeal ideal_dual(const IdealGens& I, int bound);

struct InvertibilityCert {
    bool certified = false;
    int bound = 0;
    /// Elements of I I* whose sum is 1 (checked exactly).
    std::vector<QuadElem> terms;
};
InvertibilityCert invertibility_certificate(const IdealGens& I, int bound);

struct TwoGenerator {
    QuadElem g, h;
    EqualityCert cert;
    int candidates_tried = 0;
};
/// Searches h among filtered-basis combinations (lowest degree first) with
/// (seed, h) = I certified. nullopt when the search is exhausted at this bound.
std::optional<TwoGenerator> two_generator(const IdealGens& I, const QuadElem& seed, int bound, int budget = 4096);

/// R = A_f seen inside A = A_{f0}, f = f0^k, both in the field presented by f0.
struct OrderPair {
    OrderPtr R, A;
    AmbientPtr R_amb, A_amb;
};
/// Throws InputError unless every generator of R is certified to lie in A.
OrderPair make_order_pair(const QuadDescPtr& desc0, unsigned k);
/// {x in A : x A subset R}, degree <= bound, in R coordinates.
FilteredBasis conductor(const OrderPair& pair, int bound);
/// I A in A coordinates.
FilteredBasis expansion(const OrderPair& pair, const IdealGens& I, int bound);
/// J cap R in R coordinates, for J given in A coordinates.
FilteredBasis contraction(const OrderPair& pair, const FilteredBasis& J);
/// 1 in I + conductor.
bool prime_to_conductor(const OrderPair& pair, const IdealGens& I, int bound);

struct EpsilonLattice {
    int N = 0, l = 0;
    FilteredBasis basis;
};

/// Closed form span(B(N)_{d-1-l}, B(N+1), ...) with B(i) = {T^{d-1} Q_i, ..., Q_i}.
EpsilonLattice epsilon_lattice(const QuadDescPtr& desc, int N, int l, int bound);

enum class BruteMethod { Auto, Enumerate, Kernel };
/// {c in F_q[T] : deg c <= bound, ||c f|| < q^{-eps_exp}}: by listing all q^{bound+1}
/// polynomials, or as the kernel of c -> (coefficients of c f at u^1..u^eps_exp). Auto
/// enumerates when q^{bound+1} <= 2^16.
FilteredBasis epsilon_lattice_bruteforce(const QuadDescPtr& desc, int eps_exp, int bound, BruteMethod method = BruteMethod::Auto);

}  // namespace quantj

#endif
