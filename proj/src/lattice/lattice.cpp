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

#include "quantj/lattice.hpp"

#include <algorithm>

#include "quantj/errors.hpp"

namespace quantj {

OrderPtr OrderDesc::standard(QuadDescPtr desc) {
    QuadElem f = QuadElem::gen(desc);
    Poly a = desc->a();
    const Elem b = desc->b();
    return OrderPtr(new OrderDesc(std::move(desc), std::move(f), std::move(a), b));
}

OrderPtr OrderDesc::power_of(QuadDescPtr desc0, unsigned k) {
    if (k == 0) throw InputError("exponent k must be >= 1");
    QuadElem F = QuadElem::gen(desc0).pow(k);
    const RatFn tr = F.trace();
    const RatFn nm = F.norm();
    if (!tr.is_polynomial() || !nm.is_polynomial() || nm.num().degree() != 0)
        throw InputError("f0^k does not satisfy F^2 = aF + b with b constant");
    const Elem b = desc0->field()->neg(nm.num().coeff(0));
    return OrderPtr(new OrderDesc(std::move(desc0), std::move(F), tr.num(), b));
}

std::string OrderDesc::describe() const {
    return "A_F, F = " + gen_.to_string() + ", F^2 = (" + a_.to_string() + ")*F + " + field()->format(b_);
}

std::vector<AfBasisElem> af_basis(const OrderDesc& order, int deg_bound) {
    if (deg_bound < 0) throw DomainError("degree bound must be >= 0");
    const int d = order.d();
    const FieldPtr& F = order.field();
    const QuadDescPtr& D = order.desc();
    std::vector<AfBasisElem> out;
    out.push_back({0, 0, 0, QuadElem::one(D)});
    // F^l = s_l + t_l F
    Poly s = Poly::constant(F, 1), t(F);
    for (int l = 1; l * d <= deg_bound; ++l) {
        Poly s_next = t.scaled(order.b());
        Poly t_next = s + order.a() * t;
        s = std::move(s_next);
        t = std::move(t_next);
        const QuadElem Fl = QuadElem::from_poly(D, s) + order.gen().scaled(RatFn(t));
        for (int m = 0; m < d && l * d + m <= deg_bound; ++m)
            out.push_back({l, m, l * d + m, Fl.scaled(RatFn(Poly::monomial(F, 1, m)))});
    }
    return out;
}

AmbientPtr Ambient::of_order(OrderPtr order) {
    QuadDescPtr desc = order->desc();
    const QuadElem& g = order->gen();
    if (!g.is_integral_coords()) throw InputError("order generator must have polynomial coordinates");
    return AmbientPtr(new Ambient(Kind::Order, std::move(desc), std::move(order)));
}

AmbientPtr Ambient::poly_ring(QuadDescPtr desc) { return AmbientPtr(new Ambient(Kind::PolyRing, std::move(desc), nullptr)); }

bool Ambient::has_degree(int k) const noexcept {
    if (k < 0) return false;
    if (kind_ == Kind::PolyRing) return true;
    return k == 0 || k >= order_->d();
}

bool Ambient::same_as(const Ambient& o) const noexcept {
    if (this == &o) return true;
    if (kind_ != o.kind_ || !desc_->same_as(*o.desc_)) return false;
    if (kind_ == Kind::PolyRing) return true;
    return order_->gen() == o.order_->gen();
}

void Ambient::ensure(int k) const {
    if (static_cast<int>(x_.size()) > k) return;
    const FieldPtr& F = field();
    const int old = static_cast<int>(x_.size());
    x_.resize(static_cast<std::size_t>(k) + 1, Poly(F));
    y_.resize(static_cast<std::size_t>(k) + 1, Poly(F));
    if (kind_ == Kind::PolyRing) {
        for (int j = old; j <= k; ++j) x_[j] = Poly::monomial(F, 1, j);
        return;
    }
    const OrderDesc& R = *order_;
    const int d = R.d();
    if (s_.empty()) {
        s_.push_back(Poly::constant(F, 1));
        t_.push_back(Poly(F));
    }
    while (static_cast<int>(s_.size()) <= k / d) {
        const Poly& s = s_.back();
        const Poly& t = t_.back();
        Poly s_next = t.scaled(R.b());
        Poly t_next = s + R.a() * t;
        s_.push_back(std::move(s_next));
        t_.push_back(std::move(t_next));
    }
    const Poly gx = R.gen().x().num(), gy = R.gen().y().num();
    for (int j = old; j <= k; ++j) {
        if (!has_degree(j)) continue;
        const int l = j / d, m = j % d;
        if (j == 0) {
            x_[0] = Poly::constant(F, 1);
            continue;
        }
        x_[j] = (s_[l] + t_[l] * gx).shifted(m);
        y_[j] = (t_[l] * gy).shifted(m);
    }
}

QuadElem Ambient::element(int k) const {
    if (!has_degree(k)) throw DomainError("no basis element of degree " + std::to_string(k));
    std::lock_guard<std::mutex> lock(mu_);
    ensure(k);
    return QuadElem::from_polys(desc_, x_[k], y_[k]);
}

Elem Ambient::sgn(int k) const {
    if (!has_degree(k)) throw DomainError("no basis element of degree " + std::to_string(k));
    if (kind_ == Kind::PolyRing || k == 0) return 1;
    return field()->pow(order_->a().lc(), static_cast<std::uint64_t>(k / order_->d()));
}

LaurentSeries Ambient::series(int k, std::int64_t prec) const { return element(k).iota1(prec); }

QuadElem Ambient::combine(const Coords& c) const {
    const FieldPtr& F = field();
    Poly x(F), y(F);
    std::lock_guard<std::mutex> lock(mu_);
    ensure(std::max(0, top_index(c)));
    for (int k = 0; k <= top_index(c); ++k) {
        if (c[k] == 0) continue;
        if (!has_degree(k)) throw DomainError("coordinate at missing degree " + std::to_string(k));
        x += x_[k].scaled(c[k]);
        y += y_[k].scaled(c[k]);
    }
    return QuadElem::from_polys(desc_, x, y);
}

LaurentSeries Ambient::combine_series(const Coords& c, std::int64_t prec) const { return combine(c).iota1(prec); }

Membership Ambient::coordinates(const QuadElem& z, bool certify) const {
    Membership out;
    if (!z.desc()->same_as(*desc_)) throw InputError("element of a different field");
    if (z.is_zero()) {
        out.member = true;
        return out;
    }
    if (certify && !z.is_integral_coords()) {
        out.failing_degree = -1;
        return out;
    }
    // Greedy top-down elimination on the part of iota_1(z) at exponents <= 0; the ambient
    // has no nonzero element of negative degree, so what is left must vanish exactly.
    LaurentSeries s = z.iota1(1);
    while (!s.is_zero()) {
        const int k = static_cast<int>(-s.val());
        if (!has_degree(k)) {
            out.failing_degree = k;
            out.coords.clear();
            return out;
        }
        const Elem c = field()->div(s.coeffs().front(), sgn(k));
        if (out.coords.size() <= static_cast<std::size_t>(k)) out.coords.resize(static_cast<std::size_t>(k) + 1, 0);
        out.coords[k] = c;
        const LaurentSeries e = [&] {
            std::lock_guard<std::mutex> lock(mu_);
            if (ser1_.size() <= static_cast<std::size_t>(k)) {
                ensure(k);
                while (ser1_.size() <= static_cast<std::size_t>(k)) {
                    const int j = static_cast<int>(ser1_.size());
                    ser1_.push_back(has_degree(j) ? QuadElem::from_polys(desc_, x_[j], y_[j]).iota1(1) : LaurentSeries::zero(field(), 1));
                }
            }
            return ser1_[k];
        }();
        s -= e.scaled(c);
    }
    if (certify && !(combine(out.coords) == z)) {
        out.failing_degree = -1;
        out.coords.clear();
        return out;
    }
    out.member = true;
    return out;
}

std::vector<int> FilteredBasis::degrees() const {
    std::vector<int> out;
    out.reserve(rows.size());
    for (const auto& r : rows) out.push_back(top_index(r));
    return out;
}

std::optional<Coords> FilteredBasis::coordinates(const Coords& v_in) const {
    const Field& F = *ambient->field();
    Coords v = v_in;
    Coords mult(rows.size(), 0);
    for (std::size_t i = rows.size(); i-- > 0;) {
        const int p = top_index(rows[i]);
        if (p >= static_cast<int>(v.size()) || v[p] == 0) continue;
        const Elem m = F.div(v[p], rows[i][p]);
        mult[i] = m;
        axpy(F, v, F.neg(m), rows[i]);
    }
    if (top_index(v) >= 0) return std::nullopt;
    return mult;
}

FilteredBasis FilteredBasis::truncated(int new_bound) const {
    FilteredBasis out = *this;
    out.bound = std::min(bound, new_bound);
    while (!out.rows.empty() && top_index(out.rows.back()) > out.bound) out.rows.pop_back();
    return out;
}

bool operator==(const FilteredBasis& a, const FilteredBasis& b) {
    return a.bound == b.bound && a.rows == b.rows && a.ambient->same_as(*b.ambient);
}

FilteredBasis filtered_from_echelon(const AmbientPtr& ambient, const Echelon& e, int bound) {
    FilteredBasis out;
    out.ambient = ambient;
    out.bound = bound;
    const Field& F = *ambient->field();
    for (auto row : e.rref_upto(bound)) {
        const int p = top_index(row);
        const Elem s = F.inv(ambient->sgn(p));
        for (auto& x : row) x = F.mul(x, s);
        out.rows.push_back(std::move(row));
    }
    return out;
}

std::string IdealGens::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < gens.size(); ++i) s += (i ? ", " : "") + gens[i].to_string();
    return s + ")";
}

namespace {

const OrderDesc& order_of(const AmbientPtr& ring) {
    if (!ring || ring->kind() != Ambient::Kind::Order) throw InputError("ideal ambient must be an order");
    return *ring->order();
}

Coords certified_coords(const AmbientPtr& ring, const QuadElem& z, const char* what) {
    Membership m = ring->coordinates(z);
    if (!m.member) throw InputError(std::string(what) + " " + z.to_string() + " is not in the order");
    return std::move(m.coords);
}

QuadElem sign_one(const QuadElem& z) {
    const Elem s = z.iota1(1).sgn();
    return z.scaled(z.desc()->field()->inv(s));
}

}  // namespace

IdealGens ideal_a(const AmbientPtr& ring, int i) {
    const OrderDesc& R = order_of(ring);
    if (i < 0 || i >= R.d()) throw DomainError("ideal index must lie in [0, d-1]");
    IdealGens I{ring, {}};
    for (int m = 0; m <= i; ++m) I.gens.push_back(R.gen().scaled(RatFn(Poly::monomial(R.field(), 1, m))));
    return I;
}

IdealGens unit_ideal(const AmbientPtr& ring) { return IdealGens{ring, {QuadElem::one(ring->desc())}}; }

IdealGens principal_ideal(const AmbientPtr& ring, const QuadElem& z) {
    if (z.is_zero()) throw DomainError("zero ideal");
    return IdealGens{ring, {z}};
}

Membership membership(const QuadElem& z, const AmbientPtr& ring) { return ring->coordinates(z); }

FilteredBasis ideal_filtered_basis(const IdealGens& I, int bound, const SlackPolicy& policy) {
    const OrderDesc& R = order_of(I.ring);
    if (I.gens.empty()) throw DomainError("ideal needs at least one generator");
    const int d = R.d();
    std::vector<int> gdeg;
    int min_deg = INT32_MAX;
    for (const auto& g : I.gens) {
        if (g.is_zero()) {
            gdeg.push_back(-1);
            continue;
        }
        gdeg.push_back(top_index(certified_coords(I.ring, g, "generator")));
        min_deg = std::min(min_deg, gdeg.back());
    }
    if (min_deg == INT32_MAX) throw DomainError("zero ideal");
    if (bound < min_deg) throw DomainError("bound " + std::to_string(bound) + " below smallest generator degree " + std::to_string(min_deg));
    const int window = policy.window > 0 ? policy.window : 2 * d;
    const int cap = policy.cap > 0 ? policy.cap : 8 * d + 32;

    Echelon E(I.ring->field());
    std::vector<int> next(I.gens.size(), 0);
    int slack = std::max(0, policy.initial);
    int stable = 0;
    std::size_t prev_rank = 0;
    bool first = true;
    while (true) {
        for (std::size_t j = 0; j < I.gens.size(); ++j) {
            if (gdeg[j] < 0) continue;
            for (; next[j] + gdeg[j] <= bound + slack; ++next[j]) {
                if (!I.ring->has_degree(next[j])) continue;
                const QuadElem prod = I.ring->element(next[j]) * I.gens[j];
                E.insert(I.ring->coordinates(prod, false).coords);
            }
        }
        const std::size_t rank = E.rank_upto(bound);
        if (!first && rank == prev_rank) {
            if (++stable >= window) break;
        } else {
            stable = 0;
        }
        first = false;
        prev_rank = rank;
        if (slack - policy.initial >= cap)
            throw UndecidableError("filtered basis did not stabilize within slack cap " + std::to_string(cap));
        ++slack;
    }
    FilteredBasis out = filtered_from_echelon(I.ring, E, bound);
    out.slack_used = slack;
    return out;
}

IdealGens ideal_product(const IdealGens& I, const IdealGens& J) {
    if (!I.ring->same_as(*J.ring)) throw InputError("ideals of different orders");
    IdealGens out{I.ring, {}};
    for (const auto& g : I.gens)
        for (const auto& h : J.gens) {
            QuadElem z = g * h;
            if (z.is_zero()) continue;
            z = sign_one(z);
            if (std::find(out.gens.begin(), out.gens.end(), z) == out.gens.end()) out.gens.push_back(std::move(z));
        }
    if (out.gens.empty()) throw DomainError("zero ideal");
    return out;
}

IdealGens ideal_power(const IdealGens& I, unsigned n) {
    IdealGens out = unit_ideal(I.ring);
    for (unsigned i = 0; i < n; ++i) out = ideal_product(out, I);
    return out;
}

Containment ideal_contains_all(const IdealGens& I, const std::vector<QuadElem>& zs, int bound) {
    Containment out;
    out.bound = bound;
    std::vector<Coords> zc;
    for (std::size_t i = 0; i < zs.size(); ++i) {
        Membership m = I.ring->coordinates(zs[i]);
        if (!m.member) {
            out.failing_index = i;
            return out;
        }
        if (top_index(m.coords) > bound)
            throw UndecidableError("element of degree " + std::to_string(top_index(m.coords)) + " above bound " + std::to_string(bound));
        zc.push_back(std::move(m.coords));
    }
    int min_deg = INT32_MAX;
    for (const auto& g : I.gens)
        if (!g.is_zero()) min_deg = std::min(min_deg, deg_at_inf1(g));
    const FilteredBasis B = ideal_filtered_basis(I, std::max(bound, min_deg));
    for (std::size_t i = 0; i < zc.size(); ++i) {
        auto c = B.coordinates(zc[i]);
        if (!c) {
            out.failing_index = i;
            out.coords.clear();
            return out;
        }
        out.coords.push_back(std::move(*c));
    }
    out.contained = true;
    return out;
}

Containment ideal_contains(const IdealGens& I, const QuadElem& z, int bound) { return ideal_contains_all(I, {z}, bound); }

int default_bound(const IdealGens& I, const IdealGens& J) {
    int m = 0;
    for (const auto* X : {&I, &J})
        for (const auto& g : X->gens)
            if (!g.is_zero()) m = std::max(m, deg_at_inf1(g));
    return m + 2 * order_of(I.ring).d();
}

EqualityCert ideal_equal(const IdealGens& I, const IdealGens& J, std::optional<int> bound) {
    int B = bound ? *bound : default_bound(I, J);
    for (int attempt = 0;; ++attempt) {
        try {
            EqualityCert out;
            out.bound = B;
            out.j_in_i = ideal_contains_all(I, J.gens, B);
            out.i_in_j = ideal_contains_all(J, I.gens, B);
            out.equal = out.j_in_i.contained && out.i_in_j.contained;
            return out;
        } catch (const UndecidableError&) {
            if (attempt >= 3) throw;
            B *= 2;
        }
    }
}

DualIdeal ideal_dual(const IdealGens& I, int bound) {
    const auto& ring = I.ring;
    order_of(ring);
    if (I.gens.empty() || I.gens.front().is_zero()) throw DomainError("dual needs a nonzero first generator");
    const QuadElem& g = I.gens.front();
    const int dg = top_index(certified_coords(ring, g, "generator"));
    int maxh = 0;
    for (const auto& h : I.gens) maxh = std::max(maxh, top_index(certified_coords(ring, h, "generator")));
    const int top = bound + maxh;
    // g A_F is principal: its elements of degree <= top are spanned by g e_k.
    Echelon gA(ring->field());
    for (int k = 0; dg + k <= top; ++k)
        if (ring->has_degree(k)) gA.insert(ring->coordinates(ring->element(k) * g, false).coords);

    std::vector<int> ks;
    std::vector<Coords> images;
    const std::size_t block = static_cast<std::size_t>(top) + 1;
    for (int k = 0; k <= bound; ++k) {
        if (!ring->has_degree(k)) continue;
        const QuadElem e = ring->element(k);
        Coords v(block * I.gens.size(), 0);
        for (std::size_t j = 0; j < I.gens.size(); ++j) {
            const Coords r = gA.reduce(ring->coordinates(e * I.gens[j], false).coords);
            std::copy(r.begin(), r.end(), v.begin() + static_cast<std::ptrdiff_t>(j * block));
        }
        ks.push_back(k);
        images.push_back(std::move(v));
    }
    Echelon M(ring->field());
    for (const auto& x : kernel(ring->field(), images)) {
        Coords c(static_cast<std::size_t>(bound) + 1, 0);
        for (std::size_t i = 0; i < ks.size(); ++i) c[ks[i]] = x[i];
        M.insert(std::move(c));
    }
    return DualIdeal{g, filtered_from_echelon(ring, M, bound)};
}

InvertibilityCert invertibility_certificate(const IdealGens& I, int bound) {
    InvertibilityCert out;
    out.bound = bound;
    const DualIdeal dual = ideal_dual(I, bound);
    const QuadElem& g = dual.denom;
    IdealGens P{I.ring, {}};
    for (const auto& h : I.gens)
        for (std::size_t i = 0; i < dual.numer.size(); ++i) {
            QuadElem z = h * dual.numer.element(i);
            if (!z.is_zero() && std::find(P.gens.begin(), P.gens.end(), z) == P.gens.end()) P.gens.push_back(std::move(z));
        }
    if (P.gens.empty()) return out;
    const Coords cg = certified_coords(I.ring, g, "generator");
    int min_deg = INT32_MAX;
    for (const auto& z : P.gens) min_deg = std::min(min_deg, deg_at_inf1(z));
    // g can arise from cancellation among products of larger degree, so the basis is
    // built at least up to the smallest product degree and trimmed afterwards.
    const FilteredBasis B = ideal_filtered_basis(P, std::max(min_deg, top_index(cg)));
    const auto mult = B.coordinates(cg);
    if (!mult) return out;
    QuadElem sum = QuadElem::zero(I.ring->desc());
    for (std::size_t i = 0; i < mult->size(); ++i) {
        if ((*mult)[i] == 0) continue;
        QuadElem t = B.element(i).scaled((*mult)[i]) / g;
        sum = sum + t;
        out.terms.push_back(std::move(t));
    }
    if (!(sum == QuadElem::one(I.ring->desc()))) throw VerificationError("invertibility certificate does not sum to 1");
    out.certified = true;
    return out;
}

std::optional<TwoGenerator> two_generator(const IdealGens& I, const QuadElem& seed, int bound, int budget) {
    if (seed.is_zero()) throw DomainError("seed must be nonzero");
    if (!ideal_contains(I, seed, bound).contained) throw DomainError("seed " + seed.to_string() + " is not in the ideal");
    const FilteredBasis B = ideal_filtered_basis(I, bound);
    const Field& F = *I.ring->field();
    int tried = 0;
    auto attempt = [&](const QuadElem& h) -> std::optional<TwoGenerator> {
        ++tried;
        IdealGens J{I.ring, {seed}};
        if (!(h == seed)) J.gens.push_back(h);
        try {
            if (!ideal_contains_all(J, I.gens, bound).contained) return std::nullopt;
            EqualityCert cert = ideal_equal(I, J, bound);
            if (!cert.equal) return std::nullopt;
            return TwoGenerator{seed, h, std::move(cert), tried};
        } catch (const UndecidableError&) {
            return std::nullopt;
        }
    };
    if (auto r = attempt(seed)) return r;
    for (std::size_t r = 0; r < B.size() && tried < budget; ++r) {
        // h = row r + combination of lower rows, counter over F_q^r (digit i = coefficient of row i)
        std::vector<Elem> digits(r, 0);
        while (tried < budget) {
            Coords c = B.rows[r];
            for (std::size_t i = 0; i < r; ++i) axpy(F, c, digits[i], B.rows[i]);
            if (auto res = attempt(I.ring->combine(c))) return res;
            std::size_t i = 0;
            while (i < r && ++digits[i] == F.q()) digits[i++] = 0;
            if (i == r) break;
        }
    }
    return std::nullopt;
}

OrderPair make_order_pair(const QuadDescPtr& desc0, unsigned k) {
    OrderPair p;
    p.A = OrderDesc::standard(desc0);
    p.R = OrderDesc::power_of(desc0, k);
    p.A_amb = Ambient::of_order(p.A);
    p.R_amb = Ambient::of_order(p.R);
    for (int m = 0; m < p.R->d(); ++m) {
        const QuadElem g = p.R->gen().scaled(RatFn(Poly::monomial(desc0->field(), 1, m)));
        if (!p.A_amb->coordinates(g).member) throw InputError("A_f is not contained in A_{f0}: " + g.to_string());
    }
    return p;
}

namespace {

// R as a subspace of A, in A coordinates, up to degree top.
Echelon r_inside_a(const OrderPair& pair, int top) {
    Echelon E(pair.A->field());
    for (int k = 0; k <= top; ++k)
        if (pair.R_amb->has_degree(k)) E.insert(pair.A_amb->coordinates(pair.R_amb->element(k), false).coords);
    return E;
}

}  // namespace

FilteredBasis conductor(const OrderPair& pair, int bound) {
    const int d0 = pair.A->d(), d = pair.R->d();
    // A = R + span of the A-basis in degrees d0..d-1, so these and 1 generate A over R.
    std::vector<QuadElem> extra;
    for (int k = d0; k < d; ++k) extra.push_back(pair.A_amb->element(k));
    const int top = bound + d;
    const Echelon RA = r_inside_a(pair, top);
    std::vector<int> ks;
    std::vector<Coords> images;
    const std::size_t block = static_cast<std::size_t>(top) + 1;
    for (int k = 0; k <= bound; ++k) {
        if (!pair.R_amb->has_degree(k)) continue;
        const QuadElem x = pair.R_amb->element(k);
        Coords v(block * std::max<std::size_t>(extra.size(), 1), 0);
        for (std::size_t j = 0; j < extra.size(); ++j) {
            const Coords r = RA.reduce(pair.A_amb->coordinates(x * extra[j], false).coords);
            std::copy(r.begin(), r.end(), v.begin() + static_cast<std::ptrdiff_t>(j * block));
        }
        ks.push_back(k);
        images.push_back(std::move(v));
    }
    Echelon C(pair.R->field());
    for (const auto& x : kernel(pair.R->field(), images)) {
        Coords c(static_cast<std::size_t>(bound) + 1, 0);
        for (std::size_t i = 0; i < ks.size(); ++i) c[ks[i]] = x[i];
        C.insert(std::move(c));
    }
    return filtered_from_echelon(pair.R_amb, C, bound);
}

FilteredBasis expansion(const OrderPair& pair, const IdealGens& I, int bound) {
    return ideal_filtered_basis(IdealGens{pair.A_amb, I.gens}, bound);
}

FilteredBasis contraction(const OrderPair& pair, const FilteredBasis& J) {
    if (!J.ambient->same_as(*pair.A_amb)) throw InputError("contraction expects a lattice in A coordinates");
    // x in J cap R  <=>  sum_i x_i J_i = sum_k y_k r_k; the kernel gives (x, y).
    std::vector<Coords> vecs = J.rows;
    std::vector<int> ks;
    for (int k = 0; k <= J.bound; ++k) {
        if (!pair.R_amb->has_degree(k)) continue;
        ks.push_back(k);
        vecs.push_back(pair.A_amb->coordinates(pair.R_amb->element(k), false).coords);
    }
    Echelon E(pair.R->field());
    for (const auto& x : kernel(pair.R->field(), vecs)) {
        Coords c(static_cast<std::size_t>(J.bound) + 1, 0);
        for (std::size_t i = 0; i < ks.size(); ++i) c[ks[i]] = x[J.rows.size() + i];
        E.insert(std::move(c));
    }
    return filtered_from_echelon(pair.R_amb, E, J.bound);
}

bool prime_to_conductor(const OrderPair& pair, const IdealGens& I, int bound) {
    const FilteredBasis c = conductor(pair, bound);
    IdealGens S{pair.R_amb, I.gens};
    for (std::size_t i = 0; i < c.size(); ++i) S.gens.push_back(c.element(i));
    return ideal_contains(S, QuadElem::one(pair.R->desc()), bound).contained;
}

EpsilonLattice epsilon_lattice(const QuadDescPtr& desc, int N, int l, int bound) {
    const int d = desc->d();
    if (l < 0 || l >= d) throw DomainError("l must lie in [0, d-1]");
    if (N < 0) throw DomainError("N must be >= 0");
    auto amb = Ambient::poly_ring(desc);
    const int n_max = std::max(N, bound / d + 1);
    const auto Q = qseq(*desc, n_max);
    Echelon E(desc->field());
    auto add = [&](const Poly& p) {
        if (p.degree() <= bound) E.insert(p.coeffs());
    };
    for (int m = 0; m <= d - 1 - l; ++m) add(Q[N].shifted(m));
    for (int i = N + 1; i <= n_max; ++i)
        for (int m = 0; m < d; ++m) add(Q[i].shifted(m));
    return EpsilonLattice{N, l, filtered_from_echelon(amb, E, bound)};
}

FilteredBasis epsilon_lattice_bruteforce(const QuadDescPtr& desc, int eps_exp, int bound, BruteMethod method) {
    if (bound < 0 || eps_exp < 0) throw DomainError("bound and epsilon exponent must be >= 0");
    const FieldPtr& F = desc->field();
    auto amb = Ambient::poly_ring(desc);
    const LaurentSeries f1 = desc->root1(static_cast<std::int64_t>(bound) + eps_exp + 1);
    double count = 1;
    for (int i = 0; i <= bound; ++i) count *= F->q();
    if (method == BruteMethod::Auto) method = count <= 65536 ? BruteMethod::Enumerate : BruteMethod::Kernel;
    Echelon E(F);
    if (method == BruteMethod::Kernel) {
        std::vector<Coords> w;
        for (int k = 0; k <= bound; ++k) {
            Coords v(static_cast<std::size_t>(eps_exp), 0);
            for (int j = 1; j <= eps_exp; ++j) v[j - 1] = f1.coeff(j + k);
            w.push_back(std::move(v));
        }
        for (auto& x : kernel(F, w)) E.insert(std::move(x));
    } else {
        if (count > 1e8) throw DomainError("enumeration too large");
        std::vector<Elem> c(static_cast<std::size_t>(bound) + 1, 0);
        while (true) {
            std::size_t i = 0;
            while (i < c.size() && ++c[i] == F->q()) c[i++] = 0;
            if (i == c.size()) break;
            const Poly p(F, c);
            const LaurentSeries s = LaurentSeries::from_poly(p, f1.prec() + 2 * desc->d()) * f1;
            const NearestDistance nd = s.nearest_poly_norm();
            if (nd.prec <= eps_exp) throw PrecisionError("embedding precision too low for brute force");
            if (!nd.exponent || *nd.exponent > eps_exp) E.insert(c);
        }
    }
    return filtered_from_echelon(amb, E, bound);
}

}  // namespace quantj
