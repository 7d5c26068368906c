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

#include "quantj/quadfield.hpp"

#include <algorithm>

#include "quantj/errors.hpp"

namespace quantj {

QuadDescPtr QuadDesc::make(Poly a, Elem b) {
    if (a.degree() < 1) throw InputError("quadratic field needs deg a >= 1");
    if (b == 0 || b >= a.F().q()) throw InputError("b must be a nonzero constant of the base field");
    return QuadDescPtr(new QuadDesc(std::move(a), b));
}

LaurentSeries QuadDesc::root1(std::int64_t prec) const {
    {
        std::lock_guard<std::mutex> lock(cache_mutex_);
        if (!cache_.empty() && cache_.front().prec() >= prec) return cache_.front().truncated(prec);
    }
    // f <- a + b/f from f = a. a agrees with f below exponent d (f - a = -f* has ord d);
    // each step multiplies the error by |b/f^2| = q^{-2d}, which the precision
    // propagation of inverse/add reproduces exactly.
    const std::int64_t target = std::max<std::int64_t>(prec, 2 * d() + 1);
    const std::int64_t stored = (target + 63) / 64 * 64;
    const LaurentSeries a_ser = LaurentSeries::from_poly(a_, stored);
    const LaurentSeries b_ser = LaurentSeries::constant(field(), b_, stored + 4 * d());
    LaurentSeries f = a_ser.truncated(d());
    while (f.prec() < stored) f = a_ser + b_ser * f.inverse();
    f = f.truncated(stored);
    std::lock_guard<std::mutex> lock(cache_mutex_);
    if (cache_.empty() || cache_.front().prec() < f.prec()) cache_.assign(1, f);
    return cache_.front().truncated(prec);
}

LaurentSeries QuadDesc::embed(int place, std::int64_t prec) const {
    if (prec < 2 * d() + 1)
        throw PrecisionError("embedding precision " + std::to_string(prec) + " cannot certify a contraction step (need >= " + std::to_string(2 * d() + 1) + ")");
    if (place == 1) return root1(prec);
    if (place == 2) return LaurentSeries::from_poly(a_, prec) - root1(prec);
    throw DomainError("place must be 1 or 2");
}

std::string QuadDesc::describe() const {
    return "f^2 = (" + a_.to_string() + ")*f + " + field()->format(b_) + " over " + field()->describe();
}

QuadElem::QuadElem(QuadDescPtr desc, RatFn x, RatFn y) : desc_(std::move(desc)), x_(std::move(x)), y_(std::move(y)) {
    require_same_field(*desc_->field(), *x_.field());
    require_same_field(*desc_->field(), *y_.field());
}

QuadElem QuadElem::zero(const QuadDescPtr& desc) { return QuadElem(desc, RatFn(desc->field()), RatFn(desc->field())); }
QuadElem QuadElem::one(const QuadDescPtr& desc) { return QuadElem(desc, RatFn::constant(desc->field(), 1), RatFn(desc->field())); }
QuadElem QuadElem::gen(const QuadDescPtr& desc) { return QuadElem(desc, RatFn(desc->field()), RatFn::constant(desc->field(), 1)); }

namespace {
void require_same_desc(const QuadElem& a, const QuadElem& b) {
    if (a.desc() != b.desc() && !a.desc()->same_as(*b.desc())) throw InputError("elements of different quadratic fields");
}
}  // namespace

QuadElem operator+(const QuadElem& a, const QuadElem& b) {
    require_same_desc(a, b);
    return QuadElem(a.desc_, a.x_ + b.x_, a.y_ + b.y_);
}

QuadElem operator-(const QuadElem& a, const QuadElem& b) {
    require_same_desc(a, b);
    return QuadElem(a.desc_, a.x_ - b.x_, a.y_ - b.y_);
}

QuadElem operator*(const QuadElem& a, const QuadElem& b) {
    require_same_desc(a, b);
    const RatFn A(a.desc_->a());
    RatFn yy = a.y_ * b.y_;
    RatFn x = a.x_ * b.x_ + yy.scaled(a.desc_->b());
    RatFn y = a.x_ * b.y_ + b.x_ * a.y_ + A * yy;
    return QuadElem(a.desc_, std::move(x), std::move(y));
}

QuadElem QuadElem::pow(unsigned n) const {
    QuadElem result = one(desc_), base = *this;
    while (n) {
        if (n & 1u) result = result * base;
        n >>= 1u;
        if (n) base = base * base;
    }
    return result;
}

QuadElem QuadElem::conj() const { return QuadElem(desc_, x_ + RatFn(desc_->a()) * y_, -y_); }

RatFn QuadElem::norm() const {
    const RatFn A(desc_->a());
    return x_ * x_ + A * x_ * y_ - (y_ * y_).scaled(desc_->b());
}

RatFn QuadElem::trace() const { return x_.scaled(desc_->field()->from_int(2)) + RatFn(desc_->a()) * y_; }

QuadElem QuadElem::inverse() const {
    if (is_zero()) throw DomainError("inverse of zero in K");
    // X^2 - aX - b is irreducible over F_q(T), so norm(z) != 0 for z != 0
    return conj().scaled(norm().inverse());
}

LaurentSeries QuadElem::iota(int place, std::int64_t prec) const {
    if (place != 1 && place != 2) throw DomainError("place must be 1 or 2");
    LaurentSeries xs = LaurentSeries::from_ratfn(x_, prec);
    if (y_.is_zero()) return xs;
    const std::int64_t d = desc_->d();
    const std::int64_t root_val = place == 1 ? -d : d;
    const std::int64_t y_val = -static_cast<std::int64_t>(y_.degree());
    // keep both factors nonzero so the product carries precision >= prec
    LaurentSeries ys = LaurentSeries::from_ratfn(y_, std::max(prec - root_val, y_val + 1));
    LaurentSeries root = desc_->root1(std::max(prec - y_val, std::int64_t{1} + d));
    if (place == 2) root = LaurentSeries::from_poly(desc_->a(), root.prec()) - root;
    return (xs + ys * root).truncated(prec);
}

std::string QuadElem::to_string() const {
    if (y_.is_zero()) return x_.to_string();
    std::string ys = y_.is_polynomial() && y_.num().is_one() ? "f" : "(" + y_.to_string() + ")*f";
    if (x_.is_zero()) return ys;
    return x_.to_string() + " + " + ys;
}

int deg_at_inf1(const QuadElem& z) {
    if (z.is_zero()) throw DomainError("degree of zero");
    const std::int64_t d = z.desc()->d();
    // ord(z) = ord(norm z) - ord(conj z) and ord(conj z) >= min(ord x, ord y + d).
    std::int64_t conj_lower = INT64_MAX;
    if (!z.x().is_zero()) conj_lower = std::min<std::int64_t>(conj_lower, -z.x().degree());
    if (!z.y().is_zero()) conj_lower = std::min<std::int64_t>(conj_lower, -z.y().degree() + d);
    const std::int64_t ord_norm = -static_cast<std::int64_t>(z.norm().degree());
    const std::int64_t bound = ord_norm - conj_lower;
    // start just past the naive leading exponent and double the window
    std::int64_t naive = INT64_MAX;
    if (!z.x().is_zero()) naive = std::min<std::int64_t>(naive, -z.x().degree());
    if (!z.y().is_zero()) naive = std::min<std::int64_t>(naive, -z.y().degree() - d);
    std::int64_t window = 8;
    while (true) {
        const std::int64_t prec = std::min(naive + window, bound + 1);
        LaurentSeries s = z.iota1(prec);
        if (!s.is_zero()) return static_cast<int>(-s.val());
        if (prec >= bound + 1) throw VerificationError("degree bound violated: element zero to precision " + std::to_string(prec));
        window *= 2;
    }
}

std::vector<Poly> qseq(const QuadDesc& desc, int n_max) {
    if (n_max < 0) throw DomainError("n_max must be >= 0");
    std::vector<Poly> q;
    q.reserve(static_cast<std::size_t>(n_max) + 1);
    q.push_back(Poly::constant(desc.field(), 1));
    if (n_max >= 1) q.push_back(desc.a());
    for (int n = 1; n < n_max; ++n) q.push_back(desc.a() * q[n] + q[n - 1].scaled(desc.b()));
    return q;
}

}  // namespace quantj
