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

#include "quantj/laurent.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "quantj/errors.hpp"

namespace quantj {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw PrecisionError("Laurent exponent overflow");
    return r;
}

}  // namespace

LaurentSeries LaurentSeries::zero(const FieldPtr& field, std::int64_t prec) { return LaurentSeries(field, prec, {}, prec); }

LaurentSeries LaurentSeries::from_coeffs(const FieldPtr& field, std::int64_t val, std::vector<Elem> coeffs, std::int64_t prec) {
    if (val >= prec) return zero(field, prec);
    coeffs.resize(static_cast<std::size_t>(prec - val), 0);
    LaurentSeries s(field, val, std::move(coeffs), prec);
    s.normalize();
    return s;
}

LaurentSeries LaurentSeries::monomial(const FieldPtr& field, Elem c, std::int64_t exponent, std::int64_t prec) {
    if (c == 0 || exponent >= prec) return zero(field, prec);
    std::vector<Elem> v(static_cast<std::size_t>(prec - exponent), 0);
    v[0] = c;
    return LaurentSeries(field, exponent, std::move(v), prec);
}

LaurentSeries LaurentSeries::from_poly(const Poly& p, std::int64_t prec) {
    if (p.is_zero()) return zero(p.field(), prec);
    const std::int64_t deg = p.degree();
    std::vector<Elem> v(static_cast<std::size_t>(std::max<std::int64_t>(0, deg + 1)));
    for (std::int64_t i = 0; i <= deg; ++i) v[deg - i] = p.coeff(static_cast<int>(i));
    return from_coeffs(p.field(), -deg, std::move(v), prec);
}

LaurentSeries LaurentSeries::from_ratfn(const RatFn& r, std::int64_t prec) {
    if (r.is_zero()) return zero(r.field(), prec);
    const std::int64_t val = -static_cast<std::int64_t>(r.degree());
    if (val >= prec) return zero(r.field(), prec);
    const std::int64_t rel = prec - val;
    LaurentSeries num = from_poly(r.num(), -r.num().degree() + rel);
    LaurentSeries den = from_poly(r.den(), -r.den().degree() + rel);
    return (num * den.inverse()).truncated(prec);
}

void LaurentSeries::normalize() {
    std::size_t lead = 0;
    while (lead < c_.size() && c_[lead] == 0) ++lead;
    if (lead == c_.size()) {
        c_.clear();
        val_ = prec_;
        return;
    }
    if (lead) {
        c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lead));
        val_ += static_cast<std::int64_t>(lead);
    }
}

Elem LaurentSeries::coeff(std::int64_t k) const {
    if (k >= prec_) throw PrecisionError("coefficient of u^" + std::to_string(k) + " requested beyond precision " + std::to_string(prec_));
    if (k < val_) return 0;
    return c_[static_cast<std::size_t>(k - val_)];
}

OrdSgn LaurentSeries::ord_and_sgn() const {
    if (is_zero()) throw PrecisionError("indeterminate: series is zero to precision " + std::to_string(prec_));
    return {val_, c_[0]};
}

NearestDistance LaurentSeries::nearest_poly_norm() const {
    for (std::int64_t k = std::max<std::int64_t>(1, val_); k < prec_; ++k)
        if (c_[static_cast<std::size_t>(k - val_)] != 0) return {k, prec_};
    return {std::nullopt, prec_};
}

LaurentSeries LaurentSeries::operator-() const {
    LaurentSeries r = *this;
    for (auto& x : r.c_) x = F().neg(x);
    return r;
}

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
    require_same_field(a.F(), b.F());
    const std::int64_t prec = std::min(a.prec_, b.prec_);
    const std::int64_t val = std::min(a.val_, b.val_);
    if (val >= prec) return LaurentSeries::zero(a.field_, prec);
    std::vector<Elem> v(static_cast<std::size_t>(prec - val), 0);
    const Field& F = a.F();
    for (const LaurentSeries* s : {&a, &b}) {
        const std::int64_t stop = std::min<std::int64_t>(prec, s->prec_);
        for (std::int64_t k = s->val_; k < stop; ++k) {
            auto& slot = v[static_cast<std::size_t>(k - val)];
            slot = F.add(slot, s->c_[static_cast<std::size_t>(k - s->val_)]);
        }
    }
    LaurentSeries r(a.field_, val, std::move(v), prec);
    r.normalize();
    return r;
}

LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return a + (-b); }

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
    require_same_field(a.F(), b.F());
    const std::int64_t prec = std::min(a.prec_ + b.val_, b.prec_ + a.val_);
    if (a.is_zero() || b.is_zero()) return LaurentSeries::zero(a.field_, prec);
    const std::int64_t val = a.val_ + b.val_;
    const std::size_t n = static_cast<std::size_t>(prec - val);
    std::vector<Elem> v(n, 0);
    const Field& F = a.F();
    for (std::size_t i = 0; i < n; ++i) {
        const Elem x = a.c_[i];
        if (x == 0) continue;
        for (std::size_t j = 0; j + i < n; ++j) v[i + j] = F.add(v[i + j], F.mul(x, b.c_[j]));
    }
    LaurentSeries r(a.field_, val, std::move(v), prec);
    r.normalize();
    return r;
}

LaurentSeries LaurentSeries::scaled(Elem c) const {
    if (c == 0) return zero(field_, prec_);
    LaurentSeries r = *this;
    for (auto& x : r.c_) x = F().mul(x, c);
    return r;
}

LaurentSeries LaurentSeries::shifted(std::int64_t k) const {
    LaurentSeries r = *this;
    r.val_ += k;
    r.prec_ += k;
    return r;
}

LaurentSeries LaurentSeries::inverse() const {
    if (is_zero()) throw PrecisionError("inverse of a series that is zero to precision " + std::to_string(prec_));
    const Field& F = this->F();
    const std::size_t n = c_.size();
    std::vector<Elem> b(n, 0);
    const Elem inv0 = F.inv(c_[0]);
    const Elem neg_inv0 = F.neg(inv0);
    b[0] = inv0;
    for (std::size_t k = 1; k < n; ++k) {
        Elem t = 0;
        for (std::size_t i = 1; i <= k; ++i)
            if (c_[i] != 0) t = F.add(t, F.mul(c_[i], b[k - i]));
        b[k] = F.mul(t, neg_inv0);
    }
    return LaurentSeries(field_, -val_, std::move(b), -val_ + static_cast<std::int64_t>(n));
}

LaurentSeries LaurentSeries::pow(std::uint64_t n) const {
    if (n == 0) return constant(field_, 1, is_zero() ? prec_ : rel_prec());
    LaurentSeries result = *this, base = *this;
    --n;
    while (n) {
        if (n & 1u) result = result * base;
        n >>= 1u;
        if (n) base = base * base;
    }
    return result;
}

LaurentSeries LaurentSeries::frobenius(unsigned times) const {
    std::int64_t stride = 1;
    for (unsigned i = 0; i < times; ++i) stride = checked_mul(stride, F().q());
    const std::int64_t prec = checked_mul(prec_, stride);
    if (is_zero()) return zero(field_, prec);
    const std::int64_t val = checked_mul(val_, stride);
    std::vector<Elem> v(static_cast<std::size_t>(prec - val), 0);
    for (std::size_t i = 0; i < c_.size(); ++i) v[i * static_cast<std::size_t>(stride)] = c_[i];
    return LaurentSeries(field_, val, std::move(v), prec);
}

LaurentSeries LaurentSeries::truncated(std::int64_t new_prec) const {
    if (new_prec >= prec_) return *this;
    if (is_zero() || new_prec <= val_) return zero(field_, new_prec);
    LaurentSeries r = *this;
    r.c_.resize(static_cast<std::size_t>(new_prec - val_));
    r.prec_ = new_prec;
    return r;
}

LaurentSeries LaurentSeries::truncated_rel(std::int64_t coeff_count) const {
    if (is_zero()) return *this;
    return truncated(val_ + coeff_count);
}

Comparison compare(const LaurentSeries& a, const LaurentSeries& b, std::int64_t required_prec) {
    LaurentSeries diff = a - b;
    if (!diff.is_zero() && diff.val_ < required_prec) return {Comparison::Kind::DifferAt, diff.val_};
    if (diff.prec_ >= required_prec) return {Comparison::Kind::Equal, required_prec};
    return {Comparison::Kind::Undecidable, diff.prec_};
}

Comparison compare_coeffs(const LaurentSeries& a, const LaurentSeries& b, std::int64_t count) {
    if (a.is_zero() || b.is_zero()) return {Comparison::Kind::Undecidable, std::min(a.prec_, b.prec_)};
    if (a.val_ != b.val_) return {Comparison::Kind::DifferAt, std::min(a.val_, b.val_)};
    return compare(a, b, a.val_ + count);
}

std::string LaurentSeries::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        const std::int64_t k = val_ + static_cast<std::int64_t>(i);
        if (c_[i] != 1 || k == 0) os << F().format(c_[i]);
        if (k != 0) os << (c_[i] != 1 ? "*" : "") << "u^" << k;
    }
    if (!first) os << " + ";
    os << "O(u^" << prec_ << ")";
    return os.str();
}

}  // namespace quantj
