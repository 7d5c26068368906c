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

#include "quantj/ratfn.hpp"

#include "quantj/errors.hpp"

namespace quantj {

RatFn::RatFn(Poly num) : num_(std::move(num)), den_(Poly::constant(num_.field(), 1)) {}

RatFn::RatFn(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DomainError("rational function with zero denominator");
    normalize();
}

void RatFn::normalize() {
    require_same_field(num_.F(), den_.F());
    if (num_.is_zero()) {
        den_ = Poly::constant(num_.field(), 1);
        return;
    }
    if (!den_.is_constant()) {
        Poly g = gcd(num_, den_);
        if (!g.is_one()) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
    }
    Elem inv_lc = num_.F().inv(den_.lc());
    num_ = num_.scaled(inv_lc);
    den_ = den_.scaled(inv_lc);
}

RatFn operator+(const RatFn& a, const RatFn& b) {
    if (a.den_ == b.den_) return RatFn(a.num_ + b.num_, a.den_);
    return RatFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFn operator*(const RatFn& a, const RatFn& b) {
    if (a.is_polynomial() && b.is_polynomial()) return RatFn(a.num_ * b.num_);
    return RatFn(a.num_ * b.num_, a.den_ * b.den_);
}

RatFn RatFn::inverse() const {
    if (is_zero()) throw DomainError("inverse of zero rational function");
    return RatFn(den_, num_);
}

std::string RatFn::to_string() const {
    if (is_polynomial()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace quantj
