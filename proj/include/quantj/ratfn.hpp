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

#ifndef QUANTJ_RATFN_HPP
#define QUANTJ_RATFN_HPP

#include <string>

#include "quantj/poly.hpp"

namespace quantj {

/// Element of F_q(T) in lowest terms with monic denominator, so equality is
/// coordinate equality.
class RatFn {
   public:
    explicit RatFn(const FieldPtr& field) : num_(field), den_(Poly::constant(field, 1)) {}
    RatFn(Poly num);  // NOLINT(google-explicit-constructor): polynomials embed in F_q(T)
    RatFn(Poly num, Poly den);

    static RatFn constant(const FieldPtr& field, Elem c) { return RatFn(Poly::constant(field, c)); }

    const Poly& num() const noexcept { return num_; }
    const Poly& den() const noexcept { return den_; }
    const FieldPtr& field() const noexcept { return num_.field(); }
    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_polynomial() const noexcept { return den_.is_one(); }
    /// deg num - deg den (= -ord at infinity); undefined for zero.
    int degree() const noexcept { return num_.degree() - den_.degree(); }

    RatFn operator-() const { return RatFn(-num_, den_); }
    friend RatFn operator+(const RatFn& a, const RatFn& b);
    friend RatFn operator-(const RatFn& a, const RatFn& b) { return a + (-b); }
    friend RatFn operator*(const RatFn& a, const RatFn& b);
    friend RatFn operator/(const RatFn& a, const RatFn& b) { return a * b.inverse(); }
    friend bool operator==(const RatFn& a, const RatFn& b) noexcept { return a.num_ == b.num_ && a.den_ == b.den_; }

    RatFn inverse() const;
    RatFn scaled(Elem c) const { return RatFn(num_.scaled(c), den_); }
    RatFn frobenius(unsigned times = 1) const { return RatFn(num_.frobenius(times), den_.frobenius(times)); }

    std::string to_string() const;

   private:
    void normalize();
    Poly num_, den_;
};

}  // namespace quantj

#endif
