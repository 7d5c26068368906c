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

#ifndef QUANTJ_POLY_HPP
#define QUANTJ_POLY_HPP

#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "quantj/field.hpp"

namespace quantj {

/// Element of F_q[T], dense ascending coefficients without trailing zeros.
class Poly {
   public:
    /// degree() of the zero polynomial.
    static constexpr int kZeroDegree = -1;

    explicit Poly(FieldPtr field) : field_(std::move(field)) {}
    Poly(FieldPtr field, std::vector<Elem> coeffs);

    static Poly constant(const FieldPtr& field, Elem c);
    static Poly monomial(const FieldPtr& field, Elem c, int k);
    static Poly T(const FieldPtr& field) { return monomial(field, 1, 1); }

    /// Parses "c_k*T^k + ... + c_0"; throws InputError on malformed input.
    static Poly parse(const FieldPtr& field, std::string_view literal);

    const FieldPtr& field() const noexcept { return field_; }
    const Field& F() const noexcept { return *field_; }
    const std::vector<Elem>& coeffs() const noexcept { return c_; }
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_constant() const noexcept { return c_.size() <= 1; }
    bool is_one() const noexcept { return c_.size() == 1 && c_[0] == 1; }
    bool is_monic() const noexcept { return !c_.empty() && c_.back() == 1; }
    Elem lc() const noexcept { return c_.empty() ? 0 : c_.back(); }
    Elem coeff(int k) const noexcept { return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : 0; }

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
    friend Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }
    friend bool operator==(const Poly& a, const Poly& b) noexcept { return a.c_ == b.c_; }

    Poly scaled(Elem c) const;
    Poly shifted(int k) const;  // multiply by T^k, k >= 0
    Poly monic() const;         // zero stays zero
    Poly pow(unsigned k) const;
    /// p(T)^{q^times} = p(T^{q^times}) since coefficients are fixed by Frobenius.
    Poly frobenius(unsigned times = 1) const;

    /// a = quot*b + rem with deg rem < deg b; throws DomainError if b = 0.
    friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
    /// Monic gcd; gcd(0, 0) = 0.
    friend Poly gcd(const Poly& a, const Poly& b);

    std::string to_string() const;

   private:
    void trim() noexcept {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    FieldPtr field_;
    std::vector<Elem> c_;
};

/// All q^d monic polynomials of degree d, in increasing order of the base-q number
/// c_{d-1}...c_1 c_0.
void for_each_monic(const FieldPtr& field, int d, const std::function<void(const Poly&)>& visit);
std::vector<Poly> monic_polys(const FieldPtr& field, int d);

}  // namespace quantj

#endif
