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

#ifndef QUANTJ_LAURENT_HPP
#define QUANTJ_LAURENT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "quantj/field.hpp"
#include "quantj/poly.hpp"
#include "quantj/ratfn.hpp"

namespace quantj {

/// Result of comparing two series at a required precision. Equality is only ever
/// "equal below exponent `exponent`".
struct Comparison {
    enum class Kind { Equal, DifferAt, Undecidable };
    Kind kind;
    /// Equal: precision reached. DifferAt: first differing exponent. Undecidable: the
    /// precision that was available.
    std::int64_t exponent;

    bool equal() const noexcept { return kind == Kind::Equal; }
    bool differs() const noexcept { return kind == Kind::DifferAt; }
};

/// ||x|| = distance of x to the nearest polynomial. Either q^{-exponent}, or zero to
/// precision (||x|| <= q^{-prec}).
struct NearestDistance {
    std::optional<std::int64_t> exponent;
    std::int64_t prec;
};

struct OrdSgn {
    std::int64_t ord;
    Elem sgn;
};

/// Truncated Laurent series in u = 1/T over F_q, the completion at the place at infinity.
///
/// Coefficients are asserted correct for every exponent below prec(); nothing is
/// claimed beyond. A series whose known coefficients all vanish is "zero to precision"
/// and is a distinct state: it has no valuation or sign.
///
/// Precision propagation: add/sub take the smaller prec, mul keeps the smaller
/// relative precision, inverse keeps relative precision.
class LaurentSeries {
   public:
    static LaurentSeries zero(const FieldPtr& field, std::int64_t prec);
    /// coeffs[i] is the coefficient of u^{val+i}; entries at exponents >= prec are dropped.
    static LaurentSeries from_coeffs(const FieldPtr& field, std::int64_t val, std::vector<Elem> coeffs, std::int64_t prec);
    static LaurentSeries monomial(const FieldPtr& field, Elem c, std::int64_t exponent, std::int64_t prec);
    static LaurentSeries constant(const FieldPtr& field, Elem c, std::int64_t prec) { return monomial(field, c, 0, prec); }
    /// T^k maps to u^{-k}.
    static LaurentSeries from_poly(const Poly& p, std::int64_t prec);
    static LaurentSeries from_ratfn(const RatFn& r, std::int64_t prec);

    const FieldPtr& field() const noexcept { return field_; }
    const Field& F() const noexcept { return *field_; }

    bool is_zero() const noexcept { return c_.empty(); }
    std::int64_t prec() const noexcept { return prec_; }
    /// Lowest stored exponent; equals prec() for a series that is zero to precision.
    std::int64_t val() const noexcept { return val_; }
    /// Number of known coefficients from the valuation on (0 when zero to precision).
    std::int64_t rel_prec() const noexcept { return prec_ - val_; }
    /// Coefficients from val() up to prec() - 1.
    const std::vector<Elem>& coeffs() const noexcept { return c_; }

    /// Coefficient of u^k; throws PrecisionError if k >= prec().
    Elem coeff(std::int64_t k) const;
    /// Throws PrecisionError("indeterminate") when zero to precision.
    OrdSgn ord_and_sgn() const;
    std::int64_t ord() const { return ord_and_sgn().ord; }
    Elem sgn() const { return ord_and_sgn().sgn; }

    NearestDistance nearest_poly_norm() const;

    LaurentSeries operator-() const;
    friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b);
    friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b);
    friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);
    friend LaurentSeries operator/(const LaurentSeries& a, const LaurentSeries& b) { return a * b.inverse(); }
    LaurentSeries& operator+=(const LaurentSeries& o) { return *this = *this + o; }
    LaurentSeries& operator-=(const LaurentSeries& o) { return *this = *this - o; }
    LaurentSeries& operator*=(const LaurentSeries& o) { return *this = *this * o; }

    LaurentSeries scaled(Elem c) const;
    /// Multiply by u^k.
    LaurentSeries shifted(std::int64_t k) const;
    /// Throws PrecisionError when zero to precision.
    LaurentSeries inverse() const;
    LaurentSeries pow(std::uint64_t n) const;
    /// x^{q^times}: coefficients are fixed by Frobenius, exponents scale by q^times.
    LaurentSeries frobenius(unsigned times = 1) const;
    /// Lower prec to min(prec(), new_prec).
    LaurentSeries truncated(std::int64_t new_prec) const;
    /// Keep at most `coeff_count` coefficients from the valuation on.
    LaurentSeries truncated_rel(std::int64_t coeff_count) const;

    /// Compare below exponent `required_prec`.
    friend Comparison compare(const LaurentSeries& a, const LaurentSeries& b, std::int64_t required_prec);
    /// Compare the first `count` coefficients starting at a's valuation; valuations must match.
    friend Comparison compare_coeffs(const LaurentSeries& a, const LaurentSeries& b, std::int64_t count);
    /// Identical stored state (valuation, precision, coefficients).
    friend bool identical(const LaurentSeries& a, const LaurentSeries& b) noexcept {
        return a.val_ == b.val_ && a.prec_ == b.prec_ && a.c_ == b.c_;
    }

    std::string to_string() const;

   private:
    LaurentSeries(FieldPtr field, std::int64_t val, std::vector<Elem> c, std::int64_t prec)
        : field_(std::move(field)), val_(val), prec_(prec), c_(std::move(c)) {}
    void normalize();

    FieldPtr field_;
    std::int64_t val_ = 0;
    std::int64_t prec_ = 0;
    std::vector<Elem> c_;
};

}  // namespace quantj

#endif
