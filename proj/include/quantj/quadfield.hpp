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

#ifndef QUANTJ_QUADFIELD_HPP
#define QUANTJ_QUADFIELD_HPP

#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "quantj/laurent.hpp"
#include "quantj/poly.hpp"
#include "quantj/ratfn.hpp"

namespace quantj {

class QuadDesc;
using QuadDescPtr = std::shared_ptr<const QuadDesc>;

/// Real quadratic field K = F_q(T)(f), f^2 = a f + b, deg a = d >= 1, b in F_q^x.
///
/// Both roots of X^2 - aX - b lie in F_q((u)); place 1 is the root with |f| = q^d,
/// place 2 its conjugate with |f*| = q^{-d}.
class QuadDesc {
   public:
    static QuadDescPtr make(Poly a, Elem b);

    const FieldPtr& field() const noexcept { return a_.field(); }
    const Poly& a() const noexcept { return a_; }
    Elem b() const noexcept { return b_; }
    int d() const noexcept { return a_.degree(); }
    std::uint32_t q() const noexcept { return field()->q(); }

    /// Root at `place` (1 or 2) to absolute precision prec. Requires prec >= 2d + 1.
    LaurentSeries embed(int place, std::int64_t prec) const;
    /// Same as embed(1, prec) without the lower bound on prec; cached.
    LaurentSeries root1(std::int64_t prec) const;

    bool same_as(const QuadDesc& other) const noexcept { return a_ == other.a_ && b_ == other.b_; }
    std::string describe() const;

   private:
    QuadDesc(Poly a, Elem b) : a_(std::move(a)), b_(b) {}

    Poly a_;
    Elem b_;
    mutable std::mutex cache_mutex_;
    mutable std::vector<LaurentSeries> cache_;  // at most one entry, grown on demand
};

/// Element x + y f of K with x, y in F_q(T).
class QuadElem {
   public:
    QuadElem(QuadDescPtr desc, RatFn x, RatFn y);
    static QuadElem zero(const QuadDescPtr& desc);
    static QuadElem one(const QuadDescPtr& desc);
    static QuadElem gen(const QuadDescPtr& desc);  // f
    static QuadElem from_poly(const QuadDescPtr& desc, const Poly& x) { return QuadElem(desc, RatFn(x), RatFn(desc->field())); }
    static QuadElem from_polys(const QuadDescPtr& desc, const Poly& x, const Poly& y) { return QuadElem(desc, RatFn(x), RatFn(y)); }

    const QuadDescPtr& desc() const noexcept { return desc_; }
    const RatFn& x() const noexcept { return x_; }
    const RatFn& y() const noexcept { return y_; }
    bool is_zero() const noexcept { return x_.is_zero() && y_.is_zero(); }
    /// Both coordinates are polynomials, i.e. the element lies in F_q[T][f].
    bool is_integral_coords() const noexcept { return x_.is_polynomial() && y_.is_polynomial(); }

    QuadElem operator-() const { return QuadElem(desc_, -x_, -y_); }
    friend QuadElem operator+(const QuadElem& a, const QuadElem& b);
    friend QuadElem operator-(const QuadElem& a, const QuadElem& b);
    friend QuadElem operator*(const QuadElem& a, const QuadElem& b);
    friend QuadElem operator/(const QuadElem& a, const QuadElem& b) { return a * b.inverse(); }
    friend bool operator==(const QuadElem& a, const QuadElem& b) noexcept { return a.x_ == b.x_ && a.y_ == b.y_; }

    QuadElem scaled(const RatFn& c) const { return QuadElem(desc_, x_ * c, y_ * c); }
    QuadElem scaled(Elem c) const { return QuadElem(desc_, x_.scaled(c), y_.scaled(c)); }
    QuadElem pow(unsigned n) const;
    /// conj(z) / norm(z); throws DomainError for zero.
    QuadElem inverse() const;

    /// (x + a y) - y f
    QuadElem conj() const;
    /// z conj(z) = x^2 + a x y - b y^2
    RatFn norm() const;
    /// 2x + a y
    RatFn trace() const;

    /// Image under the embedding at `place`, correct below exponent prec.
    LaurentSeries iota(int place, std::int64_t prec) const;
    LaurentSeries iota1(std::int64_t prec) const { return iota(1, prec); }

    std::string to_string() const;

   private:
    QuadDescPtr desc_;
    RatFn x_, y_;
};

/// -ord at place 1. Precision is raised adaptively up to the bound given by
/// |z| |conj z| = |norm z| and |conj z| <= max(|x|, |y| q^{-d}); throws DomainError for 0.
int deg_at_inf1(const QuadElem& z);

/// Q_0 = 1, Q_1 = a, Q_{n+1} = a Q_n + b Q_{n-1}.
std::vector<Poly> qseq(const QuadDesc& desc, int n_max);

}  // namespace quantj

#endif
