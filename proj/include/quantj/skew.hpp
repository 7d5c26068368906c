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

#ifndef QUANTJ_SKEW_HPP
#define QUANTJ_SKEW_HPP

#include <string>
#include <utility>
#include <vector>

#include "quantj/errors.hpp"
#include "quantj/laurent.hpp"
#include "quantj/ratfn.hpp"

namespace quantj {

template <class C>
struct CoeffTraits;

template <>
struct CoeffTraits<RatFn> {
    static bool is_zero(const RatFn& c) { return c.is_zero(); }
    static RatFn frob(const RatFn& c, unsigned k) { return c.frobenius(k); }
    static RatFn zero_like(const RatFn& c) { return RatFn(c.field()); }
    static const FieldPtr& field(const RatFn& c) { return c.field(); }
    /// Left-multiply so the leading coefficient is 1.
    static void normalize(std::vector<RatFn>& c) {
        const RatFn inv = c.back().inverse();
        for (auto& x : c) x = inv * x;
    }
    static std::string str(const RatFn& c) { return c.to_string(); }
};

template <>
struct CoeffTraits<LaurentSeries> {
    static bool is_zero(const LaurentSeries& c) { return c.is_zero(); }
    static LaurentSeries frob(const LaurentSeries& c, unsigned k) { return c.frobenius(k); }
    static LaurentSeries zero_like(const LaurentSeries& c) { return LaurentSeries::zero(c.field(), c.prec()); }
    static const FieldPtr& field(const LaurentSeries& c) { return c.field(); }
    /// Left-multiply by an F_q constant so the leading coefficient has sgn 1.
    static void normalize(std::vector<LaurentSeries>& c) {
        const Elem inv = c.back().field()->inv(c.back().sgn());
        for (auto& x : c) x = x.scaled(inv);
    }
    static std::string str(const LaurentSeries& c) { return c.to_string(); }
};

/// sum a_k tau^k with tau c = c^q tau. Top coefficients that are zero (to precision) are
/// dropped, so the leading coefficient is always nonzero.
template <class C>
class SkewPoly {
   public:
    using Traits = CoeffTraits<C>;

    SkewPoly(FieldPtr field, std::vector<C> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) { trim(); }
    static SkewPoly zero(FieldPtr field) { return SkewPoly(std::move(field), {}); }
    static SkewPoly constant(const C& c) { return SkewPoly(Traits::field(c), {c}); }

    const FieldPtr& field() const noexcept { return field_; }
    bool is_zero() const noexcept { return c_.empty(); }
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    const std::vector<C>& coeffs() const noexcept { return c_; }
    const C& coeff(int k) const { return c_.at(static_cast<std::size_t>(k)); }
    const C& lc() const {
        if (c_.empty()) throw DomainError("zero skew polynomial has no leading coefficient");
        return c_.back();
    }

    friend SkewPoly operator+(const SkewPoly& a, const SkewPoly& b) {
        std::vector<C> out;
        const std::size_t n = std::max(a.c_.size(), b.c_.size());
        for (std::size_t i = 0; i < n; ++i) {
            if (i >= a.c_.size())
                out.push_back(b.c_[i]);
            else if (i >= b.c_.size())
                out.push_back(a.c_[i]);
            else
                out.push_back(a.c_[i] + b.c_[i]);
        }
        return SkewPoly(a.field_, std::move(out));
    }
    SkewPoly operator-() const {
        std::vector<C> out;
        for (const auto& c : c_) out.push_back(-c);
        return SkewPoly(field_, std::move(out));
    }
    friend SkewPoly operator-(const SkewPoly& a, const SkewPoly& b) { return a + (-b); }

    /// (sum a_i tau^i)(sum b_j tau^j) = sum a_i b_j^{q^i} tau^{i+j}
    friend SkewPoly operator*(const SkewPoly& a, const SkewPoly& b) {
        if (a.is_zero() || b.is_zero()) return zero(a.field_);
        const int da = a.degree(), db = b.degree();
        std::vector<C> out;
        out.reserve(static_cast<std::size_t>(da + db + 1));
        for (int k = 0; k <= da + db; ++k) {
            const int lo = std::max(0, k - db), hi = std::min(k, da);
            C acc = a.c_[lo] * Traits::frob(b.c_[k - lo], static_cast<unsigned>(lo));
            for (int i = lo + 1; i <= hi; ++i) acc = acc + a.c_[i] * Traits::frob(b.c_[k - i], static_cast<unsigned>(i));
            out.push_back(std::move(acc));
        }
        return SkewPoly(a.field_, std::move(out));
    }

    /// c * h (a left scalar does not twist).
    SkewPoly left_scaled(const C& c) const {
        std::vector<C> out;
        for (const auto& x : c_) out.push_back(c * x);
        return SkewPoly(field_, std::move(out));
    }

    /// sum a_k x^{q^k}
    C eval(const C& x) const {
        if (c_.empty()) return Traits::zero_like(x);
        C acc = c_[0] * x;
        for (std::size_t k = 1; k < c_.size(); ++k) acc = acc + c_[k] * Traits::frob(x, static_cast<unsigned>(k));
        return acc;
    }

    /// Leading coefficient 1 (exact) or sgn 1 (Laurent).
    SkewPoly normalized() const {
        if (is_zero()) return *this;
        std::vector<C> c = c_;
        Traits::normalize(c);
        return SkewPoly(field_, std::move(c));
    }

    /// u = s v + r with deg r < deg v.
    friend std::pair<SkewPoly, SkewPoly> right_divmod(const SkewPoly& u, const SkewPoly& v) {
        if (v.is_zero()) throw DomainError("right division by the zero skew polynomial");
        const int dv = v.degree();
        std::vector<C> s;
        std::vector<C> r = u.c_;
        int step = 0;
        while (static_cast<int>(r.size()) - 1 >= dv) {
            const int k = static_cast<int>(r.size()) - 1 - dv;
            const C lv = Traits::frob(v.c_.back(), static_cast<unsigned>(k));
            if (Traits::is_zero(lv)) throw PrecisionError("precision exhausted at step " + std::to_string(step));
            const C c = r.back() / lv;
            if (s.size() < static_cast<std::size_t>(k) + 1) {
                s.reserve(static_cast<std::size_t>(k) + 1);
                while (s.size() < static_cast<std::size_t>(k) + 1) s.push_back(Traits::zero_like(c));
            }
            s[static_cast<std::size_t>(k)] = c;
            for (int j = 0; j < dv; ++j)
                r[static_cast<std::size_t>(k + j)] = r[static_cast<std::size_t>(k + j)] - c * Traits::frob(v.c_[j], static_cast<unsigned>(k));
            r.pop_back();
            while (!r.empty() && Traits::is_zero(r.back())) r.pop_back();
            ++step;
        }
        return {SkewPoly(u.field_, std::move(s)), SkewPoly(u.field_, std::move(r))};
    }

    friend bool operator==(const SkewPoly& a, const SkewPoly& b) { return a.c_ == b.c_; }

    std::string to_string() const {
        if (c_.empty()) return "0";
        std::string s;
        for (std::size_t k = c_.size(); k-- > 0;) {
            if (Traits::is_zero(c_[k]) && k + 1 != c_.size()) continue;
            if (!s.empty()) s += " + ";
            s += "(" + Traits::str(c_[k]) + ")";
            if (k == 1) s += "*tau";
            if (k > 1) s += "*tau^" + std::to_string(k);
        }
        return s;
    }

   private:
    void trim() {
        while (!c_.empty() && Traits::is_zero(c_.back())) c_.pop_back();
    }

    FieldPtr field_;
    std::vector<C> c_;
};

using SkewRat = SkewPoly<RatFn>;
using SkewLaurent = SkewPoly<LaurentSeries>;

/// Right gcd of the list, normalized: the generator of the left ideal sum L{tau} h.
template <class C>
SkewPoly<C> left_ideal_generator(const std::vector<SkewPoly<C>>& hs) {
    if (hs.empty()) throw DomainError("empty generator list");
    SkewPoly<C> g = SkewPoly<C>::zero(hs.front().field());
    for (const auto& h : hs) {
        SkewPoly<C> a = h, b = g;
        while (!b.is_zero()) {
            auto [s, r] = right_divmod(a, b);
            a = std::move(b);
            b = std::move(r);
        }
        g = std::move(a);
    }
    if (g.is_zero()) throw DomainError("all generators are zero");
    return g.normalized();
}

}  // namespace quantj

#endif
