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

#include "quantj/poly.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>

#include "quantj/errors.hpp"

namespace quantj {

Poly::Poly(FieldPtr field, std::vector<Elem> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
    for (auto x : c_)
        if (x >= field_->q()) throw InputError("coefficient outside the field");
    trim();
}

Poly Poly::constant(const FieldPtr& field, Elem c) { return Poly(field, {c}); }

Poly Poly::monomial(const FieldPtr& field, Elem c, int k) {
    if (c == 0) return Poly(field);
    std::vector<Elem> v(static_cast<std::size_t>(k) + 1, 0);
    v[k] = c;
    return Poly(field, std::move(v));
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& x : r.c_) x = F().neg(x);
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    require_same_field(F(), o.F());
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = F().add(c_[i], o.c_[i]);
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    require_same_field(F(), o.F());
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = F().sub(c_[i], o.c_[i]);
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    require_same_field(a.F(), b.F());
    if (a.is_zero() || b.is_zero()) return Poly(a.field_);
    const Field& F = a.F();
    std::vector<Elem> r(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a.c_[i], b.c_[j]));
    }
    return Poly(a.field_, std::move(r));
}

Poly Poly::scaled(Elem c) const {
    if (c == 0) return Poly(field_);
    Poly r = *this;
    for (auto& x : r.c_) x = F().mul(x, c);
    return r;
}

Poly Poly::shifted(int k) const {
    if (is_zero() || k == 0) return *this;
    std::vector<Elem> v(static_cast<std::size_t>(k), 0);
    v.insert(v.end(), c_.begin(), c_.end());
    return Poly(field_, std::move(v));
}

Poly Poly::monic() const { return is_zero() ? *this : scaled(F().inv(lc())); }

Poly Poly::pow(unsigned k) const {
    Poly result = constant(field_, 1), base = *this;
    while (k) {
        if (k & 1u) result = result * base;
        k >>= 1u;
        if (k) base = base * base;
    }
    return result;
}

Poly Poly::frobenius(unsigned times) const {
    if (is_zero()) return *this;
    std::size_t stride = 1;
    for (unsigned i = 0; i < times; ++i) stride *= F().q();
    std::vector<Elem> v((c_.size() - 1) * stride + 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) v[i * stride] = c_[i];
    return Poly(field_, std::move(v));
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    require_same_field(a.F(), b.F());
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    const Field& F = a.F();
    if (a.degree() < b.degree()) return {Poly(a.field_), a};
    std::vector<Elem> rem = a.c_;
    std::vector<Elem> quot(a.c_.size() - b.c_.size() + 1, 0);
    Elem inv_lc = F.inv(b.lc());
    for (std::size_t k = quot.size(); k-- > 0;) {
        Elem c = F.mul(rem[k + b.c_.size() - 1], inv_lc);
        quot[k] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) rem[k + j] = F.sub(rem[k + j], F.mul(c, b.c_[j]));
    }
    rem.resize(b.c_.size() - 1);
    return {Poly(a.field_, std::move(quot)), Poly(a.field_, std::move(rem))};
}

Poly gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

std::string Poly::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        Elem c = c_[k];
        if (c == 0) continue;
        if (!out.empty()) out += " + ";
        if (k == 0) {
            out += F().format(c);
            continue;
        }
        if (c != 1) out += F().format(c) + "*";
        out += "T";
        if (k > 1) out += "^" + std::to_string(k);
    }
    return out;
}

Poly Poly::parse(const FieldPtr& field, std::string_view literal) {
    std::string s;
    for (char ch : literal)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw InputError("empty polynomial literal");
    std::map<int, Elem> terms;
    std::size_t start = 0;
    while (start <= s.size()) {
        std::size_t end = s.find('+', start);
        if (end == std::string::npos) end = s.size();
        std::string_view term(s.data() + start, end - start);
        if (term.empty()) throw InputError("malformed polynomial literal '" + std::string(literal) + "'");
        Elem coeff = 1;
        int exponent = 0;
        std::size_t tpos = term.find('T');
        if (tpos == std::string_view::npos) {
            coeff = field->parse(term);
        } else {
            std::string_view prefix = term.substr(0, tpos), suffix = term.substr(tpos + 1);
            if (!prefix.empty()) {
                if (prefix.back() != '*') throw InputError("expected '*' before T in '" + std::string(term) + "'");
                prefix.remove_suffix(1);
                coeff = field->parse(prefix);
            }
            exponent = 1;
            if (!suffix.empty()) {
                if (suffix[0] != '^' || suffix.size() < 2) throw InputError("malformed exponent in '" + std::string(term) + "'");
                auto [ptr, ec] = std::from_chars(suffix.data() + 1, suffix.data() + suffix.size(), exponent);
                if (ec != std::errc() || ptr != suffix.data() + suffix.size() || exponent < 0 || exponent > 1 << 20)
                    throw InputError("malformed exponent in '" + std::string(term) + "'");
            }
        }
        terms[exponent] = field->add(terms[exponent], coeff);
        start = end + 1;
        if (end == s.size()) break;
    }
    std::vector<Elem> v(static_cast<std::size_t>(terms.rbegin()->first) + 1, 0);
    for (auto [k, c] : terms) v[k] = c;
    return Poly(field, std::move(v));
}

void for_each_monic(const FieldPtr& field, int d, const std::function<void(const Poly&)>& visit) {
    if (d < 0) throw DomainError("negative degree");
    const Elem q = field->q();
    std::vector<Elem> digits(static_cast<std::size_t>(d) + 1, 0);
    digits[d] = 1;
    while (true) {
        visit(Poly(field, digits));
        int i = 0;
        while (i < d && ++digits[i] == q) digits[i++] = 0;
        if (i == d) break;
    }
}

std::vector<Poly> monic_polys(const FieldPtr& field, int d) {
    std::vector<Poly> out;
    for_each_monic(field, d, [&](const Poly& p) { out.push_back(p); });
    return out;
}

}  // namespace quantj
