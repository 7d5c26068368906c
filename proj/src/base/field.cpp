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

#include "quantj/field.hpp"

#include <charconv>
#include <sstream>

#include "quantj/errors.hpp"

namespace quantj {

namespace {

bool is_prime_number(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::uint32_t> digits_of(Elem a, std::uint32_t p, std::uint32_t e) {
    std::vector<std::uint32_t> d(e);
    for (std::uint32_t i = 0; i < e; ++i) {
        d[i] = a % p;
        a /= p;
    }
    return d;
}

Elem pack_digits(const std::vector<std::uint32_t>& d, std::uint32_t p) {
    Elem v = 0;
    for (auto it = d.rbegin(); it != d.rend(); ++it) v = v * p + *it;
    return v;
}

}  // namespace

FieldPtr Field::prime(std::uint32_t p) {
    if (!is_prime_number(p) || p >= kMaxOrder) throw InputError("characteristic must be a prime below 2^16, got " + std::to_string(p));
    auto f = std::shared_ptr<Field>(new Field());
    f->p_ = p;
    f->e_ = 1;
    f->q_ = p;
    if (p == 2) {
        f->build_tables(1);
        return f;
    }
    for (Elem g = 2; g < p; ++g) {
        // g is primitive iff its powers hit 1 first at exponent p-1
        Elem x = g;
        std::uint32_t order = 1;
        while (x != 1) {
            x = static_cast<Elem>((static_cast<std::uint64_t>(x) * g) % p);
            ++order;
        }
        if (order == p - 1) {
            f->build_tables(g);
            return f;
        }
    }
    throw InputError("no primitive root found");  // unreachable for primes
}

FieldPtr Field::extension(std::uint32_t p, const std::vector<std::uint32_t>& modulus) {
    if (!is_prime_number(p)) throw InputError("characteristic must be prime, got " + std::to_string(p));
    if (modulus.size() < 3) throw InputError("extension modulus must have degree >= 2");
    if (modulus.back() != 1) throw InputError("extension modulus must be monic");
    for (auto c : modulus)
        if (c >= p) throw InputError("modulus coefficient out of range 0..p-1");
    std::uint32_t e = static_cast<std::uint32_t>(modulus.size() - 1);
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < e; ++i) {
        q *= p;
        if (q > kMaxOrder) throw InputError("field order exceeds 2^16");
    }
    auto f = std::shared_ptr<Field>(new Field());
    f->p_ = p;
    f->e_ = e;
    f->q_ = static_cast<std::uint32_t>(q);
    f->modulus_ = modulus;
    if (f->q_ <= 256) {
        f->add_table_.resize(static_cast<std::size_t>(f->q_) * f->q_);
        for (Elem a = 0; a < f->q_; ++a)
            for (Elem b = 0; b < f->q_; ++b) f->add_table_[a * f->q_ + b] = static_cast<std::uint16_t>(f->add_digits(a, b));
    }
    f->neg_table_.resize(f->q_);
    for (Elem a = 0; a < f->q_; ++a) {
        auto d = digits_of(a, p, e);
        for (auto& x : d) x = (p - x) % p;
        f->neg_table_[a] = pack_digits(d, p);
    }
    f->build_tables(p);  // the class of X
    return f;
}

void Field::build_tables(Elem generator) {
    exp_.assign(2 * (q_ - 1) + 1, 0);
    log_.assign(q_, 0);
    std::vector<bool> seen(q_, false);
    Elem x = 1;
    for (std::uint32_t k = 0; k < q_ - 1; ++k) {
        if (seen[x]) throw InputError("generator is not primitive; modulus must be a primitive irreducible polynomial");
        seen[x] = true;
        exp_[k] = x;
        log_[x] = k;
        x = e_ == 1 ? static_cast<Elem>((static_cast<std::uint64_t>(x) * generator) % p_) : mul_digits(x, generator);
    }
    if (x != 1) throw InputError("generator is not primitive; modulus must be a primitive irreducible polynomial");
    for (std::uint32_t k = q_ - 1; k < exp_.size(); ++k) exp_[k] = exp_[k - (q_ - 1)];
}

Elem Field::add_digits(Elem a, Elem b) const noexcept {
    Elem r = 0, scale = 1;
    for (std::uint32_t i = 0; i < e_; ++i) {
        r += ((a % p_ + b % p_) % p_) * scale;
        a /= p_;
        b /= p_;
        scale *= p_;
    }
    return r;
}

Elem Field::mul_digits(Elem a, Elem b) const {
    auto x = digits_of(a, p_, e_), y = digits_of(b, p_, e_);
    std::vector<std::uint64_t> prod(2 * e_ - 1, 0);
    for (std::uint32_t i = 0; i < e_; ++i)
        for (std::uint32_t j = 0; j < e_; ++j) prod[i + j] = (prod[i + j] + static_cast<std::uint64_t>(x[i]) * y[j]) % p_;
    for (std::size_t k = prod.size(); k-- > e_;) {
        std::uint64_t c = prod[k];
        if (c == 0) continue;
        for (std::uint32_t i = 0; i <= e_; ++i) prod[k - e_ + i] = (prod[k - e_ + i] + (p_ - modulus_[i]) * c) % p_;
    }
    std::vector<std::uint32_t> r(e_);
    for (std::uint32_t i = 0; i < e_; ++i) r[i] = static_cast<std::uint32_t>(prod[i]);
    return pack_digits(r, p_);
}

Elem Field::inv(Elem a) const {
    if (a == 0) throw DomainError("inverse of zero in " + describe());
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

Elem Field::pow(Elem a, std::uint64_t k) const noexcept {
    if (k == 0) return 1;
    if (a == 0) return 0;
    return exp_[static_cast<std::uint32_t>((static_cast<std::uint64_t>(log_[a]) * (k % (q_ - 1))) % (q_ - 1))];
}

Elem Field::from_int(std::int64_t v) const noexcept {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return static_cast<Elem>(r);  // prime-subfield elements are the digit-0 values
}

std::uint32_t Field::log(Elem a) const {
    if (a == 0) throw DomainError("log of zero");
    return log_[a];
}

std::string Field::format(Elem a) const {
    if (e_ == 1 || a == 0) return std::to_string(a);
    return "g^" + std::to_string(log_[a]);
}

Elem Field::parse(std::string_view text) const {
    auto parse_uint = [&](std::string_view s) -> std::uint64_t {
        std::uint64_t v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
            throw InputError("malformed field element '" + std::string(text) + "'");
        return v;
    };
    if (!text.empty() && text[0] == 'g') {
        if (e_ == 1) throw InputError("generator notation 'g^j' requires an extension field");
        if (text == "g") return generator();
        if (text.size() < 3 || text[1] != '^') throw InputError("malformed field element '" + std::string(text) + "'");
        return pow(generator(), parse_uint(text.substr(2)));
    }
    std::uint64_t v = parse_uint(text);
    if (e_ == 1) {
        if (v >= p_) throw InputError("coefficient " + std::string(text) + " out of range 0.." + std::to_string(p_ - 1));
        return static_cast<Elem>(v);
    }
    if (v > 1) throw InputError("extension-field coefficients are written 0, 1 or g^j");
    return static_cast<Elem>(v);
}

std::string Field::describe() const {
    std::ostringstream os;
    os << "F_" << q_;
    if (e_ > 1) {
        os << "[X]/(";
        bool first = true;
        for (std::size_t i = modulus_.size(); i-- > 0;) {
            if (modulus_[i] == 0) continue;
            if (!first) os << "+";
            first = false;
            if (modulus_[i] != 1 || i == 0) os << modulus_[i];
            if (i > 0) os << (modulus_[i] != 1 ? "*X" : "X");
            if (i > 1) os << "^" << i;
        }
        os << ")";
    }
    return os.str();
}

void require_same_field(const Field& a, const Field& b) {
    if (&a != &b && !(a == b)) throw InputError("operands live over different fields: " + a.describe() + " vs " + b.describe());
}

}  // namespace quantj
