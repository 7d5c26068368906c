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

#ifndef QUANTJ_FIELD_HPP
#define QUANTJ_FIELD_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace quantj {

/// Raw element of F_q. Extension-field elements are packed base-p digits of their
/// polynomial-basis coordinates (digit i = coefficient of X^i).
using Elem = std::uint32_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// The finite field F_q, q = p^e <= 2^16. Immutable; shared by every polynomial and
/// series built over it.
///
/// Extension fields are given by a monic irreducible modulus over F_p whose root X is
/// primitive; X is the declared generator g used by the "g^j" literal notation.
/// Log/antilog tables are an internal detail.
class Field {
   public:
    static constexpr std::uint32_t kMaxOrder = 1u << 16;

    static FieldPtr prime(std::uint32_t p);
    /// `modulus` ascending over F_p, monic, degree e >= 2.
    static FieldPtr extension(std::uint32_t p, const std::vector<std::uint32_t>& modulus);

    std::uint32_t p() const noexcept { return p_; }
    std::uint32_t e() const noexcept { return e_; }
    std::uint32_t q() const noexcept { return q_; }
    bool is_prime() const noexcept { return e_ == 1; }
    const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

    Elem add(Elem a, Elem b) const noexcept {
        if (p_ == 2) return a ^ b;
        if (e_ == 1) {
            Elem s = a + b;
            return s >= p_ ? s - p_ : s;
        }
        if (!add_table_.empty()) return add_table_[a * q_ + b];
        return add_digits(a, b);
    }
    Elem neg(Elem a) const noexcept {
        if (p_ == 2 || a == 0) return a;
        if (e_ == 1) return p_ - a;
        return neg_table_[a];
    }
    Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }
    Elem mul(Elem a, Elem b) const noexcept {
        if (a == 0 || b == 0) return 0;
        if (e_ == 1) return static_cast<Elem>((static_cast<std::uint64_t>(a) * b) % p_);
        return exp_[log_[a] + log_[b]];
    }
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, std::uint64_t k) const noexcept;
    /// Image of an integer under Z -> F_p -> F_q.
    Elem from_int(std::int64_t v) const noexcept;

    Elem generator() const noexcept { return exp_[1]; }
    /// Discrete log to base generator(); a != 0.
    std::uint32_t log(Elem a) const;

    /// Integer literal for prime fields, "g^j" for extension fields ("0" for zero).
    std::string format(Elem a) const;
    /// Inverse of format(); also accepts "g" and "1" for extension fields.
    Elem parse(std::string_view text) const;

    bool operator==(const Field& other) const noexcept {
        return p_ == other.p_ && e_ == other.e_ && modulus_ == other.modulus_;
    }

    /// Canonical description, e.g. "F_2" or "F_4[X]/(X^2+X+1)".
    std::string describe() const;

   private:
    Field() = default;
    void build_tables(Elem generator);
    Elem add_digits(Elem a, Elem b) const noexcept;
    Elem mul_digits(Elem a, Elem b) const;  // schoolbook, used to build tables

    std::uint32_t p_ = 0, e_ = 0, q_ = 0;
    std::vector<std::uint32_t> modulus_;
    std::vector<Elem> exp_;             // size 2(q-1)
    std::vector<std::uint32_t> log_;    // size q
    std::vector<std::uint16_t> add_table_;
    std::vector<Elem> neg_table_;
};

/// Throws InputError unless both fields are the same field.
void require_same_field(const Field& a, const Field& b);

}  // namespace quantj

#endif
