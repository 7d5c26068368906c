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

#ifndef QUANTJ_LINALG_HPP
#define QUANTJ_LINALG_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "quantj/field.hpp"

namespace quantj {

/// Dense vector over F_q. Index i is the coordinate of the ambient basis element of
/// degree i, so the pivot of a vector is its highest nonzero index.
using Coords = std::vector<Elem>;

/// Highest nonzero index, or -1.
int top_index(const Coords& v) noexcept;
void trim(Coords& v) noexcept;
/// v += c * w (v grows as needed).
void axpy(const Field& F, Coords& v, Elem c, const Coords& w);

/// Incremental row echelon form with pivot = highest nonzero index. Rows are monic at
/// the pivot. An optional history records each row as a combination of the inserted
/// vectors, which is how kernels and solution certificates are read off.
class Echelon {
   public:
    explicit Echelon(FieldPtr field, bool track_history = false) : field_(std::move(field)), history_(track_history) {}

    /// Inserts v. Returns true if v was independent of the rows so far. With history on,
    /// a dependent insertion appends the combination that vanished to kernel().
    bool insert(Coords v);

    /// Remainder of v after eliminating every pivot (highest first). `multipliers`
    /// receives, per pivot, the multiple of that row that was subtracted.
    Coords reduce(Coords v, std::map<int, Elem>* multipliers = nullptr) const;
    bool contains(const Coords& v) const { return top_index(reduce(v)) < 0; }

    std::size_t rank() const noexcept { return rows_.size(); }
    std::size_t rank_upto(int bound) const;
    const std::map<int, Coords>& rows() const noexcept { return rows_; }
    /// Fully reduced rows with pivot <= bound, ascending pivot: each row is monic and
    /// vanishes at every other row's pivot. This form is unique for a given subspace.
    std::vector<Coords> rref_upto(int bound) const;

    std::size_t inserted() const noexcept { return inserted_; }
    /// Dependencies among the inserted vectors (history mode only).
    const std::vector<Coords>& kernel() const noexcept { return kernel_; }
    /// Combination of inserted vectors giving the row with this pivot (history mode).
    const Coords& history(int pivot) const { return hist_.at(pivot); }

   private:
    FieldPtr field_;
    bool history_;
    std::size_t inserted_ = 0;
    std::map<int, Coords> rows_;
    std::map<int, Coords> hist_;
    std::vector<Coords> kernel_;
};

/// Basis of {x : sum_i x_i vectors[i] = 0}.
std::vector<Coords> kernel(const FieldPtr& field, const std::vector<Coords>& vectors);

/// Some x with sum_i x_i vectors[i] = target, or nullopt.
std::optional<Coords> solve(const FieldPtr& field, const std::vector<Coords>& vectors, const Coords& target);

}  // namespace quantj

#endif
