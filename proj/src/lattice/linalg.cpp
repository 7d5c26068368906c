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

#include "quantj/linalg.hpp"

#include "quantj/errors.hpp"

namespace quantj {

int top_index(const Coords& v) noexcept {
    for (int i = static_cast<int>(v.size()) - 1; i >= 0; --i)
        if (v[i] != 0) return i;
    return -1;
}

void trim(Coords& v) noexcept {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

void axpy(const Field& F, Coords& v, Elem c, const Coords& w) {
    if (c == 0) return;
    if (v.size() < w.size()) v.resize(w.size(), 0);
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i] != 0) v[i] = F.add(v[i], F.mul(c, w[i]));
}

Coords Echelon::reduce(Coords v, std::map<int, Elem>* multipliers) const {
    const Field& F = *field_;
    for (int i = top_index(v); i >= 0; --i) {
        if (v[i] == 0) continue;
        auto it = rows_.find(i);
        if (it == rows_.end()) continue;
        const Elem c = v[i];
        if (multipliers) (*multipliers)[i] = c;
        axpy(F, v, F.neg(c), it->second);
    }
    trim(v);
    return v;
}

bool Echelon::insert(Coords v) {
    const Field& F = *field_;
    const std::size_t id = inserted_++;
    Coords h;
    if (history_) {
        h.assign(id + 1, 0);
        h[id] = 1;
    }
    for (int i = top_index(v); i >= 0; --i) {
        if (v[i] == 0) continue;
        auto it = rows_.find(i);
        if (it == rows_.end()) {
            const Elem s = F.inv(v[i]);
            for (auto& x : v) x = F.mul(x, s);
            trim(v);
            rows_.emplace(i, std::move(v));
            if (history_) {
                for (auto& x : h) x = F.mul(x, s);
                hist_.emplace(i, std::move(h));
            }
            return true;
        }
        const Elem c = F.neg(v[i]);
        axpy(F, v, c, it->second);
        if (history_) axpy(F, h, c, hist_.at(i));
    }
    if (history_) kernel_.push_back(std::move(h));
    return false;
}

std::size_t Echelon::rank_upto(int bound) const {
    std::size_t n = 0;
    for (const auto& [p, row] : rows_) {
        if (p > bound) break;
        ++n;
    }
    return n;
}

std::vector<Coords> Echelon::rref_upto(int bound) const {
    const Field& F = *field_;
    std::map<int, Coords> done;
    for (const auto& [p, row] : rows_) {
        if (p > bound) break;
        Coords v = row;
        for (int i = p - 1; i >= 0; --i) {
            if (i >= static_cast<int>(v.size()) || v[i] == 0) continue;
            auto it = done.find(i);
            if (it != done.end()) axpy(F, v, F.neg(v[i]), it->second);
        }
        trim(v);
        done.emplace(p, std::move(v));
    }
    std::vector<Coords> out;
    out.reserve(done.size());
    for (auto& [p, row] : done) out.push_back(std::move(row));
    return out;
}

std::vector<Coords> kernel(const FieldPtr& field, const std::vector<Coords>& vectors) {
    Echelon e(field, true);
    for (const auto& v : vectors) e.insert(v);
    std::vector<Coords> out;
    for (auto k : e.kernel()) {
        k.resize(vectors.size(), 0);
        out.push_back(std::move(k));
    }
    return out;
}

std::optional<Coords> solve(const FieldPtr& field, const std::vector<Coords>& vectors, const Coords& target) {
    Echelon e(field, true);
    for (const auto& v : vectors) e.insert(v);
    std::map<int, Elem> mult;
    if (top_index(e.reduce(target, &mult)) >= 0) return std::nullopt;
    const Field& F = *field;
    Coords x(vectors.size(), 0);
    for (const auto& [p, c] : mult) axpy(F, x, c, e.history(p));
    x.resize(vectors.size(), 0);
    return x;
}

}  // namespace quantj
