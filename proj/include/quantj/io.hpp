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

#ifndef QUANTJ_IO_HPP
#define QUANTJ_IO_HPP

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "quantj/lattice.hpp"

namespace quantj {

inline constexpr const char* kVersion = "0.1.0";

using Json = nlohmann::ordered_json;

/// {"val", "prec", "coeffs"}: ascending coefficients from val, integers over prime fields
/// and "g^j" strings over extensions. Zero to precision has val = prec and no coeffs.
Json series_to_json(const LaurentSeries& s);
LaurentSeries series_from_json(const FieldPtr& field, const Json& j);

/// Expression in T, f, integer constants and (extension fields) the generator g,
/// with + - * ^ and parentheses.
QuadElem parse_quad(const QuadDescPtr& desc, std::string_view text);

struct Instance {
    std::string name;
    std::uint32_t q = 0, p = 0;
    std::vector<std::uint32_t> modulus;  // empty for prime fields
    std::string a, b;
    std::optional<std::pair<std::string, std::string>> f0;  // (a0, b0) with f = f0^k
    int k = 1;
    std::int64_t precision = 0;  // 0: default for q
    int N_max = 12;
    std::optional<int> bound;
    std::uint64_t seed = 1;
    std::string inject;  // "qseq": perturb Q_3 in the recurrence checks

    FieldPtr field;
    QuadDescPtr desc;
    QuadDescPtr desc0;  // only with f0

    std::int64_t P() const { return precision > 0 ? precision : (q == 2 ? 16 : 24); }
    /// Field and unit, independent of run settings; part of every cache key.
    Json canonical() const;
};

/// Throws InputError on malformed content.
Instance parse_instance(const Json& j);
Instance load_instance(const std::filesystem::path& path);

enum class CacheStatus { Disabled, Hit, Miss, Evicted };
std::string to_string(CacheStatus s);

/// One JSON file per record, named by the content hash of (operation, inputs, version).
/// Writes go to a temporary file that is renamed into place.
class Cache {
   public:
    explicit Cache(std::optional<std::filesystem::path> dir);
    bool enabled() const noexcept { return dir_.has_value(); }
    Json get_or_compute(const std::string& operation, const Json& inputs, const std::function<Json()>& compute, CacheStatus* status = nullptr);
    static std::string key(const std::string& operation, const Json& inputs);

   private:
    std::optional<std::filesystem::path> dir_;
};

}  // namespace quantj

#endif
