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

#ifndef QUANTJ_VERIFY_HPP
#define QUANTJ_VERIFY_HPP

#include <string>
#include <vector>

#include "quantj/io.hpp"

namespace quantj {

struct Check {
    std::string name;
    bool pass = false;
    Json detail;  // witness on failure
};

struct Report {
    std::string suite;
    std::string instance;
    std::vector<Check> checks;
    bool pass() const;
    Json to_json() const;
};

/// Identities checked exactly or to precision; each returns one Check per case.
std::vector<Check> check_epsilon_closed_form(const QuadDescPtr& desc, int N_max, int extra_bound);
std::vector<Check> check_qn_distance(const QuadDescPtr& desc, int n_max, bool perturb = false);
std::vector<Check> check_binet(const QuadDescPtr& desc, int n_max, bool perturb = false);
std::vector<Check> check_power_law(const QuadDescPtr& desc);
std::vector<Check> check_invertibility(const QuadDescPtr& desc);
std::vector<Check> check_conductor(const QuadDescPtr& desc0, int k);
std::vector<Check> check_zeta_kernels(const QuadDescPtr& desc);
std::vector<Check> check_j_eps_identity(const QuadDescPtr& desc, std::int64_t P, int N_max);
std::vector<Check> check_quantum_set(const QuadDescPtr& desc, std::int64_t P, int N_max);
std::vector<Check> check_quantum_product(const QuadDescPtr& desc, std::int64_t P, int N_max);
std::vector<Check> check_class_invariance(const QuadDescPtr& desc, std::int64_t P);
std::vector<Check> check_drinfeld(const QuadDescPtr& desc, std::int64_t P, int max_ideal);
std::vector<Check> check_skew(const FieldPtr& field, int max_deg, std::uint64_t seed);
/// Reruns at P + 4 and across thread counts.
std::vector<Check> check_determinism(const Instance& inst, std::int64_t P);

std::vector<std::string> suite_names();
/// Throws InputError for an unknown suite.
Report run_suite(const std::string& name, const Instance& inst);

}  // namespace quantj

#endif
