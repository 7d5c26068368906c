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

#ifndef QUANTJ_OPS_HPP
#define QUANTJ_OPS_HPP

#include "quantj/drinfeld.hpp"
#include "quantj/io.hpp"

namespace quantj {

/// The computations behind the CLI subcommands. Each returns the JSON payload; nothing
/// in a payload depends on timing or thread count.

AmbientPtr standard_ring(const Instance& inst);

Json op_quantum_j(const Instance& inst, std::int64_t P, int N_max);
Json op_ideal_j(const Instance& inst, int i, std::int64_t P);
/// lattice: "unit", "ideal:i" or "eps:N:l".
Json op_zeta(const Instance& inst, int weight, const std::string& lattice, std::int64_t P, ZetaKernel kernel);
Json op_lattice_eps(const Instance& inst, int N, int l, int bound);
/// z_bound 0: q^{deg g + 1} + 1.
Json op_drinfeld(const Instance& inst, int i, const std::string& gen, std::int64_t P, int z_bound);
Json op_product(const Instance& inst, std::int64_t P, int N_max);
Json op_recognize(const Instance& inst, const LaurentSeries& s, int height);

}  // namespace quantj

#endif
