/*
 * Copyright 2026 The relayopt authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef RELAYOPT_EMIT_HPP
#define RELAYOPT_EMIT_HPP

#include <string>
#include <vector>

#include "relayopt/sweep.hpp"

namespace relayopt {

// Renderers are pure string builders; identical inputs give identical bytes.

/// One row per cell: a,b,scheme,E_TOT,margin.
std::string phase_csv(const PhaseMap& pm);

/// Grid config, legend (key -> color index) and per-cell results.
std::string phase_json(const PhaseMap& pm);

/// Discrete-color heatmap with a legend block; infeasible cells use a
/// reserved color.
std::string phase_svg(const PhaseMap& pm);

/// Split vs no-split difference surface: a,b,e_nosplit,e_split,delta
/// (best per-cell energies).
std::string diff_csv(const PhaseMap& nosplit, const PhaseMap& split);

struct BoundTraceRow {
    double r_sym = 0.0;
    double e_lower = 0.0;
    double e_best_nosplit = 0.0;
    double e_best_split = 0.0;
};

std::string bound_trace_csv(const std::vector<BoundTraceRow>& rows);

/// Writes and flushes; throws std::runtime_error on I/O failure.
void write_file(const std::string& path, const std::string& content);

}  // namespace relayopt

#endif
