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

#ifndef RELAYOPT_SWEEP_HPP
#define RELAYOPT_SWEEP_HPP

#include <string>
#include <vector>

#include "relayopt/cgras.hpp"
#include "relayopt/channel.hpp"
#include "relayopt/optimizer.hpp"

namespace relayopt {

struct GridSpec {
    double a_min = 0.0, a_max = 2.0;
    int a_steps = 21;
    double b_min = 0.0, b_max = 2.0;
    int b_steps = 21;

    double a_at(int i) const;
    double b_at(int j) const;
    int num_cells() const { return a_steps * b_steps; }
};

struct CellResult {
    double a = 0.0, b = 0.0;
    bool feasible = false;
    int winner = -1;               ///< index into PhaseMap::scheme_keys
    double winner_energy = 0.0;
    double best_energy = 0.0;      ///< strict per-cell minimum
    double margin = 0.0;           ///< runner-up energy / best - 1
    std::string diagnostic;        ///< per-cell solver error, if any
};

struct PhaseMap {
    GridSpec grid;
    double r_sym = 0.0;
    bool split_mode = false;
    double tie_tolerance = 0.05;
    std::vector<std::string> scheme_keys;
    std::vector<CellResult> cells;  ///< row-major, index = ia * b_steps + ib

    const CellResult& cell(int ia, int ib) const {
        return cells[static_cast<std::size_t>(ia * grid.b_steps + ib)];
    }
};

struct SweepOptions {
    bool split_mode = false;
    EnumOptions enum_opts;        ///< allow_splitting follows split_mode
    SplitSearchOptions split{0.25};
    EnergyWeights weights;
    double tie_tolerance = 0.05;
    int threads = 0;              ///< 0 = hardware concurrency
};

/// One candidate scheme at a cell, feasible, sorted by energy.
struct CellCandidate {
    int scheme = 0;
    double energy = 0.0;
};

/// Among candidates within (1+tol) of the best energy, prefer the scheme
/// already winning the most decided neighbor cells; remaining ties fall to
/// canonical key order.
int tie_break(const std::vector<CellCandidate>& sorted_candidates,
              const std::vector<int>& neighbor_winners,
              const std::vector<std::string>& keys, double tol);

/// Per-cell competition over the full (symmetry-deduplicated) enumeration,
/// followed by the sequential neighbor-consistency pass. Per-cell errors
/// land in the cell diagnostics without aborting the sweep.
PhaseMap run_sweep(const GridSpec& grid, double r_sym, const SweepOptions& opts = {});

}  // namespace relayopt

#endif
