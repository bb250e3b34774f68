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

#include "relayopt/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <thread>

namespace relayopt {

double GridSpec::a_at(int i) const {
    if (a_steps <= 1) return a_min;
    return a_min + (a_max - a_min) * static_cast<double>(i) / (a_steps - 1);
}

double GridSpec::b_at(int j) const {
    if (b_steps <= 1) return b_min;
    return b_min + (b_max - b_min) * static_cast<double>(j) / (b_steps - 1);
}

int tie_break(const std::vector<CellCandidate>& sorted_candidates,
              const std::vector<int>& neighbor_winners, const std::vector<std::string>& keys,
              double tol) {
    if (sorted_candidates.empty()) return -1;
    const double cutoff = sorted_candidates.front().energy * (1.0 + tol);
    int best = -1;
    int best_votes = -1;
    for (const CellCandidate& cand : sorted_candidates) {
        if (cand.energy > cutoff) break;
        int votes = 0;
        for (int w : neighbor_winners) {
            if (w == cand.scheme) ++votes;
        }
        const bool wins =
            best < 0 || votes > best_votes ||
            (votes == best_votes &&
             keys[static_cast<std::size_t>(cand.scheme)] < keys[static_cast<std::size_t>(best)]);
        if (wins) {
            best = cand.scheme;
            best_votes = votes;
        }
    }
    return best;
}

namespace {

struct CellWork {
    std::vector<CellCandidate> candidates;  // within tolerance, sorted
    double best_energy = std::numeric_limits<double>::infinity();
    double second_energy = std::numeric_limits<double>::infinity();
    std::string diagnostic;
};

}  // namespace

PhaseMap run_sweep(const GridSpec& grid, double r_sym, const SweepOptions& opts) {
    EnumOptions enum_opts = opts.enum_opts;
    enum_opts.allow_splitting = opts.split_mode;
    const std::vector<Cgras> schemes = enumerate_all_schemes(enum_opts, /*dedup_symmetry=*/true);

    PhaseMap pm;
    pm.grid = grid;
    pm.r_sym = r_sym;
    pm.split_mode = opts.split_mode;
    pm.tie_tolerance = opts.tie_tolerance;
    pm.scheme_keys.reserve(schemes.size());
    for (const Cgras& c : schemes) pm.scheme_keys.push_back(canonicalize(c));

    const RateTarget target = RateTarget::symmetric(r_sym);
    const RelayChannel rc = symmetric_relay_channel();
    const int n_cells = grid.num_cells();
    std::vector<CellWork> work(static_cast<std::size_t>(n_cells));

    OptimizeOptions oo;
    oo.split = opts.split;
    oo.weights = opts.weights;

    auto eval_cell = [&](int cell) {
        const int ia = cell / grid.b_steps;
        const int ib = cell % grid.b_steps;
        const AccessChannel ch = symmetric_channel(grid.a_at(ia), grid.b_at(ib));
        CellWork& cw = work[static_cast<std::size_t>(cell)];
        std::vector<CellCandidate> all;
        for (std::size_t s = 0; s < schemes.size(); ++s) {
            try {
                const PowerSolution ps = optimize_scheme(schemes[s], ch, rc, target, oo);
                if (!ps.feasible) continue;
                all.push_back({static_cast<int>(s), ps.energy});
                if (ps.energy < cw.best_energy) {
                    cw.second_energy = cw.best_energy;
                    cw.best_energy = ps.energy;
                } else if (ps.energy < cw.second_energy) {
                    cw.second_energy = ps.energy;
                }
            } catch (const std::exception& e) {
                if (cw.diagnostic.empty()) {
                    cw.diagnostic = pm.scheme_keys[s] + ": " + e.what();
                }
            }
        }
        std::sort(all.begin(), all.end(), [&](const CellCandidate& x, const CellCandidate& y) {
            if (x.energy != y.energy) return x.energy < y.energy;
            return pm.scheme_keys[static_cast<std::size_t>(x.scheme)] <
                   pm.scheme_keys[static_cast<std::size_t>(y.scheme)];
        });
        const double cutoff = all.empty()
                                  ? 0.0
                                  : all.front().energy * (1.0 + opts.tie_tolerance);
        for (const CellCandidate& cand : all) {
            if (cand.energy > cutoff) break;
            cw.candidates.push_back(cand);
        }
    };

    int n_threads = opts.threads > 0 ? opts.threads
                                     : static_cast<int>(std::thread::hardware_concurrency());
    n_threads = std::max(1, std::min(n_threads, n_cells));
    if (n_threads == 1) {
        for (int cell = 0; cell < n_cells; ++cell) eval_cell(cell);
    } else {
        std::atomic<int> next{0};
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(n_threads));
        for (int t = 0; t < n_threads; ++t) {
            pool.emplace_back([&] {
                for (int cell = next.fetch_add(1); cell < n_cells; cell = next.fetch_add(1)) {
                    eval_cell(cell);
                }
            });
        }
        for (std::thread& th : pool) th.join();
    }

    // Neighbor-consistency pass, row-major; only already-decided cells vote.
    pm.cells.assign(static_cast<std::size_t>(n_cells), CellResult{});
    for (int ia = 0; ia < grid.a_steps; ++ia) {
        for (int ib = 0; ib < grid.b_steps; ++ib) {
            const int cell = ia * grid.b_steps + ib;
            const CellWork& cw = work[static_cast<std::size_t>(cell)];
            CellResult& res = pm.cells[static_cast<std::size_t>(cell)];
            res.a = grid.a_at(ia);
            res.b = grid.b_at(ib);
            res.diagnostic = cw.diagnostic;
            if (cw.candidates.empty()) {
                res.feasible = false;
                continue;
            }
            std::vector<int> neighbors;
            for (int da = -1; da <= 1; ++da) {
                for (int db = -1; db <= 1; ++db) {
                    if (da == 0 && db == 0) continue;
                    const int na = ia + da;
                    const int nb = ib + db;
                    if (na < 0 || na >= grid.a_steps || nb < 0 || nb >= grid.b_steps) continue;
                    const int ncell = na * grid.b_steps + nb;
                    if (ncell >= cell) continue;  // not yet decided
                    const CellResult& nr = pm.cells[static_cast<std::size_t>(ncell)];
                    if (nr.feasible) neighbors.push_back(nr.winner);
                }
            }
            res.winner = tie_break(cw.candidates, neighbors, pm.scheme_keys, opts.tie_tolerance);
            res.feasible = res.winner >= 0;
            for (const CellCandidate& cand : cw.candidates) {
                if (cand.scheme == res.winner) {
                    res.winner_energy = cand.energy;
                    break;
                }
            }
            res.best_energy = cw.best_energy;
            res.margin = std::isinf(cw.second_energy)
                             ? std::numeric_limits<double>::infinity()
                             : (cw.best_energy > 0.0
                                    ? cw.second_energy / cw.best_energy - 1.0
                                    : 0.0);
        }
    }
    return pm;
}

}  // namespace relayopt
