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

#ifndef RELAYOPT_OPTIMIZER_HPP
#define RELAYOPT_OPTIMIZER_HPP

#include <array>
#include <optional>
#include <vector>

#include "relayopt/cgras.hpp"
#include "relayopt/channel.hpp"
#include "relayopt/region.hpp"

namespace relayopt {

/// Per-relay weights in the total-power metric. The base station weight is
/// fixed to one.
struct EnergyWeights {
    double mu1 = 1.0;
    double mu2 = 1.0;
};

struct PowerSolution {
    bool feasible = false;
    std::vector<double> codeword_power;     ///< P_u, one per codeword
    std::vector<double> shares;             ///< split shares in effect
    std::array<double, kNumRelays> relay_power{0.0, 0.0};
    double access_power = 0.0;              ///< sum |tx(u)| P_u
    double bs_power = 0.0;
    double total_power = 0.0;               ///< bs + weighted relay powers
    double energy = 0.0;                    ///< E_TOT = total_power / sum(R)
    std::vector<int> binding;               ///< indices of active rate constraints

    static PowerSolution infeasible_solution();
};

/// Minimal base-station power delivering each relay its allocated messages:
/// the relay-link constraints are independent, so the optimal split is the
/// per-relay inverse-capacity requirement.
/// Returns nullopt when a relay owes rate over a zero-gain link.
std::optional<double> bs_power(const MessageAllocation& alloc, const RateTarget& target,
                               const RelayChannel& rc);

/// Per-relay decomposition of bs_power; pair (P1^BS, P2^BS).
std::optional<std::array<double, 2>> bs_power_split(const MessageAllocation& alloc,
                                                    const RateTarget& target,
                                                    const RelayChannel& rc);

/// Minimize total access power sum |tx(u)| P_u over the linearized region at
/// fixed shares. Infeasible schemes come back with feasible=false.
/// Throws SimplexIterationError if the solver exceeds its pivot budget.
PowerSolution min_access_power(const ConstraintSet& cs, const RateTarget& target,
                               const std::vector<double>& shares, const AccessChannel& ch);

/// E_TOT = (P^BS + mu1 P1^RN + mu2 P2^RN) / (R1+R2+R3).
/// Throws std::domain_error when the rate sum is zero.
double total_energy(const PowerSolution& ps, const RateTarget& target, const EnergyWeights& w);

struct SplitSearchOptions {
    double split_step = 0.05;
};

/// Grid search over the split shares of each split message (LP at each grid
/// point, zero-share parts dropped). Degenerates to a single LP for schemes
/// without splits.
PowerSolution min_power_with_splits(const Cgras& c, const AccessChannel& ch,
                                    const RateTarget& target,
                                    const SplitSearchOptions& opts = {});

struct OptimizeOptions {
    bool search_splits = true;
    SplitSearchOptions split;
    EnergyWeights weights;
};

/// Full per-scheme optimization: relay-link power, access-link LP (with
/// split search when the scheme splits), energy metric.
PowerSolution optimize_scheme(const Cgras& c, const AccessChannel& ch, const RelayChannel& rc,
                              const RateTarget& target, const OptimizeOptions& opts = {});

}  // namespace relayopt

#endif
