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

#ifndef RELAYOPT_BOUNDS_HPP
#define RELAYOPT_BOUNDS_HPP

#include <array>
#include <cstdint>

#include "relayopt/cgras.hpp"
#include "relayopt/channel.hpp"

namespace relayopt {

/// Amplitudes the relays devote to each message: a[j][z] is relay j+1's
/// amplitude for message z+1. Row power is the relay's spent power. Under a
/// message allocation, entries of unknown messages must be zero.
struct AmplitudeMatrix {
    std::array<std::array<double, kNumReceivers>, kNumRelays> a{};

    double row_power(int relay) const;
    double total_power() const;
    bool respects_cognition(const MessageAllocation& alloc) const;
};

/// The seven genie-style inequalities on the access link: per-message,
/// per-pair and triple cuts, each a capacity of a submatrix of H*A.
bool outer_bound_holds(const AmplitudeMatrix& amp, const AccessChannel& ch, const RateTarget& target);

/// Both relay-link inequalities for a concrete base-station power split.
bool relay_rates_feasible(const MessageAllocation& alloc, const RateTarget& target,
                          const RelayChannel& rc, double p1_bs, double p2_bs);

struct LowerBoundConfig {
    int samples = 2000;       ///< Monte-Carlo samples per bisection level
    std::uint64_t seed = 1;
    double bisect_tol = 1e-3; ///< relative width of the final power bracket
};

struct LowerBoundResult {
    double e_lower = 0.0;
    double bs_power = 0.0;
    double relay_power = 0.0;
    MessageAllocation alloc;  ///< minimizing allocation
    int samples = 0;
    /// The inner search can only overestimate the true bound; the reported
    /// value is exact only up to that one-sided Monte-Carlo error.
    bool converged = false;
};

/// Energy lower bound: minimum over all 27 allocations of relay-link power
/// plus the smallest access power for which some cognition-constrained
/// amplitude matrix satisfies the outer bound. Deterministic given the seed.
/// Throws on non-convergent bisection; returns +inf energy when no
/// allocation can reach the target at any power.
LowerBoundResult energy_lower_bound(const AccessChannel& ch, const RelayChannel& rc,
                                    const RateTarget& target, const LowerBoundConfig& cfg = {});

}  // namespace relayopt

#endif
