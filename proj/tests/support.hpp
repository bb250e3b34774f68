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

#ifndef RELAYOPT_TESTS_SUPPORT_HPP
#define RELAYOPT_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cmath>
#include <optional>

#include "relayopt/cgras.hpp"
#include "relayopt/region.hpp"

namespace relayopt::testsupport {

// ---------------------------------------------------------------------------
// Brute-force power search for the non-cooperative two-relay scheme, written
// from its four closed-form inequalities only. Independent of the constraint
// generator and of the LP solver.
//
// For fixed P11 the cheapest completion is forced:
//   P23 = q (1 + b^2 P11)
//   P22 = max( q (a^-2 + P11 + P23),  Q (1 + b^2 P11) - P23 )
// with q = 4^R - 1 and Q = 4^{2R} - 1, and the candidate is feasible iff the
// remaining inequality P11 >= q (1 + b^2 (P22+P23)) holds. The total power
// is strictly increasing in P11, so a scan from below finds the minimum.
// ---------------------------------------------------------------------------

struct GridOracleResult {
    bool feasible = false;
    double total_power = 0.0;
    double p11 = 0.0;
};

struct SchemeACompletion {
    double p22 = 0.0, p23 = 0.0;
    bool ok = false;  // remaining inequality satisfied
};

inline SchemeACompletion scheme_a_completion(double a, double b, double r, double p11) {
    const double q = std::pow(4.0, r) - 1.0;
    const double qq = std::pow(4.0, 2.0 * r) - 1.0;
    SchemeACompletion c;
    c.p23 = q * (1.0 + b * b * p11);
    c.p22 = std::max(q * (1.0 / (a * a) + p11 + c.p23), qq * (1.0 + b * b * p11) - c.p23);
    c.ok = p11 + 1e-12 >= q * (1.0 + b * b * (c.p22 + c.p23));
    return c;
}

inline GridOracleResult scheme_a_grid_oracle(double a, double b, double r, double step = 1e-3,
                                             double refine = 1e-5, double p11_cap = 4096.0) {
    GridOracleResult res;
    if (r <= 0.0) {
        return {true, 0.0, 0.0};
    }
    double first_feasible = -1.0;
    for (double hi = 8.0; hi <= p11_cap && first_feasible < 0.0; hi *= 2.0) {
        const double lo = hi / 2.0 == 4.0 ? 0.0 : hi / 2.0;
        for (double p11 = lo; p11 <= hi; p11 += step) {
            if (scheme_a_completion(a, b, r, p11).ok) {
                first_feasible = p11;
                break;
            }
        }
    }
    if (first_feasible < 0.0) {
        // Tail check: totals only grow, so all that matters for bare
        // feasibility is whether the residual ever turns positive.
        if (!scheme_a_completion(a, b, r, 1e8).ok) return res;
        res.feasible = true;
        res.p11 = 1e8;
        const auto c = scheme_a_completion(a, b, r, 1e8);
        res.total_power = 1e8 + c.p22 + c.p23;
        return res;
    }
    double best = first_feasible;
    for (double p11 = std::max(0.0, first_feasible - step); p11 <= first_feasible + step;
         p11 += refine) {
        if (scheme_a_completion(a, b, r, p11).ok) {
            best = p11;
            break;
        }
    }
    const auto c = scheme_a_completion(a, b, r, best);
    res.feasible = true;
    res.p11 = best;
    res.total_power = best + c.p22 + c.p23;
    return res;
}

// Find the generated constraint matching an (receiver, message-set) label;
// the schemes under test carry one codeword per message.
inline std::optional<std::size_t> find_constraint(const ConstraintSet& cs, int receiver,
                                                  SmallSet messages) {
    for (std::size_t k = 0; k < cs.constraints.size(); ++k) {
        const RateConstraint& rc = cs.constraints[k];
        if (rc.receiver != receiver) continue;
        SmallSet msgs = 0;
        for (int u = 0; u < cs.num_codewords; ++u) {
            if (rc.subset >> u & 1u) msgs |= set_of(cs.message[static_cast<std::size_t>(u)]);
        }
        if (msgs == messages) return k;
    }
    return std::nullopt;
}

}  // namespace relayopt::testsupport

#endif
