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

#ifndef RELAYOPT_ORACLES_HPP
#define RELAYOPT_ORACLES_HPP

#include <vector>

#include "relayopt/cgras.hpp"

namespace relayopt {

// Hand-written closed forms for the four reference schemes on the
// symmetric channel. These are written directly from the known rate
// regions, independent of the constraint generator, and exist to
// cross-check it (two-implementation testing).

struct OracleTerm {
    int receiver = 0;       ///< 1..3
    SmallSet messages = 0;  ///< messages in the rate sum
    double rhs = 0.0;
    /// True for the two scheme-D inequalities that the upward-closed
    /// generation rule does not produce; they only ever shrink the region.
    bool extra = false;
};

/// Non-cooperative, two active relays. Codeword powers (P11, P22, P23).
std::vector<OracleTerm> region_A(double a, double b, double p11, double p22, double p23);

/// Non-cooperative with interference decoding at RX2.
std::vector<OracleTerm> region_B(double a, double b, double p11, double p22, double p23);

/// Partial cooperation on W2 with maximal-ratio combining. Powers
/// (P2, P13, P21): shared W2 codeword, relay-1 -> RX3, relay-2 -> RX1.
std::vector<OracleTerm> region_C(double a, double b, double p2, double p13, double p21);

/// Partial cooperation on W2 with full interference decoding at RX1/RX3.
std::vector<OracleTerm> region_D(double a, double b, double p2, double p13, double p21);

struct SchemeAFeasibility {
    /// From combining the R1 and R2+R3 power inequalities:
    /// b <= (C^{-1}(2R) C^{-1}(R))^{-1/4}.
    double b_max_pair = 0.0;
    /// From the single-rate chain: b <= (C^{-1}(R)(1+C^{-1}(R)))^{-1/2}.
    double b_max_single = 0.0;
};

/// Necessary feasibility conditions for scheme A at symmetric rate r_sym;
/// values are capped at 1e6 as the thresholds diverge for vanishing rate.
SchemeAFeasibility scheme_A_feasibility_threshold(double r_sym);

// CGRAS fixtures for the four schemes (codewords ordered by message).
Cgras scheme_A();
Cgras scheme_B();
Cgras scheme_C();
Cgras scheme_D();

}  // namespace relayopt

#endif
