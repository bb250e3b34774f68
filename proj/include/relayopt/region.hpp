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

#ifndef RELAYOPT_REGION_HPP
#define RELAYOPT_REGION_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "relayopt/cgras.hpp"
#include "relayopt/channel.hpp"

namespace relayopt {

/// Codeword subsets as bitmasks over codeword indices.
using CwMask = std::uint32_t;

/// One rate-sum inequality of a scheme's Gaussian region:
///   sum of the rates carried by the codewords in `subset`
///     <= C( sum_u signal[u] P_u / (1 + sum_u interference[u] P_u) ).
/// signal is nonzero exactly on `subset`; interference is nonzero exactly
/// on the codewords the receiver does not decode. Decoded codewords
/// outside the subset are cancelled and contribute to neither side.
struct RateConstraint {
    int receiver = 0;                  ///< 1..3
    CwMask subset = 0;                 ///< error subset T within D_receiver
    std::vector<double> signal;        ///< per codeword, (sum_{j in tx} h_zj)^2
    std::vector<double> interference;  ///< per codeword, same coefficient shape

    /// RHS value at a concrete power vector.
    double rhs(const std::vector<double>& power) const;
};

/// A scheme's region as linear-in-power constraint data plus the codeword
/// bookkeeping the optimizer needs.
struct ConstraintSet {
    int num_codewords = 0;
    std::vector<int> message;       ///< per codeword
    std::vector<int> tx_count;      ///< per codeword, |tx| (power cost multiplier)
    std::vector<SmallSet> tx_sets;  ///< per codeword
    std::vector<RateConstraint> constraints;
};

/// Decode sets D_z = {u : z in rx(u)} as codeword masks per receiver.
std::array<CwMask, kNumReceivers> decode_sets(const Cgras& c);

/// All nonempty T within D that are upward-closed: a member's tops inside D
/// belong to T as well. Each yields one joint-decoding error constraint.
std::vector<CwMask> error_subsets(CwMask decode_set, int num_codewords,
                                  const std::vector<std::pair<int, int>>& edges);

ConstraintSet gen_constraints(const Cgras& c, const AccessChannel& ch);

/// One row of the linear program: sum coeff[u] P_u >= rhs.
struct LinearRow {
    std::vector<double> coeff;
    double rhs = 0.0;
    int constraint_index = -1;  ///< back-reference into ConstraintSet, -1 for power caps
};

struct LinearSystem {
    std::vector<LinearRow> rows;
    std::vector<double> objective;  ///< per codeword, |tx(u)|
};

/// Fix target rates and split shares; each rate constraint becomes
///   S_T - C^{-1}(r_T) I_z >= C^{-1}(r_T),
/// linear in the powers. Constraints with zero rate sum are dropped.
/// Finite relay power caps become extra rows.
LinearSystem linearize(const ConstraintSet& cs, const RateTarget& target,
                       const std::vector<double>& shares,
                       const AccessChannel& ch);

/// Debug/golden text form: one row per constraint.
std::string format_constraints(const ConstraintSet& cs);

}  // namespace relayopt

#endif
