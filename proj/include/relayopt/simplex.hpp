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

#ifndef RELAYOPT_SIMPLEX_HPP
#define RELAYOPT_SIMPLEX_HPP

#include <stdexcept>
#include <vector>

namespace relayopt {

/// Raised when a phase exceeds its pivot budget. Carries enough context to
/// diagnose the instance; never swallowed into an "infeasible" result.
class SimplexIterationError : public std::runtime_error {
  public:
    explicit SimplexIterationError(const std::string& what) : std::runtime_error(what) {}
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LpResult {
    LpStatus status = LpStatus::kInfeasible;
    std::vector<double> x;
    double objective = 0.0;
};

/// Minimize c.x subject to A x >= b, x >= 0.
///
/// Dense two-phase primal simplex with Bland's anti-cycling rule.
/// Feasibility tolerance 1e-9; pivot budget 10*(vars+rows) per phase. The
/// instances this project produces are tiny (about a dozen variables and
/// at most a few dozen rows), so nothing fancier is warranted.
LpResult simplex_minimize(const std::vector<std::vector<double>>& a,
                          const std::vector<double>& b,
                          const std::vector<double>& c);

}  // namespace relayopt

#endif
