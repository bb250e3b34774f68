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

#include "relayopt/optimizer.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "relayopt/simplex.hpp"

namespace relayopt {

PowerSolution PowerSolution::infeasible_solution() {
    PowerSolution ps;
    ps.feasible = false;
    ps.energy = std::numeric_limits<double>::infinity();
    ps.total_power = std::numeric_limits<double>::infinity();
    return ps;
}

std::optional<std::array<double, 2>> bs_power_split(const MessageAllocation& alloc,
                                                    const RateTarget& target, const RelayChannel& rc) {
    std::array<double, 2> split{0.0, 0.0};
    for (int j = 1; j <= kNumRelays; ++j) {
        double rate = 0.0;
        for (int z = 1; z <= 3; ++z) {
            if (set_contains(alloc.messages_at(j), z)) rate += target.rate(z);
        }
        if (rate <= 0.0) continue;
        const double d = rc.gain(j);
        if (d <= 0.0) return std::nullopt;
        split[static_cast<std::size_t>(j - 1)] = cap_inv(rate) / (d * d);
    }
    return split;
}

std::optional<double> bs_power(const MessageAllocation& alloc, const RateTarget& target,
                               const RelayChannel& rc) {
    const auto split = bs_power_split(alloc, target, rc);
    if (!split) return std::nullopt;
    return (*split)[0] + (*split)[1];
}

PowerSolution min_access_power(const ConstraintSet& cs, const RateTarget& target,
                               const std::vector<double>& shares, const AccessChannel& ch) {
    const LinearSystem sys = linearize(cs, target, shares, ch);
    const int n = cs.num_codewords;

    PowerSolution ps;
    ps.shares = shares;
    ps.codeword_power.assign(static_cast<std::size_t>(n), 0.0);

    if (!sys.rows.empty()) {
        std::vector<std::vector<double>> a;
        std::vector<double> b;
        a.reserve(sys.rows.size());
        for (const LinearRow& row : sys.rows) {
            a.push_back(row.coeff);
            b.push_back(row.rhs);
        }
        const LpResult lp = simplex_minimize(a, b, sys.objective);
        if (lp.status == LpStatus::kUnbounded) {
            throw std::runtime_error("min_access_power: unbounded LP (nonpositive power cost?)");
        }
        if (lp.status != LpStatus::kOptimal) {
            return PowerSolution::infeasible_solution();
        }
        ps.codeword_power = lp.x;
        for (std::size_t r = 0; r < sys.rows.size(); ++r) {
            const LinearRow& row = sys.rows[r];
            if (row.constraint_index < 0) continue;
            double lhs = 0.0;
            for (int u = 0; u < n; ++u) {
                lhs += row.coeff[static_cast<std::size_t>(u)] * lp.x[static_cast<std::size_t>(u)];
            }
            if (std::fabs(lhs - row.rhs) <= 1e-7 * std::max(1.0, std::fabs(row.rhs))) {
                ps.binding.push_back(row.constraint_index);
            }
        }
    }

    ps.feasible = true;
    ps.access_power = 0.0;
    for (int u = 0; u < n; ++u) {
        const double p = ps.codeword_power[static_cast<std::size_t>(u)];
        ps.access_power += cs.tx_count[static_cast<std::size_t>(u)] * p;
        for (int j = 1; j <= kNumRelays; ++j) {
            if (set_contains(cs.tx_sets[static_cast<std::size_t>(u)], j)) {
                ps.relay_power[static_cast<std::size_t>(j - 1)] += p;
            }
        }
    }
    return ps;
}

double total_energy(const PowerSolution& ps, const RateTarget& target, const EnergyWeights& w) {
    const double rate_sum = target.sum();
    if (rate_sum <= 0.0) {
        throw std::domain_error("total_energy: rate sum is zero");
    }
    return (ps.bs_power + w.mu1 * ps.relay_power[0] + w.mu2 * ps.relay_power[1]) / rate_sum;
}

namespace {

Cgras drop_zero_share(const Cgras& c, const std::vector<double>& shares, std::vector<int>& kept) {
    Cgras out;
    out.alloc = c.alloc;
    std::vector<int> remap(static_cast<std::size_t>(c.num_codewords()), -1);
    for (int u = 0; u < c.num_codewords(); ++u) {
        if (shares[static_cast<std::size_t>(u)] <= 0.0) continue;
        remap[static_cast<std::size_t>(u)] = static_cast<int>(out.codewords.size());
        Codeword cw = c.codewords[static_cast<std::size_t>(u)];
        cw.share = shares[static_cast<std::size_t>(u)];
        out.codewords.push_back(cw);
        kept.push_back(u);
    }
    for (const auto& [base, top] : c.edges) {
        const int b = remap[static_cast<std::size_t>(base)];
        const int t = remap[static_cast<std::size_t>(top)];
        if (b >= 0 && t >= 0) out.edges.emplace_back(b, t);
    }
    return out;
}

}  // namespace

PowerSolution min_power_with_splits(const Cgras& c, const AccessChannel& ch, const RateTarget& target,
                                    const SplitSearchOptions& opts) {
    if (!(opts.split_step > 0.0) || opts.split_step > 0.5) {
        throw std::invalid_argument("min_power_with_splits: split_step must be in (0, 0.5]");
    }
    const int n = c.num_codewords();
    std::vector<double> shares(static_cast<std::size_t>(n), 0.0);
    for (int u = 0; u < n; ++u) shares[static_cast<std::size_t>(u)] = c.codewords[static_cast<std::size_t>(u)].share;

    // Pairs (first part, second part) per split message, lower index first.
    std::vector<std::pair<int, int>> split_pairs;
    for (int z = 1; z <= 3; ++z) {
        const auto parts = c.split_of(z);
        if (parts.size() == 2) {
            split_pairs.emplace_back(parts[0].first, parts[1].first);
        } else if (parts.size() > 2) {
            throw std::invalid_argument("min_power_with_splits: more than two parts per message");
        }
    }

    if (split_pairs.empty()) {
        return min_access_power(gen_constraints(c, ch), target, shares, ch);
    }

    std::vector<double> ladder;
    for (int k = 0; k * opts.split_step < 1.0 - 1e-12; ++k) ladder.push_back(k * opts.split_step);
    ladder.push_back(1.0);

    PowerSolution best = PowerSolution::infeasible_solution();
    std::vector<std::size_t> idx(split_pairs.size(), 0);
    while (true) {
        for (std::size_t s = 0; s < split_pairs.size(); ++s) {
            const double gamma = ladder[idx[s]];
            shares[static_cast<std::size_t>(split_pairs[s].first)] = gamma;
            shares[static_cast<std::size_t>(split_pairs[s].second)] = 1.0 - gamma;
        }
        std::vector<int> kept;
        const Cgras reduced = drop_zero_share(c, shares, kept);
        std::vector<double> red_shares;
        red_shares.reserve(kept.size());
        for (int u : kept) red_shares.push_back(shares[static_cast<std::size_t>(u)]);

        PowerSolution ps = min_access_power(gen_constraints(reduced, ch), target, red_shares, ch);
        if (ps.feasible && (!best.feasible || ps.access_power < best.access_power)) {
            // Map the reduced solution back onto the full codeword list.
            PowerSolution full = ps;
            full.codeword_power.assign(static_cast<std::size_t>(n), 0.0);
            full.shares = shares;
            for (std::size_t i = 0; i < kept.size(); ++i) {
                full.codeword_power[static_cast<std::size_t>(kept[i])] = ps.codeword_power[i];
            }
            best = std::move(full);
        }

        std::size_t carry = 0;
        while (carry < idx.size()) {
            if (++idx[carry] < ladder.size()) break;
            idx[carry] = 0;
            ++carry;
        }
        if (carry == idx.size()) break;
    }
    return best;
}

PowerSolution optimize_scheme(const Cgras& c, const AccessChannel& ch, const RelayChannel& rc,
                              const RateTarget& target, const OptimizeOptions& opts) {
    if (target.sum() <= 0.0) {
        PowerSolution ps;
        ps.feasible = true;
        ps.codeword_power.assign(static_cast<std::size_t>(c.num_codewords()), 0.0);
        for (int u = 0; u < c.num_codewords(); ++u) {
            ps.shares.push_back(c.codewords[static_cast<std::size_t>(u)].share);
        }
        return ps;
    }
    const auto bs = bs_power(c.alloc, target, rc);
    if (!bs) return PowerSolution::infeasible_solution();

    PowerSolution ps;
    if (opts.search_splits && c.has_split()) {
        ps = min_power_with_splits(c, ch, target, opts.split);
    } else {
        std::vector<double> shares;
        for (const Codeword& cw : c.codewords) shares.push_back(cw.share);
        ps = min_access_power(gen_constraints(c, ch), target, shares, ch);
    }
    if (!ps.feasible) return PowerSolution::infeasible_solution();

    ps.bs_power = *bs;
    ps.total_power = ps.bs_power + opts.weights.mu1 * ps.relay_power[0] + opts.weights.mu2 * ps.relay_power[1];
    ps.energy = total_energy(ps, target, opts.weights);
    return ps;
}

}  // namespace relayopt
