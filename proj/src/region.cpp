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

#include "relayopt/region.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace relayopt {

double RateConstraint::rhs(const std::vector<double>& power) const {
    double s = 0.0;
    double i = 0.0;
    for (std::size_t u = 0; u < signal.size(); ++u) {
        s += signal[u] * power[u];
        i += interference[u] * power[u];
    }
    return cap_scalar(s / (1.0 + i));
}

std::array<CwMask, kNumReceivers> decode_sets(const Cgras& c) {
    std::array<CwMask, kNumReceivers> d{};
    for (int u = 0; u < c.num_codewords(); ++u) {
        for (int z = 1; z <= kNumReceivers; ++z) {
            if (set_contains(c.codewords[static_cast<std::size_t>(u)].rx, z)) {
                d[static_cast<std::size_t>(z - 1)] |= 1u << u;
            }
        }
    }
    return d;
}

std::vector<CwMask> error_subsets(CwMask decode_set, int num_codewords,
                                  const std::vector<std::pair<int, int>>& edges) {
    std::vector<CwMask> tops(static_cast<std::size_t>(num_codewords), 0);
    for (const auto& [base, top] : edges) {
        tops[static_cast<std::size_t>(base)] |= 1u << top;
    }
    std::vector<CwMask> out;
    // Iterate nonempty submasks of the decode set.
    for (CwMask t = decode_set; t != 0; t = (t - 1) & decode_set) {
        bool closed = true;
        for (int u = 0; u < num_codewords && closed; ++u) {
            if (!(t >> u & 1u)) continue;
            if ((tops[static_cast<std::size_t>(u)] & decode_set & ~t) != 0) closed = false;
        }
        if (closed) out.push_back(t);
    }
    // Submask iteration runs high to low; report in ascending order.
    std::reverse(out.begin(), out.end());
    return out;
}

ConstraintSet gen_constraints(const Cgras& c, const AccessChannel& ch) {
    const int n = c.num_codewords();
    ConstraintSet cs;
    cs.num_codewords = n;
    for (const Codeword& cw : c.codewords) {
        cs.message.push_back(cw.message);
        cs.tx_count.push_back(set_size(cw.tx));
        cs.tx_sets.push_back(cw.tx);
    }

    const auto decode = decode_sets(c);
    for (int z = 1; z <= kNumReceivers; ++z) {
        // Shared codewords combine coherently: amplitude coefficient is the
        // sum of the gains over the transmitting relays, squared.
        std::vector<double> coef(static_cast<std::size_t>(n), 0.0);
        for (int u = 0; u < n; ++u) {
            double amp = 0.0;
            for (int j = 1; j <= kNumRelays; ++j) {
                if (set_contains(c.codewords[static_cast<std::size_t>(u)].tx, j)) {
                    amp += ch.gain(z, j);
                }
            }
            coef[static_cast<std::size_t>(u)] = amp * amp;
        }
        const CwMask dz = decode[static_cast<std::size_t>(z - 1)];
        for (CwMask t : error_subsets(dz, n, c.edges)) {
            RateConstraint rc;
            rc.receiver = z;
            rc.subset = t;
            rc.signal.assign(static_cast<std::size_t>(n), 0.0);
            rc.interference.assign(static_cast<std::size_t>(n), 0.0);
            for (int u = 0; u < n; ++u) {
                if (t >> u & 1u) {
                    rc.signal[static_cast<std::size_t>(u)] = coef[static_cast<std::size_t>(u)];
                } else if (!(dz >> u & 1u)) {
                    rc.interference[static_cast<std::size_t>(u)] = coef[static_cast<std::size_t>(u)];
                }
            }
            cs.constraints.push_back(std::move(rc));
        }
    }
    return cs;
}

LinearSystem linearize(const ConstraintSet& cs, const RateTarget& target,
                       const std::vector<double>& shares, const AccessChannel& ch) {
    if (static_cast<int>(shares.size()) != cs.num_codewords) {
        throw std::invalid_argument("linearize: shares size mismatch");
    }
    LinearSystem sys;
    sys.objective.assign(static_cast<std::size_t>(cs.num_codewords), 0.0);
    for (int u = 0; u < cs.num_codewords; ++u) {
        sys.objective[static_cast<std::size_t>(u)] = cs.tx_count[static_cast<std::size_t>(u)];
    }
    for (std::size_t k = 0; k < cs.constraints.size(); ++k) {
        const RateConstraint& rc = cs.constraints[k];
        double rate_sum = 0.0;
        for (int u = 0; u < cs.num_codewords; ++u) {
            if (rc.subset >> u & 1u) {
                rate_sum += shares[static_cast<std::size_t>(u)] *
                            target.rate(cs.message[static_cast<std::size_t>(u)]);
            }
        }
        const double q = cap_inv(rate_sum);
        if (q <= 0.0) continue;  // zero-rate subsets hold trivially
        LinearRow row;
        row.constraint_index = static_cast<int>(k);
        row.coeff.assign(static_cast<std::size_t>(cs.num_codewords), 0.0);
        for (int u = 0; u < cs.num_codewords; ++u) {
            row.coeff[static_cast<std::size_t>(u)] =
                rc.signal[static_cast<std::size_t>(u)] - q * rc.interference[static_cast<std::size_t>(u)];
        }
        row.rhs = q;
        sys.rows.push_back(std::move(row));
    }
    for (int j = 1; j <= kNumRelays; ++j) {
        const double cap = ch.relay_power_limit[static_cast<std::size_t>(j - 1)];
        if (!std::isfinite(cap)) continue;
        LinearRow row;
        row.coeff.assign(static_cast<std::size_t>(cs.num_codewords), 0.0);
        for (int u = 0; u < cs.num_codewords; ++u) {
            if (set_contains(cs.tx_sets[static_cast<std::size_t>(u)], j)) {
                row.coeff[static_cast<std::size_t>(u)] = -1.0;
            }
        }
        row.rhs = -cap;
        sys.rows.push_back(std::move(row));
    }
    return sys;
}

std::string format_constraints(const ConstraintSet& cs) {
    std::string out;
    char buf[64];
    for (const RateConstraint& rc : cs.constraints) {
        out += "RX" + std::to_string(rc.receiver) + " T={";
        bool first = true;
        for (int u = 0; u < cs.num_codewords; ++u) {
            if (rc.subset >> u & 1u) {
                if (!first) out += ",";
                out += std::to_string(u);
                first = false;
            }
        }
        out += "} s=[";
        for (int u = 0; u < cs.num_codewords; ++u) {
            std::snprintf(buf, sizeof(buf), u ? " %g" : "%g", rc.signal[static_cast<std::size_t>(u)]);
            out += buf;
        }
        out += "] i=[";
        for (int u = 0; u < cs.num_codewords; ++u) {
            std::snprintf(buf, sizeof(buf), u ? " %g" : "%g", rc.interference[static_cast<std::size_t>(u)]);
            out += buf;
        }
        out += "]\n";
    }
    return out;
}

}  // namespace relayopt
