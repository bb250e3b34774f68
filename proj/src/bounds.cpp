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

#include "relayopt/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "relayopt/optimizer.hpp"

namespace relayopt {

double AmplitudeMatrix::row_power(int relay) const {
    double p = 0.0;
    for (double v : a[static_cast<std::size_t>(relay - 1)]) p += v * v;
    return p;
}

double AmplitudeMatrix::total_power() const { return row_power(1) + row_power(2); }

bool AmplitudeMatrix::respects_cognition(const MessageAllocation& alloc) const {
    for (int j = 1; j <= kNumRelays; ++j) {
        for (int z = 1; z <= kNumReceivers; ++z) {
            if (a[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(z - 1)] != 0.0 &&
                !set_contains(alloc.messages_at(j), z)) {
                return false;
            }
        }
    }
    return true;
}

namespace {

constexpr double kSlack = 1e-12;

// H*A, the 3x3 matrix of per-receiver per-message combined amplitudes.
Mat combined_amplitudes(const AmplitudeMatrix& amp, const AccessChannel& ch) {
    Mat m(kNumReceivers, kNumReceivers);
    for (int z = 1; z <= kNumReceivers; ++z) {
        for (int w = 1; w <= kNumReceivers; ++w) {
            double s = 0.0;
            for (int j = 1; j <= kNumRelays; ++j) {
                s += ch.gain(z, j) * amp.a[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(w - 1)];
            }
            m.at(z - 1, w - 1) = s;
        }
    }
    return m;
}

Mat principal_submatrix(const Mat& m, const std::vector<int>& idx) {
    Mat out(static_cast<int>(idx.size()), static_cast<int>(idx.size()));
    for (std::size_t r = 0; r < idx.size(); ++r) {
        for (std::size_t c = 0; c < idx.size(); ++c) {
            out.at(static_cast<int>(r), static_cast<int>(c)) = m.at(idx[r], idx[c]);
        }
    }
    return out;
}

// Worst violation across the seven cuts; <= 0 means the bound holds.
double bound_violation(const Mat& ha, const RateTarget& target) {
    static const std::vector<std::vector<int>> kCuts = {
        {0}, {1}, {2}, {0, 1}, {0, 2}, {1, 2}, {0, 1, 2}};
    double worst = -std::numeric_limits<double>::infinity();
    for (const auto& cut : kCuts) {
        double need = 0.0;
        for (int z : cut) need += target.rate(z + 1);
        const double cap = cap_mimo(principal_submatrix(ha, cut));
        worst = std::max(worst, need - cap);
    }
    return worst;
}

}  // namespace

bool outer_bound_holds(const AmplitudeMatrix& amp, const AccessChannel& ch, const RateTarget& target) {
    return bound_violation(combined_amplitudes(amp, ch), target) <= kSlack;
}

bool relay_rates_feasible(const MessageAllocation& alloc, const RateTarget& target,
                          const RelayChannel& rc, double p1_bs, double p2_bs) {
    const double p[2] = {p1_bs, p2_bs};
    for (int j = 1; j <= kNumRelays; ++j) {
        double rate = 0.0;
        for (int z = 1; z <= 3; ++z) {
            if (set_contains(alloc.messages_at(j), z)) rate += target.rate(z);
        }
        const double d = rc.gain(j);
        if (rate > cap_scalar(d * d * p[j - 1]) + kSlack) return false;
    }
    return true;
}

namespace {

std::uint64_t splitmix(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t task) {
    std::uint64_t s = master ^ (task * 0xD1B54A32D192ED03ull);
    splitmix(s);
    return splitmix(s);
}

struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}
    double uniform01() { return static_cast<double>(splitmix(state) >> 11) * 0x1.0p-53; }
    double gaussian() {
        // Box-Muller; u1 kept strictly positive
        const double u1 = (static_cast<double>(splitmix(state) >> 11) + 1.0) * 0x1.0p-53;
        const double u2 = uniform01();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    }
};

// Free entries of A under the allocation, as (relay, message) pairs.
std::vector<std::pair<int, int>> allowed_entries(const MessageAllocation& alloc) {
    std::vector<std::pair<int, int>> out;
    for (int j = 1; j <= kNumRelays; ++j) {
        for (int z = 1; z <= kNumReceivers; ++z) {
            if (set_contains(alloc.messages_at(j), z)) out.emplace_back(j, z);
        }
    }
    return out;
}

AmplitudeMatrix build_amp(const std::vector<std::pair<int, int>>& entries, const std::vector<double>& x,
                          double power_budget) {
    double norm2 = 0.0;
    for (double v : x) norm2 += v * v;
    double scale = 1.0;
    if (norm2 > power_budget && norm2 > 0.0) scale = std::sqrt(power_budget / norm2);
    AmplitudeMatrix amp;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        amp.a[static_cast<std::size_t>(entries[i].first - 1)][static_cast<std::size_t>(entries[i].second - 1)] =
            x[i] * scale;
    }
    return amp;
}

// Nelder-Mead on the violation score, with the power budget enforced by
// projection onto the ball.
double polish(std::vector<double>& x, double power_budget, const std::vector<std::pair<int, int>>& entries,
              const AccessChannel& ch, const RateTarget& target) {
    const std::size_t n = x.size();
    auto f = [&](const std::vector<double>& v) {
        return bound_violation(combined_amplitudes(build_amp(entries, v, power_budget), ch), target);
    };
    std::vector<std::vector<double>> simplex(n + 1, x);
    std::vector<double> fx(n + 1);
    const double h = 0.2 * std::sqrt(power_budget / static_cast<double>(n)) + 1e-6;
    for (std::size_t i = 1; i <= n; ++i) simplex[i][i - 1] += h;
    for (std::size_t i = 0; i <= n; ++i) fx[i] = f(simplex[i]);

    for (int iter = 0; iter < 250; ++iter) {
        std::size_t best = 0, worst = 0;
        for (std::size_t i = 1; i <= n; ++i) {
            if (fx[i] < fx[best]) best = i;
            if (fx[i] > fx[worst]) worst = i;
        }
        std::size_t second = worst == 0 ? 1 : 0;
        for (std::size_t i = 0; i <= n; ++i) {
            if (i != worst && fx[i] > fx[second]) second = i;
        }
        if (fx[best] <= -kSlack || fx[worst] - fx[best] < 1e-14) break;

        std::vector<double> centroid(n, 0.0);
        for (std::size_t i = 0; i <= n; ++i) {
            if (i == worst) continue;
            for (std::size_t k = 0; k < n; ++k) centroid[k] += simplex[i][k] / static_cast<double>(n);
        }
        auto blend = [&](double t) {
            std::vector<double> v(n);
            for (std::size_t k = 0; k < n; ++k) v[k] = centroid[k] + t * (centroid[k] - simplex[worst][k]);
            return v;
        };
        std::vector<double> refl = blend(1.0);
        const double f_refl = f(refl);
        if (f_refl < fx[best]) {
            std::vector<double> exp_v = blend(2.0);
            const double f_exp = f(exp_v);
            if (f_exp < f_refl) {
                simplex[worst] = std::move(exp_v);
                fx[worst] = f_exp;
            } else {
                simplex[worst] = std::move(refl);
                fx[worst] = f_refl;
            }
        } else if (f_refl < fx[second]) {
            simplex[worst] = std::move(refl);
            fx[worst] = f_refl;
        } else {
            std::vector<double> contr = blend(-0.5);
            const double f_contr = f(contr);
            if (f_contr < fx[worst]) {
                simplex[worst] = std::move(contr);
                fx[worst] = f_contr;
            } else {
                for (std::size_t i = 0; i <= n; ++i) {
                    if (i == best) continue;
                    for (std::size_t k = 0; k < n; ++k) {
                        simplex[i][k] = 0.5 * (simplex[i][k] + simplex[best][k]);
                    }
                    fx[i] = f(simplex[i]);
                }
            }
        }
    }
    std::size_t best = 0;
    for (std::size_t i = 1; i <= n; ++i) {
        if (fx[i] < fx[best]) best = i;
    }
    x = simplex[best];
    return fx[best];
}

// Is there a cognition-constrained A within the power budget satisfying the
// outer bound? Monte-Carlo over the power sphere plus a local polish of the
// best sample.
bool amplitude_feasible(double power_budget, const std::vector<std::pair<int, int>>& entries,
                        const AccessChannel& ch, const RateTarget& target, int samples,
                        std::uint64_t seed) {
    const std::size_t n = entries.size();
    constexpr int kBatch = 256;
    std::vector<double> best_x(n, 0.0);
    double best_score = std::numeric_limits<double>::infinity();
    int batch_index = 0;
    for (int done = 0; done < samples; done += kBatch, ++batch_index) {
        Rng rng(derive_seed(seed, static_cast<std::uint64_t>(batch_index)));
        const int count = std::min(kBatch, samples - done);
        for (int s = 0; s < count; ++s) {
            std::vector<double> x(n);
            double norm2 = 0.0;
            for (std::size_t k = 0; k < n; ++k) {
                x[k] = rng.gaussian();
                norm2 += x[k] * x[k];
            }
            if (norm2 == 0.0) continue;
            const double scale = std::sqrt(power_budget / norm2);
            for (double& v : x) v *= scale;
            const double score =
                bound_violation(combined_amplitudes(build_amp(entries, x, power_budget), ch), target);
            if (score < best_score) {
                best_score = score;
                best_x = x;
                if (best_score <= -kSlack) return true;
            }
        }
    }
    if (best_score <= kSlack) return true;
    return polish(best_x, power_budget, entries, ch, target) <= kSlack;
}

}  // namespace

LowerBoundResult energy_lower_bound(const AccessChannel& ch, const RelayChannel& rc,
                                    const RateTarget& target, const LowerBoundConfig& cfg) {
    LowerBoundResult best;
    best.e_lower = std::numeric_limits<double>::infinity();
    best.samples = cfg.samples;
    const double rate_sum = target.sum();
    if (rate_sum <= 0.0) {
        best.e_lower = 0.0;
        best.converged = true;
        return best;
    }

    const auto allocations = enumerate_allocations();
    for (std::size_t ai = 0; ai < allocations.size(); ++ai) {
        const MessageAllocation& alloc = allocations[ai];
        const auto bs = bs_power(alloc, target, rc);
        if (!bs) continue;
        const auto entries = allowed_entries(alloc);
        const std::uint64_t alloc_seed = derive_seed(cfg.seed, 1000003ull * (ai + 1));

        int level = 0;
        auto feasible = [&](double p) {
            return amplitude_feasible(p, entries, ch, target, cfg.samples,
                                      derive_seed(alloc_seed, static_cast<std::uint64_t>(level++)));
        };

        double lo = 0.0;
        double hi = 1.0;
        bool found = false;
        for (int d = 0; d < 60; ++d) {
            if (feasible(hi)) {
                found = true;
                break;
            }
            lo = hi;
            hi *= 4.0;
            if (hi > 1e15) break;
        }
        if (!found) continue;  // target unreachable under this allocation

        int iters = 0;
        while (hi - lo > cfg.bisect_tol * std::max(1.0, hi)) {
            if (++iters > 200) {
                throw std::runtime_error(
                    "energy_lower_bound: bisection failed to converge (bracket [" + std::to_string(lo) +
                    ", " + std::to_string(hi) + "])");
            }
            const double mid = 0.5 * (lo + hi);
            if (feasible(mid)) {
                hi = mid;
            } else {
                lo = mid;
            }
        }

        const double e = (*bs + hi) / rate_sum;
        if (e < best.e_lower) {
            best.e_lower = e;
            best.bs_power = *bs;
            best.relay_power = hi;
            best.alloc = alloc;
            best.converged = true;
        }
    }
    return best;
}

}  // namespace relayopt
