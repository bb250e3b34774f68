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

#ifndef RELAYOPT_CHANNEL_HPP
#define RELAYOPT_CHANNEL_HPP

#include <array>
#include <limits>
#include <string>

namespace relayopt {

inline constexpr int kNumRelays = 2;
inline constexpr int kNumReceivers = 3;

/// Relay -> receiver link: a 3x2 matrix of nonnegative real gains.
/// h[z][j] is the gain from relay j+1 toward receiver z+1. Noise variance
/// is fixed to one at every terminal.
struct AccessChannel {
    std::array<std::array<double, kNumRelays>, kNumReceivers> h{};
    /// Per-relay transmit power caps. Unbounded by default, which is the
    /// right setting for power minimization.
    std::array<double, kNumRelays> relay_power_limit{
        std::numeric_limits<double>::infinity(),
        std::numeric_limits<double>::infinity()};

    double gain(int receiver, int relay) const { return h[receiver - 1][relay - 1]; }
};

/// Base station -> relay link: two orthogonal channels with gains d11, d22.
struct RelayChannel {
    double d11 = 1.0;
    double d22 = 1.0;

    double gain(int relay) const { return relay == 1 ? d11 : d22; }
};

/// Target rates in bits per channel use, one per receiver.
struct RateTarget {
    double r1 = 0.0;
    double r2 = 0.0;
    double r3 = 0.0;

    double sum() const { return r1 + r2 + r3; }
    double rate(int message) const { return message == 1 ? r1 : (message == 2 ? r2 : r3); }

    static RateTarget symmetric(double r) { return RateTarget{r, r, r}; }
};

/// Tiny fixed-capacity matrix, large enough for every product this model
/// needs (at most 3x3).
struct Mat {
    int rows = 0;
    int cols = 0;
    std::array<double, 9> a{};

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c) {}

    double& at(int r, int c) { return a[static_cast<std::size_t>(r * cols + c)]; }
    double at(int r, int c) const { return a[static_cast<std::size_t>(r * cols + c)]; }
};

Mat mat_mul(const Mat& x, const Mat& y);

/// C(snr) = 1/2 log2(1 + snr). Throws std::domain_error on negative input.
double cap_scalar(double snr);

/// C^{-1}(rate) = 4^rate - 1. Throws std::domain_error on negative input.
double cap_inv(double rate);

/// 1/2 log2 det(M M^T + I) for an amplitude matrix M. Reduces to
/// cap_scalar(m^2) for a 1x1 input.
double cap_mimo(const Mat& m);

/// The symmetric two-parameter family: H rows [1 b], [a a], [b 1].
AccessChannel symmetric_channel(double a, double b);

/// Companion relay link of the symmetric family (unit gains).
RelayChannel symmetric_relay_channel();

}  // namespace relayopt

#endif
