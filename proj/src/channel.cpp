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

#include "relayopt/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace relayopt {

double cap_scalar(double snr) {
    if (std::isnan(snr) || snr < 0.0) {
        throw std::domain_error("cap_scalar: negative or NaN SNR");
    }
    return 0.5 * std::log2(1.0 + snr);
}

double cap_inv(double rate) {
    if (std::isnan(rate) || rate < 0.0) {
        throw std::domain_error("cap_inv: negative or NaN rate");
    }
    return std::pow(4.0, rate) - 1.0;
}

Mat mat_mul(const Mat& x, const Mat& y) {
    Mat out(x.rows, y.cols);
    for (int r = 0; r < x.rows; ++r) {
        for (int c = 0; c < y.cols; ++c) {
            double s = 0.0;
            for (int k = 0; k < x.cols; ++k) {
                s += x.at(r, k) * y.at(k, c);
            }
            out.at(r, c) = s;
        }
    }
    return out;
}

namespace {

// Determinant by LU with partial pivoting; n <= 3 here so conditioning is
// not a concern.
double det_lu(Mat m) {
    const int n = m.rows;
    double det = 1.0;
    for (int k = 0; k < n; ++k) {
        int piv = k;
        double best = std::fabs(m.at(k, k));
        for (int r = k + 1; r < n; ++r) {
            if (std::fabs(m.at(r, k)) > best) {
                best = std::fabs(m.at(r, k));
                piv = r;
            }
        }
        if (best == 0.0) {
            return 0.0;
        }
        if (piv != k) {
            for (int c = 0; c < n; ++c) {
                std::swap(m.at(k, c), m.at(piv, c));
            }
            det = -det;
        }
        det *= m.at(k, k);
        for (int r = k + 1; r < n; ++r) {
            const double f = m.at(r, k) / m.at(k, k);
            for (int c = k; c < n; ++c) {
                m.at(r, c) -= f * m.at(k, c);
            }
        }
    }
    return det;
}

}  // namespace

double cap_mimo(const Mat& m) {
    for (int r = 0; r < m.rows; ++r) {
        for (int c = 0; c < m.cols; ++c) {
            if (!std::isfinite(m.at(r, c))) {
                throw std::domain_error("cap_mimo: non-finite entry");
            }
        }
    }
    // G = M M^T + I
    Mat g(m.rows, m.rows);
    for (int r = 0; r < m.rows; ++r) {
        for (int c = 0; c < m.rows; ++c) {
            double s = (r == c) ? 1.0 : 0.0;
            for (int k = 0; k < m.cols; ++k) {
                s += m.at(r, k) * m.at(c, k);
            }
            g.at(r, c) = s;
        }
    }
    const double det = det_lu(g);
    // det >= 1 up to roundoff for any real M
    return std::max(0.0, 0.5 * std::log2(det));
}

AccessChannel symmetric_channel(double a, double b) {
    AccessChannel ch;
    ch.h[0] = {1.0, b};
    ch.h[1] = {a, a};
    ch.h[2] = {b, 1.0};
    return ch;
}

RelayChannel symmetric_relay_channel() { return RelayChannel{1.0, 1.0}; }

}  // namespace relayopt
