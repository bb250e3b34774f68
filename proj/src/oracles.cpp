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

#include "relayopt/oracles.hpp"

#include <algorithm>
#include <cmath>

#include "relayopt/channel.hpp"

namespace relayopt {

std::vector<OracleTerm> region_A(double a, double b, double p11, double p22, double p23) {
    return {
        {1, set_of(1), cap_scalar(p11 / (1.0 + b * b * (p22 + p23))), false},
        {2, set_of(2), cap_scalar(a * a * p22 / (1.0 + a * a * p11 + a * a * p23)), false},
        {3, set_of(2, 3), cap_scalar((p22 + p23) / (1.0 + b * b * p11)), false},
        {3, set_of(3), cap_scalar(p23 / (1.0 + b * b * p11)), false},
    };
}

std::vector<OracleTerm> region_B(double a, double b, double p11, double p22, double p23) {
    return {
        {1, set_of(1), cap_scalar(p11 / (1.0 + b * b * (p22 + p23))), false},
        {2, set_of(1, 2, 3), cap_scalar(a * a * (p11 + p22 + p23)), false},
        {2, set_of(2, 3), cap_scalar(a * a * (p22 + p23)), false},
        {2, set_of(1, 2), cap_scalar(a * a * (p11 + p22)), false},
        {2, set_of(2), cap_scalar(a * a * p22), false},
        {2, set_of(1), cap_scalar(a * a * p11), false},
        // The unscaled P22 term is h32 = 1 toward RX3.
        {3, set_of(3), cap_scalar(p23 / (1.0 + b * b * p11 + p22)), false},
    };
}

std::vector<OracleTerm> region_C(double a, double b, double p2, double p13, double p21) {
    const double comb = (b + 1.0) * (b + 1.0) * p2;  // coherent W2 combining at RX1/RX3
    return {
        {1, set_of(1, 2), cap_scalar((b * b * p21 + comb) / (1.0 + p13)), false},
        {1, set_of(1), cap_scalar(b * b * p21 / (1.0 + p13)), false},
        {3, set_of(2, 3), cap_scalar((b * b * p13 + comb) / (1.0 + p21)), false},
        {3, set_of(3), cap_scalar(b * b * p13 / (1.0 + p21)), false},
        {2, set_of(2), cap_scalar(4.0 * a * a * p2 / (1.0 + a * a * p13 + a * a * p21)), false},
    };
}

std::vector<OracleTerm> region_D(double a, double b, double p2, double p13, double p21) {
    const double comb = (b + 1.0) * (b + 1.0) * p2;
    return {
        {1, set_of(1, 2, 3), cap_scalar(b * b * p21 + comb + p13), false},
        {1, set_of(1, 3), cap_scalar(b * b * p21 + p13), false},
        {1, set_of(1, 2), cap_scalar(b * b * p21 + comb), true},
        {1, set_of(1), cap_scalar(b * b * p21), false},
        {1, set_of(3), cap_scalar(p13), false},
        {3, set_of(1, 2, 3), cap_scalar(b * b * p13 + comb + p21), false},
        {3, set_of(1, 3), cap_scalar(b * b * p13 + p21), false},
        {3, set_of(2, 3), cap_scalar(b * b * p13 + comb), true},
        {3, set_of(3), cap_scalar(b * b * p13), false},
        {3, set_of(1), cap_scalar(p21), false},
        {2, set_of(2), cap_scalar(4.0 * a * a * p2 / (1.0 + a * a * p13 + a * a * p21)), false},
    };
}

SchemeAFeasibility scheme_A_feasibility_threshold(double r_sym) {
    constexpr double kCap = 1e6;
    SchemeAFeasibility out;
    const double q = cap_inv(r_sym);
    const double q2 = cap_inv(2.0 * r_sym);
    out.b_max_pair = (q2 * q > 0.0) ? std::min(kCap, std::pow(q2 * q, -0.25)) : kCap;
    const double denom = q * (1.0 + q);
    out.b_max_single = (denom > 0.0) ? std::min(kCap, 1.0 / std::sqrt(denom)) : kCap;
    return out;
}

Cgras scheme_A() {
    Cgras c;
    c.alloc = {set_of(1), set_of(2, 3)};
    c.codewords = {
        Codeword{1, set_of(1), set_of(1), 1.0},
        Codeword{2, set_of(2), set_of(2, 3), 1.0},
        Codeword{3, set_of(2), set_of(3), 1.0},
    };
    c.edges = {{1, 2}};  // W3 rides on W2
    return c;
}

Cgras scheme_B() {
    Cgras c;
    c.alloc = {set_of(1), set_of(2, 3)};
    c.codewords = {
        Codeword{1, set_of(1), set_of(1, 2), 1.0},  // RX2 decodes the interfering W1
        Codeword{2, set_of(2), set_of(2), 1.0},
        Codeword{3, set_of(2), set_of(2, 3), 1.0},
    };
    c.edges = {{2, 1}};  // W2 rides on W3
    return c;
}

Cgras scheme_C() {
    Cgras c;
    c.alloc = {set_of(2, 3), set_of(1, 2)};
    c.codewords = {
        Codeword{1, set_of(2), set_of(1), 1.0},
        Codeword{2, set_of(1, 2), set_of(1, 2, 3), 1.0},
        Codeword{3, set_of(1), set_of(3), 1.0},
    };
    c.edges = {{1, 0}, {1, 2}};  // both private codewords ride on the shared W2
    return c;
}

Cgras scheme_D() {
    Cgras c;
    c.alloc = {set_of(2, 3), set_of(1, 2)};
    c.codewords = {
        Codeword{1, set_of(2), set_of(1, 3), 1.0},
        Codeword{2, set_of(1, 2), set_of(1, 2, 3), 1.0},
        Codeword{3, set_of(1), set_of(1, 3), 1.0},
    };
    c.edges = {{1, 0}, {1, 2}};
    return c;
}

}  // namespace relayopt
