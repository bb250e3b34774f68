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

#include <cmath>
#include <random>

#include "doctest.h"
#include "relayopt/optimizer.hpp"
#include "relayopt/oracles.hpp"
#include "relayopt/region.hpp"
#include "support.hpp"

using namespace relayopt;
using relayopt::testsupport::find_constraint;

TEST_CASE("closed-form values") {
    SUBCASE("region A at zero power") {
        for (const OracleTerm& t : region_A(0.7, 1.1, 0, 0, 0)) CHECK(t.rhs == 0.0);
    }
    SUBCASE("region A with b = 0 decouples RX1") {
        const auto terms = region_A(1.0, 0.0, 1.0, 1.0, 1.0);
        CHECK(terms[0].rhs == doctest::Approx(cap_scalar(1.0)));  // C(1) = 0.5
        CHECK(terms[0].rhs == doctest::Approx(0.5));
    }
    SUBCASE("region B at zero power") {
        for (const OracleTerm& t : region_B(0.3, 0.9, 0, 0, 0)) CHECK(t.rhs == 0.0);
    }
    SUBCASE("region C combining at unit parameters") {
        const auto terms = region_C(1.0, 1.0, 1.0, 0.0, 0.0);
        // R2 <= C(4) = 0.5 log2(5)
        CHECK(terms[4].messages == set_of(2));
        CHECK(terms[4].rhs == doctest::Approx(0.5 * std::log2(5.0)));
    }
    SUBCASE("region D flags exactly the two extra inequalities") {
        int extra = 0;
        for (const OracleTerm& t : region_D(0.5, 0.5, 1, 1, 1)) {
            if (t.extra) {
                ++extra;
                CHECK((t.messages == set_of(1, 2) || t.messages == set_of(2, 3)));
            }
        }
        CHECK(extra == 2);
    }
}

TEST_CASE("feasibility thresholds") {
    SUBCASE("r = 0.5") {
        const auto th = scheme_A_feasibility_threshold(0.5);
        CHECK(th.b_max_pair == doctest::Approx(std::pow(3.0, -0.25)).epsilon(1e-12));
        CHECK(th.b_max_single == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
    }
    SUBCASE("r = 1") {
        const auto th = scheme_A_feasibility_threshold(1.0);
        CHECK(th.b_max_pair == doctest::Approx(std::pow(45.0, -0.25)).epsilon(1e-12));
    }
    SUBCASE("vanishing rate caps at 1e6") {
        const auto th = scheme_A_feasibility_threshold(1e-15);
        CHECK(th.b_max_pair == 1e6);
        CHECK(th.b_max_single == 1e6);
    }
}

TEST_CASE("LP infeasible above the pair threshold") {
    // Necessary condition: one-directional check only.
    const RelayChannel rc = symmetric_relay_channel();
    for (double r : {0.3, 0.5, 0.8}) {
        const double bmax = scheme_A_feasibility_threshold(r).b_max_pair;
        for (double excess : {0.01, 0.1, 0.4}) {
            const double b = bmax + excess;
            const auto ps =
                optimize_scheme(scheme_A(), symmetric_channel(1.3, b), rc, RateTarget::symmetric(r));
            CHECK(!ps.feasible);
        }
    }
}

TEST_CASE("oracle regions equal generated regions pointwise") {
    std::mt19937_64 rng(321);
    std::uniform_real_distribution<double> uab(0.0, 2.0), up(0.0, 10.0);
    double worst = 0.0;
    for (int i = 0; i < 300; ++i) {
        const double a = uab(rng), b = uab(rng);
        const AccessChannel ch = symmetric_channel(a, b);
        const double p0 = up(rng), p1 = up(rng), p2 = up(rng);

        const auto csA = gen_constraints(scheme_A(), ch);
        for (const OracleTerm& t : region_A(a, b, p0, p1, p2)) {
            const auto k = find_constraint(csA, t.receiver, t.messages);
            REQUIRE(k.has_value());
            worst = std::max(worst, std::fabs(csA.constraints[*k].rhs({p0, p1, p2}) - t.rhs));
        }
        const auto csB = gen_constraints(scheme_B(), ch);
        for (const OracleTerm& t : region_B(a, b, p0, p1, p2)) {
            const auto k = find_constraint(csB, t.receiver, t.messages);
            REQUIRE(k.has_value());
            worst = std::max(worst, std::fabs(csB.constraints[*k].rhs({p0, p1, p2}) - t.rhs));
        }
        // scheme C/D codewords are ordered (W1, W2, W3) = powers (P21, P2, P13)
        const std::vector<double> pc = {p2, p0, p1};
        const auto csC = gen_constraints(scheme_C(), ch);
        for (const OracleTerm& t : region_C(a, b, p0, p1, p2)) {
            const auto k = find_constraint(csC, t.receiver, t.messages);
            REQUIRE(k.has_value());
            worst = std::max(worst, std::fabs(csC.constraints[*k].rhs(pc) - t.rhs));
        }
        const auto csD = gen_constraints(scheme_D(), ch);
        for (const OracleTerm& t : region_D(a, b, p0, p1, p2)) {
            const auto k = find_constraint(csD, t.receiver, t.messages);
            if (t.extra) {
                CHECK(!k.has_value());  // not upward closed, must not be generated
                continue;
            }
            REQUIRE(k.has_value());
            worst = std::max(worst, std::fabs(csD.constraints[*k].rhs(pc) - t.rhs));
        }
    }
    CHECK(worst < 1e-9);
}
