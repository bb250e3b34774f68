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

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

#include "doctest.h"
#include "json.hpp"
#include "relayopt/emit.hpp"
#include "relayopt/sweep.hpp"

using namespace relayopt;

TEST_CASE("grid coordinates") {
    GridSpec g;
    g.a_min = 0.0;
    g.a_max = 2.0;
    g.a_steps = 21;
    CHECK(g.a_at(0) == 0.0);
    CHECK(g.a_at(20) == 2.0);
    CHECK(g.a_at(10) == doctest::Approx(1.0));
    GridSpec single;
    single.a_steps = 1;
    CHECK(single.a_at(0) == single.a_min);
}

TEST_CASE("tie_break") {
    const std::vector<std::string> keys = {"alpha", "bravo", "charlie"};
    SUBCASE("single candidate wins") {
        CHECK(tie_break({{2, 1.0}}, {}, keys, 0.05) == 2);
    }
    SUBCASE("neighbor majority wins within tolerance") {
        const std::vector<CellCandidate> cands = {{0, 1.00}, {1, 1.03}};
        CHECK(tie_break(cands, {1, 1, 0}, keys, 0.05) == 1);
    }
    SUBCASE("outside tolerance the best wins regardless of neighbors") {
        const std::vector<CellCandidate> cands = {{0, 1.00}, {1, 1.20}};
        CHECK(tie_break(cands, {1, 1, 1}, keys, 0.05) == 0);
    }
    SUBCASE("no neighbors falls back to key order") {
        const std::vector<CellCandidate> cands = {{2, 1.00}, {1, 1.01}};
        CHECK(tie_break(cands, {}, keys, 0.05) == 1);  // "bravo" < "charlie"
    }
    SUBCASE("empty cell") {
        CHECK(tie_break({}, {0}, keys, 0.05) == -1);
    }
}

TEST_CASE("small no-split sweep") {
    GridSpec g;
    g.a_min = 0.4;
    g.a_max = 1.2;
    g.a_steps = 3;
    g.b_min = 0.3;
    g.b_max = 1.1;
    g.b_steps = 3;
    SweepOptions opts;
    opts.threads = 2;
    const PhaseMap pm = run_sweep(g, 0.5, opts);
    REQUIRE(pm.cells.size() == 9);
    for (const CellResult& cell : pm.cells) {
        REQUIRE(cell.feasible);
        CHECK(cell.winner >= 0);
        CHECK(cell.best_energy > 0.0);
        CHECK(cell.winner_energy >= cell.best_energy - 1e-12);
        CHECK(cell.winner_energy <= cell.best_energy * (1.0 + pm.tie_tolerance) + 1e-12);
        CHECK(cell.margin >= 0.0);
        CHECK(cell.diagnostic.empty());
    }

    SUBCASE("deterministic across runs and thread counts") {
        SweepOptions serial = opts;
        serial.threads = 1;
        const PhaseMap pm1 = run_sweep(g, 0.5, serial);
        const PhaseMap pm2 = run_sweep(g, 0.5, opts);
        CHECK(phase_csv(pm1) == phase_csv(pm));
        CHECK(phase_csv(pm2) == phase_csv(pm));
        CHECK(phase_json(pm1) == phase_json(pm));
        CHECK(phase_svg(pm1) == phase_svg(pm));
    }
}

TEST_CASE("empty grid produces an empty map") {
    GridSpec g;
    g.a_steps = 0;
    g.b_steps = 0;
    const PhaseMap pm = run_sweep(g, 0.5, SweepOptions{});
    CHECK(pm.cells.empty());
    CHECK(phase_csv(pm) == "a,b,scheme,E_TOT,margin\n");
}

TEST_CASE("split dominance on a small grid") {
    GridSpec g;
    g.a_min = 0.2;
    g.a_max = 1.6;
    g.a_steps = 4;
    g.b_min = 0.2;
    g.b_max = 1.6;
    g.b_steps = 4;
    SweepOptions nosplit;
    nosplit.threads = 2;
    SweepOptions split = nosplit;
    split.split_mode = true;
    split.split.split_step = 0.25;
    const PhaseMap pm_ns = run_sweep(g, 1.0, nosplit);
    const PhaseMap pm_sp = run_sweep(g, 1.0, split);
    for (std::size_t i = 0; i < pm_ns.cells.size(); ++i) {
        REQUIRE(pm_ns.cells[i].feasible);
        REQUIRE(pm_sp.cells[i].feasible);
        CHECK(pm_sp.cells[i].best_energy <= pm_ns.cells[i].best_energy + 1e-9);
    }
    const std::string diff = diff_csv(pm_ns, pm_sp);
    CHECK(std::count(diff.begin(), diff.end(), '\n') == 17);  // header + 16 cells
    CHECK(diff.rfind("a,b,e_nosplit,e_split,delta\n", 0) == 0);
}

TEST_CASE("infeasible cells are marked, not fatal") {
    // a = 0 cuts off receiver 2 entirely
    GridSpec g;
    g.a_min = 0.0;
    g.a_max = 0.0;
    g.a_steps = 1;
    g.b_min = 0.5;
    g.b_max = 0.5;
    g.b_steps = 1;
    const PhaseMap pm = run_sweep(g, 0.5, SweepOptions{});
    REQUIRE(pm.cells.size() == 1);
    CHECK(!pm.cells[0].feasible);
    const std::string csv = phase_csv(pm);
    CHECK(csv.find("infeasible") != std::string::npos);
}

TEST_CASE("emitters") {
    GridSpec g;
    g.a_min = 0.5;
    g.a_max = 1.0;
    g.a_steps = 2;
    g.b_min = 0.5;
    g.b_max = 1.0;
    g.b_steps = 2;
    SweepOptions opts;
    opts.threads = 1;
    const PhaseMap pm = run_sweep(g, 0.3, opts);

    SUBCASE("csv has a header and one row per cell") {
        const std::string csv = phase_csv(pm);
        CHECK(std::count(csv.begin(), csv.end(), '\n') == 5);
        CHECK(csv.rfind("a,b,scheme,E_TOT,margin\n", 0) == 0);
        // keys keep commas out of the row format
        CHECK(std::count(csv.begin(), csv.end(), ',') == 5 * 4);
    }
    SUBCASE("json round-trips and carries the legend") {
        const auto j = nlohmann::json::parse(phase_json(pm));
        CHECK(j["grid"]["a_steps"] == 2);
        CHECK(j["cells"].size() == 4);
        CHECK(j["legend"].size() >= 1);
        CHECK(j["r_sym"] == 0.3);
    }
    SUBCASE("svg draws every cell and a legend") {
        const std::string svg = phase_svg(pm);
        CHECK(svg.find("<svg") == 0);
        // 4 cells + legend swatches + background
        CHECK(std::count(svg.begin(), svg.end(), '\n') > 8);
        CHECK(svg.find("infeasible") != std::string::npos);
        CHECK(svg.find("R_sym=0.3") != std::string::npos);
    }
    SUBCASE("write_file round trip") {
        const std::string path = "emit_test_tmp.csv";
        write_file(path, phase_csv(pm));
        std::ifstream f(path);
        std::string content((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
        CHECK(content == phase_csv(pm));
        std::remove(path.c_str());
        CHECK_THROWS_AS(write_file("no_such_dir/x.csv", "x"), std::runtime_error);
    }
}

TEST_CASE("winner energies respect the mirror symmetry") {
    GridSpec g;
    g.a_min = 0.4;
    g.a_max = 1.4;
    g.a_steps = 2;
    g.b_min = 0.6;
    g.b_max = 1.2;
    g.b_steps = 2;
    SweepOptions opts;
    opts.threads = 1;
    const PhaseMap pm = run_sweep(g, 0.5, opts);
    const auto schemes = enumerate_all_schemes(EnumOptions{}, true);
    const RelayChannel rc = symmetric_relay_channel();
    for (const CellResult& cell : pm.cells) {
        REQUIRE(cell.feasible);
        const Cgras mirrored = mirror_scheme(schemes[static_cast<std::size_t>(cell.winner)]);
        const auto ps = optimize_scheme(mirrored, symmetric_channel(cell.a, cell.b), rc,
                                        RateTarget::symmetric(0.5));
        REQUIRE(ps.feasible);
        CHECK(ps.energy == doctest::Approx(cell.winner_energy).epsilon(1e-6));
    }
}

TEST_CASE("bound trace layout") {
    const std::string csv = bound_trace_csv({{1.0, 2.0, 4.0, 3.0}, {2.0, 5.0, 9.0, 8.0}});
    CHECK(csv == "r_sym,e_lower,e_best_nosplit,e_best_split\n1,2,4,3\n2,5,9,8\n");
}
