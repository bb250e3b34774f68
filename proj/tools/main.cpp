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
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "relayopt/bounds.hpp"
#include "relayopt/cgras.hpp"
#include "relayopt/channel.hpp"
#include "relayopt/emit.hpp"
#include "relayopt/optimizer.hpp"
#include "relayopt/oracles.hpp"
#include "relayopt/sweep.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitInfeasible = 2;

struct Options {
    double a = 1.0;
    double b = 1.0;
    bool symmetric_mode = true;  // false once an explicit H is supplied
    relayopt::AccessChannel channel;
    relayopt::RelayChannel relay;

    double rate = 0.5;
    std::vector<double> rates;  // compare ladder
    bool split = false;
    double split_step = 0.05;
    int max_splits = 2;
    int max_split_messages = 1;
    bool tx_subsets = false;
    double mu1 = 1.0;
    double mu2 = 1.0;

    relayopt::GridSpec grid;
    std::string grid_shorthand;  // "min:max:steps" applied to both axes
    bool both_modes = false;
    double tie_tolerance = 0.05;
    int threads = 0;

    int samples = 2000;
    std::uint64_t seed = 1;

    std::string out_dir = ".";
    std::vector<std::string> formats = {"csv", "json", "svg"};
};

// Entries in config channels may be numbers or [re, im] pairs; anything off
// the nonnegative real axis is ingested as its magnitude.
double ingest_gain(const json& v, const std::string& what) {
    double mag = 0.0;
    bool warn = false;
    if (v.is_array()) {
        if (v.size() != 2) throw std::runtime_error(what + ": complex entry must be [re, im]");
        const double re = v[0].get<double>();
        const double im = v[1].get<double>();
        mag = std::hypot(re, im);
        warn = im != 0.0 || re < 0.0;
    } else {
        const double re = v.get<double>();
        mag = std::fabs(re);
        warn = re < 0.0;
    }
    if (warn) {
        std::cerr << "warning: " << what << " is not a nonnegative real; using magnitude " << mag
                  << " (coherent combining assumes aligned phases)\n";
    }
    return mag;
}

void load_config(const std::string& path, Options& opt) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot read config: " + path);
    json j = json::parse(f);

    if (j.contains("channel")) {
        const json& c = j["channel"];
        if (c.contains("H")) {
            const json& h = c["H"];
            if (!h.is_array() || h.size() != 3 || !h[0].is_array() || h[0].size() != 2) {
                throw std::runtime_error("channel.H must be a 3x2 array");
            }
            for (int z = 0; z < 3; ++z) {
                for (int r = 0; r < 2; ++r) {
                    opt.channel.h[z][r] = ingest_gain(h[z][r], "H[" + std::to_string(z + 1) + "][" +
                                                                   std::to_string(r + 1) + "]");
                }
            }
            opt.symmetric_mode = false;
            if (c.contains("d")) {
                opt.relay.d11 = ingest_gain(c["d"][0], "d11");
                opt.relay.d22 = ingest_gain(c["d"][1], "d22");
            }
        } else {
            if (c.contains("a")) opt.a = c["a"].get<double>();
            if (c.contains("b")) opt.b = c["b"].get<double>();
        }
    }
    if (j.contains("a")) opt.a = j["a"].get<double>();
    if (j.contains("b")) opt.b = j["b"].get<double>();
    if (j.contains("rate")) opt.rate = j["rate"].get<double>();
    if (j.contains("rates")) opt.rates = j["rates"].get<std::vector<double>>();
    if (j.contains("split")) opt.split = j["split"].get<bool>();
    if (j.contains("split_step")) opt.split_step = j["split_step"].get<double>();
    if (j.contains("max_splits")) opt.max_splits = j["max_splits"].get<int>();
    if (j.contains("max_split_messages")) opt.max_split_messages = j["max_split_messages"].get<int>();
    if (j.contains("tx_subsets")) opt.tx_subsets = j["tx_subsets"].get<bool>();
    if (j.contains("mu1")) opt.mu1 = j["mu1"].get<double>();
    if (j.contains("mu2")) opt.mu2 = j["mu2"].get<double>();
    if (j.contains("grid")) {
        const json& g = j["grid"];
        if (g.contains("a_min")) opt.grid.a_min = g["a_min"].get<double>();
        if (g.contains("a_max")) opt.grid.a_max = g["a_max"].get<double>();
        if (g.contains("a_steps")) opt.grid.a_steps = g["a_steps"].get<int>();
        if (g.contains("b_min")) opt.grid.b_min = g["b_min"].get<double>();
        if (g.contains("b_max")) opt.grid.b_max = g["b_max"].get<double>();
        if (g.contains("b_steps")) opt.grid.b_steps = g["b_steps"].get<int>();
    }
    if (j.contains("both")) opt.both_modes = j["both"].get<bool>();
    if (j.contains("tie_tolerance")) opt.tie_tolerance = j["tie_tolerance"].get<double>();
    if (j.contains("threads")) opt.threads = j["threads"].get<int>();
    if (j.contains("samples")) opt.samples = j["samples"].get<int>();
    if (j.contains("seed")) opt.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("out_dir")) opt.out_dir = j["out_dir"].get<std::string>();
    if (j.contains("format")) opt.formats = j["format"].get<std::vector<std::string>>();
}

void apply_grid_shorthand(Options& opt) {
    if (opt.grid_shorthand.empty()) return;
    double lo = 0.0, hi = 0.0;
    int steps = 0;
    if (std::sscanf(opt.grid_shorthand.c_str(), "%lf:%lf:%d", &lo, &hi, &steps) != 3 || steps < 0) {
        throw std::runtime_error("--grid expects min:max:steps, got " + opt.grid_shorthand);
    }
    opt.grid.a_min = opt.grid.b_min = lo;
    opt.grid.a_max = opt.grid.b_max = hi;
    opt.grid.a_steps = opt.grid.b_steps = steps;
}

relayopt::EnumOptions enum_options(const Options& opt) {
    relayopt::EnumOptions eo;
    eo.allow_splitting = opt.split;
    eo.max_splits = opt.max_splits;
    eo.max_split_messages = opt.max_split_messages;
    eo.tx_full_knowing_set = !opt.tx_subsets;
    return eo;
}

relayopt::AccessChannel access_channel(const Options& opt) {
    return opt.symmetric_mode ? relayopt::symmetric_channel(opt.a, opt.b) : opt.channel;
}

int cmd_enumerate(const Options& opt, const std::string& out_file) {
    const auto schemes = relayopt::enumerate_all_schemes(enum_options(opt), opt.symmetric_mode);
    std::string body;
    for (const auto& c : schemes) body += relayopt::canonicalize(c) + "\n";
    if (!out_file.empty()) {
        relayopt::write_file(out_file, body);
        std::cout << schemes.size() << " schemes written to " << out_file << "\n";
    } else {
        std::cout << body << schemes.size() << " schemes\n";
    }
    return kExitOk;
}

int cmd_optimize(const Options& opt) {
    const relayopt::AccessChannel ch = access_channel(opt);
    const relayopt::RateTarget target = relayopt::RateTarget::symmetric(opt.rate);
    const auto schemes = relayopt::enumerate_all_schemes(enum_options(opt), opt.symmetric_mode);

    relayopt::OptimizeOptions oo;
    oo.split.split_step = opt.split_step;
    oo.weights = {opt.mu1, opt.mu2};

    std::optional<relayopt::PowerSolution> best;
    std::string best_key;
    for (const auto& c : schemes) {
        const auto ps = relayopt::optimize_scheme(c, ch, opt.relay, target, oo);
        if (!ps.feasible) continue;
        const std::string key = relayopt::canonicalize(c);
        if (!best || ps.energy < best->energy || (ps.energy == best->energy && key < best_key)) {
            best = ps;
            best_key = key;
        }
    }
    if (!best) {
        std::cout << "infeasible: no scheme achieves R_sym=" << opt.rate << " at this channel\n";
        return kExitInfeasible;
    }
    json out;
    out["scheme"] = best_key;
    out["e_tot"] = best->energy;
    out["bs_power"] = best->bs_power;
    out["relay_power"] = {best->relay_power[0], best->relay_power[1]};
    out["access_power"] = best->access_power;
    out["codeword_power"] = best->codeword_power;
    out["shares"] = best->shares;
    std::cout << out.dump(2) << "\n";
    return kExitOk;
}

int cmd_sweep(const Options& opt) {
    std::filesystem::create_directories(opt.out_dir);

    auto run_one = [&](bool split_mode) {
        relayopt::SweepOptions so;
        so.split_mode = split_mode;
        so.enum_opts = enum_options(opt);
        so.split.split_step = opt.split_step;
        so.weights = {opt.mu1, opt.mu2};
        so.tie_tolerance = opt.tie_tolerance;
        so.threads = opt.threads;
        const relayopt::PhaseMap pm = relayopt::run_sweep(opt.grid, opt.rate, so);
        const std::string stem = opt.out_dir + "/phase_" + (split_mode ? "split" : "nosplit");
        for (const std::string& fmt : opt.formats) {
            if (fmt == "csv") {
                relayopt::write_file(stem + ".csv", relayopt::phase_csv(pm));
            } else if (fmt == "json") {
                relayopt::write_file(stem + ".json", relayopt::phase_json(pm));
            } else if (fmt == "svg") {
                relayopt::write_file(stem + ".svg", relayopt::phase_svg(pm));
            } else {
                throw std::runtime_error("unknown format: " + fmt);
            }
        }
        int feasible = 0;
        for (const auto& cell : pm.cells) feasible += cell.feasible ? 1 : 0;
        std::cout << (split_mode ? "split" : "no-split") << " sweep: " << feasible << "/"
                  << pm.cells.size() << " cells feasible\n";
        return pm;
    };

    if (opt.both_modes) {
        const relayopt::PhaseMap pm_ns = run_one(false);
        const relayopt::PhaseMap pm_sp = run_one(true);
        relayopt::write_file(opt.out_dir + "/split_gain.csv", relayopt::diff_csv(pm_ns, pm_sp));
        std::cout << "difference surface written to " << opt.out_dir << "/split_gain.csv\n";
    } else {
        run_one(opt.split);
    }
    std::cout << "outputs in " << opt.out_dir << "\n";
    return kExitOk;
}

int cmd_bound(const Options& opt) {
    const relayopt::AccessChannel ch = access_channel(opt);
    const relayopt::RateTarget target = relayopt::RateTarget::symmetric(opt.rate);
    relayopt::LowerBoundConfig cfg;
    cfg.samples = opt.samples;
    cfg.seed = opt.seed;
    const auto res = relayopt::energy_lower_bound(ch, opt.relay, target, cfg);
    json out;
    out["e_lower"] = res.e_lower;
    out["bs_power"] = res.bs_power;
    out["relay_power"] = res.relay_power;
    out["allocation"] = "W[" + relayopt::set_digits(res.alloc.relay1) + "|" +
                        relayopt::set_digits(res.alloc.relay2) + "]";
    out["samples"] = res.samples;
    out["converged"] = res.converged;
    std::cout << out.dump(2) << "\n";
    return kExitOk;
}

int cmd_compare(const Options& opt) {
    const relayopt::AccessChannel ch = access_channel(opt);
    std::vector<double> rates = opt.rates;
    if (rates.empty()) rates = {1.0, 2.0, 3.0};

    relayopt::OptimizeOptions oo;
    oo.split.split_step = opt.split_step;
    oo.weights = {opt.mu1, opt.mu2};

    relayopt::EnumOptions eo_nosplit = enum_options(opt);
    eo_nosplit.allow_splitting = false;
    relayopt::EnumOptions eo_split = enum_options(opt);
    eo_split.allow_splitting = true;
    const auto nosplit = relayopt::enumerate_all_schemes(eo_nosplit, opt.symmetric_mode);
    const auto split = relayopt::enumerate_all_schemes(eo_split, opt.symmetric_mode);

    std::vector<relayopt::BoundTraceRow> rows;
    for (double r : rates) {
        const relayopt::RateTarget target = relayopt::RateTarget::symmetric(r);
        relayopt::BoundTraceRow row;
        row.r_sym = r;
        relayopt::LowerBoundConfig cfg;
        cfg.samples = opt.samples;
        cfg.seed = opt.seed;
        row.e_lower = relayopt::energy_lower_bound(ch, opt.relay, target, cfg).e_lower;
        auto best_of = [&](const std::vector<relayopt::Cgras>& schemes) {
            double best = std::numeric_limits<double>::infinity();
            for (const auto& c : schemes) {
                const auto ps = relayopt::optimize_scheme(c, ch, opt.relay, target, oo);
                if (ps.feasible) best = std::min(best, ps.energy);
            }
            return best;
        };
        row.e_best_nosplit = best_of(nosplit);
        row.e_best_split = best_of(split);
        rows.push_back(row);
        std::cout << "R_sym=" << r << "  E_lower=" << row.e_lower << "  E_split=" << row.e_best_split
                  << "  E_nosplit=" << row.e_best_nosplit << "\n";
    }
    std::filesystem::create_directories(opt.out_dir);
    relayopt::write_file(opt.out_dir + "/bound_trace.csv", relayopt::bound_trace_csv(rows));
    std::cout << "trace written to " << opt.out_dir << "/bound_trace.csv\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    Options opt;
    // The config file is applied first so explicit flags can override it.
    for (int i = 1; i + 1 < argc; ++i) {
        if (std::string(argv[i]) == "--config") {
            try {
                load_config(argv[i + 1], opt);
            } catch (const std::exception& e) {
                std::cerr << "error: " << e.what() << "\n";
                return kExitError;
            }
        }
    }

    CLI::App app{"Energy-efficient transmission strategies for the 2-relay, 3-receiver downlink"};
    app.require_subcommand(1);
    std::string config_path;
    app.add_option("--config", config_path, "JSON config mirroring all flags");

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "JSON config mirroring all flags (applied first)");
        sub->add_option("--a", opt.a, "symmetric channel parameter a");
        sub->add_option("--b", opt.b, "symmetric channel parameter b");
        sub->add_option("--rate", opt.rate, "symmetric target rate (bits/use)");
        sub->add_flag("--split,!--no-split", opt.split, "enable rate splitting");
        sub->add_option("--split-step", opt.split_step, "share grid step for split search");
        sub->add_option("--max-splits", opt.max_splits, "max codewords per message");
        sub->add_option("--max-split-messages", opt.max_split_messages, "messages that may split");
        sub->add_flag("--tx-subsets", opt.tx_subsets, "also enumerate partial tx sets");
        sub->add_option("--mu1", opt.mu1, "relay 1 energy weight");
        sub->add_option("--mu2", opt.mu2, "relay 2 energy weight");
        sub->add_option("--seed", opt.seed, "master RNG seed");
        sub->add_option("--out-dir", opt.out_dir, "output directory");
    };

    std::string enum_out;
    CLI::App* c_enum = app.add_subcommand("enumerate", "list coded schemes (canonical keys)");
    add_common(c_enum);
    c_enum->add_option("--out", enum_out, "write keys to a file instead of stdout");

    CLI::App* c_opt = app.add_subcommand("optimize", "minimize energy at one channel point");
    add_common(c_opt);

    CLI::App* c_sweep = app.add_subcommand("sweep", "phase map over an (a,b) grid");
    add_common(c_sweep);
    c_sweep->add_option("--grid", opt.grid_shorthand, "min:max:steps for both axes");
    c_sweep->add_flag("--both", opt.both_modes,
                      "run split and no-split sweeps and write the difference surface");
    c_sweep->add_option("--a-min", opt.grid.a_min);
    c_sweep->add_option("--a-max", opt.grid.a_max);
    c_sweep->add_option("--a-steps", opt.grid.a_steps);
    c_sweep->add_option("--b-min", opt.grid.b_min);
    c_sweep->add_option("--b-max", opt.grid.b_max);
    c_sweep->add_option("--b-steps", opt.grid.b_steps);
    c_sweep->add_option("--tie-tolerance", opt.tie_tolerance);
    c_sweep->add_option("--threads", opt.threads, "worker threads (0 = all cores)");
    c_sweep->add_option("--format", opt.formats, "csv, json, svg");

    CLI::App* c_bound = app.add_subcommand("bound", "energy lower bound at one channel point");
    add_common(c_bound);
    c_bound->add_option("--samples", opt.samples, "Monte-Carlo samples per bisection level");

    CLI::App* c_cmp = app.add_subcommand("compare", "lower bound vs best schemes over a rate ladder");
    add_common(c_cmp);
    c_cmp->add_option("--rates", opt.rates, "rate ladder (default 1 2 3)");
    c_cmp->add_option("--samples", opt.samples, "Monte-Carlo samples per bisection level");

    CLI11_PARSE(app, argc, argv);

    try {
        apply_grid_shorthand(opt);
        if (c_enum->parsed()) return cmd_enumerate(opt, enum_out);
        if (c_opt->parsed()) return cmd_optimize(opt);
        if (c_sweep->parsed()) return cmd_sweep(opt);
        if (c_bound->parsed()) return cmd_bound(opt);
        if (c_cmp->parsed()) return cmd_compare(opt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
