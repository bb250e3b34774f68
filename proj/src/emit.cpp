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

#include "relayopt/emit.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <fstream>
#include <map>
#include <stdexcept>

#include "json.hpp"

namespace relayopt {

namespace {

std::string fmt_g(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

// Legend indices by first appearance in row-major cell order.
std::map<int, int> legend_indices(const PhaseMap& pm) {
    std::map<int, int> idx;
    for (const CellResult& cell : pm.cells) {
        if (cell.feasible && !idx.count(cell.winner)) {
            const int next = static_cast<int>(idx.size());
            idx[cell.winner] = next;
        }
    }
    return idx;
}

const char* kPalette[] = {
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f",
    "#bcbd22", "#17becf", "#aec7e8", "#ffbb78", "#98df8a", "#ff9896", "#c5b0d5", "#c49c94",
    "#f7b6d2", "#dbdb8d", "#9edae5", "#393b79", "#637939", "#8c6d31", "#843c39", "#7b4173",
};
constexpr int kPaletteSize = static_cast<int>(sizeof(kPalette) / sizeof(kPalette[0]));
constexpr const char* kInfeasibleColor = "#3c3c3c";

}  // namespace

std::string phase_csv(const PhaseMap& pm) {
    std::string out = "a,b,scheme,E_TOT,margin\n";
    for (const CellResult& cell : pm.cells) {
        out += fmt_g(cell.a) + "," + fmt_g(cell.b) + ",";
        if (cell.feasible) {
            out += pm.scheme_keys[static_cast<std::size_t>(cell.winner)] + "," +
                   fmt_g(cell.winner_energy) + "," + fmt_g(cell.margin);
        } else {
            out += "infeasible,inf,inf";
        }
        out += "\n";
    }
    return out;
}

std::string phase_json(const PhaseMap& pm) {
    nlohmann::ordered_json j;
    j["grid"] = {{"a_min", pm.grid.a_min}, {"a_max", pm.grid.a_max}, {"a_steps", pm.grid.a_steps},
                 {"b_min", pm.grid.b_min}, {"b_max", pm.grid.b_max}, {"b_steps", pm.grid.b_steps}};
    j["r_sym"] = pm.r_sym;
    j["mode"] = pm.split_mode ? "split" : "no-split";
    j["tie_tolerance"] = pm.tie_tolerance;

    const auto legend = legend_indices(pm);
    nlohmann::ordered_json jl = nlohmann::ordered_json::array();
    for (const auto& [scheme, color] : legend) {
        jl.push_back({{"scheme", pm.scheme_keys[static_cast<std::size_t>(scheme)]},
                      {"color_index", color}});
    }
    j["legend"] = jl;

    nlohmann::ordered_json cells = nlohmann::ordered_json::array();
    for (const CellResult& cell : pm.cells) {
        nlohmann::ordered_json c;
        c["a"] = cell.a;
        c["b"] = cell.b;
        if (cell.feasible) {
            c["scheme"] = pm.scheme_keys[static_cast<std::size_t>(cell.winner)];
            c["e_tot"] = cell.winner_energy;
            c["e_best"] = cell.best_energy;
            c["margin"] = std::isfinite(cell.margin) ? nlohmann::ordered_json(cell.margin)
                                                     : nlohmann::ordered_json("inf");
        } else {
            c["scheme"] = "infeasible";
        }
        if (!cell.diagnostic.empty()) c["diagnostic"] = cell.diagnostic;
        cells.push_back(std::move(c));
    }
    j["cells"] = std::move(cells);
    return j.dump(2) + "\n";
}

std::string phase_svg(const PhaseMap& pm) {
    const int cell_px = 24;
    const int plot_w = pm.grid.a_steps * cell_px;
    const int plot_h = pm.grid.b_steps * cell_px;
    const int margin_left = 50;
    const int margin_top = 30;
    const int legend_w = 620;
    const auto legend = legend_indices(pm);
    const int legend_h = 18 * (static_cast<int>(legend.size()) + 1) + 10;
    const int width = margin_left + plot_w + 20 + legend_w;
    const int height = std::max(margin_top + plot_h + 50, margin_top + legend_h);

    std::string s;
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width) +
         "\" height=\"" + std::to_string(height) + "\">\n";
    s += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    s += "<text x=\"" + std::to_string(margin_left) + "\" y=\"20\" font-family=\"monospace\" font-size=\"14\">";
    s += std::string(pm.split_mode ? "split" : "no-split") + " phase map, R_sym=" + fmt_g(pm.r_sym) + "</text>\n";

    for (int ia = 0; ia < pm.grid.a_steps; ++ia) {
        for (int ib = 0; ib < pm.grid.b_steps; ++ib) {
            const CellResult& cell = pm.cell(ia, ib);
            const char* color = kInfeasibleColor;
            if (cell.feasible) {
                color = kPalette[legend.at(cell.winner) % kPaletteSize];
            }
            const int x = margin_left + ia * cell_px;
            // b grows upward
            const int y = margin_top + (pm.grid.b_steps - 1 - ib) * cell_px;
            s += "<rect x=\"" + std::to_string(x) + "\" y=\"" + std::to_string(y) + "\" width=\"" +
                 std::to_string(cell_px) + "\" height=\"" + std::to_string(cell_px) + "\" fill=\"" + color +
                 "\"><title>a=" + fmt_g(cell.a) + " b=" + fmt_g(cell.b) +
                 (cell.feasible ? " E=" + fmt_g(cell.winner_energy) : " infeasible") + "</title></rect>\n";
        }
    }

    // Axis labels
    s += "<text x=\"" + std::to_string(margin_left + plot_w / 2) + "\" y=\"" +
         std::to_string(margin_top + plot_h + 30) + "\" font-family=\"monospace\" font-size=\"12\">a: " +
         fmt_g(pm.grid.a_min) + " .. " + fmt_g(pm.grid.a_max) + "</text>\n";
    s += "<text x=\"5\" y=\"" + std::to_string(margin_top + plot_h / 2) +
         "\" font-family=\"monospace\" font-size=\"12\">b</text>\n";

    int ly = margin_top;
    const int lx = margin_left + plot_w + 20;
    for (const auto& [scheme, color] : legend) {
        s += "<rect x=\"" + std::to_string(lx) + "\" y=\"" + std::to_string(ly) +
             "\" width=\"14\" height=\"14\" fill=\"" + kPalette[color % kPaletteSize] + "\"/>\n";
        s += "<text x=\"" + std::to_string(lx + 20) + "\" y=\"" + std::to_string(ly + 11) +
             "\" font-family=\"monospace\" font-size=\"10\">" +
             pm.scheme_keys[static_cast<std::size_t>(scheme)] + "</text>\n";
        ly += 18;
    }
    s += "<rect x=\"" + std::to_string(lx) + "\" y=\"" + std::to_string(ly) +
         "\" width=\"14\" height=\"14\" fill=\"" + std::string(kInfeasibleColor) + "\"/>\n";
    s += "<text x=\"" + std::to_string(lx + 20) + "\" y=\"" + std::to_string(ly + 11) +
         "\" font-family=\"monospace\" font-size=\"10\">infeasible</text>\n";
    s += "</svg>\n";
    return s;
}

std::string diff_csv(const PhaseMap& nosplit, const PhaseMap& split) {
    if (nosplit.cells.size() != split.cells.size()) {
        throw std::invalid_argument("diff_csv: phase maps cover different grids");
    }
    std::string out = "a,b,e_nosplit,e_split,delta\n";
    for (std::size_t i = 0; i < nosplit.cells.size(); ++i) {
        const CellResult& n = nosplit.cells[i];
        const CellResult& s = split.cells[i];
        const double en = n.feasible ? n.best_energy : std::numeric_limits<double>::infinity();
        const double es = s.feasible ? s.best_energy : std::numeric_limits<double>::infinity();
        out += fmt_g(n.a) + "," + fmt_g(n.b) + "," + fmt_g(en) + "," + fmt_g(es) + "," +
               fmt_g(en - es) + "\n";
    }
    return out;
}

std::string bound_trace_csv(const std::vector<BoundTraceRow>& rows) {
    std::string out = "r_sym,e_lower,e_best_nosplit,e_best_split\n";
    for (const BoundTraceRow& r : rows) {
        out += fmt_g(r.r_sym) + "," + fmt_g(r.e_lower) + "," + fmt_g(r.e_best_nosplit) + "," +
               fmt_g(r.e_best_split) + "\n";
    }
    return out;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw std::runtime_error("cannot open for writing: " + path);
    }
    f << content;
    f.flush();
    if (!f) {
        throw std::runtime_error("write failed: " + path);
    }
}

}  // namespace relayopt
