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

#include "relayopt/simplex.hpp"

#include <cmath>
#include <string>

namespace relayopt {

namespace {

constexpr double kTol = 1e-9;

struct Tableau {
    int rows = 0;
    int cols = 0;  // structural + surplus + artificial
    std::vector<std::vector<double>> t;
    std::vector<double> rhs;
    std::vector<double> obj;  // reduced-cost row
    double obj_rhs = 0.0;
    std::vector<int> basis;

    void pivot(int r, int j) {
        const double p = t[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)];
        auto& prow = t[static_cast<std::size_t>(r)];
        for (double& v : prow) v /= p;
        rhs[static_cast<std::size_t>(r)] /= p;
        for (int i = 0; i < rows; ++i) {
            if (i == r) continue;
            const double f = t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (f == 0.0) continue;
            auto& row = t[static_cast<std::size_t>(i)];
            for (int k = 0; k < cols; ++k) {
                row[static_cast<std::size_t>(k)] -= f * prow[static_cast<std::size_t>(k)];
            }
            rhs[static_cast<std::size_t>(i)] -= f * rhs[static_cast<std::size_t>(r)];
        }
        const double f = obj[static_cast<std::size_t>(j)];
        if (f != 0.0) {
            for (int k = 0; k < cols; ++k) {
                obj[static_cast<std::size_t>(k)] -= f * prow[static_cast<std::size_t>(k)];
            }
            obj_rhs -= f * rhs[static_cast<std::size_t>(r)];
        }
        basis[static_cast<std::size_t>(r)] = j;
    }

    // Bland's rule: smallest improving column, smallest-index tie break on
    // the ratio test. Returns false when unbounded, throws on pivot budget.
    // Columns at or past enter_limit never enter.
    bool iterate(int max_iters, int enter_limit, const char* phase) {
        for (int it = 0; it < max_iters; ++it) {
            int enter = -1;
            for (int j = 0; j < enter_limit; ++j) {
                if (obj[static_cast<std::size_t>(j)] < -kTol) {
                    enter = j;
                    break;
                }
            }
            if (enter < 0) return true;
            int leave = -1;
            double best_ratio = 0.0;
            for (int r = 0; r < rows; ++r) {
                const double a = t[static_cast<std::size_t>(r)][static_cast<std::size_t>(enter)];
                if (a <= kTol) continue;
                const double ratio = rhs[static_cast<std::size_t>(r)] / a;
                if (leave < 0 || ratio < best_ratio - kTol ||
                    (ratio < best_ratio + kTol &&
                     basis[static_cast<std::size_t>(r)] < basis[static_cast<std::size_t>(leave)])) {
                    leave = r;
                    best_ratio = ratio;
                }
            }
            if (leave < 0) return false;  // unbounded direction
            pivot(leave, enter);
        }
        throw SimplexIterationError(std::string("simplex: pivot budget exceeded in ") + phase +
                                    " (rows=" + std::to_string(rows) + ", cols=" + std::to_string(cols) + ")");
    }
};

}  // namespace

LpResult simplex_minimize(const std::vector<std::vector<double>>& a, const std::vector<double>& b,
                          const std::vector<double>& c) {
    const int m = static_cast<int>(a.size());
    const int n = static_cast<int>(c.size());
    const int max_iters = 10 * (n + m) + 10;

    Tableau tab;
    tab.rows = m;
    // Equality form with nonnegative right side: rows with b_i < 0 are
    // negated, which flips their surplus into a slack that can start basic.
    // Other rows get an artificial.
    std::vector<int> artificial_col(static_cast<std::size_t>(m), -1);
    int n_art = 0;
    for (int i = 0; i < m; ++i) {
        if (b[static_cast<std::size_t>(i)] >= 0.0) ++n_art;
    }
    tab.cols = n + m + n_art;
    tab.t.assign(static_cast<std::size_t>(m), std::vector<double>(static_cast<std::size_t>(tab.cols), 0.0));
    tab.rhs.assign(static_cast<std::size_t>(m), 0.0);
    tab.basis.assign(static_cast<std::size_t>(m), -1);

    int next_art = n + m;
    for (int i = 0; i < m; ++i) {
        const bool neg = b[static_cast<std::size_t>(i)] < 0.0;
        const double sign = neg ? -1.0 : 1.0;
        for (int j = 0; j < n; ++j) {
            tab.t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                sign * a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        }
        tab.t[static_cast<std::size_t>(i)][static_cast<std::size_t>(n + i)] = neg ? 1.0 : -1.0;
        tab.rhs[static_cast<std::size_t>(i)] = sign * b[static_cast<std::size_t>(i)];
        if (neg) {
            tab.basis[static_cast<std::size_t>(i)] = n + i;
        } else {
            artificial_col[static_cast<std::size_t>(i)] = next_art;
            tab.t[static_cast<std::size_t>(i)][static_cast<std::size_t>(next_art)] = 1.0;
            tab.basis[static_cast<std::size_t>(i)] = next_art;
            ++next_art;
        }
    }

    // Phase 1: minimize the artificial sum.
    tab.obj.assign(static_cast<std::size_t>(tab.cols), 0.0);
    tab.obj_rhs = 0.0;
    for (int j = n + m; j < tab.cols; ++j) tab.obj[static_cast<std::size_t>(j)] = 1.0;
    for (int i = 0; i < m; ++i) {
        if (artificial_col[static_cast<std::size_t>(i)] < 0) continue;
        for (int k = 0; k < tab.cols; ++k) {
            tab.obj[static_cast<std::size_t>(k)] -= tab.t[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
        }
        tab.obj_rhs -= tab.rhs[static_cast<std::size_t>(i)];
    }
    tab.iterate(max_iters, tab.cols, "phase 1");
    if (-tab.obj_rhs > kTol) {
        return LpResult{LpStatus::kInfeasible, {}, 0.0};
    }
    // Pivot any leftover (degenerate) artificial out of the basis.
    for (int i = 0; i < m; ++i) {
        if (tab.basis[static_cast<std::size_t>(i)] < n + m) continue;
        int col = -1;
        for (int j = 0; j < n + m; ++j) {
            if (std::fabs(tab.t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) > kTol) {
                col = j;
                break;
            }
        }
        if (col >= 0) tab.pivot(i, col);
        // An all-zero row is redundant; its artificial stays basic at zero
        // and is barred from re-entering below.
    }

    // Phase 2: original objective, artificials frozen out.
    tab.obj.assign(static_cast<std::size_t>(tab.cols), 0.0);
    tab.obj_rhs = 0.0;
    for (int j = 0; j < n; ++j) tab.obj[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j)];
    for (int i = 0; i < m; ++i) {
        const int bj = tab.basis[static_cast<std::size_t>(i)];
        if (bj < n && c[static_cast<std::size_t>(bj)] != 0.0) {
            const double f = c[static_cast<std::size_t>(bj)];
            for (int k = 0; k < tab.cols; ++k) {
                tab.obj[static_cast<std::size_t>(k)] -=
                    f * tab.t[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
            }
            tab.obj_rhs -= f * tab.rhs[static_cast<std::size_t>(i)];
        }
    }
    if (!tab.iterate(max_iters, n + m, "phase 2")) {
        return LpResult{LpStatus::kUnbounded, {}, 0.0};
    }

    LpResult res;
    res.status = LpStatus::kOptimal;
    res.x.assign(static_cast<std::size_t>(n), 0.0);
    for (int i = 0; i < m; ++i) {
        const int bj = tab.basis[static_cast<std::size_t>(i)];
        if (bj < n) res.x[static_cast<std::size_t>(bj)] = tab.rhs[static_cast<std::size_t>(i)];
    }
    for (double& v : res.x) {
        if (v < 0.0) v = 0.0;  // basic values may carry -1e-12 roundoff
    }
    res.objective = 0.0;
    for (int j = 0; j < n; ++j) {
        res.objective += c[static_cast<std::size_t>(j)] * res.x[static_cast<std::size_t>(j)];
    }
    return res;
}

}  // namespace relayopt
