#include "boltcheb/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "boltcheb/errors.hpp"

namespace boltcheb {

namespace {

constexpr double kPivotEps = 1e-9;
constexpr double kCostEps = 1e-9;
constexpr double kImprovementEps = 1e-12;
constexpr double kPhaseOneFeasibleTol = 1e-7;
constexpr int kStallLimit = 100;

struct Tableau {
    int rows = 0;
    int cols = 0;                 // variable columns; the rhs sits at index cols
    std::vector<double> cells;    // rows * (cols + 1)
    std::vector<int> basis;       // basic variable per row
    std::vector<char> in_basis;   // per column
    std::vector<char> banned;     // columns barred from entering

    double* row(int i) { return cells.data() + static_cast<std::size_t>(i) * (cols + 1); }
    double& at(int i, int j) { return row(i)[j]; }
    double& rhs(int i) { return row(i)[cols]; }
};

enum class IterOutcome { Optimal, Unbounded, IterationLimit };

void pivot(Tableau& tb, std::vector<double>& red, double& obj, int r, int e) {
    double* pr = tb.row(r);
    const double inv = 1.0 / pr[e];
    for (int j = 0; j <= tb.cols; ++j) pr[j] *= inv;
    pr[e] = 1.0;
    for (int i = 0; i < tb.rows; ++i) {
        if (i == r) continue;
        double* ri = tb.row(i);
        const double factor = ri[e];
        if (factor == 0.0) continue;
        for (int j = 0; j <= tb.cols; ++j) ri[j] -= factor * pr[j];
        ri[e] = 0.0;
        if (ri[tb.cols] > -1e-11 && ri[tb.cols] < 0.0) ri[tb.cols] = 0.0;
    }
    const double rfac = red[e];
    if (rfac != 0.0) {
        for (int j = 0; j < tb.cols; ++j) red[j] -= rfac * pr[j];
        obj += rfac * pr[tb.cols];
        red[e] = 0.0;
    }
    tb.in_basis[tb.basis[r]] = 0;
    tb.basis[r] = e;
    tb.in_basis[e] = 1;
}

IterOutcome iterate(Tableau& tb, std::vector<double>& red, double& obj, long& iterations,
                    long max_iterations) {
    int stall = 0;
    bool bland = false;
    for (;;) {
        if (iterations >= max_iterations) return IterOutcome::IterationLimit;

        int enter = -1;
        if (bland) {
            for (int j = 0; j < tb.cols; ++j) {
                if (!tb.banned[j] && !tb.in_basis[j] && red[j] < -kCostEps) {
                    enter = j;
                    break;
                }
            }
        } else {
            double most_negative = -kCostEps;
            for (int j = 0; j < tb.cols; ++j) {
                if (!tb.banned[j] && !tb.in_basis[j] && red[j] < most_negative) {
                    most_negative = red[j];
                    enter = j;
                }
            }
        }
        if (enter == -1) return IterOutcome::Optimal;

        double min_ratio = std::numeric_limits<double>::infinity();
        for (int i = 0; i < tb.rows; ++i) {
            const double a = tb.at(i, enter);
            if (a <= kPivotEps) continue;
            min_ratio = std::min(min_ratio, tb.rhs(i) / a);
        }
        if (min_ratio == std::numeric_limits<double>::infinity()) return IterOutcome::Unbounded;
        // Among rows tied at the minimum ratio take the smallest basic
        // variable index, Bland's leaving rule.
        const double tie = min_ratio + 1e-9 * std::max(1.0, std::abs(min_ratio));
        int leave = -1;
        for (int i = 0; i < tb.rows; ++i) {
            const double a = tb.at(i, enter);
            if (a <= kPivotEps) continue;
            if (tb.rhs(i) / a <= tie && (leave == -1 || tb.basis[i] < tb.basis[leave])) leave = i;
        }

        const double drop = red[enter] * min_ratio;
        if (drop > -kImprovementEps) {
            if (++stall > kStallLimit) bland = true;
        } else {
            stall = 0;
            bland = false;
        }
        pivot(tb, red, obj, leave, enter);
        ++iterations;
    }
}

}  // namespace

LpSolution solve_standard_form(const StandardFormLp& lp, long max_iterations) {
    const int m = lp.rows;
    const int n0 = lp.cols;
    if (m <= 0 || n0 <= 0 || lp.a.size() != static_cast<std::size_t>(m) * n0 ||
        lp.b.size() != static_cast<std::size_t>(m) || lp.c.size() != static_cast<std::size_t>(n0)) {
        throw InputError("solve_standard_form: inconsistent program dimensions");
    }

    std::vector<double> a(lp.a);
    std::vector<double> b(lp.b);
    for (int i = 0; i < m; ++i) {
        if (b[i] < 0.0) {
            b[i] = -b[i];
            for (int j = 0; j < n0; ++j) a[static_cast<std::size_t>(i) * n0 + j] *= -1.0;
        }
    }

    // Columns that are +1 singletons can seed the basis; the rest of the rows
    // get phase-one artificials.
    std::vector<int> basis_col(m, -1);
    {
        std::vector<int> unit_row(n0, -1);
        for (int j = 0; j < n0; ++j) {
            int row = -1;
            bool unit = true;
            for (int i = 0; i < m && unit; ++i) {
                const double v = a[static_cast<std::size_t>(i) * n0 + j];
                if (v == 0.0) continue;
                if (row == -1 && std::abs(v - 1.0) < 1e-12) {
                    row = i;
                } else {
                    unit = false;
                }
            }
            if (unit && row != -1) unit_row[j] = row;
        }
        for (int j = 0; j < n0; ++j) {
            const int r = unit_row[j];
            if (r != -1 && basis_col[r] == -1) basis_col[r] = j;
        }
    }
    std::vector<int> art_rows;
    for (int i = 0; i < m; ++i) {
        if (basis_col[i] == -1) art_rows.push_back(i);
    }
    const int n_art = static_cast<int>(art_rows.size());
    const int n = n0 + n_art;

    Tableau tb;
    tb.rows = m;
    tb.cols = n;
    tb.cells.assign(static_cast<std::size_t>(m) * (n + 1), 0.0);
    tb.basis.assign(m, -1);
    tb.in_basis.assign(n, 0);
    tb.banned.assign(n, 0);
    for (int i = 0; i < m; ++i) {
        double* ri = tb.row(i);
        for (int j = 0; j < n0; ++j) ri[j] = a[static_cast<std::size_t>(i) * n0 + j];
        ri[n] = b[i];
    }
    for (int k = 0; k < n_art; ++k) tb.at(art_rows[k], n0 + k) = 1.0;
    for (int i = 0; i < m; ++i) {
        tb.basis[i] = basis_col[i];  // filled below for artificial rows
    }
    for (int k = 0; k < n_art; ++k) tb.basis[art_rows[k]] = n0 + k;
    for (int i = 0; i < m; ++i) tb.in_basis[tb.basis[i]] = 1;

    long iterations = 0;

    // Phase one: minimize the artificial sum, priced out over the start basis.
    if (n_art > 0) {
        std::vector<double> red(n, 0.0);
        for (int k = 0; k < n_art; ++k) red[n0 + k] = 1.0;
        double obj = 0.0;
        for (int i : art_rows) {
            const double* ri = tb.row(i);
            for (int j = 0; j < n; ++j) red[j] -= ri[j];
            obj += ri[n];
        }
        const IterOutcome oc = iterate(tb, red, obj, iterations, max_iterations);
        if (oc == IterOutcome::IterationLimit) return LpSolution{LpStatus::IterationLimit, 0.0, {}};
        if (oc == IterOutcome::Unbounded) {
            throw InternalError("solve_standard_form: phase one reported unbounded");
        }
        if (obj > kPhaseOneFeasibleTol) return LpSolution{LpStatus::Infeasible, 0.0, {}};

        // Drive leftover artificials out of the basis; a row with no real
        // pivot candidate is redundant and its artificial stays parked at 0.
        for (int i = 0; i < m; ++i) {
            if (tb.basis[i] < n0) continue;
            int j_piv = -1;
            for (int j = 0; j < n0; ++j) {
                if (!tb.in_basis[j] && std::abs(tb.at(i, j)) > kPhaseOneFeasibleTol) {
                    j_piv = j;
                    break;
                }
            }
            if (j_piv != -1) pivot(tb, red, obj, i, j_piv);
        }
    }

    // Phase two over the real objective, artificial columns banned.
    std::vector<double> red(n, 0.0);
    double obj = 0.0;
    for (int j = 0; j < n0; ++j) red[j] = lp.c[j];
    for (int j = n0; j < n; ++j) tb.banned[j] = 1;
    for (int i = 0; i < m; ++i) {
        const int bj = tb.basis[i];
        const double cb = bj < n0 ? lp.c[bj] : 0.0;
        if (cb == 0.0) continue;
        const double* ri = tb.row(i);
        for (int j = 0; j < n; ++j) red[j] -= cb * ri[j];
        obj += cb * ri[n];
    }
    for (int i = 0; i < m; ++i) red[tb.basis[i]] = 0.0;

    const IterOutcome oc = iterate(tb, red, obj, iterations, max_iterations);
    if (oc == IterOutcome::IterationLimit) return LpSolution{LpStatus::IterationLimit, 0.0, {}};
    if (oc == IterOutcome::Unbounded) return LpSolution{LpStatus::Unbounded, 0.0, {}};

    LpSolution sol;
    sol.status = LpStatus::Optimal;
    sol.x.assign(n0, 0.0);
    for (int i = 0; i < m; ++i) {
        if (tb.basis[i] < n0) sol.x[tb.basis[i]] = std::max(tb.rhs(i), 0.0);
    }
    double objective = 0.0;
    for (int j = 0; j < n0; ++j) objective += lp.c[j] * sol.x[j];
    sol.objective = objective;
    return sol;
}

}  // namespace boltcheb
