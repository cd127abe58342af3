#include "boltcheb/solver.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "boltcheb/boltgraph.hpp"
#include "boltcheb/errors.hpp"
#include "boltcheb/simplex.hpp"

namespace boltcheb {

namespace {

void check_function(const FiniteQuotientSpace& space, const SampledFunction& f, const char* who) {
    if (f.n() != space.n()) {
        throw InputError(std::string(who) + ": function length does not match the space");
    }
    for (double v : f.values) {
        if (!std::isfinite(v)) {
            throw InputError(std::string(who) + ": function values must be finite");
        }
    }
}

// Product structure: every (s-class, p-class) pair is realized by exactly one
// point. This is what the grid builder produces, up to point order.
bool is_product_space(const FiniteQuotientSpace& space) {
    if (space.n() != space.n_s * space.n_p) return false;
    std::vector<char> seen(static_cast<std::size_t>(space.n_s) * space.n_p, 0);
    for (int i = 0; i < space.n(); ++i) {
        const std::size_t cell =
            static_cast<std::size_t>(space.s_class[i]) * space.n_p + space.p_class[i];
        if (seen[cell]) return false;
        seen[cell] = 1;
    }
    return true;
}

double sup_norm(const std::vector<double>& r) {
    double m = 0.0;
    for (double v : r) m = std::max(m, std::abs(v));
    return m;
}

}  // namespace

ApproxSolution solve_lp(const FiniteQuotientSpace& space, const SampledFunction& f) {
    check_function(space, f, "solve_lp");
    const int n = space.n();
    const int ns = space.n_s;
    const int np = space.n_p;
    const int free_h = np - 1;  // h[0] is fixed to 0 and carries no columns

    // Columns: t, g split into positive and negative parts, likewise h[1..],
    // then one surplus per inequality. Rows per point: value + t >= f and
    // value - t <= f, written as equalities with surpluses.
    const int gp0 = 1;
    const int gm0 = 1 + ns;
    const int hp0 = 1 + 2 * ns;
    const int hm0 = 1 + 2 * ns + free_h;
    const int sur0 = 1 + 2 * ns + 2 * free_h;
    const int cols = sur0 + 2 * n;
    const int rows = 2 * n;

    StandardFormLp lp;
    lp.rows = rows;
    lp.cols = cols;
    lp.a.assign(static_cast<std::size_t>(rows) * cols, 0.0);
    lp.b.assign(rows, 0.0);
    lp.c.assign(cols, 0.0);
    lp.c[0] = 1.0;
    auto at = [&](int r, int c) -> double& {
        return lp.a[static_cast<std::size_t>(r) * cols + c];
    };
    for (int i = 0; i < n; ++i) {
        const int sc = space.s_class[i];
        const int pc = space.p_class[i];
        const int ra = 2 * i;      // t + g + h - surplus = f
        const int rb = 2 * i + 1;  // t - g - h - surplus = -f
        at(ra, 0) = 1.0;
        at(rb, 0) = 1.0;
        at(ra, gp0 + sc) = 1.0;
        at(ra, gm0 + sc) = -1.0;
        at(rb, gp0 + sc) = -1.0;
        at(rb, gm0 + sc) = 1.0;
        if (pc > 0) {
            at(ra, hp0 + pc - 1) = 1.0;
            at(ra, hm0 + pc - 1) = -1.0;
            at(rb, hp0 + pc - 1) = -1.0;
            at(rb, hm0 + pc - 1) = 1.0;
        }
        at(ra, sur0 + ra) = -1.0;
        at(rb, sur0 + rb) = -1.0;
        lp.b[ra] = f[i];
        lp.b[rb] = -f[i];
    }

    const LpSolution sol = solve_standard_form(lp);
    if (sol.status != LpStatus::Optimal) {
        throw InternalError("solve_lp: simplex did not reach an optimum (status " +
                            std::to_string(static_cast<int>(sol.status)) + ")");
    }

    ApproxSolution out;
    out.error = std::max(sol.objective, 0.0);
    out.witness.g.resize(ns);
    out.witness.h.assign(np, 0.0);
    for (int j = 0; j < ns; ++j) out.witness.g[j] = sol.x[gp0 + j] - sol.x[gm0 + j];
    for (int j = 1; j < np; ++j) out.witness.h[j] = sol.x[hp0 + j - 1] - sol.x[hm0 + j - 1];
    out.dual_value = max_mean_cycle(build_graph(space, f)).value;
    out.method = SolveMethod::LP;
    return out;
}

ApproxSolution solve_ds(const FiniteQuotientSpace& space, const SampledFunction& f,
                        double tol, int max_sweeps) {
    check_function(space, f, "solve_ds");
    if (!(tol > 0.0) || !std::isfinite(tol)) throw InputError("solve_ds: tol must be positive");
    if (max_sweeps < 1) throw InputError("solve_ds: max_sweeps must be at least 1");
    if (!is_product_space(space)) {
        throw NotProductSpaceError("solve_ds: the space has no product structure");
    }

    const auto ms = class_members(space.s_class, space.n_s);
    const auto mp = class_members(space.p_class, space.n_p);
    std::vector<double> r = f.values;
    std::vector<double> g(space.n_s, 0.0);
    std::vector<double> h(space.n_p, 0.0);

    double prev = sup_norm(r);
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        for (int c = 0; c < space.n_s; ++c) {
            double lo = r[ms[c].front()], hi = lo;
            for (int x : ms[c]) {
                lo = std::min(lo, r[x]);
                hi = std::max(hi, r[x]);
            }
            const double mid = 0.5 * (lo + hi);
            g[c] += mid;
            for (int x : ms[c]) r[x] -= mid;
        }
        for (int c = 0; c < space.n_p; ++c) {
            double lo = r[mp[c].front()], hi = lo;
            for (int x : mp[c]) {
                lo = std::min(lo, r[x]);
                hi = std::max(hi, r[x]);
            }
            const double mid = 0.5 * (lo + hi);
            h[c] += mid;
            for (int x : mp[c]) r[x] -= mid;
        }
        const double cur = sup_norm(r);
        const bool settled = prev - cur < tol;
        prev = cur;
        if (settled) break;
    }

    const double error = sup_norm(r);
    const double dual = max_mean_cycle(build_graph(space, f)).value;
    if (std::abs(error - dual) > 100.0 * tol) {
        throw NonConvergenceError(error, dual,
                                  "solve_ds: sweeps settled at residual norm " +
                                      std::to_string(error) + " but the dual value is " +
                                      std::to_string(dual));
    }

    const double c0 = h[0];
    for (double& v : g) v += c0;
    for (double& v : h) v -= c0;

    ApproxSolution out;
    out.error = error;
    out.witness = SumElement{std::move(g), std::move(h)};
    out.dual_value = dual;
    out.method = SolveMethod::DS;
    return out;
}

}  // namespace boltcheb
