#pragma once

#include <vector>

namespace boltcheb {

// min c.x subject to A x = b, x >= 0, with dense row-major A.
struct StandardFormLp {
    int rows = 0;
    int cols = 0;
    std::vector<double> a;   // rows * cols
    std::vector<double> b;   // rows
    std::vector<double> c;   // cols
};

enum class LpStatus { Optimal, Infeasible, Unbounded, IterationLimit };

struct LpSolution {
    LpStatus status = LpStatus::Optimal;
    double objective = 0.0;
    std::vector<double> x;
};

// Two-phase dense-tableau primal simplex. Pricing picks the most negative
// reduced cost with index order breaking ties; after a run of degenerate
// pivots it drops to Bland's rule until the objective strictly improves
// again, which rules out cycling. Fully deterministic for a given program.
LpSolution solve_standard_form(const StandardFormLp& lp, long max_iterations = 1000000);

}  // namespace boltcheb
