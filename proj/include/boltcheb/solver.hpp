#pragma once

#include "boltcheb/space.hpp"

namespace boltcheb {

enum class SolveMethod { LP, DS };

// Best uniform approximation of f by sums g(s(x)) + h(p(x)): the error
// E(f) = min_u max_x |f(x) - u(x)|, a witness u attaining it, and the value
// of the matching closed-bolt maximization. The witness is anchored so that
// h[0] = 0.
struct ApproxSolution {
    double error = 0.0;
    SumElement witness;
    double dual_value = 0.0;
    SolveMethod method = SolveMethod::LP;
};

// Chebyshev linear program: minimize t subject to
// -t <= f(x) - g(s(x)) - h(p(x)) <= t, solved by the in-repo simplex.
// Works on every space.
ApproxSolution solve_lp(const FiniteQuotientSpace& space, const SampledFunction& f);

// Diliberto-Straus alternating midrange sweeps; product (grid-structured)
// spaces only. Each sweep subtracts per-class midranges first across the
// s-classes into g, then across the p-classes into h, and stops once the sup
// norm of the residual drops by less than tol over a sweep or after
// max_sweeps. A final residual norm further than 100*tol from the dual value
// raises NonConvergenceError instead of being reported as an answer.
ApproxSolution solve_ds(const FiniteQuotientSpace& space, const SampledFunction& f,
                        double tol, int max_sweeps);

}  // namespace boltcheb
