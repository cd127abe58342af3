#pragma once

#include <optional>
#include <vector>

#include "boltcheb/bolt.hpp"
#include "boltcheb/space.hpp"

namespace boltcheb {

// Two-layer digraph whose directed cycles are exactly the closed bolts.
//
// Node x in [0, n) is the plus copy of point x, node n + x the minus copy.
// Edges run plus->minus between distinct points of one s-class and
// minus->plus between distinct points of one p-class, so following edges
// alternates link types. Reading a cycle off as its point sequence, starting
// at a plus node, yields a closed bolt whose first link is an s-link; every
// closed bolt arises this way after rotation. Each edge carries the weight of
// its tail node, +f(x) on plus copies and -f(x) on minus copies, which makes
// the mean edge weight of a cycle equal to the bolt functional of the
// corresponding closed bolt.
struct BoltGraph {
    const FiniteQuotientSpace* space = nullptr;
    std::vector<double> node_weight;     // 2n entries: +f then -f
    std::vector<std::vector<int>> out;   // adjacency, ascending per node

    int points() const { return space ? space->n() : 0; }
    int nodes() const { return static_cast<int>(out.size()); }
    bool is_plus(int node) const { return node < points(); }
    int point_of(int node) const { return node < points() ? node : node - points(); }
};

// Outcome of the closed-bolt maximization. When a witness is present,
// bolt_functional(witness, f) reproduces value exactly.
struct DualResult {
    double value = 0.0;
    std::optional<Bolt> witness;
    bool no_cycle = false;
};

BoltGraph build_graph(const FiniteQuotientSpace& space, const SampledFunction& f);

// Maximum mean cycle weight, computed by Karp's dynamic program per strongly
// connected component with a witness cycle rebuilt from the predecessor
// table. An acyclic graph reports value 0 with no_cycle set.
DualResult max_mean_cycle(const BoltGraph& graph);

// Whether the space admits any closed bolt at all.
bool has_closed_bolt(const FiniteQuotientSpace& space);

// Searches for a closed bolt all of whose points carry near-maximal residual
// with alternating signs: plus copies need residual >= max|residual| - tol,
// minus copies <= -max|residual| + tol. Absence certifies that the residual's
// source is not a best approximation; presence that it is.
std::optional<Bolt> find_extremal_bolt(const FiniteQuotientSpace& space,
                                       const SampledFunction& residual, double tol);

// Brute-force listing of all closed bolts with at most max_len points, one
// representative per rotation class, sorted by point sequence. Guarded to
// n <= 12 and max_len <= 10.
std::vector<Bolt> enumerate_closed_bolts(const FiniteQuotientSpace& space, int max_len);

}  // namespace boltcheb
