#include "boltcheb/bolt.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <unordered_set>

#include "boltcheb/errors.hpp"

namespace boltcheb {

namespace {

constexpr std::size_t kNoBreak = std::numeric_limits<std::size_t>::max();

// Link k joins points[k] and points[(k+1) mod n]; types alternate from the first.
LinkType link_type(LinkType first, std::size_t k) {
    const bool even = k % 2 == 0;
    if (first == LinkType::S) return even ? LinkType::S : LinkType::P;
    return even ? LinkType::P : LinkType::S;
}

bool link_holds(const FiniteQuotientSpace& sp, LinkType t, int x, int y) {
    return t == LinkType::S ? sp.s_class[x] == sp.s_class[y] : sp.p_class[x] == sp.p_class[y];
}

}  // namespace

Bolt validate_bolt(const FiniteQuotientSpace& space, const std::vector<int>& points, bool closed) {
    const std::size_t n = points.size();
    if (n < 2) throw InputError("validate_bolt: a bolt needs at least 2 points");
    for (std::size_t i = 0; i < n; ++i) {
        if (points[i] < 0 || points[i] >= space.n()) {
            throw InputError("validate_bolt: point index " + std::to_string(points[i]) +
                             " out of range at position " + std::to_string(i));
        }
    }
    const std::size_t links = closed ? n : n - 1;
    for (std::size_t k = 0; k < links; ++k) {
        if (points[k] == points[(k + 1) % n]) {
            throw ConsecutiveDuplicateError(
                k, "validate_bolt: point " + std::to_string(points[k]) +
                       " repeats consecutively at position " + std::to_string(k));
        }
    }
    if (closed && n % 2 != 0) {
        throw NotClosableError("validate_bolt: a closed bolt needs an even number of points, got " +
                               std::to_string(n));
    }

    auto first_break = [&](LinkType first) -> std::size_t {
        for (std::size_t k = 0; k < links; ++k) {
            if (!link_holds(space, link_type(first, k), points[k], points[(k + 1) % n])) return k;
        }
        return kNoBreak;
    };

    const std::size_t break_s = first_break(LinkType::S);
    if (break_s == kNoBreak) return Bolt{points, closed, LinkType::S};
    const std::size_t break_p = first_break(LinkType::P);
    if (break_p == kNoBreak) return Bolt{points, closed, LinkType::P};

    // Report the attempt that got furthest; ties go to the s-first attempt.
    const std::size_t furthest = std::max(break_s, break_p);
    if (closed && furthest == n - 1) {
        throw NotClosableError("validate_bolt: the wraparound link between positions " +
                               std::to_string(n - 1) + " and 0 holds in neither labeling");
    }
    throw BrokenChainError(furthest,
                           "validate_bolt: no class equality between positions " +
                               std::to_string(furthest) + " and " +
                               std::to_string((furthest + 1) % n));
}

double bolt_functional(const Bolt& bolt, const SampledFunction& f) {
    double acc = 0.0;
    double sign = 1.0;
    for (int p : bolt.points) {
        if (p < 0 || p >= f.n()) {
            throw InputError("bolt_functional: bolt point " + std::to_string(p) +
                             " does not index into a function of length " + std::to_string(f.n()));
        }
        acc += sign * f[p];
        sign = -sign;
    }
    return acc / static_cast<double>(bolt.points.size());
}

double dvp_bound(const FiniteQuotientSpace& space, const SampledFunction& f,
                 const SumElement& u, const Bolt& bolt) {
    if (!bolt.closed) throw NotClosedError("dvp_bound: the certificate bolt must be closed");
    if (f.n() != space.n()) throw InputError("dvp_bound: function length does not match the space");
    if (static_cast<int>(u.g.size()) != space.n_s ||
        static_cast<int>(u.h.size()) != space.n_p) {
        throw InputError("dvp_bound: sum element shape does not match the space");
    }
    const std::size_t n = bolt.points.size();
    std::vector<double> r(n);
    for (std::size_t i = 0; i < n; ++i) {
        const int pt = bolt.points[i];
        if (pt < 0 || pt >= space.n()) {
            throw InputError("dvp_bound: bolt point out of range");
        }
        r[i] = f[pt] - (u.g[space.s_class[pt]] + u.h[space.p_class[pt]]);
    }

    // One global parity must fit every nonzero residual: the quantity
    // sign(r_i) * (-1)^i has to be constant across them.
    int ref = 0;
    std::size_t ref_pos = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (r[i] == 0.0) continue;
        const int sigma = (r[i] > 0.0 ? 1 : -1) * (i % 2 == 0 ? 1 : -1);
        if (ref == 0) {
            ref = sigma;
            ref_pos = i;
        } else if (sigma != ref) {
            throw SignViolationError(ref_pos, i,
                                     "dvp_bound: residual signs at bolt positions " +
                                         std::to_string(ref_pos) + " and " + std::to_string(i) +
                                         " fit no alternating pattern");
        }
    }

    double bound = std::numeric_limits<double>::infinity();
    for (double v : r) bound = std::min(bound, std::abs(v));
    return bound;
}

bool parity_sets_disjoint(const Bolt& bolt) {
    std::unordered_set<int> even, odd;
    for (std::size_t i = 0; i < bolt.points.size(); ++i) {
        (i % 2 == 0 ? even : odd).insert(bolt.points[i]);
    }
    for (int p : odd) {
        if (even.count(p)) return false;
    }
    return true;
}

}  // namespace boltcheb
