#pragma once

#include <vector>

#include "boltcheb/space.hpp"

namespace boltcheb {

enum class LinkType { S, P };

// Ordered point sequence whose consecutive points alternately share an
// s-class and a p-class. A closed bolt has even length and wraps around with
// a link of the opposite type from the one entering its last point, so the
// alternation continues through the seam.
struct Bolt {
    std::vector<int> points;
    bool closed = false;
    LinkType first_link = LinkType::S;

    int length() const { return static_cast<int>(points.size()); }
};

// Checks the chain structure and infers the first link type. When both an
// s-link and a p-link hold between the first two points, S is tried first and
// kept if the remainder of the sequence validates.
Bolt validate_bolt(const FiniteQuotientSpace& space, const std::vector<int>& points, bool closed);

// Mean of alternately signed values over the bolt, positive at the first
// point: (1/n) * sum_i (-1)^i f(points[i]).
double bolt_functional(const Bolt& bolt, const SampledFunction& f);

// Lower bound on the best approximation error in the style of de la Vallee
// Poussin: min |f - u| over the points of a closed bolt on which the residual
// f - u alternates in sign. Zero residuals are compatible with either global
// parity.
double dvp_bound(const FiniteQuotientSpace& space, const SampledFunction& f,
                 const SumElement& u, const Bolt& bolt);

// True when no point occupies both an even and an odd position; exactly then
// the bolt functional has operator norm 1 in the sup norm.
bool parity_sets_disjoint(const Bolt& bolt);

}  // namespace boltcheb
