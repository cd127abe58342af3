#pragma once

// Seeded generators shared by the unit and acceptance suites. Everything
// routes through DeterministicRng so reruns see identical instances.

#include <algorithm>
#include <cmath>
#include <optional>
#include <vector>

#include "boltcheb/bolt.hpp"
#include "boltcheb/boltgraph.hpp"
#include "boltcheb/rng.hpp"
#include "boltcheb/space.hpp"

namespace testsupport {

using boltcheb::Bolt;
using boltcheb::DeterministicRng;
using boltcheb::FiniteQuotientSpace;
using boltcheb::SampledFunction;
using boltcheb::SumElement;

inline SampledFunction random_function(DeterministicRng& rng, int n) {
    SampledFunction f;
    f.values.resize(n);
    for (double& v : f.values) v = rng.uniform(-1.0, 1.0);
    return f;
}

inline SumElement random_sum(DeterministicRng& rng, const FiniteQuotientSpace& sp) {
    SumElement u;
    u.g.resize(sp.n_s);
    u.h.resize(sp.n_p);
    for (double& v : u.g) v = rng.uniform(-1.0, 1.0);
    for (double& v : u.h) v = rng.uniform(-1.0, 1.0);
    return u;
}

inline bool has_multipoint_class(const FiniteQuotientSpace& sp) {
    return sp.n_s < sp.n() || sp.n_p < sp.n();
}

// Random labelings over n in [2, max_n] with at least one class of two or
// more points.
inline FiniteQuotientSpace random_space(DeterministicRng& rng, int max_n) {
    for (;;) {
        const int n = rng.uniform_int(2, max_n);
        const int ks = rng.uniform_int(1, n);
        const int kp = rng.uniform_int(1, n);
        std::vector<long long> s(n), p(n);
        for (auto& v : s) v = rng.uniform_int(0, ks - 1);
        for (auto& v : p) v = rng.uniform_int(0, kp - 1);
        FiniteQuotientSpace sp = boltcheb::build_explicit(s, p);
        if (has_multipoint_class(sp)) return sp;
    }
}

// Like random_space but with class counts kept at 2 or more per side, which
// keeps individual classes small enough for exhaustive bolt listing.
inline FiniteQuotientSpace random_small_space(DeterministicRng& rng, int max_n) {
    const int n = rng.uniform_int(2, max_n);
    const int ks = rng.uniform_int(2, std::max(2, n));
    const int kp = rng.uniform_int(2, std::max(2, n));
    std::vector<long long> s(n), p(n);
    for (auto& v : s) v = rng.uniform_int(0, ks - 1);
    for (auto& v : p) v = rng.uniform_int(0, kp - 1);
    return boltcheb::build_explicit(s, p);
}

// One labeling is all singletons, the other random: no closed bolt can exist
// and the two algebras together interpolate everything.
inline FiniteQuotientSpace random_separated_space(DeterministicRng& rng, int max_n) {
    const int n = rng.uniform_int(1, max_n);
    std::vector<long long> fine(n), coarse(n);
    const int k = std::max(1, rng.uniform_int(1, n));
    for (int i = 0; i < n; ++i) fine[i] = i;
    for (auto& v : coarse) v = rng.uniform_int(0, k - 1);
    return rng.coin() ? boltcheb::build_explicit(fine, coarse)
                      : boltcheb::build_explicit(coarse, fine);
}

// Random alternating walk; closes into a bolt when the wraparound p-link
// appears at even length. Returns nothing if no closure is found.
inline std::optional<Bolt> random_closed_bolt(const FiniteQuotientSpace& sp,
                                              DeterministicRng& rng, int max_len = 12,
                                              int attempts = 64) {
    const auto ms = boltcheb::class_members(sp.s_class, sp.n_s);
    const auto mp = boltcheb::class_members(sp.p_class, sp.n_p);
    for (int attempt = 0; attempt < attempts; ++attempt) {
        std::vector<int> path{rng.uniform_int(0, sp.n() - 1)};
        const int anchor = path.front();
        for (int step = 0; step < max_len; ++step) {
            const int last = path.back();
            const bool s_link = (path.size() - 1) % 2 == 0;
            const auto& peers = s_link ? ms[sp.s_class[last]] : mp[sp.p_class[last]];
            std::vector<int> next;
            for (int y : peers) {
                if (y != last) next.push_back(y);
            }
            if (next.empty()) break;
            path.push_back(next[rng.uniform_int(0, static_cast<int>(next.size()) - 1)]);
            const bool closable = path.size() % 2 == 0 && path.back() != anchor &&
                                  sp.p_class[path.back()] == sp.p_class[anchor];
            if (closable && (static_cast<int>(path.size()) >= max_len || rng.coin())) {
                return boltcheb::validate_bolt(sp, path, true);
            }
        }
    }
    return std::nullopt;
}

// Random alternating walk kept open; lengths cover both parities.
inline std::optional<Bolt> random_open_bolt(const FiniteQuotientSpace& sp,
                                            DeterministicRng& rng, int max_len = 9,
                                            int attempts = 64) {
    const auto ms = boltcheb::class_members(sp.s_class, sp.n_s);
    const auto mp = boltcheb::class_members(sp.p_class, sp.n_p);
    for (int attempt = 0; attempt < attempts; ++attempt) {
        std::vector<int> path{rng.uniform_int(0, sp.n() - 1)};
        const int want = rng.uniform_int(2, max_len);
        while (static_cast<int>(path.size()) < want) {
            const int last = path.back();
            const bool s_link = (path.size() - 1) % 2 == 0;
            const auto& peers = s_link ? ms[sp.s_class[last]] : mp[sp.p_class[last]];
            std::vector<int> next;
            for (int y : peers) {
                if (y != last) next.push_back(y);
            }
            if (next.empty()) break;
            path.push_back(next[rng.uniform_int(0, static_cast<int>(next.size()) - 1)]);
        }
        if (path.size() >= 2) return boltcheb::validate_bolt(sp, path, false);
    }
    return std::nullopt;
}

inline double sup_norm(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

inline std::vector<double> residual_values(const FiniteQuotientSpace& sp,
                                           const SampledFunction& f, const SumElement& u) {
    const SampledFunction ue = boltcheb::evaluate_sum(sp, u);
    std::vector<double> r(f.values.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = f.values[i] - ue.values[i];
    return r;
}

}  // namespace testsupport
