#include "boltcheb/space.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <unordered_map>

#include "boltcheb/errors.hpp"

namespace boltcheb {

namespace {

void check_all_finite(const std::vector<double>& xs, const char* what) {
    for (double x : xs) {
        if (!std::isfinite(x)) {
            throw InputError(std::string(what) + " contains a non-finite entry");
        }
    }
}

// Dense class ids along ascending projection values; a gap of more than
// eps_class between consecutive sorted values starts a new class, smaller
// gaps chain into the current one.
std::vector<int> classes_by_projection(const std::vector<double>& proj, double eps_class,
                                       int& n_classes) {
    const int n = static_cast<int>(proj.size());
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return proj[a] < proj[b]; });
    std::vector<int> cls(n, 0);
    int c = 0;
    for (int k = 0; k < n; ++k) {
        if (k > 0 && proj[order[k]] - proj[order[k - 1]] > eps_class) ++c;
        cls[order[k]] = c;
    }
    n_classes = c + 1;
    return cls;
}

std::vector<int> densify(const std::vector<long long>& labels, int& n_classes, const char* side) {
    std::unordered_map<long long, int> remap;
    std::vector<int> out(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i] < 0) {
            throw InputError(std::string("build_explicit: negative ") + side + "-label at point " +
                             std::to_string(i));
        }
        auto [it, inserted] = remap.try_emplace(labels[i], static_cast<int>(remap.size()));
        (void)inserted;
        out[i] = it->second;
    }
    n_classes = static_cast<int>(remap.size());
    return out;
}

}  // namespace

FiniteQuotientSpace build_grid(int nx, int ny) {
    if (nx < 1 || ny < 1) throw InputError("build_grid: nx and ny must be at least 1");
    FiniteQuotientSpace sp;
    const int n = nx * ny;
    sp.s_class.resize(n);
    sp.p_class.resize(n);
    std::vector<std::vector<double>> coords(n);
    for (int i = 0; i < nx; ++i) {
        const double x = nx >= 2 ? -1.0 + 2.0 * i / (nx - 1) : 0.0;
        for (int j = 0; j < ny; ++j) {
            const double y = ny >= 2 ? -1.0 + 2.0 * j / (ny - 1) : 0.0;
            const int idx = i * ny + j;
            sp.s_class[idx] = i;
            sp.p_class[idx] = j;
            coords[idx] = {x, y};
        }
    }
    sp.n_s = nx;
    sp.n_p = ny;
    sp.coords = std::move(coords);
    return sp;
}

FiniteQuotientSpace build_ridge(const std::vector<std::vector<double>>& points,
                                const std::vector<double>& a,
                                const std::vector<double>& b,
                                double eps_class) {
    if (points.empty()) throw InputError("build_ridge: points must be nonempty");
    const std::size_t d = points.front().size();
    if (d == 0) throw InputError("build_ridge: points must have dimension at least 1");
    for (const auto& pt : points) {
        if (pt.size() != d) throw InputError("build_ridge: points have mixed dimensions");
        check_all_finite(pt, "build_ridge: points");
    }
    if (a.size() != d || b.size() != d) {
        throw InputError("build_ridge: direction dimension does not match the points");
    }
    check_all_finite(a, "build_ridge: direction a");
    check_all_finite(b, "build_ridge: direction b");
    auto is_zero = [](const std::vector<double>& v) {
        return std::all_of(v.begin(), v.end(), [](double t) { return t == 0.0; });
    };
    if (is_zero(a) || is_zero(b)) throw InputError("build_ridge: directions must be nonzero");
    if (!(eps_class > 0.0) || !std::isfinite(eps_class)) {
        throw InputError("build_ridge: eps_class must be a positive real");
    }

    auto project = [&](const std::vector<double>& dir) {
        std::vector<double> proj(points.size());
        for (std::size_t i = 0; i < points.size(); ++i) {
            double dot = 0.0;
            for (std::size_t k = 0; k < d; ++k) dot += dir[k] * points[i][k];
            proj[i] = dot;
        }
        return proj;
    };

    FiniteQuotientSpace sp;
    sp.s_class = classes_by_projection(project(a), eps_class, sp.n_s);
    sp.p_class = classes_by_projection(project(b), eps_class, sp.n_p);
    sp.coords = points;
    return sp;
}

FiniteQuotientSpace build_explicit(const std::vector<long long>& s_labels,
                                   const std::vector<long long>& p_labels) {
    if (s_labels.empty()) throw InputError("build_explicit: labelings must be nonempty");
    if (s_labels.size() != p_labels.size()) {
        throw InputError("build_explicit: labelings differ in length");
    }
    FiniteQuotientSpace sp;
    sp.s_class = densify(s_labels, sp.n_s, "s");
    sp.p_class = densify(p_labels, sp.n_p, "p");
    return sp;
}

SampledFunction evaluate_sum(const FiniteQuotientSpace& space, const SumElement& u) {
    if (static_cast<int>(u.g.size()) != space.n_s || static_cast<int>(u.h.size()) != space.n_p) {
        throw InputError("evaluate_sum: sum element shape does not match the space");
    }
    check_all_finite(u.g, "evaluate_sum: g");
    check_all_finite(u.h, "evaluate_sum: h");
    SampledFunction out;
    out.values.resize(space.s_class.size());
    for (std::size_t i = 0; i < out.values.size(); ++i) {
        out.values[i] = u.g[space.s_class[i]] + u.h[space.p_class[i]];
    }
    return out;
}

std::vector<std::vector<int>> class_members(const std::vector<int>& labels, int n_classes) {
    std::vector<std::vector<int>> members(n_classes);
    for (std::size_t i = 0; i < labels.size(); ++i) {
        members[labels[i]].push_back(static_cast<int>(i));
    }
    return members;
}

}  // namespace boltcheb
