#pragma once

#include <optional>
#include <vector>

namespace boltcheb {

// Finite model of a space carrying two quotient labelings. Functions of the
// form g(s(x)) form one algebra, functions h(p(x)) the other; class labels are
// dense 0-based ranges so per-class data can live in plain arrays.
struct FiniteQuotientSpace {
    std::vector<int> s_class;
    std::vector<int> p_class;
    int n_s = 0;
    int n_p = 0;
    std::optional<std::vector<std::vector<double>>> coords;

    int n() const { return static_cast<int>(s_class.size()); }
};

// Real values of a function sampled at each point of the space.
struct SampledFunction {
    std::vector<double> values;

    int n() const { return static_cast<int>(values.size()); }
    double operator[](int i) const { return values[static_cast<std::size_t>(i)]; }
};

// An element u = g(s(x)) + h(p(x)) stored as one value per class.
struct SumElement {
    std::vector<double> g;
    std::vector<double> h;
};

// nx-by-ny product grid; point i*ny + j sits in row i (its s-class) and
// column j (its p-class). Coordinates span [-1, 1] per axis with linear
// spacing; an axis with a single layer sits at 0.
FiniteQuotientSpace build_grid(int nx, int ny);

// Groups points by the inner products a.x and b.x. Consecutive sorted values
// chain into one class while the gap stays within eps_class; class ids follow
// ascending projection order.
FiniteQuotientSpace build_ridge(const std::vector<std::vector<double>>& points,
                                const std::vector<double>& a,
                                const std::vector<double>& b,
                                double eps_class);

// Carrier for arbitrary labelings. Labels are relabeled onto dense 0-based
// ranges in first-occurrence order, preserving the equality structure.
FiniteQuotientSpace build_explicit(const std::vector<long long>& s_labels,
                                   const std::vector<long long>& p_labels);

// Pointwise u(x) = g(s(x)) + h(p(x)).
SampledFunction evaluate_sum(const FiniteQuotientSpace& space, const SumElement& u);

// Point indices grouped by class label; inner lists ascending.
std::vector<std::vector<int>> class_members(const std::vector<int>& labels, int n_classes);

}  // namespace boltcheb
