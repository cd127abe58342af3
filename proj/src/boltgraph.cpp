#include "boltcheb/boltgraph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <set>
#include <string>
#include <utility>

#include "boltcheb/errors.hpp"

namespace boltcheb {

namespace {

// Iterative Tarjan. Returns a component id per node; ids are deterministic
// for a fixed adjacency but otherwise arbitrary.
std::vector<int> scc_ids(const std::vector<std::vector<int>>& out, int& comp_count) {
    const int n = static_cast<int>(out.size());
    std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
    std::vector<char> on_stack(n, 0);
    std::vector<int> stack;
    std::vector<std::pair<int, std::size_t>> call;  // node, position in its edge list
    int next_index = 0;
    comp_count = 0;
    for (int root = 0; root < n; ++root) {
        if (index[root] != -1) continue;
        call.emplace_back(root, 0);
        while (!call.empty()) {
            const int v = call.back().first;
            if (call.back().second == 0) {
                index[v] = low[v] = next_index++;
                stack.push_back(v);
                on_stack[v] = 1;
            }
            bool descended = false;
            while (call.back().second < out[v].size()) {
                const int w = out[v][call.back().second++];
                if (index[w] == -1) {
                    call.emplace_back(w, 0);
                    descended = true;
                    break;
                }
                if (on_stack[w]) low[v] = std::min(low[v], index[w]);
            }
            if (descended) continue;
            if (low[v] == index[v]) {
                for (;;) {
                    const int w = stack.back();
                    stack.pop_back();
                    on_stack[w] = 0;
                    comp[w] = comp_count;
                    if (w == v) break;
                }
                ++comp_count;
            }
            call.pop_back();
            if (!call.empty()) {
                const int parent = call.back().first;
                low[parent] = std::min(low[parent], low[v]);
            }
        }
    }
    return comp;
}

Bolt node_cycle_to_bolt(const BoltGraph& graph, const std::vector<int>& cycle) {
    std::size_t start = 0;
    while (start < cycle.size() && !graph.is_plus(cycle[start])) ++start;
    std::vector<int> pts;
    pts.reserve(cycle.size());
    for (std::size_t k = 0; k < cycle.size(); ++k) {
        pts.push_back(graph.point_of(cycle[(start + k) % cycle.size()]));
    }
    return Bolt{std::move(pts), true, LinkType::S};
}

// Lexicographically smallest rotation of a closed point sequence.
std::vector<int> canonical_rotation(const std::vector<int>& pts) {
    std::vector<int> best = pts;
    std::vector<int> rot = pts;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        std::rotate(rot.begin(), rot.begin() + 1, rot.end());
        if (rot < best) best = rot;
    }
    return best;
}

}  // namespace

BoltGraph build_graph(const FiniteQuotientSpace& space, const SampledFunction& f) {
    if (f.n() != space.n()) {
        throw InputError("build_graph: function length does not match the space");
    }
    BoltGraph g;
    g.space = &space;
    const int n = space.n();
    g.node_weight.resize(2 * static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        g.node_weight[i] = f[i];
        g.node_weight[n + i] = -f[i];
    }
    g.out.assign(2 * static_cast<std::size_t>(n), {});
    for (const auto& cls : class_members(space.s_class, space.n_s)) {
        for (int x : cls) {
            for (int y : cls) {
                if (x != y) g.out[x].push_back(n + y);
            }
        }
    }
    for (const auto& cls : class_members(space.p_class, space.n_p)) {
        for (int y : cls) {
            for (int z : cls) {
                if (y != z) g.out[n + y].push_back(z);
            }
        }
    }
    return g;
}

DualResult max_mean_cycle(const BoltGraph& graph) {
    const int n_nodes = graph.nodes();
    int comp_count = 0;
    const std::vector<int> comp = scc_ids(graph.out, comp_count);
    std::vector<std::vector<int>> members(comp_count);
    for (int v = 0; v < n_nodes; ++v) members[comp[v]].push_back(v);
    std::vector<int> comp_order(comp_count);
    std::iota(comp_order.begin(), comp_order.end(), 0);
    std::sort(comp_order.begin(), comp_order.end(),
              [&](int a, int b) { return members[a].front() < members[b].front(); });

    double best = -std::numeric_limits<double>::infinity();
    std::vector<int> best_cycle;
    std::vector<int> loc(n_nodes, -1);
    for (int c : comp_order) {
        const auto& nodes = members[c];
        const int m = static_cast<int>(nodes.size());
        if (m < 2) continue;  // no self-loops exist, so a singleton has no cycle
        for (int i = 0; i < m; ++i) loc[nodes[i]] = i;
        std::vector<std::vector<int>> ladj(m);
        for (int i = 0; i < m; ++i) {
            for (int w : graph.out[nodes[i]]) {
                if (comp[w] == c) ladj[i].push_back(loc[w]);
            }
        }

        // Karp: dist[k][v] is the best weight of a walk of exactly k edges
        // from the source (local node 0) to v inside the component, with an
        // explicit defined flag so unreachable levels never feed a maximum.
        const std::size_t width = static_cast<std::size_t>(m);
        std::vector<double> dist((width + 1) * width, 0.0);
        std::vector<char> defined((width + 1) * width, 0);
        std::vector<int> pred((width + 1) * width, -1);
        defined[0] = 1;
        for (int k = 1; k <= m; ++k) {
            for (int u = 0; u < m; ++u) {
                if (!defined[(k - 1) * width + u]) continue;
                const double base = dist[(k - 1) * width + u] + graph.node_weight[nodes[u]];
                for (int w : ladj[u]) {
                    double& dw = dist[k * width + w];
                    char& def = defined[k * width + w];
                    if (!def || base > dw) {
                        dw = base;
                        def = 1;
                        pred[k * width + w] = u;
                    }
                }
            }
        }

        double lambda = -std::numeric_limits<double>::infinity();
        int best_v = -1;
        for (int v = 0; v < m; ++v) {
            if (!defined[width * width + v]) continue;
            double inner = std::numeric_limits<double>::infinity();
            for (int k = 0; k < m; ++k) {
                if (!defined[k * width + v]) continue;
                inner = std::min(inner, (dist[width * width + v] - dist[k * width + v]) /
                                            static_cast<double>(m - k));
            }
            if (inner > lambda) {
                lambda = inner;
                best_v = v;
            }
        }
        if (best_v != -1 && lambda > best) {
            // Any cycle on the optimal length-m walk attains the maximum
            // mean: removing a cycle of length c and weight W leaves a walk
            // of length m-c, so W >= lambda*c follows from the inner minimum.
            std::vector<int> walk(width + 1);
            walk[m] = best_v;
            for (int k = m; k > 0; --k) walk[k - 1] = pred[k * width + walk[k]];
            std::vector<int> first_seen(m, -1);
            int ci = -1, cj = -1;
            for (int t = 0; t <= m; ++t) {
                const int v = walk[t];
                if (first_seen[v] != -1) {
                    ci = first_seen[v];
                    cj = t;
                    break;
                }
                first_seen[v] = t;
            }
            best = lambda;
            best_cycle.clear();
            for (int t = ci; t < cj; ++t) best_cycle.push_back(nodes[walk[t]]);
        }
        for (int v : nodes) loc[v] = -1;
    }

    if (best_cycle.empty()) return DualResult{0.0, std::nullopt, true};
    Bolt witness = node_cycle_to_bolt(graph, best_cycle);
    SampledFunction f{std::vector<double>(graph.node_weight.begin(),
                                          graph.node_weight.begin() + graph.points())};
    const double value = bolt_functional(witness, f);
    return DualResult{value, std::move(witness), false};
}

bool has_closed_bolt(const FiniteQuotientSpace& space) {
    const BoltGraph g =
        build_graph(space, SampledFunction{std::vector<double>(space.s_class.size(), 0.0)});
    int comp_count = 0;
    const std::vector<int> comp = scc_ids(g.out, comp_count);
    std::vector<int> size(comp_count, 0);
    for (int id : comp) ++size[id];
    return std::any_of(size.begin(), size.end(), [](int s) { return s >= 2; });
}

std::optional<Bolt> find_extremal_bolt(const FiniteQuotientSpace& space,
                                       const SampledFunction& residual, double tol) {
    if (residual.n() != space.n()) {
        throw InputError("find_extremal_bolt: residual length does not match the space");
    }
    if (!(tol > 0.0)) throw InputError("find_extremal_bolt: tol must be positive");
    double m = 0.0;
    for (double v : residual.values) m = std::max(m, std::abs(v));
    if (m == 0.0) {
        throw ZeroResidualError("find_extremal_bolt: the residual is identically zero");
    }

    const int n = space.n();
    const BoltGraph g = build_graph(space, residual);
    std::vector<char> admissible(2 * static_cast<std::size_t>(n), 0);
    for (int x = 0; x < n; ++x) {
        if (residual[x] >= m - tol) admissible[x] = 1;
        if (residual[x] <= -m + tol) admissible[n + x] = 1;
    }

    // Depth-first cycle search restricted to admissible nodes; any back edge
    // into the gray path closes an alternating cycle of near-extremal points.
    std::vector<int> color(2 * static_cast<std::size_t>(n), 0);
    std::vector<int> path;
    std::vector<std::pair<int, std::size_t>> stack;
    for (int s = 0; s < 2 * n; ++s) {
        if (!admissible[s] || color[s] != 0) continue;
        stack.emplace_back(s, 0);
        while (!stack.empty()) {
            const int v = stack.back().first;
            if (stack.back().second == 0) {
                color[v] = 1;
                path.push_back(v);
            }
            bool descended = false;
            while (stack.back().second < g.out[v].size()) {
                const int w = g.out[v][stack.back().second++];
                if (!admissible[w]) continue;
                if (color[w] == 1) {
                    const auto it = std::find(path.begin(), path.end(), w);
                    return node_cycle_to_bolt(g, std::vector<int>(it, path.end()));
                }
                if (color[w] == 0) {
                    stack.emplace_back(w, 0);
                    descended = true;
                    break;
                }
            }
            if (descended) continue;
            color[v] = 2;
            path.pop_back();
            stack.pop_back();
        }
    }
    return std::nullopt;
}

std::vector<Bolt> enumerate_closed_bolts(const FiniteQuotientSpace& space, int max_len) {
    if (max_len < 2 || max_len % 2 != 0) {
        throw InputError("enumerate_closed_bolts: max_len must be a positive even integer");
    }
    if (space.n() > 12 || max_len > 10) {
        throw GuardExceededError("enumerate_closed_bolts: guard exceeded (needs n <= 12 and "
                                 "max_len <= 10)");
    }
    const auto ms = class_members(space.s_class, space.n_s);
    const auto mp = class_members(space.p_class, space.n_p);
    std::set<std::vector<int>> canon;
    std::vector<int> path;

    // Grow walks that alternate s,p,s,... links from each anchor. Every
    // closed bolt has a rotation starting on an s-link, so anchored walks
    // meet all of them; canonicalizing by rotation removes duplicates.
    auto extend = [&](auto&& self, int anchor) -> void {
        const int last = path.back();
        const std::size_t k = path.size() - 1;  // index of the link being added
        const auto& peers = k % 2 == 0 ? ms[space.s_class[last]] : mp[space.p_class[last]];
        for (int y : peers) {
            if (y == last) continue;
            path.push_back(y);
            if (path.size() % 2 == 0 && y != anchor &&
                space.p_class[y] == space.p_class[anchor]) {
                canon.insert(canonical_rotation(path));
            }
            if (static_cast<int>(path.size()) < max_len) self(self, anchor);
            path.pop_back();
        }
    };
    for (int x0 = 0; x0 < space.n(); ++x0) {
        path.assign(1, x0);
        extend(extend, x0);
    }

    std::vector<Bolt> out;
    out.reserve(canon.size());
    for (const auto& pts : canon) out.push_back(validate_bolt(space, pts, true));
    return out;
}

}  // namespace boltcheb
