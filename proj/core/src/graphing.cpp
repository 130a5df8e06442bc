#include "graphonlab/graphing.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "graphonlab/graphon.hpp"

namespace glab {

std::vector<std::vector<int>> FiniteGraphing::adjacency() const {
    std::vector<std::vector<int>> adj(size());
    for (const auto& [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    return adj;
}

bool FiniteGraphing::has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges.begin(), edges.end(), std::make_pair(u, v));
}

FiniteGraphing make_graphing(WeightedGrid grid, std::vector<std::pair<int, int>> edges,
                             int degree_bound) {
    grid = WeightedGrid::make(std::move(grid.weights), std::move(grid.ids), std::move(grid.coords));
    if (degree_bound < 0)
        throw std::invalid_argument("make_graphing: degree bound must be nonnegative");
    const int n = static_cast<int>(grid.size());
    std::set<std::pair<int, int>> seen;
    for (auto& [u, v] : edges) {
        if (u == v) throw std::invalid_argument("make_graphing: loops are not allowed");
        if (u > v) std::swap(u, v);
        if (u < 0 || v >= n) throw std::invalid_argument("make_graphing: edge endpoint out of range");
        if (!seen.insert({u, v}).second)
            throw std::invalid_argument("make_graphing: duplicate edge");
    }
    std::sort(edges.begin(), edges.end());
    std::vector<int> deg(n, 0);
    for (const auto& [u, v] : edges) {
        ++deg[u];
        ++deg[v];
    }
    for (int x = 0; x < n; ++x)
        if (deg[x] > degree_bound)
            throw std::invalid_argument("make_graphing: vertex degree exceeds the bound D");
    return FiniteGraphing{std::move(grid), std::move(edges), degree_bound};
}

double edge_measure(const FiniteGraphing& g, const std::vector<int>& A,
                    const std::vector<int>& B) {
    const int n = static_cast<int>(g.size());
    std::set<int> a_set, b_set;
    for (int x : A) {
        if (x < 0 || x >= n) throw std::invalid_argument("edge_measure: vertex id out of range");
        a_set.insert(x);
    }
    for (int y : B) {
        if (y < 0 || y >= n) throw std::invalid_argument("edge_measure: vertex id out of range");
        b_set.insert(y);
    }
    auto adj = g.adjacency();
    double eta = 0.0;
    for (int x : a_set) {
        int deg_b = 0;
        for (int y : adj[x]) deg_b += b_set.count(y) ? 1 : 0;
        eta += g.grid.weights[x] * deg_b;
    }
    return eta;
}

DegreeSymmetryReport check_degree_symmetry(const FiniteGraphing& g) {
    // Singletons suffice on an atomic grid: eta({x}x{y}) = w_x [xy in E], so the
    // full rectangle condition reduces to equal weights across every edge.
    DegreeSymmetryReport rep{true, 0.0, std::nullopt};
    for (const auto& [u, v] : g.edges) {
        double violation = std::abs(g.grid.weights[u] - g.grid.weights[v]);
        if (violation > rep.max_violation) {
            rep.max_violation = violation;
            rep.witness = std::make_pair(u, v);
        }
    }
    rep.holds = rep.max_violation <= 1e-12;
    if (rep.holds) rep.witness.reset();
    return rep;
}

std::vector<int> positive_support(const WeightedGrid& grid) {
    std::vector<int> s;
    for (int i = 0; i < static_cast<int>(grid.size()); ++i)
        if (grid.weights[i] > 0.0) s.push_back(i);
    return s;
}

PermutationGroup graphing_automorphisms(const FiniteGraphing& g,
                                        const AutomorphismOptions& opts) {
    // Quotient away zero-weight atoms first (the measure-algebra view), so the
    // group agrees with that of any full subgraphing.
    FiniteGraphing reduced = full_subgraphing(g, positive_support(g.grid));
    const int n = static_cast<int>(reduced.size());
    Eigen::MatrixXd adj = Eigen::MatrixXd::Zero(n, n);
    for (const auto& [u, v] : reduced.edges) adj(u, v) = adj(v, u) = 1.0;
    AutomorphismOptions o = opts;
    o.tol = 0.0;
    Graphon as_graphon = make_graphon(reduced.grid, std::move(adj));
    return graphon_automorphisms(as_graphon, o);
}

FiniteGraphing full_subgraphing(const FiniteGraphing& g, const std::vector<int>& S) {
    const int n = static_cast<int>(g.size());
    std::set<int> keep(S.begin(), S.end());
    for (int x : keep)
        if (x < 0 || x >= n) throw std::invalid_argument("full_subgraphing: vertex out of range");
    for (int x = 0; x < n; ++x)
        if (g.grid.weights[x] > 0.0 && !keep.count(x))
            throw std::invalid_argument(
                "full_subgraphing: S must contain every positive-weight vertex");

    std::vector<int> new_index(n, -1);
    std::vector<double> weights;
    std::vector<std::string> ids;
    for (int x : keep) {
        new_index[x] = static_cast<int>(weights.size());
        weights.push_back(g.grid.weights[x]);
        ids.push_back(g.grid.ids[x]);
    }
    std::vector<std::pair<int, int>> edges;
    for (const auto& [u, v] : g.edges)
        if (keep.count(u) && keep.count(v)) edges.emplace_back(new_index[u], new_index[v]);
    return make_graphing(WeightedGrid::make(std::move(weights), std::move(ids)),
                         std::move(edges), g.degree_bound);
}

}  // namespace glab
