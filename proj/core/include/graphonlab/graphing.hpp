#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "graphonlab/grid.hpp"
#include "graphonlab/symmetry.hpp"

namespace glab {

/// Bounded-degree symmetric edge set over a weighted grid; the finite-scale
/// graphing. No loops, max degree <= degree_bound.
struct FiniteGraphing {
    WeightedGrid grid;
    std::vector<std::pair<int, int>> edges;  // each with first < second
    int degree_bound = 0;

    std::size_t size() const { return grid.size(); }
    std::vector<std::vector<int>> adjacency() const;
    bool has_edge(int u, int v) const;
};

FiniteGraphing make_graphing(WeightedGrid grid, std::vector<std::pair<int, int>> edges,
                             int degree_bound);

/// Edge measure eta(A x B) = sum_{x in A} weight[x] * deg_B(x).
double edge_measure(const FiniteGraphing& g, const std::vector<int>& A,
                    const std::vector<int>& B);

struct DegreeSymmetryReport {
    bool holds;
    double max_violation;
    std::optional<std::pair<int, int>> witness;
};

/// Checks eta(AxB) = eta(BxA) over all singleton pairs, which by additivity
/// settles the full condition on an atomic grid: it holds iff the two
/// endpoints of every edge carry equal weight.
DegreeSymmetryReport check_degree_symmetry(const FiniteGraphing& g);

/// Weight-preserving permutations mapping the edge set onto itself. Computed
/// on the positive-weight support (the measure-algebra view: zero-weight
/// atoms are quotiented away first), so the result is invariant under full
/// subgraphings.
PermutationGroup graphing_automorphisms(const FiniteGraphing& g,
                                        const AutomorphismOptions& opts = {});

/// Induced graphing on S, which must contain every positive-weight vertex.
FiniteGraphing full_subgraphing(const FiniteGraphing& g, const std::vector<int>& S);

/// Indices of positive-weight vertices.
std::vector<int> positive_support(const WeightedGrid& grid);

}  // namespace glab
