#pragma once

#include <vector>

#include "graphonlab/graph.hpp"
#include "graphonlab/graphon.hpp"
#include "graphonlab/group.hpp"

namespace glab {

/// Fully enumerated permutation group on {0..degree-1}. Elements are kept
/// sorted lexicographically so that results are independent of search order.
struct PermutationGroup {
    int degree = 0;
    std::vector<std::vector<int>> elements;

    std::size_t order() const { return elements.size(); }
    bool contains(const std::vector<int>& perm) const;

    /// Greedy small generating set (identity-only group yields the empty set).
    std::vector<std::vector<int>> generators() const;

    /// Group axioms: identity present, closed under composition and inverse.
    bool is_group() const;

    static PermutationGroup trivial(int degree);
};

struct AutomorphismOptions {
    double tol = 0.0;     // kernel match tolerance
    int naive_cap = 10;   // max points for naive enumeration
    int pruned_cap = 64;  // max points with refinement pruning
    bool prune = true;
};

/// All permutations preserving weights (within 1e-12) and the kernel (within
/// tol). Throws when the applicable cap is exceeded.
PermutationGroup graphon_automorphisms(const Graphon& g, const AutomorphismOptions& opts = {});

/// Subgroup of automorphisms moving every point r_W-distance zero; the finite
/// counterpart of the trivial automorphisms, reduced to the identity on
/// separated graphons.
PermutationGroup trivial_automorphisms(const Graphon& g, const PermutationGroup& auts);

/// Edge-preserving vertex permutations of a simple graph.
PermutationGroup graph_automorphisms(const SimpleGraph& G, const AutomorphismOptions& opts = {});

/// Frucht-style realization: the Cayley graph of G over the given generating
/// set, with each generator-colored directed edge u->v replaced by a path
/// u - a1 - a2 - v carrying pendant tails of length k at a1 and k + #gens at
/// a2 (k = 1-based generator index), so the gadget encodes both the generator
/// and the edge direction. The automorphism group of the output is G, acting
/// freely on the Cayley vertices; this is established by the brute-force
/// automorphism tests rather than assumed.
SimpleGraph frucht_realize(const GroupModel& G, const std::vector<int>& generators);

/// True iff every left translation x -> g*x preserves weights and kernel and
/// the action is transitive on grid points. Requires |G| == grid size.
bool is_cayley_transitive(const Graphon& g, const GroupModel& G);

/// Metric graphon over (X,d) with H-invariant weights obtained by averaging
/// the given positive weights over the H-action. H must act by isometries.
Graphon realize_metric_group(int n, const IndexMetric& metric, const PermutationGroup& H,
                             std::vector<double> seed_weights,
                             std::vector<std::vector<double>> coords = {});

}  // namespace glab
