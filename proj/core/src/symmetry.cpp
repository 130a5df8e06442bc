#include "graphonlab/symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "graphonlab/metrics.hpp"

namespace glab {

namespace {

std::vector<int> identity_perm(int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

std::vector<int> compose(const std::vector<int>& p, const std::vector<int>& q) {
    std::vector<int> r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) r[i] = p[q[i]];
    return r;
}

std::vector<int> invert(const std::vector<int>& p) {
    std::vector<int> r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<int>(i);
    return r;
}

bool weights_match(const std::vector<double>& w, int i, int j) {
    return std::abs(w[i] - w[j]) <= 1e-12;
}

// Iterated partition refinement. With tol == 0 the kernel values participate
// in the refinement keys; with a positive tolerance only the weights do (the
// kernel is then checked during the search, never used to prune).
std::vector<int> refine_colors(const std::vector<double>& w, const Eigen::MatrixXd& k,
                               double tol) {
    const int n = static_cast<int>(w.size());
    std::vector<int> color(n);
    {
        // cluster weights within the matching tolerance; an over-coarse class
        // is safe (the search re-checks weights pairwise), an over-fine one
        // would wrongly prune near-equal weights
        std::vector<double> sorted(w);
        std::sort(sorted.begin(), sorted.end());
        std::vector<double> reps;
        for (double x : sorted)
            if (reps.empty() || x - reps.back() > 1e-12) reps.push_back(x);
        for (int i = 0; i < n; ++i) {
            auto it = std::upper_bound(reps.begin(), reps.end(), w[i]);
            int idx = static_cast<int>(it - reps.begin()) - 1;
            color[i] = idx;
        }
    }
    if (tol > 0.0) return color;

    while (true) {
        std::map<std::vector<double>, int> sig_ids;
        std::vector<std::vector<double>> sigs(n);
        for (int i = 0; i < n; ++i) {
            std::vector<std::pair<double, double>> row;  // (neighbor color, kernel value)
            row.reserve(n - 1);
            for (int j = 0; j < n; ++j)
                if (j != i) row.emplace_back(color[j], k(i, j));
            std::sort(row.begin(), row.end());
            std::vector<double> sig{static_cast<double>(color[i]), k(i, i)};
            for (auto& [c, v] : row) {
                sig.push_back(c);
                sig.push_back(v);
            }
            sig_ids.emplace(sig, 0);
            sigs[i] = std::move(sig);
        }
        int c = 0;
        for (auto& [key, id] : sig_ids) id = c++;
        std::vector<int> next(n);
        for (int i = 0; i < n; ++i) next[i] = sig_ids[sigs[i]];
        if (next == color) return color;
        color = std::move(next);
    }
}

bool full_check(const std::vector<double>& w, const Eigen::MatrixXd& k, double tol,
                const std::vector<int>& perm) {
    const int n = static_cast<int>(w.size());
    for (int i = 0; i < n; ++i)
        if (!weights_match(w, i, perm[i])) return false;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (std::abs(k(perm[i], perm[j]) - k(i, j)) > tol) return false;
    return true;
}

void search(const std::vector<double>& w, const Eigen::MatrixXd& k, double tol,
            const std::vector<int>& color, int depth, std::vector<int>& perm,
            std::vector<bool>& used, std::vector<std::vector<int>>& out) {
    const int n = static_cast<int>(w.size());
    if (depth == n) {
        out.push_back(perm);
        return;
    }
    for (int j = 0; j < n; ++j) {
        if (used[j] || color[j] != color[depth] || !weights_match(w, depth, j)) continue;
        bool ok = std::abs(k(j, j) - k(depth, depth)) <= tol;
        for (int u = 0; ok && u < depth; ++u)
            ok = std::abs(k(perm[u], j) - k(u, depth)) <= tol &&
                 std::abs(k(j, perm[u]) - k(depth, u)) <= tol;
        if (!ok) continue;
        perm[depth] = j;
        used[j] = true;
        search(w, k, tol, color, depth + 1, perm, used, out);
        used[j] = false;
    }
}

PermutationGroup find_automorphisms(const std::vector<double>& w, const Eigen::MatrixXd& k,
                                    const AutomorphismOptions& opts) {
    const int n = static_cast<int>(w.size());
    std::vector<std::vector<int>> elements;
    if (opts.prune) {
        if (n > opts.pruned_cap)
            throw std::runtime_error("automorphism search: grid exceeds pruned cap");
        std::vector<int> color = refine_colors(w, k, opts.tol);
        std::vector<int> perm(n);
        std::vector<bool> used(n, false);
        search(w, k, opts.tol, color, 0, perm, used, elements);
    } else {
        if (n > opts.naive_cap)
            throw std::runtime_error("automorphism search: grid exceeds naive cap");
        std::vector<int> perm = identity_perm(n);
        do {
            if (full_check(w, k, opts.tol, perm)) elements.push_back(perm);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    std::sort(elements.begin(), elements.end());
    return PermutationGroup{n, std::move(elements)};
}

}  // namespace

bool PermutationGroup::contains(const std::vector<int>& perm) const {
    return std::binary_search(elements.begin(), elements.end(), perm);
}

bool PermutationGroup::is_group() const {
    if (!contains(identity_perm(degree))) return false;
    for (const auto& p : elements) {
        if (!contains(invert(p))) return false;
        for (const auto& q : elements)
            if (!contains(compose(p, q))) return false;
    }
    return true;
}

std::vector<std::vector<int>> PermutationGroup::generators() const {
    std::vector<std::vector<int>> gens;
    std::set<std::vector<int>> generated{identity_perm(degree)};
    for (const auto& e : elements) {
        if (generated.count(e)) continue;
        gens.push_back(e);
        // close up under the new generator
        std::vector<std::vector<int>> frontier(generated.begin(), generated.end());
        while (!frontier.empty()) {
            std::vector<std::vector<int>> next;
            for (const auto& p : frontier)
                for (const auto& g : gens) {
                    auto pg = compose(p, g);
                    if (generated.insert(pg).second) next.push_back(std::move(pg));
                }
            frontier = std::move(next);
        }
    }
    return gens;
}

PermutationGroup PermutationGroup::trivial(int degree) {
    return PermutationGroup{degree, {identity_perm(degree)}};
}

PermutationGroup graphon_automorphisms(const Graphon& g, const AutomorphismOptions& opts) {
    return find_automorphisms(g.grid.weights, g.kernel, opts);
}

PermutationGroup trivial_automorphisms(const Graphon& g, const PermutationGroup& auts) {
    const int n = static_cast<int>(g.size());
    if (auts.degree != n)
        throw std::invalid_argument("trivial_automorphisms: group degree must match grid");
    std::vector<std::vector<int>> kept;
    for (const auto& p : auts.elements) {
        bool trivial = true;
        for (int i = 0; trivial && i < n; ++i)
            trivial = neighborhood_distance(g, i, p[i]) <= 1e-12;
        if (trivial) kept.push_back(p);
    }
    return PermutationGroup{n, std::move(kept)};
}

PermutationGroup graph_automorphisms(const SimpleGraph& G, const AutomorphismOptions& opts) {
    const int n = G.num_vertices;
    Eigen::MatrixXd adj = Eigen::MatrixXd::Zero(n, n);
    for (const auto& [u, v] : G.edges) adj(u, v) = adj(v, u) = 1.0;
    std::vector<double> w(n, n > 0 ? 1.0 / n : 0.0);
    AutomorphismOptions o = opts;
    o.tol = 0.0;
    return find_automorphisms(w, adj, o);
}

SimpleGraph frucht_realize(const GroupModel& G, const std::vector<int>& generators) {
    if (G.order == 1) return SimpleGraph::make(1, {});
    if (generators.empty())
        throw std::invalid_argument("frucht_realize: generating set must be nonempty");
    std::set<int> gen_set(generators.begin(), generators.end());
    if (gen_set.size() != generators.size())
        throw std::invalid_argument("frucht_realize: duplicate generator");
    if (gen_set.count(G.identity))
        throw std::invalid_argument("frucht_realize: identity is not a valid generator");
    // the set must generate, otherwise the Cayley graph is disconnected
    std::set<int> reached{G.identity};
    std::vector<int> frontier{G.identity};
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int x : frontier)
            for (int s : generators) {
                int y = G.op(x, s);
                if (reached.insert(y).second) next.push_back(y);
            }
        frontier = std::move(next);
    }
    if (static_cast<int>(reached.size()) != G.order)
        throw std::invalid_argument("frucht_realize: set does not generate the group");

    const int num_gens = static_cast<int>(generators.size());
    int next_vertex = G.order;
    std::vector<std::pair<int, int>> edges;
    auto add_tail = [&](int attach, int length) {
        int prev = attach;
        for (int t = 0; t < length; ++t) {
            edges.emplace_back(prev, next_vertex);
            prev = next_vertex++;
        }
    };
    // Each directed Cayley edge u -> u*s becomes u - a1 - a2 - v with tails of
    // length k at a1 and k + #gens at a2 (k = 1-based generator index); the
    // unequal tails pin down both the generator and the direction.
    for (int gi = 0; gi < num_gens; ++gi) {
        int s = generators[gi];
        for (int u = 0; u < G.order; ++u) {
            int v = G.op(u, s);
            int a1 = next_vertex++;
            int a2 = next_vertex++;
            edges.emplace_back(u, a1);
            edges.emplace_back(a1, a2);
            edges.emplace_back(a2, v);
            add_tail(a1, gi + 1);
            add_tail(a2, gi + 1 + num_gens);
        }
    }
    return SimpleGraph::make(next_vertex, std::move(edges));
}

bool is_cayley_transitive(const Graphon& g, const GroupModel& G) {
    const int n = static_cast<int>(g.size());
    if (n != G.order)
        throw std::invalid_argument("is_cayley_transitive: group order must match grid size");
    for (int a = 0; a < n; ++a) {
        for (int x = 0; x < n; ++x)
            if (!weights_match(g.grid.weights, G.op(a, x), x)) return false;
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                if (std::abs(g.kernel(G.op(a, x), G.op(a, y)) - g.kernel(x, y)) > 1e-12)
                    return false;
    }
    // translations of a group on itself are transitive; confirm on the grid
    std::set<int> orbit;
    for (int a = 0; a < n; ++a) orbit.insert(G.op(a, 0));
    return static_cast<int>(orbit.size()) == n;
}

Graphon realize_metric_group(int n, const IndexMetric& metric, const PermutationGroup& H,
                             std::vector<double> seed_weights,
                             std::vector<std::vector<double>> coords) {
    if (H.degree != n)
        throw std::invalid_argument("realize_metric_group: group degree must match point count");
    if (static_cast<int>(seed_weights.size()) != n)
        throw std::invalid_argument("realize_metric_group: one weight per point");
    for (double w : seed_weights)
        if (!(w > 0.0))
            throw std::invalid_argument("realize_metric_group: weights must be positive");
    for (const auto& p : H.elements)
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (std::abs(metric(p[i], p[j]) - metric(i, j)) > 1e-12)
                    throw std::invalid_argument("realize_metric_group: action is not isometric");

    // average over the action, then normalize: the result is H-invariant
    std::vector<double> averaged(n, 0.0);
    for (const auto& p : H.elements)
        for (int i = 0; i < n; ++i) averaged[i] += seed_weights[p[i]];
    double total = 0.0;
    for (double& w : averaged) total += w;
    for (double& w : averaged) w /= total;
    return metric_graphon(n, metric, std::move(averaged), std::move(coords));
}

}  // namespace glab
