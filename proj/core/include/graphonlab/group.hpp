#pragma once

#include <functional>
#include <string>
#include <vector>

#include "graphonlab/graphon.hpp"

namespace glab {

/// Finite model of a compact metrizable group: a carrier 0..order-1 with a
/// multiplication rule, uniform Haar weights, and a bi-invariant metric.
/// Cyclic grids model the circle, torus grids model T^k; arbitrary finite
/// groups enter through multiplication tables.
struct GroupModel {
    int order = 0;
    std::function<int(int, int)> op;
    int identity = 0;
    std::function<int(int)> inv;
    std::vector<double> haar_weights;
    IndexMetric metric;

    // serialization tag + parameters ("cyclic": {N}, "torus": {k,N}, "table": {})
    std::string kind;
    std::vector<int> params;
    std::vector<std::vector<int>> table;  // populated for kind == "table"
};

/// Homomorphism between finite group models, as an element-index map.
struct GroupMorphism {
    GroupModel source;
    GroupModel target;
    std::vector<int> map;

    /// Image of the morphism, as sorted distinct target indices.
    std::vector<int> image() const;
};

/// Z/N with addition mod N and the flat circle metric
/// d(a,b) = min(|a-b|, N-|a-b|) / N (unit circumference).
GroupModel cyclic_group(int N);

/// (Z/N)^k with componentwise addition; metric is the Euclidean length of the
/// componentwise flat distances, rescaled by sqrt(k)/2 so the diameter is 1.
GroupModel torus_group(int k, int N);

/// Arbitrary finite group from a multiplication table. The bi-invariant metric
/// is built from conjugacy classes merged with their inverse classes, so it is
/// a symmetric class function (distinct nontrivial classes get distinct values
/// in (0,1]).
GroupModel table_group(std::vector<std::vector<int>> table);

/// Multiplication table of the symmetric group S_n over the lexicographic
/// enumeration of permutations; table[a][b] is "apply b, then a". Intended as
/// a convenient table_group input (n <= 6).
std::vector<std::vector<int>> symmetric_group_table(int n);

/// Index of the torus element with the given digit tuple, and back.
int torus_index(const std::vector<int>& digits, int k, int N);
std::vector<int> torus_digits(int index, int k, int N);

/// Validating constructor: checks map(xy) = map(x)map(y) on all pairs and
/// map(identity) = identity.
GroupMorphism make_morphism(GroupModel source, GroupModel target, std::vector<int> map);

/// f(x) = d(x, identity); symmetric under inversion whenever the metric is
/// bi-invariant.
std::vector<double> biinvariant_profile(const GroupModel& G);

/// Cayley graphon: kernel[x][y] = f(x * y^{-1}), Haar weights. Requires
/// f(x) = f(x^{-1}) and values in [0,1].
Graphon cayley_graphon(const GroupModel& G, const std::vector<double>& profile);

/// Winding-family profile on Z/N:
/// f(j) = (k+1 + cos(2*pi*j/N) + sum_i cos(2*pi*(n_1...n_i)*j/N)) / (2(k+1)),
/// products running over the first i exponents, i = 1..k.
std::vector<double> winding_kernel_profile(int k, const std::vector<long long>& exponents, int N);

/// Limit profile on the (k+1)-torus grid:
/// f(j_1..j_{k+1}) = (k+1 + sum_i cos(2*pi*j_i/N)) / (2(k+1)).
std::vector<double> torus_limit_profile(int k, int N);

/// j -> (j, n_1 j, n_1 n_2 j, ...) mod N, from Z/N into the (k+1)-torus grid.
GroupMorphism winding_morphism(int N, const std::vector<long long>& exponents);

/// Embeds Z/p^m into the circle grid Z/N as the p^m-th roots of unity:
/// j -> j * (N / p^m). Requires p prime and p^m | N.
GroupMorphism padic_tower(int p, int m, int N);

/// Pushforward of a weight vector along an index map; target weights are
/// fiber sums.
std::vector<double> pushforward_measure(const std::vector<int>& map,
                                        const std::vector<double>& weights,
                                        int target_size);

/// Pullback kernel'[x][y] = kernel[phi(x)][phi(y)], with the source Haar
/// weights. The graphon must live on the morphism's target carrier.
Graphon pullback_graphon(const GroupMorphism& phi, const Graphon& g);

/// m disjoint copies of the grid, each weight divided by m; kernel is
/// block-diagonal with copies of the original, zero across blocks.
Graphon induce_graphon(const Graphon& g, int m);

}  // namespace glab
