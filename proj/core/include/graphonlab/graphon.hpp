#pragma once

#include <Eigen/Core>
#include <functional>
#include <vector>

#include "graphonlab/graph.hpp"
#include "graphonlab/grid.hpp"

namespace glab {

/// Distance between grid points, by index.
using IndexMetric = std::function<double(int, int)>;

/// Discretized graphon: a weighted grid together with an exactly symmetric
/// kernel matrix. Plain kernels take values in [0,1]; kernels coming out of
/// spectral truncation may leave [0,1] and are flagged signed.
struct Graphon {
    WeightedGrid grid;
    Eigen::MatrixXd kernel;
    bool is_signed = false;

    std::size_t size() const { return grid.size(); }
};

/// Validates and assembles a [0,1]-valued graphon. Throws std::invalid_argument
/// on dimension mismatch, asymmetry (exact equality required), entries outside
/// [0,1], or invalid weights.
Graphon make_graphon(WeightedGrid grid, Eigen::MatrixXd kernel);

/// Same, but the kernel may take any finite real values (signed flag set).
Graphon make_signed_graphon(WeightedGrid grid, Eigen::MatrixXd kernel);

/// Graphon of a finite metric space: kernel[i][j] = d(i,j) / max distance
/// (no rescale when all distances vanish), diagonal zero. The metric must be
/// symmetric, nonnegative and zero on the diagonal.
Graphon metric_graphon(int n, const IndexMetric& metric, std::vector<double> weights,
                       std::vector<std::vector<double>> coords = {});

/// Convenience overload over a Euclidean point cloud.
Graphon metric_graphon(const std::vector<std::vector<double>>& points,
                       std::vector<double> weights);

/// Uniform grid on n points, kernel identically c in [0,1].
Graphon constant_graphon(int n, double c);

/// W-random graph: n grid points sampled i.i.d. from the weights, each pair
/// u<v connected independently with probability kernel[x_u][x_v].
/// Deterministic given the seed. Rejects signed kernels.
SimpleGraph sample_graph(const Graphon& g, int n, std::uint64_t seed);

/// Same, additionally reporting which grid point each vertex landed on.
SimpleGraph sample_graph(const Graphon& g, int n, std::uint64_t seed,
                         std::vector<int>& point_of_vertex);

}  // namespace glab
