#include "graphonlab/graphon.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <unordered_set>

#include "graphonlab/rng.hpp"

namespace glab {

WeightedGrid WeightedGrid::make(std::vector<double> weights, std::vector<std::string> ids,
                                std::vector<std::vector<double>> coords) {
    if (weights.empty()) throw std::invalid_argument("grid must have at least one point");
    double total = 0.0;
    for (double w : weights) {
        if (!(w >= 0.0) || !std::isfinite(w))
            throw std::invalid_argument("grid weights must be nonnegative finite reals");
        total += w;
    }
    if (std::abs(total - 1.0) > kWeightTol)
        throw std::invalid_argument("grid weights must sum to 1 within 1e-12");

    if (ids.empty()) {
        ids.reserve(weights.size());
        for (std::size_t i = 0; i < weights.size(); ++i) ids.push_back(std::to_string(i));
    }
    if (ids.size() != weights.size())
        throw std::invalid_argument("ids and weights must have equal length");
    std::unordered_set<std::string> seen(ids.begin(), ids.end());
    if (seen.size() != ids.size())
        throw std::invalid_argument("grid point ids must be pairwise distinct");
    if (!coords.empty() && coords.size() != weights.size())
        throw std::invalid_argument("coords, when present, must cover every point");

    WeightedGrid g;
    g.ids = std::move(ids);
    g.weights = std::move(weights);
    g.coords = std::move(coords);
    return g;
}

WeightedGrid WeightedGrid::uniform(std::size_t n) {
    return make(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

bool operator==(const WeightedGrid& a, const WeightedGrid& b) {
    return a.ids == b.ids && a.weights == b.weights && a.coords == b.coords;
}

namespace {

void check_square_symmetric(const Eigen::MatrixXd& k, std::size_t n) {
    if (k.rows() != k.cols())
        throw std::invalid_argument("kernel must be square");
    if (static_cast<std::size_t>(k.rows()) != n)
        throw std::invalid_argument("kernel dimension must equal grid size");
    for (Eigen::Index i = 0; i < k.rows(); ++i)
        for (Eigen::Index j = i + 1; j < k.cols(); ++j)
            if (k(i, j) != k(j, i))
                throw std::invalid_argument("kernel must be exactly symmetric");
}

}  // namespace

Graphon make_graphon(WeightedGrid grid, Eigen::MatrixXd kernel) {
    grid = WeightedGrid::make(std::move(grid.weights), std::move(grid.ids), std::move(grid.coords));
    check_square_symmetric(kernel, grid.size());
    for (Eigen::Index i = 0; i < kernel.rows(); ++i)
        for (Eigen::Index j = 0; j < kernel.cols(); ++j)
            if (!(kernel(i, j) >= 0.0 && kernel(i, j) <= 1.0))
                throw std::invalid_argument("graphon kernel entries must lie in [0,1]");
    return Graphon{std::move(grid), std::move(kernel), false};
}

Graphon make_signed_graphon(WeightedGrid grid, Eigen::MatrixXd kernel) {
    grid = WeightedGrid::make(std::move(grid.weights), std::move(grid.ids), std::move(grid.coords));
    check_square_symmetric(kernel, grid.size());
    if (!kernel.allFinite())
        throw std::invalid_argument("signed kernel entries must be finite");
    return Graphon{std::move(grid), std::move(kernel), true};
}

Graphon metric_graphon(int n, const IndexMetric& metric, std::vector<double> weights,
                       std::vector<std::vector<double>> coords) {
    if (n <= 0) throw std::invalid_argument("metric_graphon: need at least one point");
    Eigen::MatrixXd k = Eigen::MatrixXd::Zero(n, n);
    double d_max = 0.0;
    for (int i = 0; i < n; ++i) {
        if (metric(i, i) != 0.0)
            throw std::invalid_argument("metric must vanish on the diagonal");
        for (int j = i + 1; j < n; ++j) {
            double d = metric(i, j);
            if (!(d >= 0.0) || !std::isfinite(d))
                throw std::invalid_argument("metric distances must be nonnegative finite");
            if (metric(j, i) != d)
                throw std::invalid_argument("metric must be symmetric");
            k(i, j) = k(j, i) = d;
            d_max = std::max(d_max, d);
        }
    }
    if (d_max > 0.0) k /= d_max;  // land in [0,1]; skip when all distances vanish
    return make_graphon(WeightedGrid::make(std::move(weights), {}, std::move(coords)),
                        std::move(k));
}

Graphon metric_graphon(const std::vector<std::vector<double>>& points,
                       std::vector<double> weights) {
    auto euclid = [&points](int i, int j) {
        double s = 0.0;
        for (std::size_t d = 0; d < points[i].size(); ++d) {
            double diff = points[i][d] - points[j][d];
            s += diff * diff;
        }
        return std::sqrt(s);
    };
    return metric_graphon(static_cast<int>(points.size()), euclid, std::move(weights), points);
}

Graphon constant_graphon(int n, double c) {
    if (n < 1) throw std::invalid_argument("constant_graphon: n must be >= 1");
    if (!(c >= 0.0 && c <= 1.0))
        throw std::invalid_argument("constant_graphon: c must lie in [0,1]");
    return make_graphon(WeightedGrid::uniform(static_cast<std::size_t>(n)),
                        Eigen::MatrixXd::Constant(n, n, c));
}

SimpleGraph sample_graph(const Graphon& g, int n, std::uint64_t seed,
                         std::vector<int>& point_of_vertex) {
    if (g.is_signed)
        throw std::invalid_argument("sample_graph: kernel must be [0,1]-valued");
    if (n < 0) throw std::invalid_argument("sample_graph: n must be nonnegative");
    Rng rng(seed);
    point_of_vertex.resize(n);
    for (int v = 0; v < n; ++v) point_of_vertex[v] = rng.discrete(g.grid.weights);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            double p = g.kernel(point_of_vertex[u], point_of_vertex[v]);
            if (rng.uniform01() < p) edges.emplace_back(u, v);
        }
    return SimpleGraph::make(n, std::move(edges));
}

SimpleGraph sample_graph(const Graphon& g, int n, std::uint64_t seed) {
    std::vector<int> unused;
    return sample_graph(g, n, seed, unused);
}

}  // namespace glab
