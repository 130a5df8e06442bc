#include "graphonlab/metrics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace glab {

double neighborhood_distance(const Graphon& g, int i, int j) {
    const int n = static_cast<int>(g.size());
    if (i < 0 || i >= n || j < 0 || j >= n)
        throw std::invalid_argument("neighborhood_distance: index out of range");
    double s = 0.0;
    for (int z = 0; z < n; ++z)
        s += g.grid.weights[z] * std::abs(g.kernel(i, z) - g.kernel(j, z));
    return s;
}

PurityReport purity_check(const Graphon& g, double tol) {
    if (tol < 0.0) throw std::invalid_argument("purity_check: tol must be nonnegative");
    const int n = static_cast<int>(g.size());
    double min_rw = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            min_rw = std::min(min_rw, neighborhood_distance(g, i, j));
    bool full_support = true;
    for (double w : g.grid.weights)
        if (w <= 0.0) full_support = false;
    return PurityReport{min_rw > tol, min_rw, full_support};
}

namespace {

double directed_hausdorff(const std::vector<int>& A, const std::vector<int>& B,
                          const IndexMetric& d) {
    double worst = 0.0;
    for (int a : A) {
        double best = std::numeric_limits<double>::infinity();
        for (int b : B) best = std::min(best, d(a, b));
        worst = std::max(worst, best);
    }
    return worst;
}

}  // namespace

double hausdorff_distance(const std::vector<int>& A, const std::vector<int>& B,
                          const IndexMetric& d) {
    if (A.empty() || B.empty())
        throw std::invalid_argument("hausdorff_distance: sets must be nonempty");
    return std::max(directed_hausdorff(A, B, d), directed_hausdorff(B, A, d));
}

std::vector<double> image_convergence(const std::vector<GroupMorphism>& morphisms,
                                      const GroupModel& target) {
    std::vector<int> carrier(target.order);
    for (int i = 0; i < target.order; ++i) carrier[i] = i;
    std::vector<double> out;
    out.reserve(morphisms.size());
    for (const auto& phi : morphisms) {
        if (phi.target.order != target.order || phi.target.kind != target.kind ||
            phi.target.params != target.params)
            throw std::invalid_argument("image_convergence: morphism target mismatch");
        out.push_back(hausdorff_distance(phi.image(), carrier, target.metric));
    }
    return out;
}

}  // namespace glab
