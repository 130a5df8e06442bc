#include "graphonlab/spectral.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "graphonlab/serialize.hpp"

namespace glab {

namespace {
constexpr double kTieTol = 1e-12;

bool retained(double lambda, double r) { return std::abs(lambda) >= r - kTieTol; }
}  // namespace

Spectrum eigendecompose(const Graphon& g) {
    if (!g.kernel.allFinite())
        throw std::invalid_argument("eigendecompose: kernel entries must be finite");
    const Eigen::Index n = g.kernel.rows();
    Eigen::VectorXd sqw(n);
    for (Eigen::Index i = 0; i < n; ++i) sqw(i) = std::sqrt(g.grid.weights[i]);
    // M = D^{1/2} K D^{1/2} carries the spectrum of the kernel operator on L^2(mu).
    Eigen::MatrixXd m = sqw.asDiagonal() * g.kernel * sqw.asDiagonal();
    m = ((m + m.transpose()) / 2.0).eval();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("eigendecompose: eigensolver failed");

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    const auto& ev = solver.eigenvalues();
    std::stable_sort(order.begin(), order.end(), [&ev](int a, int b) {
        if (std::abs(ev(a)) != std::abs(ev(b))) return std::abs(ev(a)) > std::abs(ev(b));
        return ev(a) > ev(b);
    });

    Spectrum s;
    s.eigenvalues.resize(n);
    s.eigenvectors.resize(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        s.eigenvalues(i) = ev(order[i]);
        s.eigenvectors.col(i) = solver.eigenvectors().col(order[i]);
    }
    return s;
}

std::string Spectrum::to_csv() const {
    std::ostringstream out;
    out << "rank,eigenvalue\n";
    for (Eigen::Index i = 0; i < eigenvalues.size(); ++i)
        out << i << ',' << format_double(eigenvalues(i)) << '\n';
    return out.str();
}

Graphon truncate_graphon(const Graphon& g, double r) {
    if (!(r >= 0.0)) throw std::invalid_argument("truncate_graphon: r must be nonnegative");
    for (double w : g.grid.weights)
        if (w == 0.0)
            throw std::invalid_argument(
                "truncate_graphon: zero-weight points must be dropped first");

    Spectrum s = eigendecompose(g);
    const Eigen::Index n = g.kernel.rows();
    Eigen::MatrixXd kept = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        if (retained(s.eigenvalues(i), r))
            kept += s.eigenvalues(i) * s.eigenvectors.col(i) * s.eigenvectors.col(i).transpose();

    Eigen::VectorXd inv_sqw(n);
    for (Eigen::Index i = 0; i < n; ++i) inv_sqw(i) = 1.0 / std::sqrt(g.grid.weights[i]);
    Eigen::MatrixXd k = inv_sqw.asDiagonal() * kept * inv_sqw.asDiagonal();
    k = ((k + k.transpose()) / 2.0).eval();  // restore exact symmetry
    return make_signed_graphon(g.grid, std::move(k));
}

double truncation_error(const Graphon& g, double r) {
    if (!(r >= 0.0)) throw std::invalid_argument("truncation_error: r must be nonnegative");
    Spectrum s = eigendecompose(g);
    double tail = 0.0;
    for (Eigen::Index i = 0; i < s.eigenvalues.size(); ++i)
        if (!retained(s.eigenvalues(i), r)) tail += s.eigenvalues(i) * s.eigenvalues(i);
    return std::sqrt(tail);
}

TruncationInfo truncation_info(const Graphon& g, double r) {
    if (!(r >= 0.0)) throw std::invalid_argument("truncation_info: r must be nonnegative");
    Spectrum s = eigendecompose(g);
    TruncationInfo info{r, 0, 0, 0.0};
    double tail = 0.0;
    for (Eigen::Index i = 0; i < s.eigenvalues.size(); ++i) {
        double lambda = s.eigenvalues(i);
        if (std::abs(std::abs(lambda) - r) <= kTieTol) ++info.tie_count;
        if (retained(lambda, r))
            ++info.retained_count;
        else
            tail += lambda * lambda;
    }
    info.hs_error = std::sqrt(tail);
    return info;
}

Graphon clip_kernel(const Graphon& g) {
    Eigen::MatrixXd k = g.kernel.cwiseMax(0.0).cwiseMin(1.0);
    return make_graphon(g.grid, std::move(k));
}

}  // namespace glab
