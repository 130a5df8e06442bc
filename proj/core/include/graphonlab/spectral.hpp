#pragma once

#include <Eigen/Core>

#include "graphonlab/graphon.hpp"

namespace glab {

/// Spectrum of the kernel operator on L^2(mu). Eigenpairs are those of
/// M = D^{1/2} K D^{1/2}, D = diag(weights); eigenvalues sorted by
/// descending absolute value, eigenvectors orthonormal columns in the
/// sqrt-weight-conjugated coordinates.
struct Spectrum {
    Eigen::VectorXd eigenvalues;
    Eigen::MatrixXd eigenvectors;

    std::string to_csv() const;  // "rank,eigenvalue"
};

Spectrum eigendecompose(const Graphon& g);

/// Spectral truncation: keep eigenpairs with |lambda| >= r (ties within
/// 1e-12 of r retained), reconstruct, conjugate back by D^{-1/2}. The result
/// carries a signed kernel and is never clipped to [0,1]. Zero weights are
/// rejected (drop them via full-support cleanup first).
Graphon truncate_graphon(const Graphon& g, double r);

/// Hilbert-Schmidt norm of the discarded tail: sqrt(sum_{|lambda|<r} lambda^2).
double truncation_error(const Graphon& g, double r);

struct TruncationInfo {
    double r;
    int retained_count;
    int tie_count;     // eigenvalues with ||lambda| - r| <= 1e-12
    double hs_error;
};

TruncationInfo truncation_info(const Graphon& g, double r);

/// Optional post-processing: clamp a signed kernel into [0,1].
Graphon clip_kernel(const Graphon& g);

}  // namespace glab
