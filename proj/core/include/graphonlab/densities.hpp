#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "graphonlab/graph.hpp"
#include "graphonlab/graphon.hpp"

namespace glab {

/// Caps on the exact N^{|V(F)|} summation; either bound being satisfied is
/// enough. Set override_caps to force exact evaluation regardless.
struct DensityOptions {
    int max_pattern_vertices = 4;
    int max_grid = 256;
    bool override_caps = false;
};

/// Homomorphism density t(F, W): the weighted sum over all vertex assignments
/// V(F) -> grid of the product of kernel entries along the pattern edges.
/// Signed kernels are accepted. Throws when both caps are exceeded.
double hom_density_exact(const PatternGraph& F, const Graphon& g,
                         const DensityOptions& opts = {});

struct McEstimate {
    double estimate;
    double stderr_;
};

/// Monte Carlo estimate of t(F, W) from i.i.d. vertex assignments.
McEstimate hom_density_mc(const PatternGraph& F, const Graphon& g,
                          long samples, std::uint64_t seed);

/// hom_density_exact mapped over a pattern list.
std::vector<double> density_profile(const Graphon& g,
                                    const std::vector<PatternGraph>& patterns,
                                    const DensityOptions& opts = {});

/// Density table across a graphon sequence, with successive absolute
/// differences per pattern.
struct ConvergenceReport {
    std::vector<std::string> pattern_names;
    std::vector<std::vector<double>> densities;  // [sequence index][pattern]
    std::vector<std::vector<double>> deltas;     // [index >= 1][pattern]

    /// Long-format CSV with header "index,pattern_name,density,delta";
    /// the delta column is empty on the first row of each pattern.
    std::string to_csv() const;
};

ConvergenceReport convergence_report(const std::vector<Graphon>& sequence,
                                     const std::vector<PatternGraph>& patterns,
                                     std::vector<std::string> pattern_names = {},
                                     const DensityOptions& opts = {});

}  // namespace glab
