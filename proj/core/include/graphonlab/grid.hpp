#pragma once

#include <string>
#include <vector>

namespace glab {

inline constexpr double kWeightTol = 1e-12;

/// Finite weighted point grid standing in for a standard probability space.
/// Weights are nonnegative and sum to 1 within kWeightTol; ids are pairwise
/// distinct. Coordinates are optional (empty when absent).
struct WeightedGrid {
    std::vector<std::string> ids;
    std::vector<double> weights;
    std::vector<std::vector<double>> coords;

    std::size_t size() const { return weights.size(); }

    /// Validating constructor; ids default to "0","1",...
    static WeightedGrid make(std::vector<double> weights,
                             std::vector<std::string> ids = {},
                             std::vector<std::vector<double>> coords = {});

    /// Uniform grid on n points.
    static WeightedGrid uniform(std::size_t n);
};

bool operator==(const WeightedGrid& a, const WeightedGrid& b);

}  // namespace glab
