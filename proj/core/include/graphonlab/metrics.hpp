#pragma once

#include <vector>

#include "graphonlab/graphon.hpp"
#include "graphonlab/group.hpp"

namespace glab {

/// Neighborhood distance r_W(i,j) = sum_z weight[z] * |K[i][z] - K[j][z]|.
double neighborhood_distance(const Graphon& g, int i, int j);

struct PurityReport {
    bool separated;
    double min_off_diag_rw;  // +inf on a 1-point grid
    bool full_support;

    bool pure_at_scale() const { return separated && full_support; }
};

/// Finite grids are complete under r_W, so purity at this scale reduces to
/// separation (min off-diagonal r_W above tol) plus full support.
PurityReport purity_check(const Graphon& g, double tol = 1e-9);

/// Hausdorff distance between two nonempty index sets under a metric:
/// max of the two directed sup-inf distances.
double hausdorff_distance(const std::vector<int>& A, const std::vector<int>& B,
                          const IndexMetric& d);

/// For each morphism into the common target, the Hausdorff distance between
/// its image and the full target carrier, under the target metric.
std::vector<double> image_convergence(const std::vector<GroupMorphism>& morphisms,
                                      const GroupModel& target);

}  // namespace glab
