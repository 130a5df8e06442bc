#include "graphonlab/densities.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "graphonlab/rng.hpp"
#include "graphonlab/serialize.hpp"

namespace glab {

namespace {

struct ExactContext {
    const Graphon* g;
    std::vector<std::vector<int>> back_edges;  // earlier neighbors per vertex
    std::vector<int> support;                  // positive-weight grid points, ascending
    std::vector<int> assignment;
    int num_vertices;
};

// Depth-first sum over assignments; the partial product carries the weights
// and edge factors decided so far. Summation order is fixed (ascending grid
// index at every level), so results are deterministic.
double exact_sum(ExactContext& ctx, int depth, double partial) {
    if (depth == ctx.num_vertices) return partial;
    double total = 0.0;
    for (int p : ctx.support) {
        double value = partial * ctx.g->grid.weights[p];
        for (int u : ctx.back_edges[depth]) value *= ctx.g->kernel(ctx.assignment[u], p);
        if (value != 0.0) {
            ctx.assignment[depth] = p;
            total += exact_sum(ctx, depth + 1, value);
        }
    }
    return total;
}

}  // namespace

double hom_density_exact(const PatternGraph& F, const Graphon& g, const DensityOptions& opts) {
    if (!opts.override_caps && F.num_vertices > opts.max_pattern_vertices &&
        static_cast<int>(g.size()) > opts.max_grid)
        throw std::runtime_error(
            "hom_density_exact: pattern and grid both exceed caps; use hom_density_mc");

    ExactContext ctx;
    ctx.g = &g;
    ctx.num_vertices = F.num_vertices;
    ctx.back_edges.resize(F.num_vertices);
    for (const auto& [u, v] : F.edges) ctx.back_edges[v].push_back(u);
    for (int p = 0; p < static_cast<int>(g.size()); ++p)
        if (g.grid.weights[p] > 0.0) ctx.support.push_back(p);
    ctx.assignment.resize(F.num_vertices);
    return exact_sum(ctx, 0, 1.0);
}

McEstimate hom_density_mc(const PatternGraph& F, const Graphon& g, long samples,
                          std::uint64_t seed) {
    if (samples < 1) throw std::invalid_argument("hom_density_mc: need at least one sample");
    Rng rng(seed);
    std::vector<int> x(F.num_vertices);
    // Welford, so a constant integrand yields an exact mean and zero variance.
    double mean = 0.0, m2 = 0.0;
    for (long s = 0; s < samples; ++s) {
        for (int v = 0; v < F.num_vertices; ++v) x[v] = rng.discrete(g.grid.weights);
        double value = 1.0;
        for (const auto& [u, v] : F.edges) value *= g.kernel(x[u], x[v]);
        double d1 = value - mean;
        mean += d1 / static_cast<double>(s + 1);
        m2 += d1 * (value - mean);
    }
    double stderr_ = samples > 1
                         ? std::sqrt(m2 / static_cast<double>(samples - 1) /
                                     static_cast<double>(samples))
                         : 0.0;
    return McEstimate{mean, stderr_};
}

std::vector<double> density_profile(const Graphon& g, const std::vector<PatternGraph>& patterns,
                                    const DensityOptions& opts) {
    std::vector<double> out;
    out.reserve(patterns.size());
    for (const auto& F : patterns) out.push_back(hom_density_exact(F, g, opts));
    return out;
}

ConvergenceReport convergence_report(const std::vector<Graphon>& sequence,
                                     const std::vector<PatternGraph>& patterns,
                                     std::vector<std::string> pattern_names,
                                     const DensityOptions& opts) {
    if (sequence.empty())
        throw std::invalid_argument("convergence_report: need at least one graphon");
    if (pattern_names.empty())
        for (std::size_t i = 0; i < patterns.size(); ++i)
            pattern_names.push_back("F" + std::to_string(i));
    if (pattern_names.size() != patterns.size())
        throw std::invalid_argument("convergence_report: one name per pattern");

    ConvergenceReport rep;
    rep.pattern_names = std::move(pattern_names);
    for (const auto& g : sequence) rep.densities.push_back(density_profile(g, patterns, opts));
    for (std::size_t i = 1; i < rep.densities.size(); ++i) {
        std::vector<double> d(patterns.size());
        for (std::size_t p = 0; p < patterns.size(); ++p)
            d[p] = std::abs(rep.densities[i][p] - rep.densities[i - 1][p]);
        rep.deltas.push_back(std::move(d));
    }
    return rep;
}

std::string ConvergenceReport::to_csv() const {
    std::ostringstream out;
    out << "index,pattern_name,density,delta\n";
    for (std::size_t i = 0; i < densities.size(); ++i)
        for (std::size_t p = 0; p < pattern_names.size(); ++p) {
            out << i << ',' << pattern_names[p] << ',' << format_double(densities[i][p]) << ',';
            if (i > 0) out << format_double(deltas[i - 1][p]);
            out << '\n';
        }
    return out.str();
}

}  // namespace glab
