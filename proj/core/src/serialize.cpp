#include "graphonlab/serialize.hpp"

#include <charconv>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace glab {

using nlohmann::json;

std::string format_double(double x) {
    char buf[40];
    auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

json graphon_to_json(const Graphon& g) {
    json j;
    j["weights"] = g.grid.weights;
    json rows = json::array();
    for (Eigen::Index i = 0; i < g.kernel.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index k = 0; k < g.kernel.cols(); ++k) row.push_back(g.kernel(i, k));
        rows.push_back(std::move(row));
    }
    j["kernel"] = std::move(rows);
    j["signed"] = g.is_signed;
    if (!g.grid.coords.empty()) j["coords"] = g.grid.coords;
    return j;
}

Graphon graphon_from_json(const json& j) {
    std::vector<double> weights = j.at("weights").get<std::vector<double>>();
    const auto& rows = j.at("kernel");
    const Eigen::Index n = static_cast<Eigen::Index>(rows.size());
    Eigen::MatrixXd kernel(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const auto& row = rows.at(i);
        if (static_cast<Eigen::Index>(row.size()) != n)
            throw std::invalid_argument("graphon_from_json: kernel must be square");
        for (Eigen::Index k = 0; k < n; ++k) kernel(i, k) = row.at(k).get<double>();
    }
    std::vector<std::vector<double>> coords;
    if (j.contains("coords")) coords = j.at("coords").get<std::vector<std::vector<double>>>();
    WeightedGrid grid = WeightedGrid::make(std::move(weights), {}, std::move(coords));
    bool is_signed = j.value("signed", false);
    return is_signed ? make_signed_graphon(std::move(grid), std::move(kernel))
                     : make_graphon(std::move(grid), std::move(kernel));
}

json group_to_json(const GroupModel& G) {
    json j;
    j["kind"] = G.kind;
    if (G.kind == "cyclic") {
        j["N"] = G.params[0];
    } else if (G.kind == "torus") {
        j["k"] = G.params[0];
        j["N"] = G.params[1];
    } else if (G.kind == "table") {
        j["table"] = G.table;
    } else {
        throw std::invalid_argument("group_to_json: unknown kind " + G.kind);
    }
    return j;
}

GroupModel group_from_json(const json& j) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "cyclic") return cyclic_group(j.at("N").get<int>());
    if (kind == "torus") return torus_group(j.at("k").get<int>(), j.at("N").get<int>());
    if (kind == "table") return table_group(j.at("table").get<std::vector<std::vector<int>>>());
    throw std::invalid_argument("group_from_json: unknown kind " + kind);
}

json morphism_to_json(const GroupMorphism& phi) {
    json j;
    j["source"] = group_to_json(phi.source);
    j["target"] = group_to_json(phi.target);
    j["map"] = phi.map;
    return j;
}

GroupMorphism morphism_from_json(const json& j) {
    return make_morphism(group_from_json(j.at("source")), group_from_json(j.at("target")),
                         j.at("map").get<std::vector<int>>());
}

json permutation_group_to_json(const PermutationGroup& P) {
    json j;
    j["order"] = P.order();
    j["generators"] = P.generators();
    return j;
}

json purity_to_json(const PurityReport& r) {
    return json{{"separated", r.separated},
                {"min_rw", r.min_off_diag_rw},
                {"full_support", r.full_support}};
}

json graphing_to_json(const FiniteGraphing& g) {
    json edges = json::array();
    for (const auto& [u, v] : g.edges) edges.push_back(json::array({u, v}));
    return json{{"weights", g.grid.weights}, {"edges", std::move(edges)}, {"D", g.degree_bound}};
}

FiniteGraphing graphing_from_json(const json& j) {
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    return make_graphing(WeightedGrid::make(j.at("weights").get<std::vector<double>>()),
                         std::move(edges), j.at("D").get<int>());
}

}  // namespace glab
