#include "graphonlab/graph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace glab {

SimpleGraph SimpleGraph::make(int num_vertices, std::vector<std::pair<int, int>> edges) {
    if (num_vertices < 0) throw std::invalid_argument("vertex count must be nonnegative");
    std::set<std::pair<int, int>> seen;
    for (auto& [u, v] : edges) {
        if (u == v) throw std::invalid_argument("pattern graphs may not contain loops");
        if (u > v) std::swap(u, v);
        if (u < 0 || v >= num_vertices)
            throw std::invalid_argument("edge endpoint out of range");
        if (!seen.insert({u, v}).second)
            throw std::invalid_argument("duplicate edge in pattern graph");
    }
    std::sort(edges.begin(), edges.end());
    return SimpleGraph{num_vertices, std::move(edges)};
}

bool SimpleGraph::has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges.begin(), edges.end(), std::make_pair(u, v));
}

std::vector<int> SimpleGraph::degrees() const {
    std::vector<int> deg(num_vertices, 0);
    for (const auto& [u, v] : edges) {
        ++deg[u];
        ++deg[v];
    }
    return deg;
}

bool SimpleGraph::is_connected() const {
    if (num_vertices <= 1) return true;
    std::vector<std::vector<int>> adj(num_vertices);
    for (const auto& [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::vector<bool> visited(num_vertices, false);
    std::vector<int> stack{0};
    visited[0] = true;
    int count = 1;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int y : adj[x])
            if (!visited[y]) {
                visited[y] = true;
                ++count;
                stack.push_back(y);
            }
    }
    return count == num_vertices;
}

PatternGraph parse_pattern(const std::string& spec) {
    auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("pattern string must look like \"3:0-1,1-2,0-2\"");
    int n = std::stoi(spec.substr(0, colon));
    std::vector<std::pair<int, int>> edges;
    std::string rest = spec.substr(colon + 1);
    std::size_t pos = 0;
    while (pos < rest.size()) {
        auto comma = rest.find(',', pos);
        std::string tok = rest.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (!tok.empty()) {
            auto dash = tok.find('-');
            if (dash == std::string::npos)
                throw std::invalid_argument("bad edge token in pattern string: " + tok);
            edges.emplace_back(std::stoi(tok.substr(0, dash)), std::stoi(tok.substr(dash + 1)));
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return SimpleGraph::make(n, std::move(edges));
}

namespace patterns {

PatternGraph edge() { return SimpleGraph::make(2, {{0, 1}}); }

PatternGraph path2() { return SimpleGraph::make(3, {{0, 1}, {1, 2}}); }

PatternGraph triangle() { return SimpleGraph::make(3, {{0, 1}, {1, 2}, {0, 2}}); }

PatternGraph cycle(int k) {
    if (k < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < k; ++i) edges.emplace_back(i, (i + 1) % k);
    return SimpleGraph::make(k, std::move(edges));
}

PatternGraph complete(int k) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) edges.emplace_back(i, j);
    return SimpleGraph::make(k, std::move(edges));
}

}  // namespace patterns

}  // namespace glab
