#pragma once

#include <string>
#include <utility>
#include <vector>

namespace glab {

/// Simple undirected graph: no loops, no duplicate edges, vertices 0..n-1.
/// Doubles as the pattern graph F in homomorphism densities t(F,W).
struct SimpleGraph {
    int num_vertices = 0;
    std::vector<std::pair<int, int>> edges;  // each stored with first < second

    static SimpleGraph make(int num_vertices, std::vector<std::pair<int, int>> edges);

    bool has_edge(int u, int v) const;
    std::vector<int> degrees() const;
    bool is_connected() const;
};

using PatternGraph = SimpleGraph;

/// Parses an edge-list string, e.g. "3:0-1,1-2,0-2" for the triangle.
/// "2:0-1" is the single edge; "k:" with no edges is the empty pattern.
PatternGraph parse_pattern(const std::string& spec);

namespace patterns {
PatternGraph edge();
PatternGraph path2();     // path on 3 vertices, 2 edges
PatternGraph triangle();
PatternGraph cycle(int k);
PatternGraph complete(int k);
}  // namespace patterns

}  // namespace glab
