#pragma once

#include <cstddef>
#include <vector>

namespace sperncube {

// Bipartite graph with left vertices 0..left_size-1 and right vertices
// 0..right_size-1; adjacency is stored per left vertex.
struct BipartiteGraph {
    std::size_t left_size = 0;
    std::size_t right_size = 0;
    std::vector<std::vector<std::size_t>> adjacency;

    BipartiteGraph(std::size_t left, std::size_t right)
        : left_size(left), right_size(right), adjacency(left) {}

    void add_edge(std::size_t u, std::size_t v) { adjacency[u].push_back(v); }
};

inline constexpr std::size_t kUnmatched = static_cast<std::size_t>(-1);

struct Matching {
    std::size_t size = 0;
    std::vector<std::size_t> left_mate;   // kUnmatched when free
    std::vector<std::size_t> right_mate;
};

// Hopcroft-Karp maximum cardinality matching. Deterministic for a given
// adjacency order.
Matching maximum_matching(const BipartiteGraph& graph);

// Minimum vertex cover from a maximum matching (Koenig's construction).
struct VertexCover {
    std::vector<bool> left;
    std::vector<bool> right;
};
VertexCover minimum_vertex_cover(const BipartiteGraph& graph, const Matching& matching);

}  // namespace sperncube
