#include "sperncube/matching.hpp"

#include <limits>
#include <queue>

namespace sperncube {

namespace {

constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();

class HopcroftKarp {
public:
    explicit HopcroftKarp(const BipartiteGraph& g)
        : g_(g), dist_(g.left_size), next_edge_(g.left_size) {
        m_.left_mate.assign(g.left_size, kUnmatched);
        m_.right_mate.assign(g.right_size, kUnmatched);
    }

    Matching run() {
        while (bfs()) {
            std::fill(next_edge_.begin(), next_edge_.end(), 0);
            for (std::size_t u = 0; u < g_.left_size; ++u) {
                if (m_.left_mate[u] == kUnmatched && dfs(u)) ++m_.size;
            }
        }
        return std::move(m_);
    }

private:
    // Layers free left vertices at distance 0; returns whether some free
    // right vertex is reachable by an alternating path.
    bool bfs() {
        std::queue<std::size_t> q;
        for (std::size_t u = 0; u < g_.left_size; ++u) {
            if (m_.left_mate[u] == kUnmatched) {
                dist_[u] = 0;
                q.push(u);
            } else {
                dist_[u] = kInf;
            }
        }
        bool found = false;
        while (!q.empty()) {
            const std::size_t u = q.front();
            q.pop();
            for (std::size_t v : g_.adjacency[u]) {
                const std::size_t w = m_.right_mate[v];
                if (w == kUnmatched) {
                    found = true;
                } else if (dist_[w] == kInf) {
                    dist_[w] = dist_[u] + 1;
                    q.push(w);
                }
            }
        }
        return found;
    }

    // Iterative augmenting-path search along the BFS layering.
    bool dfs(std::size_t root) {
        std::vector<std::size_t> stack{root};
        std::vector<std::size_t> via;  // right vertex used to reach stack[i+1]
        while (!stack.empty()) {
            const std::size_t u = stack.back();
            const auto& adj = g_.adjacency[u];
            bool advanced = false;
            while (next_edge_[u] < adj.size()) {
                const std::size_t v = adj[next_edge_[u]++];
                const std::size_t w = m_.right_mate[v];
                if (w == kUnmatched) {
                    // augment along stack
                    via.push_back(v);
                    for (std::size_t i = 0; i < stack.size(); ++i) {
                        m_.left_mate[stack[i]] = via[i];
                        m_.right_mate[via[i]] = stack[i];
                    }
                    return true;
                }
                if (dist_[w] == dist_[u] + 1) {
                    via.push_back(v);
                    stack.push_back(w);
                    advanced = true;
                    break;
                }
            }
            if (!advanced) {
                dist_[u] = kInf;
                stack.pop_back();
                if (!via.empty()) via.pop_back();
            }
        }
        return false;
    }

    const BipartiteGraph& g_;
    Matching m_;
    std::vector<std::size_t> dist_;
    std::vector<std::size_t> next_edge_;
};

}  // namespace

Matching maximum_matching(const BipartiteGraph& graph) { return HopcroftKarp(graph).run(); }

VertexCover minimum_vertex_cover(const BipartiteGraph& graph, const Matching& matching) {
    // Z = vertices reachable from free left vertices by alternating paths;
    // cover = (L \ Z) u (R n Z).
    std::vector<bool> left_seen(graph.left_size, false);
    std::vector<bool> right_seen(graph.right_size, false);
    std::queue<std::size_t> q;
    for (std::size_t u = 0; u < graph.left_size; ++u) {
        if (matching.left_mate[u] == kUnmatched) {
            left_seen[u] = true;
            q.push(u);
        }
    }
    while (!q.empty()) {
        const std::size_t u = q.front();
        q.pop();
        for (std::size_t v : graph.adjacency[u]) {
            if (right_seen[v] || matching.left_mate[u] == v) continue;
            right_seen[v] = true;
            const std::size_t w = matching.right_mate[v];
            if (w != kUnmatched && !left_seen[w]) {
                left_seen[w] = true;
                q.push(w);
            }
        }
    }
    VertexCover cover;
    cover.left.resize(graph.left_size);
    cover.right = right_seen;
    for (std::size_t u = 0; u < graph.left_size; ++u) cover.left[u] = !left_seen[u];
    return cover;
}

}  // namespace sperncube
