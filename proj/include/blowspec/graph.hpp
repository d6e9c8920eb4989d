#pragma once

#include <random>
#include <utility>
#include <vector>

namespace blowspec {

/// Undirected simple graph. Vertices are 0-indexed; edges are stored
/// normalized (u < v), sorted, without duplicates. Immutable after
/// construction, so values can be shared freely across threads.
class Graph {
public:
    using Edge = std::pair<int, int>;

    explicit Graph(int n);
    Graph(int n, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& degrees() const { return degrees_; }
    int degree(int v) const;
    bool has_edge(int u, int v) const;

    bool operator==(const Graph& other) const = default;

private:
    int n_ = 1;
    std::vector<Edge> edges_;
    std::vector<int> degrees_;
};

struct BlowUpParams {
    int t = 1;
};

Graph complement(const Graph& g);

/// Replace every vertex by t independent copies and every edge by a complete
/// bipartite graph between the copy sets. Copy k of original vertex v gets
/// index k*n + v (copy-major order), so copies of the same vertex sit n apart.
Graph blow_up(const Graph& g, const BlowUpParams& params);

inline Graph blow_up(const Graph& g, int t) { return blow_up(g, BlowUpParams{t}); }

/// Erdos-Renyi G(n, p). Consumes one raw 32-bit draw per vertex pair, so the
/// result is deterministic for a fixed engine state on every platform.
Graph random_gnp(int n, double p, std::mt19937& rng);

}  // namespace blowspec
