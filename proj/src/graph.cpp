#include "blowspec/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace blowspec {

namespace {

Graph::Edge normalize_edge(int u, int v, int n) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
        throw std::invalid_argument("edge endpoint out of range: {" + std::to_string(u) + "," +
                                    std::to_string(v) + "} with n=" + std::to_string(n));
    }
    if (u == v) {
        throw std::invalid_argument("self-loop not allowed at vertex " + std::to_string(u));
    }
    return u < v ? Graph::Edge{u, v} : Graph::Edge{v, u};
}

}  // namespace

Graph::Graph(int n) : Graph(n, {}) {}

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
    if (n < 1) {
        throw std::invalid_argument("vertex count must be at least 1, got " + std::to_string(n));
    }
    edges_.reserve(edges.size());
    for (const auto& [u, v] : edges) {
        edges_.push_back(normalize_edge(u, v, n));
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    degrees_.assign(static_cast<std::size_t>(n_), 0);
    for (const auto& [u, v] : edges_) {
        ++degrees_[static_cast<std::size_t>(u)];
        ++degrees_[static_cast<std::size_t>(v)];
    }
}

int Graph::degree(int v) const {
    if (v < 0 || v >= n_) {
        throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
    }
    return degrees_[static_cast<std::size_t>(v)];
}

bool Graph::has_edge(int u, int v) const {
    if (u == v) {
        return false;
    }
    const Edge e = u < v ? Edge{u, v} : Edge{v, u};
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

Graph complement(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<Graph::Edge> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (!g.has_edge(u, v)) {
                edges.push_back({u, v});
            }
        }
    }
    return Graph(n, std::move(edges));
}

Graph blow_up(const Graph& g, const BlowUpParams& params) {
    const int t = params.t;
    if (t < 1) {
        throw std::invalid_argument("blow-up order must be at least 1, got " + std::to_string(t));
    }
    const int n = g.vertex_count();
    std::vector<Graph::Edge> edges;
    edges.reserve(static_cast<std::size_t>(g.edge_count()) * static_cast<std::size_t>(t) *
                  static_cast<std::size_t>(t));
    for (const auto& [u, v] : g.edges()) {
        for (int k = 0; k < t; ++k) {
            for (int l = 0; l < t; ++l) {
                edges.push_back({k * n + u, l * n + v});
            }
        }
    }
    return Graph(n * t, std::move(edges));
}

Graph random_gnp(int n, double p, std::mt19937& rng) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("random_gnp: edge probability must lie in [0, 1]");
    }
    std::vector<Graph::Edge> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            const double draw = static_cast<double>(rng()) * (1.0 / 4294967296.0);
            if (draw < p) {
                edges.push_back({u, v});
            }
        }
    }
    return Graph(n, std::move(edges));
}

}  // namespace blowspec
