#include "blowspec/graph.hpp"

#include <random>
#include <stdexcept>

#include "doctest.h"

namespace {

blowspec::Graph path3() { return blowspec::Graph(3, {{0, 1}, {1, 2}}); }

}  // namespace

TEST_CASE("graphs normalize, deduplicate, and validate their edges") {
    const blowspec::Graph g(4, {{2, 0}, {0, 2}, {3, 1}, {1, 3}});
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 2);
    CHECK(g.has_edge(0, 2));
    CHECK(g.has_edge(2, 0));
    CHECK(g.has_edge(1, 3));
    CHECK_FALSE(g.has_edge(0, 1));

    CHECK_THROWS_AS(blowspec::Graph(0), std::invalid_argument);
    CHECK_THROWS_AS(blowspec::Graph(2, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(blowspec::Graph(2, {{0, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(blowspec::Graph(2, {{-1, 0}}), std::invalid_argument);
}

TEST_CASE("degrees count incident edges per vertex") {
    const blowspec::Graph g = path3();
    CHECK(g.degrees() == std::vector<int>{1, 2, 1});
    CHECK(g.degree(1) == 2);
    CHECK_THROWS_AS(g.degree(3), std::out_of_range);
    CHECK_THROWS_AS(g.degree(-1), std::out_of_range);
}

TEST_CASE("complement swaps edges and non-edges") {
    const blowspec::Graph p3bar = complement(path3());
    CHECK(p3bar.edge_count() == 1);
    CHECK(p3bar.has_edge(0, 2));

    const blowspec::Graph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    CHECK(complement(k4).edge_count() == 0);
    CHECK(complement(complement(k4)) == k4);

    const blowspec::Graph lone(1);
    CHECK(complement(lone) == lone);

    // Complement degrees mirror the originals.
    std::mt19937 rng(7103);
    const blowspec::Graph g = blowspec::random_gnp(7, 0.4, rng);
    const blowspec::Graph gbar = complement(g);
    for (int v = 0; v < 7; ++v) {
        CHECK(gbar.degree(v) == 6 - g.degree(v));
    }
    CHECK(complement(complement(g)) == g);
}

TEST_CASE("blow-up of an edge is the complete bipartite graph between copy sets") {
    const blowspec::Graph k2(2, {{0, 1}});
    const blowspec::Graph c4 = blow_up(k2, 2);
    CHECK(c4.vertex_count() == 4);
    CHECK(c4.edge_count() == 4);
    // Copies of vertex 0 sit at {0, 2}, copies of vertex 1 at {1, 3}.
    CHECK(c4.has_edge(0, 1));
    CHECK(c4.has_edge(0, 3));
    CHECK(c4.has_edge(2, 1));
    CHECK(c4.has_edge(2, 3));
    CHECK_FALSE(c4.has_edge(0, 2));
    CHECK_FALSE(c4.has_edge(1, 3));
}

TEST_CASE("blow-up with one copy per vertex returns the graph itself") {
    const blowspec::Graph g = path3();
    CHECK(blow_up(g, 1) == g);
    CHECK(blow_up(g, blowspec::BlowUpParams{1}) == g);
}

TEST_CASE("blow-up rejects a non-positive copy count") {
    CHECK_THROWS_AS(blow_up(path3(), 0), std::invalid_argument);
    CHECK_THROWS_AS(blow_up(path3(), -2), std::invalid_argument);
}

TEST_CASE("blow-up counts and degrees scale with the copy count") {
    std::mt19937 rng(7101);
    for (int round = 0; round < 20; ++round) {
        const int n = 2 + round % 6;
        const blowspec::Graph g = blowspec::random_gnp(n, 0.5, rng);
        for (int t = 1; t <= 4; ++t) {
            const blowspec::Graph b = blow_up(g, t);
            REQUIRE(b.vertex_count() == n * t);
            REQUIRE(b.edge_count() == t * t * g.edge_count());
            for (int v = 0; v < n; ++v) {
                for (int k = 0; k < t; ++k) {
                    REQUIRE(b.degree(k * n + v) == t * g.degree(v));
                }
            }
            // Copies of one vertex stay mutually non-adjacent.
            for (int v = 0; v < n; ++v) {
                for (int k = 0; k < t; ++k) {
                    for (int l = k + 1; l < t; ++l) {
                        REQUIRE_FALSE(b.has_edge(k * n + v, l * n + v));
                    }
                }
            }
        }
    }
}

TEST_CASE("blow-up joins copies exactly when the base vertices are adjacent") {
    std::mt19937 rng(7102);
    const blowspec::Graph g = blowspec::random_gnp(5, 0.4, rng);
    const int t = 3;
    const blowspec::Graph b = blow_up(g, t);
    for (int u = 0; u < 5; ++u) {
        for (int v = 0; v < 5; ++v) {
            if (u == v) {
                continue;
            }
            for (int k = 0; k < t; ++k) {
                for (int l = 0; l < t; ++l) {
                    REQUIRE(b.has_edge(k * 5 + u, l * 5 + v) == g.has_edge(u, v));
                }
            }
        }
    }
}

TEST_CASE("random graphs are reproducible for a fixed seed and respect edge probability extremes") {
    std::mt19937 rng_a(42);
    std::mt19937 rng_b(42);
    for (int round = 0; round < 10; ++round) {
        CHECK(blowspec::random_gnp(6, 0.5, rng_a) == blowspec::random_gnp(6, 0.5, rng_b));
    }

    std::mt19937 rng(43);
    CHECK(blowspec::random_gnp(8, 0.0, rng).edge_count() == 0);
    CHECK(blowspec::random_gnp(8, 1.0, rng).edge_count() == 28);
    CHECK_THROWS_AS(blowspec::random_gnp(3, -0.1, rng), std::invalid_argument);
    CHECK_THROWS_AS(blowspec::random_gnp(3, 1.5, rng), std::invalid_argument);
}
