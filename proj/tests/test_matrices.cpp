#include "blowspec/matrices.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "blowspec/graph.hpp"

namespace {

blowspec::Graph path3() { return blowspec::Graph(3, {{0, 1}, {1, 2}}); }

}  // namespace

TEST_CASE("adjacency matrix mirrors the edge set with a zero diagonal") {
    const blowspec::SymMatrix a = adjacency(path3());
    CHECK(a.dim() == 3);
    CHECK(a(0, 1) == 1.0);
    CHECK(a(1, 0) == 1.0);
    CHECK(a(1, 2) == 1.0);
    CHECK(a(0, 2) == 0.0);
    CHECK(a(0, 0) == 0.0);
    CHECK(a.trace() == 0.0);
}

TEST_CASE("laplacian and signless laplacian combine degrees and adjacency") {
    const blowspec::Graph g = path3();
    const blowspec::SymMatrix a = adjacency(g);
    const blowspec::SymMatrix d = degree_matrix(g);
    const blowspec::SymMatrix l = laplacian(g);
    const blowspec::SymMatrix q = signless_laplacian(g);
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            CHECK(l(i, j) == d(i, j) - a(i, j));
            CHECK(q(i, j) == d(i, j) + a(i, j));
        }
    }
    CHECK(l.trace() == 2.0 * g.edge_count());

    // Every Laplacian row sums to zero; every signless row to twice the degree.
    for (int i = 0; i < 3; ++i) {
        double lsum = 0.0;
        double qsum = 0.0;
        for (int j = 0; j < 3; ++j) {
            lsum += l(i, j);
            qsum += q(i, j);
        }
        CHECK(lsum == 0.0);
        CHECK(qsum == 2.0 * g.degree(i));
    }
}

TEST_CASE("set_sym writes both triangles so matrices stay exactly symmetric") {
    blowspec::SymMatrix m(3);
    m.set_sym(0, 2, 1.5);
    CHECK(m(0, 2) == 1.5);
    CHECK(m(2, 0) == 1.5);
    CHECK(m(1, 1) == 0.0);
    CHECK_THROWS_AS(blowspec::SymMatrix(0), std::invalid_argument);
}

TEST_CASE("identity and all-ones builders") {
    const blowspec::SymMatrix id = blowspec::SymMatrix::identity(3);
    const blowspec::SymMatrix ones = blowspec::SymMatrix::ones(2);
    CHECK(id(0, 0) == 1.0);
    CHECK(id(0, 1) == 0.0);
    CHECK(id.trace() == 3.0);
    CHECK(ones(0, 0) == 1.0);
    CHECK(ones(0, 1) == 1.0);
    CHECK(ones.frobenius_norm() == 2.0);
}

TEST_CASE("apply multiplies matrix by vector") {
    const blowspec::SymMatrix l = laplacian(path3());
    const std::vector<double> x{1.0, 2.0, 3.0};
    const std::vector<double> lx = l.apply(x);
    CHECK(lx == std::vector<double>{-1.0, 0.0, 1.0});
    const std::vector<double> wrong{1.0, 2.0};
    CHECK_THROWS_AS(l.apply(wrong), std::invalid_argument);
}

TEST_CASE("blow-up adjacency equals the Kronecker product of all-ones with the base adjacency") {
    std::mt19937 rng(7201);
    for (int round = 0; round < 12; ++round) {
        const int n = 2 + round % 5;
        const blowspec::Graph g = blowspec::random_gnp(n, 0.5, rng);
        for (int t = 1; t <= 3; ++t) {
            const blowspec::SymMatrix direct = adjacency(blow_up(g, t));
            const blowspec::SymMatrix product =
                kronecker(blowspec::SymMatrix::ones(t), adjacency(g));
            REQUIRE(blowspec::max_abs_diff(direct, product) == 0.0);
        }
    }
}

TEST_CASE("the two Kronecker orderings are permutation-similar via interleaving") {
    // Copy k of vertex v sits at k*n+v; sending it to v*t+k turns the
    // blow-up adjacency into the vertex-major product A (x) J_t.
    std::mt19937 rng(7202);
    for (int round = 0; round < 8; ++round) {
        const int n = 2 + round % 5;
        const blowspec::Graph g = blowspec::random_gnp(n, 0.5, rng);
        for (int t = 1; t <= 3; ++t) {
            const blowspec::SymMatrix blown = adjacency(blow_up(g, t));
            const blowspec::SymMatrix vertex_major =
                kronecker(adjacency(g), blowspec::SymMatrix::ones(t));
            const auto pi = [n, t](int index) { return (index % n) * t + index / n; };
            for (int i = 0; i < n * t; ++i) {
                for (int j = 0; j < n * t; ++j) {
                    REQUIRE(blown(i, j) == vertex_major(pi(i), pi(j)));
                }
            }
        }
    }
}

TEST_CASE("degree matrix is diagonal in vertex order") {
    const blowspec::Graph star(4, {{0, 1}, {0, 2}, {0, 3}});
    const blowspec::SymMatrix d = degree_matrix(star);
    CHECK(d(0, 0) == 3.0);
    CHECK(d(1, 1) == 1.0);
    CHECK(d(2, 2) == 1.0);
    CHECK(d(3, 3) == 1.0);
    CHECK(d(0, 1) == 0.0);
}

TEST_CASE("kronecker product multiplies blockwise") {
    blowspec::SymMatrix a(2);
    a.set_sym(0, 0, 2.0);
    a.set_sym(0, 1, 3.0);
    a.set_sym(1, 1, -1.0);
    const blowspec::SymMatrix k = kronecker(a, blowspec::SymMatrix::identity(2));
    CHECK(k.dim() == 4);
    CHECK(k(0, 0) == 2.0);
    CHECK(k(1, 1) == 2.0);
    CHECK(k(0, 2) == 3.0);
    CHECK(k(0, 3) == 0.0);
    CHECK(k(2, 2) == -1.0);

    const blowspec::SymMatrix id4 =
        kronecker(blowspec::SymMatrix::identity(2), blowspec::SymMatrix::identity(2));
    CHECK(blowspec::max_abs_diff(id4, blowspec::SymMatrix::identity(4)) == 0.0);
    CHECK(blowspec::max_abs_diff(kronecker(blowspec::SymMatrix::ones(1), a), a) == 0.0);
}

TEST_CASE("max_abs_diff reports the largest entrywise gap") {
    blowspec::SymMatrix a(2);
    blowspec::SymMatrix b(2);
    b.set_sym(0, 1, 0.25);
    CHECK(blowspec::max_abs_diff(a, b) == 0.25);
    CHECK_THROWS_AS(blowspec::max_abs_diff(a, blowspec::SymMatrix(3)), std::invalid_argument);
}
