#pragma once

#include "blowspec/graph.hpp"
#include "blowspec/io.hpp"

namespace blowspec {

/// End-to-end check of one graph and blow-up order: builds the blow-up and
/// its complement, runs the Jacobi oracle on all five matrix families
/// (adjacency, adjacency of the complement, Laplacian, signless Laplacian,
/// signless Laplacian of the complement), compares each against the
/// closed-form spectrum, and verifies every stacked and difference
/// eigenvector. overall_pass requires all family comparisons to hold and the
/// worst eigenvector residual to stay within tol.
VerificationReport run_verification(const Graph& g, int t, double tol = kDefaultTolerance);

}  // namespace blowspec
