#pragma once

#include <span>
#include <string>
#include <vector>

#include "blowspec/matrices.hpp"

namespace blowspec {

/// Default tolerance for spectrum comparison and eigenpair verification.
inline constexpr double kDefaultTolerance = 1e-8;

/// Default relative off-diagonal target for the Jacobi sweep.
inline constexpr double kJacobiTolerance = 1e-12;

inline constexpr int kMaxJacobiSweeps = 100;

/// Multiset of real eigenvalues, kept sorted non-increasing.
class Spectrum {
public:
    Spectrum() = default;
    explicit Spectrum(std::vector<double> values);

    std::size_t size() const { return values_.size(); }
    double operator[](std::size_t i) const { return values_[i]; }
    const std::vector<double>& values() const { return values_; }
    double sum() const;

    bool operator==(const Spectrum& other) const = default;

private:
    std::vector<double> values_;
};

struct EigenPair {
    double value = 0.0;
    std::vector<double> vector;
};

/// Full eigendecomposition: pairs sorted by value non-increasing, vectors
/// orthonormal, ties left in solver order.
struct EigenBasis {
    int dim = 0;
    std::vector<EigenPair> pairs;

    Spectrum spectrum() const;
};

struct ComparisonResult {
    bool equal = false;
    double max_deviation = 0.0;
    std::string reason;  // empty when equal
};

/// Cyclic Jacobi eigensolver. Sweeps all (p,q) pairs, rotating each to zero,
/// until the off-diagonal Frobenius norm drops to tol * (initial Frobenius
/// norm + 1). Throws std::runtime_error if that takes more than
/// kMaxJacobiSweeps sweeps and std::invalid_argument if tol <= 0.
EigenBasis eig_symmetric(const SymMatrix& m, double tol = kJacobiTolerance);

/// Scaled residual max|M v - lambda v| / max(1, max|v_i|).
double eigenpair_residual(const SymMatrix& m, std::span<const double> v, double lambda);

bool verify_eigenpair(const SymMatrix& m, std::span<const double> v, double lambda, double tol);

/// Multiset comparison under tolerance: equal iff both spectra have the same
/// cardinality and sorted values match pairwise within tol.
ComparisonResult compare_spectra(const Spectrum& a, const Spectrum& b, double tol);

}  // namespace blowspec
