#pragma once

#include <span>
#include <vector>

#include "blowspec/eigen.hpp"

namespace blowspec {

struct BulkValue {
    double value = 0.0;
    int multiplicity = 0;
};

/// Closed-form spectrum of a blow-up: n transformed base eigenvalues plus
/// degree-driven bulk values with multiplicities summing to n*(t-1).
/// Flattening yields the full multiset of n*t eigenvalues.
class FormulaSpectrum {
public:
    FormulaSpectrum(std::vector<double> base_part, std::vector<BulkValue> bulk_part);

    const std::vector<double>& base_part() const { return base_part_; }
    const std::vector<BulkValue>& bulk_part() const { return bulk_part_; }
    std::size_t total_count() const;
    Spectrum flatten() const;

private:
    std::vector<double> base_part_;
    std::vector<BulkValue> bulk_part_;
};

/// Adjacency spectrum of the blow-up of order t: {t*lambda_i} plus n(t-1) zeros.
FormulaSpectrum blowup_adjacency_spectrum(const Spectrum& base, int n, int t);

/// Adjacency spectrum of the complement of the blow-up:
/// {t*lambda_i(complement) + t - 1} plus n(t-1) values -1.
FormulaSpectrum blowup_adjacency_complement_spectrum(const Spectrum& base_complement, int n, int t);

/// Laplacian spectrum of the blow-up: {t*mu_i} plus t*d_v with multiplicity
/// t-1 for every vertex v.
FormulaSpectrum blowup_laplacian_spectrum(const Spectrum& base_mu, const std::vector<int>& degrees,
                                          int t);

/// Signless Laplacian spectrum of the blow-up: {t*q_i} plus t*d_v with
/// multiplicity t-1 per vertex.
FormulaSpectrum blowup_signless_spectrum(const Spectrum& base_q, const std::vector<int>& degrees,
                                         int t);

/// Signless Laplacian spectrum of the complement of the blow-up:
/// {t*q_i(complement) + 2(t-1)} plus t*n - t*d_v - 2 with multiplicity t-1
/// per vertex (degrees are those of the base graph itself).
FormulaSpectrum blowup_complement_signless_spectrum(const Spectrum& base_qbar,
                                                    const std::vector<int>& degrees, int n, int t);

/// Laplacian spectrum of the complement of the blow-up, derived from the
/// Laplacian spectrum of the blow-up itself: drop one zero, map the rest
/// through mu -> n*t - mu, and put the zero of the all-ones kernel back.
/// Throws std::invalid_argument if no value lies within tol of zero.
Spectrum blowup_complement_laplacian_spectrum(const Spectrum& blowup_mu, int n, int t,
                                              double tol = kDefaultTolerance);

/// t consecutive copies of x (copy-major order). Stacking an eigenvector of
/// L(G), Q(G), or Q(complement G) yields an eigenvector of the corresponding
/// blow-up matrix.
std::vector<double> stacked_eigenvector(std::span<const double> x, int t);

/// +1 on copy k-1 of vertex i, -1 on copy k, zero elsewhere; k runs 1..t-1.
/// Eigenvector of L and Q of the blow-up for t*d_i, and of Q of the blow-up's
/// complement for t*n - 2 - t*d_i.
std::vector<double> difference_eigenvector(int i, int k, int n, int t);

}  // namespace blowspec
