#include "blowspec/blowup_spectra.hpp"

#include <cassert>
#include <cmath>
#include <cstddef>
#include <stdexcept>

namespace blowspec {

namespace {

void check_params(std::size_t base_size, int n, int t, const char* where) {
    if (n < 1) {
        throw std::invalid_argument(std::string(where) + ": vertex count must be at least 1");
    }
    if (t < 1) {
        throw std::invalid_argument(std::string(where) + ": blow-up order must be at least 1");
    }
    if (base_size != static_cast<std::size_t>(n)) {
        throw std::invalid_argument(std::string(where) + ": base spectrum has " +
                                    std::to_string(base_size) + " values, expected " +
                                    std::to_string(n));
    }
}

}  // namespace

FormulaSpectrum::FormulaSpectrum(std::vector<double> base_part, std::vector<BulkValue> bulk_part)
    : base_part_(std::move(base_part)), bulk_part_(std::move(bulk_part)) {
    for (const BulkValue& bulk : bulk_part_) {
        if (bulk.multiplicity < 0) {
            throw std::invalid_argument("FormulaSpectrum: negative multiplicity");
        }
    }
}

std::size_t FormulaSpectrum::total_count() const {
    std::size_t count = base_part_.size();
    for (const BulkValue& bulk : bulk_part_) {
        count += static_cast<std::size_t>(bulk.multiplicity);
    }
    return count;
}

Spectrum FormulaSpectrum::flatten() const {
    std::vector<double> values;
    values.reserve(total_count());
    values.insert(values.end(), base_part_.begin(), base_part_.end());
    for (const BulkValue& bulk : bulk_part_) {
        values.insert(values.end(), static_cast<std::size_t>(bulk.multiplicity), bulk.value);
    }
    return Spectrum(std::move(values));
}

FormulaSpectrum blowup_adjacency_spectrum(const Spectrum& base, int n, int t) {
    check_params(base.size(), n, t, "blowup_adjacency_spectrum");
    std::vector<double> scaled;
    scaled.reserve(base.size());
    for (std::size_t i = 0; i < base.size(); ++i) {
        scaled.push_back(t * base[i]);
    }
    std::vector<BulkValue> bulk;
    if (t > 1) {
        bulk.push_back({0.0, n * (t - 1)});
    }
    return FormulaSpectrum(std::move(scaled), std::move(bulk));
}

FormulaSpectrum blowup_adjacency_complement_spectrum(const Spectrum& base_complement, int n,
                                                     int t) {
    check_params(base_complement.size(), n, t, "blowup_adjacency_complement_spectrum");
    std::vector<double> shifted;
    shifted.reserve(base_complement.size());
    for (std::size_t i = 0; i < base_complement.size(); ++i) {
        shifted.push_back(t * base_complement[i] + (t - 1));
    }
    std::vector<BulkValue> bulk;
    if (t > 1) {
        bulk.push_back({-1.0, n * (t - 1)});
    }
    return FormulaSpectrum(std::move(shifted), std::move(bulk));
}

FormulaSpectrum blowup_laplacian_spectrum(const Spectrum& base_mu, const std::vector<int>& degrees,
                                          int t) {
    const int n = static_cast<int>(degrees.size());
    check_params(base_mu.size(), n, t, "blowup_laplacian_spectrum");
    std::vector<double> scaled;
    scaled.reserve(base_mu.size());
    for (std::size_t i = 0; i < base_mu.size(); ++i) {
        scaled.push_back(t * base_mu[i]);
    }
    std::vector<BulkValue> bulk;
    if (t > 1) {
        bulk.reserve(degrees.size());
        for (const int d : degrees) {
            bulk.push_back({static_cast<double>(t) * d, t - 1});
        }
    }
    return FormulaSpectrum(std::move(scaled), std::move(bulk));
}

FormulaSpectrum blowup_signless_spectrum(const Spectrum& base_q, const std::vector<int>& degrees,
                                         int t) {
    const int n = static_cast<int>(degrees.size());
    check_params(base_q.size(), n, t, "blowup_signless_spectrum");
    std::vector<double> scaled;
    scaled.reserve(base_q.size());
    for (std::size_t i = 0; i < base_q.size(); ++i) {
        scaled.push_back(t * base_q[i]);
    }
    std::vector<BulkValue> bulk;
    if (t > 1) {
        bulk.reserve(degrees.size());
        for (const int d : degrees) {
            bulk.push_back({static_cast<double>(t) * d, t - 1});
        }
    }
    return FormulaSpectrum(std::move(scaled), std::move(bulk));
}

FormulaSpectrum blowup_complement_signless_spectrum(const Spectrum& base_qbar,
                                                    const std::vector<int>& degrees, int n, int t) {
    if (static_cast<int>(degrees.size()) != n) {
        throw std::invalid_argument(
            "blowup_complement_signless_spectrum: degree list does not match vertex count");
    }
    check_params(base_qbar.size(), n, t, "blowup_complement_signless_spectrum");
    std::vector<double> shifted;
    shifted.reserve(base_qbar.size());
    for (std::size_t i = 0; i < base_qbar.size(); ++i) {
        shifted.push_back(t * base_qbar[i] + 2.0 * (t - 1));
    }
    std::vector<BulkValue> bulk;
    if (t > 1) {
        bulk.reserve(degrees.size());
        for (const int d : degrees) {
            const double value = static_cast<double>(t) * n - static_cast<double>(t) * d - 2.0;
            // d <= n-1 and t >= 2 force t*n - t*d - 2 >= t - 2 >= 0.
            assert(value >= 0.0);
            bulk.push_back({value, t - 1});
        }
    }
    return FormulaSpectrum(std::move(shifted), std::move(bulk));
}

Spectrum blowup_complement_laplacian_spectrum(const Spectrum& blowup_mu, int n, int t, double tol) {
    if (n < 1 || t < 1) {
        throw std::invalid_argument(
            "blowup_complement_laplacian_spectrum: vertex count and blow-up order must be at "
            "least 1");
    }
    const std::size_t nt = static_cast<std::size_t>(n) * static_cast<std::size_t>(t);
    if (blowup_mu.size() != nt) {
        throw std::invalid_argument("blowup_complement_laplacian_spectrum: expected " +
                                    std::to_string(nt) + " values, got " +
                                    std::to_string(blowup_mu.size()));
    }
    // A Laplacian always annihilates the all-ones vector; the complement's
    // spectrum keeps that zero and reflects every other value through nt.
    std::size_t zero_index = nt;
    double best = tol;
    for (std::size_t i = 0; i < nt; ++i) {
        if (std::abs(blowup_mu[i]) <= best) {
            best = std::abs(blowup_mu[i]);
            zero_index = i;
        }
    }
    if (zero_index == nt) {
        throw std::invalid_argument(
            "blowup_complement_laplacian_spectrum: no eigenvalue within tolerance of zero");
    }
    std::vector<double> values;
    values.reserve(nt);
    values.push_back(0.0);
    for (std::size_t i = 0; i < nt; ++i) {
        if (i != zero_index) {
            values.push_back(static_cast<double>(nt) - blowup_mu[i]);
        }
    }
    return Spectrum(std::move(values));
}

std::vector<double> stacked_eigenvector(std::span<const double> x, int t) {
    if (x.empty()) {
        throw std::invalid_argument("stacked_eigenvector: empty base vector");
    }
    if (t < 1) {
        throw std::invalid_argument("stacked_eigenvector: blow-up order must be at least 1");
    }
    std::vector<double> out;
    out.reserve(x.size() * static_cast<std::size_t>(t));
    for (int k = 0; k < t; ++k) {
        out.insert(out.end(), x.begin(), x.end());
    }
    return out;
}

std::vector<double> difference_eigenvector(int i, int k, int n, int t) {
    if (n < 1 || t < 2) {
        throw std::invalid_argument(
            "difference_eigenvector: need at least one vertex and blow-up order at least 2");
    }
    if (i < 0 || i >= n) {
        throw std::out_of_range("difference_eigenvector: vertex index out of range");
    }
    if (k < 1 || k >= t) {
        throw std::out_of_range("difference_eigenvector: copy index must lie in [1, t-1]");
    }
    std::vector<double> out(static_cast<std::size_t>(n) * static_cast<std::size_t>(t), 0.0);
    out[static_cast<std::size_t>(k - 1) * n + i] = 1.0;
    out[static_cast<std::size_t>(k) * n + i] = -1.0;
    return out;
}

}  // namespace blowspec
