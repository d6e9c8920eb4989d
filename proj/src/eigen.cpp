#include "blowspec/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace blowspec {

Spectrum::Spectrum(std::vector<double> values) : values_(std::move(values)) {
    std::sort(values_.begin(), values_.end(), std::greater<>());
}

double Spectrum::sum() const {
    return std::accumulate(values_.begin(), values_.end(), 0.0);
}

Spectrum EigenBasis::spectrum() const {
    std::vector<double> values;
    values.reserve(pairs.size());
    for (const auto& pair : pairs) {
        values.push_back(pair.value);
    }
    return Spectrum(std::move(values));
}

namespace {

double off_diagonal_norm(const std::vector<double>& a, int dim) {
    double sum = 0.0;
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            if (i != j) {
                const double x = a[static_cast<std::size_t>(i) * dim + j];
                sum += x * x;
            }
        }
    }
    return std::sqrt(sum);
}

}  // namespace

EigenBasis eig_symmetric(const SymMatrix& m, double tol) {
    if (tol <= 0.0) {
        throw std::invalid_argument("eig_symmetric: tolerance must be positive");
    }
    const int dim = m.dim();
    std::vector<double> a(static_cast<std::size_t>(dim) * dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            a[static_cast<std::size_t>(i) * dim + j] = m(i, j);
        }
    }
    std::vector<double> vec(static_cast<std::size_t>(dim) * dim, 0.0);
    for (int i = 0; i < dim; ++i) {
        vec[static_cast<std::size_t>(i) * dim + i] = 1.0;
    }

    const double threshold = tol * (m.frobenius_norm() + 1.0);
    auto at = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * dim + j]; };

    int sweep = 0;
    while (off_diagonal_norm(a, dim) > threshold) {
        if (sweep == kMaxJacobiSweeps) {
            std::ostringstream msg;
            msg << "cyclic Jacobi did not converge after " << kMaxJacobiSweeps
                << " sweeps (off-diagonal norm " << off_diagonal_norm(a, dim) << ", threshold "
                << threshold << ")";
            throw std::runtime_error(msg.str());
        }
        for (int p = 0; p < dim - 1; ++p) {
            for (int q = p + 1; q < dim; ++q) {
                const double apq = at(p, q);
                if (apq == 0.0) {
                    continue;
                }
                // Smaller root of x^2 + 2*tau*x - 1 = 0; the guarded branch
                // avoids overflow in tau*tau when apq is tiny.
                const double tau = (at(q, q) - at(p, p)) / (2.0 * apq);
                double tangent;
                if (std::abs(tau) > 1e150) {
                    tangent = 0.5 / tau;
                } else {
                    tangent = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                }
                const double c = 1.0 / std::sqrt(1.0 + tangent * tangent);
                const double s = tangent * c;

                at(p, p) -= tangent * apq;
                at(q, q) += tangent * apq;
                at(p, q) = 0.0;
                at(q, p) = 0.0;
                for (int i = 0; i < dim; ++i) {
                    if (i == p || i == q) {
                        continue;
                    }
                    const double aip = at(i, p);
                    const double aiq = at(i, q);
                    at(i, p) = c * aip - s * aiq;
                    at(p, i) = at(i, p);
                    at(i, q) = s * aip + c * aiq;
                    at(q, i) = at(i, q);
                }
                for (int i = 0; i < dim; ++i) {
                    const double vip = vec[static_cast<std::size_t>(i) * dim + p];
                    const double viq = vec[static_cast<std::size_t>(i) * dim + q];
                    vec[static_cast<std::size_t>(i) * dim + p] = c * vip - s * viq;
                    vec[static_cast<std::size_t>(i) * dim + q] = s * vip + c * viq;
                }
            }
        }
        ++sweep;
    }

    std::vector<int> order(static_cast<std::size_t>(dim));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int lhs, int rhs) { return at(lhs, lhs) > at(rhs, rhs); });

    EigenBasis basis;
    basis.dim = dim;
    basis.pairs.reserve(static_cast<std::size_t>(dim));
    for (const int col : order) {
        EigenPair pair;
        pair.value = at(col, col);
        pair.vector.resize(static_cast<std::size_t>(dim));
        for (int i = 0; i < dim; ++i) {
            pair.vector[static_cast<std::size_t>(i)] = vec[static_cast<std::size_t>(i) * dim + col];
        }
        basis.pairs.push_back(std::move(pair));
    }
    return basis;
}

double eigenpair_residual(const SymMatrix& m, std::span<const double> v, double lambda) {
    if (static_cast<int>(v.size()) != m.dim()) {
        throw std::invalid_argument("eigenpair_residual: dimension mismatch");
    }
    double vmax = 0.0;
    for (const double x : v) {
        vmax = std::max(vmax, std::abs(x));
    }
    if (vmax == 0.0) {
        throw std::invalid_argument("eigenpair_residual: zero vector");
    }
    const std::vector<double> mv = m.apply(v);
    double rmax = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        rmax = std::max(rmax, std::abs(mv[i] - lambda * v[i]));
    }
    return rmax / std::max(1.0, vmax);
}

bool verify_eigenpair(const SymMatrix& m, std::span<const double> v, double lambda, double tol) {
    return eigenpair_residual(m, v, lambda) <= tol;
}

ComparisonResult compare_spectra(const Spectrum& a, const Spectrum& b, double tol) {
    ComparisonResult result;
    if (a.size() != b.size()) {
        result.equal = false;
        result.max_deviation = 0.0;
        result.reason = "size mismatch: " + std::to_string(a.size()) + " vs " + std::to_string(b.size());
        return result;
    }
    double deviation = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        deviation = std::max(deviation, std::abs(a[i] - b[i]));
    }
    result.max_deviation = deviation;
    result.equal = deviation <= tol;
    if (!result.equal) {
        std::ostringstream msg;
        msg << "max deviation " << deviation << " exceeds tolerance " << tol;
        result.reason = msg.str();
    }
    return result;
}

}  // namespace blowspec
