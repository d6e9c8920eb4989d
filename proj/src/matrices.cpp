#include "blowspec/matrices.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>
#include <string>

namespace blowspec {

SymMatrix::SymMatrix(int dim) : dim_(dim) {
    if (dim < 1) {
        throw std::invalid_argument("matrix order must be at least 1, got " + std::to_string(dim));
    }
    entries_.assign(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim), 0.0);
}

SymMatrix SymMatrix::identity(int dim) {
    SymMatrix m(dim);
    for (int i = 0; i < dim; ++i) {
        m.set_sym(i, i, 1.0);
    }
    return m;
}

SymMatrix SymMatrix::ones(int dim) {
    SymMatrix m(dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = i; j < dim; ++j) {
            m.set_sym(i, j, 1.0);
        }
    }
    return m;
}

void SymMatrix::set_sym(int i, int j, double value) {
    assert(i >= 0 && i < dim_ && j >= 0 && j < dim_);
    entries_[index(i, j)] = value;
    entries_[index(j, i)] = value;
}

double SymMatrix::trace() const {
    double sum = 0.0;
    for (int i = 0; i < dim_; ++i) {
        sum += (*this)(i, i);
    }
    return sum;
}

double SymMatrix::frobenius_norm() const {
    double sum = 0.0;
    for (const double x : entries_) {
        sum += x * x;
    }
    return std::sqrt(sum);
}

std::vector<double> SymMatrix::apply(std::span<const double> v) const {
    if (static_cast<int>(v.size()) != dim_) {
        throw std::invalid_argument("matrix-vector dimension mismatch");
    }
    std::vector<double> out(static_cast<std::size_t>(dim_), 0.0);
    for (int i = 0; i < dim_; ++i) {
        double sum = 0.0;
        for (int j = 0; j < dim_; ++j) {
            sum += (*this)(i, j) * v[static_cast<std::size_t>(j)];
        }
        out[static_cast<std::size_t>(i)] = sum;
    }
    return out;
}

SymMatrix adjacency(const Graph& g) {
    SymMatrix m(g.vertex_count());
    for (const auto& [u, v] : g.edges()) {
        m.set_sym(u, v, 1.0);
    }
    return m;
}

SymMatrix degree_matrix(const Graph& g) {
    SymMatrix m(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
        m.set_sym(v, v, static_cast<double>(g.degree(v)));
    }
    return m;
}

SymMatrix laplacian(const Graph& g) {
    SymMatrix m = degree_matrix(g);
    for (const auto& [u, v] : g.edges()) {
        m.set_sym(u, v, -1.0);
    }
    return m;
}

SymMatrix signless_laplacian(const Graph& g) {
    SymMatrix m = degree_matrix(g);
    for (const auto& [u, v] : g.edges()) {
        m.set_sym(u, v, 1.0);
    }
    return m;
}

SymMatrix kronecker(const SymMatrix& a, const SymMatrix& b) {
    const int ad = a.dim();
    const int bd = b.dim();
    SymMatrix out(ad * bd);
    for (int i = 0; i < ad; ++i) {
        for (int j = 0; j < ad; ++j) {
            const double scale = a(i, j);
            for (int k = 0; k < bd; ++k) {
                for (int l = 0; l < bd; ++l) {
                    out.set_sym(i * bd + k, j * bd + l, scale * b(k, l));
                }
            }
        }
    }
    return out;
}

double max_abs_diff(const SymMatrix& a, const SymMatrix& b) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument("matrix dimension mismatch");
    }
    double worst = 0.0;
    for (int i = 0; i < a.dim(); ++i) {
        for (int j = 0; j < a.dim(); ++j) {
            worst = std::max(worst, std::abs(a(i, j) - b(i, j)));
        }
    }
    return worst;
}

}  // namespace blowspec
