#pragma once

#include <span>
#include <vector>

#include "blowspec/graph.hpp"

namespace blowspec {

/// Dense real symmetric matrix. All writes go through set_sym, which stores
/// both (i,j) and (j,i), so symmetry holds exactly rather than approximately.
class SymMatrix {
public:
    explicit SymMatrix(int dim);

    static SymMatrix identity(int dim);
    static SymMatrix ones(int dim);

    int dim() const { return dim_; }
    double operator()(int i, int j) const { return entries_[index(i, j)]; }
    void set_sym(int i, int j, double value);

    double trace() const;
    double frobenius_norm() const;
    std::vector<double> apply(std::span<const double> v) const;

private:
    std::size_t index(int i, int j) const {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(j);
    }

    int dim_ = 1;
    std::vector<double> entries_;
};

SymMatrix adjacency(const Graph& g);
SymMatrix degree_matrix(const Graph& g);
SymMatrix laplacian(const Graph& g);           // D - A
SymMatrix signless_laplacian(const Graph& g);  // D + A

/// Block matrix whose (i,j) block is a(i,j) * b.
SymMatrix kronecker(const SymMatrix& a, const SymMatrix& b);

double max_abs_diff(const SymMatrix& a, const SymMatrix& b);

}  // namespace blowspec
