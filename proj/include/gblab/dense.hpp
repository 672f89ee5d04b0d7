#ifndef GBLAB_DENSE_HPP
#define GBLAB_DENSE_HPP

#include <cstddef>
#include <vector>

#include "gblab/operator.hpp"

namespace gblab {

// Small dense complex matrix, row major. Used for per-mode displacement
// factors and as the fast path for near-dense operator products.
struct DenseMatrix {
    std::size_t n = 0;
    std::vector<cx> a;

    DenseMatrix() = default;
    explicit DenseMatrix(std::size_t size) : n(size), a(size * size) {}

    cx& at(std::size_t i, std::size_t j) { return a[i * n + j]; }
    const cx& at(std::size_t i, std::size_t j) const { return a[i * n + j]; }
    cx* row(std::size_t i) { return a.data() + i * n; }
    const cx* row(std::size_t i) const { return a.data() + i * n; }

    static DenseMatrix identity(std::size_t size);
    double max_abs() const;
};

// c = a * b, kernel-backed (ikj loop over contiguous rows)
DenseMatrix gemm(const DenseMatrix& a, const DenseMatrix& b);

// Scaled-and-squared Taylor series; terms are added until the last one has
// max entry below term_tol.
DenseMatrix expm(const DenseMatrix& x, double term_tol = 1e-14);

DenseMatrix to_dense(const Operator& op);
Operator from_dense(BasisPtr b, const DenseMatrix& m);
// dense(a) * b for sparse a and dense b
DenseMatrix sparse_times_dense(const Operator& a, const DenseMatrix& b);

// Tensor-embed per-mode dense factors into the full basis; modes not listed
// act as identity. Factor sizes must equal n_max+1. Column order inside each
// row is ascending, so the result is valid CSR.
Operator embed_mode_factors(const BasisPtr& b,
                            const std::vector<std::pair<std::size_t, DenseMatrix>>& factors,
                            std::size_t nnz_bound = std::size_t{1} << 26);

}  // namespace gblab

#endif
