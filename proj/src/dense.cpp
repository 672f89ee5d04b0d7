#include "gblab/dense.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gblab/kernels.hpp"

namespace gblab {

DenseMatrix DenseMatrix::identity(std::size_t size) {
    DenseMatrix m(size);
    for (std::size_t i = 0; i < size; ++i) m.at(i, i) = 1.0;
    return m;
}

double DenseMatrix::max_abs() const { return kernels::max_abs(a.data(), a.size()); }

DenseMatrix gemm(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.n != b.n) throw std::invalid_argument("gemm: size mismatch");
    DenseMatrix c(a.n);
    for (std::size_t i = 0; i < a.n; ++i) {
        cx* ci = c.row(i);
        const cx* ai = a.row(i);
        for (std::size_t k = 0; k < a.n; ++k) {
            if (ai[k] != cx{0.0, 0.0}) {
                kernels::axpy(ai[k], b.row(k), ci, a.n);
            }
        }
    }
    return c;
}

DenseMatrix expm(const DenseMatrix& x, double term_tol) {
    // scale so the inf-norm is <= 1, Taylor, then square back up
    double norm = 0.0;
    for (std::size_t i = 0; i < x.n; ++i) {
        double rowsum = 0.0;
        for (std::size_t j = 0; j < x.n; ++j) rowsum += std::abs(x.at(i, j));
        norm = std::max(norm, rowsum);
    }
    int squarings = 0;
    double scale = 1.0;
    while (norm * scale > 1.0) {
        scale *= 0.5;
        ++squarings;
    }
    DenseMatrix xs = x;
    kernels::scal(cx{scale, 0.0}, xs.a.data(), xs.a.size());

    DenseMatrix sum = DenseMatrix::identity(x.n);
    DenseMatrix term = DenseMatrix::identity(x.n);
    for (int k = 1; k <= 128; ++k) {
        term = gemm(term, xs);
        kernels::scal(cx{1.0 / double(k), 0.0}, term.a.data(), term.a.size());
        kernels::axpy(cx{1.0, 0.0}, term.a.data(), sum.a.data(), sum.a.size());
        if (term.max_abs() < term_tol) break;
    }
    for (int s = 0; s < squarings; ++s) sum = gemm(sum, sum);
    return sum;
}

DenseMatrix to_dense(const Operator& op) {
    DenseMatrix m(op.dim());
    const auto row_ptr = op.row_ptr();
    const auto cols = op.cols();
    const auto vals = op.values();
    for (std::size_t r = 0; r < op.dim(); ++r) {
        for (std::int64_t p = row_ptr[r]; p < row_ptr[r + 1]; ++p) {
            m.at(r, cols[p]) = vals[p];
        }
    }
    return m;
}

Operator from_dense(BasisPtr b, const DenseMatrix& m) {
    if (m.n != b->dim()) throw std::invalid_argument("from_dense: size mismatch");
    return Operator::build(std::move(b), m.n, [&m](std::size_t r, auto& entries) {
        const cx* row = m.row(r);
        for (std::size_t c = 0; c < m.n; ++c) {
            if (row[c] != cx{0.0, 0.0}) {
                entries.emplace_back(static_cast<std::int32_t>(c), row[c]);
            }
        }
    });
}

DenseMatrix sparse_times_dense(const Operator& a, const DenseMatrix& b) {
    if (a.dim() != b.n) throw std::invalid_argument("sparse_times_dense: size mismatch");
    DenseMatrix c(b.n);
    const auto row_ptr = a.row_ptr();
    const auto cols = a.cols();
    const auto vals = a.values();
    for (std::size_t r = 0; r < a.dim(); ++r) {
        cx* cr = c.row(r);
        for (std::int64_t p = row_ptr[r]; p < row_ptr[r + 1]; ++p) {
            kernels::axpy(vals[p], b.row(cols[p]), cr, b.n);
        }
    }
    return c;
}

Operator embed_mode_factors(const BasisPtr& b,
                            const std::vector<std::pair<std::size_t, DenseMatrix>>& factors,
                            std::size_t nnz_bound) {
    const std::size_t radix = static_cast<std::size_t>(b->n_max()) + 1;
    auto sorted = factors;
    std::sort(sorted.begin(), sorted.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    std::size_t per_row = 1;
    for (const auto& [mi, f] : sorted) {
        if (mi >= b->n_modes()) throw std::invalid_argument("embed: mode index out of range");
        if (f.n != radix) throw std::invalid_argument("embed: factor size must be n_max+1");
        per_row *= radix;
    }
    for (std::size_t i = 0; i + 1 < sorted.size(); ++i) {
        if (sorted[i].first == sorted[i + 1].first) {
            throw std::invalid_argument("embed: duplicate factor mode");
        }
    }
    if (per_row > 0 && b->dim() > nnz_bound / per_row) {
        throw std::length_error(
            "embed: operator would exceed the nonzero bound; use a smaller basis "
            "(e.g. the scalar/longitudinal pair) for displacement operators");
    }

    const std::size_t nf = sorted.size();
    std::vector<std::size_t> strides(nf);
    std::vector<int> occ(nf);
    std::vector<int> col_occ(nf);
    for (std::size_t i = 0; i < nf; ++i) strides[i] = b->stride(sorted[i].first);

    return Operator::build(b, b->dim() * per_row, [&](std::size_t r, auto& entries) {
        std::size_t base = r;
        for (std::size_t i = 0; i < nf; ++i) {
            occ[i] = b->occupation(r, sorted[i].first);
            base -= static_cast<std::size_t>(occ[i]) * strides[i];
        }
        std::fill(col_occ.begin(), col_occ.end(), 0);
        // odometer over the factor-mode column occupations, ascending columns
        while (true) {
            cx v{1.0, 0.0};
            std::size_t col = base;
            for (std::size_t i = 0; i < nf; ++i) {
                v *= sorted[i].second.at(occ[i], col_occ[i]);
                col += static_cast<std::size_t>(col_occ[i]) * strides[i];
            }
            if (v != cx{0.0, 0.0}) {
                entries.emplace_back(static_cast<std::int32_t>(col), v);
            }
            std::size_t d = nf;
            while (d > 0) {
                if (col_occ[d - 1] + 1 < static_cast<int>(radix)) {
                    ++col_occ[d - 1];
                    break;
                }
                col_occ[d - 1] = 0;
                --d;
            }
            if (d == 0) break;
        }
    });
}

}  // namespace gblab
