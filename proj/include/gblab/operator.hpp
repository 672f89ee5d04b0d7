#ifndef GBLAB_OPERATOR_HPP
#define GBLAB_OPERATOR_HPP

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "gblab/basis.hpp"
#include "gblab/state.hpp"

namespace gblab {

bool bases_compatible(const BasisPtr& a, const BasisPtr& b);
void require_same_basis(const BasisPtr& a, const BasisPtr& b, const char* where);

// Sparse complex matrix on a FockBasis, CSR layout with sorted columns.
// Structural zeros are never stored; arithmetic prunes exact zeros so that
// cancellation is visible in nnz().
class Operator {
public:
    Operator() = default;

    static Operator zero(BasisPtr b);
    static Operator identity(BasisPtr b);
    static Operator diagonal(BasisPtr b, std::vector<cx> diag);
    static Operator from_csr(BasisPtr b, std::vector<std::int64_t> row_ptr,
                             std::vector<std::int32_t> cols, std::vector<cx> vals);

    // Row-wise construction. fn(row, entries) must append (col, value) pairs
    // with strictly increasing columns.
    template <class RowFn>
    static Operator build(BasisPtr b, std::size_t nnz_hint, RowFn&& fn) {
        Operator op;
        op.basis_ = std::move(b);
        const std::size_t dim = op.basis_->dim();
        op.row_ptr_.resize(dim + 1);
        op.cols_.reserve(nnz_hint);
        op.vals_.reserve(nnz_hint);
        std::vector<std::pair<std::int32_t, cx>> entries;
        for (std::size_t r = 0; r < dim; ++r) {
            entries.clear();
            fn(r, entries);
            for (const auto& [c, v] : entries) {
                if (v == cx{0.0, 0.0}) continue;
                op.cols_.push_back(c);
                op.vals_.push_back(v);
            }
            op.row_ptr_[r + 1] = static_cast<std::int64_t>(op.cols_.size());
        }
        return op;
    }

    const BasisPtr& basis() const { return basis_; }
    std::size_t dim() const { return basis_ ? basis_->dim() : 0; }
    std::size_t nnz() const { return vals_.size(); }
    std::span<const std::int64_t> row_ptr() const { return row_ptr_; }
    std::span<const std::int32_t> cols() const { return cols_; }
    std::span<const cx> values() const { return vals_; }

    bool is_diagonal() const;
    std::vector<cx> diagonal() const;
    double max_abs_entry() const;
    // max |A_ij| over entries with both i and j selected by the mask
    double masked_max_abs(std::span<const unsigned char> mask) const;

    // auxiliary (Euclidean) adjoint: conjugate transpose
    Operator conj_transpose() const;

    State apply(const State& x) const;
    void apply(const cx* x, cx* y) const;

    Operator& scale(cx a);
    // entry (i, j) *= row[i] * col[j]
    Operator& row_col_scale(std::span<const double> row, std::span<const double> col);

    friend Operator operator+(const Operator& a, const Operator& b);
    friend Operator operator-(const Operator& a, const Operator& b);
    friend Operator operator*(const Operator& a, const Operator& b);
    friend Operator operator*(cx a, Operator b) {
        b.scale(a);
        return b;
    }
    Operator operator-() const { return cx{-1.0, 0.0} * (*this); }

private:
    BasisPtr basis_;
    std::vector<std::int64_t> row_ptr_;
    std::vector<std::int32_t> cols_;
    std::vector<cx> vals_;

    static Operator add_impl(const Operator& a, const Operator& b, cx bscale);
};

Operator commutator(const Operator& a, const Operator& b);

}  // namespace gblab

#endif
