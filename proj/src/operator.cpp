#include "gblab/operator.hpp"

#include <algorithm>
#include <stdexcept>

#include "gblab/kernels.hpp"

namespace gblab {

bool bases_compatible(const BasisPtr& a, const BasisPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return a->n_max() == b->n_max() && a->modes() == b->modes();
}

void require_same_basis(const BasisPtr& a, const BasisPtr& b, const char* where) {
    if (!bases_compatible(a, b)) {
        throw std::invalid_argument(std::string(where) + ": basis mismatch");
    }
}

Operator Operator::zero(BasisPtr b) {
    Operator op;
    op.basis_ = std::move(b);
    op.row_ptr_.assign(op.basis_->dim() + 1, 0);
    return op;
}

Operator Operator::identity(BasisPtr b) {
    const std::size_t dim = b->dim();
    return build(std::move(b), dim, [](std::size_t r, auto& entries) {
        entries.emplace_back(static_cast<std::int32_t>(r), cx{1.0, 0.0});
    });
}

Operator Operator::diagonal(BasisPtr b, std::vector<cx> diag) {
    if (diag.size() != b->dim()) {
        throw std::invalid_argument("Operator::diagonal: length mismatch");
    }
    const std::size_t dim = b->dim();
    return build(std::move(b), dim, [&diag](std::size_t r, auto& entries) {
        entries.emplace_back(static_cast<std::int32_t>(r), diag[r]);
    });
}

Operator Operator::from_csr(BasisPtr b, std::vector<std::int64_t> row_ptr,
                            std::vector<std::int32_t> cols, std::vector<cx> vals) {
    if (row_ptr.size() != b->dim() + 1 || cols.size() != vals.size() ||
        static_cast<std::size_t>(row_ptr.back()) != vals.size()) {
        throw std::invalid_argument("Operator::from_csr: inconsistent arrays");
    }
    Operator op;
    op.basis_ = std::move(b);
    op.row_ptr_ = std::move(row_ptr);
    op.cols_ = std::move(cols);
    op.vals_ = std::move(vals);
    return op;
}

bool Operator::is_diagonal() const {
    for (std::size_t r = 0; r + 1 < row_ptr_.size(); ++r) {
        for (std::int64_t p = row_ptr_[r]; p < row_ptr_[r + 1]; ++p) {
            if (cols_[p] != static_cast<std::int32_t>(r)) return false;
        }
    }
    return true;
}

std::vector<cx> Operator::diagonal() const {
    std::vector<cx> d(dim(), cx{0.0, 0.0});
    for (std::size_t r = 0; r < dim(); ++r) {
        for (std::int64_t p = row_ptr_[r]; p < row_ptr_[r + 1]; ++p) {
            if (cols_[p] == static_cast<std::int32_t>(r)) d[r] = vals_[p];
        }
    }
    return d;
}

double Operator::max_abs_entry() const {
    return kernels::max_abs(vals_.data(), vals_.size());
}

double Operator::masked_max_abs(std::span<const unsigned char> mask) const {
    double best = 0.0;
    for (std::size_t r = 0; r < dim(); ++r) {
        if (!mask[r]) continue;
        for (std::int64_t p = row_ptr_[r]; p < row_ptr_[r + 1]; ++p) {
            if (!mask[cols_[p]]) continue;
            const double m = std::abs(vals_[p]);
            if (m > best) best = m;
        }
    }
    return best;
}

Operator Operator::conj_transpose() const {
    Operator out;
    out.basis_ = basis_;
    const std::size_t dim = this->dim();
    out.row_ptr_.assign(dim + 1, 0);
    out.cols_.resize(nnz());
    out.vals_.resize(nnz());
    for (std::size_t p = 0; p < nnz(); ++p) {
        ++out.row_ptr_[static_cast<std::size_t>(cols_[p]) + 1];
    }
    for (std::size_t r = 0; r < dim; ++r) {
        out.row_ptr_[r + 1] += out.row_ptr_[r];
    }
    std::vector<std::int64_t> next(out.row_ptr_.begin(), out.row_ptr_.end() - 1);
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::int64_t p = row_ptr_[r]; p < row_ptr_[r + 1]; ++p) {
            const std::int64_t q = next[cols_[p]]++;
            out.cols_[q] = static_cast<std::int32_t>(r);
            out.vals_[q] = std::conj(vals_[p]);
        }
    }
    return out;
}

State Operator::apply(const State& x) const {
    require_same_basis(basis_, x.basis(), "Operator::apply");
    State y(basis_);
    apply(x.amplitudes().data(), y.amplitudes().data());
    return y;
}

void Operator::apply(const cx* x, cx* y) const {
    kernels::csr_matvec(row_ptr_.data(), cols_.data(), vals_.data(), dim(), x, y);
}

Operator& Operator::scale(cx a) {
    if (a == cx{0.0, 0.0}) {
        *this = zero(basis_);
        return *this;
    }
    kernels::scal(a, vals_.data(), vals_.size());
    return *this;
}

Operator& Operator::row_col_scale(std::span<const double> row, std::span<const double> col) {
    if (row.size() != dim() || col.size() != dim()) {
        throw std::invalid_argument("Operator::row_col_scale: length mismatch");
    }
    for (std::size_t r = 0; r < dim(); ++r) {
        for (std::int64_t p = row_ptr_[r]; p < row_ptr_[r + 1]; ++p) {
            vals_[p] *= row[r] * col[cols_[p]];
        }
    }
    return *this;
}

Operator Operator::add_impl(const Operator& a, const Operator& b, cx bscale) {
    require_same_basis(a.basis_, b.basis_, "Operator::add");
    Operator out;
    out.basis_ = a.basis_;
    const std::size_t dim = a.dim();
    out.row_ptr_.resize(dim + 1);
    out.cols_.reserve(a.nnz() + b.nnz());
    out.vals_.reserve(a.nnz() + b.nnz());
    for (std::size_t r = 0; r < dim; ++r) {
        std::int64_t pa = a.row_ptr_[r], pb = b.row_ptr_[r];
        const std::int64_t ea = a.row_ptr_[r + 1], eb = b.row_ptr_[r + 1];
        while (pa < ea || pb < eb) {
            std::int32_t c;
            cx v;
            if (pb >= eb || (pa < ea && a.cols_[pa] < b.cols_[pb])) {
                c = a.cols_[pa];
                v = a.vals_[pa++];
            } else if (pa >= ea || b.cols_[pb] < a.cols_[pa]) {
                c = b.cols_[pb];
                v = bscale * b.vals_[pb++];
            } else {
                c = a.cols_[pa];
                v = a.vals_[pa++] + bscale * b.vals_[pb++];
            }
            if (v != cx{0.0, 0.0}) {
                out.cols_.push_back(c);
                out.vals_.push_back(v);
            }
        }
        out.row_ptr_[r + 1] = static_cast<std::int64_t>(out.cols_.size());
    }
    return out;
}

Operator operator+(const Operator& a, const Operator& b) {
    return Operator::add_impl(a, b, cx{1.0, 0.0});
}

Operator operator-(const Operator& a, const Operator& b) {
    return Operator::add_impl(a, b, cx{-1.0, 0.0});
}

// Gustavson row-by-row product with a dense accumulator.
Operator operator*(const Operator& a, const Operator& b) {
    require_same_basis(a.basis_, b.basis_, "Operator::mul");
    Operator out;
    out.basis_ = a.basis_;
    const std::size_t dim = a.dim();
    out.row_ptr_.resize(dim + 1);
    std::vector<cx> acc(dim, cx{0.0, 0.0});
    std::vector<std::int32_t> touched;
    touched.reserve(64);
    for (std::size_t r = 0; r < dim; ++r) {
        touched.clear();
        for (std::int64_t pa = a.row_ptr_[r]; pa < a.row_ptr_[r + 1]; ++pa) {
            const std::int32_t k = a.cols_[pa];
            const cx av = a.vals_[pa];
            for (std::int64_t pb = b.row_ptr_[k]; pb < b.row_ptr_[k + 1]; ++pb) {
                const std::int32_t c = b.cols_[pb];
                if (acc[c] == cx{0.0, 0.0}) touched.push_back(c);
                acc[c] += av * b.vals_[pb];
            }
        }
        std::sort(touched.begin(), touched.end());
        for (const std::int32_t c : touched) {
            if (acc[c] != cx{0.0, 0.0}) {
                out.cols_.push_back(c);
                out.vals_.push_back(acc[c]);
            }
            acc[c] = cx{0.0, 0.0};
        }
        out.row_ptr_[r + 1] = static_cast<std::int64_t>(out.cols_.size());
    }
    return out;
}

Operator commutator(const Operator& a, const Operator& b) { return a * b - b * a; }

}  // namespace gblab
