#include "gblab/kernels.hpp"

#include <cmath>

namespace gblab::kernels::scalar {

void axpy(cx a, const cx* x, cx* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        y[i] += a * x[i];
    }
}

void scal(cx a, cx* x, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        x[i] *= a;
    }
}

cx dot_conj(const cx* x, const cx* y, std::size_t n) {
    double re = 0.0, im = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const cx t = std::conj(x[i]) * y[i];
        re += t.real();
        im += t.imag();
    }
    return {re, im};
}

cx dot_conj_signed(const cx* x, const double* s, const cx* y, std::size_t n) {
    double re = 0.0, im = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const cx t = std::conj(x[i]) * (s[i] * y[i]);
        re += t.real();
        im += t.imag();
    }
    return {re, im};
}

double norm2_sq(const cx* x, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        acc += x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
    }
    return acc;
}

double max_abs(const cx* x, std::size_t n) {
    double best = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double m = x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
        if (m > best) best = m;
    }
    return std::sqrt(best);
}

void csr_matvec(const std::int64_t* row_ptr, const std::int32_t* col,
                const cx* val, std::size_t rows, const cx* x, cx* y) {
    for (std::size_t i = 0; i < rows; ++i) {
        cx acc = 0.0;
        for (std::int64_t p = row_ptr[i]; p < row_ptr[i + 1]; ++p) {
            acc += val[p] * x[col[p]];
        }
        y[i] = acc;
    }
}

}  // namespace gblab::kernels::scalar
