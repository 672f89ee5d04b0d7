#include "gblab/kernels.hpp"

#ifdef GBLAB_HAVE_AVX2_BACKEND

#include <immintrin.h>

#include <cmath>

// Packed layout: one __m256d holds two complex<double> as (re0, im0, re1, im1).

namespace gblab::kernels::avx2 {

namespace {

// a * b for two packed complex numbers
inline __m256d mul_cc(__m256d a, __m256d b) {
    const __m256d ar = _mm256_movedup_pd(a);
    const __m256d ai = _mm256_permute_pd(a, 0xF);
    const __m256d bs = _mm256_permute_pd(b, 0x5);
    return _mm256_fmaddsub_pd(ar, b, _mm256_mul_pd(ai, bs));
}

// conj(a) * b
inline __m256d mul_conj(__m256d a, __m256d b) {
    const __m256d ar = _mm256_movedup_pd(a);
    const __m256d ai = _mm256_permute_pd(a, 0xF);
    const __m256d bs = _mm256_permute_pd(b, 0x5);
    return _mm256_fmsubadd_pd(ar, b, _mm256_mul_pd(ai, bs));
}

inline cx reduce_pair(__m256d acc) {
    const __m128d lo = _mm256_castpd256_pd128(acc);
    const __m128d hi = _mm256_extractf128_pd(acc, 1);
    const __m128d sum = _mm_add_pd(lo, hi);
    alignas(16) double out[2];
    _mm_store_pd(out, sum);
    return {out[0], out[1]};
}

}  // namespace

void axpy(cx a, const cx* x, cx* y, std::size_t n) {
    const __m256d ar = _mm256_set1_pd(a.real());
    const __m256d ai = _mm256_set1_pd(a.imag());
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d xv = _mm256_loadu_pd(reinterpret_cast<const double*>(x + i));
        const __m256d yv = _mm256_loadu_pd(reinterpret_cast<double*>(y + i));
        const __m256d xs = _mm256_permute_pd(xv, 0x5);
        const __m256d prod = _mm256_fmaddsub_pd(ar, xv, _mm256_mul_pd(ai, xs));
        _mm256_storeu_pd(reinterpret_cast<double*>(y + i), _mm256_add_pd(yv, prod));
    }
    for (; i < n; ++i) y[i] += a * x[i];
}

void scal(cx a, cx* x, std::size_t n) {
    const __m256d ar = _mm256_set1_pd(a.real());
    const __m256d ai = _mm256_set1_pd(a.imag());
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d xv = _mm256_loadu_pd(reinterpret_cast<const double*>(x + i));
        const __m256d xs = _mm256_permute_pd(xv, 0x5);
        _mm256_storeu_pd(reinterpret_cast<double*>(x + i),
                         _mm256_fmaddsub_pd(ar, xv, _mm256_mul_pd(ai, xs)));
    }
    for (; i < n; ++i) x[i] *= a;
}

cx dot_conj(const cx* x, const cx* y, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d xv = _mm256_loadu_pd(reinterpret_cast<const double*>(x + i));
        const __m256d yv = _mm256_loadu_pd(reinterpret_cast<const double*>(y + i));
        acc = _mm256_add_pd(acc, mul_conj(xv, yv));
    }
    cx out = reduce_pair(acc);
    for (; i < n; ++i) out += std::conj(x[i]) * y[i];
    return out;
}

cx dot_conj_signed(const cx* x, const double* s, const cx* y, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d xv = _mm256_loadu_pd(reinterpret_cast<const double*>(x + i));
        const __m256d yv = _mm256_loadu_pd(reinterpret_cast<const double*>(y + i));
        const __m128d s2 = _mm_loadu_pd(s + i);
        const __m256d sv = _mm256_permute4x64_pd(_mm256_castpd128_pd256(s2), 0x50);
        acc = _mm256_add_pd(acc, mul_conj(xv, _mm256_mul_pd(sv, yv)));
    }
    cx out = reduce_pair(acc);
    for (; i < n; ++i) out += std::conj(x[i]) * (s[i] * y[i]);
    return out;
}

double norm2_sq(const cx* x, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d xv = _mm256_loadu_pd(reinterpret_cast<const double*>(x + i));
        acc = _mm256_fmadd_pd(xv, xv, acc);
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc);
    double out = lanes[0] + lanes[1] + lanes[2] + lanes[3];
    for (; i < n; ++i) out += x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
    return out;
}

double max_abs(const cx* x, std::size_t n) {
    __m256d best = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d xv = _mm256_loadu_pd(reinterpret_cast<const double*>(x + i));
        const __m256d sq = _mm256_mul_pd(xv, xv);
        best = _mm256_max_pd(best, _mm256_hadd_pd(sq, sq));
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, best);
    double out = lanes[0];
    for (int l = 1; l < 4; ++l) out = out > lanes[l] ? out : lanes[l];
    for (; i < n; ++i) {
        const double m = x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
        if (m > out) out = m;
    }
    return std::sqrt(out);
}

void csr_matvec(const std::int64_t* row_ptr, const std::int32_t* col,
                const cx* val, std::size_t rows, const cx* x, cx* y) {
    for (std::size_t i = 0; i < rows; ++i) {
        __m256d acc = _mm256_setzero_pd();
        std::int64_t p = row_ptr[i];
        const std::int64_t end = row_ptr[i + 1];
        for (; p + 2 <= end; p += 2) {
            const __m256d vv = _mm256_loadu_pd(reinterpret_cast<const double*>(val + p));
            const __m128d x0 = _mm_loadu_pd(reinterpret_cast<const double*>(x + col[p]));
            const __m128d x1 = _mm_loadu_pd(reinterpret_cast<const double*>(x + col[p + 1]));
            const __m256d xv = _mm256_set_m128d(x1, x0);
            acc = _mm256_add_pd(acc, mul_cc(vv, xv));
        }
        cx out = reduce_pair(acc);
        for (; p < end; ++p) out += val[p] * x[col[p]];
        y[i] = out;
    }
}

}  // namespace gblab::kernels::avx2

#endif  // GBLAB_HAVE_AVX2_BACKEND
