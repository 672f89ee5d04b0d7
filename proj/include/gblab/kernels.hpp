#ifndef GBLAB_KERNELS_HPP
#define GBLAB_KERNELS_HPP

#include <complex>
#include <cstddef>
#include <cstdint>
#include <string_view>

// Dense complex vector and CSR matvec kernels. Every kernel has a scalar
// reference implementation and, on x86-64 with AVX2+FMA, a vectorized
// variant selected once at startup. The active backend can be pinned with
// kernels::force_backend (used by the equivalence tests) or the
// GBLAB_KERNELS environment variable ("scalar" / "avx2").

namespace gblab::kernels {

using cx = std::complex<double>;

enum class Backend { scalar, avx2 };

Backend active_backend();
void force_backend(Backend b);
bool avx2_available();
std::string_view backend_name(Backend b);

// y += a*x
void axpy(cx a, const cx* x, cx* y, std::size_t n);
// x *= a
void scal(cx a, cx* x, std::size_t n);
// sum conj(x[i]) * y[i]
cx dot_conj(const cx* x, const cx* y, std::size_t n);
// sum conj(x[i]) * s[i] * y[i]  (s is a real diagonal, typically the metric signs)
cx dot_conj_signed(const cx* x, const double* s, const cx* y, std::size_t n);
// sum |x[i]|^2
double norm2_sq(const cx* x, std::size_t n);
// max_i |x[i]|
double max_abs(const cx* x, std::size_t n);
// y = A x for CSR A (row_ptr has rows+1 entries)
void csr_matvec(const std::int64_t* row_ptr, const std::int32_t* col,
                const cx* val, std::size_t rows, const cx* x, cx* y);

namespace scalar {
void axpy(cx a, const cx* x, cx* y, std::size_t n);
void scal(cx a, cx* x, std::size_t n);
cx dot_conj(const cx* x, const cx* y, std::size_t n);
cx dot_conj_signed(const cx* x, const double* s, const cx* y, std::size_t n);
double norm2_sq(const cx* x, std::size_t n);
double max_abs(const cx* x, std::size_t n);
void csr_matvec(const std::int64_t* row_ptr, const std::int32_t* col,
                const cx* val, std::size_t rows, const cx* x, cx* y);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
#define GBLAB_HAVE_AVX2_BACKEND 1
namespace avx2 {
void axpy(cx a, const cx* x, cx* y, std::size_t n);
void scal(cx a, cx* x, std::size_t n);
cx dot_conj(const cx* x, const cx* y, std::size_t n);
cx dot_conj_signed(const cx* x, const double* s, const cx* y, std::size_t n);
double norm2_sq(const cx* x, std::size_t n);
double max_abs(const cx* x, std::size_t n);
void csr_matvec(const std::int64_t* row_ptr, const std::int32_t* col,
                const cx* val, std::size_t rows, const cx* x, cx* y);
}  // namespace avx2
#endif

}  // namespace gblab::kernels

#endif
