#include "gblab/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace gblab::kernels {

namespace {

Backend detect_backend() {
#ifdef GBLAB_HAVE_AVX2_BACKEND
    if (const char* env = std::getenv("GBLAB_KERNELS")) {
        if (std::strcmp(env, "scalar") == 0) return Backend::scalar;
        if (std::strcmp(env, "avx2") == 0) return Backend::avx2;
    }
    if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) {
        return Backend::avx2;
    }
#endif
    return Backend::scalar;
}

Backend& backend_slot() {
    static Backend b = detect_backend();
    return b;
}

}  // namespace

Backend active_backend() { return backend_slot(); }

void force_backend(Backend b) {
#ifdef GBLAB_HAVE_AVX2_BACKEND
    backend_slot() = b;
#else
    (void)b;
    backend_slot() = Backend::scalar;
#endif
}

bool avx2_available() {
#ifdef GBLAB_HAVE_AVX2_BACKEND
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

std::string_view backend_name(Backend b) {
    return b == Backend::avx2 ? "avx2" : "scalar";
}

#ifdef GBLAB_HAVE_AVX2_BACKEND
#define GBLAB_DISPATCH(fn, ...)                               \
    (backend_slot() == Backend::avx2 ? avx2::fn(__VA_ARGS__)  \
                                     : scalar::fn(__VA_ARGS__))
#else
#define GBLAB_DISPATCH(fn, ...) scalar::fn(__VA_ARGS__)
#endif

void axpy(cx a, const cx* x, cx* y, std::size_t n) { GBLAB_DISPATCH(axpy, a, x, y, n); }
void scal(cx a, cx* x, std::size_t n) { GBLAB_DISPATCH(scal, a, x, n); }
cx dot_conj(const cx* x, const cx* y, std::size_t n) { return GBLAB_DISPATCH(dot_conj, x, y, n); }
cx dot_conj_signed(const cx* x, const double* s, const cx* y, std::size_t n) {
    return GBLAB_DISPATCH(dot_conj_signed, x, s, y, n);
}
double norm2_sq(const cx* x, std::size_t n) { return GBLAB_DISPATCH(norm2_sq, x, n); }
double max_abs(const cx* x, std::size_t n) { return GBLAB_DISPATCH(max_abs, x, n); }
void csr_matvec(const std::int64_t* row_ptr, const std::int32_t* col,
                const cx* val, std::size_t rows, const cx* x, cx* y) {
    GBLAB_DISPATCH(csr_matvec, row_ptr, col, val, rows, x, y);
}

#undef GBLAB_DISPATCH

}  // namespace gblab::kernels
