#include "pvalent/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

// AVX2 kernels, 4 points per register.  This TU is compiled with -mavx2 but
// only reached after the runtime dispatch check.  Multiplies and adds are kept
// as separate intrinsics (no _mm256_fmadd_pd) in the same order as the scalar
// reference so that each lane reproduces the scalar result bit for bit; the
// remainder of a batch falls through to the scalar loop.

namespace pvalent::kernels {

void poly_eval_batch_avx2(const double* cre, const double* cim, std::size_t ncoef,
                          int lo,
                          const double* zre, const double* zim, std::size_t npts,
                          double* wre, double* wim) {
    std::size_t j = 0;
    for (; j + 4 <= npts; j += 4) {
        const __m256d zr = _mm256_loadu_pd(zre + j);
        const __m256d zi = _mm256_loadu_pd(zim + j);
        __m256d ar = _mm256_setzero_pd();
        __m256d ai = _mm256_setzero_pd();
        if (ncoef > 0) {
            ar = _mm256_set1_pd(cre[ncoef - 1]);
            ai = _mm256_set1_pd(cim[ncoef - 1]);
        }
        for (std::size_t i = ncoef; i-- > 1;) {
            // (ar*zr - ai*zi) + c_re ; (ar*zi + ai*zr) + c_im
            const __m256d tr = _mm256_add_pd(
                _mm256_sub_pd(_mm256_mul_pd(ar, zr), _mm256_mul_pd(ai, zi)),
                _mm256_set1_pd(cre[i - 1]));
            const __m256d ti = _mm256_add_pd(
                _mm256_add_pd(_mm256_mul_pd(ar, zi), _mm256_mul_pd(ai, zr)),
                _mm256_set1_pd(cim[i - 1]));
            ar = tr;
            ai = ti;
        }
        for (int l = 0; l < lo; ++l) {
            const __m256d tr = _mm256_sub_pd(_mm256_mul_pd(ar, zr), _mm256_mul_pd(ai, zi));
            const __m256d ti = _mm256_add_pd(_mm256_mul_pd(ar, zi), _mm256_mul_pd(ai, zr));
            ar = tr;
            ai = ti;
        }
        _mm256_storeu_pd(wre + j, ar);
        _mm256_storeu_pd(wim + j, ai);
    }
    if (j < npts)
        poly_eval_batch_scalar(cre, cim, ncoef, lo, zre + j, zim + j, npts - j,
                               wre + j, wim + j);
}

void scale_batch_avx2(const double* s, const double* cre, const double* cim,
                      std::size_t n, double* outre, double* outim) {
    std::size_t j = 0;
    for (; j + 4 <= n; j += 4) {
        const __m256d sv = _mm256_loadu_pd(s + j);
        _mm256_storeu_pd(outre + j, _mm256_mul_pd(sv, _mm256_loadu_pd(cre + j)));
        _mm256_storeu_pd(outim + j, _mm256_mul_pd(sv, _mm256_loadu_pd(cim + j)));
    }
    if (j < n)
        scale_batch_scalar(s + j, cre + j, cim + j, n - j, outre + j, outim + j);
}

} // namespace pvalent::kernels

#endif // x86-64
