#include "pvalent/kernels.hpp"

#if defined(__aarch64__)

#include <arm_neon.h>

// NEON kernels, 2 points per register.  Same discipline as the AVX2 variant:
// discrete mul/add intrinsics (no vfmaq_f64) in scalar-reference order, scalar
// fallthrough for the batch remainder.

namespace pvalent::kernels {

void poly_eval_batch_neon(const double* cre, const double* cim, std::size_t ncoef,
                          int lo,
                          const double* zre, const double* zim, std::size_t npts,
                          double* wre, double* wim) {
    std::size_t j = 0;
    for (; j + 2 <= npts; j += 2) {
        const float64x2_t zr = vld1q_f64(zre + j);
        const float64x2_t zi = vld1q_f64(zim + j);
        float64x2_t ar = vdupq_n_f64(0.0);
        float64x2_t ai = vdupq_n_f64(0.0);
        if (ncoef > 0) {
            ar = vdupq_n_f64(cre[ncoef - 1]);
            ai = vdupq_n_f64(cim[ncoef - 1]);
        }
        for (std::size_t i = ncoef; i-- > 1;) {
            const float64x2_t tr = vaddq_f64(
                vsubq_f64(vmulq_f64(ar, zr), vmulq_f64(ai, zi)),
                vdupq_n_f64(cre[i - 1]));
            const float64x2_t ti = vaddq_f64(
                vaddq_f64(vmulq_f64(ar, zi), vmulq_f64(ai, zr)),
                vdupq_n_f64(cim[i - 1]));
            ar = tr;
            ai = ti;
        }
        for (int l = 0; l < lo; ++l) {
            const float64x2_t tr = vsubq_f64(vmulq_f64(ar, zr), vmulq_f64(ai, zi));
            const float64x2_t ti = vaddq_f64(vmulq_f64(ar, zi), vmulq_f64(ai, zr));
            ar = tr;
            ai = ti;
        }
        vst1q_f64(wre + j, ar);
        vst1q_f64(wim + j, ai);
    }
    if (j < npts)
        poly_eval_batch_scalar(cre, cim, ncoef, lo, zre + j, zim + j, npts - j,
                               wre + j, wim + j);
}

void scale_batch_neon(const double* s, const double* cre, const double* cim,
                      std::size_t n, double* outre, double* outim) {
    std::size_t j = 0;
    for (; j + 2 <= n; j += 2) {
        const float64x2_t sv = vld1q_f64(s + j);
        vst1q_f64(outre + j, vmulq_f64(sv, vld1q_f64(cre + j)));
        vst1q_f64(outim + j, vmulq_f64(sv, vld1q_f64(cim + j)));
    }
    if (j < n)
        scale_batch_scalar(s + j, cre + j, cim + j, n - j, outre + j, outim + j);
}

} // namespace pvalent::kernels

#endif // aarch64
