#pragma once

#include <cstddef>

// Batched arithmetic kernels used by the grid verifiers.  Each kernel has a
// scalar reference implementation plus SIMD variants (AVX2 on x86-64, NEON on
// aarch64) selected once at runtime.  All variants follow the same per-lane
// operation order with fused contraction disabled, so their results are
// bitwise identical to the scalar reference; the test suite enforces this.

namespace pvalent::kernels {

// Evaluate w_j = sum_{i=0}^{n-1} c_i z_j^(lo+i) for a batch of points by
// Horner on the coefficient span followed by a z^lo prefix (lo >= 0).
// Coefficients and points are split re/im (structure of arrays).
using poly_eval_fn = void (*)(const double* cre, const double* cim, std::size_t ncoef,
                              int lo,
                              const double* zre, const double* zim, std::size_t npts,
                              double* wre, double* wim);

// out_j = s_j * c_j for complex c and real scale factors (radial weighting).
using scale_fn = void (*)(const double* s, const double* cre, const double* cim,
                          std::size_t n, double* outre, double* outim);

void poly_eval_batch_scalar(const double* cre, const double* cim, std::size_t ncoef,
                            int lo,
                            const double* zre, const double* zim, std::size_t npts,
                            double* wre, double* wim);
void scale_batch_scalar(const double* s, const double* cre, const double* cim,
                        std::size_t n, double* outre, double* outim);

#if defined(__x86_64__) || defined(_M_X64)
void poly_eval_batch_avx2(const double* cre, const double* cim, std::size_t ncoef,
                          int lo,
                          const double* zre, const double* zim, std::size_t npts,
                          double* wre, double* wim);
void scale_batch_avx2(const double* s, const double* cre, const double* cim,
                      std::size_t n, double* outre, double* outim);
#endif

#if defined(__aarch64__)
void poly_eval_batch_neon(const double* cre, const double* cim, std::size_t ncoef,
                          int lo,
                          const double* zre, const double* zim, std::size_t npts,
                          double* wre, double* wim);
void scale_batch_neon(const double* s, const double* cre, const double* cim,
                      std::size_t n, double* outre, double* outim);
#endif

// Dispatched entry points (resolved once, first call).
poly_eval_fn poly_eval_batch();
scale_fn scale_batch();

// Name of the selected implementation: "avx2", "neon" or "scalar".
const char* active_impl();

} // namespace pvalent::kernels
