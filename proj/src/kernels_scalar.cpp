#include "pvalent/kernels.hpp"

// Reference kernels.  The SIMD variants replicate this exact per-lane operation
// order (multiply, subtract/add, add — never fused), and this translation unit
// is built with contraction disabled, so results agree bitwise across variants.

namespace pvalent::kernels {

void poly_eval_batch_scalar(const double* cre, const double* cim, std::size_t ncoef,
                            int lo,
                            const double* zre, const double* zim, std::size_t npts,
                            double* wre, double* wim) {
    for (std::size_t j = 0; j < npts; ++j) {
        const double zr = zre[j], zi = zim[j];
        double ar = 0.0, ai = 0.0;
        if (ncoef > 0) {
            ar = cre[ncoef - 1];
            ai = cim[ncoef - 1];
        }
        for (std::size_t i = ncoef; i-- > 1;) {
            const double tr = (ar * zr - ai * zi) + cre[i - 1];
            const double ti = (ar * zi + ai * zr) + cim[i - 1];
            ar = tr;
            ai = ti;
        }
        for (int l = 0; l < lo; ++l) {
            const double tr = ar * zr - ai * zi;
            const double ti = ar * zi + ai * zr;
            ar = tr;
            ai = ti;
        }
        wre[j] = ar;
        wim[j] = ai;
    }
}

void scale_batch_scalar(const double* s, const double* cre, const double* cim,
                        std::size_t n, double* outre, double* outim) {
    for (std::size_t j = 0; j < n; ++j) {
        outre[j] = s[j] * cre[j];
        outim[j] = s[j] * cim[j];
    }
}

} // namespace pvalent::kernels
