#include "pvalent/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace pvalent::kernels {

namespace {

struct Selected {
    poly_eval_fn pe;
    scale_fn sc;
    const char* name;
};

Selected select() {
    // Escape hatch mainly for tests: PVALENT_KERNEL=scalar pins the reference path.
    const char* forced = std::getenv("PVALENT_KERNEL");
    if (forced && std::strcmp(forced, "scalar") == 0)
        return {poly_eval_batch_scalar, scale_batch_scalar, "scalar"};
#if defined(__x86_64__) || defined(_M_X64)
    if (__builtin_cpu_supports("avx2"))
        return {poly_eval_batch_avx2, scale_batch_avx2, "avx2"};
#elif defined(__aarch64__)
    // Advanced SIMD is architecturally mandatory on aarch64.
    return {poly_eval_batch_neon, scale_batch_neon, "neon"};
#endif
    return {poly_eval_batch_scalar, scale_batch_scalar, "scalar"};
}

const Selected& selected() {
    static const Selected s = select();
    return s;
}

} // namespace

poly_eval_fn poly_eval_batch() { return selected().pe; }
scale_fn scale_batch() { return selected().sc; }
const char* active_impl() { return selected().name; }

} // namespace pvalent::kernels
