#pragma once

#include <complex>
#include <cstdint>
#include <random>

namespace pvalent {

// Deterministic random source for sampled verification.  mt19937_64 has a fully
// specified bit stream; the uniform doubles below are derived from it without
// going through std::uniform_real_distribution (whose output is
// implementation-defined), so a given seed reproduces byte-identical results.
class Rng {
public:
    explicit Rng(std::uint64_t seed = 0) : eng_(seed) {}

    // uniform in [0,1)
    double unit() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

    // uniform integer in [lo, hi]
    int uniform_int(int lo, int hi) {
        return lo + static_cast<int>(eng_() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    // complex coefficient with |c| <= radius
    std::complex<double> disk(double radius = 1.0) {
        double r = radius * std::sqrt(unit());
        double th = 6.283185307179586476925286766559 * unit();
        return {r * std::cos(th), r * std::sin(th)};
    }

private:
    std::mt19937_64 eng_;
};

} // namespace pvalent
