#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>

namespace vqcopt {

// Deterministic random source. Every stochastic operation in the library
// takes one of these by reference; the variate transforms are implemented
// here rather than with std:: distributions so that a seed pins the exact
// stream independently of the standard library implementation.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t raw() { return engine_(); }

    // Uniform on [0, 1), 53-bit resolution.
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    // Uniform on (lo, hi]; the closed upper end matches the angle
    // convention used for gate parameters.
    double uniform_open_closed(double lo, double hi) {
        return hi - (hi - lo) * uniform();
    }

    // Standard normal via Box-Muller; the second variate of each pair is
    // cached so consecutive calls consume one uniform pair per two values.
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = 1.0 - uniform(); // (0, 1], keeps log finite
        const double u2 = uniform();
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = 2.0 * pi_ * u2;
        spare_ = radius * std::sin(angle);
        have_spare_ = true;
        return radius * std::cos(angle);
    }

    // Uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n) {
        if (n == 0) {
            throw std::invalid_argument("Rng::below: n must be positive");
        }
        // Rejection sampling to avoid modulo bias.
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % n;
    }

    // Exact Binomial(n, p) draw as a Bernoulli sum. The shot counts used
    // here (<= tens of thousands) keep this affordable and it is exact.
    long binomial(long n, double p) {
        if (n < 0) {
            throw std::invalid_argument("Rng::binomial: n must be >= 0");
        }
        if (p <= 0.0) {
            return 0;
        }
        if (p >= 1.0) {
            return n;
        }
        long hits = 0;
        for (long i = 0; i < n; ++i) {
            if (uniform() < p) {
                ++hits;
            }
        }
        return hits;
    }

  private:
    static constexpr double pi_ = 3.14159265358979323846;
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

} // namespace vqcopt
