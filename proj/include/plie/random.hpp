#pragma once

#include "plie/jets.hpp"
#include "plie/rational.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace plie {

// Deterministic source of small random rationals. All randomized checks are
// seeded and the seed is echoed in every report, so runs are reproducible.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t raw() { return eng_(); }

    // Uniform in [lo, hi], engine-portable (no std distribution involved).
    long long int_in(long long lo, long long hi) {
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long long>(eng_() % span);
    }

    Rational rational(long num_mag = 9, long den_mag = 4) {
        long long n = int_in(-num_mag, num_mag);
        long long d = int_in(1, den_mag);
        return Rational(static_cast<long>(n), static_cast<long>(d));
    }

    Rational nonzero_rational(long num_mag = 9, long den_mag = 4) {
        for (;;) {
            Rational r = rational(num_mag, den_mag);
            if (!r.is_zero()) return r;
        }
    }

    JetElement jet(int N, long num_mag = 5, long den_mag = 3) {
        std::vector<Rational> c;
        c.reserve(N);
        c.push_back(nonzero_rational(num_mag, den_mag));
        for (int i = 1; i < N; ++i) c.push_back(rational(num_mag, den_mag));
        return jet_make(std::move(c));
    }

private:
    std::mt19937_64 eng_;
};

} // namespace plie
