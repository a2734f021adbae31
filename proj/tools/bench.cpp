// Benchmark: serial reference vs OpenMP kernels on the heavy sweeps.
// The serial path is the reference implementation used by the tests; this
// target reports wall time and the speedup of the threaded path, and fails
// loudly if the two paths ever disagree.

#include "plie/poisson.hpp"
#include "plie/random.hpp"
#include "plie/verify.hpp"

#include <chrono>
#include <cstdio>
#include <string>

using namespace plie;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Timing {
    double serial = 0, parallel = 0;
    bool agree = true;
};

void row(const char* name, const Timing& t) {
    std::printf("%-34s %9.3fs %9.3fs %7.2fx %s\n", name, t.serial, t.parallel,
                t.parallel > 0 ? t.serial / t.parallel : 0.0, t.agree ? "" : "MISMATCH");
}

} // namespace

int main(int argc, char** argv) {
    int N = argc > 1 ? std::atoi(argv[1]) : 8;
    std::printf("threads available: %d (OpenMP %s)\n", hardware_threads(),
                openmp_enabled() ? "on" : "off");
    std::printf("%-34s %10s %10s %8s\n", "kernel", "serial", "parallel", "speedup");

    Rng rng(7);
    MuSeq mu = mu_random_admissible(2, N, rng);
    OmegaTable omega = omega_from_lambda(lambda_from_mu(mu));

    {
        Timing t;
        auto t0 = Clock::now();
        auto a = check_jacobi(omega, Exec::Serial);
        t.serial = seconds_since(t0);
        t0 = Clock::now();
        auto b = check_jacobi(omega, Exec::Parallel);
        t.parallel = seconds_since(t0);
        t.agree = a.size() == b.size();
        for (std::size_t i = 0; i < a.size() && t.agree; ++i)
            t.agree = a[i].pass == b[i].pass && a[i].indices == b[i].indices;
        row(("jacobi sweep N=" + std::to_string(N)).c_str(), t);
    }

    {
        OmegaTable w6 = omega.projected(std::min(N, 6));
        Timing t;
        auto t0 = Clock::now();
        auto a = check_mult_symbolic(w6, Exec::Serial);
        t.serial = seconds_since(t0);
        t0 = Clock::now();
        auto b = check_mult_symbolic(w6, Exec::Parallel);
        t.parallel = seconds_since(t0);
        t.agree = a.size() == b.size();
        for (std::size_t i = 0; i < a.size() && t.agree; ++i)
            t.agree = a[i].pass == b[i].pass && a[i].indices == b[i].indices;
        row("symbolic multiplicativity N=6", t);
    }

    {
        Timing t;
        auto t0 = Clock::now();
        auto a = check_mult_random(omega, 99, 50, Exec::Serial);
        t.serial = seconds_since(t0);
        t0 = Clock::now();
        auto b = check_mult_random(omega, 99, 50, Exec::Parallel);
        t.parallel = seconds_since(t0);
        t.agree = a.size() == b.size();
        for (std::size_t i = 0; i < a.size() && t.agree; ++i) t.agree = a[i].pass == b[i].pass;
        row("random multiplicativity (50 pts)", t);
    }

    {
        // dense product in 6 variables, compared term by term
        Rng prng(11);
        std::vector<Term> ta, tb;
        for (int i = 0; i < 900; ++i) {
            Exponents e(6, 0);
            for (int v = 0; v < 6; ++v) e[v] = static_cast<int32_t>(prng.int_in(0, 4));
            ta.push_back(Term{e, prng.nonzero_rational()});
            for (int v = 0; v < 6; ++v) e[v] = static_cast<int32_t>(prng.int_in(0, 4));
            tb.push_back(Term{e, prng.nonzero_rational()});
        }
        CoordPoly a = CoordPoly::from_terms(6, ta), b = CoordPoly::from_terms(6, tb);
        Timing t;
        auto t0 = Clock::now();
        CoordPoly ps = CoordPoly::mul_serial(a, b);
        t.serial = seconds_since(t0);
        t0 = Clock::now();
        CoordPoly pp = CoordPoly::mul_parallel(a, b);
        t.parallel = seconds_since(t0);
        t.agree = ps == pp;
        row("polynomial product ~900x900 terms", t);
    }

    return 0;
}
