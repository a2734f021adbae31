#pragma once

#include "plie/bialgebra.hpp"
#include "plie/parallel.hpp"
#include "plie/phi.hpp"
#include "plie/poisson.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace plie {

// One verification check: name, the index tuple it covers, pass/fail, the
// offending residual (when nonzero) and the trusted degree/grade bound.
struct CheckResult {
    std::string name;
    std::vector<int> indices;
    bool pass = true;
    std::string residual;
    long long trusted = -1;
};

bool all_pass(const std::vector<CheckResult>& v);

// Sweeps are embarrassingly parallel over index tuples; results land in
// preallocated slots, so serial and parallel execution produce identical
// output. Exec::Serial is the reference path used by tests and the
// benchmark.

// Jacobi residuals for all triples j < k < l <= N.
std::vector<CheckResult> check_jacobi(const OmegaTable& w, Exec exec = Exec::Parallel);

// Exact symbolic multiplicativity for all pairs i < j (2N-variable ring).
std::vector<CheckResult> check_mult_symbolic(const OmegaTable& w, Exec exec = Exec::Parallel);

// Randomized exact multiplicativity: `samples` seeded draws of (x, y).
std::vector<CheckResult> check_mult_random(const OmegaTable& w, std::uint64_t seed, int samples,
                                           Exec exec = Exec::Parallel);

CheckResult check_omega_identity(const OmegaTable& w);
CheckResult check_omega_locality(const OmegaTable& w);

CheckResult check_phi_invariants(const PhiSeries& phi, const std::string& label);
CheckResult check_phi_pde(const PhiSeries& phi, int work_ord, const std::string& label,
                          bool expect_zero = true);

CheckResult check_inversion(const PhiSeries& phi, const JetElement& x, int work_ord, int index);
CheckResult check_group_functional(const PhiSeries& phi, const JetElement& x, const JetElement& y,
                                   int work_ord, int index);

// Cocycle residuals for all n < m <= mmax with n + m <= table cap.
std::vector<CheckResult> check_cocycle(const AlphaTable& alpha, int mmax,
                                       Exec exec = Exec::Parallel);

// Co-Jacobi residuals for n <= nmax (trusted grades only).
std::vector<CheckResult> check_cojacobi(const AlphaTable& alpha, int nmax,
                                        Exec exec = Exec::Parallel);

CheckResult check_cybe(const Wedge2& r, const std::string& label);

// Linear PDE system residuals for all 1 <= j <= n, m <= n <= N.
std::vector<CheckResult> check_pde_system(const OmegaTable& w, const AlphaTable& alpha,
                                          Exec exec = Exec::Parallel);

} // namespace plie
