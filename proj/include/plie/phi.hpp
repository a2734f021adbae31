#pragma once

#include "plie/rational.hpp"
#include "plie/series.hpp"

namespace plie {

// The antisymmetric generating series phi(u,v) = sum lambda_{ij} u^i v^j that
// parameterizes the bracket tables. Invariants: divisible by u and by v
// (no i < 1 or j < 1 terms) and phi(u,v) = -phi(v,u).
//
// The container `s` plainly stores the known coefficients; completeness is
// tracked by two bounds. `total_ord` is the total degree through which every
// coefficient is known; `rect` is the largest R with every (i, j <= R)
// coefficient known. A series built from an N x N coefficient table has
// rect = N but total_ord = N+1; the two bounds feed different consumers.
struct PhiSeries {
    SeriesQ s;                  // two variables (u, v)
    int rect = ORD_EXACT;
    int total_ord = ORD_EXACT;

    int ord() const { return total_ord; }
    Rational lambda(int i, int j) const { return s.coeff2(i, j); }
};

// Throws std::domain_error when divisibility or antisymmetry fails.
void phi_validate(const PhiSeries& phi);

// phi = u v (u^d - v^d): the two-monomial solution family.
PhiSeries phi_basic(int d);

// The one-parameter deformation
//   phi(u,v) = [uv(v^d - u^d) + lam*d*u^2 v^2 (u^{d-1} - v^{d-1})]
//              / ([1-(d-1)*lam*u][1-(d-1)*lam*v]),
// expanded by geometric series and truncated at total degree `ord`.
PhiSeries phi_deformed(int d, const Rational& lam, int ord);

// phi = (1/mu)[f(u)g(v) - f(v)g(u)] for a pair (f, g) satisfying the pair
// condition below; f must vanish to order exactly d+1 at u = 0.
PhiSeries phi_from_pair(const SeriesQ& f, const SeriesQ& g, int d, const Rational& mu, int ord);

// Residual of the pair condition f'(u)g(u) - f(u)g'(u) + d*mu*f(u);
// the pair is admissible iff this vanishes identically (on trusted degrees).
SeriesQ pair_condition_residual(const SeriesQ& f, const SeriesQ& g, int d, const Rational& mu);
bool pair_condition_check(const SeriesQ& f, const SeriesQ& g, int d, const Rational& mu);

// Residual of the master functional PDE for phi:
//   phi(u,v)[d_u phi(w,u) + d_v phi(w,v)] + cyclic permutations of (u,v,w).
// The cyclic permutation runs through both phi factors simultaneously.
// Returns the trivariate residual; *trusted (if non-null) receives the total
// degree through which the residual is complete.
TruncSeries<Rational> phi_pde_residual(const PhiSeries& phi, int work_ord, int* trusted = nullptr);

} // namespace plie
