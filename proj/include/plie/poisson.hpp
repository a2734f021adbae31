#pragma once

#include "plie/jets.hpp"
#include "plie/phi.hpp"
#include "plie/poly.hpp"
#include "plie/random.hpp"
#include "plie/series.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace plie {

// Classification data: mu_1..mu_N with mu_n = 0 for n <= d and mu_{d+1} != 0.
// Entries beyond N are taken to be zero (a legitimate choice of the free
// parameters). The dependent coefficient mu_{2d+1} is constrained by a single
// relation; see mu_dependent_value.
struct MuSeq {
    int d = 1;
    int N = 0;
    std::vector<Rational> mu;   // mu[k] is mu_{k+1}

    Rational at(int n) const {   // total function, zero outside 1..N
        return (n >= 1 && n <= N) ? mu[n - 1] : Rational(0);
    }
};

void mu_validate(const MuSeq& m);

enum class MuRelationMode { Strict, Solve };

// Antisymmetric coefficient table lambda_{mn}, 1 <= m,n <= N.
class LambdaTable {
public:
    LambdaTable() = default;
    explicit LambdaTable(int N) : N_(N) {}

    int N() const { return N_; }
    // Total function: zero when an index is < 1; throws above N.
    Rational get(int m, int n) const;
    void set(int m, int n, const Rational& v);   // stores antisymmetrically

    const std::map<std::pair<int, int>, Rational>& upper() const { return c_; }

private:
    int N_ = 0;
    std::map<std::pair<int, int>, Rational> c_;   // m < n only
};

// The recursion mu -> lambda. In Strict mode a violation of the mu_{2d+1}
// relation is an error; in Solve mode the dependent value is filled in.
LambdaTable lambda_from_mu(const MuSeq& m, MuRelationMode mode = MuRelationMode::Strict);

// The value the mu_{2d+1} relation forces, given mu_{d+1}..mu_{2d}
// (zero when d = 1: the constraint sum is empty).
Rational mu_dependent_value(const MuSeq& m);

// A seeded admissible mu-sequence: random free parameters, dependent
// mu_{2d+1} filled from the relation.
MuSeq mu_random_admissible(int d, int N, Rng& rng);

// lambda <-> phi conversions (the same coefficients in two containers).
PhiSeries phi_from_lambda(const LambdaTable& t);
LambdaTable lambda_from_phi(const PhiSeries& phi, int N);

// Bracket table omega_{ij} on G_N, entries stored for i < j; the
// antisymmetric extension is implied.
class OmegaTable {
public:
    OmegaTable() = default;
    OmegaTable(int N) : N_(N), w_(static_cast<std::size_t>(N) * N) {}

    int N() const { return N_; }
    const CoordPoly& upper(int i, int j) const;     // requires i < j
    CoordPoly get(int i, int j) const;              // antisymmetric extension
    void set(int i, int j, CoordPoly p);            // requires i < j

    OmegaTable projected(int M) const;              // restriction to G_M
    bool entries_polynomial() const;                // no negative exponents anywhere

private:
    int N_ = 0;
    std::vector<CoordPoly> w_;
};

// Composition sums C_p(k) = sum_{r_1+...+r_p=k} x_{r_1}...x_{r_p}
// (coefficient of u^k in x(u)^p), memoized. Variables may live at an offset
// inside a larger ring.
class CompositionSums {
public:
    CompositionSums(int nvars, int offset = 0) : nvars_(nvars), offset_(offset) {}
    const CoordPoly& get(int p, int k);

private:
    int nvars_, offset_;
    std::map<std::pair<int, int>, CoordPoly> memo_;
};

// Bracket table from a lambda table (the coefficient-expansion route).
OmegaTable omega_from_lambda(const LambdaTable& t);

// The countable family: direct transcription of the closed-form table for
// the basic (single nonzero parameter) structure at each d.
OmegaTable omega_special(int d, int N);

// Bracket table from the generating series:
//   Omega(u,v;x) = phi(u,v) x'(u) x'(v) - phi(x(u), x(v)),
// expanded with x(u) carrying symbolic coefficients. Requires phi.rect >= N.
OmegaTable omega_from_phi(const PhiSeries& phi, int N);

// The fixed 3x3 example table with the Laurent entry (N = 3).
OmegaTable g3_example();

// Jacobi residual for the triple (j,k,l):
//   sum_i [ w_{ij} d_i w_{kl} + w_{ik} d_i w_{lj} + w_{il} d_i w_{jk} ].
CoordPoly jacobi_residual(const OmegaTable& w, int j, int k, int l);

// Symbolic group law on G_N in the 2N-variable ring (x_1..x_N, y_1..y_N):
// z_k polynomials, their partials, and a memoized substitution cache.
class SymbolicGroupLaw {
public:
    explicit SymbolicGroupLaw(int N);

    int N() const { return N_; }
    const CoordPoly& z(int k) const { return z_[k - 1]; }
    const CoordPoly& dz_dx(int i, int k) const { return dzdx_[i - 1][k - 1]; }
    const CoordPoly& dz_dy(int i, int k) const { return dzdy_[i - 1][k - 1]; }

    // omega entry with x_m -> z_m substituted, memoized across calls.
    CoordPoly substitute(const CoordPoly& p);

    CoordPoly embed_x(const CoordPoly& p) const;   // x_m -> x_m (widen ring)
    CoordPoly embed_y(const CoordPoly& p) const;   // x_m -> y_m

private:
    int N_;
    std::vector<CoordPoly> z_;
    std::vector<std::vector<CoordPoly>> dzdx_, dzdy_;
    std::map<Exponents, CoordPoly> memo_;
};

// Multiplicativity residual in the 2N-variable ring (exact, symbolic route):
//   w_{ij}(z(x,y)) - sum_{kl} [ w_{kl}(x) dz_i/dx_k dz_j/dx_l
//                             + w_{kl}(y) dz_i/dy_k dz_j/dy_l ].
CoordPoly multiplicativity_residual(const OmegaTable& w, int i, int j, SymbolicGroupLaw& law);

// Randomized multiplicativity residual: both sides evaluated exactly at the
// rational points (x, y). The Jacobians come from series identities
// dz_i/dx_k = [u^i] y(u)^k and dz_i/dy_k = [u^{i-k}] x'(y(u)), a code path
// independent of the symbolic one.
Rational multiplicativity_residual_at(const OmegaTable& w, int i, int j, const JetElement& x,
                                      const JetElement& y);

// Generating series of the brackets at a group element given as a series:
//   Omega(u,v;x) = phi(u,v) x'(u) x'(v) - phi(x(u), x(v)),
// with rational coefficients, complete through the returned series' ord.
SeriesQ omega_series_at(const PhiSeries& phi, const SeriesQ& xs, int work_ord);

// Residual of the functional equation for the generating series:
//   Omega(u,v;xy) - Omega(y(u),y(v);x) - Omega(u,v;y) x'(y(u)) x'(y(v)).
SeriesQ group_functional_residual(const PhiSeries& phi, const JetElement& x, const JetElement& y,
                                  int work_ord, int* trusted = nullptr);

// Residual of the inversion anti-Poisson identity at x:
//   xbar'(u) xbar'(v) Omega(xbar(u), xbar(v); x) + Omega(u,v; xbar),
// where xbar is the inverse series of x.
SeriesQ inversion_residual(const PhiSeries& phi, const JetElement& x, int work_ord,
                           int* trusted = nullptr);

// Diagnostics shared by the verifier and the acceptance suite.
bool omega_vanishes_at_identity(const OmegaTable& w);
bool omega_local(const OmegaTable& w);   // entry (i,j) uses only x_k, k <= max(i,j)

} // namespace plie
