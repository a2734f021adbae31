#pragma once

#include "plie/linalg.hpp"
#include "plie/poisson.hpp"
#include "plie/rational.hpp"

#include <array>
#include <map>
#include <utility>
#include <vector>

namespace plie {

// Grade-index trust sentinel: the table is finitely supported and exact.
inline constexpr int TRUST_EXACT = 1 << 28;

// [e_n, e_m] = (n - m) e_{n+m}: coefficient and basis index.
inline std::pair<Rational, int> witt_bracket(int n, int m) {
    return {Rational(n - m), n + m};
}

// Antisymmetric element of G ^ G, stored as tensor components on the
// canonical i < j pairs under the convention e_a ^ e_b -> +1 at (a, b),
// -1 at (b, a). Entries with max(i,j) <= trust are complete; beyond that the
// true object may have terms the container does not know about.
class Wedge2 {
public:
    // Tensor component t^{ij} (total antisymmetric function of (i, j)).
    Rational get(int i, int j) const;
    // Accumulates v * e_a ^ e_b (no-op when a == b).
    void add_wedge(int a, int b, const Rational& v);
    // this += scale * o, entrywise.
    void accumulate(const Wedge2& o, const Rational& scale);

    bool is_zero() const { return c_.empty(); }
    bool zero_within(int cap) const;
    int max_index() const;
    const std::map<std::pair<int, int>, Rational>& entries() const { return c_; }

    int trust = TRUST_EXACT;

    friend bool operator==(const Wedge2& a, const Wedge2& b) { return a.c_ == b.c_; }

private:
    std::map<std::pair<int, int>, Rational> c_;   // keys i < j
};

// Sparse element of G x G x G in tensor components.
class Tensor3 {
public:
    void add(const std::array<int, 3>& idx, const Rational& v);
    Rational get(const std::array<int, 3>& idx) const;
    bool is_zero() const { return t_.empty(); }
    bool zero_within(int cap) const;
    const std::map<std::array<int, 3>, Rational>& entries() const { return t_; }

    // Alternation projector: (1/6) sum over S_3 of sgn(sigma) sigma(t).
    Tensor3 alternated() const;

    int trust = TRUST_EXACT;

private:
    std::map<std::array<int, 3>, Rational> t_;
};

// A 1-cochain alpha: G -> G ^ G on grades 0..n_cap. min_weight lower-bounds
// i + j - n over the true object; it drives the trust windows of quadratic
// operations on truncated families.
struct AlphaTable {
    int n_cap = -1;
    std::vector<Wedge2> a;
    int min_weight = 0;
    bool exact = false;

    const Wedge2& at(int n) const { return a[static_cast<std::size_t>(n)]; }
};

// Adjoint action on 2-tensors, push form:
//   e_n.(e_a x e_b) = (n-a) e_{n+a} x e_b + (n-b) e_a x e_{n+b}.
Wedge2 adjoint2(int n, const Wedge2& t);

// Adjoint action on 3-tensors (one bracket per slot).
Tensor3 adjoint3(int n, const Tensor3& t);

// Coboundary alpha(e_n) = e_n.r, two independent routes: the adjoint push
// above, and the closed component formula
//   alpha^{ij}_n = (2n-i) r^{i-n,j} + (2n-j) r^{i,j-n}  (pull form).
Wedge2 coboundary_adjoint(const Wedge2& r, int n);
Wedge2 coboundary_formula(const Wedge2& r, int n);
AlphaTable coboundary_table(const Wedge2& r, int n_cap);

// Cocycle residual (n - m) alpha(e_{n+m}) - e_n.alpha(e_m) + e_m.alpha(e_n).
Wedge2 cocycle_residual(const AlphaTable& alpha, int n, int m);

// <r,r> = [r12,r13] + [r12,r23] + [r13,r23] in tensor components, fully
// antisymmetrized over the three slots.
Tensor3 cybe_residual(const Wedge2& r);

// Co-Jacobi residual [1 + cyc + cyc^2] (1 x alpha) alpha (e_n), where
// cyc: a x b x c -> c x a x b. Returns the residual restricted to its
// trusted grades.
Tensor3 cojacobi_residual(const AlphaTable& alpha, int n);

// The countable family on the algebra side:
//   alpha_d(e_n) = 2n e_d ^ e_n - 2(n-d) e_0 ^ e_{d+n}
// under the convention e_a ^ e_b -> +1 at (a,b), -1 at (b,a).
Wedge2 alpha_basic(int d, int n);
AlphaTable alpha_basic_table(int d, int n_cap);

// Its one-parameter deformation (four truncated sums; infinite tails unless
// d = 1 or lam = 0).
Wedge2 alpha_deformed(int d, const Rational& lam, int n, int cap);
AlphaTable alpha_deformed_table(int d, const Rational& lam, int n_cap, int cap);

// r^{ij} = lambda_{i+1,j+1}.
Wedge2 r_from_lambda(const LambdaTable& t);

// Linearization of a bracket table at the identity, under the index
// convention e_n <-> x_{n+1}:
//   alpha^{i-1,j-1}_{n-1} = d omega_{ij} / d x_n at e = (1,0,...,0).
AlphaTable derive_cocycle_from_omega(const OmegaTable& w);

// Per-weight exact solve of alpha(e_n) = e_n.r for r. Weight-w unknowns
// r^{ij} (i + j = w) feed equations at grade i + j = n + w, so the system
// decouples by weight. kernel_dim reports the homogeneous kernel per weight
// (0 expected), the computational trace of cocycle-rigidity at this
// truncation.
struct WeightReport {
    int weight = 0;
    int kernel_dim = 0;
    bool solved = true;
    int offending_grade = -1;   // n of the first inconsistent equation
    std::vector<std::pair<std::pair<int, int>, Rational>> r_components;
};

struct SolveResult {
    Wedge2 r;
    std::vector<WeightReport> weights;
    bool consistent = true;
    int offending_grade = -1;
};

SolveResult solve_r_from_cocycle(const AlphaTable& alpha, int wmax);

// Residual of the linear PDE system tying a bracket table to its
// linearization (coordinate indices; 1 <= j <= n, m <= n):
//   sum_{i=j}^{n} (i+1-j) x_{i+1-j} d omega_{mn} / d x_i
//     - (m+1-j) omega_{m+1-j,n} - (n+1-j) omega_{m,n+1-j}
//     - sum_{k<=m, l<=n} alpha_{j}^{kl} (m+1-k)(n+1-l) x_{m+1-k} x_{n+1-l},
// with alpha in Witt indexing (alpha_j^{kl} = table entry (k-1, l-1) at
// grade j-1).
CoordPoly pde_system_residual(const OmegaTable& w, const AlphaTable& alpha, int j, int m, int n);

// Kernel of the homogeneous part of that system over polynomial unknowns:
// pairs (m, n) with m < n and m + n <= wmax + margin, each unknown a
// homogeneous polynomial of graded weight m + n in x_1..x_n. The top
// `margin` pair-weights are underdetermined at this truncation and are not
// asserted; the report records the kernel dimension per pair-weight within
// the asserted window.
struct PdeHomogeneousReport {
    int wmax = 0;
    int margin = 0;
    int unknowns = 0;
    int kernel_dim_total = 0;                  // including margin weights
    std::map<int, int> kernel_dim_by_weight;   // pair-weight <= wmax only
    bool trivial_within_window = false;
};

PdeHomogeneousReport pde_homogeneous_kernel(int wmax, int margin);

} // namespace plie
