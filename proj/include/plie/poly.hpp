#pragma once

#include "plie/parallel.hpp"
#include "plie/rational.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace plie {

// Exponent vector of a monomial in x_1..x_N. Entry 0 (the exponent of x_1)
// may be negative; the group condition x_1 != 0 makes x_1^{-1} meaningful.
using Exponents = std::vector<int32_t>;

// Graded weight with wt(x_i) = i. The d-family brackets are graded against
// this weight, and the per-weight linear algebra filters by it.
long long graded_weight(const Exponents& e);

// Graded-lexicographic monomial order (weight first, then lex on exponents).
bool monomial_less(const Exponents& a, const Exponents& b);

struct Term {
    Exponents exp;
    Rational coef;
};

// Sparse multivariate polynomial in x_1..x_N over the rationals, Laurent in
// x_1 only at the visible interfaces. Terms are kept sorted in graded-lex
// order with no zero coefficients; equality is structural.
class CoordPoly {
public:
    CoordPoly() : nvars_(0) {}
    explicit CoordPoly(int nvars) : nvars_(nvars) {}
    CoordPoly(int nvars, const Rational& c);

    static CoordPoly zero(int nvars) { return CoordPoly(nvars); }
    static CoordPoly constant(int nvars, const Rational& c) { return CoordPoly(nvars, c); }
    // x_i (1-based), optionally raised to an integer power.
    static CoordPoly variable(int nvars, int i, int power = 1, const Rational& c = Rational(1));
    static CoordPoly monomial(Exponents e, Rational c);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }

    bool is_constant() const;
    // Single-term polynomials are the units of the Laurent ring.
    bool is_monomial() const { return terms_.size() == 1; }

    // True when negative exponents occur only in position 1 (public invariant
    // for structure tables; internal scratch rings may relax it).
    bool laurent_only_x1() const;
    // Largest variable index actually present (0 for constants).
    int max_var_used() const;
    long long total_degree() const;   // max graded weight over terms (0 if zero)

    CoordPoly operator-() const;
    CoordPoly& operator+=(const CoordPoly& o);
    CoordPoly& operator-=(const CoordPoly& o);
    friend CoordPoly operator+(const CoordPoly& a, const CoordPoly& b);
    friend CoordPoly operator-(const CoordPoly& a, const CoordPoly& b);
    friend CoordPoly operator*(const CoordPoly& a, const CoordPoly& b);
    CoordPoly& operator*=(const CoordPoly& o) { *this = *this * o; return *this; }
    CoordPoly& operator*=(const Rational& c);
    friend CoordPoly operator*(CoordPoly a, const Rational& c) { return a *= c; }
    friend CoordPoly operator*(const Rational& c, CoordPoly a) { return a *= c; }

    friend bool operator==(const CoordPoly& a, const CoordPoly& b);
    friend bool operator!=(const CoordPoly& a, const CoordPoly& b) { return !(a == b); }

    // Serial reference product, kept alongside the threaded kernel; the two
    // are compared in tests and in the benchmark target.
    static CoordPoly mul_serial(const CoordPoly& a, const CoordPoly& b);
    static CoordPoly mul_parallel(const CoordPoly& a, const CoordPoly& b);

    std::string str() const;   // human-readable, for diagnostics and reports

    // Canonicalizes a raw term list (sorts, merges, strips zeros).
    static CoordPoly from_terms(int nvars, std::vector<Term> terms);

private:
    int nvars_;
    std::vector<Term> terms_;

    friend CoordPoly poly_pow(const CoordPoly&, int);
};

// Formal partial derivative d/dx_i (1-based); Laurent rule on x_1.
CoordPoly poly_partial(const CoordPoly& p, int i);

// Exact evaluation. Throws std::domain_error when a negative exponent of a
// variable meets a zero coordinate.
Rational poly_eval(const CoordPoly& p, std::span<const Rational> point);

// Substitutes x_i -> images[i-1]. A variable carrying a negative exponent
// must have a single-monomial (unit) image; otherwise std::domain_error.
CoordPoly poly_substitute(const CoordPoly& p, const std::vector<CoordPoly>& images);

// Nonnegative integer power.
CoordPoly poly_pow(const CoordPoly& p, int k);

// Widens p to `nvars` variables (zero-extends exponent vectors).
CoordPoly poly_extend(const CoordPoly& p, int nvars);

// Renames x_i -> x_{i+shift} (embedding into a larger ring).
CoordPoly poly_shift_vars(const CoordPoly& p, int shift, int nvars_out);

} // namespace plie
