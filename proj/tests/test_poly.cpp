#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "plie/poly.hpp"
#include "plie/random.hpp"

#include <vector>

using namespace plie;

namespace {

CoordPoly x(int nvars, int i, int pow = 1) { return CoordPoly::variable(nvars, i, pow); }

// independent brute-force evaluation: term-by-term, repeated multiplication
Rational eval_oracle(const CoordPoly& p, const std::vector<Rational>& pt) {
    Rational sum;
    for (const Term& t : p.terms()) {
        Rational v = t.coef;
        for (std::size_t i = 0; i < t.exp.size(); ++i) {
            for (int k = 0; k < t.exp[i]; ++k) v *= pt[i];
            for (int k = 0; k > t.exp[i]; --k) v /= pt[i];
        }
        sum += v;
    }
    return sum;
}

CoordPoly random_poly(Rng& rng, int nvars, int terms, bool laurent = false) {
    std::vector<Term> ts;
    for (int t = 0; t < terms; ++t) {
        Exponents e(nvars, 0);
        for (int v = 0; v < nvars; ++v) e[v] = static_cast<int32_t>(rng.int_in(0, 3));
        if (laurent) e[0] = static_cast<int32_t>(rng.int_in(-2, 3));
        ts.push_back(Term{e, rng.rational()});
    }
    return CoordPoly::from_terms(nvars, std::move(ts));
}

} // namespace

TEST_CASE("addition") {
    CoordPoly p = x(2, 1) + x(2, 2);
    CHECK(p + (-x(2, 1)) == x(2, 2));
    CHECK(CoordPoly(2) + p == p);
    CHECK(x(2, 1, 2) + x(2, 1, 2) == x(2, 1, 2) * Rational(2));
    CHECK((p - p).is_zero());
}

TEST_CASE("multiplication, Laurent in x1") {
    CHECK(x(1, 1, -1) * x(1, 1) == CoordPoly::constant(1, Rational(1)));
    CoordPoly p = x(2, 1) + x(2, 2);
    CoordPoly sq = p * p;
    CHECK(sq == x(2, 1, 2) + x(2, 1) * x(2, 2) * Rational(2) + x(2, 2, 2));
    // the monomial shape x2^3 / x1
    CoordPoly m = x(2, 2, 3) * x(2, 1, -1);
    CHECK(m == CoordPoly::monomial(Exponents{-1, 3}, Rational(1)));
    CHECK(m.laurent_only_x1());
    CHECK_FALSE(CoordPoly::monomial(Exponents{0, -1}, Rational(1)).laurent_only_x1());
}

TEST_CASE("serial and parallel products agree") {
    Rng rng(7);
    for (int t = 0; t < 10; ++t) {
        CoordPoly a = random_poly(rng, 4, 40, true);
        CoordPoly b = random_poly(rng, 4, 40);
        CHECK(CoordPoly::mul_serial(a, b) == CoordPoly::mul_parallel(a, b));
    }
}

TEST_CASE("partial derivatives") {
    // d(x1^2 x3)/dx1 = 2 x1 x3
    CoordPoly p = x(3, 1, 2) * x(3, 3);
    CHECK(poly_partial(p, 1) == x(3, 1) * x(3, 3) * Rational(2));
    // Laurent power rule: d(x2^3/x1)/dx1 = -x2^3/x1^2
    CoordPoly q = CoordPoly::monomial(Exponents{-1, 3, 0}, Rational(1));
    CHECK(poly_partial(q, 1) == CoordPoly::monomial(Exponents{-2, 3, 0}, Rational(-1)));
    CHECK(poly_partial(x(3, 2), 3).is_zero());
}

TEST_CASE("derivative is linear and Leibniz") {
    Rng rng(11);
    for (int t = 0; t < 20; ++t) {
        CoordPoly a = random_poly(rng, 3, 8, true);
        CoordPoly b = random_poly(rng, 3, 8);
        int i = static_cast<int>(rng.int_in(1, 3));
        CHECK(poly_partial(a + b, i) == poly_partial(a, i) + poly_partial(b, i));
        CHECK(poly_partial(a * b, i) == poly_partial(a, i) * b + a * poly_partial(b, i));
    }
}

TEST_CASE("evaluation") {
    // omega_12 of the first classified structure vanishes at the identity
    CoordPoly w12 = x(2, 1, 2) - x(2, 1, 3);
    std::vector<Rational> e{Rational(1), Rational(0)};
    CHECK(poly_eval(w12, e) == eval_oracle(w12, e));
    CHECK(poly_eval(w12, e).is_zero());

    CoordPoly m = CoordPoly::monomial(Exponents{-1, 3}, Rational(1));
    std::vector<Rational> pt{Rational(2), Rational(3)};
    CHECK(poly_eval(m, pt) == Rational(27, 2));

    std::vector<Rational> zero{Rational(0), Rational(0)};
    CHECK_THROWS_AS(poly_eval(m, zero), std::domain_error);
}

TEST_CASE("evaluation is a ring homomorphism") {
    Rng rng(13);
    for (int t = 0; t < 25; ++t) {
        CoordPoly a = random_poly(rng, 3, 6, true);
        CoordPoly b = random_poly(rng, 3, 6);
        std::vector<Rational> pt{rng.nonzero_rational(), rng.rational(), rng.rational()};
        CHECK(poly_eval(a * b, pt) == poly_eval(a, pt) * poly_eval(b, pt));
        CHECK(poly_eval(a + b, pt) == poly_eval(a, pt) + poly_eval(b, pt));
        CHECK(poly_eval(a, pt) == eval_oracle(a, pt));
    }
}

TEST_CASE("substitution") {
    std::vector<CoordPoly> id{x(2, 1), x(2, 2)};
    CoordPoly p = x(2, 1, 2) - x(2, 1, 3) + x(2, 2);
    CHECK(poly_substitute(p, id) == p);

    // x1 -> x1*y1 (first composition coordinate), expanded by hand
    CoordPoly w12 = x(2, 1, 2) - x(2, 1, 3);
    std::vector<CoordPoly> im{CoordPoly::monomial(Exponents{1, 1}, Rational(1)), x(2, 2)};
    CoordPoly expect = CoordPoly::monomial(Exponents{2, 2}, Rational(1)) -
                       CoordPoly::monomial(Exponents{3, 3}, Rational(1));
    CHECK(poly_substitute(w12, im) == expect);

    // Laurent variable needs a unit image
    CoordPoly inv = x(1, 1, -1);
    CHECK(poly_substitute(inv, {x(1, 1) * Rational(2)}) == x(1, 1, -1) * Rational(1, 2));
    CHECK_THROWS_AS(poly_substitute(inv, {x(1, 1) + CoordPoly::constant(1, Rational(1))}),
                    std::domain_error);
}

TEST_CASE("ring axioms on random polynomials") {
    Rng rng(17);
    for (int t = 0; t < 10; ++t) {
        CoordPoly a = random_poly(rng, 3, 6, true);
        CoordPoly b = random_poly(rng, 3, 6);
        CoordPoly c = random_poly(rng, 3, 6);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
    }
}

TEST_CASE("graded-lex order and bookkeeping") {
    CHECK(graded_weight(Exponents{0, 0, 2}) == 6);
    CHECK(graded_weight(Exponents{-1, 3}) == 5);
    CHECK(monomial_less(Exponents{0, 1}, Exponents{2, 0}));   // same weight, lex breaks the tie
    CHECK(monomial_less(Exponents{1, 0}, Exponents{0, 1}));   // weight 1 < weight 2
    CoordPoly p = x(3, 1) + x(3, 3) + x(3, 2, 2);
    CHECK(p.total_degree() == 4);
    CHECK(p.max_var_used() == 3);
    CHECK(poly_extend(p, 5).nvars() == 5);
    CHECK(poly_shift_vars(x(2, 1), 2, 4) == x(4, 3));
}
