#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "plie/json_io.hpp"
#include "plie/random.hpp"

using namespace plie;

namespace {

CoordPoly random_poly(Rng& rng, int nvars, int terms) {
    std::vector<Term> ts;
    for (int t = 0; t < terms; ++t) {
        Exponents e(nvars, 0);
        e[0] = static_cast<int32_t>(rng.int_in(-2, 3));
        for (int v = 1; v < nvars; ++v) e[v] = static_cast<int32_t>(rng.int_in(0, 3));
        ts.push_back(Term{e, rng.rational()});
    }
    return CoordPoly::from_terms(nvars, std::move(ts));
}

} // namespace

TEST_CASE("polynomial round trip is bit exact") {
    Rng rng(113);
    for (int t = 0; t < 20; ++t) {
        CoordPoly p = random_poly(rng, 4, 10);
        ojson j = poly_to_json(p);
        CHECK(poly_from_json(j) == p);
        CHECK(poly_to_json(poly_from_json(j)).dump() == j.dump());
    }
    // schema validation: negative exponents outside x_1 are rejected
    ojson bad = ojson::parse(R"({"N":2,"terms":[{"exp":[0,-1],"coef":"1"}]})");
    CHECK_THROWS_AS(poly_from_json(bad), std::invalid_argument);
    CHECK_NOTHROW(poly_from_json(bad, /*require_laurent_x1=*/false));
    // rationals travel as canonical p/q strings
    ojson q = poly_to_json(CoordPoly::constant(1, Rational(-6, 8)));
    CHECK(q["terms"][0]["coef"] == "-3/4");
}

TEST_CASE("jet round trip") {
    Rng rng(127);
    for (int t = 0; t < 10; ++t) {
        JetElement x = rng.jet(6);
        CHECK(jet_from_json(jet_to_json(x)).x == x.x);
    }
    ojson zero_first = ojson::parse(R"({"N":2,"x":["0","1"]})");
    CHECK_THROWS_AS(jet_from_json(zero_first), std::invalid_argument);
}

TEST_CASE("series and phi round trips") {
    SeriesQ s(2, 9);
    s.set(Deg3{1, 2, 0}, Rational(3, 7));
    s.set(Deg3{4, 0, 0}, Rational(-2));
    CHECK(series_from_json(series_to_json(s)) == s);

    PhiSeries phi = phi_deformed(2, Rational(1, 3), 10);
    PhiSeries back = phi_from_json(phi_to_json(phi));
    CHECK(back.s.terms() == phi.s.terms());
    CHECK(back.rect == phi.rect);
    CHECK(back.total_ord == phi.total_ord);
    // only i < j entries are stored
    ojson pj = phi_to_json(phi);
    for (const ojson& e : pj["lambda"]) CHECK(e["i"].get<int>() < e["j"].get<int>());
}

TEST_CASE("malformed payloads are rejected cleanly") {
    // exponent vector length must match N
    ojson p = ojson::parse(R"({"N":3,"terms":[{"exp":[1,0],"coef":"1"}]})");
    CHECK_THROWS_AS(poly_from_json(p), std::invalid_argument);
    // unparsable rational
    ojson q = ojson::parse(R"({"N":1,"terms":[{"exp":[1],"coef":"1.5"}]})");
    CHECK_THROWS_AS(poly_from_json(q), std::invalid_argument);
    // phi must store only i < j
    ojson f = ojson::parse(R"({"kind":"phi","Ord":6,"lambda":[{"i":2,"j":1,"value":"1"}]})");
    CHECK_THROWS_AS(phi_from_json(f), std::invalid_argument);
    // alpha grades must stay within n_cap
    ojson a = ojson::parse(
        R"({"kind":"alpha","n_cap":2,"min_weight":1,"exact":true,
            "alpha":[{"n":5,"trust":-1,"entries":[]}]})");
    CHECK_THROWS_AS(alpha_from_json(a), std::invalid_argument);
    // missing kind
    ojson k = ojson::parse(R"({"N":1})");
    CHECK_THROWS_AS(structure_kind(k), std::invalid_argument);
}

TEST_CASE("structure files carry their kind") {
    MuSeq m;
    m.d = 1;
    m.N = 4;
    m.mu = {Rational(0), Rational(1), Rational(0), Rational(0)};
    ojson mj = mu_to_json(m);
    CHECK(structure_kind(mj) == "mu");
    MuSeq m2 = mu_from_json(mj);
    CHECK(m2.mu == m.mu);

    LambdaTable lam = lambda_from_mu(m);
    ojson lj = lambda_to_json(lam, 1);
    CHECK(structure_kind(lj) == "lambda");
    LambdaTable lam2 = lambda_from_json(lj);
    CHECK(lam2.get(1, 2) == Rational(1));

    OmegaTable w = omega_from_lambda(lam);
    OmegaTable w2 = omega_from_json(omega_to_json(w, 1));
    for (int i = 1; i < 4; ++i)
        for (int j = i + 1; j <= 4; ++j) CHECK(w.upper(i, j) == w2.upper(i, j));

    Wedge2 r = r_from_lambda(lam);
    Wedge2 r2 = rmatrix_from_json(rmatrix_to_json(r));
    CHECK(r == r2);
    CHECK(r2.trust == r.trust);

    AlphaTable a = alpha_deformed_table(2, Rational(1), 6, 12);
    AlphaTable a2 = alpha_from_json(alpha_to_json(a));
    CHECK(a2.n_cap == a.n_cap);
    CHECK(a2.min_weight == a.min_weight);
    for (int n = 0; n <= a.n_cap; ++n) {
        CHECK(a2.at(n) == a.at(n));
        CHECK(a2.at(n).trust == a.at(n).trust);
    }
}
