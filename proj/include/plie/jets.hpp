#pragma once

#include "plie/rational.hpp"
#include "plie/series.hpp"

#include <vector>

namespace plie {

// A point of the jet group G_N: the truncated series x(u) = sum x_i u^i with
// x_1 != 0, under composition mod u^{N+1}.
struct JetElement {
    int N = 0;
    std::vector<Rational> x;   // x[k] is the coordinate x_{k+1}

    const Rational& coord(int i) const { return x[i - 1]; }
};

JetElement jet_make(std::vector<Rational> coords);
JetElement jet_identity(int N);
bool jet_is_identity(const JetElement& x);

// (xy)(u) = x(y(u)) mod u^{N+1}.
JetElement jet_compose(const JetElement& x, const JetElement& y);

// Two-sided inverse at order N, by triangular back-substitution on
// xbar(x(u)) = u.
JetElement jet_invert(const JetElement& x);

// Drop coordinates beyond M (the projection G_N -> G_M).
JetElement jet_project(const JetElement& x, int M);

// x as the exactly-known polynomial series sum x_i u^i.
SeriesQ jet_to_series(const JetElement& x);
JetElement series_to_jet(const SeriesQ& s, int N);

// Inverse series of a 1-variable series with nonzero linear coefficient,
// computed through total degree `ord`.
SeriesQ series_invert(const SeriesQ& s, int ord);

// Composition of univariate series: outer(inner), truncated.
SeriesQ series_compose1(const SeriesQ& outer, const SeriesQ& inner, int ord);

// The symbolic jet X(u) = sum x_{offset+i} u^i, i = 1..N, with coefficients
// living in a polynomial ring with `total_vars` variables.
SeriesP symbolic_jet_series(int N, int var_offset, int total_vars);

} // namespace plie
