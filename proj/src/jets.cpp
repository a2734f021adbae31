#include "plie/jets.hpp"

#include <stdexcept>

namespace plie {

JetElement jet_make(std::vector<Rational> coords) {
    if (coords.empty()) throw std::invalid_argument("jet_make: empty coordinate list");
    if (coords[0].is_zero()) throw std::invalid_argument("jet_make: x_1 must be nonzero");
    JetElement j;
    j.N = static_cast<int>(coords.size());
    j.x = std::move(coords);
    return j;
}

JetElement jet_identity(int N) {
    std::vector<Rational> c(N, Rational(0));
    c[0] = Rational(1);
    return jet_make(std::move(c));
}

bool jet_is_identity(const JetElement& x) {
    if (x.x[0] != Rational(1)) return false;
    for (int i = 1; i < x.N; ++i)
        if (!x.x[i].is_zero()) return false;
    return true;
}

SeriesQ jet_to_series(const JetElement& x) {
    SeriesQ s(1, ORD_EXACT);
    for (int i = 1; i <= x.N; ++i) s.set(Deg3{i, 0, 0}, x.coord(i));
    return s;
}

JetElement series_to_jet(const SeriesQ& s, int N) {
    if (s.nvars() != 1) throw std::invalid_argument("series_to_jet: univariate series required");
    if (!s.coeff1(0).is_zero()) throw std::invalid_argument("series_to_jet: nonzero constant term");
    std::vector<Rational> c(N, Rational(0));
    for (int i = 1; i <= N; ++i) c[i - 1] = s.coeff1(i);
    return jet_make(std::move(c));
}

SeriesQ series_compose1(const SeriesQ& outer, const SeriesQ& inner, int ord) {
    return series_compose(outer, std::vector<SeriesQ>{inner}, ord);
}

JetElement jet_compose(const JetElement& x, const JetElement& y) {
    if (x.N != y.N) throw std::invalid_argument("jet_compose: order mismatch");
    SeriesQ z = series_compose1(jet_to_series(x), jet_to_series(y), x.N);
    return series_to_jet(z, x.N);
}

JetElement jet_project(const JetElement& x, int M) {
    if (M < 1 || M > x.N) throw std::invalid_argument("jet_project: bad target order");
    return jet_make(std::vector<Rational>(x.x.begin(), x.x.begin() + M));
}

SeriesQ series_invert(const SeriesQ& s, int ord) {
    if (s.nvars() != 1) throw std::invalid_argument("series_invert: univariate series required");
    if (!s.coeff1(0).is_zero()) throw std::invalid_argument("series_invert: nonzero constant term");
    Rational x1 = s.coeff1(1);
    if (x1.is_zero()) throw std::invalid_argument("series_invert: zero linear coefficient");

    // cached powers of s through degree ord
    std::vector<SeriesQ> pw;
    pw.reserve(ord + 1);
    SeriesQ one(1, ORD_EXACT);
    one.set(Deg3{0, 0, 0}, Rational(1));
    pw.push_back(one);
    for (int m = 1; m <= ord; ++m) pw.push_back((pw.back() * s).truncated(ord));

    std::vector<Rational> bar(ord + 1, Rational(0));   // bar[m] = coefficient of u^m in the inverse
    bar[1] = x1.inv();
    for (int k = 2; k <= ord; ++k) {
        Rational acc;
        for (int m = 1; m < k; ++m) acc += bar[m] * pw[m].coeff1(k);
        bar[k] = -acc / x1.pow(k);
    }
    SeriesQ r(1, ord_min(ord, s.ord()));
    for (int m = 1; m <= ord; ++m) r.set(Deg3{m, 0, 0}, bar[m]);
    return r;
}

JetElement jet_invert(const JetElement& x) {
    SeriesQ inv = series_invert(jet_to_series(x), x.N);
    return series_to_jet(inv, x.N);
}

SeriesP symbolic_jet_series(int N, int var_offset, int total_vars) {
    SeriesP s(1, ORD_EXACT);
    for (int i = 1; i <= N; ++i)
        s.set(Deg3{i, 0, 0}, CoordPoly::variable(total_vars, var_offset + i));
    return s;
}

} // namespace plie
