#include "plie/phi.hpp"

#include <stdexcept>

namespace plie {

void phi_validate(const PhiSeries& phi) {
    if (phi.s.nvars() != 2) throw std::domain_error("phi: two formal variables expected");
    for (const auto& [d, c] : phi.s.terms()) {
        if (d[0] < 1 || d[1] < 1)
            throw std::domain_error("phi: series must be divisible by u and by v");
        if (phi.s.coeff2(d[1], d[0]) != -c)
            throw std::domain_error("phi: antisymmetry violated");
    }
}

PhiSeries phi_basic(int d) {
    if (d < 1) throw std::invalid_argument("phi_basic: d >= 1 required");
    PhiSeries phi;
    phi.s = SeriesQ(2, ORD_EXACT);
    phi.s.set(Deg3{d + 1, 1, 0}, Rational(1));
    phi.s.set(Deg3{1, d + 1, 0}, Rational(-1));
    return phi;
}

PhiSeries phi_deformed(int d, const Rational& lam, int ord) {
    if (d < 1) throw std::invalid_argument("phi_deformed: d >= 1 required");
    Rational c = Rational(d - 1) * lam;

    // numerator uv(v^d - u^d) + lam*d*u^2 v^2 (u^{d-1} - v^{d-1})
    SeriesQ num(2, ORD_EXACT);
    num.set(Deg3{1, d + 1, 0}, Rational(1));
    num.set(Deg3{d + 1, 1, 0}, Rational(-1));
    if (!lam.is_zero() && d >= 2) {
        Rational ld = lam * Rational(d);
        num.add(Deg3{d + 1, 2, 0}, ld);
        num.add(Deg3{2, d + 1, 0}, -ld);
    }

    if (c.is_zero()) {
        PhiSeries phi{num, ORD_EXACT, ORD_EXACT};
        phi_validate(phi);
        return phi;
    }

    // 1/(1 - c t) = sum_k c^k t^k, truncated
    auto geometric = [&](int slot) {
        SeriesQ g(2, ord);
        Rational ck(1);
        for (int k = 0; k <= ord; ++k) {
            Deg3 deg{0, 0, 0};
            deg[slot] = k;
            g.set(deg, ck);
            ck *= c;
        }
        return g;
    };
    SeriesQ s = ((num * geometric(0)).truncated(ord) * geometric(1)).truncated(ord);
    PhiSeries phi{s, s.ord() / 2, s.ord()};
    phi_validate(phi);
    return phi;
}

SeriesQ pair_condition_residual(const SeriesQ& f, const SeriesQ& g, int d, const Rational& mu) {
    if (f.nvars() != 1 || g.nvars() != 1)
        throw std::invalid_argument("pair condition: univariate series expected");
    return f.derivative(0) * g - f * g.derivative(0) + f.scaled(Rational(d) * mu);
}

bool pair_condition_check(const SeriesQ& f, const SeriesQ& g, int d, const Rational& mu) {
    return pair_condition_residual(f, g, d, mu).is_zero();
}

PhiSeries phi_from_pair(const SeriesQ& f, const SeriesQ& g, int d, const Rational& mu, int ord) {
    if (mu.is_zero()) throw std::domain_error("phi_from_pair: mu must be nonzero");
    if (f.is_zero() || f.valuation() != d + 1 || f.coeff1(d + 1).is_zero())
        throw std::domain_error("phi_from_pair: f needs a zero of order exactly d+1");
    if (!pair_condition_check(f, g, d, mu))
        throw std::domain_error("phi_from_pair: pair condition residual is nonzero");

    auto embed = [&](const SeriesQ& h, int slot) {
        return series_map_slots(h, std::vector<int>{slot}, 2);
    };
    SeriesQ fu = embed(f, 0), fv = embed(f, 1);
    SeriesQ gu = embed(g, 0), gv = embed(g, 1);
    SeriesQ s = ((fu * gv - fv * gu).scaled(mu.inv())).truncated(ord);
    PhiSeries phi{s, s.ord() >= ORD_EXACT ? ORD_EXACT : s.ord() / 2, s.ord()};
    phi_validate(phi);
    return phi;
}

TruncSeries<Rational> phi_pde_residual(const PhiSeries& phi, int work_ord, int* trusted) {
    work_ord = ord_min(work_ord, phi.total_ord);
    // derivative of phi in its second slot; evaluated at permuted slots below
    SeriesQ d2 = phi.s.derivative(1);

    // slot maps into the (u,v,w) = (0,1,2) trivariate ring
    auto at = [&](const SeriesQ& s, int a, int b) {
        return series_map_slots(s, std::vector<int>{a, b}, 3).truncated(work_ord);
    };

    // phi(u,v)[d2 phi(w,u) + d2 phi(w,v)] + cyclic (u,v,w) -> (v,w,u) -> (w,u,v)
    TruncSeries<Rational> r =
        at(phi.s, 0, 1) * (at(d2, 2, 0) + at(d2, 2, 1)) +
        at(phi.s, 1, 2) * (at(d2, 0, 1) + at(d2, 0, 2)) +
        at(phi.s, 2, 0) * (at(d2, 1, 2) + at(d2, 1, 0));
    r = r.truncated(work_ord);
    if (trusted) *trusted = r.ord();
    return r;
}

} // namespace plie
