#include "plie/poisson.hpp"

#include <sstream>
#include <stdexcept>

namespace plie {

void mu_validate(const MuSeq& m) {
    if (m.d < 1) throw std::domain_error("mu: d >= 1 required");
    if (m.N < m.d + 1) throw std::domain_error("mu: truncation too small for d");
    if (static_cast<int>(m.mu.size()) != m.N) throw std::domain_error("mu: wrong length");
    for (int n = 1; n <= m.d; ++n)
        if (!m.at(n).is_zero()) throw std::domain_error("mu: entries up to d must vanish");
    if (m.at(m.d + 1).is_zero()) throw std::domain_error("mu: mu_{d+1} must be nonzero");
}

Rational LambdaTable::get(int m, int n) const {
    if (m < 1 || n < 1) return Rational(0);
    if (m > N_ || n > N_) throw std::out_of_range("lambda: index beyond truncation");
    if (m == n) return Rational(0);
    bool flip = m > n;
    auto it = c_.find(flip ? std::make_pair(n, m) : std::make_pair(m, n));
    if (it == c_.end()) return Rational(0);
    return flip ? -it->second : it->second;
}

void LambdaTable::set(int m, int n, const Rational& v) {
    if (m < 1 || n < 1 || m > N_ || n > N_) throw std::out_of_range("lambda: bad index");
    if (m == n) {
        if (!v.is_zero()) throw std::domain_error("lambda: nonzero diagonal");
        return;
    }
    auto key = m < n ? std::make_pair(m, n) : std::make_pair(n, m);
    Rational val = m < n ? v : -v;
    if (val.is_zero())
        c_.erase(key);
    else
        c_[key] = val;
}

namespace {

// The row lambda_{d+1,n} for n = 1..N, built by the classification recursion
// (the n = d+1 slot stays zero; that index carries the mu_{2d+1} relation
// instead of a division).
std::vector<Rational> lambda_row(const MuSeq& m, MuRelationMode mode, MuSeq& patched) {
    patched = m;
    int d = m.d, N = m.N;
    const Rational mu_top = m.at(d + 1);
    std::vector<Rational> row(static_cast<std::size_t>(N) + 1, Rational(0));   // row[n] = lambda_{d+1,n}
    for (int n = 1; n <= N; ++n) {
        if (n == d + 1) {
            // dependent coefficient: check or fill mu_{2d+1}
            if (2 * d + 1 <= N) {
                Rational forced = mu_dependent_value(patched);
                if (mode == MuRelationMode::Solve) {
                    patched.mu[2 * d] = forced;
                } else if (patched.at(2 * d + 1) != forced) {
                    std::ostringstream os;
                    os << "mu relation violated: mu_" << (2 * d + 1) << " must equal "
                       << forced.str() << ", got " << patched.at(2 * d + 1).str();
                    throw std::domain_error(os.str());
                }
            }
            continue;
        }
        // mu_{n+d} beyond the stored range is zero by the truncation choice
        Rational bracket = Rational(d) * mu_top * patched.at(n + d);
        for (int s = 1; s < n; ++s) {
            // lambda_{s,d+1} = -lambda_{d+1,s}; the seed lambda_{1,d+1} = mu_{d+1}
            Rational lam_s_dp1 = -row[s];
            bracket -= Rational(n + d - 2 * s + 1) * patched.at(n + d - s + 1) * lam_s_dp1;
        }
        row[n] = -bracket / (Rational(d - n + 1) * mu_top);
    }
    return row;
}

} // namespace

Rational mu_dependent_value(const MuSeq& m) {
    int d = m.d;
    if (d == 1) return Rational(0);   // empty constraint sum
    // needs lambda_{s,d+1} for s = 2..d, i.e. the recursion below n = d+1 only
    const Rational mu_top = m.at(d + 1);
    std::vector<Rational> row(static_cast<std::size_t>(d) + 1, Rational(0));
    for (int n = 1; n <= d; ++n) {
        Rational bracket = Rational(d) * mu_top * m.at(n + d);
        for (int s = 1; s < n; ++s)
            bracket -= Rational(n + d - 2 * s + 1) * m.at(n + d - s + 1) * (-row[s]);
        row[n] = -bracket / (Rational(d - n + 1) * mu_top);
    }
    Rational sum;
    for (int s = 2; s <= d; ++s)
        sum += Rational(2 * (d + 1 - s)) * m.at(2 * d + 2 - s) * (-row[s]);
    return -sum / (Rational(d) * mu_top);
}

LambdaTable lambda_from_mu(const MuSeq& m, MuRelationMode mode) {
    mu_validate(m);
    MuSeq patched;
    std::vector<Rational> row = lambda_row(m, mode, patched);
    const Rational mu_top = patched.at(m.d + 1);

    LambdaTable t(m.N);
    for (int n = 1; n <= m.N; ++n) t.set(m.d + 1, n, row[n]);
    for (int mm = 1; mm < m.d + 1; ++mm)
        for (int nn = mm + 1; nn <= m.N; ++nn)
            if (nn != m.d + 1)
                t.set(mm, nn, (patched.at(mm) * row[nn] - patched.at(nn) * row[mm]) / mu_top);
    for (int mm = m.d + 2; mm <= m.N; ++mm)
        for (int nn = mm + 1; nn <= m.N; ++nn)
            t.set(mm, nn, (patched.at(mm) * row[nn] - patched.at(nn) * row[mm]) / mu_top);
    return t;
}

MuSeq mu_random_admissible(int d, int N, Rng& rng) {
    MuSeq m;
    m.d = d;
    m.N = N;
    m.mu.assign(N, Rational(0));
    m.mu[d] = rng.nonzero_rational();
    for (int n = d + 2; n <= N; ++n) m.mu[n - 1] = rng.rational();
    if (2 * d + 1 <= N) m.mu[2 * d] = mu_dependent_value(m);
    mu_validate(m);
    return m;
}

PhiSeries phi_from_lambda(const LambdaTable& t) {
    PhiSeries phi;
    phi.s = SeriesQ(2, ORD_EXACT);
    for (const auto& [mn, v] : t.upper()) {
        phi.s.set(Deg3{mn.first, mn.second, 0}, v);
        phi.s.set(Deg3{mn.second, mn.first, 0}, -v);
    }
    phi.rect = t.N();
    phi.total_ord = t.N() + 1;
    phi_validate(phi);
    return phi;
}

LambdaTable lambda_from_phi(const PhiSeries& phi, int N) {
    if (phi.rect < N) throw std::domain_error("lambda_from_phi: phi not complete to N");
    LambdaTable t(N);
    for (int m = 1; m < N; ++m)
        for (int n = m + 1; n <= N; ++n) t.set(m, n, phi.lambda(m, n));
    return t;
}

const CoordPoly& OmegaTable::upper(int i, int j) const {
    if (!(1 <= i && i < j && j <= N_)) throw std::out_of_range("omega: need 1 <= i < j <= N");
    return w_[static_cast<std::size_t>(i - 1) * N_ + (j - 1)];
}

CoordPoly OmegaTable::get(int i, int j) const {
    // total function below the index range (entries there vanish by
    // convention); above the truncation nothing is known
    if (i > N_ || j > N_) throw std::out_of_range("omega: index beyond truncation");
    if (i < 1 || j < 1 || i == j) return CoordPoly(N_);
    if (i < j) return upper(i, j);
    return -upper(j, i);
}

void OmegaTable::set(int i, int j, CoordPoly p) {
    if (!(1 <= i && i < j && j <= N_)) throw std::out_of_range("omega: need 1 <= i < j <= N");
    w_[static_cast<std::size_t>(i - 1) * N_ + (j - 1)] = std::move(p);
}

OmegaTable OmegaTable::projected(int M) const {
    if (M < 1 || M > N_) throw std::out_of_range("omega projection: bad order");
    OmegaTable r(M);
    for (int i = 1; i < M; ++i)
        for (int j = i + 1; j <= M; ++j) {
            const CoordPoly& p = upper(i, j);
            if (p.max_var_used() > M)
                throw std::domain_error("omega projection: entry uses coordinates beyond target order");
            r.set(i, j, p);
        }
    return r;
}

bool OmegaTable::entries_polynomial() const {
    for (int i = 1; i < N_; ++i)
        for (int j = i + 1; j <= N_; ++j)
            for (const Term& t : upper(i, j).terms())
                for (int32_t e : t.exp)
                    if (e < 0) return false;
    return true;
}

const CoordPoly& CompositionSums::get(int p, int k) {
    auto key = std::make_pair(p, k);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    CoordPoly value(nvars_);
    if (p >= 1 && k >= p) {
        if (p == 1) {
            if (offset_ + k <= nvars_) value = CoordPoly::variable(nvars_, offset_ + k);
        } else {
            for (int r = 1; r <= k - p + 1; ++r) {
                if (offset_ + r > nvars_) break;
                value += CoordPoly::variable(nvars_, offset_ + r) * get(p - 1, k - r);
            }
        }
    }
    return memo_.emplace(key, std::move(value)).first->second;
}

OmegaTable omega_from_lambda(const LambdaTable& t) {
    const int N = t.N();
    OmegaTable w(N);
    CompositionSums comp(N);
    for (int i = 1; i < N; ++i)
        for (int j = i + 1; j <= N; ++j) {
            CoordPoly entry(N);
            for (int p = 1; p <= i; ++p)
                for (int q = 1; q <= j; ++q) {
                    Rational lam = t.get(i - p + 1, j - q + 1);
                    if (lam.is_zero()) continue;
                    Exponents e(N, 0);
                    e[p - 1] += 1;
                    e[q - 1] += 1;
                    entry += CoordPoly::monomial(std::move(e), Rational(p) * Rational(q) * lam);
                }
            for (int p = 1; p <= i; ++p)
                for (int q = 1; q <= j; ++q) {
                    Rational lam = t.get(p, q);
                    if (lam.is_zero()) continue;
                    entry -= (comp.get(p, i) * comp.get(q, j)) * lam;
                }
            w.set(i, j, std::move(entry));
        }
    return w;
}

OmegaTable omega_special(int d, int N) {
    if (d < 1) throw std::invalid_argument("omega_special: d >= 1 required");
    OmegaTable w(N);
    CompositionSums comp(N);
    auto xvar = [&](int k) {
        return (k >= 1 && k <= N) ? CoordPoly::variable(N, k) : CoordPoly(N);
    };
    for (int i = 1; i < N; ++i)
        for (int j = i + 1; j <= N; ++j) {
            CoordPoly entry = xvar(j) * xvar(i - d) * Rational((i - d) * j) -
                              xvar(i) * xvar(j - d) * Rational(i * (j - d));
            entry += xvar(i) * comp.get(d + 1, j) - xvar(j) * comp.get(d + 1, i);
            w.set(i, j, std::move(entry));
        }
    return w;
}

OmegaTable omega_from_phi(const PhiSeries& phi, int N) {
    if (phi.rect < N) throw std::domain_error("omega_from_phi: phi not complete to N");
    // X(u), X(v) with symbolic coefficients in the bivariate series ring
    SeriesP xu(2, ORD_EXACT), xv(2, ORD_EXACT);
    for (int i = 1; i <= N; ++i) {
        xu.set(Deg3{i, 0, 0}, CoordPoly::variable(N, i));
        xv.set(Deg3{0, i, 0}, CoordPoly::variable(N, i));
    }
    SeriesP xpu = xu.derivative(0);
    SeriesP xpv = xv.derivative(1);

    const int cap = 2 * N;
    // cached powers of X(u) and X(v), truncated at u- resp. v-degree N
    std::vector<SeriesP> pu, pv;
    SeriesP oneu(2, ORD_EXACT);
    oneu.set(Deg3{0, 0, 0}, CoordPoly::constant(N, Rational(1)));
    pu.push_back(oneu);
    pv.push_back(oneu);
    auto trim = [&](const SeriesP& s) {   // keep u,v degrees <= N
        SeriesP r(2, s.ord());
        for (const auto& [dg, c] : s.terms())
            if (dg[0] <= N && dg[1] <= N) r.set(dg, c);
        return r;
    };
    for (int k = 1; k <= N; ++k) {
        pu.push_back(trim((pu.back() * xu).truncated(cap)));
        pv.push_back(trim((pv.back() * xv).truncated(cap)));
    }

    SeriesP omega(2, cap);
    for (const auto& [dg, lam] : phi.s.terms()) {
        int i = dg[0], j = dg[1];
        if (i > N || j > N) continue;
        // phi(u,v) x'(u) x'(v) part: the monomial u^i v^j times the Jacobians
        SeriesP mono(2, ORD_EXACT);
        mono.set(Deg3{i, j, 0}, CoordPoly::constant(N, lam));
        omega += (mono * xpu * xpv).truncated(cap);
        // -phi(x(u), x(v)) part
        omega -= (pu[i] * pv[j]).truncated(cap).scaled(lam);
    }

    OmegaTable w(N);
    for (int i = 1; i < N; ++i)
        for (int j = i + 1; j <= N; ++j) w.set(i, j, omega.coeff2(i, j));
    return w;
}

OmegaTable g3_example() {
    OmegaTable w(3);
    // {x1,x2} = x1 x2
    w.set(1, 2, CoordPoly::monomial(Exponents{1, 1, 0}, Rational(1)));
    // {x1,x3} = 4 x2^2 - 2 x1 x3
    w.set(1, 3, CoordPoly::monomial(Exponents{0, 2, 0}, Rational(4)) +
                    CoordPoly::monomial(Exponents{1, 0, 1}, Rational(-2)));
    // {x2,x3} = 6 x2^3 / x1 - 5 x2 x3
    w.set(2, 3, CoordPoly::monomial(Exponents{-1, 3, 0}, Rational(6)) +
                    CoordPoly::monomial(Exponents{0, 1, 1}, Rational(-5)));
    return w;
}

CoordPoly jacobi_residual(const OmegaTable& w, int j, int k, int l) {
    const int N = w.N();
    CoordPoly res(N);
    for (int i = 1; i <= N; ++i) {
        CoordPoly wij = w.get(i, j), wik = w.get(i, k), wil = w.get(i, l);
        if (!wij.is_zero()) res += wij * poly_partial(w.get(k, l), i);
        if (!wik.is_zero()) res += wik * poly_partial(w.get(l, j), i);
        if (!wil.is_zero()) res += wil * poly_partial(w.get(j, k), i);
    }
    return res;
}

SymbolicGroupLaw::SymbolicGroupLaw(int N) : N_(N) {
    const int nv = 2 * N;
    // z(u) = x(y(u)) with x-coefficients at variables 1..N, y at N+1..2N
    SeriesP xs = symbolic_jet_series(N, 0, nv);
    SeriesP ys = symbolic_jet_series(N, N, nv);
    SeriesP zs = series_compose_coeff(xs, std::vector<SeriesP>{ys}, N);
    z_.reserve(N);
    for (int k = 1; k <= N; ++k) z_.push_back(zs.coeff1(k));
    dzdx_.assign(N, std::vector<CoordPoly>(N));
    dzdy_.assign(N, std::vector<CoordPoly>(N));
    for (int i = 1; i <= N; ++i)
        for (int k = 1; k <= N; ++k) {
            dzdx_[i - 1][k - 1] = poly_partial(z_[i - 1], k);
            dzdy_[i - 1][k - 1] = poly_partial(z_[i - 1], N + k);
        }
}

CoordPoly SymbolicGroupLaw::embed_x(const CoordPoly& p) const { return poly_extend(p, 2 * N_); }
CoordPoly SymbolicGroupLaw::embed_y(const CoordPoly& p) const {
    return poly_shift_vars(p, N_, 2 * N_);
}

CoordPoly SymbolicGroupLaw::substitute(const CoordPoly& p) {
    const int nv = 2 * N_;
    CoordPoly out(nv);
    for (const Term& t : p.terms()) {
        auto it = memo_.find(t.exp);
        if (it == memo_.end()) {
            CoordPoly prod = CoordPoly::constant(nv, Rational(1));
            for (std::size_t m = 0; m < t.exp.size(); ++m) {
                int32_t e = t.exp[m];
                if (e == 0) continue;
                if (e > 0) {
                    prod = prod * poly_pow(z_[m], e);
                } else {
                    // z_1 = x_1 y_1 is a unit; inverses of other z_k never occur
                    const CoordPoly& zm = z_[m];
                    if (!zm.is_monomial())
                        throw std::domain_error("substitute: non-invertible image");
                    Term inv = zm.terms()[0];
                    for (int32_t& ex : inv.exp) ex = -ex;
                    inv.coef = inv.coef.inv();
                    prod = prod * poly_pow(CoordPoly::monomial(inv.exp, inv.coef), -e);
                }
            }
            it = memo_.emplace(t.exp, std::move(prod)).first;
        }
        out += it->second * t.coef;
    }
    return out;
}

CoordPoly multiplicativity_residual(const OmegaTable& w, int i, int j, SymbolicGroupLaw& law) {
    const int N = w.N();
    CoordPoly lhs = law.substitute(w.get(i, j));
    CoordPoly rhs(2 * N);
    for (int k = 1; k < N; ++k)
        for (int l = k + 1; l <= N; ++l) {
            const CoordPoly& wkl = w.upper(k, l);
            if (wkl.is_zero()) continue;
            CoordPoly jx = law.dz_dx(i, k) * law.dz_dx(j, l) - law.dz_dx(i, l) * law.dz_dx(j, k);
            if (!jx.is_zero()) rhs += law.embed_x(wkl) * jx;
            CoordPoly jy = law.dz_dy(i, k) * law.dz_dy(j, l) - law.dz_dy(i, l) * law.dz_dy(j, k);
            if (!jy.is_zero()) rhs += law.embed_y(wkl) * jy;
        }
    return lhs - rhs;
}

Rational multiplicativity_residual_at(const OmegaTable& w, int i, int j, const JetElement& x,
                                      const JetElement& y) {
    const int N = w.N();
    if (x.N != N || y.N != N) throw std::invalid_argument("multiplicativity: order mismatch");
    JetElement z = jet_compose(x, y);

    SeriesQ ys = jet_to_series(y);
    // dz_i/dx_k = [u^i] y(u)^k
    std::vector<SeriesQ> ypow;
    SeriesQ one(1, ORD_EXACT);
    one.set(Deg3{0, 0, 0}, Rational(1));
    ypow.push_back(one);
    for (int k = 1; k <= N; ++k) ypow.push_back((ypow.back() * ys).truncated(N));
    // dz_i/dy_k = [u^{i-k}] x'(y(u))
    SeriesQ xprime = jet_to_series(x).derivative(0);
    SeriesQ xp_y = series_compose1(xprime, ys, N);

    auto jac_x = [&](int a, int k) { return ypow[k].coeff1(a); };
    auto jac_y = [&](int a, int k) { return a >= k ? xp_y.coeff1(a - k) : Rational(0); };

    Rational lhs = poly_eval(w.get(i, j), z.x);
    Rational rhs;
    for (int k = 1; k < N; ++k)
        for (int l = k + 1; l <= N; ++l) {
            const CoordPoly& wkl = w.upper(k, l);
            if (wkl.is_zero()) continue;
            rhs += poly_eval(wkl, x.x) * (jac_x(i, k) * jac_x(j, l) - jac_x(i, l) * jac_x(j, k));
            rhs += poly_eval(wkl, y.x) * (jac_y(i, k) * jac_y(j, l) - jac_y(i, l) * jac_y(j, k));
        }
    return lhs - rhs;
}

SeriesQ omega_series_at(const PhiSeries& phi, const SeriesQ& xs, int work_ord) {
    if (xs.nvars() != 1) throw std::invalid_argument("omega_series_at: univariate x expected");
    work_ord = ord_min(work_ord, phi.total_ord);
    SeriesQ xu = series_map_slots(xs, std::vector<int>{0}, 2);
    SeriesQ xv = series_map_slots(xs, std::vector<int>{1}, 2);
    SeriesQ xpu = series_map_slots(xs.derivative(0), std::vector<int>{0}, 2);
    SeriesQ xpv = series_map_slots(xs.derivative(0), std::vector<int>{1}, 2);
    SeriesQ composed = series_compose(phi.s, std::vector<SeriesQ>{xu, xv}, work_ord);
    return ((phi.s.truncated(work_ord) * xpu * xpv) - composed).truncated(work_ord);
}

SeriesQ group_functional_residual(const PhiSeries& phi, const JetElement& x, const JetElement& y,
                                  int work_ord, int* trusted) {
    if (x.N != y.N) throw std::invalid_argument("group_functional_residual: order mismatch");
    SeriesQ xs = jet_to_series(x), ys = jet_to_series(y);
    SeriesQ zs = series_compose1(xs, ys, work_ord);   // xy in G_infinity through work_ord

    SeriesQ lhs = omega_series_at(phi, zs, work_ord);

    SeriesQ yu = series_map_slots(ys, std::vector<int>{0}, 2);
    SeriesQ yv = series_map_slots(ys, std::vector<int>{1}, 2);
    SeriesQ omega_x = omega_series_at(phi, xs, work_ord);
    SeriesQ mid = series_compose(omega_x, std::vector<SeriesQ>{yu, yv}, work_ord);

    SeriesQ xp_y = series_compose1(xs.derivative(0), ys, work_ord);
    SeriesQ right = omega_series_at(phi, ys, work_ord) *
                    series_map_slots(xp_y, std::vector<int>{0}, 2) *
                    series_map_slots(xp_y, std::vector<int>{1}, 2);

    SeriesQ res = (lhs - mid - right).truncated(work_ord);
    if (trusted) *trusted = res.ord();
    return res;
}

SeriesQ inversion_residual(const PhiSeries& phi, const JetElement& x, int work_ord, int* trusted) {
    SeriesQ xs = jet_to_series(x);
    SeriesQ xbar = series_invert(xs, work_ord);

    SeriesQ xbu = series_map_slots(xbar, std::vector<int>{0}, 2);
    SeriesQ xbv = series_map_slots(xbar, std::vector<int>{1}, 2);
    SeriesQ xbpu = series_map_slots(xbar.derivative(0), std::vector<int>{0}, 2);
    SeriesQ xbpv = series_map_slots(xbar.derivative(0), std::vector<int>{1}, 2);

    SeriesQ omega_x = omega_series_at(phi, xs, work_ord);
    SeriesQ pulled = series_compose(omega_x, std::vector<SeriesQ>{xbu, xbv}, work_ord);
    SeriesQ res = (xbpu * xbpv * pulled + omega_series_at(phi, xbar, work_ord)).truncated(work_ord);
    if (trusted) *trusted = res.ord();
    return res;
}

bool omega_vanishes_at_identity(const OmegaTable& w) {
    std::vector<Rational> e(w.N(), Rational(0));
    e[0] = Rational(1);
    for (int i = 1; i < w.N(); ++i)
        for (int j = i + 1; j <= w.N(); ++j)
            if (!poly_eval(w.upper(i, j), e).is_zero()) return false;
    return true;
}

bool omega_local(const OmegaTable& w) {
    for (int i = 1; i < w.N(); ++i)
        for (int j = i + 1; j <= w.N(); ++j)
            if (w.upper(i, j).max_var_used() > std::max(i, j)) return false;
    return true;
}

} // namespace plie
