#include "plie/bialgebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace plie {

Rational Wedge2::get(int i, int j) const {
    if (i < 0 || j < 0 || i == j) return Rational(0);
    bool flip = i > j;
    auto it = c_.find(flip ? std::make_pair(j, i) : std::make_pair(i, j));
    if (it == c_.end()) return Rational(0);
    return flip ? -it->second : it->second;
}

void Wedge2::add_wedge(int a, int b, const Rational& v) {
    if (v.is_zero() || a == b) return;
    if (a < 0 || b < 0) throw std::invalid_argument("Wedge2: negative basis index");
    bool flip = a > b;
    auto key = flip ? std::make_pair(b, a) : std::make_pair(a, b);
    auto [it, fresh] = c_.try_emplace(key, Rational(0));
    it->second += flip ? -v : v;
    if (it->second.is_zero()) c_.erase(it);
}

void Wedge2::accumulate(const Wedge2& o, const Rational& scale) {
    for (const auto& [ij, v] : o.c_) add_wedge(ij.first, ij.second, v * scale);
}

bool Wedge2::zero_within(int cap) const {
    for (const auto& [ij, v] : c_)
        if (ij.second <= cap) return false;
    return true;
}

int Wedge2::max_index() const {
    int m = -1;
    for (const auto& [ij, v] : c_) m = std::max(m, ij.second);
    return m;
}

void Tensor3::add(const std::array<int, 3>& idx, const Rational& v) {
    if (v.is_zero()) return;
    auto [it, fresh] = t_.try_emplace(idx, Rational(0));
    it->second += v;
    if (it->second.is_zero()) t_.erase(it);
}

Rational Tensor3::get(const std::array<int, 3>& idx) const {
    auto it = t_.find(idx);
    return it == t_.end() ? Rational(0) : it->second;
}

bool Tensor3::zero_within(int cap) const {
    for (const auto& [idx, v] : t_)
        if (std::max({idx[0], idx[1], idx[2]}) <= cap) return false;
    return true;
}

Tensor3 Tensor3::alternated() const {
    static const int perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
    static const int sgn[6] = {1, 1, 1, -1, -1, -1};
    Tensor3 r;
    r.trust = trust;
    const Rational sixth(1, 6);
    for (const auto& [idx, v] : t_)
        for (int p = 0; p < 6; ++p) {
            std::array<int, 3> out{idx[perms[p][0]], idx[perms[p][1]], idx[perms[p][2]]};
            r.add(out, v * sixth * Rational(sgn[p]));
        }
    return r;
}

namespace {

// Visits every tensor component of an antisymmetric table (both orders).
template <class Fn>
void for_each_component(const Wedge2& t, Fn&& fn) {
    for (const auto& [ij, v] : t.entries()) {
        fn(ij.first, ij.second, v);
        fn(ij.second, ij.first, -v);
    }
}

} // namespace

Wedge2 adjoint2(int n, const Wedge2& t) {
    // e_n.(e_a ^ e_b) = (n-a) e_{n+a} ^ e_b + (n-b) e_a ^ e_{n+b}
    Wedge2 r;
    r.trust = t.trust;
    for (const auto& [ab, v] : t.entries()) {
        r.add_wedge(n + ab.first, ab.second, v * Rational(n - ab.first));
        r.add_wedge(ab.first, n + ab.second, v * Rational(n - ab.second));
    }
    return r;
}

Tensor3 adjoint3(int n, const Tensor3& t) {
    Tensor3 r;
    r.trust = t.trust;
    for (const auto& [idx, v] : t.entries()) {
        r.add({n + idx[0], idx[1], idx[2]}, v * Rational(n - idx[0]));
        r.add({idx[0], n + idx[1], idx[2]}, v * Rational(n - idx[1]));
        r.add({idx[0], idx[1], n + idx[2]}, v * Rational(n - idx[2]));
    }
    return r;
}

Wedge2 coboundary_adjoint(const Wedge2& r, int n) { return adjoint2(n, r); }

Wedge2 coboundary_formula(const Wedge2& r, int n) {
    // pull form of the components: alpha^{ij}_n = (2n-i) r^{i-n,j} + (2n-j) r^{i,j-n}
    Wedge2 out;
    out.trust = r.trust;
    int top = r.max_index() + n;
    for (int i = 0; i <= top; ++i)
        for (int j = i + 1; j <= top; ++j) {
            Rational v = Rational(2 * n - i) * r.get(i - n, j) +
                         Rational(2 * n - j) * r.get(i, j - n);
            out.add_wedge(i, j, v);
        }
    return out;
}

AlphaTable coboundary_table(const Wedge2& r, int n_cap) {
    AlphaTable t;
    t.n_cap = n_cap;
    t.a.reserve(n_cap + 1);
    for (int n = 0; n <= n_cap; ++n) t.a.push_back(coboundary_adjoint(r, n));
    t.exact = r.trust >= TRUST_EXACT;
    t.min_weight = 0;
    bool first = true;
    for (int n = 0; n <= n_cap; ++n)
        for (const auto& [ij, v] : t.a[n].entries()) {
            int w = ij.first + ij.second - n;
            if (first || w < t.min_weight) t.min_weight = w, first = false;
        }
    return t;
}

Wedge2 cocycle_residual(const AlphaTable& alpha, int n, int m) {
    if (n + m > alpha.n_cap) throw std::invalid_argument("cocycle_residual: grade beyond table");
    Wedge2 an = adjoint2(n, alpha.at(m));
    Wedge2 am = adjoint2(m, alpha.at(n));
    Wedge2 res;
    res.accumulate(alpha.at(n + m), Rational(n - m));
    res.accumulate(an, Rational(-1));
    res.accumulate(am, Rational(1));
    res.trust = std::min({alpha.at(n + m).trust, an.trust, am.trust});
    return res;
}

Tensor3 cybe_residual(const Wedge2& r) {
    Tensor3 out;
    out.trust = r.trust;
    for_each_component(r, [&](int i, int j, const Rational& vij) {
        for_each_component(r, [&](int k, int l, const Rational& vkl) {
            Rational c = vij * vkl;
            // [r12,r13]: bracket in slot 1
            out.add({i + k, j, l}, c * Rational(i - k));
            // [r12,r23]: bracket in slot 2
            out.add({i, j + k, l}, c * Rational(j - k));
            // [r13,r23]: bracket in slot 3
            out.add({i, k, j + l}, c * Rational(j - l));
        });
    });
    return out.alternated();
}

Tensor3 cojacobi_residual(const AlphaTable& alpha, int n) {
    if (n > alpha.n_cap) throw std::invalid_argument("cojacobi_residual: grade beyond table");
    Tensor3 raw;
    for_each_component(alpha.at(n), [&](int i, int j, const Rational& v) {
        if (j > alpha.n_cap) return;   // contribution unknown; covered by the trust window
        for_each_component(alpha.at(j), [&](int k, int l, const Rational& w) {
            raw.add({i, k, l}, v * w);
        });
    });
    Tensor3 res;
    for (const auto& [idx, v] : raw.entries()) {
        res.add(idx, v);
        res.add({idx[2], idx[0], idx[1]}, v);
        res.add({idx[1], idx[2], idx[0]}, v);
    }
    // Even an exactly-known table only stores grades up to n_cap, and the
    // middle application reads alpha(e_j) for j up to (pair sum) - min_weight.
    // Output entries with max index <= window are unaffected by the cut.
    int entry_trust = TRUST_EXACT;
    for (const auto& w : alpha.a) entry_trust = std::min(entry_trust, w.trust);
    int budget = std::min(entry_trust, alpha.n_cap);
    int window = (budget + alpha.min_weight) / 2;
    Tensor3 cut;
    cut.trust = std::min(entry_trust, window);
    for (const auto& [idx, v] : res.entries())
        if (std::max({idx[0], idx[1], idx[2]}) <= cut.trust) cut.add(idx, v);
    return cut;
}

Wedge2 alpha_basic(int d, int n) {
    if (d < 1 || n < 0) throw std::invalid_argument("alpha_basic: d >= 1, n >= 0");
    Wedge2 t;
    t.add_wedge(d, n, Rational(2 * n));
    t.add_wedge(0, d + n, Rational(-2 * (n - d)));
    return t;
}

AlphaTable alpha_basic_table(int d, int n_cap) {
    AlphaTable t;
    t.n_cap = n_cap;
    t.exact = true;
    t.min_weight = d;
    for (int n = 0; n <= n_cap; ++n) t.a.push_back(alpha_basic(d, n));
    return t;
}

Wedge2 alpha_deformed(int d, const Rational& lam, int n, int cap) {
    if (d < 1 || n < 0) throw std::invalid_argument("alpha_deformed: d >= 1, n >= 0");
    Wedge2 t;
    t.trust = cap;
    const Rational q = lam * Rational(d - 1);   // geometric ratio (d-1)*lam

    // sum 1: 2 sum_{i >= d+n} (2n-i) [lam (d-1)]^{i-(n+d)} e_0 ^ e_i
    {
        Rational qk(1);
        for (int i = d + n; i <= cap; ++i) {
            t.add_wedge(0, i, Rational(2) * Rational(2 * n - i) * qk);
            qk *= q;
            if (qk.is_zero()) break;
        }
    }
    // sum 2: -2n sum_{i >= d} [lam (d-1)]^{i-d} e_i ^ e_n
    {
        Rational qk(1);
        for (int i = d; i <= cap; ++i) {
            t.add_wedge(i, n, Rational(-2 * n) * qk);
            qk *= q;
            if (qk.is_zero()) break;
        }
    }
    // sums 3 and 4 carry lam^{i+j-(n+d)} (d-1)^{i+j-(n+d+1)}; both exponents
    // are >= 0 on the stated index ranges
    auto mixed = [&](int i, int j) {
        int e_lam = i + j - (n + d);
        int e_dm1 = i + j - (n + d + 1);
        return Rational(2) * lam.pow(e_lam) * Rational(d - 1).pow(e_dm1);
    };
    if (!lam.is_zero() && d >= 2) {
        for (int i = d + n; i <= cap; ++i)
            for (int j = 1; j <= d - 1; ++j)
                t.add_wedge(i, j, Rational(2 * n - i) * mixed(i, j));
        for (int i = d; i <= cap; ++i)
            for (int j = n + 1; j <= d + n - 1; ++j)
                t.add_wedge(i, j, Rational(2 * n - j) * mixed(i, j));
    }
    if (lam.is_zero() || d == 1) t.trust = TRUST_EXACT;
    return t;
}

AlphaTable alpha_deformed_table(int d, const Rational& lam, int n_cap, int cap) {
    AlphaTable t;
    t.n_cap = n_cap;
    t.exact = lam.is_zero() || d == 1;
    t.min_weight = d;
    for (int n = 0; n <= n_cap; ++n) t.a.push_back(alpha_deformed(d, lam, n, cap));
    return t;
}

Wedge2 r_from_lambda(const LambdaTable& t) {
    Wedge2 r;
    r.trust = t.N() - 1;
    for (const auto& [mn, v] : t.upper()) r.add_wedge(mn.first - 1, mn.second - 1, v);
    return r;
}

AlphaTable derive_cocycle_from_omega(const OmegaTable& w) {
    const int N = w.N();
    AlphaTable t;
    t.n_cap = N - 1;
    t.exact = false;
    std::vector<Rational> e(N, Rational(0));
    e[0] = Rational(1);
    t.a.assign(N, Wedge2{});
    bool first = true;
    for (int n = 1; n <= N; ++n) {
        Wedge2& tab = t.a[n - 1];
        tab.trust = N - 1;
        for (int i = 1; i < N; ++i)
            for (int j = i + 1; j <= N; ++j) {
                Rational v = poly_eval(poly_partial(w.upper(i, j), n), e);
                if (v.is_zero()) continue;
                tab.add_wedge(i - 1, j - 1, v);
                int wt = (i - 1) + (j - 1) - (n - 1);
                if (first || wt < t.min_weight) t.min_weight = wt, first = false;
            }
    }
    return t;
}

SolveResult solve_r_from_cocycle(const AlphaTable& alpha, int wmax) {
    SolveResult out;
    int entry_trust = TRUST_EXACT;
    for (const auto& w : alpha.a) entry_trust = std::min(entry_trust, w.trust);
    out.r.trust = std::min(entry_trust, wmax);

    // weights observed in the data, plus the requested range
    std::vector<int> weights;
    for (int w = 0; w <= wmax; ++w) weights.push_back(w);
    for (int n = 0; n <= alpha.n_cap; ++n)
        for (const auto& [ij, v] : alpha.at(n).entries()) {
            int w = ij.first + ij.second - n;
            if (w < 0 && std::find(weights.begin(), weights.end(), w) == weights.end())
                weights.push_back(w);
        }
    std::sort(weights.begin(), weights.end());

    for (int w : weights) {
        // unknowns r^{ij}, i < j, i + j = w
        std::vector<std::pair<int, int>> unknowns;
        for (int i = 0; 2 * i < w; ++i)
            if (w - i >= 0) unknowns.emplace_back(i, w - i);
        std::map<std::pair<int, int>, int> col;
        for (std::size_t k = 0; k < unknowns.size(); ++k) col[unknowns[k]] = static_cast<int>(k);

        RowReducer red(static_cast<int>(unknowns.size()));
        WeightReport rep;
        rep.weight = w;
        for (int n = 0; n <= alpha.n_cap; ++n) {
            int grade = n + w;   // equations live at i + j = n + w
            if (grade < 1) continue;
            for (int i = 0; 2 * i < grade; ++i) {
                int j = grade - i;
                if (j > alpha.at(n).trust) continue;   // data not trusted there
                SparseRow row;
                auto put = [&](int a, int b, const Rational& coef) {
                    if (coef.is_zero() || a < 0 || b < 0 || a == b) return;
                    bool flip = a > b;
                    auto key = flip ? std::make_pair(b, a) : std::make_pair(a, b);
                    auto hit = col.find(key);
                    if (hit == col.end()) return;   // weight mismatch never happens
                    auto [slot, fresh] = row.try_emplace(hit->second, Rational(0));
                    slot->second += flip ? -coef : coef;
                };
                put(i - n, j, Rational(2 * n - i));
                put(i, j - n, Rational(2 * n - j));
                auto fate = red.add_row(std::move(row), alpha.at(n).get(i, j));
                if (fate == RowReducer::RowFate::Inconsistent && rep.offending_grade < 0)
                    rep.offending_grade = n;
            }
        }
        rep.kernel_dim = red.kernel_dim();
        rep.solved = !red.saw_inconsistency();
        if (!rep.solved) {
            out.consistent = false;
            if (out.offending_grade < 0) out.offending_grade = rep.offending_grade;
        } else {
            std::vector<Rational> sol = red.particular_solution();
            for (std::size_t k = 0; k < unknowns.size(); ++k) {
                out.r.add_wedge(unknowns[k].first, unknowns[k].second, sol[k]);
                if (!sol[k].is_zero()) rep.r_components.emplace_back(unknowns[k], sol[k]);
            }
        }
        out.weights.push_back(rep);
    }
    return out;
}

CoordPoly pde_system_residual(const OmegaTable& w, const AlphaTable& alpha, int j, int m, int n) {
    const int N = w.N();
    if (!(1 <= j && j <= n && 1 <= m && m <= n && n <= N))
        throw std::invalid_argument("pde_system_residual: need 1 <= j <= n, 1 <= m <= n <= N");
    CoordPoly res(N);
    CoordPoly wmn = w.get(m, n);
    for (int i = j; i <= n; ++i) {
        CoordPoly d = poly_partial(wmn, i);
        if (d.is_zero()) continue;
        res += CoordPoly::variable(N, i + 1 - j) * d * Rational(i + 1 - j);
    }
    res -= w.get(m + 1 - j, n) * Rational(m + 1 - j);
    res -= w.get(m, n + 1 - j) * Rational(n + 1 - j);
    if (j - 1 <= alpha.n_cap) {
        for (int k = 1; k <= m; ++k)
            for (int l = 1; l <= n; ++l) {
                Rational av = alpha.at(j - 1).get(k - 1, l - 1);
                if (av.is_zero()) continue;
                Exponents e(N, 0);
                e[m - k] += 1;   // x_{m+1-k}
                e[n - l] += 1;   // x_{n+1-l}
                res -= CoordPoly::monomial(std::move(e),
                                           av * Rational(m + 1 - k) * Rational(n + 1 - l));
            }
    }
    return res;
}

namespace {

// Homogeneous monomials of graded weight `weight` in x_1..x_maxvar, as
// exponent vectors of length ring_n.
void enumerate_weighted(int weight, int maxvar, int ring_n, Exponents& cur,
                        std::vector<Exponents>& out) {
    if (weight == 0) {
        out.push_back(cur);
        return;
    }
    // parts are chosen non-increasing, so each monomial is produced once
    for (int v = std::min(weight, maxvar); v >= 1; --v) {
        cur[v - 1] += 1;
        enumerate_weighted(weight - v, v, ring_n, cur, out);
        cur[v - 1] -= 1;
    }
}

std::vector<Exponents> weighted_monomials(int weight, int maxvar, int ring_n) {
    std::vector<Exponents> out;
    Exponents cur(ring_n, 0);
    enumerate_weighted(weight, maxvar, ring_n, cur, out);
    return out;
}

} // namespace

PdeHomogeneousReport pde_homogeneous_kernel(int wmax, int margin) {
    PdeHomogeneousReport rep;
    rep.wmax = wmax;
    rep.margin = margin;
    const int top = wmax + margin;
    const int ring_n = top;   // largest n over admitted pairs is top - 1

    // column space: (pair (m,n), monomial of weight m+n in x_1..x_n)
    struct Pair {
        int m, n;
    };
    std::vector<Pair> pairs;
    for (int s = 3; s <= top; ++s)
        for (int m = 1; 2 * m < s; ++m) pairs.push_back({m, s - m});
    std::map<std::pair<std::pair<int, int>, Exponents>, int> col;
    std::vector<int> col_pair_weight;
    for (const Pair& p : pairs)
        for (const Exponents& e : weighted_monomials(p.m + p.n, p.n, ring_n)) {
            col[{{p.m, p.n}, e}] = static_cast<int>(col_pair_weight.size());
            col_pair_weight.push_back(p.m + p.n);
        }
    rep.unknowns = static_cast<int>(col_pair_weight.size());

    auto col_of = [&](int m, int n, const Exponents& e) -> std::pair<int, int> {
        // returns (column, sign); handles the antisymmetric reordering
        if (m < 1 || n < 1 || m == n) return {-1, 0};
        int sign = 1;
        int a = m, b = n;
        if (a > b) std::swap(a, b), sign = -1;
        auto it = col.find({{a, b}, e});
        if (it == col.end()) return {-1, 0};
        return {it->second, sign};
    };

    RowReducer red(rep.unknowns);
    for (const Pair& p : pairs) {
        for (int j = 2; j <= p.n; ++j) {
            // rows are indexed by the result monomials (weight m+n+1-j)
            std::map<Exponents, SparseRow> rows;
            // left side: sum_i (i+1-j) x_{i+1-j} d/dx_i applied to each basis monomial
            for (const Exponents& e : weighted_monomials(p.m + p.n, p.n, ring_n)) {
                auto [c, s] = col_of(p.m, p.n, e);
                for (int i = j; i <= p.n; ++i) {
                    if (e[i - 1] == 0) continue;
                    Exponents out = e;
                    out[i - 1] -= 1;
                    out[i - j] += 1;   // x_{i+1-j}
                    Rational coef = Rational(i + 1 - j) * Rational(e[i - 1]) * Rational(s);
                    auto [slot, fresh] = rows[out].try_emplace(c, Rational(0));
                    slot->second += coef;
                }
            }
            // right side: -(m+1-j) w_{m+1-j,n} - (n+1-j) w_{m,n+1-j}
            auto rhs_part = [&](int a, int b, int factor) {
                if (factor == 0 || a < 1 || b < 1 || a == b) return;
                int av = std::min(std::max(a, b), ring_n);
                for (const Exponents& e : weighted_monomials(a + b, av, ring_n)) {
                    auto [c, s] = col_of(a, b, e);
                    if (c < 0) continue;
                    auto [slot, fresh] = rows[e].try_emplace(c, Rational(0));
                    slot->second -= Rational(factor) * Rational(s);
                }
            };
            rhs_part(p.m + 1 - j, p.n, p.m + 1 - j);
            rhs_part(p.m, p.n + 1 - j, p.n + 1 - j);
            for (auto& [mono, row] : rows) red.add_row(std::move(row), Rational(0));
        }
        // side condition: brackets vanish at the identity e = (1,0,...,0);
        // at weight m+n only the pure x_1 power evaluates nonzero there
        Exponents pure(ring_n, 0);
        pure[0] = p.m + p.n;
        auto [c, sgn] = col_of(p.m, p.n, pure);
        if (c >= 0) {
            SparseRow row;
            row[c] = Rational(sgn);
            red.add_row(std::move(row), Rational(0));
        }
    }

    rep.kernel_dim_total = red.kernel_dim();
    for (int s = 3; s <= wmax; ++s) rep.kernel_dim_by_weight[s] = 0;
    rep.trivial_within_window = true;
    for (const auto& v : red.kernel_basis()) {
        // a kernel vector may live purely in the margin weights
        std::map<int, bool> touches;
        for (int c = 0; c < rep.unknowns; ++c)
            if (!v[c].is_zero()) touches[col_pair_weight[c]] = true;
        for (const auto& [wt, hit] : touches)
            if (wt <= wmax) {
                rep.kernel_dim_by_weight[wt] += 1;
                rep.trivial_within_window = false;
            }
    }
    return rep;
}

} // namespace plie
