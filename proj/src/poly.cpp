#include "plie/poly.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace plie {

long long graded_weight(const Exponents& e) {
    long long w = 0;
    for (std::size_t i = 0; i < e.size(); ++i) w += static_cast<long long>(i + 1) * e[i];
    return w;
}

bool monomial_less(const Exponents& a, const Exponents& b) {
    long long wa = graded_weight(a), wb = graded_weight(b);
    if (wa != wb) return wa < wb;
    std::size_t n = std::max(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        int32_t ea = i < a.size() ? a[i] : 0;
        int32_t eb = i < b.size() ? b[i] : 0;
        if (ea != eb) return ea < eb;
    }
    return false;
}

namespace {

struct MonoLess {
    bool operator()(const Exponents& a, const Exponents& b) const { return monomial_less(a, b); }
};

Exponents add_exps(const Exponents& a, const Exponents& b) {
    Exponents r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return r;
}

} // namespace

CoordPoly::CoordPoly(int nvars, const Rational& c) : nvars_(nvars) {
    if (!c.is_zero()) terms_.push_back(Term{Exponents(nvars, 0), c});
}

CoordPoly CoordPoly::variable(int nvars, int i, int power, const Rational& c) {
    if (i < 1 || i > nvars) throw std::invalid_argument("CoordPoly::variable: index out of range");
    if (power < 0 && i != 1)
        throw std::invalid_argument("CoordPoly::variable: negative power outside x_1");
    Exponents e(nvars, 0);
    e[i - 1] = power;
    return monomial(std::move(e), c);
}

CoordPoly CoordPoly::monomial(Exponents e, Rational c) {
    CoordPoly p(static_cast<int>(e.size()));
    if (!c.is_zero()) p.terms_.push_back(Term{std::move(e), std::move(c)});
    return p;
}

bool CoordPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    for (int32_t e : terms_[0].exp)
        if (e != 0) return false;
    return true;
}

bool CoordPoly::laurent_only_x1() const {
    for (const Term& t : terms_)
        for (std::size_t i = 1; i < t.exp.size(); ++i)
            if (t.exp[i] < 0) return false;
    return true;
}

int CoordPoly::max_var_used() const {
    int m = 0;
    for (const Term& t : terms_)
        for (int i = static_cast<int>(t.exp.size()); i-- > 0;)
            if (t.exp[i] != 0) { m = std::max(m, i + 1); break; }
    return m;
}

long long CoordPoly::total_degree() const {
    long long d = 0;
    for (const Term& t : terms_) d = std::max(d, graded_weight(t.exp));
    return d;
}

CoordPoly CoordPoly::from_terms(int nvars, std::vector<Term> terms) {
    std::map<Exponents, Rational, MonoLess> acc;
    for (Term& t : terms) {
        t.exp.resize(nvars, 0);
        auto [it, fresh] = acc.try_emplace(std::move(t.exp), t.coef);
        if (!fresh) it->second += t.coef;
    }
    CoordPoly p(nvars);
    p.terms_.reserve(acc.size());
    for (auto& [e, c] : acc)
        if (!c.is_zero()) p.terms_.push_back(Term{e, std::move(c)});
    return p;
}

CoordPoly CoordPoly::operator-() const {
    CoordPoly r(*this);
    for (Term& t : r.terms_) t.coef = -t.coef;
    return r;
}

CoordPoly operator+(const CoordPoly& a, const CoordPoly& b) {
    int nv = std::max(a.nvars_, b.nvars_);
    // merge of two sorted term lists
    CoordPoly r(nv);
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    auto widen = [nv](const Exponents& e) {
        Exponents w(e);
        w.resize(nv, 0);
        return w;
    };
    while (i < a.terms_.size() || j < b.terms_.size()) {
        if (j == b.terms_.size() ||
            (i < a.terms_.size() && monomial_less(a.terms_[i].exp, b.terms_[j].exp))) {
            r.terms_.push_back(Term{widen(a.terms_[i].exp), a.terms_[i].coef});
            ++i;
        } else if (i == a.terms_.size() || monomial_less(b.terms_[j].exp, a.terms_[i].exp)) {
            r.terms_.push_back(Term{widen(b.terms_[j].exp), b.terms_[j].coef});
            ++j;
        } else {
            Rational c = a.terms_[i].coef + b.terms_[j].coef;
            if (!c.is_zero()) r.terms_.push_back(Term{widen(a.terms_[i].exp), std::move(c)});
            ++i, ++j;
        }
    }
    return r;
}

CoordPoly operator-(const CoordPoly& a, const CoordPoly& b) { return a + (-b); }
CoordPoly& CoordPoly::operator+=(const CoordPoly& o) { *this = *this + o; return *this; }
CoordPoly& CoordPoly::operator-=(const CoordPoly& o) { *this = *this - o; return *this; }

CoordPoly& CoordPoly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (Term& t : terms_) t.coef *= c;
    return *this;
}

CoordPoly CoordPoly::mul_serial(const CoordPoly& a, const CoordPoly& b) {
    int nv = std::max(a.nvars_, b.nvars_);
    std::map<Exponents, Rational, MonoLess> acc;
    for (const Term& ta : a.terms_)
        for (const Term& tb : b.terms_) {
            Exponents e = add_exps(ta.exp, tb.exp);
            e.resize(nv, 0);
            auto [it, fresh] = acc.try_emplace(std::move(e), ta.coef * tb.coef);
            if (!fresh) it->second += ta.coef * tb.coef;
        }
    CoordPoly r(nv);
    r.terms_.reserve(acc.size());
    for (auto& [e, c] : acc)
        if (!c.is_zero()) r.terms_.push_back(Term{e, std::move(c)});
    return r;
}

CoordPoly CoordPoly::mul_parallel(const CoordPoly& a, const CoordPoly& b) {
#ifndef _OPENMP
    return mul_serial(a, b);
#else
    if (a.terms_.empty() || b.terms_.empty()) return CoordPoly(std::max(a.nvars_, b.nvars_));
    int nv = std::max(a.nvars_, b.nvars_);
    int nthreads = hardware_threads();
    std::vector<std::map<Exponents, Rational, MonoLess>> partial(nthreads);
#pragma omp parallel num_threads(nthreads)
    {
        int tid = omp_get_thread_num();
        auto& acc = partial[tid];
#pragma omp for schedule(static)
        for (long long i = 0; i < static_cast<long long>(a.terms_.size()); ++i) {
            const Term& ta = a.terms_[i];
            for (const Term& tb : b.terms_) {
                Exponents e = add_exps(ta.exp, tb.exp);
                e.resize(nv, 0);
                auto [it, fresh] = acc.try_emplace(std::move(e), ta.coef * tb.coef);
                if (!fresh) it->second += ta.coef * tb.coef;
            }
        }
    }
    std::map<Exponents, Rational, MonoLess> acc = std::move(partial[0]);
    for (int t = 1; t < nthreads; ++t)
        for (auto& [e, c] : partial[t]) {
            auto [it, fresh] = acc.try_emplace(e, c);
            if (!fresh) it->second += c;
        }
    CoordPoly r(nv);
    r.terms_.reserve(acc.size());
    for (auto& [e, c] : acc)
        if (!c.is_zero()) r.terms_.push_back(Term{e, std::move(c)});
    return r;
#endif
}

CoordPoly operator*(const CoordPoly& a, const CoordPoly& b) {
    // Parallelism lives in the verification sweeps, which multiply many
    // polynomials concurrently; the benchmark shows per-product threading
    // loses to the merge overhead at the sizes this library produces.
    return CoordPoly::mul_serial(a, b);
}

bool operator==(const CoordPoly& a, const CoordPoly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
        if (a.terms_[i].coef != b.terms_[i].coef) return false;
        const Exponents& ea = a.terms_[i].exp;
        const Exponents& eb = b.terms_[i].exp;
        std::size_t n = std::max(ea.size(), eb.size());
        for (std::size_t k = 0; k < n; ++k)
            if ((k < ea.size() ? ea[k] : 0) != (k < eb.size() ? eb[k] : 0)) return false;
    }
    return true;
}

CoordPoly poly_partial(const CoordPoly& p, int i) {
    if (i < 1 || i > p.nvars()) throw std::invalid_argument("poly_partial: index out of range");
    std::vector<Term> out;
    out.reserve(p.terms().size());
    for (const Term& t : p.terms()) {
        int32_t e = t.exp[i - 1];
        if (e == 0) continue;
        Term d{t.exp, t.coef * Rational(e)};
        d.exp[i - 1] = e - 1;
        out.push_back(std::move(d));
    }
    return CoordPoly::from_terms(p.nvars(), std::move(out));
}

Rational poly_eval(const CoordPoly& p, std::span<const Rational> point) {
    if (static_cast<int>(point.size()) < p.max_var_used())
        throw std::invalid_argument("poly_eval: point too short");
    Rational sum;
    for (const Term& t : p.terms()) {
        Rational v = t.coef;
        for (std::size_t i = 0; i < t.exp.size(); ++i) {
            int32_t e = t.exp[i];
            if (e == 0) continue;
            if (point[i].is_zero()) {
                if (e < 0) throw std::domain_error("poly_eval: zero coordinate with negative exponent");
                v = Rational(0);
                break;
            }
            v *= point[i].pow(e);
        }
        sum += v;
    }
    return sum;
}

CoordPoly poly_pow(const CoordPoly& p, int k) {
    if (k < 0) throw std::invalid_argument("poly_pow: negative exponent");
    CoordPoly r = CoordPoly::constant(p.nvars(), Rational(1));
    for (int i = 0; i < k; ++i) r = r * p;
    return r;
}

namespace {

// Unit inverse: defined exactly for single-monomial polynomials.
CoordPoly monomial_inverse(const CoordPoly& m) {
    if (!m.is_monomial()) throw std::domain_error("non-invertible image for a Laurent variable");
    Term t = m.terms()[0];
    for (int32_t& e : t.exp) e = -e;
    t.coef = t.coef.inv();
    return CoordPoly::monomial(std::move(t.exp), std::move(t.coef));
}

} // namespace

CoordPoly poly_substitute(const CoordPoly& p, const std::vector<CoordPoly>& images) {
    if (static_cast<int>(images.size()) < p.max_var_used())
        throw std::invalid_argument("poly_substitute: not enough images");
    int nv_out = 0;
    for (const CoordPoly& im : images) nv_out = std::max(nv_out, im.nvars());
    CoordPoly sum(nv_out);
    // inverse images are computed lazily, only when a negative power shows up
    std::vector<CoordPoly> inv(images.size());
    std::vector<bool> inv_ready(images.size(), false);
    for (const Term& t : p.terms()) {
        CoordPoly prod = CoordPoly::constant(nv_out, t.coef);
        for (std::size_t i = 0; i < t.exp.size(); ++i) {
            int32_t e = t.exp[i];
            if (e == 0) continue;
            if (e > 0) {
                prod = prod * poly_pow(images[i], e);
            } else {
                if (!inv_ready[i]) {
                    inv[i] = monomial_inverse(images[i]);
                    inv_ready[i] = true;
                }
                prod = prod * poly_pow(inv[i], -e);
            }
        }
        sum += prod;
    }
    return sum;
}

CoordPoly poly_extend(const CoordPoly& p, int nvars) {
    if (nvars < p.nvars()) throw std::invalid_argument("poly_extend: cannot shrink");
    std::vector<Term> ts = p.terms();
    for (Term& t : ts) t.exp.resize(nvars, 0);
    return CoordPoly::from_terms(nvars, std::move(ts));
}

CoordPoly poly_shift_vars(const CoordPoly& p, int shift, int nvars_out) {
    std::vector<Term> out;
    out.reserve(p.terms().size());
    for (const Term& t : p.terms()) {
        Exponents e(nvars_out, 0);
        for (std::size_t i = 0; i < t.exp.size(); ++i) {
            if (t.exp[i] == 0) continue;
            std::size_t k = i + static_cast<std::size_t>(shift);
            if (k >= static_cast<std::size_t>(nvars_out))
                throw std::invalid_argument("poly_shift_vars: shift out of range");
            e[k] = t.exp[i];
        }
        out.push_back(Term{std::move(e), t.coef});
    }
    return CoordPoly::from_terms(nvars_out, std::move(out));
}

std::string CoordPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // print leading terms (highest weight) first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Term& t = *it;
        if (!first) os << " + ";
        first = false;
        os << t.coef.str();
        for (std::size_t i = 0; i < t.exp.size(); ++i) {
            if (t.exp[i] == 0) continue;
            os << "*x" << (i + 1);
            if (t.exp[i] != 1) os << "^" << t.exp[i];
        }
    }
    return os.str();
}

} // namespace plie
