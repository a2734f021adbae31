#pragma once

#include "plie/poly.hpp"
#include "plie/rational.hpp"

#include <array>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace plie {

// Degree vector for up to three formal variables (u, v, w); unused slots 0.
using Deg3 = std::array<int, 3>;

// Sentinel for "complete at every total degree" (finite, exactly known series).
inline constexpr int ORD_EXACT = 1 << 28;

inline int ord_min(int a, int b) { return a < b ? a : b; }
inline int ord_add(int a, int b) {
    long long s = static_cast<long long>(a) + b;
    return s >= ORD_EXACT ? ORD_EXACT : static_cast<int>(s);
}

namespace detail {
inline bool coeff_is_zero(const Rational& c) { return c.is_zero(); }
inline bool coeff_is_zero(const CoordPoly& c) { return c.is_zero(); }
inline void coeff_scale(Rational& c, const Rational& q) { c *= q; }
inline void coeff_scale(CoordPoly& c, const Rational& q) { c *= q; }
} // namespace detail

// Formal series in 1..3 variables truncated at a total order. `ord` records
// the largest total degree through which the stored coefficients are
// complete; terms beyond it are unknown, not zero. Finite exactly-known
// series carry ord = ORD_EXACT.
template <class C>
class TruncSeries {
public:
    TruncSeries() : nvars_(1), ord_(ORD_EXACT) {}
    TruncSeries(int nvars, int ord) : nvars_(nvars), ord_(ord) {
        if (nvars < 1 || nvars > 3) throw std::invalid_argument("TruncSeries: 1..3 variables");
    }

    int nvars() const { return nvars_; }
    int ord() const { return ord_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Deg3, C>& terms() const { return terms_; }

    static int total(const Deg3& d) { return d[0] + d[1] + d[2]; }

    // Valuation: minimal total degree of a stored term (ord+1 when empty,
    // i.e. "zero as far as it is known").
    int valuation() const {
        int v = ord_add(ord_, 1);
        for (const auto& [d, c] : terms_) v = ord_min(v, total(d));
        return v;
    }

    void set(const Deg3& d, C c) {
        for (int i = nvars_; i < 3; ++i)
            if (d[i] != 0) throw std::invalid_argument("TruncSeries::set: variable out of range");
        for (int i = 0; i < 3; ++i)
            if (d[i] < 0) throw std::invalid_argument("TruncSeries::set: negative degree");
        if (total(d) > ord_) return;
        if (detail::coeff_is_zero(c))
            terms_.erase(d);
        else
            terms_[d] = std::move(c);
    }

    void add(const Deg3& d, const C& c) {
        if (total(d) > ord_ || detail::coeff_is_zero(c)) return;
        auto [it, fresh] = terms_.try_emplace(d, c);
        if (!fresh) {
            it->second += c;
            if (detail::coeff_is_zero(it->second)) terms_.erase(it);
        }
    }

    // Missing coefficients within ord are genuine zeros.
    C coeff(const Deg3& d) const {
        auto it = terms_.find(d);
        return it == terms_.end() ? C{} : it->second;
    }
    C coeff1(int i) const { return coeff(Deg3{i, 0, 0}); }
    C coeff2(int i, int j) const { return coeff(Deg3{i, j, 0}); }

    TruncSeries truncated(int ord) const {
        TruncSeries r(nvars_, ord_min(ord_, ord));
        for (const auto& [d, c] : terms_)
            if (total(d) <= r.ord_) r.terms_[d] = c;
        return r;
    }

    TruncSeries operator-() const {
        TruncSeries r(*this);
        for (auto& [d, c] : r.terms_) c = C{} - c;
        return r;
    }

    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
        if (a.nvars_ != b.nvars_) throw std::invalid_argument("series add: variable count mismatch");
        TruncSeries r(a.nvars_, ord_min(a.ord_, b.ord_));
        for (const auto& [d, c] : a.terms_)
            if (total(d) <= r.ord_) r.terms_[d] = c;
        for (const auto& [d, c] : b.terms_)
            if (total(d) <= r.ord_) r.add(d, c);
        return r;
    }
    friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) { return a + (-b); }

    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
        if (a.nvars_ != b.nvars_) throw std::invalid_argument("series mul: variable count mismatch");
        // completeness of a product degree: min(ord_a + val_b, ord_b + val_a)
        int ord = ord_min(ord_add(a.ord_, b.valuation()), ord_add(b.ord_, a.valuation()));
        TruncSeries r(a.nvars_, ord);
        for (const auto& [da, ca] : a.terms_)
            for (const auto& [db, cb] : b.terms_) {
                Deg3 d{da[0] + db[0], da[1] + db[1], da[2] + db[2]};
                if (total(d) > ord) continue;
                r.add(d, ca * cb);
            }
        return r;
    }

    TruncSeries& operator+=(const TruncSeries& o) { *this = *this + o; return *this; }
    TruncSeries& operator-=(const TruncSeries& o) { *this = *this - o; return *this; }
    TruncSeries& operator*=(const TruncSeries& o) { *this = *this * o; return *this; }

    TruncSeries scaled(const Rational& q) const {
        if (q.is_zero()) return TruncSeries(nvars_, ord_);
        TruncSeries r(*this);
        for (auto& [d, c] : r.terms_) detail::coeff_scale(c, q);
        return r;
    }

    // Multiplies every coefficient by a ring element.
    TruncSeries scaled_coeff(const C& f) const {
        TruncSeries r(nvars_, ord_);
        for (const auto& [d, c] : terms_) r.add(d, c * f);
        return r;
    }

    friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
        return a.nvars_ == b.nvars_ && a.ord_ == b.ord_ && a.terms_ == b.terms_;
    }

    // Formal derivative in variable slot `var` (0-based). Completeness drops
    // by one total degree.
    TruncSeries derivative(int var) const {
        if (var < 0 || var >= nvars_) throw std::invalid_argument("series derivative: bad variable");
        TruncSeries r(nvars_, ord_ >= ORD_EXACT ? ORD_EXACT : ord_ - 1);
        for (const auto& [d, c] : terms_) {
            if (d[var] == 0) continue;
            Deg3 e = d;
            e[var] -= 1;
            C v = c;
            detail::coeff_scale(v, Rational(d[var]));
            r.add(e, v);
        }
        return r;
    }

    std::string str(const char* names = "uvw") const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [d, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            os << "(" << coeff_str(c) << ")";
            for (int i = 0; i < nvars_; ++i) {
                if (d[i] == 0) continue;
                os << "*" << names[i];
                if (d[i] != 1) os << "^" << d[i];
            }
        }
        return os.str();
    }

private:
    static std::string coeff_str(const Rational& c) { return c.str(); }
    static std::string coeff_str(const CoordPoly& c) { return c.str(); }

    int nvars_;
    int ord_;
    std::map<Deg3, C> terms_;
};

using SeriesQ = TruncSeries<Rational>;
using SeriesP = TruncSeries<CoordPoly>;

// Pure variable u, v or w (slot 0-based) as an exactly-known series.
template <class C>
TruncSeries<C> series_variable(int nvars, int slot, C one) {
    TruncSeries<C> s(nvars, ORD_EXACT);
    Deg3 d{0, 0, 0};
    d[slot] = 1;
    s.set(d, std::move(one));
    return s;
}

// Number of polynomial variables used by the coefficients of s.
inline int poly_nvars_hint(const TruncSeries<CoordPoly>& s) {
    int nv = 0;
    for (const auto& [d, c] : s.terms()) nv = std::max(nv, c.nvars());
    return nv;
}

inline Rational unit_coeff(const TruncSeries<Rational>&) { return Rational(1); }
inline CoordPoly unit_coeff(const TruncSeries<CoordPoly>& s) {
    return CoordPoly::constant(poly_nvars_hint(s), Rational(1));
}

// Substitutes the outer series' variables by `inner[s]`, all living in a
// common target ring. Inner series must have positive valuation, which makes
// the truncated composition exact through the reported order.
template <class C>
TruncSeries<C> series_compose(const TruncSeries<Rational>& outer,
                              const std::vector<TruncSeries<C>>& inner, int work_ord) {
    if (static_cast<int>(inner.size()) != outer.nvars())
        throw std::invalid_argument("series_compose: inner count != outer nvars");
    int tvars = inner.empty() ? 1 : inner[0].nvars();
    int min_val = ORD_EXACT;
    int inner_ord = ORD_EXACT;
    for (const auto& s : inner) {
        if (s.nvars() != tvars) throw std::invalid_argument("series_compose: mixed target rings");
        if (!s.is_zero() && s.valuation() < 1)
            throw std::invalid_argument("series_compose: inner series needs zero constant term");
        min_val = ord_min(min_val, s.valuation());
        inner_ord = ord_min(inner_ord, s.ord());
    }
    // Unknown outer coefficients (total degree > outer.ord) first contribute
    // at total degree (outer.ord+1)*min_val in the target.
    long long tail = min_val >= ORD_EXACT
                         ? ORD_EXACT
                         : static_cast<long long>(ord_add(outer.ord(), 1)) * std::max(min_val, 1) - 1;
    int ord = ord_min(work_ord, static_cast<int>(std::min<long long>(tail, ORD_EXACT)));
    ord = ord_min(ord, inner_ord);

    TruncSeries<C> result(tvars, ord);
    // cached powers per slot
    std::vector<std::vector<TruncSeries<C>>> pw(inner.size());
    auto power = [&](std::size_t slot, int k) -> const TruncSeries<C>& {
        auto& cache = pw[slot];
        if (cache.empty()) {
            TruncSeries<C> one(tvars, ORD_EXACT);
            one.set(Deg3{0, 0, 0}, unit_coeff(inner[slot]));
            cache.push_back(std::move(one));
        }
        while (static_cast<int>(cache.size()) <= k)
            cache.push_back((cache.back() * inner[slot]).truncated(ord));
        return cache[k];
    };
    for (const auto& [d, q] : outer.terms()) {
        // cheap lower bound on where this term lands
        long long base = 0;
        for (int s = 0; s < outer.nvars(); ++s)
            base += static_cast<long long>(d[s]) * std::max(1, ord_min(inner[s].valuation(), ORD_EXACT - 1));
        if (base > ord) continue;
        TruncSeries<C> prod(tvars, ORD_EXACT);
        prod.set(Deg3{0, 0, 0}, unit_coeff(inner[0]));
        for (int s = 0; s < outer.nvars(); ++s)
            if (d[s] > 0) prod = (prod * power(s, d[s])).truncated(ord);
        result += prod.scaled(q);
    }
    return result.truncated(ord);
}

// Composition variant whose outer coefficients live in the target ring
// themselves (used for group elements with symbolic coordinates).
template <class C>
TruncSeries<C> series_compose_coeff(const TruncSeries<C>& outer,
                                    const std::vector<TruncSeries<C>>& inner, int work_ord) {
    if (static_cast<int>(inner.size()) != outer.nvars())
        throw std::invalid_argument("series_compose_coeff: inner count != outer nvars");
    int tvars = inner.empty() ? 1 : inner[0].nvars();
    int min_val = ORD_EXACT;
    int inner_ord = ORD_EXACT;
    for (const auto& s : inner) {
        if (s.nvars() != tvars) throw std::invalid_argument("series_compose_coeff: mixed target rings");
        if (!s.is_zero() && s.valuation() < 1)
            throw std::invalid_argument("series_compose_coeff: inner series needs zero constant term");
        min_val = ord_min(min_val, s.valuation());
        inner_ord = ord_min(inner_ord, s.ord());
    }
    long long tail = min_val >= ORD_EXACT
                         ? ORD_EXACT
                         : static_cast<long long>(ord_add(outer.ord(), 1)) * std::max(min_val, 1) - 1;
    int ord = ord_min(work_ord, static_cast<int>(std::min<long long>(tail, ORD_EXACT)));
    ord = ord_min(ord, inner_ord);

    TruncSeries<C> result(tvars, ord);
    std::vector<std::vector<TruncSeries<C>>> pw(inner.size());
    auto power = [&](std::size_t slot, int k) -> const TruncSeries<C>& {
        auto& cache = pw[slot];
        if (cache.empty()) {
            TruncSeries<C> one(tvars, ORD_EXACT);
            one.set(Deg3{0, 0, 0}, unit_coeff(inner[slot]));
            cache.push_back(std::move(one));
        }
        while (static_cast<int>(cache.size()) <= k)
            cache.push_back((cache.back() * inner[slot]).truncated(ord));
        return cache[k];
    };
    for (const auto& [d, c] : outer.terms()) {
        long long base = 0;
        for (int s = 0; s < outer.nvars(); ++s)
            base += static_cast<long long>(d[s]) * std::max(1, ord_min(inner[s].valuation(), ORD_EXACT - 1));
        if (base > ord) continue;
        TruncSeries<C> prod(tvars, ORD_EXACT);
        prod.set(Deg3{0, 0, 0}, unit_coeff(inner[0]));
        for (int s = 0; s < outer.nvars(); ++s)
            if (d[s] > 0) prod = (prod * power(s, d[s])).truncated(ord);
        result += prod.scaled_coeff(c);
    }
    return result.truncated(ord);
}

// Renames variables: result variable `to[i]` receives outer variable i.
// Used to evaluate a bivariate series at slots (w,u), (v,w) and the like.
template <class C>
TruncSeries<C> series_map_slots(const TruncSeries<C>& s, const std::vector<int>& to, int nvars_out) {
    if (static_cast<int>(to.size()) != s.nvars())
        throw std::invalid_argument("series_map_slots: bad slot map");
    TruncSeries<C> r(nvars_out, s.ord());
    for (const auto& [d, c] : s.terms()) {
        Deg3 e{0, 0, 0};
        for (int i = 0; i < s.nvars(); ++i) e[to[i]] += d[i];
        r.add(e, c);
    }
    return r;
}

} // namespace plie
