#include "plie/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace plie {

namespace {

Rational rat(const ojson& j) {
    if (!j.is_string()) throw std::invalid_argument("json: rational must be a \"p/q\" string");
    return Rational::parse(j.get<std::string>());
}

} // namespace

ojson poly_to_json(const CoordPoly& p) {
    ojson terms = ojson::array();
    for (const Term& t : p.terms()) {
        ojson e = ojson::array();
        for (int32_t x : t.exp) e.push_back(x);
        terms.push_back(ojson{{"exp", e}, {"coef", t.coef.str()}});
    }
    return ojson{{"N", p.nvars()}, {"terms", terms}};
}

CoordPoly poly_from_json(const ojson& j, bool require_laurent_x1) {
    int nv = j.at("N").get<int>();
    std::vector<Term> terms;
    for (const ojson& tj : j.at("terms")) {
        Term t;
        for (const ojson& e : tj.at("exp")) t.exp.push_back(e.get<int32_t>());
        if (static_cast<int>(t.exp.size()) != nv)
            throw std::invalid_argument("json poly: exponent vector length != N");
        if (require_laurent_x1)
            for (std::size_t i = 1; i < t.exp.size(); ++i)
                if (t.exp[i] < 0)
                    throw std::invalid_argument("json poly: negative exponent outside x_1");
        t.coef = rat(tj.at("coef"));
        terms.push_back(std::move(t));
    }
    return CoordPoly::from_terms(nv, std::move(terms));
}

ojson jet_to_json(const JetElement& x) {
    ojson arr = ojson::array();
    for (const Rational& c : x.x) arr.push_back(c.str());
    return ojson{{"N", x.N}, {"x", arr}};
}

JetElement jet_from_json(const ojson& j) {
    int N = j.at("N").get<int>();
    std::vector<Rational> c;
    for (const ojson& v : j.at("x")) c.push_back(rat(v));
    if (static_cast<int>(c.size()) != N) throw std::invalid_argument("json jet: length != N");
    return jet_make(std::move(c));
}

ojson series_to_json(const SeriesQ& s) {
    ojson terms = ojson::array();
    for (const auto& [d, c] : s.terms()) {
        ojson deg = ojson::array();
        for (int i = 0; i < s.nvars(); ++i) deg.push_back(d[i]);
        terms.push_back(ojson{{"deg", deg}, {"coef", c.str()}});
    }
    return ojson{{"k", s.nvars()}, {"Ord", s.ord() >= ORD_EXACT ? -1 : s.ord()}, {"terms", terms}};
}

SeriesQ series_from_json(const ojson& j) {
    int k = j.at("k").get<int>();
    int ord = j.at("Ord").get<int>();
    SeriesQ s(k, ord < 0 ? ORD_EXACT : ord);
    for (const ojson& tj : j.at("terms")) {
        Deg3 d{0, 0, 0};
        int slot = 0;
        for (const ojson& e : tj.at("deg")) {
            if (slot >= k) throw std::invalid_argument("json series: degree vector too long");
            d[slot++] = e.get<int>();
        }
        s.set(d, rat(tj.at("coef")));
    }
    return s;
}

ojson phi_to_json(const PhiSeries& phi) {
    ojson entries = ojson::array();
    for (const auto& [d, c] : phi.s.terms())
        if (d[0] < d[1])
            entries.push_back(ojson{{"i", d[0]}, {"j", d[1]}, {"value", c.str()}});
    return ojson{{"kind", "phi"},
                 {"Ord", phi.total_ord >= ORD_EXACT ? -1 : phi.total_ord},
                 {"rect", phi.rect >= ORD_EXACT ? -1 : phi.rect},
                 {"lambda", entries}};
}

PhiSeries phi_from_json(const ojson& j) {
    int ord = j.at("Ord").get<int>();
    PhiSeries phi;
    phi.s = SeriesQ(2, ORD_EXACT);
    phi.total_ord = ord < 0 ? ORD_EXACT : ord;
    for (const ojson& e : j.at("lambda")) {
        int a = e.at("i").get<int>(), b = e.at("j").get<int>();
        if (!(a < b)) throw std::invalid_argument("json phi: store only i < j entries");
        Rational v = rat(e.at("value"));
        phi.s.set(Deg3{a, b, 0}, v);
        phi.s.set(Deg3{b, a, 0}, -v);
    }
    if (j.contains("rect")) {
        int r = j.at("rect").get<int>();
        phi.rect = r < 0 ? ORD_EXACT : r;
    } else {
        phi.rect = phi.total_ord >= ORD_EXACT ? ORD_EXACT : phi.total_ord / 2;
    }
    phi_validate(phi);
    return phi;
}

ojson mu_to_json(const MuSeq& m) {
    ojson arr = ojson::array();
    for (const Rational& v : m.mu) arr.push_back(v.str());
    return ojson{{"kind", "mu"}, {"d", m.d}, {"N", m.N}, {"mu", arr}};
}

MuSeq mu_from_json(const ojson& j) {
    MuSeq m;
    m.d = j.at("d").get<int>();
    m.N = j.at("N").get<int>();
    for (const ojson& v : j.at("mu")) m.mu.push_back(rat(v));
    mu_validate(m);
    return m;
}

ojson lambda_to_json(const LambdaTable& t, std::optional<int> d) {
    ojson entries = ojson::array();
    for (const auto& [mn, v] : t.upper())
        entries.push_back(ojson{{"m", mn.first}, {"n", mn.second}, {"value", v.str()}});
    ojson out{{"kind", "lambda"}};
    if (d) out["d"] = *d;
    out["N"] = t.N();
    out["lambda"] = entries;
    return out;
}

LambdaTable lambda_from_json(const ojson& j) {
    LambdaTable t(j.at("N").get<int>());
    for (const ojson& e : j.at("lambda")) {
        int m = e.at("m").get<int>(), n = e.at("n").get<int>();
        if (!(m < n)) throw std::invalid_argument("json lambda: store only m < n entries");
        t.set(m, n, rat(e.at("value")));
    }
    return t;
}

ojson omega_to_json(const OmegaTable& w, std::optional<int> d) {
    ojson entries = ojson::array();
    for (int i = 1; i < w.N(); ++i)
        for (int j = i + 1; j <= w.N(); ++j)
            if (!w.upper(i, j).is_zero())
                entries.push_back(ojson{{"i", i}, {"j", j}, {"poly", poly_to_json(w.upper(i, j))}});
    ojson out{{"kind", "omega"}};
    if (d) out["d"] = *d;
    out["N"] = w.N();
    out["omega"] = entries;
    return out;
}

OmegaTable omega_from_json(const ojson& j) {
    OmegaTable w(j.at("N").get<int>());
    for (const ojson& e : j.at("omega")) {
        int a = e.at("i").get<int>(), b = e.at("j").get<int>();
        CoordPoly p = poly_from_json(e.at("poly"));
        if (p.nvars() != w.N()) p = poly_extend(p, w.N());
        w.set(a, b, std::move(p));
    }
    return w;
}

ojson rmatrix_to_json(const Wedge2& r) {
    ojson entries = ojson::array();
    for (const auto& [ij, v] : r.entries())
        entries.push_back(ojson{{"i", ij.first}, {"j", ij.second}, {"value", v.str()}});
    return ojson{{"kind", "r"},
                 {"trust", r.trust >= TRUST_EXACT ? -1 : r.trust},
                 {"r", entries}};
}

Wedge2 rmatrix_from_json(const ojson& j) {
    Wedge2 r;
    int trust = j.at("trust").get<int>();
    r.trust = trust < 0 ? TRUST_EXACT : trust;
    for (const ojson& e : j.at("r")) {
        int a = e.at("i").get<int>(), b = e.at("j").get<int>();
        if (!(a < b)) throw std::invalid_argument("json r: store only i < j entries");
        r.add_wedge(a, b, rat(e.at("value")));
    }
    return r;
}

ojson alpha_to_json(const AlphaTable& a) {
    ojson grades = ojson::array();
    for (int n = 0; n <= a.n_cap; ++n) {
        ojson entries = ojson::array();
        for (const auto& [ij, v] : a.at(n).entries())
            entries.push_back(ojson{{"i", ij.first}, {"j", ij.second}, {"value", v.str()}});
        grades.push_back(ojson{
            {"n", n},
            {"trust", a.at(n).trust >= TRUST_EXACT ? -1 : a.at(n).trust},
            {"entries", entries}});
    }
    return ojson{{"kind", "alpha"},
                 {"n_cap", a.n_cap},
                 {"min_weight", a.min_weight},
                 {"exact", a.exact},
                 {"alpha", grades}};
}

AlphaTable alpha_from_json(const ojson& j) {
    AlphaTable a;
    a.n_cap = j.at("n_cap").get<int>();
    a.min_weight = j.at("min_weight").get<int>();
    a.exact = j.at("exact").get<bool>();
    a.a.assign(a.n_cap + 1, Wedge2{});
    for (const ojson& g : j.at("alpha")) {
        int n = g.at("n").get<int>();
        if (n < 0 || n > a.n_cap) throw std::invalid_argument("json alpha: grade out of range");
        Wedge2& t = a.a[n];
        int trust = g.at("trust").get<int>();
        t.trust = trust < 0 ? TRUST_EXACT : trust;
        for (const ojson& e : g.at("entries")) {
            int i = e.at("i").get<int>(), jj = e.at("j").get<int>();
            if (!(i < jj)) throw std::invalid_argument("json alpha: store only i < j entries");
            t.add_wedge(i, jj, rat(e.at("value")));
        }
    }
    return a;
}

ojson solve_result_to_json(const SolveResult& s) {
    ojson weights = ojson::array();
    for (const WeightReport& w : s.weights) {
        ojson entry{{"weight", w.weight},
                    {"kernel_dim", w.kernel_dim},
                    {"solved", w.solved}};
        if (!w.solved) entry["offending_grade"] = w.offending_grade;
        ojson comps = ojson::array();
        for (const auto& [ij, v] : w.r_components)
            comps.push_back(ojson{{"i", ij.first}, {"j", ij.second}, {"value", v.str()}});
        entry["r_components"] = comps;
        weights.push_back(entry);
    }
    ojson out{{"consistent", s.consistent}};
    if (!s.consistent) out["offending_grade"] = s.offending_grade;
    out["weights"] = weights;
    out["r"] = rmatrix_to_json(s.r);
    return out;
}

std::string structure_kind(const ojson& j) {
    if (!j.contains("kind")) throw std::invalid_argument("structure file: missing \"kind\"");
    return j.at("kind").get<std::string>();
}

ojson load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    ojson j;
    in >> j;
    return j;
}

void write_json_file(const std::string& path, const ojson& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << j.dump(2) << "\n";
}

} // namespace plie
