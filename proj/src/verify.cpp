#include "plie/verify.hpp"

#include "plie/random.hpp"

#include <sstream>

namespace plie {

bool all_pass(const std::vector<CheckResult>& v) {
    for (const CheckResult& c : v)
        if (!c.pass) return false;
    return true;
}

namespace {

std::string clip(std::string s) {
    constexpr std::size_t limit = 160;
    if (s.size() > limit) s = s.substr(0, limit) + "...";
    return s;
}

CheckResult poly_check(std::string name, std::vector<int> idx, const CoordPoly& residual) {
    CheckResult r;
    r.name = std::move(name);
    r.indices = std::move(idx);
    r.pass = residual.is_zero();
    if (!r.pass) r.residual = clip(residual.str());
    return r;
}

} // namespace

std::vector<CheckResult> check_jacobi(const OmegaTable& w, Exec exec) {
    std::vector<std::array<int, 3>> triples;
    for (int j = 1; j <= w.N(); ++j)
        for (int k = j + 1; k <= w.N(); ++k)
            for (int l = k + 1; l <= w.N(); ++l) triples.push_back({j, k, l});
    std::vector<CheckResult> out(triples.size());
    parallel_for(triples.size(), exec, [&](std::size_t t) {
        auto [j, k, l] = triples[t];
        out[t] = poly_check("jacobi", {j, k, l}, jacobi_residual(w, j, k, l));
    });
    return out;
}

std::vector<CheckResult> check_mult_symbolic(const OmegaTable& w, Exec exec) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i <= w.N(); ++i)
        for (int j = i + 1; j <= w.N(); ++j) pairs.push_back({i, j});
    std::vector<CheckResult> out(pairs.size());
    // each worker owns a substitution cache; caches are not shared across
    // threads, the z polynomials are recomputed per worker lazily
    if (exec == Exec::Parallel && openmp_enabled()) {
#ifdef _OPENMP
#pragma omp parallel
        {
            SymbolicGroupLaw law(w.N());
#pragma omp for schedule(dynamic)
            for (long long t = 0; t < static_cast<long long>(pairs.size()); ++t) {
                auto [i, j] = pairs[t];
                out[t] = poly_check("multiplicativity-symbolic", {i, j},
                                    multiplicativity_residual(w, i, j, law));
            }
        }
#endif
        return out;
    }
    SymbolicGroupLaw law(w.N());
    for (std::size_t t = 0; t < pairs.size(); ++t) {
        auto [i, j] = pairs[t];
        out[t] = poly_check("multiplicativity-symbolic", {i, j},
                            multiplicativity_residual(w, i, j, law));
    }
    return out;
}

std::vector<CheckResult> check_mult_random(const OmegaTable& w, std::uint64_t seed, int samples,
                                           Exec exec) {
    // draw all points up front so the sweep order cannot affect the stream
    Rng rng(seed);
    std::vector<std::pair<JetElement, JetElement>> pts;
    pts.reserve(samples);
    for (int s = 0; s < samples; ++s) {
        JetElement x = rng.jet(w.N());
        JetElement y = rng.jet(w.N());
        pts.emplace_back(std::move(x), std::move(y));
    }
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i <= w.N(); ++i)
        for (int j = i + 1; j <= w.N(); ++j) pairs.push_back({i, j});

    std::vector<CheckResult> out(static_cast<std::size_t>(samples));
    parallel_for(static_cast<std::size_t>(samples), exec, [&](std::size_t s) {
        CheckResult r;
        r.name = "multiplicativity-random";
        r.indices = {static_cast<int>(s)};
        r.pass = true;
        for (auto [i, j] : pairs) {
            Rational v = multiplicativity_residual_at(w, i, j, pts[s].first, pts[s].second);
            if (!v.is_zero()) {
                r.pass = false;
                std::ostringstream os;
                os << "pair (" << i << "," << j << ") residual " << v.str();
                r.residual = os.str();
                break;
            }
        }
        out[s] = r;
    });
    return out;
}

CheckResult check_omega_identity(const OmegaTable& w) {
    CheckResult r;
    r.name = "omega-at-identity";
    r.pass = omega_vanishes_at_identity(w);
    if (!r.pass) r.residual = "some entry is nonzero at e = (1,0,...,0)";
    return r;
}

CheckResult check_omega_locality(const OmegaTable& w) {
    CheckResult r;
    r.name = "omega-locality";
    r.pass = omega_local(w);
    if (!r.pass) r.residual = "entry (i,j) uses a coordinate beyond max(i,j)";
    return r;
}

CheckResult check_phi_invariants(const PhiSeries& phi, const std::string& label) {
    CheckResult r;
    r.name = "phi-invariants[" + label + "]";
    try {
        phi_validate(phi);
    } catch (const std::exception& e) {
        r.pass = false;
        r.residual = e.what();
    }
    return r;
}

CheckResult check_phi_pde(const PhiSeries& phi, int work_ord, const std::string& label,
                          bool expect_zero) {
    int trusted = 0;
    TruncSeries<Rational> res = phi_pde_residual(phi, work_ord, &trusted);
    CheckResult r;
    r.name = std::string(expect_zero ? "phi-pde[" : "phi-pde-nonzero[") + label + "]";
    r.trusted = trusted;
    if (expect_zero) {
        r.pass = res.is_zero();
        if (!r.pass) r.residual = clip(res.str());
    } else {
        r.pass = !res.is_zero();
        if (!r.pass) r.residual = "residual unexpectedly vanishes";
    }
    return r;
}

CheckResult check_inversion(const PhiSeries& phi, const JetElement& x, int work_ord, int index) {
    int trusted = 0;
    SeriesQ res = inversion_residual(phi, x, work_ord, &trusted);
    CheckResult r;
    r.name = "inversion";
    r.indices = {index};
    r.trusted = trusted;
    r.pass = res.is_zero();
    if (!r.pass) r.residual = clip(res.str());
    return r;
}

CheckResult check_group_functional(const PhiSeries& phi, const JetElement& x, const JetElement& y,
                                   int work_ord, int index) {
    int trusted = 0;
    SeriesQ res = group_functional_residual(phi, x, y, work_ord, &trusted);
    CheckResult r;
    r.name = "group-functional";
    r.indices = {index};
    r.trusted = trusted;
    r.pass = res.is_zero();
    if (!r.pass) r.residual = clip(res.str());
    return r;
}

std::vector<CheckResult> check_cocycle(const AlphaTable& alpha, int mmax, Exec exec) {
    std::vector<std::pair<int, int>> pairs;
    for (int n = 0; n <= mmax; ++n)
        for (int m = n + 1; m <= mmax; ++m)
            if (n + m <= alpha.n_cap) pairs.push_back({n, m});
    std::vector<CheckResult> out(pairs.size());
    parallel_for(pairs.size(), exec, [&](std::size_t t) {
        auto [n, m] = pairs[t];
        Wedge2 res = cocycle_residual(alpha, n, m);
        CheckResult r;
        r.name = "cocycle";
        r.indices = {n, m};
        r.trusted = res.trust >= TRUST_EXACT ? -1 : res.trust;
        r.pass = res.trust >= TRUST_EXACT ? res.is_zero() : res.zero_within(res.trust);
        if (!r.pass) {
            std::ostringstream os;
            for (const auto& [ij, v] : res.entries())
                os << " (" << ij.first << "," << ij.second << ")=" << v.str();
            r.residual = clip(os.str());
        }
        out[t] = r;
    });
    return out;
}

std::vector<CheckResult> check_cojacobi(const AlphaTable& alpha, int nmax, Exec exec) {
    std::vector<CheckResult> out(static_cast<std::size_t>(nmax) + 1);
    parallel_for(out.size(), exec, [&](std::size_t t) {
        int n = static_cast<int>(t);
        Tensor3 res = cojacobi_residual(alpha, n);
        CheckResult r;
        r.name = "cojacobi";
        r.indices = {n};
        r.trusted = res.trust >= TRUST_EXACT ? -1 : res.trust;
        r.pass = res.trust >= TRUST_EXACT ? res.is_zero() : res.zero_within(res.trust);
        if (!r.pass) r.residual = "nonzero component within trusted grades";
        out[t] = r;
    });
    return out;
}

CheckResult check_cybe(const Wedge2& r, const std::string& label) {
    Tensor3 res = cybe_residual(r);
    CheckResult c;
    c.name = "cybe[" + label + "]";
    c.trusted = res.trust >= TRUST_EXACT ? -1 : res.trust;
    c.pass = res.trust >= TRUST_EXACT ? res.is_zero() : res.zero_within(res.trust);
    if (!c.pass) c.residual = "nonzero component within trusted grades";
    return c;
}

std::vector<CheckResult> check_pde_system(const OmegaTable& w, const AlphaTable& alpha, Exec exec) {
    std::vector<std::array<int, 3>> tuples;
    for (int n = 1; n <= w.N(); ++n)
        for (int m = 1; m <= n; ++m)
            for (int j = 1; j <= n; ++j) tuples.push_back({j, m, n});
    std::vector<CheckResult> out(tuples.size());
    parallel_for(tuples.size(), exec, [&](std::size_t t) {
        auto [j, m, n] = tuples[t];
        out[t] = poly_check("pde-system", {j, m, n}, pde_system_residual(w, alpha, j, m, n));
    });
    return out;
}

} // namespace plie
