#include "npcert/selftest.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include "npcert/criteria.hpp"
#include "npcert/families.hpp"
#include "npcert/int_poly.hpp"
#include "npcert/newton_polygon.hpp"
#include "npcert/oracle.hpp"
#include "npcert/valuation.hpp"

namespace npcert {

namespace {

// Bounded draws are derived from raw engine output by modulo so that
// results do not depend on the standard library's distribution details.
struct Rng {
    std::mt19937_64 eng;
    explicit Rng(std::uint64_t seed) : eng(seed) {}

    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(eng() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

IntPoly random_poly(Rng& rng, int min_deg, int max_deg, int coeff_bound) {
    int deg = static_cast<int>(rng.range(min_deg, max_deg));
    std::vector<BigInt> c(static_cast<std::size_t>(deg) + 1);
    for (int i = 0; i <= deg; ++i) c[static_cast<std::size_t>(i)] = rng.range(-coeff_bound, coeff_bound);
    while (c[0] == 0) c[0] = rng.range(-coeff_bound, coeff_bound);
    while (c.back() == 0) c.back() = rng.range(-coeff_bound, coeff_bound);
    return IntPoly(std::move(c));
}

// Hull vertices by exhaustion: among all abscissa subsets that keep the
// endpoints, exactly one satisfies both vertex conditions (strictly
// increasing chord slopes; no plotted point below a chord). Independent of
// the production hull scan.
std::vector<int> brute_force_hull(const std::vector<LatticePoint>& pts) {
    std::size_t m = pts.size();
    std::vector<int> found;
    int hits = 0;
    for (std::uint32_t mask = 0; mask < (1u << (m - 2)); ++mask) {
        std::vector<LatticePoint> v;
        v.push_back(pts.front());
        for (std::size_t i = 1; i + 1 < m; ++i)
            if (mask & (1u << (i - 1))) v.push_back(pts[i]);
        v.push_back(pts.back());

        bool ok = true;
        for (std::size_t i = 0; i + 2 < v.size() && ok; ++i) {
            __int128 lhs = static_cast<__int128>(v[i + 1].y - v[i].y) * (v[i + 2].x - v[i + 1].x);
            __int128 rhs = static_cast<__int128>(v[i + 2].y - v[i + 1].y) * (v[i + 1].x - v[i].x);
            if (lhs >= rhs) ok = false;
        }
        for (std::size_t i = 0; i + 1 < v.size() && ok; ++i) {
            for (const LatticePoint& p : pts) {
                if (p.x <= v[i].x || p.x >= v[i + 1].x) continue;
                __int128 lhs = static_cast<__int128>(p.y - v[i].y) * (v[i + 1].x - v[i].x);
                __int128 rhs = static_cast<__int128>(v[i + 1].y - v[i].y) * (p.x - v[i].x);
                if (lhs < rhs) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok) {
            ++hits;
            found.clear();
            for (const LatticePoint& p : v) found.push_back(p.x);
        }
    }
    if (hits != 1) return {}; // ambiguity is itself a failure
    return found;
}

struct Failure {
    bool any = false;
    std::string first;
    void record(const std::string& what) {
        if (!any) first = what;
        any = true;
    }
};

const std::vector<std::pair<std::uint64_t, std::uint64_t>> kPrimePairs = {
    {2, 3}, {3, 2}, {2, 5}, {5, 7}};
const std::vector<int> kFamilyMs = {0, 1, 2, 5};

void for_each_family_instance(const std::function<void(int, PrimeP, PrimeP, std::optional<int>, const IntPoly&)>& fn) {
    for (int family = 1; family <= kFamilyCount; ++family) {
        for (auto [pv, qv] : kPrimePairs) {
            PrimeP p = PrimeP::checked(pv), q = PrimeP::checked(qv);
            if (family_takes_m(family)) {
                for (int m : kFamilyMs) fn(family, p, q, m, example_family(family, p, q, m));
            } else {
                fn(family, p, q, std::nullopt, example_family(family, p, q));
            }
        }
    }
}

CheckResult check_family_certification() {
    CheckResult r{"family-certification", false, "", 0};
    Failure fail;
    int count = 0;
    for_each_family_instance([&](int family, PrimeP p, PrimeP q, std::optional<int> m, const IntPoly& f) {
        ++count;
        AutoCheckOptions opts;
        opts.primes = {p, q};
        opts.discover = false;
        Certificate cert = auto_check(f, opts);
        if (cert.verdict != Verdict::Irreducible) {
            std::ostringstream what;
            what << "family " << family << " (p=" << p.value() << ", q=" << q.value();
            if (m) what << ", m=" << *m;
            what << ") not certified";
            fail.record(what.str());
        }
    });
    std::ostringstream detail;
    detail << count << " instantiations";
    if (fail.any)
        detail << "; FIRST FAILURE: " << fail.first;
    else
        detail << ", all certified with their two primes";
    r.detail = detail.str();
    r.passed = !fail.any;
    return r;
}

CheckResult check_family_oracle_concurrence() {
    CheckResult r{"family-oracle-concurrence", false, "", 0};
    Failure fail;
    int count = 0;
    for_each_family_instance([&](int family, PrimeP p, PrimeP q, std::optional<int> m, const IntPoly& f) {
        ++count;
        Factorization fac = kronecker_factorize(f);
        if (fac.status != Factorization::Status::Irreducible) {
            std::ostringstream what;
            what << "family " << family << " (p=" << p.value() << ", q=" << q.value();
            if (m) what << ", m=" << *m;
            what << ") oracle says " << fac.to_string();
            fail.record(what.str());
        }
    });
    std::ostringstream detail;
    detail << count << " instantiations";
    if (fail.any)
        detail << "; FIRST FAILURE: " << fail.first;
    else
        detail << ", oracle agrees on every one";
    r.detail = detail.str();
    r.passed = !fail.any;
    return r;
}

CheckResult check_reference_polygon() {
    CheckResult r{"reference-polygon", false, "", 0};
    IntPoly f = parse_poly("16,4,-4,2,-2,1,2,-1,-1,16,4,32");
    PrimeP two = PrimeP::checked(2);
    NewtonPolygon poly = build_polygon(f, two);
    poly.validate();

    const std::vector<LatticePoint> expected_vertices = {
        {0, 4}, {1, 2}, {5, 0}, {8, 0}, {10, 2}, {11, 5}};
    std::vector<int> expected_widths = {1, 1, 1, 1, 1, 1, 1, 2, 2};

    std::vector<int> widths = segment_widths(poly);
    std::sort(widths.begin(), widths.end());

    std::vector<int> brute = brute_force_hull(poly.points());
    std::vector<int> vertex_abscissae;
    for (const auto& v : poly.vertices()) vertex_abscissae.push_back(v.x);

    bool ok = poly.vertices() == expected_vertices && widths == expected_widths &&
              brute == vertex_abscissae && verify_vertex_conditions(vertex_abscissae, f, two);
    r.passed = ok;
    r.detail = ok ? "vertices and width multiset match; exhaustive subset check concurs"
                  : "polygon mismatch";
    return r;
}

CheckResult check_merge_law(Rng& rng) {
    CheckResult r{"merge-law", false, "", 0};
    Failure fail;
    const int trials = 1000;
    std::vector<PrimeP> primes;
    for (std::uint64_t pv : {2ULL, 3ULL, 5ULL, 7ULL}) primes.push_back(PrimeP::checked(pv));
    for (int trial = 0; trial < trials; ++trial) {
        IntPoly f = random_poly(rng, 1, 6, 100);
        IntPoly g = random_poly(rng, 1, 6, 100);
        IntPoly fg = f * g;
        for (const PrimeP& p : primes) {
            NewtonPolygon direct = build_polygon(fg, p);
            NewtonPolygon merged = merge_polygons(build_polygon(f, p), build_polygon(g, p));
            if (direct.vertices() != merged.vertices() || direct.segments() != merged.segments()) {
                fail.record("trial " + std::to_string(trial) + " at p=" + std::to_string(p.value()));
            }
        }
    }
    std::ostringstream detail;
    detail << trials << " random pairs x 4 primes";
    detail << (fail.any ? "; FIRST FAILURE: " + fail.first : ", exact vertex and segment equality throughout");
    r.detail = detail.str();
    r.passed = !fail.any;
    return r;
}

CheckResult check_soundness_sweep(Rng& rng) {
    CheckResult r{"soundness-sweep", false, "", 0};
    Failure fail;
    const int trials = 10000;
    int certified = 0;
    OracleLimits sweep_limits;
    sweep_limits.max_divisor_candidates = 2'000'000'000;
    for (int trial = 0; trial < trials; ++trial) {
        IntPoly f = random_poly(rng, 2, 8, 50);
        Certificate cert = auto_check(f);
        if (cert.verdict != Verdict::Irreducible) continue;
        ++certified;
        Factorization fac = kronecker_factorize(f, sweep_limits);
        if (fac.status != Factorization::Status::Irreducible)
            fail.record("trial " + std::to_string(trial) + ": " + f.to_coeff_string() + " -> " +
                        fac.to_string());
    }
    std::ostringstream detail;
    detail << trials << " random polynomials, " << certified << " certified";
    detail << (fail.any ? "; FIRST FAILURE: " + fail.first : ", every verdict oracle-confirmed");
    r.detail = detail.str();
    r.passed = !fail.any;
    return r;
}

CheckResult check_factor_degree_law(Rng& rng) {
    CheckResult r{"factor-degree-law", false, "", 0};
    Failure fail;
    const int trials = 1000;
    for (int trial = 0; trial < trials; ++trial) {
        IntPoly g = random_poly(rng, 1, 4, 20);
        IntPoly h = random_poly(rng, 1, 4, 20);
        IntPoly f = g * h;
        int n = f.degree();
        int dmin = std::min(g.degree(), h.degree());

        std::uint64_t bound = 2;
        for (const BigInt& c : f.coeffs())
            if (c != 0 && abs(c) > bound) bound = static_cast<std::uint64_t>(BigInt(abs(c)).get_ui());
        std::vector<PrimeP> primes = candidate_primes(f, bound, PrimeScan::all_coeffs);
        if (primes.empty()) continue; // all coefficients are units

        for (const PrimeP& p : primes) {
            if (!s_p(f, p).contains(dmin))
                fail.record("trial " + std::to_string(trial) + ": min factor degree " +
                            std::to_string(dmin) + " missing from S_p at p=" +
                            std::to_string(p.value()));
        }

        std::vector<std::vector<PrimeP>> subsets;
        for (const PrimeP& p : primes) subsets.push_back({p});
        for (std::size_t i = 0; i < primes.size(); ++i)
            for (std::size_t j = i + 1; j < primes.size(); ++j)
                subsets.push_back({primes[i], primes[j]});
        if (primes.size() > 2) subsets.push_back(primes);
        for (const auto& subset : subsets) {
            int mult = factor_degree_multiple(f, subset);
            if (g.degree() % mult != 0 || h.degree() % mult != 0 || n % mult != 0)
                fail.record("trial " + std::to_string(trial) + ": factor degree not divisible by " +
                            std::to_string(mult));
        }
    }
    std::ostringstream detail;
    detail << trials << " random products";
    detail << (fail.any ? "; FIRST FAILURE: " + fail.first : ", widths and degree multiples agree throughout");
    r.detail = detail.str();
    r.passed = !fail.any;
    return r;
}

CheckResult check_lcm_gcd_identity() {
    CheckResult r{"lcm-gcd-identity", false, "", 0};
    Failure fail;
    long combos = 0;
    for (int n = 1; n <= 60; ++n) {
        std::vector<int> divisors;
        for (int d = 1; d <= n; ++d)
            if (n % d == 0) divisors.push_back(d);
        auto check = [&](std::initializer_list<int> ds) {
            ++combos;
            long long l = 1;
            int g = 0;
            for (int d : ds) {
                l = std::lcm<long long>(l, d);
                g = std::gcd(g, n / d);
            }
            if (l != n / g)
                fail.record("n=" + std::to_string(n) + ": lcm route " + std::to_string(l) +
                            " vs gcd route " + std::to_string(n / g));
        };
        for (int d1 : divisors) {
            check({d1});
            for (int d2 : divisors) {
                check({d1, d2});
                for (int d3 : divisors) check({d1, d2, d3});
            }
        }
    }
    std::ostringstream detail;
    detail << combos << " divisor tuples over n <= 60";
    detail << (fail.any ? "; FIRST FAILURE: " + fail.first : ", both routes agree exactly");
    r.detail = detail.str();
    r.passed = !fail.any;
    return r;
}

CheckResult check_classical_chain(Rng& rng) {
    CheckResult r{"classical-chain", false, "", 0};
    Failure fail;
    const int trials = 200;
    const std::uint64_t prime_pool[] = {2, 3, 5, 7, 11, 13};
    for (int trial = 0; trial < trials; ++trial) {
        PrimeP p = PrimeP::checked(prime_pool[rng.range(0, 5)]);
        int n = static_cast<int>(rng.range(2, 8));
        BigInt pz(static_cast<unsigned long>(p.value()));
        std::vector<BigInt> c(static_cast<std::size_t>(n) + 1);
        for (int i = 1; i < n; ++i) c[static_cast<std::size_t>(i)] = pz * rng.range(-10, 10);
        BigInt lead;
        do {
            lead = rng.range(1, 50);
        } while (mpz_divisible_p(lead.get_mpz_t(), pz.get_mpz_t()));
        c[static_cast<std::size_t>(n)] = lead;
        BigInt low;
        do {
            low = rng.range(-10, 10);
        } while (low == 0 || mpz_divisible_p(low.get_mpz_t(), pz.get_mpz_t()));
        c[0] = pz * low;
        IntPoly f{std::move(c)};

        bool ok = eisenstein(f, p) && dumas_single_prime(f, p) &&
                  theorem_b_verdict(f, {p}) == Verdict::Irreducible &&
                  theorem_a_verdict(f, {p}).verdict == Verdict::Irreducible;
        if (!ok)
            fail.record("trial " + std::to_string(trial) + ": chain broke for " +
                        f.to_coeff_string() + " at p=" + std::to_string(p.value()));
    }
    std::ostringstream detail;
    detail << trials << " generated Eisenstein instances";
    detail << (fail.any ? "; FIRST FAILURE: " + fail.first
                        : ", Eisenstein => Dumas => width-gcd => subset-sum never broke");
    r.detail = detail.str();
    r.passed = !fail.any;
    return r;
}

CheckResult check_negative_controls() {
    CheckResult r{"negative-controls", false, "", 0};
    Failure fail;
    PrimeP two = PrimeP::checked(2);

    IntPoly f1 = parse_poly("4,0,0,0,1"); // x^4 + 4 = (x^2-2x+2)(x^2+2x+2)
    Certificate c1 = auto_check(f1);
    if (c1.verdict != Verdict::Inconclusive) fail.record("x^4+4 not inconclusive");
    if (eisenstein(f1, two) || dumas_single_prime(f1, two)) fail.record("x^4+4 passed a single-prime rule");
    if (theorem_b_verdict(f1, {two}) != Verdict::Inconclusive) fail.record("x^4+4 passed width-gcd");
    auto a1 = theorem_a_verdict(f1, {two});
    if (a1.verdict != Verdict::Inconclusive || a1.residual.to_vector() != std::vector<int>{2})
        fail.record("x^4+4 residual degrees wrong");
    Factorization fac1 = kronecker_factorize(f1);
    IntPoly lo = parse_poly("2,-2,1"), hi = parse_poly("2,2,1");
    bool fac1_ok = fac1.status == Factorization::Status::Factored && fac1.factors.size() == 2 &&
                   fac1.factors[0] == std::make_pair(lo, 1) && fac1.factors[1] == std::make_pair(hi, 1);
    if (!fac1_ok) fail.record("x^4+4 factorization wrong: " + fac1.to_string());

    IntPoly f2 = parse_poly("-1,0,1"); // x^2 - 1 = (x-1)(x+1)
    Certificate c2 = auto_check(f2);
    if (c2.verdict != Verdict::Inconclusive) fail.record("x^2-1 not inconclusive");
    Factorization fac2 = kronecker_factorize(f2);
    IntPoly xm1 = parse_poly("-1,1"), xp1 = parse_poly("1,1");
    bool fac2_ok = fac2.status == Factorization::Status::Factored && fac2.factors.size() == 2 &&
                   fac2.factors[0] == std::make_pair(xm1, 1) && fac2.factors[1] == std::make_pair(xp1, 1);
    if (!fac2_ok) fail.record("x^2-1 factorization wrong: " + fac2.to_string());

    r.passed = !fail.any;
    r.detail = fail.any ? "FIRST FAILURE: " + fail.first
                        : "criteria stay inconclusive; oracle recovers both factorizations";
    return r;
}

} // namespace

std::vector<CheckResult> run_selftest(std::uint64_t seed) {
    Rng rng(seed);
    std::vector<CheckResult> results;
    auto timed = [&](double limit_seconds, auto&& fn) {
        auto t0 = std::chrono::steady_clock::now();
        CheckResult r = fn();
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (limit_seconds > 0 && r.seconds >= limit_seconds) {
            r.passed = false;
            r.detail += "; time limit exceeded";
        }
        results.push_back(std::move(r));
    };

    timed(1.0, [&] { return check_family_certification(); });
    timed(0, [&] { return check_family_oracle_concurrence(); });
    timed(0, [&] { return check_reference_polygon(); });
    timed(10.0, [&] { return check_merge_law(rng); });
    timed(300.0, [&] { return check_soundness_sweep(rng); });
    timed(0, [&] { return check_factor_degree_law(rng); });
    timed(0, [&] { return check_lcm_gcd_identity(); });
    timed(0, [&] { return check_classical_chain(rng); });
    timed(0, [&] { return check_negative_controls(); });
    return results;
}

int report_selftest(const std::vector<CheckResult>& results, std::ostream& out, bool show_timings) {
    int failed = 0;
    for (const auto& r : results) {
        out << (r.passed ? "PASS" : "FAIL") << "  " << r.name << ": " << r.detail;
        if (show_timings) {
            std::ostringstream t;
            t.setf(std::ios::fixed);
            t.precision(2);
            t << r.seconds;
            out << "  [" << t.str() << "s]";
        }
        out << "\n";
        if (!r.passed) ++failed;
    }
    out << (failed == 0 ? "all checks passed" : std::to_string(failed) + " check(s) FAILED") << "\n";
    return failed;
}

} // namespace npcert
