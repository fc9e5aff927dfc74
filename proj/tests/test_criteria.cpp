#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <random>

#include "npcert/criteria.hpp"
#include "npcert/families.hpp"

using namespace npcert;

namespace {

const PrimeP kTwo = PrimeP::checked(2);
const PrimeP kThree = PrimeP::checked(3);
const PrimeP kFive = PrimeP::checked(5);

} // namespace

TEST_CASE("subset sums over segment widths") {
    CHECK(subset_sum_degrees({3, 3}, 3).to_vector() == std::vector<int>{3});
    CHECK(subset_sum_degrees({2, 2, 2}, 3).to_vector() == std::vector<int>{2});
    CHECK(subset_sum_degrees({1, 1, 1, 1}, 2).to_vector() == std::vector<int>{1, 2});
    CHECK(subset_sum_degrees({5}, 4).empty());
    CHECK(subset_sum_degrees({1, 4}, 5).to_vector() == std::vector<int>{1, 4, 5});
    CHECK_THROWS_AS(subset_sum_degrees({}, 3), std::invalid_argument);
    CHECK_THROWS_AS(subset_sum_degrees({1}, 0), std::invalid_argument);
}

TEST_CASE("achievable degree sets per prime") {
    // valuations at 2: (1,1,1,1,0,1,1); at 3: (0,2,2,2,2,2,2)
    IntPoly f = parse_poly("2,18,18,18,9,18,18");
    CHECK(s_p(f, kTwo).to_vector() == std::vector<int>{2});
    CHECK(s_p(f, kThree).to_vector() == std::vector<int>{3});

    CHECK(s_p(parse_poly("2,2,1"), kTwo).empty());
    CHECK(s_p(parse_poly("1,1,1,1,1,1,1"), kTwo).to_vector() == std::vector<int>{1, 2, 3});
}

TEST_CASE("subset-sum intersection engine") {
    IntPoly ex2 = parse_poly("2,18,18,18,9,18,18");
    auto r = theorem_a_verdict(ex2, {kTwo, kThree});
    CHECK(r.verdict == Verdict::Irreducible);
    CHECK(r.residual.empty());

    IntPoly ex1 = parse_poly("27,108,108,108,108,108,4");
    CHECK(theorem_a_verdict(ex1, {kTwo, kThree}).verdict == Verdict::Irreducible);

    IntPoly x4p4 = parse_poly("4,0,0,0,1");
    auto inconclusive = theorem_a_verdict(x4p4, {kTwo});
    CHECK(inconclusive.verdict == Verdict::Inconclusive);
    CHECK(inconclusive.residual.to_vector() == std::vector<int>{2});

    CHECK_THROWS_AS(theorem_a_verdict(ex1, {kTwo, kTwo}), std::invalid_argument);
    CHECK_THROWS_AS(theorem_a_verdict(ex1, {}), std::invalid_argument);
    CHECK_THROWS_AS(theorem_a_verdict(parse_poly("2,1"), {kTwo}), std::domain_error);
}

TEST_CASE("width gcd and the factor degree multiple") {
    IntPoly ex1 = parse_poly("27,108,108,108,108,108,4");
    CHECK(d_p(ex1, kTwo) == 3);
    CHECK(d_p(ex1, kThree) == 2);
    CHECK(d_p(parse_poly("2,2,1"), kTwo) == 2);
    CHECK(d_p(parse_poly("16,4,-4,2,-2,1,2,-1,-1,16,4,32"), kTwo) == 1);

    CHECK(factor_degree_multiple(ex1, {kTwo, kThree}) == 6);
    CHECK(theorem_b_verdict(ex1, {kTwo, kThree}) == Verdict::Irreducible);

    // single-prime degenerate case: the multiple collapses to d_p
    IntPoly single = parse_poly("2,0,1,0,2,0,16"); // widths {2,2,2} at p=2
    CHECK(d_p(single, kTwo) == 2);
    CHECK(factor_degree_multiple(single, {kTwo}) == 2);
    CHECK(theorem_b_verdict(single, {kTwo}) == Verdict::Inconclusive);

    CHECK(theorem_b_verdict(parse_poly("4,0,0,0,1"), {kTwo}) == Verdict::Inconclusive);
    CHECK(factor_degree_multiple(parse_poly("4,0,0,0,1"), {kTwo}) == 2);
    CHECK(theorem_b_verdict(parse_poly("2,2,1"), {kTwo}) == Verdict::Irreducible);

    // equal width gcds at both primes: lcm(2,2) = 2 = 6/gcd(3,3)
    IntPoly both = parse_poly("6,0,1,0,6,0,1296");
    CHECK(d_p(both, kTwo) == 2);
    CHECK(d_p(both, kThree) == 2);
    CHECK(factor_degree_multiple(both, {kTwo, kThree}) == 2);
}

TEST_CASE("Dumas single-prime criterion") {
    // 1 + x + 2x^2: fails directly (interior on the axis) and reversed
    CHECK_FALSE(dumas_single_prime(parse_poly("1,1,2"), kTwo));
    // Eisenstein instance passes through the reciprocal orientation
    CHECK(dumas_single_prime(parse_poly("2,2,1"), kTwo));
    // 2 + 4x^2 + x^3 passes directly
    CHECK(dumas_single_prime(parse_poly("2,0,4,1"), kTwo));

    CHECK_FALSE(dumas_single_prime(parse_poly("4,0,1"), kTwo));   // gcd(2,2) != 1
    CHECK(dumas_single_prime(parse_poly("2,0,1"), kTwo));         // Eisenstein literal
    CHECK_FALSE(dumas_single_prime(parse_poly("1,1,1"), kTwo));   // flat
}

TEST_CASE("Eisenstein criterion") {
    CHECK(eisenstein(parse_poly("2,2,1"), kTwo));
    CHECK_FALSE(eisenstein(parse_poly("4,2,1"), kTwo)); // p^2 | a_0
    CHECK(eisenstein(parse_poly("3,3,1"), kThree));
    CHECK_FALSE(eisenstein(parse_poly("1,2,2"), kTwo)); // p | a_n
    CHECK_FALSE(eisenstein(parse_poly("2,1,1"), kTwo)); // p misses a_1
    CHECK_FALSE(eisenstein(IntPoly::constant(5), kTwo));
    CHECK(eisenstein(parse_poly("2,1"), kTwo));
}

TEST_CASE("auto_check on the example families") {
    Certificate cert = auto_check(parse_poly("27,108,108,108,108,108,4"));
    CHECK(cert.verdict == Verdict::Irreducible);
    CHECK(cert.fired_rule == FiredRule::TheoremB);
    CHECK(cert.factor_degree_multiple == 6);
    CHECK(cert.residual_degrees.empty());
    REQUIRE(cert.per_prime.size() == 2);
    CHECK(cert.per_prime[0].prime.value() == 2);
    CHECK(cert.per_prime[0].d == 3);
    CHECK(cert.per_prime[1].d == 2);
}

TEST_CASE("auto_check rule priority records the weakest sufficient rule") {
    // literal Eisenstein at 2
    Certificate eis = auto_check(parse_poly("2,2,1"));
    CHECK(eis.verdict == Verdict::Irreducible);
    CHECK(eis.fired_rule == FiredRule::Eisenstein);
    CHECK(eis.fired_prime.has_value());
    CHECK(eis.fired_prime->value() == 2);

    // reversed Eisenstein: only the reciprocal orientation works
    Certificate dum = auto_check(parse_poly("1,2,2"));
    CHECK(dum.verdict == Verdict::Irreducible);
    CHECK(dum.fired_rule == FiredRule::DumasSinglePrime);

    // needs both primes: no single-prime rule, width gcds {3, 2}
    Certificate thb = auto_check(parse_poly("27,108,108,108,108,108,4"));
    CHECK(thb.fired_rule == FiredRule::TheoremB);

    // subset sums alone decide: d_2 = 1 kills the width-gcd route
    Certificate tha = auto_check(parse_poly("1,9,18,18,18,18,18"));
    CHECK(tha.verdict == Verdict::Irreducible);
    CHECK(tha.fired_rule == FiredRule::TheoremA);
}

TEST_CASE("auto_check degenerate inputs") {
    CHECK_THROWS_AS(auto_check(IntPoly()), std::domain_error);

    Certificate constant = auto_check(IntPoly::constant(6));
    CHECK(constant.verdict == Verdict::Inconclusive);
    CHECK(constant.fired_rule == FiredRule::None);

    Certificate linear = auto_check(parse_poly("6,3"));
    CHECK(linear.verdict == Verdict::Irreducible);
    CHECK(linear.fired_rule == FiredRule::TrivialDegree);
    CHECK(linear.content == 3);

    Certificate xpow = auto_check(parse_poly("0,0,4,4,1")); // x^2 (x^2+4x+4)... actually x^2*(4+4x+x^2)
    CHECK(xpow.x_power == 2);
    CHECK(xpow.verdict == Verdict::Inconclusive);

    Certificate reducible = auto_check(parse_poly("-4,0,1")); // x^2 - 4
    CHECK(reducible.verdict == Verdict::Inconclusive);

    Certificate no_primes = auto_check(parse_poly("1,1,1"));
    CHECK(no_primes.verdict == Verdict::Inconclusive);
    CHECK(no_primes.per_prime.empty());
    CHECK(no_primes.residual_degrees.to_vector() == std::vector<int>{1});
}

TEST_CASE("explicit primes are honored without discovery") {
    AutoCheckOptions opts;
    opts.primes = {kFive};
    opts.discover = false;
    Certificate cert = auto_check(parse_poly("2,2,1"), opts);
    REQUIRE(cert.per_prime.size() == 1);
    CHECK(cert.per_prime[0].prime.value() == 5);
    CHECK_FALSE(cert.per_prime[0].informative); // 5 divides nothing here
    CHECK(cert.verdict == Verdict::Inconclusive);

    opts.discover = true;
    Certificate with_discovery = auto_check(parse_poly("2,2,1"), opts);
    REQUIRE(with_discovery.per_prime.size() == 2);
    CHECK(with_discovery.per_prime[0].prime.value() == 2);
    CHECK(with_discovery.verdict == Verdict::Irreducible);
}

TEST_CASE("specialization chain on generated Eisenstein instances") {
    std::mt19937_64 rng(41);
    const std::uint64_t pool[] = {2, 3, 5, 7};
    for (int trial = 0; trial < 100; ++trial) {
        PrimeP p = PrimeP::checked(pool[rng() % 4]);
        int n = 2 + static_cast<int>(rng() % 5);
        long pv = static_cast<long>(p.value());
        std::vector<BigInt> c(static_cast<std::size_t>(n) + 1);
        for (int i = 1; i < n; ++i)
            c[static_cast<std::size_t>(i)] = pv * (static_cast<long>(rng() % 11) - 5);
        long lead;
        do {
            lead = 1 + static_cast<long>(rng() % 30);
        } while (lead % pv == 0);
        c[static_cast<std::size_t>(n)] = lead;
        long low;
        do {
            low = static_cast<long>(rng() % 11) - 5;
        } while (low == 0 || low % pv == 0);
        c[0] = pv * low;
        IntPoly f{std::move(c)};

        REQUIRE(eisenstein(f, p));
        CHECK(dumas_single_prime(f, p));
        CHECK(theorem_b_verdict(f, {p}) == Verdict::Irreducible);
        CHECK(theorem_a_verdict(f, {p}).verdict == Verdict::Irreducible);
    }
}

TEST_CASE("adding a prime never weakens the verdict") {
    std::mt19937_64 rng(43);
    PrimeP pool[] = {kTwo, kThree, kFive, PrimeP::checked(7)};
    int done = 0;
    while (done < 150) {
        int deg = 2 + static_cast<int>(rng() % 6);
        std::vector<BigInt> c(static_cast<std::size_t>(deg) + 1);
        for (auto& x : c) x = static_cast<long>(rng() % 81) - 40;
        if (c[0] == 0 || c.back() == 0) continue;
        IntPoly f{std::move(c)};
        ++done;

        std::vector<PrimeP> base = {pool[rng() % 2]};
        PrimeP extra = pool[2 + rng() % 2];
        std::vector<PrimeP> wider = base;
        wider.push_back(extra);

        auto r1 = theorem_a_verdict(f, base);
        auto r2 = theorem_a_verdict(f, wider);
        for (int d : r2.residual.to_vector()) CHECK(r1.residual.contains(d));

        int m1 = factor_degree_multiple(f, base);
        int m2 = factor_degree_multiple(f, wider);
        CHECK(m2 % m1 == 0);
    }
}

TEST_CASE("scaling by a coprime constant leaves evidence unchanged") {
    std::mt19937_64 rng(47);
    AutoCheckOptions opts;
    opts.primes = {kTwo, kThree};
    opts.discover = false;
    int done = 0;
    while (done < 100) {
        int deg = 2 + static_cast<int>(rng() % 5);
        std::vector<BigInt> c(static_cast<std::size_t>(deg) + 1);
        for (auto& x : c) x = static_cast<long>(rng() % 41) - 20;
        if (c[0] == 0 || c.back() == 0) continue;
        IntPoly f{std::move(c)};
        ++done;

        const long scale = 35; // coprime to 2 and 3
        Certificate base = auto_check(f, opts);
        Certificate scaled = auto_check(f * IntPoly::constant(scale), opts);
        CHECK(base.verdict == scaled.verdict);
        CHECK(base.fired_rule == scaled.fired_rule);
        REQUIRE(base.per_prime.size() == scaled.per_prime.size());
        for (std::size_t i = 0; i < base.per_prime.size(); ++i) {
            CHECK(base.per_prime[i].widths == scaled.per_prime[i].widths);
            CHECK(base.per_prime[i].d == scaled.per_prime[i].d);
            CHECK(base.per_prime[i].s == scaled.per_prime[i].s);
            CHECK(base.per_prime[i].polygon.vertices() == scaled.per_prime[i].polygon.vertices());
        }
        CHECK(base.residual_degrees == scaled.residual_degrees);
    }
}

TEST_CASE("certificate JSON has the fixed schema and key order") {
    Certificate cert = auto_check(parse_poly("27,108,108,108,108,108,4"));
    std::string json = cert.to_json();
    auto parsed = nlohmann::ordered_json::parse(json);

    std::vector<std::string> keys;
    for (auto it = parsed.begin(); it != parsed.end(); ++it) keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"polynomial", "degree", "content", "x_power", "primes",
                                           "per_prime", "verdict", "fired_rule",
                                           "factor_degree_multiple", "residual_degrees"});

    CHECK(parsed["polynomial"] == "27,108,108,108,108,108,4");
    CHECK(parsed["degree"] == 6);
    CHECK(parsed["content"] == "1");
    CHECK(parsed["verdict"] == "Irreducible");
    CHECK(parsed["fired_rule"] == "TheoremB");
    CHECK(parsed["factor_degree_multiple"] == 6);
    CHECK(parsed["residual_degrees"].empty());
    REQUIRE(parsed["per_prime"].size() == 2);
    auto& ev = parsed["per_prime"][0];
    std::vector<std::string> ev_keys;
    for (auto it = ev.begin(); it != ev.end(); ++it) ev_keys.push_back(it.key());
    CHECK(ev_keys == std::vector<std::string>{"prime", "vertices", "segment_widths", "d_p", "s_p"});
    CHECK(ev["prime"] == 2);
    CHECK(ev["vertices"] == nlohmann::json::parse("[[0,0],[6,2]]"));
    CHECK(ev["segment_widths"] == nlohmann::json::parse("[3,3]"));
    CHECK(ev["d_p"] == 3);
    CHECK(ev["s_p"] == nlohmann::json::parse("[3]"));
}

TEST_CASE("every example family certifies through the orchestrator") {
    for (int family = 1; family <= kFamilyCount; ++family) {
        AutoCheckOptions opts;
        opts.primes = {kTwo, kThree};
        opts.discover = false;
        std::optional<int> m;
        if (family_takes_m(family)) m = 2;
        IntPoly f = example_family(family, kTwo, kThree, m);
        Certificate cert = auto_check(f, opts);
        CHECK(cert.verdict == Verdict::Irreducible);
    }
}

TEST_CASE("family generator matches the published instantiations") {
    CHECK(example_family(1, kTwo, kThree).to_coeff_string() == "27,108,108,108,108,108,4");
    CHECK(example_family(5, kTwo, kThree).to_coeff_string() == "1,9,9,18,18,18,18");
    CHECK(example_family(3, kTwo, kThree, 0).to_coeff_string() == "1,9,18,18,18,18,18");
    CHECK(example_family(2, kTwo, kThree).to_coeff_string() == "2,18,18,18,9,18,18");

    CHECK_THROWS_AS(example_family(0, kTwo, kThree), std::invalid_argument);
    CHECK_THROWS_AS(example_family(1, kTwo, kTwo), std::invalid_argument);
    CHECK_THROWS_AS(example_family(3, kTwo, kThree), std::invalid_argument);    // missing m
    CHECK_THROWS_AS(example_family(1, kTwo, kThree, 1), std::invalid_argument); // surplus m
    CHECK_THROWS_AS(example_family(3, kTwo, kThree, -1), std::invalid_argument);
}
