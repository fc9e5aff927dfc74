#include "npcert/criteria.hpp"

#include <json.hpp>

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace npcert {

void DegreeSet::insert(int d) {
    if (d < 1 || d >= static_cast<int>(member_.size()))
        throw std::out_of_range("degree outside the set's context");
    member_[static_cast<std::size_t>(d)] = true;
}

bool DegreeSet::empty() const {
    return std::none_of(member_.begin(), member_.end(), [](bool b) { return b; });
}

std::size_t DegreeSet::size() const {
    return static_cast<std::size_t>(std::count(member_.begin(), member_.end(), true));
}

std::vector<int> DegreeSet::to_vector() const {
    std::vector<int> out;
    for (int d = 1; d < static_cast<int>(member_.size()); ++d)
        if (member_[static_cast<std::size_t>(d)]) out.push_back(d);
    return out;
}

DegreeSet intersect(const DegreeSet& a, const DegreeSet& b) {
    DegreeSet out(std::min(a.context(), b.context()));
    for (int d = 1; d <= out.context(); ++d)
        if (a.contains(d) && b.contains(d)) out.insert(d);
    return out;
}

DegreeSet subset_sum_degrees(const std::vector<int>& widths, int cap) {
    if (widths.empty()) throw std::invalid_argument("empty width multiset");
    if (cap < 1) throw std::invalid_argument("cap must be positive");
    std::vector<char> reach(static_cast<std::size_t>(cap) + 1, 0);
    reach[0] = 1;
    for (int w : widths) {
        if (w < 1) throw std::invalid_argument("widths must be positive");
        for (int s = cap; s >= w; --s)
            if (reach[static_cast<std::size_t>(s - w)]) reach[static_cast<std::size_t>(s)] = 1;
    }
    DegreeSet out(cap);
    for (int s = 1; s <= cap; ++s)
        if (reach[static_cast<std::size_t>(s)]) out.insert(s);
    return out;
}

namespace {

void require_criteria_input(const IntPoly& f) {
    if (f.is_zero() || f.constant_term() == 0)
        throw std::domain_error("criteria require a nonzero constant term");
    if (f.degree() < 2) throw std::domain_error("criteria require degree >= 2");
}

void require_distinct(const std::vector<PrimeP>& primes) {
    if (primes.empty()) throw std::invalid_argument("at least one prime required");
    std::set<std::uint64_t> seen;
    for (const PrimeP& p : primes)
        if (!seen.insert(p.value()).second)
            throw std::invalid_argument("duplicate prime " + std::to_string(p.value()));
}

} // namespace

DegreeSet s_p(const IntPoly& f, PrimeP p) {
    require_criteria_input(f);
    int cap = f.degree() / 2;
    return subset_sum_degrees(segment_widths(build_polygon(f, p)), cap);
}

TheoremAResult theorem_a_verdict(const IntPoly& f, const std::vector<PrimeP>& primes) {
    require_criteria_input(f);
    require_distinct(primes);
    DegreeSet residual = s_p(f, primes.front());
    for (std::size_t i = 1; i < primes.size(); ++i)
        residual = intersect(residual, s_p(f, primes[i]));
    return {residual.empty() ? Verdict::Irreducible : Verdict::Inconclusive, residual};
}

int d_p(const IntPoly& f, PrimeP p) {
    require_criteria_input(f);
    int g = 0;
    for (int w : segment_widths(build_polygon(f, p))) g = std::gcd(g, w);
    return g;
}

int factor_degree_multiple(const IntPoly& f, const std::vector<PrimeP>& primes) {
    require_criteria_input(f);
    require_distinct(primes);
    int n = f.degree();
    int g = 0;
    std::int64_t l = 1;
    for (const PrimeP& p : primes) {
        int d = d_p(f, p);
        g = std::gcd(g, n / d);
        l = std::lcm<std::int64_t>(l, d);
    }
    int multiple = n / g;
    // lcm(d_1,...,d_k) = n / gcd(n/d_1,...,n/d_k) for divisors d_i of n.
    if (l != multiple) throw std::logic_error("lcm/gcd identity violated");
    return multiple;
}

Verdict theorem_b_verdict(const IntPoly& f, const std::vector<PrimeP>& primes) {
    return factor_degree_multiple(f, primes) == f.degree() ? Verdict::Irreducible
                                                           : Verdict::Inconclusive;
}

namespace {

// Dumas' three conditions read left to right: nu_p(a_0) = 0, every
// interior point strictly above the line from (0,0) to (n, nu_p(a_n)),
// and gcd(nu_p(a_n), n) = 1.
bool dumas_oriented(const IntPoly& f, PrimeP p) {
    int n = f.degree();
    if (n < 1) return false;
    if (nu_p(f.constant_term(), p).value() != 0) return false;
    std::int64_t vn = nu_p(f.leading(), p).value();
    if (std::gcd(vn, static_cast<std::int64_t>(n)) != 1) return false;
    for (int i = 1; i < n; ++i) {
        if (f.coeff(i) == 0) continue;
        std::int64_t vi = nu_p(f.coeff(i), p).value();
        if (static_cast<__int128>(vi) * n <= static_cast<__int128>(vn) * i) return false;
    }
    return true;
}

} // namespace

bool dumas_single_prime(const IntPoly& f, PrimeP p) {
    if (f.is_zero() || f.constant_term() == 0)
        throw std::domain_error("Dumas check requires a nonzero constant term");
    return dumas_oriented(f, p) || dumas_oriented(reciprocal(f), p);
}

bool eisenstein(const IntPoly& f, PrimeP p) {
    if (f.is_zero() || f.degree() < 1) return false;
    int n = f.degree();
    BigInt pz(static_cast<unsigned long>(p.value()));
    if (mpz_divisible_p(f.leading().get_mpz_t(), pz.get_mpz_t())) return false;
    for (int i = 0; i < n; ++i)
        if (!mpz_divisible_p(f.coeff(i).get_mpz_t(), pz.get_mpz_t())) return false;
    BigInt p2 = pz * pz;
    return !mpz_divisible_p(f.constant_term().get_mpz_t(), p2.get_mpz_t());
}

const char* to_string(Verdict v) {
    return v == Verdict::Irreducible ? "Irreducible" : "Inconclusive";
}

const char* to_string(FiredRule r) {
    switch (r) {
        case FiredRule::TheoremA: return "TheoremA";
        case FiredRule::TheoremB: return "TheoremB";
        case FiredRule::DumasSinglePrime: return "DumasSinglePrime";
        case FiredRule::Eisenstein: return "Eisenstein";
        case FiredRule::TrivialDegree: return "TrivialDegree";
        case FiredRule::None: return "None";
    }
    return "?";
}

namespace {

DegreeSet full_degree_set(int cap) {
    DegreeSet s(cap);
    for (int d = 1; d <= cap; ++d) s.insert(d);
    return s;
}

std::vector<PrimeP> gather_primes(const IntPoly& h, const AutoCheckOptions& options) {
    std::vector<PrimeP> primes = options.primes;
    if (options.discover) {
        auto found = candidate_primes(h, options.bound, options.mode);
        primes.insert(primes.end(), found.begin(), found.end());
    }
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    return primes;
}

bool polygon_is_flat(const NewtonPolygon& poly) {
    return poly.edges().size() == 1 && poly.edges()[0].height == 0 &&
           poly.vertices().front().y == 0;
}

} // namespace

Certificate auto_check(const IntPoly& f, const AutoCheckOptions& options) {
    if (f.is_zero()) throw std::domain_error("auto_check of the zero polynomial");

    Certificate cert;
    cert.polynomial = f;
    cert.degree = f.degree();

    auto split = content_and_primitive(f);
    cert.content = split.content;
    auto xsplit = factor_out_x(split.primitive);
    cert.x_power = xsplit.x_power;
    const IntPoly& h = xsplit.cofactor;

    if (cert.degree == 0) {
        cert.verdict = Verdict::Inconclusive;
        cert.notes.push_back("constant polynomial; irreducibility over Q does not apply");
        return cert;
    }
    if (cert.degree == 1) {
        cert.verdict = Verdict::Irreducible;
        cert.fired_rule = FiredRule::TrivialDegree;
        cert.residual_degrees = DegreeSet(0);
        return cert;
    }

    const bool divisible_by_x = cert.x_power >= 1;
    if (divisible_by_x) {
        cert.verdict = Verdict::Inconclusive;
        std::string note = "divisible by X^" + std::to_string(cert.x_power) + ", hence reducible";
        if (h.degree() >= 2) note += "; evidence below concerns the cofactor";
        cert.notes.push_back(std::move(note));
        cert.residual_degrees = full_degree_set(cert.degree / 2);
    }

    if (h.degree() < 2) {
        if (!divisible_by_x) {
            // degree >= 2 with x_power 0 always leaves degree >= 2 here
            throw std::logic_error("unexpected cofactor degree");
        }
        return cert;
    }

    std::vector<PrimeP> primes = gather_primes(h, options);

    for (const PrimeP& p : primes) {
        PrimeEvidence ev{p, build_polygon(h, p), {}, 0, DegreeSet(0), true};
        ev.widths = segment_widths(ev.polygon);
        int g = 0;
        for (int w : ev.widths) g = std::gcd(g, w);
        ev.d = g;
        ev.s = subset_sum_degrees(ev.widths, h.degree() / 2);
        ev.informative = !polygon_is_flat(ev.polygon);
        if (!ev.informative)
            cert.notes.push_back("p=" + std::to_string(p.value()) +
                                 ": flat polygon, vacuous evidence");
        cert.per_prime.push_back(std::move(ev));
    }

    FiredRule fired = FiredRule::None;
    std::optional<PrimeP> fired_prime;
    for (const PrimeP& p : primes) {
        if (eisenstein(h, p)) {
            fired = FiredRule::Eisenstein;
            fired_prime = p;
            break;
        }
    }
    if (fired == FiredRule::None) {
        for (const PrimeP& p : primes) {
            if (dumas_single_prime(h, p)) {
                fired = FiredRule::DumasSinglePrime;
                fired_prime = p;
                break;
            }
        }
    }

    if (!primes.empty()) {
        int multiple = factor_degree_multiple(h, primes);
        DegreeSet residual = cert.per_prime.front().s;
        for (std::size_t i = 1; i < cert.per_prime.size(); ++i)
            residual = intersect(residual, cert.per_prime[i].s);
        if (!divisible_by_x) {
            // With an X factor present, X itself has degree 1, so the
            // cofactor's multiple says nothing about f.
            cert.factor_degree_multiple = multiple;
            cert.residual_degrees = residual;
        }

        if (fired == FiredRule::None && multiple == h.degree()) fired = FiredRule::TheoremB;
        if (fired == FiredRule::None && residual.empty()) fired = FiredRule::TheoremA;
    } else {
        if (!divisible_by_x) cert.residual_degrees = full_degree_set(h.degree() / 2);
        cert.notes.push_back("no primes to examine (none given, none discovered up to bound " +
                             std::to_string(options.bound) + ")");
    }

    if (divisible_by_x) {
        if (fired != FiredRule::None)
            cert.notes.push_back("cofactor after removing X^" + std::to_string(cert.x_power) +
                                 " is irreducible (" + to_string(fired) + ")");
        return cert;
    }

    cert.fired_rule = fired;
    cert.fired_prime = fired_prime;
    cert.verdict = fired == FiredRule::None ? Verdict::Inconclusive : Verdict::Irreducible;
    return cert;
}

std::string Certificate::to_json(int indent) const {
    nlohmann::ordered_json j;
    j["polynomial"] = polynomial.to_coeff_string();
    j["degree"] = degree;
    j["content"] = content.get_str();
    j["x_power"] = x_power;
    nlohmann::ordered_json primes = nlohmann::ordered_json::array();
    for (const auto& ev : per_prime) primes.push_back(ev.prime.value());
    j["primes"] = primes;
    nlohmann::ordered_json pp = nlohmann::ordered_json::array();
    for (const auto& ev : per_prime) {
        nlohmann::ordered_json e;
        e["prime"] = ev.prime.value();
        nlohmann::ordered_json verts = nlohmann::ordered_json::array();
        for (const auto& v : ev.polygon.vertices()) verts.push_back({v.x, v.y});
        e["vertices"] = verts;
        e["segment_widths"] = ev.widths;
        e["d_p"] = ev.d;
        e["s_p"] = ev.s.to_vector();
        pp.push_back(e);
    }
    j["per_prime"] = pp;
    j["verdict"] = to_string(verdict);
    j["fired_rule"] = to_string(fired_rule);
    j["factor_degree_multiple"] = factor_degree_multiple;
    j["residual_degrees"] = residual_degrees.to_vector();
    return j.dump(indent);
}

namespace {

std::string join_ints(const std::vector<int>& v, const char* sep) {
    std::ostringstream out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out << sep;
        out << v[i];
    }
    return out.str();
}

} // namespace

std::string Certificate::to_text() const {
    std::ostringstream out;
    out << "polynomial: " << polynomial.to_coeff_string() << "\n";
    out << "degree: " << degree << "\n";
    out << "content: " << content << "\n";
    out << "x_power: " << x_power << "\n";
    out << "primes:";
    for (const auto& ev : per_prime) out << ' ' << ev.prime.value();
    out << "\n";
    for (const auto& ev : per_prime) {
        out << "p=" << ev.prime.value() << ": vertices";
        for (const auto& v : ev.polygon.vertices()) out << " (" << v.x << ',' << v.y << ')';
        out << "; widths [" << join_ints(ev.widths, " ") << "]"
            << "; d_p=" << ev.d << "; S_p={" << join_ints(ev.s.to_vector(), ",") << "}";
        if (!ev.informative) out << " (flat)";
        out << "\n";
    }
    out << "factor degree multiple: " << factor_degree_multiple << "\n";
    out << "residual degrees: {" << join_ints(residual_degrees.to_vector(), ",") << "}\n";
    for (const auto& note : notes) out << "note: " << note << "\n";
    out << "verdict: " << to_string(verdict);
    if (fired_rule != FiredRule::None) {
        out << " (" << to_string(fired_rule);
        if (fired_prime) out << " at p=" << fired_prime->value();
        out << ")";
    }
    out << "\n";
    return out.str();
}

} // namespace npcert
