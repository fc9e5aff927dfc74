#include "npcert/oracle.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace npcert {

NewtonPolygon merge_polygons(const NewtonPolygon& a, const NewtonPolygon& b) {
    if (a.prime() != b.prime()) throw std::invalid_argument("polygons built for different primes");
    LatticePoint anchor{0, a.vertices().front().y + b.vertices().front().y};
    std::vector<Segment> merged = a.segments();
    merged.insert(merged.end(), b.segments().begin(), b.segments().end());
    std::stable_sort(merged.begin(), merged.end(),
                     [](const Segment& x, const Segment& y) { return x.slope() < y.slope(); });
    return NewtonPolygon::from_segments(a.prime(), anchor, std::move(merged));
}

std::vector<BigInt> integer_divisors(const BigInt& m) {
    if (m == 0) throw std::domain_error("divisors of zero");
    BigInt a = abs(m);
    std::vector<BigInt> small, large;
    for (BigInt i = 1; i * i <= a; ++i) {
        if (!mpz_divisible_p(a.get_mpz_t(), i.get_mpz_t())) continue;
        small.push_back(i);
        BigInt q = a / i;
        if (q != i) large.push_back(q);
    }
    std::vector<BigInt> out;
    out.reserve(2 * (small.size() + large.size()));
    for (const BigInt& d : small) {
        out.push_back(d);
        out.push_back(-d);
    }
    for (auto it = large.rbegin(); it != large.rend(); ++it) {
        out.push_back(*it);
        out.push_back(-*it);
    }
    return out;
}

std::optional<IntPoly> exact_interpolate(const std::vector<std::pair<BigInt, BigInt>>& points) {
    if (points.empty()) throw std::invalid_argument("interpolation needs at least one point");
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (points[i].first == points[j].first)
                throw std::invalid_argument("duplicate interpolation abscissa");

    // Lagrange accumulation over exact rationals.
    std::size_t m = points.size();
    std::vector<mpq_class> acc(m, mpq_class(0));
    std::vector<mpq_class> basis;
    for (std::size_t i = 0; i < m; ++i) {
        basis.assign(1, mpq_class(1)); // product of (X - x_j) / (x_i - x_j), j != i
        mpq_class scale(points[i].second);
        for (std::size_t j = 0; j < m; ++j) {
            if (j == i) continue;
            // multiply basis by (X - x_j)
            basis.push_back(mpq_class(0));
            for (std::size_t k = basis.size() - 1; k > 0; --k)
                basis[k] = basis[k - 1] - mpq_class(points[j].first) * basis[k];
            basis[0] = -mpq_class(points[j].first) * basis[0];
            scale /= mpq_class(points[i].first - points[j].first);
        }
        for (std::size_t k = 0; k < basis.size(); ++k) acc[k] += scale * basis[k];
    }

    std::vector<BigInt> coeffs(m);
    for (std::size_t k = 0; k < m; ++k) {
        acc[k].canonicalize();
        if (acc[k].get_den() != 1) return std::nullopt;
        coeffs[k] = acc[k].get_num();
    }
    return IntPoly(std::move(coeffs));
}

namespace {

// Exact division over Z; nullopt when g does not divide f in Z[X].
std::optional<IntPoly> divide_exact(const IntPoly& f, const IntPoly& g) {
    if (g.is_zero()) throw std::domain_error("division by zero polynomial");
    if (f.is_zero()) return IntPoly();
    if (f.degree() < g.degree()) return std::nullopt;
    std::vector<BigInt> rem = f.coeffs();
    std::vector<BigInt> quot(static_cast<std::size_t>(f.degree() - g.degree()) + 1, BigInt(0));
    const BigInt& lead = g.leading();
    for (int k = f.degree() - g.degree(); k >= 0; --k) {
        BigInt& top = rem[static_cast<std::size_t>(k + g.degree())];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) return std::nullopt;
        BigInt q = top / lead;
        quot[static_cast<std::size_t>(k)] = q;
        for (int i = 0; i <= g.degree(); ++i)
            rem[static_cast<std::size_t>(k + i)] -= q * g.coeff(i);
    }
    for (const BigInt& r : rem)
        if (r != 0) return std::nullopt;
    return IntPoly(std::move(quot));
}

struct LimitTrip {
    std::string which;
};

// Finds one factor of degree <= deg(t)/2, or declares t irreducible.
// t is primitive with positive leading coefficient and t(0) != 0.
// Linear factors from integer roots are returned as soon as a root shows
// up during evaluation-point selection.
std::optional<IntPoly> find_factor(const IntPoly& t, const OracleLimits& limits, LimitTrip& trip) {
    int n = t.degree();
    if (n <= 1) return std::nullopt;

    for (int d = 1; d <= n / 2; ++d) {
        // d+1 evaluation points from 0, 1, -1, 2, -2, ... with f(t) != 0.
        std::vector<std::pair<BigInt, BigInt>> samples;
        for (BigInt x(0); static_cast<int>(samples.size()) < d + 1;) {
            BigInt v = eval(t, x);
            if (v == 0) return IntPoly(std::vector<BigInt>{-x, BigInt(1)}); // root -> linear factor
            samples.emplace_back(x, v);
            if (x > 0)
                x = -x;
            else
                x = 1 - x;
        }

        // Divisor values fit in int64 because evaluations are capped at
        // max_eval_magnitude.
        std::vector<std::vector<std::int64_t>> divisor_sets;
        __int128 tuple_count = 1;
        for (std::size_t i = 0; i < samples.size(); ++i) {
            if (abs(samples[i].second) > limits.max_eval_magnitude) {
                trip.which = "max_eval_magnitude";
                return std::nullopt;
            }
            std::vector<std::int64_t> divs;
            for (const BigInt& dv : integer_divisors(samples[i].second)) {
                // g and -g divide together, so the first coordinate keeps
                // only positive divisors.
                if (i == 0 && dv < 0) continue;
                divs.push_back(static_cast<std::int64_t>(dv.get_si()));
            }
            tuple_count *= static_cast<__int128>(divs.size());
            if (tuple_count > limits.max_divisor_candidates) {
                trip.which = "max_divisor_candidates";
                return std::nullopt;
            }
            divisor_sets.push_back(std::move(divs));
        }

        // An integer polynomial g satisfies (a-b) | g(a)-g(b); tuples that
        // break this for any point pair cannot interpolate to one, so the
        // expensive rational interpolation is skipped for them.
        struct PairCheck {
            std::size_t i, j;
            std::int64_t mod;
        };
        std::vector<PairCheck> pair_checks;
        for (std::size_t i = 0; i < samples.size(); ++i)
            for (std::size_t j = i + 1; j < samples.size(); ++j) {
                BigInt diffz = samples[i].first - samples[j].first;
                std::int64_t diff = diffz.get_si();
                if (diff < 0) diff = -diff;
                if (diff >= 2) pair_checks.push_back({i, j, diff});
            }

        // Odometer over divisor tuples.
        std::vector<std::size_t> idx(divisor_sets.size(), 0);
        std::vector<std::pair<BigInt, BigInt>> pts(samples.size());
        for (std::size_t i = 0; i < samples.size(); ++i) pts[i].first = samples[i].first;
        for (;;) {
            bool plausible = true;
            for (const PairCheck& pc : pair_checks) {
                std::int64_t delta = divisor_sets[pc.i][idx[pc.i]] - divisor_sets[pc.j][idx[pc.j]];
                if (delta % pc.mod != 0) {
                    plausible = false;
                    break;
                }
            }
            if (plausible) {
                for (std::size_t i = 0; i < samples.size(); ++i)
                    pts[i].second = divisor_sets[i][idx[i]];
                if (auto g = exact_interpolate(pts)) {
                    if (!g->is_zero() && g->degree() == d) {
                        if (divide_exact(t, *g)) {
                            IntPoly fac = *g;
                            if (fac.leading() < 0) fac = -fac;
                            return fac;
                        }
                    }
                }
            }
            std::size_t carry = 0;
            while (carry < idx.size() && ++idx[carry] == divisor_sets[carry].size()) {
                idx[carry] = 0;
                ++carry;
            }
            if (carry == idx.size()) break;
        }
    }
    return std::nullopt;
}

bool factor_less(const std::pair<IntPoly, int>& a, const std::pair<IntPoly, int>& b) {
    int da = a.first.degree(), db = b.first.degree();
    if (da != db) return da < db;
    for (int i = da; i >= 0; --i) {
        if (a.first.coeff(i) != b.first.coeff(i)) return a.first.coeff(i) < b.first.coeff(i);
    }
    return false;
}

} // namespace

Factorization kronecker_factorize(const IntPoly& f, const OracleLimits& limits) {
    if (f.is_zero()) throw std::domain_error("factorization of the zero polynomial");

    Factorization result;
    if (f.degree() > limits.max_degree) {
        result.status = Factorization::Status::LimitExceeded;
        result.limit_hit = "max_degree";
        result.content = 0;
        return result;
    }

    auto split = content_and_primitive(f);
    result.content = f.leading() < 0 ? BigInt(-split.content) : split.content;

    std::vector<IntPoly> irreducible;
    auto xsplit = factor_out_x(split.primitive);
    for (int i = 0; i < xsplit.x_power; ++i) irreducible.push_back(IntPoly::monomial_x());

    std::vector<IntPoly> pending;
    if (xsplit.cofactor.degree() >= 1) pending.push_back(xsplit.cofactor);

    LimitTrip trip;
    while (!pending.empty()) {
        IntPoly t = std::move(pending.back());
        pending.pop_back();
        if (t.degree() == 1) {
            irreducible.push_back(std::move(t));
            continue;
        }
        auto g = find_factor(t, limits, trip);
        if (!trip.which.empty()) {
            result.status = Factorization::Status::LimitExceeded;
            result.limit_hit = trip.which;
            result.factors.clear();
            return result;
        }
        if (!g) {
            irreducible.push_back(std::move(t));
            continue;
        }
        auto q = divide_exact(t, *g);
        if (!q) throw std::logic_error("found factor fails to divide");
        pending.push_back(std::move(*g));
        pending.push_back(std::move(*q));
    }

    std::vector<std::pair<IntPoly, int>> grouped;
    for (auto& fac : irreducible) {
        auto it = std::find_if(grouped.begin(), grouped.end(),
                               [&](const auto& g) { return g.first == fac; });
        if (it == grouped.end())
            grouped.emplace_back(std::move(fac), 1);
        else
            ++it->second;
    }
    std::sort(grouped.begin(), grouped.end(), factor_less);
    result.factors = std::move(grouped);

    int total = 0;
    for (const auto& [fac, mult] : result.factors) total += mult;
    result.status = (total == 1 && !f.is_zero() && f.degree() >= 1 &&
                     result.factors.front().first.degree() == f.degree())
                        ? Factorization::Status::Irreducible
                        : Factorization::Status::Factored;
    return result;
}

IntPoly Factorization::product() const {
    IntPoly acc = IntPoly::constant(content);
    for (const auto& [fac, mult] : factors)
        for (int i = 0; i < mult; ++i) acc = acc * fac;
    return acc;
}

std::string Factorization::to_string() const {
    if (status == Status::LimitExceeded) return "LimitExceeded(" + limit_hit + ")";
    if (status == Status::Irreducible) return "Irreducible";
    std::ostringstream out;
    if (factors.empty()) {
        out << content;
        return out.str();
    }
    if (content != 1) out << content << "*";
    for (const auto& [fac, mult] : factors) {
        out << '(' << fac.to_expr_string() << ')';
        if (mult > 1) out << '^' << mult;
    }
    return out.str();
}

} // namespace npcert
