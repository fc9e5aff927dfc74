#include "npcert/int_poly.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>
#include <utility>

namespace npcert {

namespace {

void normalize(std::vector<BigInt>& c) {
    while (c.size() > 1 && c.back() == 0) c.pop_back();
    if (c.empty()) c.push_back(BigInt(0));
}

} // namespace

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
    normalize(coeffs_);
}

IntPoly IntPoly::constant(BigInt c) {
    return IntPoly(std::vector<BigInt>{std::move(c)});
}

IntPoly IntPoly::monomial_x() {
    return IntPoly(std::vector<BigInt>{BigInt(0), BigInt(1)});
}

int IntPoly::degree() const {
    if (is_zero()) throw std::domain_error("degree of the zero polynomial");
    return static_cast<int>(coeffs_.size()) - 1;
}

const BigInt& IntPoly::coeff(int i) const {
    static const BigInt zero(0);
    if (i < 0 || static_cast<std::size_t>(i) >= coeffs_.size()) return zero;
    return coeffs_[static_cast<std::size_t>(i)];
}

const BigInt& IntPoly::leading() const {
    if (is_zero()) throw std::domain_error("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

std::string IntPoly::to_coeff_string() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) out << ',';
        out << coeffs_[i];
    }
    return out.str();
}

std::string IntPoly::to_expr_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = static_cast<int>(coeffs_.size()) - 1; i >= 0; --i) {
        const BigInt& c = coeffs_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        BigInt a = abs(c);
        if (first) {
            if (c < 0) out << '-';
            first = false;
        } else {
            out << (c < 0 ? '-' : '+');
        }
        if (i == 0) {
            out << a;
        } else {
            if (a != 1) out << a;
            out << 'x';
            if (i > 1) out << '^' << i;
        }
    }
    return out.str();
}

IntPoly operator+(const IntPoly& f, const IntPoly& g) {
    std::vector<BigInt> c(std::max(f.coeffs().size(), g.coeffs().size()), BigInt(0));
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i < f.coeffs().size()) c[i] += f.coeffs()[i];
        if (i < g.coeffs().size()) c[i] += g.coeffs()[i];
    }
    return IntPoly(std::move(c));
}

IntPoly operator-(const IntPoly& f) {
    std::vector<BigInt> c = f.coeffs();
    for (auto& x : c) x = -x;
    return IntPoly(std::move(c));
}

IntPoly operator-(const IntPoly& f, const IntPoly& g) { return f + (-g); }

IntPoly operator*(const IntPoly& f, const IntPoly& g) {
    if (f.is_zero() || g.is_zero()) return IntPoly();
    std::vector<BigInt> c(f.coeffs().size() + g.coeffs().size() - 1, BigInt(0));
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        if (f.coeffs()[i] == 0) continue;
        for (std::size_t j = 0; j < g.coeffs().size(); ++j)
            c[i + j] += f.coeffs()[i] * g.coeffs()[j];
    }
    return IntPoly(std::move(c));
}

std::ostream& operator<<(std::ostream& os, const IntPoly& f) {
    return os << f.to_expr_string();
}

BigInt eval(const IntPoly& f, const BigInt& t) {
    BigInt acc(0);
    for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it)
        acc = acc * t + *it;
    return acc;
}

ContentSplit content_and_primitive(const IntPoly& f) {
    if (f.is_zero()) throw std::domain_error("content of the zero polynomial");
    BigInt g(0);
    for (const auto& c : f.coeffs()) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    const bool flip = f.leading() < 0;
    std::vector<BigInt> prim;
    prim.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) prim.push_back(flip ? BigInt(-c / g) : BigInt(c / g));
    return {g, IntPoly(std::move(prim))};
}

IntPoly reciprocal(const IntPoly& f) {
    if (f.is_zero()) throw std::domain_error("reciprocal of the zero polynomial");
    std::vector<BigInt> c(f.coeffs().rbegin(), f.coeffs().rend());
    return IntPoly(std::move(c));
}

XPowerSplit factor_out_x(const IntPoly& f) {
    if (f.is_zero()) throw std::domain_error("factor_out_x of the zero polynomial");
    std::size_t k = 0;
    while (k < f.coeffs().size() && f.coeffs()[k] == 0) ++k;
    std::vector<BigInt> c(f.coeffs().begin() + static_cast<std::ptrdiff_t>(k), f.coeffs().end());
    return {static_cast<int>(k), IntPoly(std::move(c))};
}

ParseError::ParseError(const std::string& what, std::size_t position)
    : std::runtime_error(what + " at position " + std::to_string(position)),
      position_(position) {}

namespace {

// Recursive-descent-free scanner for the two accepted syntaxes.
struct Cursor {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool done() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos); }

    BigInt integer() {
        skip_ws();
        bool negative = false;
        if (!done() && (peek() == '+' || peek() == '-')) {
            negative = peek() == '-';
            ++pos;
        }
        std::size_t digits_from = pos;
        while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos;
        if (pos == digits_from) fail("expected integer");
        // base pinned to 10: the mpz string constructor would otherwise
        // auto-detect octal/hex from leading zeros; '+' is applied here
        // because mpz_set_str rejects it
        BigInt v(std::string(text.substr(digits_from, pos - digits_from)), 10);
        return negative ? BigInt(-v) : v;
    }

    // Unsigned exponent after '^'.
    int exponent() {
        skip_ws();
        std::size_t start = pos;
        while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos;
        if (pos == start) fail("expected exponent");
        unsigned long e = 0;
        try {
            e = std::stoul(std::string(text.substr(start, pos - start)));
        } catch (const std::out_of_range&) {
            throw ParseError("exponent too large", start);
        }
        if (e > 1'000'000) throw ParseError("exponent too large", start);
        return static_cast<int>(e);
    }
};

IntPoly parse_coeff_list(std::string_view text) {
    Cursor cur{text};
    std::vector<BigInt> coeffs;
    for (;;) {
        coeffs.push_back(cur.integer());
        cur.skip_ws();
        if (cur.done()) break;
        if (cur.peek() != ',') cur.fail("expected ','");
        ++cur.pos;
    }
    return IntPoly(std::move(coeffs));
}

IntPoly parse_expression(std::string_view text) {
    Cursor cur{text};
    std::vector<BigInt> coeffs;
    auto add_term = [&](const BigInt& c, int e) {
        if (static_cast<std::size_t>(e) >= coeffs.size()) coeffs.resize(static_cast<std::size_t>(e) + 1, BigInt(0));
        coeffs[static_cast<std::size_t>(e)] += c;
    };

    cur.skip_ws();
    bool first = true;
    while (!cur.done()) {
        int sign = 1;
        cur.skip_ws();
        if (!cur.done() && (cur.peek() == '+' || cur.peek() == '-')) {
            if (cur.peek() == '-') sign = -1;
            ++cur.pos;
        } else if (!first) {
            cur.fail("expected '+' or '-'");
        }
        cur.skip_ws();
        if (cur.done()) cur.fail("expected term");

        BigInt c(1);
        bool has_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
            c = cur.integer();
            has_coeff = true;
            cur.skip_ws();
            if (!cur.done() && cur.peek() == '*') {
                ++cur.pos;
                cur.skip_ws();
                if (cur.done() || (cur.peek() != 'x' && cur.peek() != 'X'))
                    cur.fail("expected 'x' after '*'");
            }
        }
        int e = 0;
        cur.skip_ws();
        if (!cur.done() && (cur.peek() == 'x' || cur.peek() == 'X')) {
            ++cur.pos;
            e = 1;
            cur.skip_ws();
            if (!cur.done() && cur.peek() == '^') {
                ++cur.pos;
                e = cur.exponent();
            }
        } else if (!has_coeff) {
            cur.fail("expected term");
        }
        add_term(sign * c, e);
        first = false;
        cur.skip_ws();
    }
    if (first) cur.fail("empty input");
    return IntPoly(std::move(coeffs));
}

} // namespace

IntPoly parse_poly(std::string_view text) {
    std::size_t i = 0;
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i == text.size()) throw ParseError("empty input", 0);
    if (text.find('x') != std::string_view::npos || text.find('X') != std::string_view::npos)
        return parse_expression(text);
    return parse_coeff_list(text);
}

} // namespace npcert
