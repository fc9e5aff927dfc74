#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace npcert {

using BigInt = mpz_class;

/// Dense univariate polynomial over Z. Coefficient index equals the
/// exponent; coefficients are arbitrary-precision integers. Values are
/// immutable after construction and always stored normalized: the highest
/// stored coefficient is nonzero, except for the zero polynomial which is
/// the single entry 0 (and has no degree).
class IntPoly {
public:
    IntPoly() : coeffs_{BigInt(0)} {}
    explicit IntPoly(std::vector<BigInt> coeffs);

    static IntPoly constant(BigInt c);
    static IntPoly monomial_x();

    bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == 0; }

    /// Degree of a nonzero polynomial; throws std::domain_error on zero.
    int degree() const;

    /// Coefficient of X^i; zero outside the stored range.
    const BigInt& coeff(int i) const;
    const std::vector<BigInt>& coeffs() const { return coeffs_; }
    const BigInt& leading() const;
    const BigInt& constant_term() const { return coeffs_.front(); }

    /// Canonical serialization "c0,c1,...,cn".
    std::string to_coeff_string() const;
    /// Conventional display form, highest power first: "x^3+4x^2+6x+4".
    std::string to_expr_string() const;

    bool operator==(const IntPoly&) const = default;

private:
    std::vector<BigInt> coeffs_;
};

IntPoly operator+(const IntPoly& f, const IntPoly& g);
IntPoly operator-(const IntPoly& f, const IntPoly& g);
IntPoly operator*(const IntPoly& f, const IntPoly& g);
IntPoly operator-(const IntPoly& f);
std::ostream& operator<<(std::ostream& os, const IntPoly& f);

/// Exact Horner evaluation at an integer point.
BigInt eval(const IntPoly& f, const BigInt& t);

struct ContentSplit {
    BigInt content;    // gcd of |coefficients|, positive
    IntPoly primitive; // content 1, positive leading coefficient
};

/// Splits f into content and primitive part. The sign of f is normalized
/// away: the primitive part's leading coefficient is positive, so
/// content * primitive equals f up to sign. Throws on the zero polynomial.
ContentSplit content_and_primitive(const IntPoly& f);

/// X^{deg f} * f(1/X): the coefficient sequence reversed, then normalized.
/// Throws on the zero polynomial.
IntPoly reciprocal(const IntPoly& f);

struct XPowerSplit {
    int x_power;     // k
    IntPoly cofactor; // g with g(0) != 0
};

/// Writes f = X^k * g with g(0) != 0. Throws on the zero polynomial.
XPowerSplit factor_out_x(const IntPoly& f);

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position);
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Parses either a coefficient list "c0,c1,...,cn" or an expression built
/// from terms c*x^k, x^k, c joined by + and -. 'x' and 'X' are accepted,
/// the '*' is optional, whitespace is ignored. Throws ParseError with the
/// offending position on malformed input.
IntPoly parse_poly(std::string_view text);

} // namespace npcert
