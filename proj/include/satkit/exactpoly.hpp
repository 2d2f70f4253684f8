#pragma once

// Exact Laurent polynomials over Z and truncated Laurent series over Q in one
// variable t. Everything downstream computes in these two rings.

#include <gmpxx.h>

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "satkit/error.hpp"

namespace satkit {

using Integer = mpz_class;
using Rational = mpq_class;

class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(const Integer& constant);
    explicit LaurentPoly(long constant) : LaurentPoly(Integer(constant)) {}

    static LaurentPoly monomial(const Integer& coeff, int exponent);
    // t^exponent
    static LaurentPoly t(int exponent = 1) { return monomial(1, exponent); }
    // t^exponent - 1, the building block of every flag-variety formula.
    static LaurentPoly t_power_minus_one(int exponent);

    // Nonzero terms keyed by exponent.
    const std::map<int, Integer>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    Integer coeff(int exponent) const;

    // Both throw DomainError on the zero polynomial.
    int min_exp() const;
    int max_exp() const;
    Integer leading_coeff() const;
    Integer lowest_coeff() const;

    bool is_constant() const;
    bool has_positive_exponents() const;
    bool has_negative_exponents() const;
    bool is_palindromic() const;

    Integer value_at_one() const;
    // Throws DomainError if a negative exponent is present.
    Integer value_at_zero() const;

    // Multiplication by t^k.
    LaurentPoly shifted(int k) const;
    // Substitution t -> t^{-1}.
    LaurentPoly reflected() const;
    LaurentPoly pow(unsigned exponent) const;

    LaurentPoly& operator+=(const LaurentPoly& other);
    LaurentPoly& operator-=(const LaurentPoly& other);
    LaurentPoly& operator*=(const LaurentPoly& other);

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a);
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    // Canonical rendering: descending exponents, unit coefficients elided,
    // e.g. "t^2 - 1", "1 - t^-2", "3*t^4 + t - 2".
    std::string str() const;

    // Parses the canonical form (and anything else the expression grammar in
    // polyexpr accepts without free variables).
    static LaurentPoly parse(std::string_view text);

private:
    void add_term(int exponent, const Integer& coeff);

    std::map<int, Integer> terms_;
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

LaurentPoly add(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& q);

// p = q * quotient + remainder. When the division is exact the remainder is
// zero; otherwise the remainder is whatever was left when long division by
// the leading term could not continue over Z.
struct DivisionResult {
    LaurentPoly quotient;
    LaurentPoly remainder;
    bool exact() const { return remainder.is_zero(); }
};

DivisionResult divide(const LaurentPoly& p, const LaurentPoly& q);

class NotDivisible : public Error {
public:
    NotDivisible(const LaurentPoly& dividend, const LaurentPoly& divisor, LaurentPoly remainder);
    // Same failure, reported with extra context in front of the message.
    NotDivisible(const std::string& context, const NotDivisible& inner);
    const LaurentPoly& remainder() const { return remainder_; }

private:
    LaurentPoly remainder_;
};

// Exact Laurent quotient r with r*q == p. Throws NotDivisible (carrying the
// remainder) when no such r with integer coefficients exists, DomainError on q == 0.
LaurentPoly exact_div(const LaurentPoly& p, const LaurentPoly& q);

// ---------------------------------------------------------------------------
// Truncated Laurent series.
//
// A series lives in a local variable x which is either t (power series
// around t = 0, truncated above) or t^{-1} (expansions around t = infinity
// such as 1/(t-1) = t^{-1} + t^{-2} + ..., truncated below). Coefficients are
// known exactly for every x-exponent <= order(); nothing beyond is reported.

enum class SeriesVar { T, TInverse };

class TruncSeries {
public:
    TruncSeries(SeriesVar var, int order);

    static TruncSeries constant(const Rational& c, int order, SeriesVar var = SeriesVar::T);
    static TruncSeries from_poly(const LaurentPoly& p, int order, SeriesVar var = SeriesVar::T);
    // Sets coefficient of x^exponent; ignored beyond order.
    TruncSeries& set(int exponent, const Rational& c);

    SeriesVar variable() const { return var_; }
    int order() const { return order_; }
    const std::map<int, Rational>& coeffs() const { return coeffs_; }

    // Lowest x-exponent with a nonzero coefficient, if any is known.
    std::optional<int> valuation() const;
    // valuation() or order()+1 when the series is zero to its order.
    int min_exp() const;
    int max_exp() const { return order_; }

    // Coefficient of x^exponent. Throws DomainError past the truncation order.
    Rational coeff(int exponent) const;
    // Coefficient of t^exponent regardless of which variable is in use.
    Rational coeff_t(int exponent) const;

    bool is_zero() const { return coeffs_.empty(); }
    TruncSeries truncated(int order) const;

    // Inverse via Newton iteration; throws DomainError if zero to order.
    TruncSeries inverse() const;

    TruncSeries& operator+=(const TruncSeries& other);
    TruncSeries& operator-=(const TruncSeries& other);
    friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
    friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
    friend TruncSeries operator-(const TruncSeries& a);
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
    friend TruncSeries operator*(const TruncSeries& a, const Rational& c);
    friend TruncSeries operator*(const Rational& c, const TruncSeries& a) { return a * c; }
    // The polynomial is exact, so only the series limits the precision.
    friend TruncSeries operator*(const LaurentPoly& p, const TruncSeries& a);
    friend TruncSeries operator*(const TruncSeries& a, const LaurentPoly& p) { return p * a; }

    // Same variable, same order, same coefficients.
    friend bool operator==(const TruncSeries& a, const TruncSeries& b);

    // Known part as a polynomial in t; throws DomainError on non-integral
    // coefficients.
    LaurentPoly to_laurent() const;

    std::string str() const;

private:
    void require_same_var(const TruncSeries& other) const;

    SeriesVar var_;
    int order_;
    std::map<int, Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const TruncSeries& s);

// 1/(t-1) = sum_{j>=1} t^{-j}, known through t^{-order}.
TruncSeries expand_inverse_t_minus_1(int order);

// Square root with positive constant term. Requires valuation 0 and a
// constant term that is a square in Q (NotASquare otherwise).
TruncSeries series_sqrt(const TruncSeries& s);

// Exact rational square root if one exists.
std::optional<Rational> rational_sqrt(const Rational& q);

}  // namespace satkit
