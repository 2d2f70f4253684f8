#include "satkit/exactpoly.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include "satkit/polyexpr.hpp"

namespace satkit {

// ---------------------------------------------------------------- LaurentPoly

LaurentPoly::LaurentPoly(const Integer& constant) { add_term(0, constant); }

LaurentPoly LaurentPoly::monomial(const Integer& coeff, int exponent) {
    LaurentPoly p;
    p.add_term(exponent, coeff);
    return p;
}

LaurentPoly LaurentPoly::t_power_minus_one(int exponent) {
    return t(exponent) - LaurentPoly(1);
}

void LaurentPoly::add_term(int exponent, const Integer& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(exponent, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

Integer LaurentPoly::coeff(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Integer(0) : it->second;
}

int LaurentPoly::min_exp() const {
    if (is_zero()) throw DomainError("min_exp of the zero polynomial");
    return terms_.begin()->first;
}

int LaurentPoly::max_exp() const {
    if (is_zero()) throw DomainError("max_exp of the zero polynomial");
    return terms_.rbegin()->first;
}

Integer LaurentPoly::leading_coeff() const {
    if (is_zero()) throw DomainError("leading coefficient of the zero polynomial");
    return terms_.rbegin()->second;
}

Integer LaurentPoly::lowest_coeff() const {
    if (is_zero()) throw DomainError("lowest coefficient of the zero polynomial");
    return terms_.begin()->second;
}

bool LaurentPoly::is_constant() const {
    return is_zero() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

bool LaurentPoly::has_positive_exponents() const { return !is_zero() && max_exp() > 0; }
bool LaurentPoly::has_negative_exponents() const { return !is_zero() && min_exp() < 0; }

bool LaurentPoly::is_palindromic() const {
    if (is_zero()) return true;
    const int lo = min_exp();
    const int hi = max_exp();
    for (const auto& [e, c] : terms_) {
        if (coeff(lo + hi - e) != c) return false;
    }
    return true;
}

Integer LaurentPoly::value_at_one() const {
    Integer sum = 0;
    for (const auto& [e, c] : terms_) sum += c;
    return sum;
}

Integer LaurentPoly::value_at_zero() const {
    if (has_negative_exponents()) throw DomainError("value at t=0 of " + str() + " has a pole");
    return coeff(0);
}

LaurentPoly LaurentPoly::shifted(int k) const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e + k, c);
    return out;
}

LaurentPoly LaurentPoly::reflected() const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(-e, c);
    return out;
}

LaurentPoly LaurentPoly::pow(unsigned exponent) const {
    LaurentPoly result(1);
    LaurentPoly base = *this;
    while (exponent > 0) {
        if (exponent & 1u) result *= base;
        exponent >>= 1;
        if (exponent > 0) base *= base;
    }
    return result;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
    for (const auto& [e, c] : other.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
    }
    return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
    *this = *this * other;
    return *this;
}

LaurentPoly operator-(const LaurentPoly& a) {
    LaurentPoly out;
    for (const auto& [e, c] : a.terms_) out.terms_.emplace(e, -c);
    return out;
}

namespace {

std::string monomial_body(int e) {
    if (e == 0) return "";
    if (e == 1) return "t";
    return "t^" + std::to_string(e);
}

}  // namespace

std::string LaurentPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const int e = it->first;
        Integer c = it->second;
        const bool negative = c < 0;
        if (negative) c = -c;
        if (first) {
            if (negative) os << '-';
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        const std::string body = monomial_body(e);
        if (body.empty()) {
            os << c.get_str();
        } else if (c == 1) {
            os << body;
        } else {
            os << c.get_str() << '*' << body;
        }
    }
    return os.str();
}

LaurentPoly LaurentPoly::parse(std::string_view text) { return eval_poly_expr(text); }

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.str(); }

LaurentPoly add(const LaurentPoly& p, const LaurentPoly& q) { return p + q; }
LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& q) { return p * q; }

DivisionResult divide(const LaurentPoly& p, const LaurentPoly& q) {
    if (q.is_zero()) throw DomainError("division by the zero polynomial");
    if (p.is_zero()) return {};

    // Normalise both to ordinary polynomials with nonzero constant terms;
    // t is a unit, so the Laurent quotient exists iff this one does.
    const int p_shift = p.min_exp();
    const int q_shift = q.min_exp();
    LaurentPoly rem = p.shifted(-p_shift);
    const LaurentPoly den = q.shifted(-q_shift);
    const int den_deg = den.max_exp();
    const Integer den_lead = den.leading_coeff();

    LaurentPoly quot;
    while (!rem.is_zero() && rem.max_exp() >= den_deg) {
        const Integer lead = rem.leading_coeff();
        if (!mpz_divisible_p(lead.get_mpz_t(), den_lead.get_mpz_t())) break;
        const Integer c = lead / den_lead;
        const int e = rem.max_exp() - den_deg;
        const LaurentPoly step = LaurentPoly::monomial(c, e);
        quot += step;
        rem -= step * den;
    }
    return {quot.shifted(p_shift - q_shift), rem.shifted(p_shift)};
}

NotDivisible::NotDivisible(const LaurentPoly& dividend, const LaurentPoly& divisor,
                           LaurentPoly remainder)
    : Error("NotDivisible", "(" + dividend.str() + ") / (" + divisor.str() +
                                ") leaves remainder " + remainder.str()),
      remainder_(std::move(remainder)) {}

NotDivisible::NotDivisible(const std::string& context, const NotDivisible& inner)
    : Error("NotDivisible", context + ": " + std::string(inner.what()).substr(std::string("NotDivisible: ").size())),
      remainder_(inner.remainder_) {}

LaurentPoly exact_div(const LaurentPoly& p, const LaurentPoly& q) {
    DivisionResult r = divide(p, q);
    if (!r.exact()) throw NotDivisible(p, q, r.remainder);
    return r.quotient;
}

// ---------------------------------------------------------------- TruncSeries

TruncSeries::TruncSeries(SeriesVar var, int order) : var_(var), order_(order) {}

TruncSeries TruncSeries::constant(const Rational& c, int order, SeriesVar var) {
    TruncSeries s(var, order);
    s.set(0, c);
    return s;
}

TruncSeries TruncSeries::from_poly(const LaurentPoly& p, int order, SeriesVar var) {
    TruncSeries s(var, order);
    for (const auto& [e, c] : p.terms()) {
        s.set(var == SeriesVar::T ? e : -e, Rational(c));
    }
    return s;
}

TruncSeries& TruncSeries::set(int exponent, const Rational& c) {
    if (exponent > order_) return *this;
    if (c == 0) {
        coeffs_.erase(exponent);
    } else {
        coeffs_[exponent] = c;
    }
    return *this;
}

std::optional<int> TruncSeries::valuation() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.begin()->first;
}

int TruncSeries::min_exp() const { return valuation().value_or(order_ + 1); }

Rational TruncSeries::coeff(int exponent) const {
    if (exponent > order_) {
        throw DomainError("coefficient of x^" + std::to_string(exponent) +
                          " lies beyond truncation order " + std::to_string(order_));
    }
    auto it = coeffs_.find(exponent);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

Rational TruncSeries::coeff_t(int exponent) const {
    return coeff(var_ == SeriesVar::T ? exponent : -exponent);
}

TruncSeries TruncSeries::truncated(int order) const {
    TruncSeries out(var_, std::min(order, order_));
    for (const auto& [e, c] : coeffs_) {
        if (e > out.order_) break;
        out.coeffs_.emplace(e, c);
    }
    return out;
}

void TruncSeries::require_same_var(const TruncSeries& other) const {
    if (var_ != other.var_) throw DomainError("series in t and in t^-1 cannot be combined");
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& other) {
    require_same_var(other);
    *this = truncated(std::min(order_, other.order_));
    for (const auto& [e, c] : other.coeffs_) {
        if (e > order_) break;
        set(e, coeff(e) + c);
    }
    return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& other) { return *this += -other; }

TruncSeries operator-(const TruncSeries& a) {
    TruncSeries out = a;
    for (auto& [e, c] : out.coeffs_) c = -c;
    return out;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    a.require_same_var(b);
    // a = x^va * (known through order_a), so the product is known through
    // min(order_a + vb, order_b + va).
    const int order = std::min(a.order_ + b.min_exp(), b.order_ + a.min_exp());
    TruncSeries out(a.var_, order);
    for (const auto& [ea, ca] : a.coeffs_) {
        for (const auto& [eb, cb] : b.coeffs_) {
            const int e = ea + eb;
            if (e > order) break;
            out.coeffs_[e] += ca * cb;
        }
    }
    for (auto it = out.coeffs_.begin(); it != out.coeffs_.end();) {
        it = it->second == 0 ? out.coeffs_.erase(it) : std::next(it);
    }
    return out;
}

TruncSeries operator*(const TruncSeries& a, const Rational& c) {
    TruncSeries out(a.var_, a.order_);
    if (c == 0) return out;
    for (const auto& [e, v] : a.coeffs_) out.coeffs_.emplace(e, v * c);
    return out;
}

TruncSeries operator*(const LaurentPoly& p, const TruncSeries& a) {
    if (p.is_zero()) return TruncSeries(a.var_, a.order_);
    const LaurentPoly local = a.var_ == SeriesVar::T ? p : p.reflected();
    const int order = a.order_ + local.min_exp();
    TruncSeries out(a.var_, order);
    for (const auto& [ep, cp] : local.terms()) {
        for (const auto& [ea, ca] : a.coeffs_) {
            const int e = ep + ea;
            if (e > order) break;
            out.coeffs_[e] += Rational(cp) * ca;
        }
    }
    for (auto it = out.coeffs_.begin(); it != out.coeffs_.end();) {
        it = it->second == 0 ? out.coeffs_.erase(it) : std::next(it);
    }
    return out;
}

bool operator==(const TruncSeries& a, const TruncSeries& b) {
    return a.var_ == b.var_ && a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
}

TruncSeries TruncSeries::inverse() const {
    const auto val = valuation();
    if (!val) throw DomainError("inverse of a series that vanishes to order " + std::to_string(order_));
    const int v = *val;
    // this = x^v * u with u(0) != 0, u known through order_ - v.
    const int u_order = order_ - v;
    TruncSeries u(var_, u_order);
    for (const auto& [e, c] : coeffs_) u.coeffs_.emplace(e - v, c);

    TruncSeries w = constant(1 / u.coeff(0), 0, var_);
    const TruncSeries two = constant(2, u_order, var_);
    int known = 0;
    while (known < u_order) {
        known = std::min(2 * known + 1, u_order);
        TruncSeries w_ext = w;
        w_ext.order_ = known;
        w = (w_ext * (two - u.truncated(known) * w_ext)).truncated(known);
    }
    // x^{-v} * w
    TruncSeries out(var_, u_order - v);
    for (const auto& [e, c] : w.coeffs_) out.set(e - v, c);
    return out;
}

LaurentPoly TruncSeries::to_laurent() const {
    LaurentPoly out;
    for (const auto& [e, c] : coeffs_) {
        if (c.get_den() != 1) throw DomainError("coefficient " + c.get_str() + " is not an integer");
        out += LaurentPoly::monomial(c.get_num(), var_ == SeriesVar::T ? e : -e);
    }
    return out;
}

std::string TruncSeries::str() const {
    const std::string x = var_ == SeriesVar::T ? "t" : "t^-1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : coeffs_) {
        Rational a = c;
        const bool negative = a < 0;
        if (negative) a = -a;
        if (first) {
            if (negative) os << '-';
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        if (e == 0) {
            os << a.get_str();
            continue;
        }
        if (a != 1) os << a.get_str() << '*';
        os << (var_ == SeriesVar::T ? "t" : "(t^-1)");
        if (e != 1) os << '^' << e;
    }
    if (!first) os << " + ";
    os << "O(" << (var_ == SeriesVar::T ? "t" : "(t^-1)") << '^' << (order_ + 1) << ')';
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const TruncSeries& s) { return os << s.str(); }

TruncSeries expand_inverse_t_minus_1(int order) {
    if (order < 1) throw DomainError("expansion order must be >= 1, got " + std::to_string(order));
    TruncSeries s(SeriesVar::TInverse, order);
    for (int j = 1; j <= order; ++j) s.set(j, 1);
    return s;
}

std::optional<Rational> rational_sqrt(const Rational& q) {
    if (q < 0) return std::nullopt;
    const Integer num = q.get_num();
    const Integer den = q.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) {
        return std::nullopt;
    }
    Integer rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    Rational r(rn, rd);
    r.canonicalize();
    return r;
}

TruncSeries series_sqrt(const TruncSeries& s) {
    if (s.valuation() != 0) {
        throw DomainError("square root needs a series with nonzero constant term, got " + s.str());
    }
    const Rational c0 = s.coeff(0);
    const auto root = rational_sqrt(c0);
    if (!root) throw NotASquare("constant term " + c0.get_str() + " has no rational square root");

    // Newton: u <- (u + s/u) / 2, doubling the number of correct terms.
    const int order = s.order();
    TruncSeries u = TruncSeries::constant(*root, 0, s.variable());
    int known = 0;
    while (known < order) {
        known = std::min(2 * known + 1, order);
        TruncSeries u_ext = TruncSeries::constant(0, known, s.variable());
        for (const auto& [e, c] : u.coeffs()) u_ext.set(e, c);
        u = ((u_ext + s.truncated(known) * u_ext.inverse()) * Rational(1, 2)).truncated(known);
    }
    return u;
}

}  // namespace satkit
