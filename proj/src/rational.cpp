#include "vandint/rational.hpp"

#include <cctype>
#include <cmath>
#include <limits>

#include "vandint/errors.hpp"

namespace vandint {

namespace {

std::string trim(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
    }
    return out;
}

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

mpz_class parse_integer(std::string_view s, std::string_view whole) {
    std::string_view digits = s;
    bool negative = false;
    if (!digits.empty() && (digits.front() == '+' || digits.front() == '-')) {
        negative = digits.front() == '-';
        digits.remove_prefix(1);
    }
    if (!all_digits(digits)) {
        throw InvalidInput("not a number: '" + std::string(whole) + "'");
    }
    mpz_class v(std::string(digits), 10);
    return negative ? mpz_class(-v) : v;
}

mpz_class power_of_ten(unsigned long e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
    return r;
}

Rational parse_decimal(std::string_view s, std::string_view whole) {
    bool negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }

    long exponent = 0;
    if (const auto epos = s.find_first_of("eE"); epos != std::string_view::npos) {
        const mpz_class e = parse_integer(s.substr(epos + 1), whole);
        if (!e.fits_slong_p() || abs(e) > 4096) {
            throw InvalidInput("exponent out of range: '" + std::string(whole) + "'");
        }
        exponent = e.get_si();
        s = s.substr(0, epos);
    }

    std::string digits;
    long fraction_digits = 0;
    if (const auto dot = s.find('.'); dot != std::string_view::npos) {
        const auto int_part = s.substr(0, dot);
        const auto frac_part = s.substr(dot + 1);
        if ((int_part.empty() && frac_part.empty())
            || (!int_part.empty() && !all_digits(int_part))
            || (!frac_part.empty() && !all_digits(frac_part))) {
            throw InvalidInput("not a number: '" + std::string(whole) + "'");
        }
        digits = std::string(int_part) + std::string(frac_part);
        fraction_digits = static_cast<long>(frac_part.size());
    } else {
        if (!all_digits(s)) throw InvalidInput("not a number: '" + std::string(whole) + "'");
        digits = std::string(s);
    }

    mpz_class num(digits, 10);
    if (negative) num = -num;
    const long scale = exponent - fraction_digits;
    if (scale >= 0) return Rational(num * power_of_ten(static_cast<unsigned long>(scale)), 1);
    return Rational(num, power_of_ten(static_cast<unsigned long>(-scale)));
}

}  // namespace

Rational::Rational(const mpz_class& numerator, const mpz_class& denominator) {
    if (denominator == 0) throw InvalidInput("rational with zero denominator");
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

Rational::Rational(const mpq_class& value) : value_(value) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
    const std::string s = trim(text);
    if (s.empty()) throw InvalidInput("empty number");
    if (const auto slash = s.find('/'); slash != std::string::npos) {
        const mpz_class num = parse_integer(std::string_view(s).substr(0, slash), s);
        const mpz_class den = parse_integer(std::string_view(s).substr(slash + 1), s);
        if (den == 0) throw InvalidInput("zero denominator: '" + s + "'");
        return Rational(num, den);
    }
    return parse_decimal(s, s);
}

std::string Rational::to_string() const {
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw std::domain_error("division by zero");
    value_ /= rhs.value_;
    return *this;
}

Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

Rational pow(const Rational& base, unsigned exponent) {
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.raw().get_num_mpz_t(), exponent);
    mpz_pow_ui(den.get_mpz_t(), base.raw().get_den_mpz_t(), exponent);
    return Rational(num, den);
}

Rational factorial(unsigned n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return Rational(r, 1);
}

double Rational::to_double() const {
    // get_d truncates toward zero; step to the neighbour away from zero when it is closer.
    const double truncated = value_.get_d();
    if (!std::isfinite(truncated)) return truncated;
    const double outward = std::nextafter(truncated, sgn(value_) < 0 ? -std::numeric_limits<double>::infinity()
                                                                     : std::numeric_limits<double>::infinity());
    if (!std::isfinite(outward)) return truncated;
    const mpq_class below_gap = abs(value_ - mpq_class(truncated));
    const mpq_class above_gap = abs(mpq_class(outward) - value_);
    const int c = cmp(below_gap, above_gap);
    if (c < 0) return truncated;
    if (c > 0) return outward;
    int exponent = 0;
    const double mantissa = std::frexp(truncated, &exponent);
    const auto bits = static_cast<std::int64_t>(std::ldexp(mantissa, std::numeric_limits<double>::digits));
    return bits % 2 == 0 ? truncated : outward;
}

}  // namespace vandint
