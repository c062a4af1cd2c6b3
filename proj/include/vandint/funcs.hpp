#ifndef VANDINT_FUNCS_HPP
#define VANDINT_FUNCS_HPP

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "vandint/multipoly.hpp"
#include "vandint/rational.hpp"

namespace vandint {

/// sum_k coefficients[k] * a^k, lowest degree first, trailing zeros stripped.
struct Polynomial {
    std::vector<Rational> coefficients;
};

/// scale * exp(rate * a)
struct Exponential {
    double rate = 1.0;
    double scale = 1.0;
};

/// scale * sin(frequency * a + phase + quarter_turns * pi/2)
struct Sine {
    double frequency = 1.0;
    double phase = 0.0;
    double scale = 1.0;
    unsigned quarter_turns = 0;
};

/// scale * (a - pole)^(-power)
struct Reciprocal {
    double pole = 0.0;
    double scale = 1.0;
    unsigned power = 1;
};

/// A smooth test function with closed-form derivatives of every order.
class AnalyticFunction {
public:
    using Family = std::variant<Polynomial, Exponential, Sine, Reciprocal>;

    AnalyticFunction(Family family);  // NOLINT

    static AnalyticFunction polynomial(std::vector<Rational> coefficients);
    static AnalyticFunction exponential(double rate);
    static AnalyticFunction sine(double frequency, double phase);
    static AnalyticFunction reciprocal(double pole);

    /// "poly:c0,c1,..." | "exp:rate" | "sin:frequency,phase" | "recip:pole"
    static AnalyticFunction parse(std::string_view text);

    [[nodiscard]] const Family& family() const { return family_; }
    [[nodiscard]] bool is_polynomial() const { return std::holds_alternative<Polynomial>(family_); }
    /// Pole location of a Reciprocal, if any.
    [[nodiscard]] std::optional<double> pole() const;

    /// Grammar string that parses back to the same base function.
    [[nodiscard]] std::string describe() const;

    friend AnalyticFunction derivative(const AnalyticFunction& f, unsigned k);
    friend double eval(const AnalyticFunction& f, double point);

private:
    Family family_;
};

AnalyticFunction derivative(const AnalyticFunction& f, unsigned k);
double eval(const AnalyticFunction& f, double point);

/// Fast floating evaluator; polynomial coefficients are converted once.
std::function<double(double)> evaluator(const AnalyticFunction& f);

/// Exact value at a rational point; throws InvalidInput unless f is a polynomial.
Rational eval_exact(const AnalyticFunction& f, const Rational& point);

/// The univariate polynomial in `var`, or nothing for transcendental families.
std::optional<MultiPoly> as_polynomial(const AnalyticFunction& f, VarId var = VarId::alpha());

/// Throws PoleError when a Reciprocal's pole lies in [lower, upper].
void require_pole_outside(const AnalyticFunction& f, double lower, double upper);

}  // namespace vandint

#endif
