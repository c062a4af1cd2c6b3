#ifndef VANDINT_MULTIPOLY_HPP
#define VANDINT_MULTIPOLY_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <ostream>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "vandint/errors.hpp"
#include "vandint/rational.hpp"

namespace vandint {

/// Variable families in rendering order. `t` holds t1..tn, `tau` is the
/// lone auxiliary variable t used by omega, `x` and `y` hold point
/// coordinates and `alpha` is the argument of univariate test functions.
enum class VarFamily : std::uint8_t { t, tau, x, y, alpha };

struct VarId {
    VarFamily family = VarFamily::t;
    std::uint16_t index = 0;

    static constexpr VarId t(unsigned i) { return {VarFamily::t, static_cast<std::uint16_t>(i)}; }
    static constexpr VarId x(unsigned i) { return {VarFamily::x, static_cast<std::uint16_t>(i)}; }
    static constexpr VarId y(unsigned i) { return {VarFamily::y, static_cast<std::uint16_t>(i)}; }
    static constexpr VarId tau() { return {VarFamily::tau, 0}; }
    static constexpr VarId alpha() { return {VarFamily::alpha, 0}; }

    /// One-based member of an indexed family; `tau` and `alpha` ignore i.
    static VarId of(VarFamily family, unsigned i);

    [[nodiscard]] std::string name() const;

    friend constexpr auto operator<=>(const VarId&, const VarId&) = default;
};

/// The variables family1..familyN in order.
std::vector<VarId> variables(VarFamily family, unsigned count);

/// Product of variable powers, kept sorted by variable with no zero exponents.
class Monomial {
public:
    using Power = std::pair<VarId, unsigned>;

    Monomial() = default;
    explicit Monomial(std::vector<Power> powers);
    static Monomial of(VarId v, unsigned exponent = 1);

    [[nodiscard]] const std::vector<Power>& powers() const { return powers_; }
    [[nodiscard]] unsigned degree() const;
    [[nodiscard]] unsigned exponent(VarId v) const;
    [[nodiscard]] bool is_one() const { return powers_.empty(); }
    /// Same monomial with v raised to `exponent` (zero removes v).
    [[nodiscard]] Monomial with(VarId v, unsigned exponent) const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial&, const Monomial&) = default;

    [[nodiscard]] std::string to_string() const;

private:
    std::vector<Power> powers_;
};

/// Graded lexicographic order: total degree first, then the exponent of
/// the earliest variable, and so on.
struct GradedLexLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

using Assignment = std::map<VarId, Rational>;

class MissingVariableError : public InvalidInput {
public:
    explicit MissingVariableError(std::vector<VarId> missing);
    [[nodiscard]] const std::vector<VarId>& missing() const { return missing_; }

private:
    std::vector<VarId> missing_;
};

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Terms with zero coefficients are never stored, so the zero polynomial
/// is the empty term map and equality is structural.
class MultiPoly {
public:
    using TermMap = std::map<Monomial, Rational, GradedLexLess>;

    MultiPoly() = default;
    MultiPoly(const Rational& constant);  // NOLINT: implicit lift of scalars
    template <std::integral I>
    MultiPoly(I constant) : MultiPoly(Rational(constant)) {}
    MultiPoly(VarId v);  // NOLINT
    MultiPoly(const Monomial& m, const Rational& coefficient);

    [[nodiscard]] const TermMap& terms() const { return terms_; }
    [[nodiscard]] std::size_t size() const { return terms_.size(); }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] bool is_constant() const;
    [[nodiscard]] Rational constant_term() const;
    [[nodiscard]] Rational coefficient(const Monomial& m) const;
    [[nodiscard]] std::set<VarId> variables() const;
    [[nodiscard]] bool contains(VarId v) const;
    [[nodiscard]] unsigned degree_in(VarId v) const;
    [[nodiscard]] unsigned total_degree() const;

    /// Deterministic rendering, terms in descending graded-lex order,
    /// e.g. "t1^2 - 1/2*t1*t2 + 3".
    [[nodiscard]] std::string to_string() const;

    MultiPoly& operator+=(const MultiPoly& rhs);
    MultiPoly& operator-=(const MultiPoly& rhs);
    MultiPoly& operator*=(const MultiPoly& rhs);
    MultiPoly& operator*=(const Rational& rhs);

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
    friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
    friend MultiPoly operator-(const MultiPoly& a);
    friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }

    void add_term(const Monomial& m, const Rational& coefficient);

private:
    TermMap terms_;
};

MultiPoly pow(const MultiPoly& base, unsigned exponent);

/// Partial derivative of the given order with respect to v.
MultiPoly diff(const MultiPoly& p, VarId v, unsigned order = 1);

/// Antiderivative in v with zero constant of integration.
MultiPoly antiderivative(const MultiPoly& p, VarId v);

/// Definite integral in v between polynomial bounds that must not contain v.
MultiPoly integrate(const MultiPoly& p, VarId v, const MultiPoly& lower, const MultiPoly& upper);

/// Replaces every occurrence of v with `replacement`.
MultiPoly substitute(const MultiPoly& p, VarId v, const MultiPoly& replacement);

/// Simultaneous substitution of several variables.
MultiPoly substitute(const MultiPoly& p, const std::map<VarId, MultiPoly>& replacements);

/// Substitutes constants for the listed variables; others are kept.
MultiPoly partial_evaluate(const MultiPoly& p, const Assignment& assignment);

/// Exact value; throws MissingVariableError when a variable of p is unassigned.
Rational evaluate(const MultiPoly& p, const Assignment& assignment);

inline std::ostream& operator<<(std::ostream& out, const MultiPoly& p) { return out << p.to_string(); }

}  // namespace vandint

#endif
