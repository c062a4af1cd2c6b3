#ifndef VANDINT_IDENTITY_HPP
#define VANDINT_IDENTITY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "vandint/divdiff.hpp"
#include "vandint/funcs.hpp"
#include "vandint/multipoly.hpp"
#include "vandint/points.hpp"
#include "vandint/quad.hpp"
#include "vandint/symfun.hpp"

namespace vandint {

/// Below this |rhs| a floating check falls back to absolute error.
inline constexpr double kZeroThreshold = 1e-14;
inline constexpr double kAbsoluteFallbackTolerance = 1e-12;
inline constexpr double kDefaultTolerance = 1e-9;
inline constexpr int kDefaultIdentityOrder = 20;

using ReportValue = std::variant<double, Rational, MultiPoly>;

struct ReportMetadata {
    unsigned n = 0;
    std::optional<int> order;
    std::string function;
    std::string points;
    /// Free-form case label, e.g. "k=2".
    std::string detail;
    std::optional<std::uint64_t> seed;
};

/// Both sides of one identity instance and the verdict.
///
/// Exact reports pass iff lhs - rhs is identically zero. Floating reports
/// pass iff rel_err <= tolerance, or abs_err <= 1e-12 when |rhs| < 1e-14.
struct IdentityReport {
    std::string name;
    ReportValue lhs;
    ReportValue rhs;
    double abs_err = 0.0;
    double rel_err = 0.0;
    double tolerance = 0.0;
    bool exact = true;
    bool passed = false;
    ReportMetadata metadata;
};

IdentityReport exact_report(std::string name, ReportValue lhs, ReportValue rhs, ReportMetadata metadata);
IdentityReport numeric_report(std::string name, double lhs, double rhs, double tolerance, ReportMetadata metadata);

/// Function with phi(t) = 0 whenever t_i = t_{i+1}, as V(t) g(t) always is.
class ZeroPropertyFunction {
public:
    ZeroPropertyFunction(MultiPoly phi, unsigned n);
    /// phi = V(t1..tn) * g
    static ZeroPropertyFunction from_factor(const MultiPoly& g, unsigned n,
                                            unsigned symbolic_limit = kDefaultSymbolicLimit);

    [[nodiscard]] const MultiPoly& polynomial() const { return phi_; }
    [[nodiscard]] unsigned dimension() const { return n_; }
    /// Exact check: substituting t_{i+1} := t_i yields the zero polynomial for every i.
    [[nodiscard]] bool holds() const;
    [[nodiscard]] Rational operator()(const RationalVector& t) const;

private:
    MultiPoly phi_;
    unsigned n_;
};

/// Iterated exact integral over prod [lower_i, upper_i] in the variables
/// vars[0], vars[1], ... (innermost first).
MultiPoly integrate_over_box(const MultiPoly& p, std::span<const VarId> vars, std::span<const MultiPoly> lower,
                             std::span<const MultiPoly> upper);

/// The integral of V(t) over R(x) as a polynomial in x1..x(n+1).
MultiPoly vandermonde_integral_symbolic(unsigned n, unsigned symbolic_limit = kDefaultSymbolicLimit);

/// Lift of a rational vector to an assignment t1..tn (or another family).
Assignment assignment_of(const RationalVector& values, VarFamily family = VarFamily::t);

IdentityReport check_identity_numeric(const Eigen::VectorXd& x, const AnalyticFunction& f,
                                      int order = kDefaultIdentityOrder, double tolerance = kDefaultTolerance,
                                      const CubatureOptions& options = {});

/// Exact iterated integration of V(t) f^(n)(s(t)) against the exact
/// divided-difference table; f must be a polynomial.
IdentityReport check_identity_exact(const RationalVector& x, const AnalyticFunction& f,
                                    unsigned symbolic_limit = kDefaultSymbolicLimit);

/// int_{R(x)} V(t) dt - V(x)/n! as a polynomial in x; must vanish identically.
IdentityReport check_vandermonde_integral(unsigned n, unsigned symbolic_limit = kDefaultSymbolicLimit);

/// d^n(psi f(s))/dt1..dtn against sum_k E_k psi f^(n-k)(s).
IdentityReport check_chain_rule(unsigned n, const MultiPoly& psi, const AnalyticFunction& f);

/// V f^(n)(s) against d^n(V f(s))/dt1..dtn.
IdentityReport check_chain_rule_vandermonde(unsigned n, const AnalyticFunction& f,
                                            unsigned symbolic_limit = kDefaultSymbolicLimit);

/// Integral of the top mixed partial of phi over the box against the
/// alternating sum over its 2^n vertices.
IdentityReport check_vertex_sum(unsigned n, std::span<const std::pair<Rational, Rational>> bounds,
                                const MultiPoly& phi);

/// phi = V g on R(x): integral of the top mixed partial against the
/// (n+1)-term alternating sum over reduced_vertices(x). Also requires the
/// full 2^n-vertex sum and the zero property to agree.
IdentityReport check_reduced_vertex_sum(const RationalVector& x, const MultiPoly& g,
                                        unsigned symbolic_limit = kDefaultSymbolicLimit);

/// [y1..y(n+1)]f as (1/V(y)) int_{R(x)} V(t) f^(n)(s(t)) dt with x = x_from_y(y).
double divided_difference_via_integral(const Eigen::VectorXd& y, const AnalyticFunction& f,
                                       int order = kDefaultIdentityOrder, const CubatureOptions& options = {});

/// divided_difference_via_integral against the recursive table.
IdentityReport check_integral_representation(const Eigen::VectorXd& y, const AnalyticFunction& f,
                                             int order = kDefaultIdentityOrder,
                                             double tolerance = kDefaultTolerance,
                                             const CubatureOptions& options = {});

}  // namespace vandint

#endif
