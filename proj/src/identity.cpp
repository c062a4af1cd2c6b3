#include "vandint/identity.hpp"

#include <algorithm>
#include <cmath>

namespace vandint {

namespace {

double max_abs_coefficient(const MultiPoly& p) {
    double m = 0.0;
    for (const auto& [mono, c] : p.terms()) m = std::max(m, std::abs(c.to_double()));
    return m;
}

std::string points_text(const RationalVector& v) {
    std::string out;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (i > 0) out += ',';
        out += v(i).to_string();
    }
    return out;
}

std::string points_text(const Eigen::VectorXd& v) {
    std::string out;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (i > 0) out += ',';
        out += to_string(Number(v(i)));
    }
    return out;
}

MultiPoly require_polynomial(const AnalyticFunction& f) {
    auto p = as_polynomial(f);
    if (!p) throw InvalidInput("exact pipeline needs a polynomial function, got " + f.describe());
    return *p;
}

/// f(t1 + ... + tn) as a polynomial in the t variables.
MultiPoly compose_with_sum(const AnalyticFunction& f, std::span<const VarId> vars) {
    return substitute(require_polynomial(f), VarId::alpha(), sum_poly(vars));
}

}  // namespace

IdentityReport exact_report(std::string name, ReportValue lhs, ReportValue rhs, ReportMetadata metadata) {
    IdentityReport r;
    r.name = std::move(name);
    r.exact = true;
    r.tolerance = 0.0;
    r.metadata = std::move(metadata);
    if (std::holds_alternative<Rational>(lhs) && std::holds_alternative<Rational>(rhs)) {
        const auto& a = std::get<Rational>(lhs);
        const auto& b = std::get<Rational>(rhs);
        const Rational diff = abs(a - b);
        r.passed = diff.is_zero();
        r.abs_err = diff.to_double();
        r.rel_err = b.is_zero() ? r.abs_err : (diff / abs(b)).to_double();
    } else if (std::holds_alternative<MultiPoly>(lhs) && std::holds_alternative<MultiPoly>(rhs)) {
        const auto& a = std::get<MultiPoly>(lhs);
        const auto& b = std::get<MultiPoly>(rhs);
        const MultiPoly diff = a - b;
        r.passed = diff.is_zero();
        r.abs_err = max_abs_coefficient(diff);
        const double scale = max_abs_coefficient(b);
        r.rel_err = scale == 0.0 ? r.abs_err : r.abs_err / scale;
    } else {
        throw std::logic_error("exact report needs two rationals or two polynomials");
    }
    r.lhs = std::move(lhs);
    r.rhs = std::move(rhs);
    return r;
}

IdentityReport numeric_report(std::string name, double lhs, double rhs, double tolerance, ReportMetadata metadata) {
    IdentityReport r;
    r.name = std::move(name);
    r.lhs = lhs;
    r.rhs = rhs;
    r.exact = false;
    r.tolerance = tolerance;
    r.metadata = std::move(metadata);
    r.abs_err = std::abs(lhs - rhs);
    if (std::abs(rhs) < kZeroThreshold) {
        r.rel_err = r.abs_err;
        r.passed = r.abs_err <= kAbsoluteFallbackTolerance;
    } else {
        r.rel_err = r.abs_err / std::abs(rhs);
        r.passed = r.rel_err <= tolerance;
    }
    if (!std::isfinite(lhs) || !std::isfinite(rhs)) r.passed = false;
    return r;
}

// ---------------------------------------------------------------------------

ZeroPropertyFunction::ZeroPropertyFunction(MultiPoly phi, unsigned n) : phi_(std::move(phi)), n_(n) {
    for (const auto& v : phi_.variables()) {
        if (v.family != VarFamily::t || v.index < 1 || v.index > n_) {
            throw InvalidInput("zero-property function may only use t1..t" + std::to_string(n_));
        }
    }
}

ZeroPropertyFunction ZeroPropertyFunction::from_factor(const MultiPoly& g, unsigned n, unsigned symbolic_limit) {
    return ZeroPropertyFunction(vandermonde_poly(n, VarFamily::t, symbolic_limit) * g, n);
}

bool ZeroPropertyFunction::holds() const {
    for (unsigned i = 1; i < n_; ++i) {
        if (!substitute(phi_, VarId::t(i + 1), MultiPoly(VarId::t(i))).is_zero()) return false;
    }
    return true;
}

Rational ZeroPropertyFunction::operator()(const RationalVector& t) const {
    if (t.size() != static_cast<Eigen::Index>(n_)) throw InvalidInput("point has the wrong dimension");
    return evaluate(phi_, assignment_of(t));
}

Assignment assignment_of(const RationalVector& values, VarFamily family) {
    Assignment a;
    for (Eigen::Index i = 0; i < values.size(); ++i) {
        a.emplace(VarId::of(family, static_cast<unsigned>(i) + 1), values(i));
    }
    return a;
}

MultiPoly integrate_over_box(const MultiPoly& p, std::span<const VarId> vars, std::span<const MultiPoly> lower,
                             std::span<const MultiPoly> upper) {
    if (lower.size() != vars.size() || upper.size() != vars.size()) {
        throw InvalidInput("one pair of bounds per integration variable is required");
    }
    MultiPoly out = p;
    for (std::size_t i = 0; i < vars.size(); ++i) out = integrate(out, vars[i], lower[i], upper[i]);
    return out;
}

MultiPoly vandermonde_integral_symbolic(unsigned n, unsigned symbolic_limit) {
    if (n < 1) throw InvalidInput("Vandermonde integral needs n >= 1");
    if (n + 1 > symbolic_limit + 1 || n > symbolic_limit) {
        throw SymbolicLimitExceeded("n = " + std::to_string(n) + " exceeds the symbolic limit "
                                    + std::to_string(symbolic_limit));
    }
    const auto tv = variables(VarFamily::t, n);
    std::vector<MultiPoly> lower, upper;
    for (unsigned i = 1; i <= n; ++i) {
        lower.emplace_back(VarId::x(i));
        upper.emplace_back(VarId::x(i + 1));
    }
    return integrate_over_box(vandermonde_poly(n, VarFamily::t, symbolic_limit), tv, lower, upper);
}

// ---------------------------------------------------------------------------

IdentityReport check_identity_numeric(const Eigen::VectorXd& x, const AnalyticFunction& f, int order,
                                      double tolerance, const CubatureOptions& options) {
    const auto n = static_cast<unsigned>(x.size() - 1);
    if (x.size() < 2 || n > 8) throw InvalidInput("identity check needs 2 to 9 points");
    const CubatureResult lhs = weighted_integral(x, f, order, options);
    const double rhs = scaled_divided_difference(x, f);
    return numeric_report("integral_identity", lhs.value, rhs, tolerance,
                          {n, order, f.describe(), points_text(x), "", std::nullopt});
}

IdentityReport check_identity_exact(const RationalVector& x, const AnalyticFunction& f, unsigned symbolic_limit) {
    require_increasing(x);
    const auto n = static_cast<unsigned>(x.size() - 1);
    const auto tv = variables(VarFamily::t, n);

    const MultiPoly integrand =
        vandermonde_poly(n, VarFamily::t, symbolic_limit) * compose_with_sum(derivative(f, n), tv);
    std::vector<MultiPoly> lower, upper;
    for (unsigned i = 0; i < n; ++i) {
        lower.emplace_back(x(i));
        upper.emplace_back(x(i + 1));
    }
    const MultiPoly integral = integrate_over_box(integrand, tv, lower, upper);
    const Rational rhs = scaled_divided_difference(x, f);
    return exact_report("integral_identity", integral.constant_term(), rhs,
                        {n, std::nullopt, f.describe(), points_text(x), "exact", std::nullopt});
}

IdentityReport check_vandermonde_integral(unsigned n, unsigned symbolic_limit) {
    const MultiPoly lhs = vandermonde_integral_symbolic(n, symbolic_limit);
    const MultiPoly rhs = vandermonde_poly(n + 1, VarFamily::x, symbolic_limit + 1) * (Rational(1) / factorial(n));
    return exact_report("vandermonde_integral", lhs, rhs, {n, std::nullopt, "", "x1..x" + std::to_string(n + 1), "symbolic", std::nullopt});
}

IdentityReport check_chain_rule(unsigned n, const MultiPoly& psi, const AnalyticFunction& f) {
    const auto tv = variables(VarFamily::t, n);
    const MultiPoly phi = psi * compose_with_sum(f, tv);
    const MultiPoly lhs = mixed_partial(phi, tv);
    MultiPoly rhs;
    for (unsigned k = 0; k <= n; ++k) {
        const MultiPoly ek_psi = apply_operator(OperatorKind::mixed(k), psi, tv);
        if (ek_psi.is_zero()) continue;
        rhs += ek_psi * compose_with_sum(derivative(f, n - k), tv);
    }
    return exact_report("chain_rule", lhs, rhs, {n, std::nullopt, f.describe(), "", "psi=" + psi.to_string(), std::nullopt});
}

IdentityReport check_chain_rule_vandermonde(unsigned n, const AnalyticFunction& f, unsigned symbolic_limit) {
    const auto tv = variables(VarFamily::t, n);
    const MultiPoly v = vandermonde_poly(n, VarFamily::t, symbolic_limit);
    const MultiPoly lhs = v * compose_with_sum(derivative(f, n), tv);
    const MultiPoly rhs = mixed_partial(v * compose_with_sum(f, tv), tv);
    return exact_report("chain_rule_vandermonde", lhs, rhs, {n, std::nullopt, f.describe(), "", "psi=V", std::nullopt});
}

IdentityReport check_vertex_sum(unsigned n, std::span<const std::pair<Rational, Rational>> bounds,
                                const MultiPoly& phi) {
    if (bounds.size() != n) throw InvalidInput("one interval per dimension is required");
    for (const auto& [a, b] : bounds) {
        if (!(a < b)) throw InvalidInput("rectangle intervals must have positive length");
    }
    const auto tv = variables(VarFamily::t, n);
    std::vector<MultiPoly> lower, upper;
    for (const auto& [a, b] : bounds) {
        lower.emplace_back(a);
        upper.emplace_back(b);
    }
    const Rational lhs = integrate_over_box(mixed_partial(phi, tv), tv, lower, upper).constant_term();

    Rational rhs(0);
    for (const auto& vertex : enumerate_vertices<Rational>(bounds)) {
        const Rational value = evaluate(phi, assignment_of(vertex.point));
        if ((n - vertex.selector.weight()) % 2 == 0) {
            rhs += value;
        } else {
            rhs -= value;
        }
    }
    std::string box;
    for (const auto& [a, b] : bounds) box += "[" + a.to_string() + "," + b.to_string() + "]";
    return exact_report("vertex_sum", lhs, rhs, {n, std::nullopt, "", box, "phi=" + phi.to_string(), std::nullopt});
}

IdentityReport check_reduced_vertex_sum(const RationalVector& x, const MultiPoly& g, unsigned symbolic_limit) {
    require_increasing(x);
    const auto n = static_cast<unsigned>(x.size() - 1);
    const auto tv = variables(VarFamily::t, n);
    const ZeroPropertyFunction phi = ZeroPropertyFunction::from_factor(g, n, symbolic_limit);

    std::vector<MultiPoly> lower, upper;
    std::vector<std::pair<Rational, Rational>> bounds;
    for (unsigned i = 0; i < n; ++i) {
        lower.emplace_back(x(i));
        upper.emplace_back(x(i + 1));
        bounds.emplace_back(x(i), x(i + 1));
    }
    const Rational lhs = integrate_over_box(mixed_partial(phi.polynomial(), tv), tv, lower, upper).constant_term();

    const auto vertices = reduced_vertices(x);
    Rational reduced(0);
    for (unsigned i = 1; i <= n + 1; ++i) {
        const Rational value = phi(vertices[i - 1]);
        if ((n + 1 - i) % 2 == 0) {
            reduced += value;
        } else {
            reduced -= value;
        }
    }

    Rational full(0);
    const auto all = enumerate_vertices<Rational>(bounds);
    for (const auto& vertex : all) {
        const Rational value = phi(vertex.point);
        if ((n - vertex.selector.weight()) % 2 == 0) {
            full += value;
        } else {
            full -= value;
        }
    }

    // reduced_vertices(x)[i] must be the corner picked by the i-th monotone selector.
    bool vertices_match = true;
    const auto selectors = monotone_selectors(n);
    for (std::size_t i = 0; i < selectors.size(); ++i) {
        const auto it = std::find_if(all.begin(), all.end(),
                                     [&](const Vertex<Rational>& v) { return v.selector == selectors[i]; });
        vertices_match = vertices_match && it != all.end() && it->point == vertices[i];
    }

    IdentityReport report = exact_report("reduced_vertex_sum", lhs, reduced,
                                         {n, std::nullopt, "", points_text(x),
                                          "g=" + g.to_string() + "; full vertex sum=" + full.to_string(),
                                          std::nullopt});
    report.passed = report.passed && full == reduced && phi.holds() && vertices_match;
    return report;
}

double divided_difference_via_integral(const Eigen::VectorXd& y, const AnalyticFunction& f, int order,
                                       const CubatureOptions& options) {
    require_increasing(y, 0.0);
    const Eigen::VectorXd x = x_from_y(y);
    return weighted_integral(x, f, order, options).value / vandermonde_value(y);
}

IdentityReport check_integral_representation(const Eigen::VectorXd& y, const AnalyticFunction& f, int order,
                                             double tolerance, const CubatureOptions& options) {
    const double via_integral = divided_difference_via_integral(y, f, order, options);
    const double table = divided_difference(y, f);
    return numeric_report("integral_representation", via_integral, table, tolerance,
                          {static_cast<unsigned>(y.size() - 1), order, f.describe(), points_text(y), "", std::nullopt});
}

}  // namespace vandint
