#include "vandint/lemmas.hpp"

#include <algorithm>
#include <functional>

#include "vandint/parallel.hpp"

namespace vandint {

namespace {

std::vector<MultiPoly> shifted_roots(unsigned m) {
    std::vector<MultiPoly> args;
    for (unsigned j = 1; j <= m; ++j) args.push_back(MultiPoly(VarId::tau()) - MultiPoly(VarId::t(j)));
    return args;
}

std::string mk_label(unsigned m, unsigned k) { return "m=" + std::to_string(m) + ",k=" + std::to_string(k); }
std::string k_label(unsigned k) { return "k=" + std::to_string(k); }

/// Folds per-sample exact comparisons into one report: the first mismatch
/// if there is one, the last sample otherwise.
struct SampleFold {
    Rational lhs, rhs;
    bool mismatch = false;
    double worst = 0.0;

    void add(const Rational& a, const Rational& b) {
        const bool equal = a == b;
        worst = std::max(worst, abs(a - b).to_double());
        if (mismatch) return;
        lhs = a;
        rhs = b;
        mismatch = !equal;
    }
};

struct PolyFold {
    MultiPoly lhs, rhs;
    bool mismatch = false;

    void add(const MultiPoly& a, const MultiPoly& b) {
        if (mismatch) return;
        lhs = a;
        rhs = b;
        mismatch = !(a == b);
    }
};

enum GroupId : std::uint64_t { g_pure_ratio = 3, g_newton = 7, g_chain = 8, g_vertex = 9 };

}  // namespace

IdentityReport verify_elementary_derivative(unsigned m, unsigned k) {
    const auto args = shifted_roots(m);
    const MultiPoly lhs = diff(elementary_symmetric(static_cast<int>(k), args), VarId::tau());
    const MultiPoly rhs = Rational(m - k + 1) * elementary_symmetric(static_cast<int>(k) - 1, args);
    return exact_report("elementary", lhs, rhs, {m, std::nullopt, "", "", mk_label(m, k), std::nullopt});
}

IdentityReport verify_omega_derivative(unsigned m, unsigned k) {
    const auto args = shifted_roots(m);
    std::vector<MultiPoly> roots;
    for (unsigned j = 1; j <= m; ++j) roots.emplace_back(VarId::t(j));
    const MultiPoly lhs = diff(omega(roots, VarId::tau()), VarId::tau(), k);
    const MultiPoly rhs = factorial(k) * elementary_symmetric(static_cast<int>(m - k), args);
    return exact_report("omega", lhs, rhs, {m, std::nullopt, "", "", mk_label(m, k), std::nullopt});
}

IdentityReport verify_pure_derivative_ratio(unsigned n, unsigned k, const std::vector<RationalVector>& points) {
    const MultiPoly v = vandermonde_poly(n);
    SampleFold fold;
    for (unsigned i = 1; i <= n; ++i) {
        const MultiPoly derivative_i = diff(v, VarId::t(i), k);
        for (const auto& t : points) {
            const Assignment at = assignment_of(t);
            std::vector<MultiPoly> reciprocals;
            for (unsigned j = 1; j <= n; ++j) {
                if (j != i) reciprocals.emplace_back(Rational(1) / (t(i - 1) - t(j - 1)));
            }
            const Rational lhs = evaluate(derivative_i, at);
            const Rational rhs = factorial(k) * evaluate(v, at)
                                 * elementary_symmetric(static_cast<int>(k), reciprocals).constant_term();
            fold.add(lhs, rhs);
        }
    }
    IdentityReport r = exact_report("pure_ratio", fold.lhs, fold.rhs,
                                    {n, std::nullopt, "", "", k_label(k) + ", " + std::to_string(points.size())
                                                                  + " points x " + std::to_string(n) + " indices",
                                     std::nullopt});
    r.abs_err = fold.worst;
    r.passed = !fold.mismatch;
    return r;
}

IdentityReport verify_top_pure_derivative(unsigned n, unsigned i) {
    const MultiPoly lhs = diff(vandermonde_poly(n), VarId::t(i), n);
    return exact_report("top_pure", lhs, MultiPoly{}, {n, std::nullopt, "", "", "i=" + std::to_string(i), std::nullopt});
}

IdentityReport verify_pure_sum(unsigned n, unsigned k) {
    const auto tv = variables(VarFamily::t, n);
    const MultiPoly lhs = apply_operator(OperatorKind::pure(k), vandermonde_poly(n), tv);
    return exact_report("pure_sum", lhs, MultiPoly{}, {n, std::nullopt, "", "", k_label(k), std::nullopt});
}

IdentityReport verify_mixed_sum(unsigned n, unsigned k) {
    const auto tv = variables(VarFamily::t, n);
    const MultiPoly lhs = apply_operator(OperatorKind::mixed(k), vandermonde_poly(n), tv);
    return exact_report("mixed_sum", lhs, MultiPoly{}, {n, std::nullopt, "", "", k_label(k), std::nullopt});
}

IdentityReport verify_newton_operators(unsigned n, unsigned k, const std::vector<MultiPoly>& polys) {
    const auto tv = variables(VarFamily::t, n);
    PolyFold fold;
    for (const auto& p : polys) {
        const MultiPoly lhs = Rational(k) * apply_operator(OperatorKind::mixed(k), p, tv);
        MultiPoly rhs;
        for (unsigned i = 1; i < k; ++i) {
            // E_{k-i} P_i p, applied right to left
            const MultiPoly term = apply_operator(OperatorKind::mixed(k - i), apply_operator(OperatorKind::pure(i), p, tv), tv);
            if (i % 2 == 1) {
                rhs += term;
            } else {
                rhs -= term;
            }
        }
        const MultiPoly last = apply_operator(OperatorKind::pure(k), p, tv);
        if (k % 2 == 1) {
            rhs += last;
        } else {
            rhs -= last;
        }
        fold.add(lhs, rhs);
    }
    IdentityReport r = exact_report("newton", fold.lhs, fold.rhs,
                                    {n, std::nullopt, "", "",
                                     k_label(k) + ", " + std::to_string(polys.size()) + " polynomials", std::nullopt});
    r.passed = !fold.mismatch;
    return r;
}

const std::vector<std::string>& lemma_groups() {
    static const std::vector<std::string> groups{"elementary", "omega", "pure_ratio", "top_pure", "pure_sum",
                                                 "mixed_sum", "newton", "chain",  "vertex"};
    return groups;
}

std::vector<IdentityReport> run_lemma_suite(const LemmaSuiteConfig& config) {
    for (const auto& name : config.only) {
        if (std::find(lemma_groups().begin(), lemma_groups().end(), name) == lemma_groups().end()) {
            throw InvalidInput("unknown lemma group '" + name + "'");
        }
    }
    if (config.n_max < 1) throw InvalidInput("n-max must be at least 1");
    if (config.n_max > config.symbolic_limit) {
        throw SymbolicLimitExceeded("n-max " + std::to_string(config.n_max) + " exceeds the symbolic limit "
                                    + std::to_string(config.symbolic_limit));
    }
    auto wanted = [&](const std::string& g) { return config.only.empty() || config.only.contains(g); };

    const unsigned n_max = config.n_max;
    const unsigned cases = config.random_cases;
    const std::uint64_t seed = config.seed;
    const unsigned degree = config.random_degree;
    std::vector<std::function<IdentityReport()>> jobs;

    if (wanted("elementary")) {
        for (unsigned m = 1; m <= n_max; ++m) {
            for (unsigned k = 1; k <= m; ++k) jobs.emplace_back([m, k] { return verify_elementary_derivative(m, k); });
        }
    }
    if (wanted("omega")) {
        for (unsigned m = 1; m <= n_max; ++m) {
            for (unsigned k = 0; k <= m; ++k) jobs.emplace_back([m, k] { return verify_omega_derivative(m, k); });
        }
    }
    if (wanted("pure_ratio")) {
        for (unsigned n = 2; n <= n_max; ++n) {
            for (unsigned k = 1; k < n; ++k) {
                jobs.emplace_back([=] {
                    Rng rng(derive_seed(seed, {g_pure_ratio, n, k}));
                    std::vector<RationalVector> points;
                    for (unsigned c = 0; c < cases; ++c) points.push_back(random_increasing_rationals(rng, n));
                    IdentityReport r = verify_pure_derivative_ratio(n, k, points);
                    r.metadata.seed = seed;
                    return r;
                });
            }
        }
    }
    if (wanted("top_pure")) {
        for (unsigned n = 1; n <= n_max; ++n) {
            for (unsigned i = 1; i <= n; ++i) jobs.emplace_back([n, i] { return verify_top_pure_derivative(n, i); });
        }
    }
    if (wanted("pure_sum")) {
        for (unsigned n = 1; n <= n_max; ++n) {
            for (unsigned k = 1; k <= n; ++k) jobs.emplace_back([n, k] { return verify_pure_sum(n, k); });
        }
    }
    if (wanted("mixed_sum")) {
        for (unsigned n = 1; n <= n_max; ++n) {
            for (unsigned k = 1; k <= n; ++k) jobs.emplace_back([n, k] { return verify_mixed_sum(n, k); });
        }
    }
    if (wanted("newton")) {
        for (unsigned n = 1; n <= n_max; ++n) {
            for (unsigned k = 1; k <= n; ++k) {
                jobs.emplace_back([=] {
                    Rng rng(derive_seed(seed, {g_newton, n, k}));
                    const auto tv = variables(VarFamily::t, n);
                    std::vector<MultiPoly> polys;
                    for (unsigned c = 0; c < cases; ++c) polys.push_back(random_poly(rng, tv, std::max(degree + 1, n), 5));
                    IdentityReport r = verify_newton_operators(n, k, polys);
                    r.metadata.seed = seed;
                    return r;
                });
            }
        }
    }
    if (wanted("chain")) {
        for (unsigned n = 1; n <= n_max; ++n) {
            for (unsigned c = 0; c < cases; ++c) {
                jobs.emplace_back([=] {
                    Rng rng(derive_seed(seed, {g_chain, n, c}));
                    const auto tv = variables(VarFamily::t, n);
                    const MultiPoly psi = random_poly(rng, tv, degree, 4);
                    const auto f = AnalyticFunction::polynomial(random_coefficients(rng, n + 2));
                    IdentityReport r = check_chain_rule(n, psi, f);
                    r.metadata.seed = seed;
                    r.metadata.detail = "case " + std::to_string(c) + ", " + r.metadata.detail;
                    return r;
                });
            }
            jobs.emplace_back([=] {
                Rng rng(derive_seed(seed, {g_chain, n, cases}));
                const auto f = AnalyticFunction::polynomial(random_coefficients(rng, n + 2));
                IdentityReport r = check_chain_rule(n, vandermonde_poly(n, VarFamily::t, config.symbolic_limit), f);
                r.metadata.seed = seed;
                r.metadata.detail = "psi=V";
                return r;
            });
            jobs.emplace_back([=] {
                Rng rng(derive_seed(seed, {g_chain, n, cases + 1}));
                const auto f = AnalyticFunction::polynomial(random_coefficients(rng, n + 2));
                IdentityReport r = check_chain_rule_vandermonde(n, f, config.symbolic_limit);
                r.metadata.seed = seed;
                return r;
            });
        }
    }
    if (wanted("vertex")) {
        for (unsigned n = 1; n <= n_max; ++n) {
            for (unsigned c = 0; c < cases; ++c) {
                jobs.emplace_back([=] {
                    Rng rng(derive_seed(seed, {g_vertex, n, c, 0}));
                    const auto tv = variables(VarFamily::t, n);
                    std::vector<std::pair<Rational, Rational>> bounds;
                    for (unsigned i = 0; i < n; ++i) {
                        const RationalVector ends = random_increasing_rationals(rng, 2, 20);
                        bounds.emplace_back(ends(0), ends(1));
                    }
                    const MultiPoly phi = random_poly(rng, tv, degree, 5);
                    IdentityReport r = check_vertex_sum(n, bounds, phi);
                    r.metadata.seed = seed;
                    r.metadata.detail = "case " + std::to_string(c) + ", " + r.metadata.detail;
                    return r;
                });
                jobs.emplace_back([=] {
                    Rng rng(derive_seed(seed, {g_vertex, n, c, 1}));
                    const auto tv = variables(VarFamily::t, n);
                    const RationalVector x = random_increasing_rationals(rng, n + 1, 20);
                    const MultiPoly g = random_poly(rng, tv, degree, 3);
                    IdentityReport r = check_reduced_vertex_sum(x, g, config.symbolic_limit);
                    r.metadata.seed = seed;
                    r.metadata.detail = "case " + std::to_string(c) + ", " + r.metadata.detail;
                    return r;
                });
            }
        }
    }

    return parallel_map(jobs.size(), config.workers, [&jobs](std::size_t i) { return jobs[i](); });
}

}  // namespace vandint
