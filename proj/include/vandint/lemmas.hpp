#ifndef VANDINT_LEMMAS_HPP
#define VANDINT_LEMMAS_HPP

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "vandint/identity.hpp"
#include "vandint/random.hpp"

namespace vandint {

/// d/dt e_k(t-t1..t-tm) = (m-k+1) e_{k-1}(t-t1..t-tm), symbolic in t, t1..tm.
IdentityReport verify_elementary_derivative(unsigned m, unsigned k);
/// omega^(k)(t) = k! e_{m-k}(t-t1..t-tm).
IdentityReport verify_omega_derivative(unsigned m, unsigned k);
/// d^k V / dt_i^k = k! V(t) e_k(1/(t_i - t_j), j != i) at each given point, every i.
IdentityReport verify_pure_derivative_ratio(unsigned n, unsigned k, const std::vector<RationalVector>& points);
/// d^n V / dt_i^n is the zero polynomial.
IdentityReport verify_top_pure_derivative(unsigned n, unsigned i);
/// P_k V = 0.
IdentityReport verify_pure_sum(unsigned n, unsigned k);
/// E_k V = 0.
IdentityReport verify_mixed_sum(unsigned n, unsigned k);
/// k E_k p = sum_{i<k} (-1)^(i-1) E_{k-i} P_i p + (-1)^(k-1) P_k p for each polynomial.
IdentityReport verify_newton_operators(unsigned n, unsigned k, const std::vector<MultiPoly>& polys);

struct LemmaSuiteConfig {
    unsigned n_max = 5;
    /// Restrict to these groups; empty runs all of them.
    std::set<std::string> only;
    std::uint64_t seed = 1;
    unsigned workers = 1;
    unsigned random_cases = 10;
    unsigned symbolic_limit = kDefaultSymbolicLimit;
    /// Per-variable degree bound for random psi, phi and g.
    unsigned random_degree = 3;
};

/// Group names accepted by LemmaSuiteConfig::only, in run order:
/// elementary, omega, pure_ratio, top_pure, pure_sum, mixed_sum, newton, chain, vertex.
const std::vector<std::string>& lemma_groups();

/// Every (lemma, n, k) case up to n_max, in deterministic order.
std::vector<IdentityReport> run_lemma_suite(const LemmaSuiteConfig& config);

}  // namespace vandint

#endif
