#ifndef VANDINT_RANDOM_HPP
#define VANDINT_RANDOM_HPP

#include <cstdint>
#include <initializer_list>
#include <random>
#include <span>
#include <vector>

#include "vandint/multipoly.hpp"
#include "vandint/points.hpp"

namespace vandint {

/// Mixes a base seed with case coordinates (splitmix64), so every case of a
/// suite draws from its own stream regardless of execution order.
std::uint64_t derive_seed(std::uint64_t base, std::initializer_list<std::uint64_t> coordinates);

/// Seeded generator with platform-independent draws.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform integer in [0, bound).
    std::uint64_t below(std::uint64_t bound);
    /// Uniform integer in [lo, hi].
    std::int64_t between(std::int64_t lo, std::int64_t hi);
    /// Uniform double in [0, 1).
    double uniform();
    /// p/q with |p| <= bound, 1 <= q <= bound.
    Rational rational(std::int64_t bound = 100);

private:
    std::mt19937_64 engine_;
};

/// `count` distinct sorted rationals with numerators and denominators bounded by `bound`.
RationalVector random_increasing_rationals(Rng& rng, unsigned count, std::int64_t bound = 100);

/// `count` sorted doubles in [lo, hi] with consecutive gaps of at least `min_gap`.
Eigen::VectorXd random_increasing_doubles(Rng& rng, unsigned count, double lo, double hi, double min_gap);

/// Random nonzero polynomial with up to `terms` terms, each variable to a power <= max_degree.
MultiPoly random_poly(Rng& rng, std::span<const VarId> vars, unsigned max_degree, unsigned terms,
                      std::int64_t bound = 100);

/// Coefficients c0..c_degree with a nonzero leading one.
std::vector<Rational> random_coefficients(Rng& rng, unsigned degree, std::int64_t bound = 100);

}  // namespace vandint

#endif
