#include "vandint/random.hpp"

#include <algorithm>
#include <limits>

namespace vandint {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t base, std::initializer_list<std::uint64_t> coordinates) {
    std::uint64_t h = splitmix64(base);
    for (auto c : coordinates) h = splitmix64(h ^ splitmix64(c + 0x632be59bd9b4e019ULL));
    return h;
}

std::uint64_t Rng::below(std::uint64_t bound) {
    if (bound == 0) return 0;
    // Rejection sampling keeps the draw unbiased and library-independent.
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t r;
    do {
        r = engine_();
    } while (r >= limit);
    return r % bound;
}

std::int64_t Rng::between(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

double Rng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

Rational Rng::rational(std::int64_t bound) {
    const std::int64_t p = between(-bound, bound);
    const std::int64_t q = between(1, bound);
    return Rational(mpz_class(static_cast<long>(p)), mpz_class(static_cast<long>(q)));
}

RationalVector random_increasing_rationals(Rng& rng, unsigned count, std::int64_t bound) {
    std::vector<Rational> values;
    while (values.size() < count) {
        Rational r = rng.rational(bound);
        if (std::find(values.begin(), values.end(), r) == values.end()) values.push_back(std::move(r));
    }
    std::sort(values.begin(), values.end());
    RationalVector out(static_cast<Eigen::Index>(count));
    for (unsigned i = 0; i < count; ++i) out(i) = values[i];
    return out;
}

Eigen::VectorXd random_increasing_doubles(Rng& rng, unsigned count, double lo, double hi, double min_gap) {
    const double slack = (hi - lo) - min_gap * (count > 0 ? count - 1 : 0);
    if (slack < 0) throw InvalidInput("interval too short for the requested minimum gap");
    std::vector<double> u(count);
    for (auto& v : u) v = rng.uniform() * slack;
    std::sort(u.begin(), u.end());
    Eigen::VectorXd out(static_cast<Eigen::Index>(count));
    for (unsigned i = 0; i < count; ++i) out(i) = lo + u[i] + min_gap * i;
    return out;
}

MultiPoly random_poly(Rng& rng, std::span<const VarId> vars, unsigned max_degree, unsigned terms,
                      std::int64_t bound) {
    MultiPoly out;
    while (out.is_zero()) {
        for (unsigned t = 0; t < terms; ++t) {
            std::vector<Monomial::Power> powers;
            for (const auto& v : vars) {
                powers.emplace_back(v, static_cast<unsigned>(rng.below(max_degree + 1)));
            }
            out.add_term(Monomial(std::move(powers)), rng.rational(bound));
        }
    }
    return out;
}

std::vector<Rational> random_coefficients(Rng& rng, unsigned degree, std::int64_t bound) {
    std::vector<Rational> c(degree + 1);
    for (auto& v : c) v = rng.rational(bound);
    while (c.back().is_zero()) c.back() = rng.rational(bound);
    return c;
}

}  // namespace vandint
