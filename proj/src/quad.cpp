#include "vandint/quad.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <numbers>
#include <string>
#include <thread>
#include <vector>

namespace vandint {

namespace {

constexpr std::uint64_t kChunkSize = 4096;

/// Neumaier's variant of Kahan summation.
struct CompensatedSum {
    double sum = 0.0;
    double compensation = 0.0;

    void add(double v) {
        const double t = sum + v;
        if (std::abs(sum) >= std::abs(v)) {
            compensation += (sum - t) + v;
        } else {
            compensation += (v - t) + sum;
        }
        sum = t;
    }
    [[nodiscard]] double value() const { return sum + compensation; }
};

// Legendre P_n and its derivative at x.
std::pair<double, double> legendre(int n, double x) {
    double p0 = 1.0;
    double p1 = x;
    for (int k = 2; k <= n; ++k) {
        const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = pk;
    }
    const double pn = n == 0 ? 1.0 : p1;
    const double pn_minus_1 = n == 0 ? 0.0 : p0;
    const double dp = n * (x * pn - pn_minus_1) / (x * x - 1.0);
    return {pn, dp};
}

unsigned resolve_workers(unsigned requested) {
    if (requested != 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

}  // namespace

QuadratureRule gauss_legendre(int order) {
    if (order < 1 || order > kMaxQuadratureOrder) {
        throw InvalidInput("quadrature order " + std::to_string(order) + " outside [1, "
                           + std::to_string(kMaxQuadratureOrder) + "]");
    }
    QuadratureRule rule{Eigen::VectorXd::Zero(order), Eigen::VectorXd::Zero(order)};
    if (order == 1) {
        rule.weights(0) = 2.0;
        return rule;
    }
    // Roots come in +/- pairs; solve for the positive ones and mirror.
    const int half = (order + 1) / 2;
    for (int i = 0; i < half; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            const auto [p, d] = legendre(order, x);
            dp = d;
            const double step = p / d;
            x -= step;
            if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(x))) break;
        }
        dp = legendre(order, x).second;
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes(order - 1 - i) = x;
        rule.nodes(i) = -x;
        rule.weights(order - 1 - i) = w;
        rule.weights(i) = w;
    }
    if (order % 2 == 1) rule.nodes(order / 2) = 0.0;
    return rule;
}

CubatureResult integrate_over_rectangle(const SequentialRectangle<double>& rect, const Integrand& integrand,
                                        int order, const CubatureOptions& options) {
    const QuadratureRule rule = gauss_legendre(order);
    const auto n = static_cast<std::size_t>(rect.dimension());

    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (total > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(order)
            || total * static_cast<std::uint64_t>(order) > options.budget) {
            throw BudgetExceeded("cubature with " + std::to_string(order) + " nodes per axis in "
                                 + std::to_string(n) + " dimensions exceeds the evaluation budget of "
                                 + std::to_string(options.budget));
        }
        total *= static_cast<std::uint64_t>(order);
    }

    // Per-axis mapped nodes and scaled weights.
    std::vector<std::vector<double>> nodes(n, std::vector<double>(static_cast<std::size_t>(order)));
    std::vector<std::vector<double>> weights(n, std::vector<double>(static_cast<std::size_t>(order)));
    for (std::size_t a = 0; a < n; ++a) {
        const double lo = rect.lower(static_cast<Eigen::Index>(a));
        const double hi = rect.upper(static_cast<Eigen::Index>(a));
        const double half = 0.5 * (hi - lo);
        const double mid = 0.5 * (hi + lo);
        for (int k = 0; k < order; ++k) {
            nodes[a][static_cast<std::size_t>(k)] = mid + half * rule.nodes(k);
            weights[a][static_cast<std::size_t>(k)] = half * rule.weights(k);
        }
    }

    const std::uint64_t chunks = (total + kChunkSize - 1) / kChunkSize;
    std::vector<double> partial(static_cast<std::size_t>(chunks), 0.0);

    auto run_chunk = [&](std::uint64_t chunk, std::vector<std::size_t>& digits, std::vector<double>& point) {
        const std::uint64_t begin = chunk * kChunkSize;
        const std::uint64_t end = std::min(total, begin + kChunkSize);
        std::uint64_t rest = begin;
        for (std::size_t a = 0; a < n; ++a) {
            digits[a] = static_cast<std::size_t>(rest % static_cast<std::uint64_t>(order));
            rest /= static_cast<std::uint64_t>(order);
        }
        CompensatedSum sum;
        for (std::uint64_t idx = begin; idx < end; ++idx) {
            double w = 1.0;
            for (std::size_t a = 0; a < n; ++a) {
                point[a] = nodes[a][digits[a]];
                w *= weights[a][digits[a]];
            }
            sum.add(w * integrand(std::span<const double>(point)));
            for (std::size_t a = 0; a < n; ++a) {
                if (++digits[a] < static_cast<std::size_t>(order)) break;
                digits[a] = 0;
            }
        }
        partial[static_cast<std::size_t>(chunk)] = sum.value();
    };

    const unsigned workers = static_cast<unsigned>(
        std::min<std::uint64_t>(resolve_workers(options.workers), chunks));
    if (workers <= 1) {
        std::vector<std::size_t> digits(n);
        std::vector<double> point(n);
        for (std::uint64_t c = 0; c < chunks; ++c) run_chunk(c, digits, point);
    } else {
        std::atomic<std::uint64_t> next{0};
        std::atomic<bool> failed{false};
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errors(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                std::vector<std::size_t> digits(n);
                std::vector<double> point(n);
                try {
                    for (std::uint64_t c = next++; c < chunks && !failed; c = next++) run_chunk(c, digits, point);
                } catch (...) {
                    errors[w] = std::current_exception();
                    failed = true;
                }
            });
        }
        for (auto& t : pool) t.join();
        for (auto& e : errors) {
            if (e) std::rethrow_exception(e);
        }
    }

    CompensatedSum combined;
    for (double p : partial) combined.add(p);
    return {combined.value(), order, total};
}

CubatureResult weighted_integral(const Eigen::VectorXd& x, const AnalyticFunction& f, int order,
                            const CubatureOptions& options) {
    require_increasing(x, 0.0);
    const SequentialRectangle<double> rect(x);
    const auto n = static_cast<unsigned>(rect.dimension());
    const auto [low, high] = sum_bounds(x);
    require_pole_outside(f, low, high);

    const auto fn = evaluator(derivative(f, n));
    const Integrand integrand = [&fn](std::span<const double> t) {
        double v = 1.0;
        double s = 0.0;
        for (std::size_t j = 0; j < t.size(); ++j) {
            s += t[j];
            for (std::size_t i = 0; i < j; ++i) v *= t[j] - t[i];
        }
        return v * fn(s);
    };
    return integrate_over_rectangle(rect, integrand, order, options);
}

double predicted_quadrature_error(const Eigen::VectorXd& x, const AnalyticFunction& f, int order) {
    const auto c = f.pole();
    if (!c) return 0.0;
    const auto [low, high] = sum_bounds(x);
    require_pole_outside(f, low, high);
    // Along axis i the other coordinates shift s by at most the distance to
    // the nearer end of [low, high], so the pole sits at least d beyond the
    // axis interval.
    const double d = std::min(std::abs(*c - low), std::abs(*c - high));
    double worst = 0.0;
    for (Eigen::Index i = 0; i + 1 < x.size(); ++i) {
        const double a = 1.0 + 2.0 * d / (x(i + 1) - x(i));
        const double rho = a + std::sqrt(a * a - 1.0);
        worst = std::max(worst, std::pow(rho, -2.0 * order));
    }
    return worst;
}

}  // namespace vandint
