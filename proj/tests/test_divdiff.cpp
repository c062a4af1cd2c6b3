#include <algorithm>
#include <cmath>

#include <doctest.h>

#include "vandint/divdiff.hpp"
#include "vandint/random.hpp"

using namespace vandint;

namespace {

RationalVector rv(std::initializer_list<Rational> values) {
    RationalVector v(static_cast<Eigen::Index>(values.size()));
    Eigen::Index i = 0;
    for (const auto& r : values) v(i++) = r;
    return v;
}

/// Size of the floating rounding error: sum_j |f(y_j)| / prod_{k != j} |y_j - y_k|.
double rounding_scale(const Eigen::VectorXd& y, const AnalyticFunction& f) {
    double scale = 0.0;
    for (Eigen::Index j = 0; j < y.size(); ++j) {
        double denominator = 1.0;
        for (Eigen::Index k = 0; k < y.size(); ++k) {
            if (k != j) denominator *= std::abs(y(j) - y(k));
        }
        scale += std::abs(eval(f, y(j))) / denominator;
    }
    return scale;
}

/// Coefficients of a^m / m!.
AnalyticFunction scaled_power(unsigned m) {
    std::vector<Rational> c(m + 1, Rational(0));
    c[m] = Rational(1) / factorial(m);
    return AnalyticFunction::polynomial(c);
}

}  // namespace

TEST_CASE("divided difference examples") {
    const auto square = AnalyticFunction::parse("poly:0,0,1");
    CHECK(divided_difference(rv({1, 2, 3}), square) == Rational(1));
    CHECK(divided_difference(Eigen::VectorXd(Eigen::Vector3d(1, 2, 3)), square) == 1.0);
    CHECK(divided_difference(rv({1, 2, 3}), AnalyticFunction::parse("poly:5")) == Rational(0));
    CHECK(divided_difference(rv({Rational(-7, 3), 1}), AnalyticFunction::parse("poly:5")) == Rational(0));
    for (unsigned n = 1; n <= 6; ++n) {
        Rng rng(derive_seed(501, {n}));
        const RationalVector y = random_increasing_rationals(rng, n + 1);
        CHECK(divided_difference(y, scaled_power(n)) == Rational(1) / factorial(n));
    }
    CHECK(std::get<Rational>(divided_difference(PointSequence::parse("1,2,3"), square)) == Rational(1));
    CHECK(std::holds_alternative<double>(divided_difference(PointSequence::parse("1,2,3"), AnalyticFunction::exponential(1.0))));
}

TEST_CASE("sum form examples") {
    CHECK(std::abs(divided_difference_sum_form(Eigen::VectorXd(Eigen::Vector2d(0, 1)), AnalyticFunction::exponential(1.0)) - std::expm1(1.0)) < 1e-15);
    CHECK(divided_difference_sum_form(rv({1, 2, 3}), AnalyticFunction::parse("poly:1")) == Rational(0));
}

TEST_CASE("right side examples") {
    CHECK(std::abs(scaled_divided_difference(Eigen::VectorXd(Eigen::Vector2d(0, 1)), AnalyticFunction::exponential(1.0)) - std::expm1(1.0)) < 1e-15);
    CHECK(scaled_divided_difference(rv({0, 1, 2}), AnalyticFunction::parse("poly:0,0,1/2")) == Rational(1));
    // Reciprocal-product sum at y=(1,2,3) for a^3: 1/2 - 8 + 27/2 = 6, times V(x) = 2.
    CHECK(divided_difference_sum_form(rv({1, 2, 3}), AnalyticFunction::parse("poly:0,0,0,1")) == Rational(6));
    CHECK(scaled_divided_difference(rv({0, 1, 2}), AnalyticFunction::parse("poly:0,0,0,1")) == Rational(12));
    CHECK(scaled_divided_difference(Eigen::VectorXd(Eigen::Vector3d(0, 1, 2)), AnalyticFunction::parse("poly:0,0,0,1")) == doctest::Approx(12.0));
}

TEST_CASE("table layers follow the recurrence") {
    const RationalVector p = rv({0, 1, 3, 4});
    const RationalVector values = rv({1, 2, 10, 17});
    const auto table = divided_difference_table(p, values);
    REQUIRE(table.layers.size() == 4);
    CHECK(table.layers[0] == values);
    for (std::size_t k = 1; k < 4; ++k) {
        const auto kk = static_cast<Eigen::Index>(k);
        REQUIRE(table.layers[k].size() == 4 - kk);
        for (Eigen::Index j = 0; j + kk < 4; ++j) {
            CHECK(table.layers[k](j) == (table.layers[k - 1](j + 1) - table.layers[k - 1](j)) / (p(j + kk) - p(j)));
        }
    }
    CHECK(table.layers[1] == rv({1, 4, 7}));
    CHECK(table.top() == divided_difference_sum_form(p, values));
}

TEST_CASE("routes agree exactly on rational polynomial inputs") {
    for (std::uint64_t c = 0; c < 40; ++c) {
        Rng rng(derive_seed(502, {c}));
        const unsigned m = 1 + static_cast<unsigned>(c % 7);
        const RationalVector y = random_increasing_rationals(rng, m + 1);
        const auto f = AnalyticFunction::polynomial(random_coefficients(rng, static_cast<unsigned>(rng.below(9))));
        CHECK(divided_difference(y, f) == divided_difference_sum_form(y, f));
    }
}

TEST_CASE("routes agree on floating transcendental inputs") {
    const std::vector<AnalyticFunction> fs{AnalyticFunction::exponential(1.0), AnalyticFunction::sine(1.0, 0.0),
                                           AnalyticFunction::reciprocal(10.0)};
    for (std::uint64_t c = 0; c < 30; ++c) {
        Rng rng(derive_seed(503, {c}));
        const unsigned m = 1 + static_cast<unsigned>(c % 5);
        const Eigen::VectorXd y = random_increasing_doubles(rng, m + 1, -2.0, 3.0, 0.1);
        for (const auto& f : fs) {
            const double a = divided_difference(y, f);
            const double b = divided_difference_sum_form(y, f);
            CHECK(std::abs(a - b) <= 1e-12 * rounding_scale(y, f));
        }
    }
}

TEST_CASE("monic leading coefficient and annihilation") {
    for (std::uint64_t c = 0; c < 30; ++c) {
        Rng rng(derive_seed(504, {c}));
        const unsigned m = 1 + static_cast<unsigned>(c % 7);
        const RationalVector y = random_increasing_rationals(rng, m + 1);
        std::vector<Rational> monic = random_coefficients(rng, m);
        monic.back() = 1;
        CHECK(divided_difference(y, AnalyticFunction::polynomial(monic)) == Rational(1));
        const auto lower = AnalyticFunction::polynomial(random_coefficients(rng, m - 1));
        CHECK(divided_difference(y, lower) == Rational(0));
    }
}

TEST_CASE("divided differences are symmetric in the points") {
    for (std::uint64_t c = 0; c < 20; ++c) {
        Rng rng(derive_seed(505, {c}));
        const unsigned m = 2 + static_cast<unsigned>(c % 5);
        const RationalVector y = random_increasing_rationals(rng, m + 1);
        const Eigen::VectorXd yd = random_increasing_doubles(rng, m + 1, -2.0, 3.0, 0.1);
        std::vector<Eigen::Index> order(static_cast<std::size_t>(m) + 1);
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<Eigen::Index>(i);
        for (std::size_t i = order.size() - 1; i > 0; --i) std::swap(order[i], order[rng.below(i + 1)]);
        RationalVector shuffled(y.size());
        Eigen::VectorXd shuffled_d(yd.size());
        for (std::size_t i = 0; i < order.size(); ++i) {
            shuffled(static_cast<Eigen::Index>(i)) = y(order[i]);
            shuffled_d(static_cast<Eigen::Index>(i)) = yd(order[i]);
        }
        const auto f = AnalyticFunction::polynomial(random_coefficients(rng, m + 2));
        CHECK(divided_difference(shuffled, f) == divided_difference_sum_form(y, f));
        const auto e = AnalyticFunction::exponential(0.8);
        CHECK(std::abs(divided_difference(shuffled_d, e) - divided_difference_sum_form(yd, e)) <=
              1e-12 * rounding_scale(yd, e));
    }
}

TEST_CASE("repeated points are rejected") {
    CHECK_THROWS_AS(divided_difference(rv({1, 2, 1}), AnalyticFunction::parse("poly:1")), InvalidInput);
    CHECK_THROWS_AS(divided_difference(Eigen::VectorXd(Eigen::Vector3d(1, 2, 2)), AnalyticFunction::exponential(1.0)), InvalidInput);
    CHECK_THROWS_AS(divided_difference_sum_form(Eigen::VectorXd(Eigen::Vector2d(1, 1)), AnalyticFunction::exponential(1.0)), InvalidInput);
    CHECK_THROWS_AS(divided_difference(Eigen::VectorXd(Eigen::Vector3d(1, 2, 3)), AnalyticFunction::reciprocal(2.0)), PoleError);
}

TEST_CASE("clustered points raise a conditioning warning") {
    CHECK_FALSE(conditioning_warning(Eigen::Vector3d(0, 1, 2)).has_value());
    CHECK(conditioning_warning(Eigen::Vector3d(0, 1e-8, 2)).has_value());
}
