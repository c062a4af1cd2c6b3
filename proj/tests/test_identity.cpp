#include <cmath>

#include <doctest.h>

#include "vandint/identity.hpp"
#include "vandint/random.hpp"

using namespace vandint;

namespace {

RationalVector rv(std::initializer_list<Rational> values) {
    RationalVector v(static_cast<Eigen::Index>(values.size()));
    Eigen::Index i = 0;
    for (const auto& r : values) v(i++) = r;
    return v;
}

const MultiPoly t1(VarId::t(1)), t2(VarId::t(2)), t3(VarId::t(3));

}  // namespace

TEST_CASE("report verdicts") {
    const auto exact_pass = exact_report("x", Rational(1, 3), Rational(1, 3), {});
    CHECK(exact_pass.passed);
    CHECK(exact_pass.abs_err == 0.0);
    const auto exact_fail = exact_report("x", Rational(1), Rational(2), {});
    CHECK_FALSE(exact_fail.passed);
    CHECK(exact_fail.rel_err == 0.5);
    CHECK_FALSE(exact_report("x", t1, t2, {}).passed);

    CHECK(numeric_report("x", 1.0 + 1e-10, 1.0, 1e-9, {}).passed);
    CHECK_FALSE(numeric_report("x", 1.0 + 1e-8, 1.0, 1e-9, {}).passed);
    // Near-zero right side falls back to absolute error.
    CHECK(numeric_report("x", 5e-13, 1e-15, 1e-9, {}).passed);
    CHECK_FALSE(numeric_report("x", 5e-12, 1e-15, 1e-9, {}).passed);
    CHECK_FALSE(numeric_report("x", std::nan(""), 1.0, 1e-9, {}).passed);
}

TEST_CASE("floating identity examples") {
    const auto n1 = check_identity_numeric(Eigen::Vector2d(0, 1), AnalyticFunction::exponential(1.0), 16);
    CHECK(n1.passed);
    CHECK(n1.rel_err < 1e-13);
    CHECK(std::abs(std::get<double>(n1.lhs) - std::expm1(1.0)) < 1e-14);

    const auto half_square = check_identity_numeric(Eigen::Vector3d(0, 1, 2), AnalyticFunction::parse("poly:0,0,1/2"), 2);
    CHECK(half_square.passed);
    CHECK(std::get<double>(half_square.lhs) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(std::get<double>(half_square.rhs) == doctest::Approx(1.0).epsilon(1e-15));

    Eigen::VectorXd x(4);
    x << 0, 1, 2, 4;
    const auto sine = check_identity_numeric(x, AnalyticFunction::sine(1.0, 0.0), 24, 1e-9);
    CHECK(sine.passed);
    CHECK(sine.metadata.order == 24);
    CHECK(sine.metadata.function == "sin:1,0");
    CHECK(sine.metadata.points == "0,1,2,4");
}

TEST_CASE("exact identity examples") {
    const auto half_square = check_identity_exact(rv({0, 1, 2}), AnalyticFunction::parse("poly:0,0,1/2"));
    CHECK(half_square.passed);
    CHECK(std::get<Rational>(half_square.lhs) == Rational(1));
    const auto cube = check_identity_exact(rv({0, 1, 2}), AnalyticFunction::parse("poly:0,0,0,1"));
    CHECK(cube.passed);
    CHECK(std::get<Rational>(cube.lhs) == Rational(12));
    CHECK(std::get<Rational>(cube.rhs) == Rational(12));
    const auto fifth = check_identity_exact(rv({0, 1}), AnalyticFunction::parse("poly:0,0,0,0,0,1"));
    CHECK(fifth.passed);
    CHECK(std::get<Rational>(fifth.lhs) == Rational(1));
    CHECK_THROWS_AS(check_identity_exact(rv({0, 1}), AnalyticFunction::exponential(1.0)), InvalidInput);
    CHECK_THROWS_AS(check_identity_exact(rv({0, 1, 1}), AnalyticFunction::parse("poly:1")), InvalidInput);
}

TEST_CASE("exact identity on random rational points") {
    for (unsigned n = 1; n <= 4; ++n) {
        for (std::uint64_t c = 0; c < 5; ++c) {
            Rng rng(derive_seed(601, {n, c}));
            const RationalVector x = random_increasing_rationals(rng, n + 1);
            const auto f = AnalyticFunction::polynomial(random_coefficients(rng, n + static_cast<unsigned>(rng.below(5))));
            CHECK(check_identity_exact(x, f).passed);
        }
    }
}

TEST_CASE("floating identity on random points") {
    const std::vector<AnalyticFunction> fs{AnalyticFunction::exponential(1.0), AnalyticFunction::sine(1.0, 0.0)};
    for (unsigned n = 1; n <= 4; ++n) {
        for (std::uint64_t c = 0; c < 4; ++c) {
            Rng rng(derive_seed(602, {n, c}));
            const Eigen::VectorXd x = random_increasing_doubles(rng, n + 1, -2.0, 3.0, 0.2);
            for (const auto& f : fs) CHECK(check_identity_numeric(x, f, 20, 1e-9).passed);
            const auto p = AnalyticFunction::polynomial(random_coefficients(rng, n + static_cast<unsigned>(rng.below(4)), 9));
            CHECK(check_identity_numeric(x, p, 20, 1e-9).passed);
        }
    }
}

TEST_CASE("integral of V over the rectangle") {
    const MultiPoly x1(VarId::x(1)), x2(VarId::x(2)), x3(VarId::x(3));
    CHECK(vandermonde_integral_symbolic(1) == x2 - x1);
    CHECK(vandermonde_integral_symbolic(2) == Rational(1, 2) * (x2 - x1) * (x3 - x1) * (x3 - x2));
    for (unsigned n : {1u, 2u, 4u}) {
        const auto r = check_vandermonde_integral(n);
        CHECK(r.passed);
        CHECK(std::get<MultiPoly>(r.lhs) == std::get<MultiPoly>(r.rhs));
    }
    CHECK_THROWS_AS(check_vandermonde_integral(0), InvalidInput);
    CHECK_THROWS_AS(check_vandermonde_integral(7), SymbolicLimitExceeded);
}

TEST_CASE("chain rule examples") {
    const auto base = check_chain_rule(1, MultiPoly(1), AnalyticFunction::parse("poly:0,0,1"));
    CHECK(base.passed);
    CHECK(std::get<MultiPoly>(base.lhs) == Rational(2) * t1);
    CHECK(check_chain_rule(2, t2 - t1, AnalyticFunction::parse("poly:0,0,0,1")).passed);
    CHECK(check_chain_rule_vandermonde(2, AnalyticFunction::parse("poly:0,0,0,1")).passed);
    Rng rng(derive_seed(603, {}));
    const MultiPoly psi = random_poly(rng, variables(VarFamily::t, 3), 3, 4);
    CHECK(check_chain_rule(3, psi, AnalyticFunction::parse("poly:0,0,0,0,1")).passed);
    CHECK_THROWS_AS(check_chain_rule(2, t1, AnalyticFunction::sine(1.0, 0.0)), InvalidInput);
}

TEST_CASE("vertex sum examples") {
    const std::vector<std::pair<Rational, Rational>> ab{{Rational(-1, 2), 3}};
    const auto one = check_vertex_sum(1, ab, t1 * t1);
    CHECK(one.passed);
    CHECK(std::get<Rational>(one.lhs) == Rational(9) - Rational(1, 4));

    const std::vector<std::pair<Rational, Rational>> box{{0, 1}, {1, 2}};
    const auto bilinear = check_vertex_sum(2, box, t1 * t2);
    CHECK(bilinear.passed);
    CHECK(std::get<Rational>(bilinear.rhs) == Rational(1));

    Rng rng(derive_seed(604, {}));
    const std::vector<std::pair<Rational, Rational>> cube{{-1, 0}, {Rational(1, 3), 2}, {2, 5}};
    CHECK(check_vertex_sum(3, cube, random_poly(rng, variables(VarFamily::t, 3), 2, 6)).passed);
    CHECK_THROWS_AS(check_vertex_sum(2, ab, t1), InvalidInput);
    const std::vector<std::pair<Rational, Rational>> empty_box{{1, 1}};
    CHECK_THROWS_AS(check_vertex_sum(1, empty_box, t1), InvalidInput);
}

TEST_CASE("vertex sums for per-variable degree four") {
    for (unsigned n = 1; n <= 3; ++n) {
        for (std::uint64_t c = 0; c < 5; ++c) {
            Rng rng(derive_seed(605, {n, c}));
            const auto tv = variables(VarFamily::t, n);
            std::vector<std::pair<Rational, Rational>> bounds;
            for (unsigned i = 0; i < n; ++i) {
                const RationalVector ends = random_increasing_rationals(rng, 2, 20);
                bounds.emplace_back(ends(0), ends(1));
            }
            CHECK(check_vertex_sum(n, bounds, random_poly(rng, tv, 4, 6)).passed);
            const RationalVector x = random_increasing_rationals(rng, n + 1, 20);
            CHECK(check_reduced_vertex_sum(x, random_poly(rng, tv, 4, 3)).passed);
        }
    }
}

TEST_CASE("reduced vertex sum examples") {
    const auto constant = check_reduced_vertex_sum(rv({0, 1, 2}), MultiPoly(1));
    CHECK(constant.passed);
    CHECK(std::get<Rational>(constant.lhs) == Rational(0));
    CHECK(std::get<Rational>(constant.rhs) == Rational(0));
    CHECK(check_reduced_vertex_sum(rv({0, 1, 2}), t1 + t2).passed);
}

TEST_CASE("zero property") {
    const auto phi = ZeroPropertyFunction::from_factor(t1 * t3 + MultiPoly(2), 3);
    CHECK(phi.holds());
    CHECK(phi(rv({1, 1, 5})) == Rational(0));
    CHECK(phi(rv({1, 4, 4})) == Rational(0));
    CHECK(phi(rv({0, 1, 2})) == Rational(2) * Rational(2));
    CHECK_FALSE(ZeroPropertyFunction(t2 - t1 + MultiPoly(1), 2).holds());
    CHECK(ZeroPropertyFunction((t2 - t1) * (t3 - t2), 3).holds());
    CHECK_THROWS_AS(ZeroPropertyFunction(MultiPoly(VarId::t(4)), 3), InvalidInput);
    CHECK_THROWS_AS(phi(rv({0, 1})), InvalidInput);
}

TEST_CASE("divided differences through the integral") {
    const double half = divided_difference_via_integral(Eigen::Vector3d(1, 2, 3), AnalyticFunction::parse("poly:0,0,1/2"));
    CHECK(std::abs(half - 0.5) < 1e-12);
    const double e = divided_difference_via_integral(Eigen::Vector2d(0, 1), AnalyticFunction::exponential(1.0));
    CHECK(std::abs(e - std::expm1(1.0)) < 1e-14);
    const auto r = check_integral_representation(Eigen::Vector3d(1, 2, 3), AnalyticFunction::exponential(1.0), 20, 1e-10);
    CHECK(r.passed);
    CHECK(r.name == "integral_representation");
}

TEST_CASE("box integration helper") {
    const auto tv = variables(VarFamily::t, 2);
    const std::vector<MultiPoly> lower{MultiPoly(0), MultiPoly(1)};
    const std::vector<MultiPoly> upper{MultiPoly(1), MultiPoly(2)};
    CHECK(integrate_over_box(t2 - t1, tv, lower, upper) == MultiPoly(1));
    CHECK(assignment_of(rv({3, 4})).at(VarId::t(2)) == Rational(4));
}
