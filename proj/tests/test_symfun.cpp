#include <algorithm>
#include <numeric>

#include <doctest.h>

#include "vandint/random.hpp"
#include "vandint/symfun.hpp"

using namespace vandint;

namespace {

const MultiPoly t1(VarId::t(1)), t2(VarId::t(2)), t3(VarId::t(3));

/// det[t_j^(i-1)] by the Leibniz permutation sum.
MultiPoly leibniz_vandermonde(unsigned n) {
    std::vector<unsigned> perm(n);
    std::iota(perm.begin(), perm.end(), 0u);
    MultiPoly det;
    do {
        int inversions = 0;
        for (unsigned i = 0; i < n; ++i) {
            for (unsigned j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
        }
        MultiPoly term(inversions % 2 == 0 ? 1 : -1);
        for (unsigned row = 0; row < n; ++row) term *= pow(MultiPoly(VarId::t(perm[row] + 1)), row);
        det += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

}  // namespace

TEST_CASE("elementary symmetric examples") {
    const MultiPoly a(VarId::x(1)), b(VarId::x(2)), c(VarId::x(3));
    const std::vector<MultiPoly> abc{a, b, c};
    CHECK(elementary_symmetric(2, abc) == a * b + a * c + b * c);
    CHECK(elementary_symmetric(0, abc) == MultiPoly(1));
    CHECK(elementary_symmetric(0, std::span<const MultiPoly>{}) == MultiPoly(1));
    CHECK_THROWS_AS(elementary_symmetric(4, abc), InvalidInput);
    CHECK_THROWS_AS(elementary_symmetric(-1, abc), InvalidInput);

    const MultiPoly t(VarId::tau());
    const std::vector<MultiPoly> shifted{t - t1, t - t2};
    CHECK(elementary_symmetric(1, shifted) == Rational(2) * t - t1 - t2);
    CHECK_THROWS_AS(elementary_symmetric(-1, abc), InvalidInput);
}

TEST_CASE("omega examples") {
    const MultiPoly t(VarId::tau());
    const std::vector<MultiPoly> roots{t1, t2};
    CHECK(omega(roots, VarId::tau()) == t * t - (t1 + t2) * t + t1 * t2);
    CHECK(omega(std::span<const MultiPoly>{}, VarId::tau()) == MultiPoly(1));
    const std::vector<MultiPoly> zero_one{MultiPoly(0), MultiPoly(1)};
    CHECK(omega(zero_one, VarId::tau()) == t * t - t);
    CHECK_THROWS_AS(omega(std::vector<MultiPoly>{t}, VarId::tau()), InvalidInput);
}

TEST_CASE("Vandermonde polynomial examples") {
    CHECK(vandermonde_poly(1) == MultiPoly(1));
    CHECK(vandermonde_poly(2) == t2 - t1);
    CHECK(evaluate(vandermonde_poly(3), {{VarId::t(1), 0}, {VarId::t(2), 1}, {VarId::t(3), 2}}) == Rational(2));
    CHECK(vandermonde_poly(2, VarFamily::x) == MultiPoly(VarId::x(2)) - MultiPoly(VarId::x(1)));
    CHECK_THROWS_AS(vandermonde_poly(7), SymbolicLimitExceeded);
    CHECK(vandermonde_poly(7, VarFamily::t, 7).terms().size() == 5040);
}

TEST_CASE("Vandermonde expansion matches the Leibniz determinant") {
    for (unsigned n = 1; n <= 5; ++n) {
        CAPTURE(n);
        CHECK(vandermonde_poly(n) == leibniz_vandermonde(n));
    }
}

TEST_CASE("operator examples") {
    const auto vars = variables(VarFamily::t, 3);
    const std::span<const VarId> two(vars.data(), 2);
    CHECK(apply_operator(OperatorKind::mixed(1), t2 - t1, two).is_zero());
    CHECK(apply_operator(OperatorKind::mixed(2), t1 * t2, two) == MultiPoly(1));
    CHECK(apply_operator(OperatorKind::pure(2), vandermonde_poly(3), vars).is_zero());
    CHECK(apply_operator(OperatorKind::mixed(0), t1 * t2, two) == t1 * t2);
    CHECK(apply_operator(OperatorKind::pure(1), t1 * t1 + t2, two) == Rational(2) * t1 + MultiPoly(1));
    CHECK_THROWS_AS(apply_operator(OperatorKind::mixed(3), t1, two), InvalidInput);
    CHECK_THROWS_AS(apply_operator(OperatorKind::pure(0), t1, two), InvalidInput);
    CHECK(apply_operator(OperatorKind::pure(3), pow(t1, 3) + pow(t2, 4), two) == Rational(6) + Rational(24) * t2);
}

TEST_CASE("mixed sum operator equals the explicit subset sum of mixed partials") {
    const auto vars = variables(VarFamily::t, 4);
    for (std::uint64_t c = 0; c < 10; ++c) {
        Rng rng(derive_seed(201, {c}));
        const MultiPoly p = random_poly(rng, vars, 3, 5);
        for (unsigned k = 1; k <= 4; ++k) {
            MultiPoly expected;
            for (const auto& subset : combinations(4, k)) {
                MultiPoly q = p;
                for (unsigned i : subset) q = diff(q, vars[i]);
                expected += q;
            }
            CHECK(apply_operator(OperatorKind::mixed(k), p, vars) == expected);
        }
    }
}

TEST_CASE("combinations are lexicographic k-subsets") {
    const auto c = combinations(4, 2);
    REQUIRE(c.size() == 6);
    CHECK(c.front() == std::vector<unsigned>{0, 1});
    CHECK(c[1] == std::vector<unsigned>{0, 2});
    CHECK(c.back() == std::vector<unsigned>{2, 3});
    CHECK(combinations(3, 0).size() == 1);
    CHECK(combinations(2, 3).empty());
}

TEST_CASE("vertex enumeration examples") {
    const std::vector<std::pair<Rational, Rational>> one{{0, 1}};
    const auto v1 = enumerate_vertices<Rational>(one);
    REQUIRE(v1.size() == 2);
    CHECK(v1[0].selector.epsilon == std::vector<std::uint8_t>{0});
    CHECK(v1[0].point(0) == Rational(0));
    CHECK(v1[1].selector.epsilon == std::vector<std::uint8_t>{1});
    CHECK(v1[1].point(0) == Rational(1));

    const std::vector<std::pair<Rational, Rational>> two{{0, 1}, {1, 2}};
    const auto v2 = enumerate_vertices<Rational>(two);
    REQUIRE(v2.size() == 4);
    const std::vector<std::pair<int, int>> expected{{0, 1}, {1, 1}, {0, 2}, {1, 2}};
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(v2[i].point(0) == Rational(expected[i].first));
        CHECK(v2[i].point(1) == Rational(expected[i].second));
    }

    for (unsigned n = 1; n <= 6; ++n) {
        const std::vector<std::pair<double, double>> box(n, {0.0, 1.0});
        CHECK(enumerate_vertices<double>(box).size() == (std::size_t{1} << n));
    }
}

TEST_CASE("monotone selectors") {
    const auto s2 = monotone_selectors(2);
    REQUIRE(s2.size() == 3);
    CHECK(s2[0].epsilon == std::vector<std::uint8_t>{0, 0});
    CHECK(s2[1].epsilon == std::vector<std::uint8_t>{0, 1});
    CHECK(s2[2].epsilon == std::vector<std::uint8_t>{1, 1});
    const auto s1 = monotone_selectors(1);
    REQUIRE(s1.size() == 2);
    CHECK(s1[0].epsilon == std::vector<std::uint8_t>{0});
    CHECK(s1[1].epsilon == std::vector<std::uint8_t>{1});
    for (unsigned n = 1; n <= 8; ++n) {
        const auto s = monotone_selectors(n);
        CHECK(s.size() == n + 1);
        for (unsigned i = 0; i <= n; ++i) CHECK(s[i].weight() == i);
    }
}

TEST_CASE("sum polynomial") {
    const auto vars = variables(VarFamily::t, 3);
    CHECK(sum_poly(vars) == t1 + t2 + t3);
    CHECK(sum_poly(std::span<const VarId>{}).is_zero());
}
