#ifndef VANDINT_DIVDIFF_HPP
#define VANDINT_DIVDIFF_HPP

#include <cmath>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "vandint/funcs.hpp"
#include "vandint/points.hpp"

namespace vandint {

/// An exact or floating scalar result.
using Number = std::variant<Rational, double>;

double to_double(const Number& v);
std::string to_string(const Number& v);

/// Throws InvalidInput if two points coincide. Order is irrelevant.
template <typename Scalar>
void require_distinct(const Vector<Scalar>& points) {
    if (points.size() < 1) throw InvalidInput("divided difference needs at least one point");
    for (Eigen::Index i = 0; i < points.size(); ++i) {
        for (Eigen::Index j = i + 1; j < points.size(); ++j) {
            if (points(i) == points(j)) throw InvalidInput("repeated point in divided difference");
        }
    }
}

/// Triangular table of divided differences; layer k holds the order-k
/// differences [p_j, ..., p_{j+k}]f for j = 0..m-k.
template <typename Scalar>
struct DividedDifferenceTable {
    Vector<Scalar> points;
    std::vector<Vector<Scalar>> layers;

    [[nodiscard]] const Scalar& top() const { return layers.back()(0); }
};

template <typename Scalar>
DividedDifferenceTable<Scalar> divided_difference_table(const Vector<Scalar>& points, const Vector<Scalar>& values) {
    require_distinct(points);
    if (values.size() != points.size()) throw InvalidInput("values and points differ in length");
    DividedDifferenceTable<Scalar> table{points, {values}};
    const Eigen::Index m = points.size();
    for (Eigen::Index k = 1; k < m; ++k) {
        const auto& prev = table.layers.back();
        Vector<Scalar> next(m - k);
        for (Eigen::Index j = 0; j < m - k; ++j) {
            next(j) = (prev(j + 1) - prev(j)) / (points(j + k) - points(j));
        }
        table.layers.push_back(std::move(next));
    }
    return table;
}

/// sum_i values_i / prod_{j != i} (points_i - points_j)
template <typename Scalar>
Scalar divided_difference_sum_form(const Vector<Scalar>& points, const Vector<Scalar>& values) {
    require_distinct(points);
    if (values.size() != points.size()) throw InvalidInput("values and points differ in length");
    Scalar total(0);
    for (Eigen::Index i = 0; i < points.size(); ++i) {
        Scalar denom(1);
        for (Eigen::Index j = 0; j < points.size(); ++j) {
            if (j != i) denom *= points(i) - points(j);
        }
        total += values(i) / denom;
    }
    return total;
}

Eigen::VectorXd sample(const AnalyticFunction& f, const Eigen::VectorXd& points);
RationalVector sample_exact(const AnalyticFunction& f, const RationalVector& points);

/// Recursive-table route.
double divided_difference(const Eigen::VectorXd& points, const AnalyticFunction& f);
Rational divided_difference(const RationalVector& points, const AnalyticFunction& f);
/// Exact when the points are exact and f is a polynomial, floating otherwise.
Number divided_difference(const PointSequence& points, const AnalyticFunction& f);

/// Reciprocal-product route.
double divided_difference_sum_form(const Eigen::VectorXd& points, const AnalyticFunction& f);
Rational divided_difference_sum_form(const RationalVector& points, const AnalyticFunction& f);
Number divided_difference_sum_form(const PointSequence& points, const AnalyticFunction& f);

/// Message when the smallest gap is below 1e-6 times the span.
std::optional<std::string> conditioning_warning(const Eigen::VectorXd& points);

/// V(x) times the divided difference of f at y_from_x(x).
double scaled_divided_difference(const Eigen::VectorXd& x, const AnalyticFunction& f);
Rational scaled_divided_difference(const RationalVector& x, const AnalyticFunction& f);

}  // namespace vandint

#endif
