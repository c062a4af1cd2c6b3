#include "vandint/divdiff.hpp"

#include <algorithm>
#include <charconv>

namespace vandint {

double to_double(const Number& v) {
    return std::visit([](const auto& x) -> double {
        if constexpr (std::is_same_v<std::decay_t<decltype(x)>, Rational>) {
            return x.to_double();
        } else {
            return x;
        }
    }, v);
}

std::string to_string(const Number& v) {
    if (const auto* r = std::get_if<Rational>(&v)) return r->to_string();
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), std::get<double>(v));
    return std::string(buf, end);
}

Eigen::VectorXd sample(const AnalyticFunction& f, const Eigen::VectorXd& points) {
    Eigen::VectorXd values(points.size());
    for (Eigen::Index i = 0; i < points.size(); ++i) values(i) = eval(f, points(i));
    return values;
}

RationalVector sample_exact(const AnalyticFunction& f, const RationalVector& points) {
    RationalVector values(points.size());
    for (Eigen::Index i = 0; i < points.size(); ++i) values(i) = eval_exact(f, points(i));
    return values;
}

namespace {

void check_pole(const AnalyticFunction& f, const Eigen::VectorXd& points) {
    if (points.size() == 0) return;
    require_pole_outside(f, points.minCoeff(), points.maxCoeff());
}

}  // namespace

double divided_difference(const Eigen::VectorXd& points, const AnalyticFunction& f) {
    require_distinct(points);
    check_pole(f, points);
    return divided_difference_table(points, sample(f, points)).top();
}

Rational divided_difference(const RationalVector& points, const AnalyticFunction& f) {
    return divided_difference_table(points, sample_exact(f, points)).top();
}

Number divided_difference(const PointSequence& points, const AnalyticFunction& f) {
    if (points.is_exact() && f.is_polynomial()) return divided_difference(points.exact(), f);
    return divided_difference(points.floating(), f);
}

double divided_difference_sum_form(const Eigen::VectorXd& points, const AnalyticFunction& f) {
    require_distinct(points);
    check_pole(f, points);
    return divided_difference_sum_form(points, sample(f, points));
}

Rational divided_difference_sum_form(const RationalVector& points, const AnalyticFunction& f) {
    return divided_difference_sum_form(points, sample_exact(f, points));
}

Number divided_difference_sum_form(const PointSequence& points, const AnalyticFunction& f) {
    if (points.is_exact() && f.is_polynomial()) return divided_difference_sum_form(points.exact(), f);
    return divided_difference_sum_form(points.floating(), f);
}

std::optional<std::string> conditioning_warning(const Eigen::VectorXd& points) {
    if (points.size() < 2) return std::nullopt;
    std::vector<double> sorted(points.data(), points.data() + points.size());
    std::sort(sorted.begin(), sorted.end());
    const double span = sorted.back() - sorted.front();
    double min_gap = span;
    for (std::size_t i = 0; i + 1 < sorted.size(); ++i) min_gap = std::min(min_gap, sorted[i + 1] - sorted[i]);
    if (min_gap < 1e-6 * span) {
        return "clustered points: minimum gap " + to_string(Number(min_gap)) + " is below 1e-6 of the span "
               + to_string(Number(span)) + "; expect precision loss";
    }
    return std::nullopt;
}

double scaled_divided_difference(const Eigen::VectorXd& x, const AnalyticFunction& f) {
    require_increasing(x, 0.0);
    return vandermonde_value(x) * divided_difference(y_from_x(x), f);
}

Rational scaled_divided_difference(const RationalVector& x, const AnalyticFunction& f) {
    require_increasing(x);
    return vandermonde_value(x) * divided_difference(y_from_x(x), f);
}

}  // namespace vandint
