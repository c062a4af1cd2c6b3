#ifndef VANDINT_POINTS_HPP
#define VANDINT_POINTS_HPP

#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include <Eigen/Core>

#include "vandint/errors.hpp"
#include "vandint/rational.hpp"

namespace vandint {

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using RationalVector = Vector<Rational>;
using RationalMatrix = Matrix<Rational>;

/// Default minimum gap between consecutive floating coordinates.
inline constexpr double kDefaultMinGap = 1e-12;

/// Throws InvalidInput unless the values are strictly increasing with at
/// least two entries. Floating values must additionally be at least
/// `min_gap` apart.
void require_increasing(const RationalVector& values);
void require_increasing(const Eigen::VectorXd& values, double min_gap = kDefaultMinGap);

/// Strictly increasing coordinates, tagged exact or floating at parse time.
class PointSequence {
public:
    enum class Tag { exact, floating };

    explicit PointSequence(RationalVector values);
    explicit PointSequence(Eigen::VectorXd values, double min_gap = kDefaultMinGap);

    /// Comma-separated numbers, each a decimal literal or "p/q"; whitespace
    /// ignored. Integers and fractions give an exact sequence, decimal
    /// literals a floating one unless `force_exact` is set.
    static PointSequence parse(std::string_view text, bool force_exact = false,
                               double min_gap = kDefaultMinGap);

    [[nodiscard]] Tag tag() const { return std::holds_alternative<RationalVector>(values_) ? Tag::exact : Tag::floating; }
    [[nodiscard]] bool is_exact() const { return tag() == Tag::exact; }
    [[nodiscard]] Eigen::Index size() const;

    /// The exact values; throws InvalidInput for a floating sequence.
    [[nodiscard]] const RationalVector& exact() const;
    /// Floating view, converting exact values.
    [[nodiscard]] Eigen::VectorXd floating() const;

    /// Comma-separated rendering: "p/q" for exact values, shortest
    /// round-trip decimal for floating ones.
    [[nodiscard]] std::string to_string() const;

private:
    std::variant<RationalVector, Eigen::VectorXd> values_;
};

/// The box [x1,x2] x [x2,x3] x ... x [xn,x(n+1)] of an increasing sequence.
template <typename Scalar>
class SequentialRectangle {
public:
    explicit SequentialRectangle(Vector<Scalar> x) : x_(std::move(x)) {
        if (x_.size() < 2) throw InvalidInput("sequential rectangle needs at least two points");
        for (Eigen::Index i = 0; i + 1 < x_.size(); ++i) {
            if (!(x_(i) < x_(i + 1))) throw InvalidInput("points must be strictly increasing");
        }
    }

    [[nodiscard]] Eigen::Index dimension() const { return x_.size() - 1; }
    [[nodiscard]] const Vector<Scalar>& points() const { return x_; }
    [[nodiscard]] Scalar lower(Eigen::Index i) const { return x_(i); }
    [[nodiscard]] Scalar upper(Eigen::Index i) const { return x_(i + 1); }

    [[nodiscard]] std::vector<std::pair<Scalar, Scalar>> intervals() const {
        std::vector<std::pair<Scalar, Scalar>> out;
        for (Eigen::Index i = 0; i < dimension(); ++i) out.emplace_back(lower(i), upper(i));
        return out;
    }

private:
    Vector<Scalar> x_;
};

/// y_i = (x_1 + ... + x_{n+1}) - x_{n+2-i}.
template <typename Scalar>
Vector<Scalar> y_from_x(const Vector<Scalar>& x) {
    const Eigen::Index m = x.size();
    Scalar total(0);
    for (Eigen::Index j = 0; j < m; ++j) total += x(j);
    Vector<Scalar> y(m);
    for (Eigen::Index i = 0; i < m; ++i) y(i) = total - x(m - 1 - i);
    return y;
}

/// x_i = (y_1 + ... + y_{n+1} - n y_{n+2-i}) / n, the inverse of y_from_x.
template <typename Scalar>
Vector<Scalar> x_from_y(const Vector<Scalar>& y) {
    const Eigen::Index m = y.size();
    if (m < 2) throw InvalidInput("need at least two points");
    const Scalar n(static_cast<int>(m - 1));
    Scalar total(0);
    for (Eigen::Index j = 0; j < m; ++j) total += y(j);
    Vector<Scalar> x(m);
    for (Eigen::Index i = 0; i < m; ++i) x(i) = (total - n * y(m - 1 - i)) / n;
    return x;
}

PointSequence y_from_x(const PointSequence& x);
PointSequence x_from_y(const PointSequence& y);

struct TransformMatrix {
    enum class Role { forward, inverse };
    Role role;
    RationalMatrix entries;
};

/// M (ones with zeros on the anti-diagonal) or its inverse
/// (1/n)(ones with 1-n on the anti-diagonal), both (n+1) x (n+1).
TransformMatrix transform_matrix(unsigned n, TransformMatrix::Role role);

/// (y_1, y_{n+1}): the range of t_1 + ... + t_n over the sequential rectangle.
template <typename Scalar>
std::pair<Scalar, Scalar> sum_bounds(const Vector<Scalar>& x) {
    const Vector<Scalar> y = y_from_x(x);
    return {y(0), y(y.size() - 1)};
}

/// v_i = x with x_{n+2-i} removed, i = 1..n+1; component sums equal y_i.
template <typename Scalar>
std::vector<Vector<Scalar>> reduced_vertices(const Vector<Scalar>& x) {
    const Eigen::Index m = x.size();
    std::vector<Vector<Scalar>> out;
    out.reserve(static_cast<std::size_t>(m));
    for (Eigen::Index i = 0; i < m; ++i) {
        const Eigen::Index dropped = m - 1 - i;
        Vector<Scalar> v(m - 1);
        Eigen::Index k = 0;
        for (Eigen::Index j = 0; j < m; ++j) {
            if (j != dropped) v(k++) = x(j);
        }
        out.push_back(std::move(v));
    }
    return out;
}

/// Product of (v_j - v_i) over i < j, evaluated directly without expansion.
template <typename Scalar>
Scalar vandermonde_value(const Vector<Scalar>& v) {
    Scalar product(1);
    for (Eigen::Index j = 1; j < v.size(); ++j) {
        for (Eigen::Index i = 0; i < j; ++i) product *= v(j) - v(i);
    }
    return product;
}

}  // namespace vandint

#endif
