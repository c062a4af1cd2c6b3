#include "vandint/points.hpp"

#include <charconv>
#include <cmath>

namespace vandint {

namespace {

std::vector<std::string> split_commas(std::string_view text) {
    std::vector<std::string> out;
    std::string current;
    for (char c : text) {
        if (c == ',') {
            out.push_back(current);
            current.clear();
        } else if (c != ' ' && c != '\t' && c != '\n' && c != '\r') {
            current.push_back(c);
        }
    }
    out.push_back(current);
    return out;
}

bool looks_decimal(const std::string& token) {
    return token.find_first_of(".eE") != std::string::npos;
}

std::string format_double(double v) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, end);
}

}  // namespace

void require_increasing(const RationalVector& values) {
    if (values.size() < 2) throw InvalidInput("need at least two points");
    for (Eigen::Index i = 0; i + 1 < values.size(); ++i) {
        if (!(values(i) < values(i + 1))) throw InvalidInput("points must be strictly increasing");
    }
}

void require_increasing(const Eigen::VectorXd& values, double min_gap) {
    if (values.size() < 2) throw InvalidInput("need at least two points");
    for (Eigen::Index i = 0; i < values.size(); ++i) {
        if (!std::isfinite(values(i))) throw InvalidInput("points must be finite");
    }
    for (Eigen::Index i = 0; i + 1 < values.size(); ++i) {
        const double gap = values(i + 1) - values(i);
        if (!(gap > 0.0) || gap < min_gap) throw InvalidInput("points must be strictly increasing");
    }
}

PointSequence::PointSequence(RationalVector values) : values_(std::move(values)) {
    require_increasing(std::get<RationalVector>(values_));
}

PointSequence::PointSequence(Eigen::VectorXd values, double min_gap) : values_(std::move(values)) {
    require_increasing(std::get<Eigen::VectorXd>(values_), min_gap);
}

PointSequence PointSequence::parse(std::string_view text, bool force_exact, double min_gap) {
    const auto tokens = split_commas(text);
    RationalVector values(static_cast<Eigen::Index>(tokens.size()));
    bool any_decimal = false;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (tokens[i].empty()) throw InvalidInput("empty entry in point list '" + std::string(text) + "'");
        values(static_cast<Eigen::Index>(i)) = Rational::parse(tokens[i]);
        any_decimal = any_decimal || looks_decimal(tokens[i]);
    }
    if (force_exact || !any_decimal) return PointSequence(std::move(values));
    Eigen::VectorXd floating(values.size());
    for (Eigen::Index i = 0; i < values.size(); ++i) floating(i) = values(i).to_double();
    return PointSequence(std::move(floating), min_gap);
}

Eigen::Index PointSequence::size() const {
    return std::visit([](const auto& v) { return v.size(); }, values_);
}

const RationalVector& PointSequence::exact() const {
    if (!is_exact()) throw InvalidInput("point sequence is floating, not exact");
    return std::get<RationalVector>(values_);
}

Eigen::VectorXd PointSequence::floating() const {
    if (const auto* f = std::get_if<Eigen::VectorXd>(&values_)) return *f;
    const auto& r = std::get<RationalVector>(values_);
    Eigen::VectorXd out(r.size());
    for (Eigen::Index i = 0; i < r.size(); ++i) out(i) = r(i).to_double();
    return out;
}

std::string PointSequence::to_string() const {
    std::string out;
    const Eigen::Index m = size();
    for (Eigen::Index i = 0; i < m; ++i) {
        if (i > 0) out += ',';
        out += is_exact() ? std::get<RationalVector>(values_)(i).to_string()
                          : format_double(std::get<Eigen::VectorXd>(values_)(i));
    }
    return out;
}

PointSequence y_from_x(const PointSequence& x) {
    if (x.is_exact()) return PointSequence(y_from_x(x.exact()));
    return PointSequence(y_from_x(x.floating()), 0.0);
}

PointSequence x_from_y(const PointSequence& y) {
    if (y.is_exact()) return PointSequence(x_from_y(y.exact()));
    return PointSequence(x_from_y(y.floating()), 0.0);
}

TransformMatrix transform_matrix(unsigned n, TransformMatrix::Role role) {
    if (n < 1) throw InvalidInput("transform matrix needs n >= 1");
    const auto m = static_cast<Eigen::Index>(n) + 1;
    TransformMatrix out{role, RationalMatrix::Constant(m, m, Rational(1))};
    const Rational diagonal = role == TransformMatrix::Role::forward ? Rational(0) : Rational(1) - Rational(n);
    for (Eigen::Index r = 0; r < m; ++r) out.entries(r, m - 1 - r) = diagonal;
    if (role == TransformMatrix::Role::inverse) {
        const Rational scale = Rational(1) / Rational(n);
        for (Eigen::Index r = 0; r < m; ++r) {
            for (Eigen::Index c = 0; c < m; ++c) out.entries(r, c) *= scale;
        }
    }
    return out;
}

}  // namespace vandint
