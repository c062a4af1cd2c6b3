#ifndef VANDINT_QUAD_HPP
#define VANDINT_QUAD_HPP

#include <cstdint>
#include <functional>
#include <span>

#include <Eigen/Core>

#include "vandint/funcs.hpp"
#include "vandint/points.hpp"

namespace vandint {

/// Gauss-Legendre nodes and weights on [-1, 1], nodes ascending.
struct QuadratureRule {
    Eigen::VectorXd nodes;
    Eigen::VectorXd weights;
    [[nodiscard]] int order() const { return static_cast<int>(nodes.size()); }
};

inline constexpr int kMaxQuadratureOrder = 64;
inline constexpr int kDefaultQuadratureOrder = 16;
inline constexpr std::uint64_t kDefaultEvaluationBudget = 100'000'000;

/// Newton iteration on P_order; 1 <= order <= 64.
QuadratureRule gauss_legendre(int order);

struct CubatureOptions {
    std::uint64_t budget = kDefaultEvaluationBudget;
    /// 0 picks the hardware concurrency. The result does not depend on it.
    unsigned workers = 1;
};

struct CubatureResult {
    double value = 0.0;
    int nodes_per_axis = 0;
    std::uint64_t function_evaluations = 0;
};

using Integrand = std::function<double(std::span<const double>)>;

/// Tensor-product Gauss-Legendre rule over the rectangle. Nodes are visited
/// in lexicographic grid order (first axis fastest) in fixed-size chunks,
/// each summed with compensation, and the chunk sums are combined in chunk
/// order, so the value is bit-identical for any worker count.
CubatureResult integrate_over_rectangle(const SequentialRectangle<double>& rect, const Integrand& integrand,
                                        int order, const CubatureOptions& options = {});

/// Integral of V(t) f^(n)(t1 + ... + tn) over R(x), with V taken as the
/// direct product of differences at each node.
CubatureResult weighted_integral(const Eigen::VectorXd& x, const AnalyticFunction& f, int order,
                            const CubatureOptions& options = {});

/// A-priori relative error scale of weighted_integral at this order: the largest
/// rho^(-2 order) over the axes, where rho is the Bernstein ellipse parameter
/// of the pole of f^(n)(s) seen along that axis. Zero for entire functions.
double predicted_quadrature_error(const Eigen::VectorXd& x, const AnalyticFunction& f, int order);

}  // namespace vandint

#endif
