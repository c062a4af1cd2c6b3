#ifndef VANDINT_SYMFUN_HPP
#define VANDINT_SYMFUN_HPP

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "vandint/multipoly.hpp"

namespace vandint {

/// Largest n for which V(t1..tn) is expanded symbolically (n! terms).
inline constexpr unsigned kDefaultSymbolicLimit = 6;

/// e_k(args): sum of all k-fold products of distinct arguments, e_0 = 1.
MultiPoly elementary_symmetric(int k, std::span<const MultiPoly> args);

/// (t - r1)(t - r2)...(t - rm); t may not occur in any root.
MultiPoly omega(std::span<const MultiPoly> roots, VarId t);

/// Expanded product of (t_j - t_i) over i < j for the first n members of `family`.
MultiPoly vandermonde_poly(unsigned n, VarFamily family = VarFamily::t,
                           unsigned symbolic_limit = kDefaultSymbolicLimit);

/// t1 + ... + tn over the given variables.
MultiPoly sum_poly(std::span<const VarId> vars);

/// Sum of k-th pure partials (PureSum) or of all k-fold distinct first-order
/// mixed partials (MixedSum). MixedSum(0) is the identity.
struct OperatorKind {
    enum class Kind : std::uint8_t { pure_sum, mixed_sum };
    Kind kind;
    unsigned k;

    static constexpr OperatorKind pure(unsigned k) { return {Kind::pure_sum, k}; }
    static constexpr OperatorKind mixed(unsigned k) { return {Kind::mixed_sum, k}; }
};

MultiPoly apply_operator(OperatorKind op, const MultiPoly& p, std::span<const VarId> vars);

/// d^n / (d v1 ... d vn) over all listed variables.
MultiPoly mixed_partial(const MultiPoly& p, std::span<const VarId> vars);

/// All increasing k-subsets of {0..n-1}, in lexicographic order.
std::vector<std::vector<unsigned>> combinations(unsigned n, unsigned k);

struct VertexSelector {
    std::vector<std::uint8_t> epsilon;

    /// Number of ones, s(epsilon).
    [[nodiscard]] unsigned weight() const;
    friend bool operator==(const VertexSelector&, const VertexSelector&) = default;
};

template <typename Scalar>
struct Vertex {
    VertexSelector selector;
    Eigen::Matrix<Scalar, Eigen::Dynamic, 1> point;
};

/// The 2^n corners of the box prod [lower_i, upper_i], epsilon counted in
/// binary with epsilon_1 as the least significant digit.
template <typename Scalar>
std::vector<Vertex<Scalar>> enumerate_vertices(std::span<const std::pair<Scalar, Scalar>> bounds) {
    if (bounds.empty()) throw InvalidInput("vertex enumeration needs at least one interval");
    if (bounds.size() >= 8 * sizeof(std::size_t)) throw InvalidInput("too many intervals");
    const std::size_t n = bounds.size();
    const std::size_t count = std::size_t{1} << n;
    std::vector<Vertex<Scalar>> out;
    out.reserve(count);
    for (std::size_t code = 0; code < count; ++code) {
        Vertex<Scalar> v;
        v.selector.epsilon.resize(n);
        v.point.resize(static_cast<Eigen::Index>(n));
        for (std::size_t i = 0; i < n; ++i) {
            const bool upper = ((code >> i) & 1u) != 0;
            v.selector.epsilon[i] = upper ? 1 : 0;
            v.point(static_cast<Eigen::Index>(i)) = upper ? bounds[i].second : bounds[i].first;
        }
        out.push_back(std::move(v));
    }
    return out;
}

/// The n+1 non-decreasing selectors (0..0), (0..0,1), ..., (1..1).
std::vector<VertexSelector> monotone_selectors(unsigned n);

}  // namespace vandint

#endif
