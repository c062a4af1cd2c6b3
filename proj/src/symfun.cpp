#include "vandint/symfun.hpp"

#include <string>

namespace vandint {

MultiPoly elementary_symmetric(int k, std::span<const MultiPoly> args) {
    const int m = static_cast<int>(args.size());
    if (k < 0 || k > m) {
        throw InvalidInput("elementary symmetric order " + std::to_string(k)
                           + " outside [0, " + std::to_string(m) + "]");
    }
    // acc[j] = e_j of the arguments consumed so far
    std::vector<MultiPoly> acc(static_cast<std::size_t>(k) + 1);
    acc[0] = MultiPoly(1);
    for (int i = 0; i < m; ++i) {
        for (int j = std::min(k, i + 1); j >= 1; --j) {
            acc[static_cast<std::size_t>(j)] += acc[static_cast<std::size_t>(j) - 1] * args[static_cast<std::size_t>(i)];
        }
    }
    return acc[static_cast<std::size_t>(k)];
}

MultiPoly omega(std::span<const MultiPoly> roots, VarId t) {
    MultiPoly out(1);
    const MultiPoly tp(t);
    for (const auto& r : roots) {
        if (r.contains(t)) throw InvalidInput("variable " + t.name() + " occurs in a root of omega");
        out *= tp - r;
    }
    return out;
}

MultiPoly vandermonde_poly(unsigned n, VarFamily family, unsigned symbolic_limit) {
    if (n < 1) throw InvalidInput("Vandermonde polynomial needs n >= 1");
    if (n > symbolic_limit) {
        throw SymbolicLimitExceeded("Vandermonde expansion for n = " + std::to_string(n)
                                    + " exceeds the symbolic limit " + std::to_string(symbolic_limit));
    }
    const auto vars = variables(family, n);
    MultiPoly out(1);
    for (unsigned j = 1; j < n; ++j) {
        for (unsigned i = 0; i < j; ++i) out *= MultiPoly(vars[j]) - MultiPoly(vars[i]);
    }
    return out;
}

MultiPoly sum_poly(std::span<const VarId> vars) {
    MultiPoly out;
    for (const auto& v : vars) out += MultiPoly(v);
    return out;
}

std::vector<std::vector<unsigned>> combinations(unsigned n, unsigned k) {
    std::vector<std::vector<unsigned>> out;
    if (k > n) return out;
    std::vector<unsigned> idx(k);
    for (unsigned i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        out.push_back(idx);
        int pos = static_cast<int>(k) - 1;
        while (pos >= 0 && idx[static_cast<unsigned>(pos)] == n - k + static_cast<unsigned>(pos)) --pos;
        if (pos < 0) break;
        ++idx[static_cast<unsigned>(pos)];
        for (unsigned j = static_cast<unsigned>(pos) + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

MultiPoly mixed_partial(const MultiPoly& p, std::span<const VarId> vars) {
    MultiPoly out = p;
    for (const auto& v : vars) {
        if (out.is_zero()) break;
        out = diff(out, v);
    }
    return out;
}

MultiPoly apply_operator(OperatorKind op, const MultiPoly& p, std::span<const VarId> vars) {
    const auto n = static_cast<unsigned>(vars.size());
    MultiPoly out;
    if (op.kind == OperatorKind::Kind::pure_sum) {
        if (op.k < 1) throw InvalidInput("pure-sum operator order must be at least 1");
        for (const auto& v : vars) out += diff(p, v, op.k);
        return out;
    }
    if (op.k > n) {
        throw InvalidInput("mixed-sum operator order " + std::to_string(op.k) + " exceeds " + std::to_string(n));
    }
    for (const auto& combo : combinations(n, op.k)) {
        std::vector<VarId> chosen;
        chosen.reserve(combo.size());
        for (unsigned i : combo) chosen.push_back(vars[i]);
        out += mixed_partial(p, chosen);
    }
    return out;
}

unsigned VertexSelector::weight() const {
    unsigned s = 0;
    for (auto e : epsilon) s += e;
    return s;
}

std::vector<VertexSelector> monotone_selectors(unsigned n) {
    if (n < 1) throw InvalidInput("monotone selectors need n >= 1");
    std::vector<VertexSelector> out;
    out.reserve(n + 1);
    for (unsigned i = 1; i <= n + 1; ++i) {
        VertexSelector s;
        s.epsilon.assign(n, 0);
        // n+1-i zeros followed by i-1 ones
        for (unsigned j = n + 1 - i; j < n; ++j) s.epsilon[j] = 1;
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace vandint
