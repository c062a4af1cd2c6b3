#include "vandint/multipoly.hpp"

#include <algorithm>
#include <sstream>

namespace vandint {

VarId VarId::of(VarFamily family, unsigned i) {
    switch (family) {
        case VarFamily::tau: return tau();
        case VarFamily::alpha: return alpha();
        default: return {family, static_cast<std::uint16_t>(i)};
    }
}

std::string VarId::name() const {
    switch (family) {
        case VarFamily::t: return "t" + std::to_string(index);
        case VarFamily::tau: return "t";
        case VarFamily::x: return "x" + std::to_string(index);
        case VarFamily::y: return "y" + std::to_string(index);
        case VarFamily::alpha: return "alpha";
    }
    return "?";
}

std::vector<VarId> variables(VarFamily family, unsigned count) {
    std::vector<VarId> out;
    out.reserve(count);
    for (unsigned i = 1; i <= count; ++i) out.push_back(VarId::of(family, i));
    return out;
}

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(std::vector<Power> powers) : powers_(std::move(powers)) {
    std::sort(powers_.begin(), powers_.end());
    std::vector<Power> merged;
    for (const auto& [v, e] : powers_) {
        if (!merged.empty() && merged.back().first == v) {
            merged.back().second += e;
        } else {
            merged.emplace_back(v, e);
        }
    }
    std::erase_if(merged, [](const Power& p) { return p.second == 0; });
    powers_ = std::move(merged);
}

Monomial Monomial::of(VarId v, unsigned exponent) {
    Monomial m;
    if (exponent > 0) m.powers_.emplace_back(v, exponent);
    return m;
}

unsigned Monomial::degree() const {
    unsigned d = 0;
    for (const auto& p : powers_) d += p.second;
    return d;
}

unsigned Monomial::exponent(VarId v) const {
    auto it = std::lower_bound(powers_.begin(), powers_.end(), v,
                               [](const Power& p, VarId key) { return p.first < key; });
    return (it != powers_.end() && it->first == v) ? it->second : 0;
}

Monomial Monomial::with(VarId v, unsigned exponent) const {
    Monomial m;
    m.powers_.reserve(powers_.size() + 1);
    bool placed = false;
    for (const auto& p : powers_) {
        if (!placed && v <= p.first) {
            if (exponent > 0) m.powers_.emplace_back(v, exponent);
            placed = true;
            if (p.first == v) continue;
        }
        m.powers_.push_back(p);
    }
    if (!placed && exponent > 0) m.powers_.emplace_back(v, exponent);
    return m;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m;
    m.powers_.reserve(a.powers_.size() + b.powers_.size());
    auto i = a.powers_.begin();
    auto j = b.powers_.begin();
    while (i != a.powers_.end() && j != b.powers_.end()) {
        if (i->first < j->first) {
            m.powers_.push_back(*i++);
        } else if (j->first < i->first) {
            m.powers_.push_back(*j++);
        } else {
            m.powers_.emplace_back(i->first, i->second + j->second);
            ++i;
            ++j;
        }
    }
    m.powers_.insert(m.powers_.end(), i, a.powers_.end());
    m.powers_.insert(m.powers_.end(), j, b.powers_.end());
    return m;
}

std::string Monomial::to_string() const {
    std::string out;
    for (const auto& [v, e] : powers_) {
        if (!out.empty()) out += '*';
        out += v.name();
        if (e != 1) out += '^' + std::to_string(e);
    }
    return out.empty() ? "1" : out;
}

bool GradedLexLess::operator()(const Monomial& a, const Monomial& b) const {
    const unsigned da = a.degree();
    const unsigned db = b.degree();
    if (da != db) return da < db;
    const auto& pa = a.powers();
    const auto& pb = b.powers();
    for (std::size_t k = 0; k < pa.size() && k < pb.size(); ++k) {
        if (pa[k].first != pb[k].first) {
            // The monomial holding the earlier variable is the larger one.
            return pb[k].first < pa[k].first;
        }
        if (pa[k].second != pb[k].second) return pa[k].second < pb[k].second;
    }
    return pa.size() < pb.size();
}

MissingVariableError::MissingVariableError(std::vector<VarId> missing)
    : InvalidInput([&] {
          std::string msg = "unassigned variables:";
          for (const auto& v : missing) msg += " " + v.name();
          return msg;
      }()),
      missing_(std::move(missing)) {}

// ---------------------------------------------------------------------------
// MultiPoly

MultiPoly::MultiPoly(const Rational& constant) {
    if (!constant.is_zero()) terms_.emplace(Monomial{}, constant);
}

MultiPoly::MultiPoly(VarId v) { terms_.emplace(Monomial::of(v), Rational(1)); }

MultiPoly::MultiPoly(const Monomial& m, const Rational& coefficient) {
    if (!coefficient.is_zero()) terms_.emplace(m, coefficient);
}

bool MultiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational MultiPoly::constant_term() const { return coefficient(Monomial{}); }

Rational MultiPoly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::set<VarId> MultiPoly::variables() const {
    std::set<VarId> out;
    for (const auto& [m, c] : terms_) {
        for (const auto& p : m.powers()) out.insert(p.first);
    }
    return out;
}

bool MultiPoly::contains(VarId v) const { return degree_in(v) > 0; }

unsigned MultiPoly::degree_in(VarId v) const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(v));
    return d;
}

unsigned MultiPoly::total_degree() const {
    return terms_.empty() ? 0 : terms_.rbegin()->first.degree();
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        const bool negative = c.sign() < 0;
        const Rational magnitude = abs(c);
        if (first) {
            if (negative) out << '-';
        } else {
            out << (negative ? " - " : " + ");
        }
        first = false;
        if (m.is_one()) {
            out << magnitude.to_string();
        } else if (magnitude == Rational(1)) {
            out << m.to_string();
        } else {
            out << magnitude.to_string() << '*' << m.to_string();
        }
    }
    return out.str();
}

void MultiPoly::add_term(const Monomial& m, const Rational& coefficient) {
    if (coefficient.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
    return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& rhs) {
    *this = *this * rhs;
    return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& rhs) {
    if (rhs.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) c *= rhs;
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly out;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
    }
    return out;
}

MultiPoly operator-(const MultiPoly& a) {
    MultiPoly out = a;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
}

MultiPoly pow(const MultiPoly& base, unsigned exponent) {
    MultiPoly result(1);
    MultiPoly square = base;
    while (exponent > 0) {
        if (exponent & 1u) result *= square;
        exponent >>= 1u;
        if (exponent > 0) square *= square;
    }
    return result;
}

MultiPoly diff(const MultiPoly& p, VarId v, unsigned order) {
    if (order == 0) return p;
    MultiPoly out;
    for (const auto& [m, c] : p.terms()) {
        const unsigned e = m.exponent(v);
        if (e < order) continue;
        // e * (e-1) * ... * (e-order+1)
        mpz_class falling = 1;
        for (unsigned k = 0; k < order; ++k) falling *= e - k;
        out.add_term(m.with(v, e - order), c * Rational(falling, 1));
    }
    return out;
}

MultiPoly antiderivative(const MultiPoly& p, VarId v) {
    MultiPoly out;
    for (const auto& [m, c] : p.terms()) {
        const unsigned e = m.exponent(v);
        out.add_term(m.with(v, e + 1), c / Rational(e + 1));
    }
    return out;
}

MultiPoly integrate(const MultiPoly& p, VarId v, const MultiPoly& lower, const MultiPoly& upper) {
    if (lower.contains(v) || upper.contains(v)) {
        throw InvalidInput("integration variable " + v.name() + " occurs in a bound");
    }
    const MultiPoly anti = antiderivative(p, v);
    if (lower.is_constant() && upper.is_constant()) {
        return partial_evaluate(anti, {{v, upper.constant_term()}})
               - partial_evaluate(anti, {{v, lower.constant_term()}});
    }
    return substitute(anti, v, upper) - substitute(anti, v, lower);
}

MultiPoly substitute(const MultiPoly& p, VarId v, const MultiPoly& replacement) {
    return substitute(p, std::map<VarId, MultiPoly>{{v, replacement}});
}

MultiPoly substitute(const MultiPoly& p, const std::map<VarId, MultiPoly>& replacements) {
    // Cached powers of each replacement, indexed by exponent.
    std::map<VarId, std::vector<MultiPoly>> power_cache;
    auto power_of = [&](VarId v, unsigned e) -> const MultiPoly& {
        auto& powers = power_cache[v];
        if (powers.empty()) powers.emplace_back(1);
        while (powers.size() <= e) powers.push_back(powers.back() * replacements.at(v));
        return powers[e];
    };

    MultiPoly out;
    for (const auto& [m, c] : p.terms()) {
        std::vector<Monomial::Power> kept;
        MultiPoly factor(c);
        for (const auto& [v, e] : m.powers()) {
            if (replacements.contains(v)) {
                factor *= power_of(v, e);
            } else {
                kept.emplace_back(v, e);
            }
        }
        if (factor.is_zero()) continue;
        const Monomial rest(std::move(kept));
        for (const auto& [fm, fc] : factor.terms()) out.add_term(fm * rest, fc);
    }
    return out;
}

MultiPoly partial_evaluate(const MultiPoly& p, const Assignment& assignment) {
    MultiPoly out;
    for (const auto& [m, c] : p.terms()) {
        std::vector<Monomial::Power> kept;
        Rational coefficient = c;
        for (const auto& [v, e] : m.powers()) {
            if (auto it = assignment.find(v); it != assignment.end()) {
                coefficient *= pow(it->second, e);
            } else {
                kept.emplace_back(v, e);
            }
        }
        out.add_term(Monomial(std::move(kept)), coefficient);
    }
    return out;
}

Rational evaluate(const MultiPoly& p, const Assignment& assignment) {
    std::vector<VarId> missing;
    for (const auto& v : p.variables()) {
        if (!assignment.contains(v)) missing.push_back(v);
    }
    if (!missing.empty()) throw MissingVariableError(std::move(missing));
    return partial_evaluate(p, assignment).constant_term();
}

}  // namespace vandint
