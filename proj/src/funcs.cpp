#include "vandint/funcs.hpp"

#include <cctype>
#include <charconv>
#include <cmath>

#include "vandint/errors.hpp"

namespace vandint {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

std::vector<std::string> split_args(std::string_view text) {
    std::vector<std::string> out(1);
    for (char c : text) {
        if (c == ',') {
            out.emplace_back();
        } else if (c != ' ' && c != '\t') {
            out.back().push_back(c);
        }
    }
    return out;
}

double parse_real(const std::string& token) {
    if (token.empty()) throw InvalidInput("missing function parameter");
    return Rational::parse(token).to_double();
}

std::string format_double(double v) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, end);
}

void strip_trailing_zeros(std::vector<Rational>& c) {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
}

}  // namespace

AnalyticFunction::AnalyticFunction(Family family) : family_(std::move(family)) {
    if (auto* p = std::get_if<Polynomial>(&family_)) strip_trailing_zeros(p->coefficients);
}

AnalyticFunction AnalyticFunction::polynomial(std::vector<Rational> coefficients) {
    return AnalyticFunction(Polynomial{std::move(coefficients)});
}

AnalyticFunction AnalyticFunction::exponential(double rate) { return AnalyticFunction(Exponential{rate, 1.0}); }

AnalyticFunction AnalyticFunction::sine(double frequency, double phase) {
    return AnalyticFunction(Sine{frequency, phase, 1.0, 0});
}

AnalyticFunction AnalyticFunction::reciprocal(double pole) { return AnalyticFunction(Reciprocal{pole, 1.0, 1}); }

AnalyticFunction AnalyticFunction::parse(std::string_view raw) {
    std::string stripped;
    for (char c : raw) {
        if (std::isspace(static_cast<unsigned char>(c)) == 0) stripped += c;
    }
    const std::string_view text = stripped;
    const auto colon = text.find(':');
    if (colon == std::string_view::npos) {
        throw InvalidInput("function must look like poly:..., exp:..., sin:... or recip:...; got '"
                           + std::string(text) + "'");
    }
    const std::string kind(text.substr(0, colon));
    const auto args = split_args(text.substr(colon + 1));
    if (kind == "poly") {
        std::vector<Rational> coefficients;
        for (const auto& a : args) {
            if (a.empty()) throw InvalidInput("empty polynomial coefficient in '" + std::string(text) + "'");
            coefficients.push_back(Rational::parse(a));
        }
        return polynomial(std::move(coefficients));
    }
    if (kind == "exp") {
        if (args.size() != 1) throw InvalidInput("exp takes one parameter: exp:rate");
        return exponential(parse_real(args[0]));
    }
    if (kind == "sin") {
        if (args.size() != 2) throw InvalidInput("sin takes two parameters: sin:frequency,phase");
        return sine(parse_real(args[0]), parse_real(args[1]));
    }
    if (kind == "recip") {
        if (args.size() != 1) throw InvalidInput("recip takes one parameter: recip:pole");
        return reciprocal(parse_real(args[0]));
    }
    throw InvalidInput("unknown function family '" + kind + "'");
}

std::optional<double> AnalyticFunction::pole() const {
    if (const auto* r = std::get_if<Reciprocal>(&family_)) return r->pole;
    return std::nullopt;
}

std::string AnalyticFunction::describe() const {
    return std::visit(
        overloaded{
            [](const Polynomial& p) {
                std::string s = "poly:";
                if (p.coefficients.empty()) return s + "0";
                for (std::size_t i = 0; i < p.coefficients.size(); ++i) {
                    if (i > 0) s += ',';
                    s += p.coefficients[i].to_string();
                }
                return s;
            },
            [](const Exponential& e) {
                std::string s = "exp:" + format_double(e.rate);
                if (e.scale != 1.0) s += " (scaled " + format_double(e.scale) + ")";
                return s;
            },
            [](const Sine& w) {
                std::string s = "sin:" + format_double(w.frequency) + "," + format_double(w.phase);
                if (w.quarter_turns % 4 != 0 || w.scale != 1.0) {
                    s += " (scaled " + format_double(w.scale) + ", +" + std::to_string(w.quarter_turns % 4)
                         + " quarter turns)";
                }
                return s;
            },
            [](const Reciprocal& r) {
                std::string s = "recip:" + format_double(r.pole);
                if (r.power != 1 || r.scale != 1.0) {
                    s += " (scaled " + format_double(r.scale) + ", power " + std::to_string(r.power) + ")";
                }
                return s;
            },
        },
        family_);
}

AnalyticFunction derivative(const AnalyticFunction& f, unsigned k) {
    return std::visit(
        overloaded{
            [k](const Polynomial& p) {
                std::vector<Rational> out;
                for (std::size_t d = k; d < p.coefficients.size(); ++d) {
                    mpz_class falling = 1;
                    for (unsigned j = 0; j < k; ++j) falling *= static_cast<unsigned long>(d - j);
                    out.push_back(p.coefficients[d] * Rational(falling, 1));
                }
                return AnalyticFunction::polynomial(std::move(out));
            },
            [k](const Exponential& e) {
                return AnalyticFunction(Exponential{e.rate, e.scale * std::pow(e.rate, static_cast<double>(k))});
            },
            [k](const Sine& w) {
                return AnalyticFunction(Sine{w.frequency, w.phase,
                                             w.scale * std::pow(w.frequency, static_cast<double>(k)),
                                             (w.quarter_turns + k) % 4});
            },
            [k](const Reciprocal& r) {
                // d^k (a-c)^(-p) = (-1)^k p (p+1) ... (p+k-1) (a-c)^(-p-k)
                double factor = 1.0;
                for (unsigned j = 0; j < k; ++j) factor *= -static_cast<double>(r.power + j);
                return AnalyticFunction(Reciprocal{r.pole, r.scale * factor, r.power + k});
            },
        },
        f.family_);
}

double eval(const AnalyticFunction& f, double point) {
    return std::visit(
        overloaded{
            [point](const Polynomial& p) {
                double acc = 0.0;
                for (auto it = p.coefficients.rbegin(); it != p.coefficients.rend(); ++it) {
                    acc = acc * point + it->to_double();
                }
                return acc;
            },
            [point](const Exponential& e) { return e.scale * std::exp(e.rate * point); },
            [point](const Sine& w) {
                const double arg = w.frequency * point + w.phase;
                switch (w.quarter_turns % 4) {
                    case 0: return w.scale * std::sin(arg);
                    case 1: return w.scale * std::cos(arg);
                    case 2: return -w.scale * std::sin(arg);
                    default: return -w.scale * std::cos(arg);
                }
            },
            [point](const Reciprocal& r) {
                const double d = point - r.pole;
                if (d == 0.0) throw PoleError("reciprocal evaluated at its pole " + format_double(r.pole));
                return r.scale * std::pow(d, -static_cast<double>(r.power));
            },
        },
        f.family_);
}

std::function<double(double)> evaluator(const AnalyticFunction& f) {
    if (const auto* p = std::get_if<Polynomial>(&f.family())) {
        std::vector<double> c;
        c.reserve(p->coefficients.size());
        for (const auto& r : p->coefficients) c.push_back(r.to_double());
        return [c = std::move(c)](double a) {
            double acc = 0.0;
            for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * a + *it;
            return acc;
        };
    }
    return [f](double a) { return eval(f, a); };
}

Rational eval_exact(const AnalyticFunction& f, const Rational& point) {
    const auto* p = std::get_if<Polynomial>(&f.family());
    if (p == nullptr) throw InvalidInput("exact evaluation needs a polynomial function, got " + f.describe());
    Rational acc(0);
    for (auto it = p->coefficients.rbegin(); it != p->coefficients.rend(); ++it) acc = acc * point + *it;
    return acc;
}

std::optional<MultiPoly> as_polynomial(const AnalyticFunction& f, VarId var) {
    const auto* p = std::get_if<Polynomial>(&f.family());
    if (p == nullptr) return std::nullopt;
    MultiPoly out;
    for (std::size_t d = 0; d < p->coefficients.size(); ++d) {
        out.add_term(Monomial::of(var, static_cast<unsigned>(d)), p->coefficients[d]);
    }
    return out;
}

void require_pole_outside(const AnalyticFunction& f, double lower, double upper) {
    if (const auto c = f.pole(); c && *c >= lower && *c <= upper) {
        throw PoleError("pole " + format_double(*c) + " lies inside [" + format_double(lower) + ", "
                        + format_double(upper) + "]");
    }
}

}  // namespace vandint
