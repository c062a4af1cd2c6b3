// vandint: divided differences, the Vandermonde-weighted integral identity
// and the exact lemma suite from the command line.

#include <cmath>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "vandint/divdiff.hpp"
#include "vandint/identity.hpp"
#include "vandint/lemmas.hpp"
#include "vandint/points.hpp"
#include "vandint/report.hpp"

using namespace vandint;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct CommonOptions {
    int order = kDefaultIdentityOrder;
    double tolerance = kDefaultTolerance;
    std::uint64_t seed = 1;
    /// Read as a double so that 1e8 is accepted.
    double budget = static_cast<double>(kDefaultEvaluationBudget);
    unsigned workers = 1;
    std::string format = "json";

    [[nodiscard]] CubatureOptions cubature() const { return {static_cast<std::uint64_t>(budget), workers}; }
    [[nodiscard]] OutputFormat output() const { return parse_format(format); }
};

void add_common(CLI::App& cmd, CommonOptions& common) {
    cmd.add_option("--format", common.format, "json, csv or text")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
    cmd.add_option("--order", common.order, "Gauss-Legendre nodes per axis")
        ->envname("VANDINT_ORDER")
        ->check(CLI::Range(1, kMaxQuadratureOrder))
        ->capture_default_str();
    cmd.add_option("--tolerance", common.tolerance, "relative tolerance of floating checks")
        ->envname("VANDINT_TOLERANCE")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd.add_option("--seed", common.seed, "base seed for random cases")->envname("VANDINT_SEED")->capture_default_str();
    cmd.add_option("--budget", common.budget, "maximum cubature evaluations")
        ->envname("VANDINT_BUDGET")
        ->check(CLI::Range(1.0, 1e18))
        ->capture_default_str();
    cmd.add_option("--workers", common.workers, "worker threads, 0 for all cores")->capture_default_str();
}

AnalyticFunction require_function(const std::string& text) {
    if (text.empty()) throw InvalidInput("--function is required");
    return AnalyticFunction::parse(text);
}

int print_reports(const std::vector<IdentityReport>& reports, const CommonOptions& common) {
    std::cout << render_reports(reports, common.output());
    for (const auto& r : reports) {
        if (!r.passed) return kExitFail;
    }
    return kExitPass;
}

Json number_json(const Number& v) {
    if (const auto* d = std::get_if<double>(&v)) return *d;
    return to_string(v);
}

Json sequence_json(const PointSequence& s) {
    Json arr = Json::array();
    if (s.is_exact()) {
        for (const auto& v : s.exact()) arr.push_back(v.to_string());
    } else {
        for (double v : s.floating()) arr.push_back(v);
    }
    return arr;
}

/// A single value record rendered in the requested format.
void print_record(const Json& record, OutputFormat format) {
    switch (format) {
        case OutputFormat::json:
            std::cout << record.dump(2) << "\n";
            return;
        case OutputFormat::csv: {
            std::string header, row;
            for (auto it = record.begin(); it != record.end(); ++it) {
                if (!header.empty()) {
                    header += ',';
                    row += ',';
                }
                header += it.key();
                std::string cell = it.value().is_string() ? it.value().get<std::string>() : it.value().dump();
                if (cell.find_first_of(",\"") != std::string::npos) {
                    std::string quoted = "\"";
                    for (char c : cell) {
                        if (c == '"') quoted += '"';
                        quoted += c;
                    }
                    cell = quoted + "\"";
                }
                row += cell;
            }
            std::cout << header << "\n" << row << "\n";
            return;
        }
        case OutputFormat::text: {
            std::string line;
            for (auto it = record.begin(); it != record.end(); ++it) {
                if (!line.empty()) line += ' ';
                line += it.key() + '=' + (it.value().is_string() ? it.value().get<std::string>() : it.value().dump());
            }
            std::cout << line << "\n";
            return;
        }
    }
}

void warn_conditioning(const PointSequence& points) {
    if (auto warning = conditioning_warning(points.floating())) std::cerr << "warning: " << *warning << "\n";
}

void warn_pole_proximity(const Eigen::VectorXd& x, const AnalyticFunction& f, const CommonOptions& common) {
    double predicted = 0.0;
    try {
        predicted = predicted_quadrature_error(x, f, common.order);
    } catch (const PoleError&) {
        return;
    }
    if (predicted > common.tolerance) {
        std::cerr << "warning: pole of " << f.describe() << " is close to the summed range; order " << common.order
                  << " has an estimated relative error of " << predicted << "\n";
    }
}

// ---------------------------------------------------------------------------

struct DivdiffArgs {
    std::string points;
    std::string function;
    bool via_integral = false;
    bool check = false;
};

int run_divdiff(const DivdiffArgs& args, const CommonOptions& common) {
    const auto points = PointSequence::parse(args.points);
    const auto f = require_function(args.function);
    warn_conditioning(points);
    if (args.check || args.via_integral) warn_pole_proximity(x_from_y(points.floating()), f, common);
    if (args.check) {
        auto report = check_integral_representation(points.floating(), f, common.order, common.tolerance,
                                                    common.cubature());
        return print_reports({report}, common);
    }
    Json record;
    record["points"] = points.to_string();
    record["function"] = f.describe();
    if (args.via_integral) {
        record["route"] = "integral";
        record["order"] = common.order;
        record["value"] = divided_difference_via_integral(points.floating(), f, common.order, common.cubature());
    } else {
        record["route"] = "table";
        record["value"] = number_json(divided_difference(points, f));
    }
    print_record(record, common.output());
    return kExitPass;
}

struct IdentityArgs {
    std::string x;
    std::string function;
    bool symbolic = false;
};

/// Parses x and f; exact mode needs a polynomial f.
std::pair<PointSequence, AnalyticFunction> identity_inputs(const IdentityArgs& args) {
    auto x = PointSequence::parse(args.x, args.symbolic);
    auto f = require_function(args.function);
    if (args.symbolic && !f.is_polynomial()) {
        throw InvalidInput("--symbolic needs a polynomial function, got '" + f.describe() + "'");
    }
    return {std::move(x), std::move(f)};
}

int run_integral(const IdentityArgs& args, const CommonOptions& common) {
    const auto [x, f] = identity_inputs(args);
    Json record;
    record["x"] = x.to_string();
    record["function"] = f.describe();
    if (args.symbolic) {
        const auto report = check_identity_exact(x.exact(), f);
        record["pipeline"] = "exact";
        record["value"] = std::get<Rational>(report.lhs).to_string();
    } else {
        const auto result = weighted_integral(x.floating(), f, common.order, common.cubature());
        record["pipeline"] = "floating";
        record["order"] = result.nodes_per_axis;
        record["evaluations"] = result.function_evaluations;
        record["value"] = result.value;
    }
    print_record(record, common.output());
    return kExitPass;
}

int run_identity(const IdentityArgs& args, const CommonOptions& common) {
    const auto [x, f] = identity_inputs(args);
    if (args.symbolic) return print_reports({check_identity_exact(x.exact(), f)}, common);
    warn_conditioning(PointSequence(y_from_x(x.floating())));
    warn_pole_proximity(x.floating(), f, common);
    return print_reports({check_identity_numeric(x.floating(), f, common.order, common.tolerance, common.cubature())},
                         common);
}

struct VandermondeArgs {
    unsigned n = 0;
    unsigned n_max = 5;
};

int run_vandermonde(const VandermondeArgs& args, const CommonOptions& common) {
    std::vector<IdentityReport> reports;
    const unsigned first = args.n > 0 ? args.n : 1;
    const unsigned last = args.n > 0 ? args.n : args.n_max;
    for (unsigned n = first; n <= last; ++n) reports.push_back(check_vandermonde_integral(n));
    return print_reports(reports, common);
}

struct LemmaArgs {
    unsigned n_max = 5;
    std::vector<std::string> only;
};

int run_lemmas(const LemmaArgs& args, const CommonOptions& common) {
    LemmaSuiteConfig config;
    config.n_max = args.n_max;
    config.only.insert(args.only.begin(), args.only.end());
    config.seed = common.seed;
    config.workers = common.workers;
    return print_reports(run_lemma_suite(config), common);
}

struct TransformArgs {
    std::string x;
    std::string y;
    bool inverse = false;
};

int run_transform(const TransformArgs& args, const CommonOptions& common) {
    if (args.inverse == args.y.empty()) throw InvalidInput("use --x, or --inverse with --y");
    if (!args.inverse && args.x.empty()) throw InvalidInput("--x is required");
    const PointSequence given = PointSequence::parse(args.inverse ? args.y : args.x);
    const PointSequence other = args.inverse ? x_from_y(given) : y_from_x(given);
    const PointSequence& x = args.inverse ? other : given;
    const PointSequence& y = args.inverse ? given : other;

    Json record;
    record["n"] = x.size() - 1;
    record["x"] = x.to_string();
    record["y"] = y.to_string();
    bool equal = false;
    if (x.is_exact() && y.is_exact()) {
        const Rational vx = vandermonde_value(x.exact());
        const Rational vy = vandermonde_value(y.exact());
        record["vandermonde_x"] = vx.to_string();
        record["vandermonde_y"] = vy.to_string();
        equal = vx == vy;
    } else {
        const double vx = vandermonde_value(x.floating());
        const double vy = vandermonde_value(y.floating());
        record["vandermonde_x"] = vx;
        record["vandermonde_y"] = vy;
        equal = std::abs(vx - vy) <= common.tolerance * std::max(std::abs(vx), std::abs(vy));
    }
    record["equal"] = equal;
    if (common.output() == OutputFormat::json) {
        record["x"] = sequence_json(x);
        record["y"] = sequence_json(y);
    }
    print_record(record, common.output());
    return equal ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Divided differences and the Vandermonde-weighted integral identity"};
    app.require_subcommand(1);

    CommonOptions common;
    int status = kExitPass;

    DivdiffArgs divdiff;
    auto* divdiff_cmd = app.add_subcommand("divdiff", "divided difference [y1..y(n+1)]f");
    divdiff_cmd->add_option("--points", divdiff.points, "comma-separated increasing points")->required();
    divdiff_cmd->add_option("--function", divdiff.function, "poly:c0,c1,... | exp:r | sin:w,phase | recip:c");
    divdiff_cmd->add_flag("--via-integral", divdiff.via_integral, "compute through the multiple integral");
    divdiff_cmd->add_flag("--check", divdiff.check, "compare the integral route with the table");
    add_common(*divdiff_cmd, common);
    divdiff_cmd->callback([&] { status = run_divdiff(divdiff, common); });

    IdentityArgs integral;
    auto* integral_cmd = app.add_subcommand("integral", "integral of V(t) f^(n)(t1+...+tn) over R(x)");
    integral_cmd->add_option("--x", integral.x, "comma-separated increasing points")->required();
    integral_cmd->add_option("--function", integral.function, "function grammar");
    integral_cmd->add_flag("--symbolic", integral.symbolic, "exact rational integration");
    add_common(*integral_cmd, common);
    integral_cmd->callback([&] { status = run_integral(integral, common); });

    IdentityArgs identity;
    auto* identity_cmd = app.add_subcommand("theorem1", "check the integral against V(x)[y1..y(n+1)]f");
    identity_cmd->add_option("--x", identity.x, "comma-separated increasing points")->required();
    identity_cmd->add_option("--function", identity.function, "function grammar");
    identity_cmd->add_flag("--symbolic", identity.symbolic, "exact pipeline; decimals read as exact");
    add_common(*identity_cmd, common);
    identity_cmd->callback([&] { status = run_identity(identity, common); });

    VandermondeArgs vandermonde;
    auto* vandermonde_cmd = app.add_subcommand("corollary", "integral of V over R(x) equals V(x)/n!, symbolic in x");
    auto* single_n = vandermonde_cmd->add_option("--n", vandermonde.n, "single dimension")->check(CLI::Range(1u, 6u));
    vandermonde_cmd->add_option("--n-max", vandermonde.n_max, "dimensions 1..n-max")
        ->check(CLI::Range(1u, 6u))
        ->excludes(single_n)
        ->capture_default_str();
    add_common(*vandermonde_cmd, common);
    vandermonde_cmd->callback([&] { status = run_vandermonde(vandermonde, common); });

    LemmaArgs lemmas;
    auto* lemmas_cmd = app.add_subcommand("verify-lemmas", "exact lemma suite");
    lemmas_cmd->alias("lemmas");
    lemmas_cmd->add_option("--n-max", lemmas.n_max, "largest dimension")
        ->check(CLI::Range(1u, static_cast<unsigned>(kDefaultSymbolicLimit)))
        ->capture_default_str();
    lemmas_cmd->add_option("--only", lemmas.only, "restrict to these groups")
        ->delimiter(',')
        ->check(CLI::IsMember(lemma_groups()));
    add_common(*lemmas_cmd, common);
    lemmas_cmd->callback([&] { status = run_lemmas(lemmas, common); });

    TransformArgs transform;
    auto* transform_cmd = app.add_subcommand("transform", "map x to y (or back with --inverse)");
    transform_cmd->add_option("--x", transform.x, "comma-separated increasing points");
    transform_cmd->add_option("--y", transform.y, "comma-separated increasing points");
    transform_cmd->add_flag("--inverse", transform.inverse, "recover x from y");
    add_common(*transform_cmd, common);
    transform_cmd->callback([&] { status = run_transform(transform, common); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return status;
}
