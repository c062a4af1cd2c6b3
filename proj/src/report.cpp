#include "vandint/report.hpp"

#include <sstream>

namespace vandint {

namespace {

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string value_text(const ReportValue& v) {
    if (const auto* d = std::get_if<double>(&v)) return to_string(Number(*d));
    if (const auto* r = std::get_if<Rational>(&v)) return r->to_string();
    return std::get<MultiPoly>(v).to_string();
}

std::string number_text(double d) { return to_string(Number(d)); }

}  // namespace

Json to_json(const ReportValue& value) {
    if (const auto* d = std::get_if<double>(&value)) return *d;
    return value_text(value);
}

Json to_json(const IdentityReport& report) {
    Json j;
    j["name"] = report.name;
    j["n"] = report.metadata.n;
    j["passed"] = report.passed;
    j["lhs"] = to_json(report.lhs);
    j["rhs"] = to_json(report.rhs);
    j["abs_err"] = report.abs_err;
    j["rel_err"] = report.rel_err;
    j["tolerance"] = report.tolerance;
    j["seed"] = report.metadata.seed ? Json(*report.metadata.seed) : Json(nullptr);
    Json config;
    config["pipeline"] = report.exact ? "exact" : "floating";
    config["order"] = report.metadata.order ? Json(*report.metadata.order) : Json(nullptr);
    config["function"] = report.metadata.function;
    config["points"] = report.metadata.points;
    config["case"] = report.metadata.detail;
    j["config"] = std::move(config);
    return j;
}

std::string csv_header() {
    return "name,n,passed,lhs,rhs,abs_err,rel_err,tolerance,seed,pipeline,order,function,points,case";
}

std::string to_csv_row(const IdentityReport& r) {
    std::ostringstream out;
    out << csv_escape(r.name) << ',' << r.metadata.n << ',' << (r.passed ? "true" : "false") << ','
        << csv_escape(value_text(r.lhs)) << ',' << csv_escape(value_text(r.rhs)) << ',' << number_text(r.abs_err)
        << ',' << number_text(r.rel_err) << ',' << number_text(r.tolerance) << ','
        << (r.metadata.seed ? std::to_string(*r.metadata.seed) : "") << ',' << (r.exact ? "exact" : "floating")
        << ',' << (r.metadata.order ? std::to_string(*r.metadata.order) : "") << ','
        << csv_escape(r.metadata.function) << ',' << csv_escape(r.metadata.points) << ','
        << csv_escape(r.metadata.detail);
    return out.str();
}

std::string to_text_line(const IdentityReport& r) {
    std::ostringstream out;
    out << (r.passed ? "PASS " : "FAIL ") << r.name << " n=" << r.metadata.n;
    if (!r.metadata.detail.empty()) out << " [" << r.metadata.detail << "]";
    if (!r.metadata.function.empty()) out << " f=" << r.metadata.function;
    if (!r.metadata.points.empty()) out << " points=" << r.metadata.points;
    if (r.exact) {
        out << " exact";
        if (!std::holds_alternative<MultiPoly>(r.lhs)) out << " lhs=" << value_text(r.lhs) << " rhs=" << value_text(r.rhs);
    } else {
        out << " lhs=" << value_text(r.lhs) << " rhs=" << value_text(r.rhs) << " rel_err=" << number_text(r.rel_err)
            << " tol=" << number_text(r.tolerance);
    }
    return out.str();
}

OutputFormat parse_format(const std::string& name) {
    if (name == "json") return OutputFormat::json;
    if (name == "csv") return OutputFormat::csv;
    if (name == "text") return OutputFormat::text;
    throw InvalidInput("unknown format '" + name + "' (expected json, csv or text)");
}

std::string render_reports(std::span<const IdentityReport> reports, OutputFormat format) {
    switch (format) {
        case OutputFormat::json: {
            Json arr = Json::array();
            for (const auto& r : reports) arr.push_back(to_json(r));
            return arr.dump(2) + "\n";
        }
        case OutputFormat::csv: {
            std::string out = csv_header() + "\n";
            for (const auto& r : reports) out += to_csv_row(r) + "\n";
            return out;
        }
        case OutputFormat::text: {
            std::string out;
            for (const auto& r : reports) out += to_text_line(r) + "\n";
            return out;
        }
    }
    return {};
}

}  // namespace vandint
