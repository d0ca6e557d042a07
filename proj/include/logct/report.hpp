#pragma once

// Machine-readable run reports. Rationals are written as "num/den" strings;
// polynomials as the list of their coefficients, constant term first.

#include "logct/ct.hpp"
#include "logct/exact.hpp"
#include "logct/verdict.hpp"

#include "json.hpp"

#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace logct {

using Json = nlohmann::ordered_json;

inline Json to_json(const Rational& r) { return to_string(r); }

inline Json to_json(const TPoly& p)
{
    Json a = Json::array();
    for (const auto& c : p.coeffs()) a.push_back(to_string(c));
    return a;
}

inline Json to_json(const CTValue& v)
{
    return std::visit([](const auto& x) { return to_json(x); }, v);
}

/// Inverse of to_json(CTValue): a string is a Rational, an array a TPoly.
inline CTValue ct_value_from_json(const Json& j)
{
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (!j.is_array()) throw std::invalid_argument("value must be a string or an array of strings");
    std::vector<Rational> cs;
    for (const auto& c : j) {
        if (!c.is_string()) throw std::invalid_argument("coefficient must be a string");
        cs.push_back(parse_rational(c.get<std::string>()));
    }
    TPoly p(std::move(cs));
    if (static_cast<std::size_t>(p.degree() + 1) != j.size()) throw std::invalid_argument("polynomial has trailing zero coefficients");
    return p;
}

enum class Format { Json, Text, Csv };

inline Format parse_format(const std::string& s)
{
    if (s == "json") return Format::Json;
    if (s == "text") return Format::Text;
    if (s == "csv") return Format::Csv;
    throw std::invalid_argument("unknown format: " + s);
}

struct Report {
    std::string command;
    Json params = Json::object();
    std::string status;
    Json value;  // null, string, array of strings, or array of row objects (tables)
    std::optional<Rational> fitted_constant;
    std::string sign_note;
    std::string strategy;
    long long elapsed_ms = 0;
    std::string engine_version{kEngineVersion};
    Json problem_hash;  // null, a digest, or a list of digests
    Json details = Json::object();

    void absorb(const Verdict& v)
    {
        status = to_string(v.status);
        if (v.fitted_constant) fitted_constant = v.fitted_constant;
        sign_note = v.sign_note;
        if (!v.lhs.empty()) details["lhs"] = v.lhs;
        if (!v.rhs.empty()) details["rhs"] = v.rhs;
        if (!v.witness.empty()) details["witness"] = v.witness;
    }

    [[nodiscard]] Json to_json(bool with_timing = true) const
    {
        Json j;
        j["command"] = command;
        j["params"] = params;
        j["status"] = status;
        j["value"] = value;
        j["fitted_constant"] = fitted_constant ? Json(logct::to_string(*fitted_constant)) : Json(nullptr);
        j["sign_note"] = sign_note;
        j["strategy"] = strategy;
        if (with_timing) j["elapsed_ms"] = elapsed_ms;
        j["engine_version"] = engine_version;
        j["problem_hash"] = problem_hash;
        if (!details.empty()) j["details"] = details;
        return j;
    }
};

namespace detail {

inline std::string plain(const Json& j)
{
    if (j.is_string()) return j.get<std::string>();
    if (j.is_null()) return "";
    return j.dump();
}

inline std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + '"';
}

inline bool is_table(const Json& v) { return v.is_array() && !v.empty() && v.front().is_object(); }

}  // namespace detail

/// Tables (value = list of row objects) render as rows in text and csv;
/// everything else renders as key/value lines.
inline std::string render(const Report& r, Format f)
{
    if (f == Format::Json) return r.to_json().dump(2) + "\n";
    std::ostringstream os;
    if (detail::is_table(r.value)) {
        std::vector<std::string> cols;
        for (const auto& [k, v] : r.value.front().items()) cols.push_back(k);
        const char* sep = f == Format::Csv ? "," : "\t";
        for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? sep : "") << cols[i];
        os << '\n';
        for (const auto& row : r.value) {
            for (std::size_t i = 0; i < cols.size(); ++i) {
                std::string cell = detail::plain(row.value(cols[i], Json(nullptr)));
                os << (i ? sep : "") << (f == Format::Csv ? detail::csv_field(cell) : cell);
            }
            os << '\n';
        }
        return os.str();
    }
    const Json j = r.to_json();
    if (f == Format::Csv) {
        os << "field,value\n";
        for (const auto& [k, v] : j.items()) os << k << ',' << detail::csv_field(detail::plain(v)) << '\n';
    } else {
        for (const auto& [k, v] : j.items()) os << k << ": " << detail::plain(v) << '\n';
    }
    return os.str();
}

}  // namespace logct
