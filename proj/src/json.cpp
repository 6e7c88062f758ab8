#include "genival/json.hpp"

#include <string>

#include "genival/error.hpp"
#include "genival/format.hpp"

namespace genival {

using nlohmann::json;

double json_real(double v) { return std::stod(format_real(v)); }

json to_json(const gelement& x)
{
    const interval k = canonical_interval(x);
    json body = {{"lo", json_real(k.lo())}, {"hi", json_real(k.hi())}};
    if (x.p() > x.q()) {
        return {{"dual", body}};
    }
    return body;
}

namespace {

[[noreturn]] void schema(const std::string& what) { throw error(errc::parse_error, what); }

double real_field(const json& j, const char* key)
{
    if (!j.contains(key) || !j.at(key).is_number()) {
        schema(std::string("expected a number in field '") + key + "'");
    }
    return j.at(key).get<double>();
}

} // namespace

gelement gelement_from_json(const json& j)
{
    if (!j.is_object()) {
        schema("interval value must be an object");
    }
    if (j.contains("point")) {
        return gelement::point(real_field(j, "point"));
    }
    if (j.contains("dual")) {
        const json& d = j.at("dual");
        return gelement::from_negative(interval(real_field(d, "lo"), real_field(d, "hi")));
    }
    return gelement::from_proper(interval(real_field(j, "lo"), real_field(j, "hi")));
}

namespace lp {

problem problem_from_json(const json& j)
{
    if (!j.is_object()) {
        schema("problem must be a JSON object");
    }
    if (j.contains("sense") && j.at("sense") != "max") {
        schema("only \"sense\": \"max\" is supported");
    }
    if (!j.contains("objective") || !j.at("objective").is_array()) {
        schema("nonlinear or missing objective: \"objective\" must be a list of linear coefficients");
    }
    problem pb;
    for (const json& c : j.at("objective")) {
        if (!c.is_number()) {
            schema("nonlinear objectives are not supported: \"objective\" must be a list of numbers");
        }
        pb.c.push_back(c.get<double>());
    }
    if (!j.contains("constraints") || !j.at("constraints").is_array()) {
        schema("\"constraints\" must be a list");
    }
    for (const json& row : j.at("constraints")) {
        if (!row.contains("coeffs") || !row.at("coeffs").is_array() || !row.contains("rhs")) {
            schema("each constraint needs \"coeffs\" and \"rhs\"");
        }
        std::vector<double> coeffs;
        for (const json& a : row.at("coeffs")) {
            if (!a.is_number()) {
                schema("constraint coefficients must be numbers");
            }
            coeffs.push_back(a.get<double>());
        }
        pb.a.push_back(std::move(coeffs));
        pb.b.push_back(gelement_from_json(row.at("rhs")));
    }
    if (j.contains("form")) {
        const std::string form = j.at("form").get<std::string>();
        if (form == "eq") {
            pb.form = constraint_form::equality;
        } else if (form != "leq") {
            schema("\"form\" must be \"leq\" or \"eq\"");
        }
    }
    if (j.contains("basis")) {
        pb.basis = j.at("basis").get<std::vector<std::size_t>>();
    }
    return pb;
}

json to_json(const outcome& o)
{
    if (const auto* opt = std::get_if<optimal>(&o)) {
        json sol = json::array();
        for (const gelement& x : opt->x) {
            sol.push_back(genival::to_json(x));
        }
        return {{"status", "optimal"},
                {"solution", sol},
                {"objective", genival::to_json(opt->objective)},
                {"objective_center", json_real(center(opt->objective))},
                {"pivots", opt->pivots}};
    }
    if (const auto* u = std::get_if<unbounded>(&o)) {
        return {{"status", "unbounded"}, {"column", u->column}};
    }
    return {{"status", "iteration-cap"}};
}

} // namespace lp
} // namespace genival
