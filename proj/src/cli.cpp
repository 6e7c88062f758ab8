#include "genival/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "genival/analysis.hpp"
#include "genival/division.hpp"
#include "genival/embed.hpp"
#include "genival/error.hpp"
#include "genival/format.hpp"
#include "genival/json.hpp"
#include "genival/lp.hpp"
#include "genival/parse.hpp"

namespace genival::cli {

using nlohmann::json;

namespace {

struct settings {
    bool json_output = false;
    double inv_tol = 0;
    std::uint64_t seed = 1;
};

class io_error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

json element_json(const gelement& x)
{
    json j = genival::to_json(x);
    j["text"] = to_string(x);
    return j;
}

std::vector<double> parse_list(const std::string& text)
{
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        out.push_back(parse_gelement(item).p());
        if (const gelement g = parse_gelement(item); g.p() != g.q()) {
            throw parse_error(0, "expected a real number, got '" + item + "'");
        }
    }
    return out;
}

void print(std::ostream& out, const settings& s, const json& j, const std::string& text)
{
    if (s.json_output) {
        out << j.dump(2) << '\n';
    } else {
        out << text;
    }
}

void print_division(std::ostream& out, const settings& s, const division_result& r,
                    std::optional<bool> ratio_condition = std::nullopt)
{
    json j = {{"kind", std::string(to_string(r.kind))},
              {"quotient", element_json(r.quotient)},
              {"remainder", element_json(r.remainder)}};
    std::string text = "kind: " + std::string(to_string(r.kind)) + "\nquotient: "
                     + to_string(r.quotient) + "\nremainder: " + to_string(r.remainder) + "\n";
    if (ratio_condition) {
        j["ratio_condition_held"] = *ratio_condition;
        text += std::string("ratio condition: ") + (*ratio_condition ? "held" : "failed") + "\n";
    }
    print(out, s, j, text);
}

gfunction target_function(const std::string& target, const std::vector<double>& coeffs)
{
    if (target == "q2") {
        return q2;
    }
    if (target == "identity") {
        return [](const gelement& x) { return x; };
    }
    if (target == "poly") {
        return [coeffs](const gelement& x) { return poly_eval(coeffs, x); };
    }
    throw parse_error(0, "unknown probe target '" + target + "'");
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw io_error("cannot open " + path);
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    settings s;
    CLI::App app{"Arithmetic, division, analysis probes and linear programming on generalized intervals",
                 "genival"};
    app.require_subcommand(1);
    app.add_flag("--json", s.json_output, "Emit JSON");
    app.add_option("--inv-tol", s.inv_tol, "Tolerance of the A4 invertibility test");
    app.add_option("--seed", s.seed, "Seed for probe sampling");

    std::string expr;
    auto* eval = app.add_subcommand("eval", "Evaluate an expression (* is the bullet product)");
    eval->add_option("expr", expr)->required();

    std::string lhs, rhs;
    bool classical = false, envelope = false;
    auto* mul = app.add_subcommand("mul", "Multiply two elements");
    mul->add_option("x", lhs)->required();
    mul->add_option("y", rhs)->required();
    auto* classical_flag = mul->add_flag("--classical", classical, "Classical interval product");
    mul->add_flag("--envelope", envelope, "Interval envelope product")->excludes(classical_flag);

    std::string mode = "auto";
    auto* div = app.add_subcommand("div", "Divide y by x");
    div->add_option("y", lhs)->required();
    div->add_option("x", rhs)->required();
    div->add_option("--mode", mode)->check(CLI::IsMember({"auto", "exact", "euclid"}));

    auto* inv = app.add_subcommand("inv", "Inverse of an element");
    inv->add_option("x", lhs)->required();

    auto* nrm = app.add_subcommand("norm", "Norm, length, center and sign of an element");
    nrm->add_option("x", lhs)->required();

    double eps = 0;
    std::string contains;
    auto* ball = app.add_subcommand("ball", "Vertices of an eps-ball");
    ball->add_option("x0", lhs)->required();
    ball->add_option("eps", eps)->required()->check(CLI::PositiveNumber);
    ball->add_option("--contains", contains, "Test membership of an element");

    std::string target = "q2", x0_text, coeff_text, radii_text = "0.1,0.01,0.001,0.0001";
    std::string region_text = "full", map_text = "linear";
    int samples = 10000;
    auto* probe = app.add_subcommand("probe", "Continuity and differentiability probes");
    probe->require_subcommand(1);
    auto* cont = probe->add_subcommand("continuity", "Largest eta keeping f within eps");
    auto* diff = probe->add_subcommand("diff", "Difference-quotient table against a candidate map");
    for (auto* sub : {cont, diff}) {
        sub->add_option("--target", target)->check(CLI::IsMember({"q2", "poly", "identity"}));
        sub->add_option("--x0", x0_text)->required();
        sub->add_option("--coeffs", coeff_text, "Polynomial coefficients a0,a1,...");
        sub->add_option("--samples", samples)->check(CLI::PositiveNumber);
    }
    cont->add_option("--eps", eps)->required()->check(CLI::PositiveNumber);
    diff->add_option("--radii", radii_text, "Strictly decreasing radii");
    diff->add_option("--region", region_text)
        ->check(CLI::IsMember({"full", "lengthening", "left-dominant"}));
    diff->add_option("--map", map_text, "linear: 2x0•h on positive offsets as a matrix; bullet: h -> 2x0•h")
        ->check(CLI::IsMember({"linear", "bullet"}));

    std::string path;
    auto* lp_cmd = app.add_subcommand("lp", "Interval right-hand side linear programs");
    lp_cmd->require_subcommand(1);
    auto* lp_solve = lp_cmd->add_subcommand("solve", "Solve a problem file");
    lp_solve->add_option("path", path)->required();

    std::vector<std::string> argv_rev(args.rbegin(), args.rend());
    try {
        app.parse(argv_rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return usage_failure;
    }

    try {
        if (*eval) {
            const gelement v = eval_expr(expr);
            print(out, s, element_json(v), to_string(v) + "\n");
        } else if (*mul) {
            const gelement x = parse_gelement(lhs);
            const gelement y = parse_gelement(rhs);
            gelement r;
            if (classical || envelope) {
                if (x.p() > x.q() || y.p() > y.q()) {
                    throw error(errc::unsupported, "interval products need positive classes");
                }
                const interval xi(x.p(), x.q()), yi(y.p(), y.q());
                r = gelement::from_proper(classical ? mul_classical(xi, yi) : mul_envelope(xi, yi));
            } else {
                r = bullet(x, y);
            }
            print(out, s, element_json(r), to_string(r) + "\n");
        } else if (*div) {
            const gelement y = parse_gelement(lhs);
            const gelement x = parse_gelement(rhs);
            division_options opts;
            opts.inv_tol = s.inv_tol;
            if (mode == "auto") {
                print_division(out, s, div_auto(y, x, opts));
            } else if (x.p() <= x.q() && straddles_zero(interval(x.p(), x.q()))) {
                if (mode == "exact") {
                    print_division(out, s, {divide_straddle(y, x), {}, division_kind::exact_straddle});
                } else {
                    print_division(out, s, euclid_div_straddle(y, x));
                }
            } else if (mode == "exact") {
                const invertible_quotient q = divide_invertible(y, x);
                print_division(out, s, {q.quotient, {}, division_kind::exact_invertible},
                               q.ratio_condition_held);
            } else {
                print_division(out, s, euclid_div(y, x));
            }
        } else if (*inv) {
            const gelement x = parse_gelement(lhs);
            const gelement r = g_inverse(x, s.inv_tol);
            const a4 image = inverse(phi_bar(x), s.inv_tol);
            json j = element_json(r);
            j["a4"] = {json_real(image[0]), json_real(image[1]), json_real(image[2]),
                       json_real(image[3])};
            print(out, s, j, to_string(r) + "\na4: " + to_string(image) + "\n");
        } else if (*nrm) {
            const gelement x = parse_gelement(lhs);
            const sign_class sg = sign(x);
            const char* kind = sg.kind == sign_kind::positive   ? "positive"
                             : sg.kind == sign_kind::negative ? "negative"
                                                              : "point";
            const json j = {{"norm", json_real(norm(x))},
                            {"length", json_real(length(x))},
                            {"center", json_real(center(x))},
                            {"sign", kind}};
            print(out, s, j,
                  "norm: " + format_real(norm(x)) + "\nlength: " + format_real(length(x))
                      + "\ncenter: " + format_real(center(x)) + "\nsign: " + kind + "\n");
        } else if (*ball) {
            const gelement x0 = parse_gelement(lhs);
            json j = {{"vertices", json::array()}};
            std::string text;
            for (const gelement& v : ball_vertices(x0, eps)) {
                j["vertices"].push_back({json_real(v.p()), json_real(v.q())});
                text += "(" + format_real(v.p()) + "," + format_real(v.q()) + ")\n";
            }
            if (!contains.empty()) {
                const bool inside = ball_contains(x0, eps, parse_gelement(contains));
                j["contains"] = inside;
                text += std::string("contains: ") + (inside ? "true" : "false") + "\n";
            }
            print(out, s, j, text);
        } else if (*probe) {
            const gelement x0 = parse_gelement(x0_text);
            const std::vector<double> coeffs =
                coeff_text.empty() ? std::vector<double>{} : parse_list(coeff_text);
            const gfunction f = target_function(target, coeffs);
            if (*cont) {
                continuity_options opts;
                opts.samples = samples;
                opts.seed = s.seed;
                const double eta = continuity_probe(f, x0, eps, opts);
                print(out, s, {{"eps", json_real(eps)}, {"eta", json_real(eta)}},
                      "eps: " + format_real(eps) + "\neta: " + format_real(eta) + "\n");
            } else {
                const std::vector<double> radii = parse_list(radii_text);
                gfunction L;
                if (map_text == "linear") {
                    L = candidate_differential_q2(x0);
                } else {
                    L = [x0](const gelement& h) { return 2 * bullet(x0, h); };
                }
                probe_options opts;
                opts.samples = samples;
                opts.seed = s.seed;
                opts.region = region_text == "lengthening"     ? probe_region::lengthening
                            : region_text == "left-dominant" ? probe_region::left_dominant
                                                             : probe_region::full;
                const probe_report rep = differentiability_probe(f, x0, L, radii, opts);
                if (s.json_output) {
                    json rows = json::array();
                    for (std::size_t i = 0; i < rep.radii.size(); ++i) {
                        rows.push_back({{"radius", json_real(rep.radii[i])},
                                        {"ratio", json_real(rep.ratios[i])}});
                    }
                    out << json{{"region", std::string(to_string(rep.region))},
                                {"verdict", std::string(to_string(rep.verdict))},
                                {"rows", rows}}
                               .dump(2)
                        << '\n';
                } else {
                    write_probe_table(out, rep);
                    out << "verdict: " << to_string(rep.verdict) << '\n';
                }
            }
        } else if (*lp_cmd) {
            const json doc = json::parse(read_file(path));
            const lp::outcome result = lp::solve(lp::problem_from_json(doc));
            const json j = lp::to_json(result);
            std::string text = "status: " + j.at("status").get<std::string>() + "\n";
            if (const auto* o = std::get_if<lp::optimal>(&result)) {
                for (std::size_t i = 0; i < o->x.size(); ++i) {
                    text += "x" + std::to_string(i + 1) + " = " + to_string(o->x[i]) + "\n";
                }
                text += "objective = " + to_string(o->objective) + "\npivots = "
                      + std::to_string(o->pivots) + "\n";
            } else if (const auto* u = std::get_if<lp::unbounded>(&result)) {
                text += "column = " + std::to_string(u->column) + "\n";
            }
            print(out, s, j, text);
        }
    } catch (const error& e) {
        err << "error: " << e.what() << '\n';
        return e.code() == errc::parse_error || e.code() == errc::malformed_interval ? usage_failure
                                                                                 : domain_failure;
    } catch (const io_error& e) {
        err << "error: " << e.what() << '\n';
        return usage_failure;
    } catch (const json::exception& e) {
        err << "error: " << e.what() << '\n';
        return usage_failure;
    }
    return ok;
}

} // namespace genival::cli
