// Command-line front end: evaluates the sharp-inequality pipelines and emits
// machine-readable JSON reports.
//
// Exit codes: 0 pass, 1 verdict fail, 2 usage/config error.

#include <chrono>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "strz/extension.hpp"
#include "strz/gridio.hpp"
#include "strz/report.hpp"
#include "strz/search.hpp"
#include "strz/theorem1.hpp"
#include "strz/verify.hpp"
#include "strz/version.hpp"

namespace {

using strz::Complex;

Complex parse_complex(const std::string& in) {
    std::string s;
    for (char c : in)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw std::invalid_argument("empty complex literal");
    const bool has_i = s.back() == 'i' || s.back() == 'j';
    if (!has_i) return Complex(std::stod(s), 0.0);
    s.pop_back();
    // find the sign separating real and imaginary parts (not an exponent sign)
    std::size_t split = std::string::npos;
    for (std::size_t p = s.size(); p-- > 1;) {
        if ((s[p] == '+' || s[p] == '-') && s[p - 1] != 'e' && s[p - 1] != 'E') {
            split = p;
            break;
        }
    }
    if (split == std::string::npos) {
        if (s.empty() || s == "+") return Complex(0.0, 1.0);
        if (s == "-") return Complex(0.0, -1.0);
        return Complex(0.0, std::stod(s));
    }
    const std::string re = s.substr(0, split);
    std::string im = s.substr(split);
    if (im == "+") im = "1";
    if (im == "-") im = "-1";
    return Complex(std::stod(re), std::stod(im));
}

std::vector<Complex> parse_complex_list(const std::string& body) {
    std::vector<Complex> out;
    std::stringstream ss(body);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(parse_complex(tok));
    return out;
}

std::vector<double> parse_double_list(const std::string& body) {
    std::vector<double> out;
    std::stringstream ss(body);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stod(tok));
    return out;
}

struct InputSpec {
    enum class Kind { none, gaussian, grid, exponential } kind = Kind::none;
    std::vector<Complex> params;  // A, b_1..b_n, C
    std::string path;
};

InputSpec parse_input(const std::string& s) {
    InputSpec spec;
    if (s.empty()) return spec;
    const auto colon = s.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("input spec must look like kind:params");
    const std::string kind = s.substr(0, colon);
    const std::string body = s.substr(colon + 1);
    if (kind == "gaussian") {
        spec.kind = InputSpec::Kind::gaussian;
        spec.params = parse_complex_list(body);
    } else if (kind == "exponential") {
        spec.kind = InputSpec::Kind::exponential;
        spec.params = parse_complex_list(body);
    } else if (kind == "grid") {
        spec.kind = InputSpec::Kind::grid;
        spec.path = body;
    } else {
        throw std::invalid_argument("unknown input kind: " + kind);
    }
    return spec;
}

strz::GaussianProfile gaussian_from_params(int n, const std::vector<Complex>& p) {
    if (static_cast<int>(p.size()) != n + 2)
        throw std::invalid_argument("gaussian input needs A, " + std::to_string(n) +
                                    " shift components and C (" + std::to_string(n + 2) +
                                    " comma-separated values)");
    std::vector<Complex> b(p.begin() + 1, p.end() - 1);
    return strz::GaussianProfile(n, p.front(), std::move(b), p.back());
}

struct ReportFields {
    std::optional<double> value, stderr_of_value, lhs, rhs, ratio, expected, tolerance;
    std::string verdict = "pass";
};

void fill_from_ratio_report(ReportFields& f, const strz::RatioReport& rep) {
    f.lhs = rep.lhs;
    f.rhs = rep.rhs;
    f.ratio = rep.ratio;
    f.value = rep.ratio;
    f.stderr_of_value = rep.ratio_err();
    f.expected = rep.expected;
    f.tolerance = rep.tolerance;
    f.verdict = strz::to_string(rep.verdict);
}

int emit(const std::string& json, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << json << "\n";
    } else {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "error: cannot open output path " << out_path << "\n";
            return 2;
        }
        out << json << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sharp Strichartz / restriction-extension verification laboratory"};
    app.set_config("--config", "", "plain key=value config file (flags win)");

    std::string command;
    int n = 1, k = 0;
    double q = 0.0, r = 0.0;
    std::string case_id, input_str, out_path, profile = "quick";
    std::string direction = "h2", epsilons_str = "-0.4,-0.2,0,0.2,0.4", coeffs_str;
    std::uint64_t samples = 1000000, seed = 1, chunk_size = 65536;
    int workers = 1, budget = 500;
    double tolerance = -1.0;  // per-command default when negative

    app.add_option("--n", n, "spatial dimension");
    app.add_option("--k", k, "integer power for the main-inequality cases (q = r = 2k)");
    app.add_option("--q", q, "time exponent");
    app.add_option("--r", r, "space exponent");
    app.add_option("--case", case_id, "case id from the constants table or theorem1_n<n>_k<k>");
    app.add_option("--input", input_str,
                   "input: gaussian:A,b...,C | exponential:A,b...,C | grid:path");
    app.add_option("--samples", samples, "Monte Carlo sample budget");
    app.add_option("--seed", seed, "Monte Carlo seed");
    app.add_option("--chunk-size", chunk_size, "Monte Carlo substream chunk size");
    app.add_option("--workers", workers, "worker threads (does not change results)");
    app.add_option("--tolerance", tolerance, "verdict tolerance override");
    app.add_option("--out", out_path, "write the JSON report here instead of stdout");
    app.add_option("--profile", profile, "verify-all profile: quick | full");
    app.add_option("--direction", direction,
                   "scan direction: h<m> | modulation | translation | scaling | zero");
    app.add_option("--epsilons", epsilons_str, "comma-separated scan offsets");
    app.add_option("--coeffs", coeffs_str, "initial hermite coefficients for optimize");
    app.add_option("--budget", budget, "objective evaluation budget for optimize");

    const std::vector<std::string> commands = {"constants", "theorem1", "strichartz",
                                               "sobolev",   "cone",     "paraboloid",
                                               "optimize",  "scan",     "verify-all"};
    for (const auto& name : commands) {
        auto* sub = app.add_subcommand(name);
        sub->fallthrough();
    }
    app.require_subcommand(0, 1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const auto subs = app.get_subcommands();
    if (subs.empty()) {
        std::cerr << "error: expected a command (constants, theorem1, strichartz, sobolev, "
                     "cone, paraboloid, optimize, scan, verify-all)\n";
        return 2;
    }
    command = subs.front()->get_name();

    const auto t0 = std::chrono::steady_clock::now();
    ReportFields fields;
    strz::Json extra = strz::Json::object();
    bool has_extra = false;
    int exit_code = 0;

    try {
        strz::MonteCarloSpec mc;
        mc.samples = samples;
        mc.seed = seed;
        mc.chunk_size = chunk_size;
        mc.workers = workers;
        const InputSpec input = parse_input(input_str);

        if (command == "constants") {
            strz::Json cases = strz::Json::array();
            for (const auto& c : strz::corollary_cases()) {
                strz::Json row = strz::Json::object();
                row.field("case", c.id).field("value", c.constant);
                cases.item(row);
            }
            extra.raw_field("cases", cases.str());
            has_extra = true;
            fields.verdict = "pass";
        } else if (command == "theorem1") {
            if (k < 2 || (n == 1 && k == 2))
                throw std::invalid_argument(
                    "theorem1 requires k >= 2 with (n,k) != (1,2); the case (1,2) is excluded");
            const strz::StrichartzCase cas = strz::StrichartzCase::theorem1(n, k);
            strz::RatioReport rep;
            const double tol = tolerance > 0 ? tolerance : 1e-8;
            if (input.kind == InputSpec::Kind::gaussian) {
                rep = strz::theorem1_report(gaussian_from_params(n, input.params), cas, mc, {},
                                            tol);
            } else if (input.kind == InputSpec::Kind::grid) {
                const strz::GridFunction f = strz::read_grid(input.path);
                if (f.n != n) throw std::invalid_argument("grid dimension mismatch");
                rep = strz::theorem1_report(f, cas, mc, {}, strz::EqualityMode::expect_equality,
                                            tolerance > 0 ? tolerance : 1e-2);
            } else {
                throw std::invalid_argument("theorem1 needs --input gaussian:... or grid:path");
            }
            fill_from_ratio_report(fields, rep);
            exit_code = rep.verdict == strz::Verdict::pass ? 0 : 1;
        } else if (command == "strichartz") {
            if (input.kind != InputSpec::Kind::gaussian)
                throw std::invalid_argument("strichartz needs --input gaussian:...");
            const strz::GaussianProfile g = gaussian_from_params(n, input.params);
            std::string matched;
            for (const auto& c : strz::corollary_cases())
                if (c.kind == strz::CaseKind::strichartz && c.n == n && c.q == q && c.r == r)
                    matched = c.id;
            if (!matched.empty()) {
                strz::RatioReport rep = strz::classical_strichartz_report(
                    g, matched, {}, tolerance > 0 ? tolerance : 1e-8);
                fill_from_ratio_report(fields, rep);
                exit_code = rep.verdict == strz::Verdict::pass ? 0 : 1;
            } else {
                const strz::FreqProduct fp = strz::FreqProduct::from_space_gaussian(g);
                const strz::NormResult nr = strz::strichartz_norm(fp, q, r);
                fields.value = nr.value;
                fields.stderr_of_value = nr.error;
                fields.lhs = nr.value;
                fields.rhs = fp.l2_norm();
                fields.ratio = nr.value / fp.l2_norm();
                fields.verdict = "indeterminate";  // no tabulated sharp constant
                exit_code = 0;
            }
        } else if (command == "sobolev") {
            if (input.kind != InputSpec::Kind::gaussian)
                throw std::invalid_argument("sobolev needs --input gaussian:...");
            const strz::CorollaryCase& c = strz::corollary_case(case_id);
            strz::RatioReport rep = strz::sobolev_strichartz_report(
                gaussian_from_params(c.n, input.params), case_id, {},
                tolerance > 0 ? tolerance : 1e-6);
            fill_from_ratio_report(fields, rep);
            exit_code = rep.verdict == strz::Verdict::pass ? 0 : 1;
        } else if (command == "paraboloid" || command == "cone") {
            std::string id = case_id;
            if (id.empty()) {
                for (const auto& c : strz::corollary_cases()) {
                    const bool kind_ok = (command == "paraboloid" &&
                                          c.kind == strz::CaseKind::paraboloid) ||
                                         (command == "cone" && c.kind == strz::CaseKind::cone);
                    if (kind_ok && c.n == n && (q == 0.0 || c.q == q)) id = c.id;
                }
                if (id.empty()) throw std::invalid_argument("no matching extension case");
            }
            const strz::SurfaceKind kind = command == "paraboloid" ? strz::SurfaceKind::paraboloid
                                                                   : strz::SurfaceKind::cone;
            const strz::CorollaryCase& c = strz::corollary_case(id);
            strz::SurfaceFunction sf;
            bool wrong_profile = false;
            if (input.kind == InputSpec::Kind::exponential ||
                (input.kind == InputSpec::Kind::gaussian && kind == strz::SurfaceKind::paraboloid)) {
                const strz::GaussianProfile p = gaussian_from_params(c.n, input.params);
                sf = strz::SurfaceFunction::exp_family(kind, c.n, p.A, p.b, p.C);
            } else if (input.kind == InputSpec::Kind::gaussian) {
                // wrong-decay profile e^{A |w|^2} on the cone (radial, b = 0)
                const strz::GaussianProfile p = gaussian_from_params(c.n, input.params);
                for (const auto& z : p.b)
                    if (std::abs(z) != 0.0)
                        throw std::invalid_argument("cone gaussian profile must have b = 0");
                sf = strz::SurfaceFunction::radial_gaussian(kind, c.n, -p.A.real());
                wrong_profile = true;
            } else {
                throw std::invalid_argument(command + " needs --input exponential:A,b,C");
            }
            strz::ExtensionReportOptions opt;
            if (tolerance > 0) opt.tolerance = tolerance;
            strz::RatioReport rep = strz::extension_ratio_report(sf, id, opt);
            if (wrong_profile) rep.verdict = strz::strictness_verdict(rep);
            fill_from_ratio_report(fields, rep);
            exit_code = rep.verdict == strz::Verdict::pass ? 0 : 1;
        } else if (command == "optimize") {
            if (case_id.empty()) case_id = "theorem1_n1_k3";
            strz::TrialFunction init(strz::GaussianProfile::standard(
                strz::Functional::parse(case_id).dim()));
            if (input.kind == InputSpec::Kind::gaussian)
                init.base = gaussian_from_params(init.base.n, input.params);
            if (!coeffs_str.empty())
                init.hermite_coeffs = parse_complex_list(coeffs_str);
            else
                init.hermite_coeffs.assign(6, Complex(0.0, 0.0));  // default truncation m = 6
            strz::OptimizeResult res = strz::optimize(case_id, init, budget, {}, mc);
            fields.value = res.best_ratio;
            fields.ratio = res.best_ratio;
            fields.expected = 1.0;
            fields.tolerance = tolerance > 0 ? tolerance : 1e-3;
            const bool ok = std::fabs(res.best_ratio - 1.0) <= *fields.tolerance;
            fields.verdict = ok ? "pass" : "fail";
            strz::Json trace = strz::Json::array();
            for (const auto& [e, ratio] : res.trace) {
                strz::Json row = strz::Json::object();
                row.field("evaluation", e).field("best_ratio", ratio);
                trace.item(row);
            }
            extra.raw_field("trace", trace.str());
            extra.field("evaluations", res.evaluations);
            extra.field("budget_exhausted", res.budget_exhausted);
            extra.field("final_coeff_norm", res.best.coeff_norm());
            has_extra = true;
            exit_code = ok ? 0 : 1;
        } else if (command == "scan") {
            if (case_id.empty()) case_id = "theorem1_n1_k3";
            const std::vector<double> eps = parse_double_list(epsilons_str);
            auto scan = strz::perturbation_scan(case_id, direction, eps, mc);
            strz::Json points = strz::Json::array();
            double max_ratio = 0.0;
            for (const auto& [e, ratio] : scan) {
                strz::Json row = strz::Json::object();
                row.field("epsilon", e).field("ratio", ratio);
                points.item(row);
                max_ratio = std::max(max_ratio, ratio);
            }
            extra.raw_field("points", points.str());
            extra.field("note",
                        "scan data is numerical evidence for the equality characterization, "
                        "not a proof");
            has_extra = true;
            fields.value = max_ratio;
            fields.tolerance = tolerance > 0 ? tolerance : 1e-6;
            fields.verdict = max_ratio <= 1.0 + *fields.tolerance ? "pass" : "fail";
            exit_code = fields.verdict == "pass" ? 0 : 1;
        } else if (command == "verify-all") {
            strz::verify::Profile prof = strz::verify::Profile::quick;
            if (profile == "full")
                prof = strz::verify::Profile::full;
            else if (profile != "quick")
                throw std::invalid_argument("profile must be quick or full");
            int failures = 0;
            strz::Json checks = strz::Json::array();
            auto progress = [&](const strz::verify::CheckResult& res) {
                std::fprintf(stderr, "[%s] %-36s %s [%.2fs]\n", res.pass ? "PASS" : "FAIL",
                             res.id.c_str(), res.detail.c_str(), res.seconds);
                if (!res.pass) ++failures;
                strz::Json row = strz::Json::object();
                row.field("id", res.id)
                    .field("pass", res.pass)
                    .field("detail", res.detail)
                    .field("seconds", res.seconds);
                checks.item(row);
            };
            strz::verify::run_all(prof, progress);
            extra.raw_field("checks", checks.str());
            extra.field("failures", failures);
            has_extra = true;
            fields.verdict = failures == 0 ? "pass" : "fail";
            exit_code = failures == 0 ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    const double wall =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    strz::Json config = strz::Json::object();
    config.field("n", n).field("k", k).field("q", q).field("r", r);
    config.field("case", case_id).field("input", input_str);
    config.field("samples", samples).field("seed", seed).field("chunk_size", chunk_size);
    config.field("workers", workers);
    if (tolerance > 0)
        config.field("tolerance", tolerance);
    else
        config.field_null("tolerance");
    config.field("profile", profile);

    strz::Json doc = strz::Json::object();
    doc.field("command", command);
    doc.field("config_echo", config);
    auto put = [&doc](const char* key, const std::optional<double>& v) {
        if (v)
            doc.field(key, *v);
        else
            doc.field_null(key);
    };
    put("value", fields.value);
    put("stderr", fields.stderr_of_value);
    put("lhs", fields.lhs);
    put("rhs", fields.rhs);
    put("ratio", fields.ratio);
    put("expected", fields.expected);
    put("tolerance", fields.tolerance);
    doc.field("verdict", fields.verdict);
    if (has_extra) doc.raw_field("data", extra.str());
    doc.field("wall_time_seconds", wall);
    doc.field("artifact_version", strz::artifact_version);

    const int emit_code = emit(doc.str(), out_path);
    return emit_code != 0 ? emit_code : exit_code;
}
