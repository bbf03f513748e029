// Command-line front end: generate coefficient triangles, evaluate the
// sequences through any engine, verify the defining identities, run slice
// convergence studies, and self-test the catalog.
//
// Exit codes: 0 success / all checks pass, 1 verification or computation
// failure, 2 usage or parse error.

#include "umbra/umbra.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <limits>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace {

using nlohmann::json;

enum class output_format { table, json_fmt, csv };

output_format parse_format(const std::string& name) {
    if (name == "table")
        return output_format::table;
    if (name == "json")
        return output_format::json_fmt;
    if (name == "csv")
        return output_format::csv;
    throw std::invalid_argument("unknown format '" + name + "' (expected json, csv or table)");
}

struct source_options {
    std::string catalog;
    std::vector<std::string> params;
    std::string cumulants;
    std::string file;
};

struct resolved_source {
    std::optional<umbra::catalog_entry> entry;
    std::optional<std::string> name;
    std::optional<umbra::cumulant_seq> inline_cumulants;
    std::optional<umbra::triangle> tri;

    umbra::cumulant_seq cumulants(int upto) const {
        if (entry)
            return entry->cumulants(upto);
        if (inline_cumulants)
            return *inline_cumulants;
        if (tri)
            return umbra::cumulants_of(*tri);
        throw std::invalid_argument("no cumulant source resolved");
    }
};

void add_source_flags(CLI::App* cmd, source_options& src, bool with_file = true) {
    cmd->add_option("--catalog", src.catalog, "catalog family name");
    cmd->add_option("--param", src.params, "family parameter as key=value (abel: a=...)");
    if (with_file) {
        cmd->add_option("--cumulants", src.cumulants,
                        "inline comma-separated cumulants c_1,c_2,...");
        cmd->add_option("--file", src.file, "JSON input file");
    }
}

std::optional<umbra::rational> parse_family_param(const std::vector<std::string>& params) {
    std::optional<umbra::rational> a;
    for (const std::string& kv : params) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("--param expects key=value, got '" + kv + "'");
        const std::string key = kv.substr(0, eq);
        if (key != "a")
            throw std::invalid_argument("unknown family parameter '" + key + "'");
        a = umbra::rational::parse(kv.substr(eq + 1));
    }
    return a;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open file '" + path + "'");
    return json::parse(in);
}

resolved_source resolve_source(const source_options& src, bool allow_triangle) {
    const int provided = (src.catalog.empty() ? 0 : 1) + (src.cumulants.empty() ? 0 : 1) +
                         (src.file.empty() ? 0 : 1);
    if (provided != 1)
        throw std::invalid_argument(
            "exactly one of --catalog, --cumulants, --file must be given");

    resolved_source out;
    if (!src.catalog.empty()) {
        out.entry = umbra::catalog_get(src.catalog, parse_family_param(src.params));
        out.name = src.catalog;
        return out;
    }
    if (!src.params.empty())
        throw std::invalid_argument("--param only applies to catalog sources");
    if (!src.cumulants.empty()) {
        out.inline_cumulants = umbra::parse_cumulant_list(src.cumulants);
        return out;
    }
    const json j = load_json_file(src.file);
    if (j.is_object() && j.contains("rows")) {
        if (!allow_triangle)
            throw std::invalid_argument("'" + src.file +
                                        "' holds a triangle; this command needs cumulants");
        out.tri = umbra::triangle_from_json(j);
    } else {
        out.inline_cumulants = umbra::cumulants_from_json(j);
    }
    if (j.is_object() && j.contains("name") && j["name"].is_string())
        out.name = j["name"].get<std::string>();
    return out;
}

bool looks_decimal(const std::string& s) {
    return s.find_first_of(".eE") != std::string::npos;
}

double parse_decimal(const std::string& s) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("invalid numeric value '" + s + "'");
    }
    if (pos != s.size())
        throw std::invalid_argument("invalid numeric value '" + s + "'");
    return v;
}

umbra::rational x_as_rational(const std::string& s, const std::string& engine) {
    if (looks_decimal(s))
        throw std::invalid_argument("engine '" + engine +
                                    "' is exact and needs a rational --x (got '" + s + "')");
    return umbra::rational::parse(s);
}

double x_as_double(const std::string& s) {
    return looks_decimal(s) ? parse_decimal(s) : umbra::rational::parse(s).to_double();
}

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

std::string fmt_slope(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

std::string fmt_dev(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

// ---------------------------------------------------------------- gen ----

int run_gen(const resolved_source& src, int n_max, output_format fmt) {
    const umbra::cumulant_seq c = src.cumulants(n_max);
    const umbra::triangle t = umbra::from_cumulants(c, n_max);
    if (t.c1_zero_warning())
        std::cerr << "warning: c_1 = 0, so deg p_n < n; the identities still hold\n";

    switch (fmt) {
    case output_format::json_fmt: {
        json j = umbra::triangle_to_json(t);
        if (src.name)
            j["name"] = *src.name;
        std::cout << j.dump(2) << "\n";
        break;
    }
    case output_format::csv:
        std::cout << umbra::triangle_to_csv(t);
        break;
    case output_format::table:
        for (int n = 0; n <= t.n_max(); ++n)
            std::cout << "p_" << n << "(x) = "
                      << umbra::poly_to_string(umbra::poly(t.row(n))) << "\n";
        break;
    }
    return 0;
}

// --------------------------------------------------------------- eval ----

void emit_fields(const std::vector<std::pair<std::string, json>>& fields,
                 output_format fmt) {
    switch (fmt) {
    case output_format::json_fmt: {
        json j;
        for (const auto& [k, v] : fields)
            j[k] = v;
        std::cout << j.dump(2) << "\n";
        break;
    }
    case output_format::csv: {
        std::string head, row;
        for (const auto& [k, v] : fields) {
            if (!head.empty()) {
                head += ',';
                row += ',';
            }
            head += k;
            row += v.is_string() ? v.get<std::string>() : v.dump();
        }
        std::cout << head << "\n" << row << "\n";
        break;
    }
    case output_format::table:
        for (const auto& [k, v] : fields)
            std::cout << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump())
                      << "\n";
        break;
    }
}

int run_eval(const resolved_source& src, int n, const std::string& x_text,
             const std::string& engine, const std::vector<unsigned long>& slice_list,
             std::optional<int> steps, double tol, std::uint64_t quad_points,
             output_format fmt) {
    const umbra::cumulant_seq c = src.cumulants(n);
    std::vector<std::pair<std::string, json>> fields;
    fields.emplace_back("engine", engine);
    fields.emplace_back("n", n);

    if (engine == "exact" || engine == "genfun") {
        const umbra::rational x = x_as_rational(x_text, engine);
        const umbra::triangle t = engine == "exact"
                                      ? umbra::from_cumulants(c, n)
                                      : umbra::from_generating_series(c, n);
        fields.emplace_back("x", x.str());
        fields.emplace_back("value", t.eval(n, x).str());
    } else if (engine == "pathexp") {
        const umbra::rational x = x_as_rational(x_text, engine);
        fields.emplace_back("x", x.str());
        fields.emplace_back("value", umbra::pathint_exp(c, n, x).str());
    } else if (engine == "pathapprox") {
        if (slice_list.size() != 1)
            throw std::invalid_argument("engine 'pathapprox' needs --N with exactly one value");
        if (slice_list[0] > static_cast<unsigned long>(std::numeric_limits<int>::max()))
            throw std::invalid_argument("--N is too large");
        const umbra::rational x = x_as_rational(x_text, engine);
        fields.emplace_back("x", x.str());
        fields.emplace_back("N", static_cast<std::uint64_t>(slice_list[0]));
        fields.emplace_back(
            "value", umbra::pathint_approx(c, n, x, static_cast<int>(slice_list[0])).str());
    } else if (engine == "evolve") {
        if (steps) {
            const double x = x_as_double(x_text);
            const std::vector<double> q = umbra::evolve_numeric(c, n, x, *steps);
            fields.emplace_back("x", x);
            fields.emplace_back("steps", *steps);
            fields.emplace_back("value",
                                q[static_cast<std::size_t>(n)] *
                                    umbra::factorial_as_double(n));
        } else {
            const umbra::rational x = x_as_rational(x_text, engine);
            const umbra::wave_vector w = umbra::evolve_exact(c, n, x);
            fields.emplace_back("x", x.str());
            fields.emplace_back("value",
                                (w.values()[static_cast<std::size_t>(n)] *
                                 umbra::rational(umbra::factorial(n)))
                                    .str());
        }
    } else if (engine == "spectral") {
        const double x = x_as_double(x_text);
        umbra::quadrature_config cfg;
        cfg.tol = tol;
        cfg.initial_nodes = quad_points;
        const umbra::spectral_result r = umbra::spectral_eval(c, n, x, cfg);
        fields.emplace_back("x", x);
        fields.emplace_back("value_re", r.value.real());
        fields.emplace_back("value_im", r.value.imag());
        fields.emplace_back("tol", tol);
        fields.emplace_back("nodes", r.nodes);
        fields.emplace_back("doublings", r.doublings);
    } else {
        throw std::invalid_argument(
            "unknown engine '" + engine +
            "' (expected exact|genfun|spectral|pathexp|pathapprox|evolve)");
    }

    emit_fields(fields, fmt);
    return 0;
}

// -------------------------------------------------------------- check ----

struct check_row {
    std::string name;
    bool pass = false;
    std::string note;
};

int run_check(const resolved_source& src, int n_max, bool hamiltonian_from_paper,
              output_format fmt) {
    umbra::triangle t = src.tri ? *src.tri
                                : umbra::from_cumulants(src.cumulants(n_max), n_max);
    const umbra::cumulant_seq c = src.tri ? umbra::cumulants_of(*src.tri)
                                          : src.cumulants(n_max);

    std::vector<check_row> rows;
    {
        bool ok = true;
        for (int n = 0; n <= t.n_max(); ++n)
            if (!(t.eval(n, umbra::rational(0)) == umbra::rational(n == 0 ? 1 : 0)))
                ok = false;
        rows.push_back({"value-at-zero", ok, ""});
    }
    {
        const std::vector<std::pair<umbra::rational, umbra::rational>> points = {
            {umbra::rational(1), umbra::rational(1)},
            {umbra::rational(2), umbra::rational(3)},
            {umbra::rational(-1), umbra::rational(1, 2)},
            {umbra::rational(1, 3), umbra::rational(-2, 5)},
            {umbra::rational(5), umbra::rational(-7, 3)}};
        bool ok = true;
        for (const auto& [x, y] : points)
            if (!umbra::verify_binomial(t, x, y))
                ok = false;
        rows.push_back({"binomial-identity", ok, ""});
    }
    rows.push_back({"triangle-recurrence", umbra::verify_recurrence(t), ""});
    rows.push_back({"schrodinger", umbra::verify_schrodinger(t, c), ""});

    if (hamiltonian_from_paper) {
        if (!src.entry)
            throw std::invalid_argument(
                "--hamiltonian-from-paper needs a --catalog source");
        check_row row{"listed-hamiltonian", true, ""};
        for (int k = 1; k <= t.n_max(); ++k) {
            const umbra::rational from_list =
                umbra::rational(umbra::factorial(k)) * src.entry->listed_hamiltonian(k);
            const umbra::rational from_def = src.entry->cumulant(k);
            if (!(from_list == from_def)) {
                row.pass = false;
                row.note = "listed Hamiltonian yields c_" + std::to_string(k) + " = " +
                           from_list.str() + " but the polynomial definition gives " +
                           from_def.str() + " (sign discrepancy)";
                break;
            }
        }
        rows.push_back(std::move(row));
    }

    bool all = true;
    for (const auto& r : rows)
        all = all && r.pass;

    switch (fmt) {
    case output_format::json_fmt: {
        json checks = json::array();
        for (const auto& r : rows) {
            json jr{{"name", r.name}, {"pass", r.pass}};
            if (!r.note.empty())
                jr["note"] = r.note;
            checks.push_back(std::move(jr));
        }
        std::cout << json{{"checks", std::move(checks)}, {"pass", all}}.dump(2) << "\n";
        break;
    }
    case output_format::csv:
        for (const auto& r : rows)
            std::cout << r.name << "," << (r.pass ? "pass" : "FAIL") << "\n";
        std::cout << "result," << (all ? "pass" : "FAIL") << "\n";
        break;
    case output_format::table:
        for (const auto& r : rows) {
            std::cout << r.name << ": " << (r.pass ? "pass" : "FAIL") << "\n";
            if (!r.note.empty())
                std::cout << "  note: " << r.note << "\n";
        }
        std::cout << "result: " << (all ? "pass" : "FAIL") << "\n";
        break;
    }
    return all ? 0 : 1;
}

// ------------------------------------------------------------ pathint ----

int run_pathint(const resolved_source& src, int n, const std::string& x_text,
                const std::vector<unsigned long>& slice_list, bool enumerated,
                std::uint64_t max_paths, output_format fmt) {
    const umbra::rational x = x_as_rational(x_text, "pathint");
    const umbra::cumulant_seq c = src.cumulants(n);
    const umbra::convergence_report report =
        umbra::convergence_table(c, n, x, slice_list, enumerated, max_paths);
    const std::string slope = fmt_slope(report.slope);

    switch (fmt) {
    case output_format::json_fmt: {
        json points = json::array();
        for (const auto& row : report.rows)
            points.push_back({{"N", row.slices},
                              {"value", row.value.str()},
                              {"error", row.error.str()}});
        std::cout << json{{"n", n},
                          {"x", x.str()},
                          {"reference", report.reference.str()},
                          {"slope", report.slope},
                          {"points", std::move(points)}}
                         .dump(2)
                  << "\n";
        break;
    }
    case output_format::csv:
        std::cout << "N,value,error,slope\n";
        for (const auto& row : report.rows)
            std::cout << row.slices << "," << row.value.str() << "," << row.error.str()
                      << "," << slope << "\n";
        break;
    case output_format::table: {
        std::cout << "reference: " << report.reference.str() << "\n";
        std::cout << "N\tvalue\terror\tslope\n";
        for (const auto& row : report.rows)
            std::cout << row.slices << "\t" << row.value.str() << "\t" << row.error.str()
                      << "\t" << slope << "\n";
        break;
    }
    }
    return 0;
}

// ----------------------------------------------------------- selftest ----

int run_selftest(const source_options& src, int n_max, output_format fmt) {
    if (src.catalog.empty())
        throw std::invalid_argument("selftest needs --catalog");
    const umbra::catalog_entry entry =
        umbra::catalog_get(src.catalog, parse_family_param(src.params));
    const umbra::selftest_report report = umbra::catalog_selftest(entry, n_max);
    const bool all = report.all_engines_pass();

    switch (fmt) {
    case output_format::json_fmt: {
        json engines = json::array();
        for (const auto& line : report.engines)
            engines.push_back({{"engine", line.engine},
                               {"pass", line.pass},
                               {"max_deviation", line.max_deviation}});
        json j{{"family", report.family},
               {"n_max", report.n_max},
               {"engines", std::move(engines)},
               {"listed_hamiltonian_match", report.listed_hamiltonian_match},
               {"pass", all}};
        if (!report.listed_hamiltonian_note.empty())
            j["listed_hamiltonian_note"] = report.listed_hamiltonian_note;
        std::cout << j.dump(2) << "\n";
        break;
    }
    case output_format::csv:
        for (const auto& line : report.engines)
            std::cout << line.engine << "," << (line.pass ? "pass" : "FAIL") << ","
                      << fmt_dev(line.max_deviation) << "\n";
        std::cout << "listed-hamiltonian,"
                  << (report.listed_hamiltonian_match ? "match" : "MISMATCH") << ",\n";
        std::cout << "result," << (all ? "pass" : "FAIL") << ",\n";
        break;
    case output_format::table:
        std::cout << "family: " << report.family << "\n";
        std::cout << "n_max: " << report.n_max << "\n";
        for (const auto& line : report.engines)
            std::cout << line.engine << ": " << (line.pass ? "pass" : "FAIL")
                      << " (max deviation " << fmt_dev(line.max_deviation) << ")\n";
        std::cout << "listed-hamiltonian: "
                  << (report.listed_hamiltonian_match ? "match" : "MISMATCH") << "\n";
        if (!report.listed_hamiltonian_note.empty())
            std::cout << "  note: " << report.listed_hamiltonian_note << "\n";
        std::cout << "result: " << (all ? "pass" : "FAIL") << "\n";
        break;
    }
    return all ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"polynomial sequences of binomial type, from their cumulants"};
    app.set_version_flag("--version", "umbra 0.1.0");
    app.require_subcommand(1);

    source_options gen_src, eval_src, check_src, path_src, self_src;
    int gen_n = 0, eval_n = 0, check_n = 8, path_n = 0, self_n = 8;
    std::string gen_fmt = "table", eval_fmt = "table", check_fmt = "table",
                path_fmt = "table", self_fmt = "table";
    std::string eval_x, path_x, eval_engine;
    std::vector<unsigned long> eval_slices, path_slices{2, 4, 8, 16, 32, 64};
    int eval_steps = 0;
    bool eval_steps_given = false;
    double eval_tol = 1e-10;
    std::uint64_t eval_quad_points = 0;
    bool check_from_paper = false;
    bool path_enumerate = false;
    std::uint64_t path_cap = umbra::default_path_cap;

    CLI::App* gen = app.add_subcommand("gen", "generate a coefficient triangle");
    add_source_flags(gen, gen_src);
    gen->add_option("--n", gen_n, "highest row n_max")->required();
    gen->add_option("--format", gen_fmt, "json|csv|table");

    CLI::App* eval = app.add_subcommand("eval", "evaluate p_n(x) through one engine");
    add_source_flags(eval, eval_src);
    eval->add_option("--n", eval_n, "mode n")->required();
    eval->add_option("--x", eval_x, "evaluation point")->required();
    eval->add_option("--engine", eval_engine,
                     "exact|genfun|spectral|pathexp|pathapprox|evolve")
        ->required();
    eval->add_option("--N", eval_slices, "slice count for pathapprox")->delimiter(',');
    eval->add_option("--steps", eval_steps, "switch evolve to the numeric stepper")
        ->check(CLI::PositiveNumber);
    eval->add_option("--tol", eval_tol, "quadrature tolerance");
    eval->add_option("--quad-points", eval_quad_points, "initial quadrature node count");
    eval->add_option("--format", eval_fmt, "json|csv|table");

    CLI::App* check = app.add_subcommand("check", "verify the defining identities");
    add_source_flags(check, check_src);
    check->add_option("--n", check_n, "n_max for generated sources (default 8)");
    check->add_flag("--hamiltonian-from-paper", check_from_paper,
                    "also compare the catalog's listed Hamiltonian against the closed form");
    check->add_option("--format", check_fmt, "json|csv|table");

    CLI::App* pathint = app.add_subcommand("pathint", "slice-convergence study of the "
                                                      "first-order discretization");
    add_source_flags(pathint, path_src);
    pathint->add_option("--n", path_n, "mode n")->required();
    pathint->add_option("--x", path_x, "evaluation point (rational)")->required();
    pathint->add_option("--N", path_slices, "comma-separated slice counts")->delimiter(',');
    pathint->add_flag("--enumerate", path_enumerate,
                      "use the path-enumeration evaluator instead of polynomial algebra");
    pathint->add_option("--max-paths", path_cap, "path enumeration cap")
        ->envname("UMBRA_MAX_PATHS");
    pathint->add_option("--format", path_fmt, "json|csv|table");

    CLI::App* selftest = app.add_subcommand("selftest", "cross-engine battery for one "
                                                        "catalog family");
    add_source_flags(selftest, self_src, /*with_file=*/false);
    selftest->add_option("--n", self_n, "n_max (default 8)");
    selftest->add_option("--format", self_fmt, "json|csv|table");

    try {
        app.parse(argc, argv);
        eval_steps_given = eval->count("--steps") > 0;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*gen)
            return run_gen(resolve_source(gen_src, false), gen_n, parse_format(gen_fmt));
        if (*eval)
            return run_eval(resolve_source(eval_src, false), eval_n, eval_x, eval_engine,
                            eval_slices,
                            eval_steps_given ? std::optional<int>(eval_steps) : std::nullopt,
                            eval_tol, eval_quad_points, parse_format(eval_fmt));
        if (*check)
            return run_check(resolve_source(check_src, true), check_n, check_from_paper,
                             parse_format(check_fmt));
        if (*pathint)
            return run_pathint(resolve_source(path_src, false), path_n, path_x, path_slices,
                               path_enumerate, path_cap, parse_format(path_fmt));
        if (*selftest)
            return run_selftest(self_src, self_n, parse_format(self_fmt));
    } catch (const umbra::path_limit_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const umbra::convergence_error& e) {
        std::cerr << "error: " << e.what() << " (previous " << e.previous << ", last "
                  << e.last << ")\n";
        return 1;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
