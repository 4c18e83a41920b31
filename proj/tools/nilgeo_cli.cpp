#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "nilgeo/errors.hpp"
#include "nilgeo/json_io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;
constexpr int kExitNoConvergence = 4;

using nilgeo::Json;

void write_output(const Json& j, const std::string& out_path) {
    std::string text = j.dump(2);
    text.push_back('\n');
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw std::ios_base::failure("cannot open output file: " + out_path);
    f << text;
    if (!f) throw std::ios_base::failure("write failed: " + out_path);
}

Json read_json_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::ios_base::failure("cannot open input file: " + path);
    Json doc;
    try {
        f >> doc;
    } catch (const std::exception& e) {
        throw nilgeo::ParseError(std::string("invalid JSON: ") + e.what());
    }
    return doc;
}

struct FixArg {
    std::size_t r, c;
    double value;
    bool forced_zero;  // the "r,c=0!" spelling
};

FixArg parse_fix(const std::string& s) {
    std::size_t eq = s.find('=');
    std::size_t comma = s.find(',');
    if (eq == std::string::npos || comma == std::string::npos || comma > eq)
        throw nilgeo::ParseError("--fix expects \"r,c=v\" or \"r,c=0!\", got \"" + s + "\"");
    int r = std::stoi(s.substr(0, comma));
    int c = std::stoi(s.substr(comma + 1, eq - comma - 1));
    std::string rhs = s.substr(eq + 1);
    bool forced_zero = rhs == "0!";
    double v = forced_zero ? 0.0 : std::stod(rhs);
    if (r < 1 || c < 1) throw nilgeo::ParseError("--fix indices are 1-based");
    return {static_cast<std::size_t>(r - 1), static_cast<std::size_t>(c - 1), v, forced_zero};
}

std::pair<std::size_t, std::size_t> parse_cell(const std::string& s) {
    std::size_t comma = s.find(',');
    if (comma == std::string::npos)
        throw nilgeo::ParseError("--zero expects \"r,c\", got \"" + s + "\"");
    int r = std::stoi(s.substr(0, comma));
    int c = std::stoi(s.substr(comma + 1));
    if (r < 1 || c < 1) throw nilgeo::ParseError("--zero indices are 1-based");
    return {static_cast<std::size_t>(r - 1), static_cast<std::size_t>(c - 1)};
}

nilgeo::ParamAssignment parse_param_args(const std::vector<std::string>& args) {
    nilgeo::ParamAssignment p;
    for (const auto& s : args) {
        std::size_t eq = s.find('=');
        if (eq == std::string::npos)
            throw nilgeo::ParseError("--param expects \"name=p/q\", got \"" + s + "\"");
        p[s.substr(0, eq)] = nilgeo::Rational::parse(s.substr(eq + 1));
    }
    return p;
}

int cmd_list() {
    for (const auto& e : nilgeo::catalog_entries())
        std::cout << e.id << "  -  " << e.summary << "\n";
    return kExitOk;
}

int cmd_show(const std::string& id, bool as_json) {
    const auto& e = nilgeo::catalog_entry(id);
    if (as_json) {
        write_output(nilgeo::entry_to_json(e), "");
        return kExitOk;
    }
    std::cout << e.id << ": " << e.summary << "\n\nbrackets:\n";
    for (const auto& b : e.brackets) {
        std::cout << "  [e" << b.i << ", e" << b.j << "] =";
        for (const auto& [k, v] : b.coeffs) {
            if (v == nilgeo::Rational(1))
                std::cout << " e" << k;
            else
                std::cout << " " << v.str() << " e" << k;
        }
        std::cout << "\n";
    }
    std::cout << "\nomega: " << e.omega_display << "\n\nparameters:\n";
    for (const auto& s : e.params)
        std::cout << "  " << s.name << ": " << nilgeo::constraint_display(s) << "\n";
    auto sample = nilgeo::sample_params(e.id, 1, 42).front();
    auto inst = nilgeo::instantiate(e, sample);
    std::cout << "\nexample instance (";
    bool first = true;
    for (const auto& [k, v] : inst.params) {
        std::cout << (first ? "" : ", ") << k << " = " << v.str();
        first = false;
    }
    std::cout << ")\nJ =\n";
    for (std::size_t r = 0; r < e.dim; ++r) {
        std::cout << "  [";
        for (std::size_t c = 0; c < e.dim; ++c)
            std::cout << (c ? ", " : "") << inst.acs.matrix()(r, c).str();
        std::cout << "]\n";
    }
    if (!e.invariant_chain.empty()) {
        std::cout << "\ninvariant ideals:";
        for (const auto& idx : e.invariant_chain) {
            std::cout << " span{";
            for (std::size_t i = 0; i < idx.size(); ++i)
                std::cout << (i ? "," : "") << "e" << idx[i];
            std::cout << "}";
        }
        std::cout << "\n";
    }
    if (!e.notes.empty()) std::cout << "\nnote: " << e.notes << "\n";
    return kExitOk;
}

int cmd_verify(const std::string& group, std::size_t samples, std::uint64_t seed,
               const std::string& out) {
    nilgeo::RunResult run;
    if (group.empty()) {
        run = nilgeo::run_all(samples, seed);
    } else {
        run.reports = nilgeo::run_suite(group, samples, seed);
        run.summary = nilgeo::summarize(run.reports, 1);
    }
    write_output(nilgeo::run_result_to_json(run, samples, seed), out);
    std::cerr << "checks: " << run.summary.passed << " passed, " << run.summary.failed
              << " failed, " << run.summary.inconclusive << " inconclusive\n";
    return run.summary.failed == 0 ? kExitOk : 1;
}

int cmd_compute(const std::string& input, const std::string& out) {
    Json doc = read_json_file(input);
    nilgeo::InputDocument parsed = nilgeo::parse_input_document(doc);
    if (!parsed.acs) throw nilgeo::ParseError("compute requires a \"J\" fragment");
    nilgeo::CurvatureReport rep =
        nilgeo::compute_report(parsed.algebra, parsed.omega, *parsed.acs);
    write_output(nilgeo::curvature_report_to_json(rep), out);
    return kExitOk;
}

int cmd_solve(const std::string& group, const std::string& input,
              const std::vector<std::string>& fixes, const std::vector<std::string>& zeros,
              const std::vector<std::string>& param_args, std::uint64_t seed, double tol,
              bool probe, const std::string& out) {
    using nilgeo::PatternSpec;

    std::map<std::pair<std::size_t, std::size_t>, std::vector<double>> fix_map;
    std::vector<std::pair<std::size_t, std::size_t>> forced_zero;
    for (const auto& s : fixes) {
        FixArg f = parse_fix(s);
        if (f.forced_zero)
            forced_zero.push_back({f.r, f.c});
        else
            fix_map[{f.r, f.c}].push_back(f.value);
    }

    if (probe) {
        if (group.empty())
            throw nilgeo::ParseError("--probe requires --group (a catalog structure)");
        for (const auto& [r, c] : forced_zero) fix_map[{r, c}].push_back(0.0);
        const auto& e = nilgeo::catalog_entry(group);
        nilgeo::ParamAssignment params = parse_param_args(param_args);
        if (params.empty()) params = nilgeo::sample_params(group, 1, 42).front();
        // assignments: cartesian product over each varied cell's value list
        std::vector<std::map<std::pair<std::size_t, std::size_t>, double>> assigns{{}};
        for (const auto& [cell, values] : fix_map) {
            std::vector<std::map<std::pair<std::size_t, std::size_t>, double>> next;
            for (const auto& a : assigns)
                for (double v : values) {
                    auto copy = a;
                    copy[cell] = v;
                    next.push_back(copy);
                }
            assigns = next;
        }
        if (assigns.size() < 2)
            throw nilgeo::ParseError("--probe needs at least two assignments (repeat --fix)");
        auto rep = nilgeo::param_independence_probe(e, params, assigns, tol);
        write_output(nilgeo::probe_report_to_json(rep, tol), out);
        return rep.all_feasible ? kExitOk : kExitNoConvergence;
    }

    Eigen::MatrixXd omega;
    PatternSpec pattern(6);
    std::optional<Eigen::MatrixXd> warm;
    if (!group.empty()) {
        const auto& e = nilgeo::catalog_entry(group);
        nilgeo::ParamAssignment params = parse_param_args(param_args);
        if (params.empty()) params = nilgeo::sample_params(group, 1, 42).front();
        auto inst = nilgeo::instantiate(e, params);
        omega = nilgeo::to_float(inst.omega.matrix());
        pattern = PatternSpec::for_entry(e, params);
        warm = nilgeo::to_float(inst.acs.matrix());
    } else if (!input.empty()) {
        Json doc = read_json_file(input);
        nilgeo::InputDocument parsed = nilgeo::parse_input_document(doc);
        omega = nilgeo::to_float(parsed.omega.matrix());
        pattern = PatternSpec(parsed.omega.dim());
        if (parsed.acs) warm = nilgeo::to_float(parsed.acs->matrix());
    } else {
        throw nilgeo::ParseError("solve requires --group or --input");
    }
    for (const auto& s : zeros) {
        auto [r, c] = parse_cell(s);
        pattern.set_zero(r, c);
    }
    for (const auto& [r, c] : forced_zero) pattern.set_zero(r, c);
    for (const auto& [cell, values] : fix_map) {
        if (values.size() != 1)
            throw nilgeo::ParseError("repeated --fix for one cell is only valid with --probe");
        pattern.set_fixed(cell.first, cell.second, values[0]);
    }
    nilgeo::SolveOptions opts;
    opts.seed = seed;
    opts.tolerance = tol;
    opts.initial = warm;
    nilgeo::SolveResult sr = nilgeo::solve_compatible_acs(omega, pattern, opts);
    write_output(nilgeo::solve_result_to_json(sr), out);
    if (!sr.converged) {
        std::cerr << "no convergence: best residual " << nilgeo::float_str(sr.residual_norm)
                  << " after " << sr.restarts_used + 1 << " start(s)\n";
        return kExitNoConvergence;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact curvature engine for six-dimensional nilpotent symplectic Lie groups"};
    app.require_subcommand(1);

    auto* list = app.add_subcommand("list", "list catalog structures");

    auto* show = app.add_subcommand("show", "display one catalog structure");
    std::string show_id;
    bool show_json = false;
    show->add_option("id", show_id, "structure id, e.g. G5.2")->required();
    show->add_flag("--json", show_json, "machine-readable output");

    auto* verify = app.add_subcommand("verify", "run the verification suite");
    std::string verify_group, verify_out;
    std::size_t samples = 20;
    std::uint64_t verify_seed = 42;
    verify->add_option("--group", verify_group, "restrict to one structure");
    verify->add_option("--samples", samples, "samples per structure (default 20)");
    verify->add_option("--seed", verify_seed, "sampling seed (default 42)");
    verify->add_option("--out", verify_out, "write the JSON report here");

    auto* compute = app.add_subcommand("compute", "curvature report for a user structure");
    std::string compute_in, compute_out;
    compute->add_option("--input", compute_in, "input JSON document")->required();
    compute->add_option("--out", compute_out, "write the report here");

    auto* solve = app.add_subcommand("solve", "find a compatible almost complex structure");
    std::string solve_group, solve_in, solve_out;
    std::vector<std::string> fixes, zeros, param_args;
    std::uint64_t solve_seed = 0;
    double tol = 1e-10;
    bool probe = false;
    solve->add_option("--group", solve_group, "catalog structure id");
    solve->add_option("--input", solve_in, "input JSON document with omega");
    solve->add_option("--fix", fixes, "fix entry: \"r,c=v\" (repeatable)");
    solve->add_option("--zero", zeros, "force entry to zero: \"r,c\" (repeatable)");
    solve->add_option("--param", param_args, "structure parameter: \"name=p/q\" (repeatable)");
    solve->add_option("--seed", solve_seed, "restart seed");
    solve->add_option("--tol", tol, "residual tolerance (default 1e-10)");
    solve->add_flag("--probe", probe, "parameter-independence probe over repeated --fix");
    solve->add_option("--out", solve_out, "write the JSON result here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? kExitUsage : kExitOk;
    }

    try {
        if (list->parsed()) return cmd_list();
        if (show->parsed()) return cmd_show(show_id, show_json);
        if (verify->parsed()) {
            if (samples == 0) {
                std::cerr << "error: --samples must be at least 1\n";
                return kExitUsage;
            }
            return cmd_verify(verify_group, samples, verify_seed, verify_out);
        }
        if (compute->parsed()) return cmd_compute(compute_in, compute_out);
        if (solve->parsed())
            return cmd_solve(solve_group, solve_in, fixes, zeros, param_args, solve_seed,
                             tol, probe, solve_out);
    } catch (const std::ios_base::failure& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return kExitIo;
    } catch (const nilgeo::ValidationError& e) {
        std::cerr << "validation error [" << e.invariant() << "]: " << e.what() << "\n";
        return kExitUsage;
    } catch (const nilgeo::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
