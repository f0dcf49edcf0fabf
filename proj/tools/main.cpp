#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hamfact/hamfact.hpp"

namespace {

using namespace hamfact;
using nlohmann::json;

struct CommonArgs {
    std::string input;
    std::vector<std::string> params;
    std::string json_path;
    std::uint64_t seed = 0;
};

struct SimArgs {
    double h = 1e-3;
    double t_end = 100.0;
    std::string xi0;
    std::string csv_path;
    std::string sweep;
};

std::map<std::string, Rational> parse_bindings(const std::vector<std::string>& raw) {
    std::map<std::string, Rational> out;
    for (const auto& kv : raw) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos) throw Error("parameter binding must look like name=value: '" + kv + "'");
        out[normalize_name(kv.substr(0, eq))] = Rational::parse(kv.substr(eq + 1));
    }
    return out;
}

Rational entry_to_rational(const json& v, const std::map<std::string, Rational>& params) {
    if (v.is_number_integer()) return Rational(static_cast<long>(v.get<long long>()));
    if (v.is_string()) {
        // constant expressions: "p/q", "-g", "1/2" ...
        const MultiPoly p = parse_polynomial(v.get<std::string>(), {}, params);
        return p.coeff(MultiPoly::Exps{});
    }
    throw Error("matrix entries must be integers or \"p/q\" strings");
}

RatMatrix matrix_from_json(const json& rows, const std::map<std::string, Rational>& params) {
    if (!rows.is_array() || rows.empty()) throw Error("expected a non-empty array of rows");
    RatMatrix m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (!rows[i].is_array() || rows[i].size() != m.cols()) throw Error("ragged matrix rows");
        for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = entry_to_rational(rows[i][j], params);
    }
    return m;
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw Error("cannot open input '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// EOM text, or a JSON object {"n":.., "M": ...} / {"n":.., "B1":.., "B2":.., "force":..}
Problem load_problem(const std::string& text, const std::map<std::string, Rational>& params) {
    std::size_t k = text.find_first_not_of(" \t\r\n");
    if (k != std::string::npos && text[k] == '{') {
        json j = json::parse(text);
        std::map<std::string, Rational> all = params;
        if (j.contains("params"))
            for (auto& [name, val] : j["params"].items())
                all.emplace(normalize_name(name), entry_to_rational(val, {}));
        auto check_n = [&](std::size_t n) {
            if (j.contains("n") && j["n"].get<std::size_t>() != n)
                throw Error("declared \"n\" does not match the matrix dimensions");
        };
        if (j.contains("M")) {
            RatMatrix m = matrix_from_json(j["M"], all);
            if (!m.is_square() || m.rows() % 2 != 0) throw Error("\"M\" must be square of even dimension");
            check_n(m.rows() / 2);
            return problem_from_matrix(m);
        }
        if (j.contains("B1") && j.contains("B2")) {
            EquationsOfMotion eom{matrix_from_json(j["B1"], all), matrix_from_json(j["B2"], all)};
            const std::size_t n = eom.b1.rows();
            if (!eom.b1.is_square() || !eom.b2.is_square() || eom.b2.rows() != n)
                throw Error("\"B1\" and \"B2\" must be square of equal size");
            check_n(n);
            std::vector<std::string> vars = position_vars(n);
            if (j.contains("vars")) vars = j["vars"].get<std::vector<std::string>>();
            if (vars.size() != n) throw Error("\"vars\" must list one name per position variable");
            std::optional<PolyField> force;
            if (j.contains("force")) {
                PolyField f;
                for (const auto& s : j["force"]) f.components.push_back(parse_polynomial(s, vars, all));
                if (f.n() != n) throw Error("\"force\" must list one component per variable");
                if (f.max_degree() > 6) throw ParseError("force degree exceeds the limit of 6", 1, 1);
                force = std::move(f);
            }
            Problem pr = problem_from_eom(eom, std::move(force));
            pr.vars = vars;
            return pr;
        }
        throw Error("matrix JSON needs either \"M\" or \"B1\"+\"B2\"");
    }
    return problem_from_parsed(parse_eom(text, params));
}

std::vector<double> parse_xi0(const std::string& s) {
    std::vector<double> v;
    if (s.empty()) return v;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            const double x = std::stod(item, &used);
            while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
            if (used != item.size()) throw Error("");
            v.push_back(x);
        } catch (const std::exception&) {
            throw Error("bad --xi0 component '" + item + "'");
        }
    }
    return v;
}

int status_exit(const Report& rep) { return static_cast<int>(rep.status); }

void emit(const Report& rep, unsigned sections, const CommonArgs& args) {
    print_report(std::cout, rep, sections);
    if (!args.json_path.empty()) {
        std::ofstream out(args.json_path);
        if (!out) throw Error("cannot open JSON output '" + args.json_path + "'");
        out << report_to_json(rep) << "\n";
    }
}

int run_command(const CommonArgs& args, const SimArgs* sim, unsigned sections,
                const Problem* preloaded = nullptr) {
    const auto params = parse_bindings(args.params);
    Problem problem = preloaded ? *preloaded : load_problem(read_input(args.input), params);
    PipelineOptions opt;
    opt.seed = args.seed;
    if (sim) {
        opt.sim.enabled = true;
        opt.sim.h = sim->h;
        opt.sim.t_end = sim->t_end;
        opt.sim.xi0 = parse_xi0(sim->xi0);
        opt.sim.csv_path = sim->csv_path;
    }

    if (sim && !sim->sweep.empty()) {
        // --sweep name=a:b:steps runs the pipeline over a rational grid
        const auto eq = sim->sweep.find('=');
        if (eq == std::string::npos) throw Error("--sweep must look like name=a:b:steps");
        const std::string name = normalize_name(sim->sweep.substr(0, eq));
        std::string rest = sim->sweep.substr(eq + 1);
        const auto c1 = rest.find(':'), c2 = rest.rfind(':');
        if (c1 == std::string::npos || c2 == c1) throw Error("--sweep must look like name=a:b:steps");
        const Rational a = Rational::parse(rest.substr(0, c1));
        const Rational b = Rational::parse(rest.substr(c1 + 1, c2 - c1 - 1));
        long steps = 0;
        try {
            steps = std::stol(rest.substr(c2 + 1));
        } catch (const std::exception&) {
            throw Error("bad --sweep step count '" + rest.substr(c2 + 1) + "'");
        }
        if (steps < 1) throw Error("--sweep needs at least one step");
        int worst = 0;
        for (long k = 0; k <= steps; ++k) {
            auto swept = params;
            const Rational value = a + (b - a) * Rational(k, steps);
            swept[name] = value;
            Problem p = load_problem(read_input(args.input), swept);
            Report rep = run_pipeline(p, opt);
            std::cout << name << " = " << value.to_string() << ": verdict "
                      << (rep.hamiltonian ? (*rep.hamiltonian ? "yes" : "no") : "n/a");
            if (rep.stab) std::cout << ", all oscillatory " << (rep.stab->all_oscillatory ? "yes" : "no");
            if (rep.sim && rep.sim->drift) std::cout << ", drift " << *rep.sim->drift;
            std::cout << "\n";
            worst = std::max(worst, status_exit(rep));
        }
        return worst;
    }

    Report rep = run_pipeline(problem, opt);
    emit(rep, sections, args);
    return status_exit(rep);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"decide whether linear equations of motion are Hamiltonian and construct (H, omega)"};
    app.require_subcommand(1);
    app.set_help_flag("--help", "print help");

    CommonArgs args;
    SimArgs sim;
    std::string demo_name;
    bool demo_simulate = false;

    auto add_common = [&](CLI::App* cmd, bool with_input = true) {
        cmd->set_help_flag("--help", "print help");
        if (with_input)
            cmd->add_option("input", args.input, "EOM text file, matrix JSON file, or '-' for stdin")
                ->required();
        cmd->add_option("-p,--param", args.params, "parameter binding name=value (value rational)");
        cmd->add_option("--json", args.json_path, "write the machine-readable report here");
        cmd->add_option("--seed", args.seed, "seed for the deterministic invertible-member search");
    };
    auto add_sim = [&](CLI::App* cmd) {
        cmd->add_option("--h", sim.h, "integration step");
        cmd->add_option("--t-end", sim.t_end, "integration horizon");
        cmd->add_option("--xi0", sim.xi0, "comma-separated initial state");
        cmd->add_option("--csv", sim.csv_path, "write the trajectory as CSV here");
    };

    auto* check = app.add_subcommand("check", "criterion verdict and characteristic polynomial");
    add_common(check);
    auto* factor_cmd = app.add_subcommand("factor", "alternating-symmetric factorization and (H, omega)");
    add_common(factor_cmd);
    auto* standardize_cmd = app.add_subcommand("standardize", "second-order reduction and standard form");
    add_common(standardize_cmd);
    auto* canonical_cmd = app.add_subcommand("canonical", "Hamiltonian for the canonical symplectic form");
    add_common(canonical_cmd);
    auto* lagrangian_cmd = app.add_subcommand("lagrangian", "quadratic Lagrangian construction");
    add_common(lagrangian_cmd);
    auto* potential_cmd = app.add_subcommand("potential", "potential extraction for the nonlinear force");
    add_common(potential_cmd);
    auto* simulate_cmd = app.add_subcommand("simulate", "integrate the system and check conservation");
    add_common(simulate_cmd);
    add_sim(simulate_cmd);
    simulate_cmd->add_option("--sweep", sim.sweep, "parameter sweep name=a:b:steps");
    auto* demo_cmd = app.add_subcommand("demo", "run a built-in example system");
    demo_cmd->add_option("name", demo_name, "demo name (omit to list)");
    add_common(demo_cmd, false);
    add_sim(demo_cmd);
    demo_cmd->add_flag("--simulate", demo_simulate, "also run the verification integration");

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed())
            return run_command(args, nullptr, SectionVerdict);
        if (factor_cmd->parsed())
            return run_command(args, nullptr, SectionVerdict | SectionFactorization);
        if (standardize_cmd->parsed())
            return run_command(args, nullptr, SectionVerdict | SectionReduction);
        if (canonical_cmd->parsed())
            return run_command(args, nullptr, SectionVerdict | SectionCanonical);
        if (lagrangian_cmd->parsed())
            return run_command(args, nullptr, SectionVerdict | SectionLagrangian);
        if (potential_cmd->parsed())
            return run_command(args, nullptr, SectionVerdict | SectionPotential);
        if (simulate_cmd->parsed())
            return run_command(args, &sim, SectionVerdict | SectionStability | SectionSimulation);
        if (demo_cmd->parsed()) {
            if (demo_name.empty()) {
                for (const auto& d : demos()) std::cout << d.name << ": " << d.description << "\n";
                return 0;
            }
            const Demo* demo = find_demo(demo_name);
            if (!demo) {
                std::cerr << "unknown demo '" << demo_name << "'\n";
                return static_cast<int>(Status::ParseFailure);
            }
            auto params = demo->params;
            for (const auto& [k, v] : parse_bindings(args.params)) params[k] = v;
            Problem problem = problem_from_parsed(parse_eom(demo->eom_text, params));
            CommonArgs demo_args = args;
            demo_args.params.clear();
            if (demo_simulate) return run_command(demo_args, &sim, SectionAll, &problem);
            return run_command(demo_args, nullptr, SectionAll, &problem);
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return static_cast<int>(Status::ParseFailure);
    } catch (const NotHamiltonianError& e) {
        std::cerr << e.what() << "\n";
        return static_cast<int>(Status::NotHamiltonian);
    } catch (const SingularM21Error& e) {
        std::cerr << e.what() << "\n";
        return static_cast<int>(Status::NotAdmissible);
    } catch (const SingularMatrixError& e) {
        std::cerr << e.what() << "\n";
        return static_cast<int>(Status::NotAdmissible);
    } catch (const NumericError& e) {
        std::cerr << e.what() << "\n";
        return static_cast<int>(Status::NumericFailure);
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return static_cast<int>(Status::ParseFailure);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
