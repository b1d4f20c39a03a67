#include "hirota/cli.hpp"

#include "hirota/suite.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace hirota::cli {

const std::vector<std::string>& commands() {
    static const std::vector<std::string> c{"verify", "identities", "bt", "lax", "simulate", "converge",
                                            "dump-systems"};
    return c;
}

nlohmann::json Config::to_json() const {
    nlohmann::json j;
    j["command"] = command;
    j["equation"] = equation;
    j["h"] = h;
    j["k"] = k ? nlohmann::json(*k) : nlohmann::json(nullptr);
    j["l"] = l;
    j["dt"] = dt;
    j["M"] = M;
    j["t_end"] = t_end;
    j["stride"] = stride;
    j["study"] = study;
    j["protocol"] = protocol;
    j["boundary"] = boundary;
    j["levels"] = levels;
    j["seed"] = seed;
    j["rng"] = "mt19937_64";
    j["pairs"] = pairs;
    j["format"] = format;
    j["out"] = out;
    j["csv"] = csv;
    return j;
}

Config parse_config(const std::vector<std::string>& args) {
    Config c;
    CLI::App app{"Hirota bilinear verification and lattice soliton toolkit", "hirota"};
    app.set_help_flag("--help", "Print usage");
    app.add_option("command", c.command, "Command")->required()->check(CLI::IsMember(commands()));
    app.add_option("--equation", c.equation, "kdv, kp, boussinesq, sk, ito or all");
    app.add_option("--h", c.h, "Lattice step")->check(CLI::PositiveNumber);
    app.add_option("--k", c.k, "Soliton wavenumber")->check(CLI::PositiveNumber);
    app.add_option("--l", c.l, "KP y-wavenumber");
    app.add_option("--dt", c.dt, "Time step")->check(CLI::PositiveNumber);
    app.add_option("--M", c.M, "Number of lattice sites")->check(CLI::Range(4, 1 << 20));
    app.add_option("--t-end", c.t_end, "Final time")->check(CLI::NonNegativeNumber);
    app.add_option("--stride", c.stride, "Steps between recorded frames")->check(CLI::PositiveNumber);
    app.add_option("--study", c.study, "Refinement parameter")->check(CLI::IsMember({"h", "dt"}));
    app.add_option("--protocol", c.protocol, "h-study protocol")
        ->check(CLI::IsMember({"semidiscrete-exact", "lattice-run"}));
    app.add_option("--boundary", c.boundary, "Lattice boundary policy")
        ->check(CLI::IsMember({"exact-tau", "zero-background"}));
    app.add_option("--levels", c.levels, "Comma-separated refinement levels")
        ->delimiter(',')
        ->check(CLI::PositiveNumber);
    app.add_option("--seed", c.seed, "PRNG seed");
    app.add_option("--pairs", c.pairs, "Random pairs per identity")->check(CLI::Range(1, 100000));
    app.add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--out", c.out, "Output path");
    app.add_option("--csv", c.csv, "Trajectory CSV path (simulate)");
    app.add_flag("--print-config", c.print_config, "Print the resolved configuration and exit");
    app.set_config("--config", "", "Config file with key = value lines");
    app.allow_config_extras(CLI::config_extras_mode::error);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        throw HelpRequested(app.help());
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }
    return c;
}

void resolve(Config& c) {
    if (c.equation.empty()) c.equation = c.command == "simulate" ? "kdv" : "all";
    if (c.equation != "all") {
        try {
            c.equation = equation_name(parse_equation(c.equation));
        } catch (const std::invalid_argument& e) {
            throw UsageError(std::string("--equation: ") + e.what());
        }
    }
    if (c.command == "simulate") {
        if (c.equation == "all") throw UsageError("--equation: simulate needs a single equation");
        if (!supports_evolution(parse_equation(c.equation)))
            throw UsageError("evolution unsupported for this equation: " + c.equation);
        if (!c.k) c.k = 0.8;
    }
    if (c.command == "converge") {
        if (c.levels.empty())
            c.levels = c.study == "h" ? std::vector<double>{0.4, 0.2, 0.1, 0.05} : std::vector<double>{4e-3, 2e-3, 1e-3};
        if (c.levels.size() < 3) throw UsageError("--levels: at least 3 levels required");
        for (std::size_t i = 1; i < c.levels.size(); ++i)
            if (!(c.levels[i] < c.levels[i - 1])) throw UsageError("--levels: values must be strictly decreasing");
        bool evolving = c.study == "dt" || c.protocol == "lattice-run";
        if (evolving && c.equation != "all" && !supports_evolution(parse_equation(c.equation)))
            throw UsageError("evolution unsupported for this equation: " + c.equation);
    }
    if (c.format == "csv" && c.command != "simulate" && c.command != "converge")
        throw UsageError("--format: csv is available for simulate and converge only");
}

namespace {

std::vector<EquationId> selected(const Config& c) {
    if (c.equation == "all") return all_equations();
    return {parse_equation(c.equation)};
}

// Evolution-capable subset for commands that run the lattice.
std::vector<EquationId> evolving(const Config& c) {
    std::vector<EquationId> r;
    for (EquationId id : selected(c))
        if (supports_evolution(id)) r.push_back(id);
    return r;
}

double default_k(const Config& c, EquationId id) {
    if (c.k) return *c.k;
    if (c.command == "converge" && c.study == "h") return id == EquationId::SK ? 0.6 : 1.0;
    return 0.8;
}

bool all_pass(const std::vector<Report>& rs) {
    for (const auto& r : rs)
        if (!r.pass) return false;
    return true;
}

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

void emit(const Config& c, const std::string& text, std::ostream& out) {
    std::string path = c.out;
    if (path.empty())
        if (const char* dir = std::getenv("HIROTA_OUT_DIR"); dir && *dir)
            path = std::string(dir) + "/" + c.command + "." + c.format;
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open " + path + " for writing");
    f << text;
    if (!f) throw IoError("write failed: " + path);
}

}  // namespace

nlohmann::json envelope(const Config& c, const std::vector<Report>& reports) {
    nlohmann::json j;
    j["version"] = 1;
    j["command"] = c.command;
    j["config"] = c.to_json();
    j["reports"] = nlohmann::json::array();
    for (const auto& r : reports) j["reports"].push_back(r.to_json());
    j["pass"] = all_pass(reports);
    return j;
}

int run_command(const Config& c, std::ostream& out, std::ostream& err) {
    std::vector<Report> reports;
    bool aborted = false;
    std::ostringstream csv;
    nlohmann::json extra;
    try {
        if (c.command == "verify") {
            for (EquationId id : selected(c))
                for (auto& r : verify_reports(id, c.seed)) reports.push_back(std::move(r));
        } else if (c.command == "identities") {
            reports.push_back(identity_suite(c.seed, c.pairs));
        } else if (c.command == "bt") {
            for (EquationId id : selected(c))
                for (auto& r : bt_reports(id)) reports.push_back(std::move(r));
        } else if (c.command == "lax") {
            for (EquationId id : selected(c))
                for (auto& r : lax_reports(id, c.seed)) reports.push_back(std::move(r));
        } else if (c.command == "simulate") {
            EquationId id = parse_equation(c.equation);
            SolverConfig sc = soliton_config(id, *c.k, c.h);
            sc.M = c.M;
            sc.first_site = -c.M / 2;
            sc.dt = c.dt;
            sc.t_end = c.t_end;
            sc.stride = c.stride;
            sc.boundary = parse_boundary(c.boundary);
            SimulationOutcome o = simulate_report(sc);
            aborted = !o.result.ok;
            reports.push_back(o.report);
            write_csv(csv, o.result.frames);
            if (!c.csv.empty()) {
                std::ofstream f(c.csv, std::ios::binary);
                if (!f) throw IoError("cannot open " + c.csv + " for writing");
                f << csv.str();
            }
        } else if (c.command == "converge") {
            auto ids = (c.study == "dt" || c.protocol == "lattice-run") ? evolving(c) : selected(c);
            for (EquationId id : ids) {
                RefinementStudy s;
                if (c.study == "h") {
                    HStudyOptions o;
                    o.l = c.l;
                    s = h_refinement_study(id, default_k(c, id), c.levels, parse_protocol(c.protocol), o);
                } else {
                    DtStudyOptions o;
                    o.M = c.M;
                    o.t_end = c.t_end;
                    s = dt_refinement_study(id, default_k(c, id), c.h, c.levels, o);
                }
                aborted = aborted || s.aborted;
                reports.push_back(study_report(s));
                csv << "# " << equation_name(id) << ' ' << s.parameter << '\n';
                s.write_csv(csv);
            }
        } else if (c.command == "dump-systems") {
            extra = systems_json();
        }
    } catch (const OverflowError& e) {
        err << "numerical abort: " << e.what() << '\n';
        return kNumericalAbort;
    } catch (const IoError& e) {
        err << "I/O error: " << e.what() << '\n';
        return kNumericalAbort;
    }

    nlohmann::json env = envelope(c, reports);
    if (!extra.is_null()) env["systems"] = extra;
    try {
        emit(c, c.format == "csv" ? csv.str() : env.dump(2) + "\n", out);
    } catch (const IoError& e) {
        err << "I/O error: " << e.what() << '\n';
        return kNumericalAbort;
    }
    for (const auto& r : reports)
        if (!r.pass) err << "FAIL " << r.kind << ' ' << r.equation << ' ' << r.name << '\n';
    if (aborted) return kNumericalAbort;
    return env["pass"].get<bool>() ? kOk : kVerificationFailed;
}

int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Config c;
    try {
        c = parse_config(args);
        resolve(c);
    } catch (const HelpRequested& e) {
        out << e.what();
        return kOk;
    } catch (const UsageError& e) {
        err << e.what() << '\n';
        return kUsage;
    }
    if (c.print_config) {
        out << c.to_json().dump(2) << '\n';
        return kOk;
    }
    try {
        return run_command(c, out, err);
    } catch (const std::invalid_argument& e) {
        err << e.what() << '\n';
        return kUsage;
    }
}

}  // namespace hirota::cli
