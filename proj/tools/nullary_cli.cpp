#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "nullary/chain.hpp"

namespace {

using namespace nullary;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::BadInput, "cannot read " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

// a file name if one exists, otherwise the problem text itself
std::string problem_text(const std::string& arg) {
    std::error_code ec;
    if (std::filesystem::is_regular_file(arg, ec)) return slurp(arg);
    return arg;
}

void emit(const std::string& text, const std::string& out) {
    if (out.empty()) {
        std::cout << text << '\n';
        return;
    }
    std::ofstream f(out, std::ios::binary);
    f << text << '\n';
    if (!f) throw Error(ErrorCode::BadInput, "cannot write " + out);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact piecewise-linear unification toolkit"};
    app.require_subcommand(1);

    std::string problem, unifier, out, chain_dir;
    std::size_t vars = 0, steps = 0;

    auto* solve = app.add_subcommand("solve", "print the solution polyhedron of a unification problem");
    solve->add_option("--problem", problem, "problem file or text")->required();
    solve->add_option("--vars", vars, "number of variables")->required()->check(CLI::Range(1, 4));
    solve->add_option("--out", out, "output file (default: stdout)");

    auto* check = app.add_subcommand("check", "exit 0 iff the Z-map is a unifier of the problem");
    check->add_option("--problem", problem, "problem file or text")->required();
    check->add_option("--unifier", unifier, "Z-map JSON file")->required();

    auto* generalize_cmd = app.add_subcommand("generalize", "one strictly more general unifier");
    generalize_cmd->add_option("--unifier", unifier, "Z-map JSON file")->required();
    generalize_cmd->add_option("--out", out, "output file")->required();

    auto* chain = app.add_subcommand("chain", "emit a verified ascending chain");
    chain->add_option("--steps", steps, "number of generalization steps")->required();
    chain->add_option("--vars", vars, "number of variables, 2 to 4")->required();
    chain->add_option("--out", chain_dir, "output directory")->required();

    auto* verify = app.add_subcommand("verify", "re-verify a chain directory; exit 0 iff all checks pass");
    verify->add_option("--chain", chain_dir, "chain directory")->required();
    verify->add_option("--problem", problem, "problem file or text")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*solve) {
            emit(to_json(solution_polyhedron(parse_problem(problem_text(problem), vars))), out);
            return kOk;
        }
        if (*check) {
            const ZMap sigma = zmap_from_json(slurp(unifier));
            const bool ok = check_unifier(parse_problem(problem_text(problem), sigma.codomain_dim()), sigma);
            std::cout << (ok ? "unifier" : "not a unifier") << '\n';
            return ok ? kOk : kFailed;
        }
        if (*generalize_cmd) {
            const ZMap sigma = zmap_from_json(slurp(unifier));
            Generalization g = generalize(sigma);
            nlohmann::json j{{"alpha", nlohmann::json::parse(to_json(g.alpha))},
                             {"degree_in", to_string(degree(sigma))},
                             {"degree_out", to_string(degree(g.theta))},
                             {"theta", nlohmann::json::parse(to_json(g.theta))}};
            emit(j.dump(), out);
            std::cout << "degree " << j["degree_in"].get<std::string>() << " -> "
                      << j["degree_out"].get<std::string>() << '\n';
            return kOk;
        }
        if (*chain) {
            ChainReport report;
            const auto records = ascending_chain(steps, vars, &report);
            write_chain(chain_dir, records, report);
            std::cout << to_json(report) << '\n';
            return kOk;
        }
        if (*verify) {
            const auto records = read_chain(chain_dir);
            const std::size_t arity = records.empty() ? 2 : records.front().sigma.codomain_dim();
            const ChainReport report = verify_chain(records, parse_problem(problem_text(problem), arity));
            std::cout << to_json(report) << '\n';
            return report.all_pass() ? kOk : kFailed;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return e.code() == ErrorCode::VerificationFailed ? kFailed : kUsage;
    }
    return kUsage;
}
