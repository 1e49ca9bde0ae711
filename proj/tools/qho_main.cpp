#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qho/algebraic.hpp"
#include "qho/errors.hpp"
#include "qho/expr.hpp"
#include "qho/json_io.hpp"
#include "qho/laws.hpp"

namespace {

std::vector<std::size_t> parse_csv_sizes(const std::string& csv) {
    std::vector<std::size_t> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(static_cast<std::size_t>(std::stoull(item)));
    }
    if (out.empty()) throw qho::ParseError("expected a comma-separated list of integers");
    return out;
}

void emit_matrix(const qho::Morphism& m, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << qho::matrix_to_json(m).dump(2) << "\n";
    } else {
        qho::save_matrix(out_path, m);
    }
}

int run_eval(const std::string& text, const std::vector<std::string>& env_specs,
             std::size_t dim, std::size_t cutoff, const std::string& out_path) {
    qho::expr::Environment env;
    env.dim = dim;
    env.cutoff = cutoff;
    for (const std::string& spec : env_specs) {
        const auto eq = spec.find('=');
        if (eq == std::string::npos) {
            throw qho::ParseError("--env expects name=path.json, got '" + spec + "'");
        }
        env.bindings.emplace(spec.substr(0, eq), qho::load_matrix(spec.substr(eq + 1)));
    }
    qho::expr::Expr ast = qho::expr::parse_expr(text);
    qho::expr::typecheck(ast, env);
    const qho::Morphism value = qho::expr::eval_expr(ast, env);
    std::cerr << qho::expr::pretty_print(ast) << " : " << value.dom.describe() << " -> "
              << value.cod.describe() << "\n";
    emit_matrix(value, out_path);
    return 0;
}

int run_coherent(const std::string& phi_path, std::size_t cutoff, const std::string& out_path) {
    const qho::Morphism phi = qho::load_matrix(phi_path);
    if (phi.cols() != 1) {
        throw qho::ParseError("coherent: --phi must be a column vector");
    }
    const qho::FockSpace f = qho::fock_space(phi.cod, cutoff);
    emit_matrix(qho::coherent_state(f, phi), out_path);
    return 0;
}

int run_commutator(const std::string& phi_path, const std::string& psi_path, std::size_t cutoff,
                   const std::string& out_path) {
    const qho::Morphism phi = qho::load_matrix(phi_path);
    const qho::Morphism psi = qho::load_matrix(psi_path);
    if (phi.cols() != 1 || psi.cols() != 1 || phi.rows() != psi.rows()) {
        throw qho::ParseError("commutator: --phi/--psi must be column vectors of equal size");
    }
    const qho::FockSpace f = qho::fock_space(phi.cod, cutoff);
    const qho::Morphism raise_psi = qho::raising(f, psi);
    const qho::Morphism lower_phi = qho::lowering(f, phi);
    const qho::Morphism commutator =
        qho::sub(qho::compose(lower_phi, raise_psi), qho::compose(raise_psi, lower_phi));
    emit_matrix(commutator, out_path);
    return 0;
}

int run_check(const std::string& dims_csv, const std::string& cutoffs_csv, std::uint64_t seed,
              const std::string& report_path) {
    qho::laws::SuiteConfig config;
    config.dims = parse_csv_sizes(dims_csv);
    config.cutoffs = parse_csv_sizes(cutoffs_csv);
    config.seed = seed;

    const std::vector<qho::laws::LawReport> reports = qho::laws::run_suite(config);
    std::size_t failed = 0;
    for (const auto& r : reports) {
        std::printf("%-36s %s  max dev %.3e  [%s]  (%.2fs)\n", r.law_id.c_str(),
                    r.passed ? "pass" : "FAIL", r.max_abs_deviation,
                    r.sector_restriction.c_str(), r.elapsed_seconds);
        if (!r.passed) ++failed;
    }
    std::printf("%zu laws checked, %zu failed\n", reports.size(), failed);
    if (!report_path.empty()) {
        std::ofstream out(report_path);
        if (!out) throw qho::ParseError("cannot open '" + report_path + "' for writing");
        out << qho::laws::reports_to_json(reports).dump(2) << "\n";
    }
    return qho::laws::all_passed(reports) ? 0 : 1;
}

int run_exp(const std::string& monoid_path, const std::string& element_path, std::size_t order,
            const std::string& out_path) {
    const qho::MonoidPresentation mono =
        qho::monoid_from_json(qho::read_json_file(monoid_path));
    qho::Morphism element = qho::load_matrix(element_path);
    if (element.cols() != 1 || element.rows() != mono.carrier.dim()) {
        throw qho::ParseError("exp: --element must be a column vector over the carrier");
    }
    element = qho::cast(element, qho::SpaceObject::unit(), mono.carrier);
    emit_matrix(qho::monoid_exp(mono, element, order), out_path);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Truncated symmetric-Fock-space calculator and law checker"};
    app.require_subcommand(1);

    // eval
    auto* eval_cmd = app.add_subcommand("eval", "Evaluate a morphism expression");
    std::string expr_text;
    std::vector<std::string> env_specs;
    std::size_t eval_dim = 2;
    std::size_t eval_cutoff = 3;
    std::string eval_out;
    eval_cmd->add_option("--expr", expr_text, "Expression text")->required();
    eval_cmd->add_option("--env", env_specs, "name=path.json binding (repeatable)");
    eval_cmd->add_option("--dim", eval_dim, "Base space dimension d");
    eval_cmd->add_option("--cutoff", eval_cutoff, "Fock cutoff N");
    eval_cmd->add_option("--out", eval_out, "Write the result matrix here instead of stdout");

    // coherent
    auto* coh_cmd = app.add_subcommand("coherent", "Coherent state of a single-particle vector");
    std::string phi_path;
    std::size_t coh_cutoff = 3;
    std::string coh_out;
    coh_cmd->add_option("--phi", phi_path, "Single-particle state (matrix JSON)")->required();
    coh_cmd->add_option("--cutoff", coh_cutoff, "Fock cutoff N")->required();
    coh_cmd->add_option("--out", coh_out, "Output path (stdout when omitted)");

    // commutator
    auto* comm_cmd =
        app.add_subcommand("commutator", "Mixed commutator of lowering and raising maps");
    std::string comm_phi, comm_psi, comm_out;
    std::size_t comm_cutoff = 3;
    comm_cmd->add_option("--phi", comm_phi, "State lowered on the left")->required();
    comm_cmd->add_option("--psi", comm_psi, "State raised on the right")->required();
    comm_cmd->add_option("--cutoff", comm_cutoff, "Fock cutoff N")->required();
    comm_cmd->add_option("--out", comm_out, "Output path (stdout when omitted)");

    // check
    auto* check_cmd = app.add_subcommand("check", "Run the verification suite");
    std::string dims_csv = "1,2,3";
    std::string cutoffs_csv = "2,3,4";
    std::uint64_t seed = 1;
    std::string report_path;
    check_cmd->add_option("--dims", dims_csv, "Base dimensions, comma separated");
    check_cmd->add_option("--cutoffs", cutoffs_csv, "Cutoffs, comma separated");
    check_cmd->add_option("--seed", seed, "Random seed");
    check_cmd->add_option("--report", report_path, "Write the JSON report here");

    // exp
    auto* exp_cmd = app.add_subcommand("exp", "Exponential of a commutative monoid element");
    std::string monoid_path, element_path, exp_out;
    std::size_t order = 20;
    exp_cmd->add_option("--monoid", monoid_path, "Monoid presentation JSON")->required();
    exp_cmd->add_option("--element", element_path, "Element vector JSON")->required();
    exp_cmd->add_option("--order", order, "Series truncation order")->required();
    exp_cmd->add_option("--out", exp_out, "Output path (stdout when omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (eval_cmd->parsed()) {
            return run_eval(expr_text, env_specs, eval_dim, eval_cutoff, eval_out);
        }
        if (coh_cmd->parsed()) return run_coherent(phi_path, coh_cutoff, coh_out);
        if (comm_cmd->parsed()) {
            return run_commutator(comm_phi, comm_psi, comm_cutoff, comm_out);
        }
        if (check_cmd->parsed()) return run_check(dims_csv, cutoffs_csv, seed, report_path);
        if (exp_cmd->parsed()) return run_exp(monoid_path, element_path, order, exp_out);
    } catch (const qho::LawViolation& e) {
        std::cerr << "law violation: " << e.what() << "\n";
        return 1;
    } catch (const qho::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
