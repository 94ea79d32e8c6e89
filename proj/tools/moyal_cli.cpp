#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "moyal/parser.hpp"
#include "moyal/suites.hpp"

namespace {

std::uint64_t default_seed() {
    if (const char* env = std::getenv("MOYAL_SEED")) {
        try {
            return std::stoull(env);
        } catch (...) {
            std::cerr << "warning: ignoring malformed MOYAL_SEED='" << env
                      << "'\n";
        }
    }
    return 7;
}

moyal::ModelDescriptor load_model(const std::string& name) {
    return moyal::build_model(name);
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw moyal::AlgebraError("cannot write '" + path + "'");
    out << content;
}

int checked_output(const moyal::ModelDescriptor& m, const moyal::Poly& p) {
    std::string diag = m.algebra->validate_output(p);
    std::cout << m.algebra->to_string(p) << "\n";
    if (!diag.empty()) {
        std::cerr << "diagnostic: " << diag << "\n";
        return 2;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Poisson algebras, Moyal star products, and the "
                 "verification suites"};
    app.set_version_flag("--version", std::string(moyal::kVersion));
    app.require_subcommand(1);

    // models list
    auto* models = app.add_subcommand("models", "model catalog");
    models->require_subcommand(1);
    models->add_subcommand("list", "list the built-in models");

    // expr eval
    auto* expr = app.add_subcommand("expr", "expression utilities");
    expr->require_subcommand(1);
    auto* eval = expr->add_subcommand("eval", "parse and normalize an expression");
    std::string eval_model, eval_text;
    eval->add_option("--model", eval_model, "model name")->required();
    eval->add_option("-e,--expr", eval_text, "expression")->required();

    // bracket
    auto* bracket = app.add_subcommand("bracket", "Poisson bracket of two elements");
    std::string br_model, br_f, br_g;
    bracket->add_option("--model", br_model, "model name")->required();
    bracket->add_option("-f", br_f, "first element")->required();
    bracket->add_option("-g", br_g, "second element")->required();

    // star
    auto* star = app.add_subcommand("star", "truncated star product");
    std::string st_model, st_f, st_g;
    int st_order = 4;
    star->add_option("--model", st_model, "model name")->required();
    star->add_option("--order", st_order, "truncation order K")->required();
    star->add_option("-f", st_f, "first element")->required();
    star->add_option("-g", st_g, "second element")->required();

    // assoc
    auto* assoc = app.add_subcommand("assoc", "randomized associativity defects");
    std::string as_model;
    int as_order = 3, as_trials = 10;
    std::uint64_t as_seed = default_seed();
    assoc->add_option("--model", as_model, "model name")->required();
    assoc->add_option("--order", as_order, "truncation order K");
    assoc->add_option("--trials", as_trials, "number of random triples");
    assoc->add_option("--seed", as_seed, "random seed");

    // verify
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite;
    std::uint64_t vseed = default_seed();
    std::string vjson;
    verify->add_option("suite", suite, "one of reduction, darboux, moyal, "
                                       "matrices, k3, convergence, all")
        ->required();
    verify->add_option("--seed", vseed, "random seed");
    verify->add_option("--json", vjson, "write the machine-readable report here");

    // converge
    auto* converge = app.add_subcommand("converge", "radius scan of the star series");
    double cv_sigma = 1.0;
    std::string cv_grid = "0.05:0.2:4x0.025:0.1:4";
    int cv_order = 24, cv_M = 24;
    double cv_tol = 1e-6;
    std::string cv_json;
    converge->add_option("--sigma", cv_sigma, "exponential type of the inputs");
    converge->add_option("--grid", cv_grid, "grid spec: S x T, each lo:hi:count "
                                            "or a comma list");
    converge->add_option("--order", cv_order, "truncation order K");
    converge->add_option("-M,--degree", cv_M, "Taylor degree of the inputs");
    converge->add_option("--tol", cv_tol, "tail tolerance for the verdicts");
    converge->add_option("--json", cv_json, "write the machine-readable report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (models->parsed()) {
            for (const auto& name : moyal::model_names()) {
                moyal::ModelDescriptor m = load_model(name);
                std::cout << name << ": generators";
                for (const auto& g : m.algebra->generators()) {
                    std::cout << " " << g.name;
                    if (g.radical_order > 1)
                        std::cout << "(1/" << g.radical_order << " lattice)";
                    if (g.invertible) std::cout << "(invertible)";
                }
                std::cout << "\n";
            }
            return 0;
        }
        if (eval->parsed()) {
            moyal::ModelDescriptor m = load_model(eval_model);
            return checked_output(m, moyal::parse_expr(eval_text, *m.algebra));
        }
        if (bracket->parsed()) {
            moyal::ModelDescriptor m = load_model(br_model);
            moyal::Poly f = moyal::parse_expr(br_f, *m.algebra);
            moyal::Poly g = moyal::parse_expr(br_g, *m.algebra);
            return checked_output(m, m.structure.bracket(f, g));
        }
        if (star->parsed()) {
            moyal::ModelDescriptor m = load_model(st_model);
            if (!m.darboux)
                throw moyal::AlgebraError("model has no Darboux system");
            moyal::Poly f = moyal::parse_expr(st_f, *m.algebra);
            moyal::Poly g = moyal::parse_expr(st_g, *m.algebra);
            moyal::StarOptions opts;
            opts.max_order = std::max(st_order, opts.max_order);
            moyal::StarTruncation s =
                star_truncated(*m.darboux, st_order, f, g, opts);
            for (int k = 0; k <= s.order; ++k)
                std::cout << "c" << k << ": "
                          << m.algebra->to_string(s.coeff[size_t(k)]) << "\n";
            return 0;
        }
        if (assoc->parsed()) {
            moyal::ModelDescriptor m = load_model(as_model);
            if (!m.darboux)
                throw moyal::AlgebraError("model has no Darboux system");
            std::mt19937_64 rng(as_seed);
            moyal::StarOptions opts;
            opts.max_order = std::max(as_order, opts.max_order);
            int failures = 0;
            for (int t = 0; t < as_trials; ++t) {
                moyal::Poly f = moyal::random_element(rng, m.coordinates, 3, 2);
                moyal::Poly g = moyal::random_element(rng, m.coordinates, 3, 2);
                moyal::Poly h = moyal::random_element(rng, m.coordinates, 3, 2);
                moyal::StarTruncation d =
                    associativity_defect(*m.darboux, as_order, f, g, h, opts);
                bool zero = d.all_zero();
                std::cout << "trial " << t << ": "
                          << (zero ? "all-zero" : "NONZERO DEFECT") << "\n";
                if (!zero) ++failures;
            }
            std::cout << (failures == 0 ? "associative to order " : "FAILED at order ")
                      << as_order << " on " << as_trials << " trials\n";
            return failures == 0 ? 0 : 1;
        }
        if (verify->parsed()) {
            moyal::SuiteReport rep = moyal::run_suite(suite, vseed);
            moyal::write_text(std::cout, rep);
            if (!vjson.empty()) write_file(vjson, moyal::to_json_string(rep));
            return rep.exit_code();
        }
        if (converge->parsed()) {
            moyal::GridSpec grid = moyal::parse_grid(cv_grid);
            moyal::ConvergenceReport rep =
                moyal::radius_scan(cv_sigma, grid, cv_order, cv_M, cv_tol);
            std::cout << moyal::to_text(rep);
            if (!cv_json.empty()) write_file(cv_json, moyal::to_json_string(rep));
            return rep.monotone_ok ? 0 : 1;
        }
    } catch (const moyal::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const moyal::AlgebraError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
