#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "fint/replay.hpp"

namespace {

struct CommonOpts {
    std::string strategy;
    std::string coeff_field;
    long prime = 0;
    long gb_budget = 0;
    std::string output = "text";
};

void add_common(CLI::App* cmd, CommonOpts& c) {
    cmd->add_option("--strategy", c.strategy, "Groebner encoding: laurent|sign-split")
        ->check(CLI::IsMember({"laurent", "sign-split"}));
    cmd->add_option("--coeff-field", c.coeff_field, "coefficient field: q|gfp")
        ->check(CLI::IsMember({"q", "gfp"}));
    cmd->add_option("--prime", c.prime, "modulus for --coeff-field gfp");
    cmd->add_option("--gb-budget", c.gb_budget, "Groebner pair budget");
    cmd->add_option("--output", c.output, "output mode: text|machine")
        ->check(CLI::IsMember({"text", "machine"}));
}

fint::JobSpec load_job(const std::string& path, const CommonOpts& c) {
    auto job = fint::load_job_file(path);
    if (!c.strategy.empty()) job.options.strategy = fint::parse_strategy(c.strategy);
    if (!c.coeff_field.empty()) job.options.coeff_field = c.coeff_field;
    if (c.prime) job.options.prime = c.prime;
    if (c.gb_budget) job.options.gb_budget = c.gb_budget;
    return job;
}

void emit(const fint::CommandResult& r, const CommonOpts& c) {
    if (c.output == "machine")
        std::cout << r.machine.dump(2) << "\n";
    else
        std::cout << r.text;
}

std::string fixture_dir() {
    if (const char* env = std::getenv("FINT_FIXTURE_DIR")) return env;
#ifdef FINT_FIXTURE_DIR
    return FINT_FIXTURE_DIR;
#else
    return "fixtures";
#endif
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact monomial first integrals, invariants, and normal-form structure"};
    app.require_subcommand(1);

    std::string job_path, appendix;
    int box = 6;
    CommonOpts c;

    auto* integrals = app.add_subcommand("integrals", "Hilbert basis and integral generators");
    integrals->add_option("job", job_path, "job document (JSON)")->required();
    add_common(integrals, c);

    auto* invariants = app.add_subcommand("invariants", "parameter-space invariants of a system");
    invariants->add_option("job", job_path)->required();
    add_common(invariants, c);

    auto* equivariants =
        app.add_subcommand("equivariants", "resonance sets, equivariants, syzygies");
    equivariants->add_option("job", job_path)->required();
    add_common(equivariants, c);

    auto* oracle = app.add_subcommand("oracle-check", "boxed brute-force cross-check");
    oracle->add_option("job", job_path)->required();
    oracle->add_option("--box", box, "componentwise exponent bound")->required();
    add_common(oracle, c);

    auto* replay = app.add_subcommand("replay-appendix", "replay a bundled reference session");
    replay->add_option("which", appendix, "session letter A..E")
        ->required()
        ->check(CLI::IsMember({"A", "B", "C", "D", "E"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (integrals->parsed()) {
            emit(fint::cmd_integrals(load_job(job_path, c)), c);
        } else if (invariants->parsed()) {
            emit(fint::cmd_invariants(load_job(job_path, c)), c);
        } else if (equivariants->parsed()) {
            emit(fint::cmd_equivariants(load_job(job_path, c)), c);
        } else if (oracle->parsed()) {
            emit(fint::cmd_oracle_check(load_job(job_path, c), box), c);
        } else if (replay->parsed()) {
            auto out = fint::replay_appendix(appendix[0], fixture_dir());
            std::cout << out.text;
            return out.ok ? 0 : 1;
        }
    } catch (const fint::budget_error& e) {
        std::cerr << "budget error: " << e.what() << "\n";
        return 3;
    } catch (const fint::ceiling_error& e) {
        std::cerr << "ceiling error: " << e.what() << "\n";
        return 4;
    } catch (const fint::input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
