#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "rba/harness.hpp"

namespace {

// Flags win; otherwise RBA_NODE_BUDGET / RBA_TIME_BUDGET supply defaults.
void apply_env_budgets(rba::BudgetOptions& budget) {
    if (!budget.node_budget)
        if (const char* env = std::getenv("RBA_NODE_BUDGET"))
            budget.node_budget = std::strtoll(env, nullptr, 10);
    if (!budget.time_budget_seconds)
        if (const char* env = std::getenv("RBA_TIME_BUDGET"))
            budget.time_budget_seconds = std::strtod(env, nullptr);
}

void add_budget_flags(CLI::App* cmd, rba::BudgetOptions& budget) {
    cmd->add_option("--node-budget", budget.node_budget, "search-tree node cap");
    cmd->add_option("--time-budget", budget.time_budget_seconds, "time cap in seconds");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rainbow arborescence toolkit"};
    app.require_subcommand(1);

    std::string validate_path;
    CLI::App* validate = app.add_subcommand("validate", "check an instance file");
    validate->add_option("file", validate_path, "instance file")->required();

    std::string solve_path;
    rba::SolveOptions solve_opts;
    CLI::App* solve = app.add_subcommand("solve", "find a rainbow arborescence");
    solve->add_option("file", solve_path, "instance file")->required();
    solve
        ->add_option("--algo", solve_opts.algo,
                     "auto|exact|paths|paths-stars|two-multiroots|tree|many-colors|two-arcs|"
                     "half-size")
        ->default_val("auto");
    solve->add_option("--root", solve_opts.root, "required root vertex");
    solve->add_option("--size", solve_opts.size, "required arborescence size");
    solve->add_flag("--timing", solve_opts.timing, "include elapsed time in the report");
    add_budget_flags(solve, solve_opts.budget);

    rba::VerifyOptions verify_opts;
    CLI::App* verify = app.add_subcommand("verify", "run a conjecture-verification campaign");
    verify->add_option("--n", verify_opts.n, "vertex count")->required();
    verify->add_option("--k", verify_opts.k, "color count")->required();
    verify->add_option("--mode", verify_opts.mode, "exhaustive|sample")->default_val("exhaustive");
    verify->add_option("--samples", verify_opts.samples, "sample count")->default_val(10000);
    verify->add_option("--seed", verify_opts.seed, "campaign seed")->default_val(1);
    verify->add_option("--jobs", verify_opts.jobs, "worker threads")->default_val(1);
    verify->add_option("--csv", verify_opts.csv_path, "write an outcome,count summary CSV");
    verify->add_flag("--timing", verify_opts.timing, "include elapsed time in the report");
    add_budget_flags(verify, verify_opts.budget);

    std::string reduce_in, reduce_out;
    bool reduce_timing = false;
    CLI::App* reduce = app.add_subcommand("reduce-3dm", "build the Rooted-RA gadget from 3DM");
    reduce->add_option("file", reduce_in, "3DM file (\"p q\" then \"x y z\" lines)")->required();
    reduce->add_option("-o,--out", reduce_out, "output instance file")->required();
    reduce->add_flag("--timing", reduce_timing, "include elapsed time in the report");

    rba::GenOptions gen_opts;
    CLI::App* gen = app.add_subcommand("gen", "generate an instance");
    gen->add_option("--n", gen_opts.n, "vertex count")->required();
    gen->add_option("--k", gen_opts.k, "color count")->required();
    gen->add_option("--shape", gen_opts.shape,
                    "random|all-paths|paths-and-stars|two-multiroots|underlying-tree|shared-root")
        ->default_val("random");
    gen->add_option("--seed", gen_opts.seed, "generator seed")->required();
    gen->add_option("-o,--out", gen_opts.out_path, "output instance file")->required();
    gen->add_flag("--timing", gen_opts.timing, "include elapsed time in the report");

    CLI11_PARSE(app, argc, argv);

    if (validate->parsed()) return rba::cmd_validate(validate_path, std::cout);
    if (solve->parsed()) {
        apply_env_budgets(solve_opts.budget);
        return rba::cmd_solve(solve_path, solve_opts, std::cout);
    }
    if (verify->parsed()) {
        apply_env_budgets(verify_opts.budget);
        return rba::cmd_verify(verify_opts, std::cout);
    }
    if (reduce->parsed()) return rba::cmd_reduce_3dm(reduce_in, reduce_out, reduce_timing, std::cout);
    if (gen->parsed()) return rba::cmd_gen(gen_opts, std::cout);
    return rba::kExitInputError;
}
