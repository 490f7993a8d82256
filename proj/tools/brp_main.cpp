#include "cli/commands.hpp"

#include "brp/construct.hpp"
#include "brp/io.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

void add_class_options(CLI::App& cmd, brp::GeneratorParams& params, std::string& policy)
{
    cmd.add_option("-H,--height", params.height, "Initial fill height per stack")->required()->check(CLI::PositiveNumber);
    cmd.add_option("-W,--width", params.width, "Number of stacks")->required()->check(CLI::PositiveNumber);
    cmd.add_option("--policy", policy, "Height limit: unlimited or H+2")
        ->check(CLI::IsMember({"unlimited", "H+2"}))
        ->capture_default_str();
    cmd.add_option("--seed", params.seed, "Generator seed")->capture_default_str();
    cmd.add_option("--count", params.count, "Instances in the class")->capture_default_str()->check(CLI::NonNegativeNumber);
}

void add_speedup_flags(CLI::App& cmd, bool& no_ub, bool& no_useless, bool& no_aspiration)
{
    cmd.add_flag("--no-upper-bound", no_ub, "Disable upper-bound pruning");
    cmd.add_flag("--no-useless-eval", no_useless, "Try every destination stack at every step");
    cmd.add_flag("--no-aspiration", no_aspiration, "Disable early termination on an improving state");
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Local search for the unrestricted block relocation problem"};
    app.require_subcommand(1);

    std::string policy = "unlimited";
    bool no_ub = false;
    bool no_useless = false;
    bool no_aspiration = false;

    brp::cli::GenerateOptions gen;
    auto* generate = app.add_subcommand("generate", "Write a class of random instances");
    add_class_options(*generate, gen.params, policy);
    generate->add_option("-o,--out-dir", gen.out_dir, "Output directory")->capture_default_str();

    brp::cli::SolveOptions solve;
    auto* solve_cmd = app.add_subcommand("solve", "Build a starting solution");
    solve_cmd->add_option("instance", solve.instance_path, "Instance file")->required();
    solve_cmd->add_option("--heuristic", solve.heuristic, "greedy or random")
        ->check(CLI::IsMember({"greedy", "random"}))
        ->capture_default_str();
    solve_cmd->add_option("--seed", solve.seed, "Seed for the random start")->capture_default_str();
    solve_cmd->add_option("-o,--out", solve.out_path, "Solution file (stdout if omitted)");

    brp::cli::ImproveOptions improve;
    double improve_timeout = 0;
    auto* improve_cmd = app.add_subcommand("improve", "Run local search on a solution");
    improve_cmd->add_option("instance", improve.instance_path, "Instance file")->required();
    improve_cmd->add_option("solution", improve.solution_path, "Starting solution file")->required();
    improve_cmd->add_option("-o,--out", improve.out_path, "Improved solution file (stdout if omitted)");
    improve_cmd->add_option("--log", improve.log_path, "CSV log of accepted improvements");
    auto* improve_to = improve_cmd->add_option("--timeout", improve_timeout, "Wall-clock limit in seconds");
    add_speedup_flags(*improve_cmd, no_ub, no_useless, no_aspiration);

    brp::cli::ValidateOptions val;
    auto* validate_cmd = app.add_subcommand("validate", "Replay a solution and report the first violation");
    validate_cmd->add_option("instance", val.instance_path, "Instance file")->required();
    validate_cmd->add_option("solution", val.solution_path, "Solution file")->required();

    brp::cli::BenchOptions bench;
    bench.jobs = brp::cli::default_jobs();
    double bench_timeout = 0;
    bool no_timing = false;
    auto* bench_cmd = app.add_subcommand("bench", "Generate a class, construct, improve and report CSV");
    add_class_options(*bench_cmd, bench.params, policy);
    bench_cmd->add_option("--starts", bench.starts, "Starting heuristics (greedy, random)")
        ->delimiter(',')
        ->capture_default_str();
    auto* bench_to = bench_cmd->add_option("--timeout", bench_timeout, "Wall-clock limit per run in seconds");
    bench_cmd->add_option("-j,--jobs", bench.jobs, "Parallel runs (default $BRP_JOBS or 1)")->check(CLI::PositiveNumber);
    bench_cmd->add_option("-o,--out", bench.out_csv, "CSV output (stdout if omitted)");
    bench_cmd->add_option("--extremes", bench.extremes_csv, "Per-instance BB/WA CSV output");
    bench_cmd->add_flag("--no-timing", no_timing, "Write cpu_s as 0.00 for reproducible files");
    add_speedup_flags(*bench_cmd, no_ub, no_useless, no_aspiration);

    brp::cli::OracleOptions orc;
    int container = 0;
    auto* oracle_cmd = app.add_subcommand("oracle", "Exact optimum, or explicit-graph check of the DP per container");
    oracle_cmd->add_option("instance", orc.instance_path, "Instance file")->required();
    oracle_cmd->add_option("solution", orc.solution_path, "Solution file");
    auto* container_opt = oracle_cmd->add_option("-n,--container", container, "Single container to check");
    oracle_cmd->add_option("--max-relocations", orc.max_relocations, "Exact search depth limit")->capture_default_str();
    oracle_cmd->add_option("--max-containers", orc.max_containers, "Exact search size guard")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    const brp::SpeedupOptions speedups{!no_ub, !no_useless, !no_aspiration};
    try {
        if (*generate) {
            gen.params.policy = brp::parse_height_policy(policy);
            for (const auto& path : brp::cli::cmd_generate(gen)) {
                std::cout << path << '\n';
            }
            return 0;
        }
        if (*solve_cmd) {
            return brp::cli::cmd_solve(solve, std::cout);
        }
        if (*improve_cmd) {
            improve.speedups = speedups;
            if (*improve_to) {
                improve.timeout_s = improve_timeout;
            }
            return brp::cli::cmd_improve(improve, std::cout);
        }
        if (*validate_cmd) {
            return brp::cli::cmd_validate(val, std::cout);
        }
        if (*bench_cmd) {
            bench.params.policy = brp::parse_height_policy(policy);
            bench.speedups = speedups;
            bench.timing = !no_timing;
            if (*bench_to) {
                bench.timeout_s = bench_timeout;
            }
            return brp::cli::cmd_bench(bench, std::cout);
        }
        if (*oracle_cmd) {
            if (*container_opt) {
                orc.container = container;
            }
            return brp::cli::cmd_oracle(orc, std::cout);
        }
    } catch (const brp::cli::UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const brp::DeadEndError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
