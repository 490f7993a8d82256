#pragma once

#include "brp/generator.hpp"
#include "brp/local_search.hpp"
#include "brp/model.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace brp::cli {

/// Usage or input problems; main() maps them to exit code 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// File stem of generated instance `index`, e.g. "H3_W3_unlimited_001".
std::string instance_stem(const GeneratorParams& params, int index);

struct GenerateOptions {
    GeneratorParams params;
    std::string out_dir = ".";
};

/// Writes one canonical instance file per ordinal; returns the paths written.
std::vector<std::string> cmd_generate(const GenerateOptions& opts);

struct SolveOptions {
    std::string instance_path;
    std::string heuristic = "greedy";
    std::uint64_t seed = 1;
    std::string out_path;
};

/// Starting solution for `heuristic` ("greedy" or "random").
Solution construct_start(const Instance& inst, const std::string& heuristic, std::uint64_t seed);

int cmd_solve(const SolveOptions& opts, std::ostream& out);

struct ImproveOptions {
    std::string instance_path;
    std::string solution_path;
    std::string out_path;
    std::string log_path;
    SpeedupOptions speedups;
    std::optional<double> timeout_s;
};

int cmd_improve(const ImproveOptions& opts, std::ostream& out);

struct ValidateOptions {
    std::string instance_path;
    std::string solution_path;
};

/// Exit status 0 when the solution is valid, 1 otherwise.
int cmd_validate(const ValidateOptions& opts, std::ostream& out);

struct BenchOptions {
    GeneratorParams params;
    std::vector<std::string> starts{"greedy"};
    SpeedupOptions speedups;
    std::optional<double> timeout_s;
    int jobs = 1;
    bool timing = true;
    std::string out_csv;
    std::string extremes_csv;
};

struct BenchRow {
    int instance = 0;
    std::string heuristic;
    int r_before = 0;
    int r_after = 0;
    double gap_pct = 0.0;
    bool improved = false;
    double cpu_s = 0.0;
    bool timeout = false;
};

/// BB(x): best starting value, WA(x): worst value after local search, across starts.
struct InstanceExtremes {
    int instance = 0;
    int best_before = 0;
    int worst_after = 0;
};

struct BenchReport {
    GeneratorParams params;
    std::vector<BenchRow> rows; // instance-major, then start order
    std::vector<InstanceExtremes> extremes;
};

/// 100 (b - a) / b, or 0 when b = 0.
double percentage_gap(int before, int after);

BenchReport run_bench(const BenchOptions& opts);
/// Columns: H,W,policy,seed,instance,heuristic,R_before,R_after,gap_pct,improved,cpu_s,timeout.
/// One row per (instance, start), then one `instance=AVG` row per start.
std::string format_bench_csv(const BenchReport& report, bool timing);
std::string format_extremes_csv(const BenchReport& report);

int cmd_bench(const BenchOptions& opts, std::ostream& out);

struct OracleOptions {
    std::string instance_path;
    std::string solution_path;
    std::optional<int> container;
    int max_relocations = 64;
    int max_containers = 10;
};

int cmd_oracle(const OracleOptions& opts, std::ostream& out);

/// Default worker count: $BRP_JOBS if set to a positive integer, else 1.
int default_jobs();

} // namespace brp::cli
