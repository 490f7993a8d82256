#include "commands.hpp"

#include "brp/construct.hpp"
#include "brp/io.hpp"
#include "brp/oracle.hpp"
#include "brp/rng.hpp"

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <map>
#include <ostream>
#include <sstream>
#include <thread>

namespace brp::cli {

namespace {

std::string fixed2(double value)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f", value);
    return buf;
}

Instance load_instance(const std::string& path)
{
    try {
        return parse_instance(read_file(path));
    } catch (const ParseError& e) {
        throw UsageError(path + ": " + e.what());
    }
}

Solution load_solution(const std::string& path)
{
    try {
        return parse_solution(read_file(path));
    } catch (const ParseError& e) {
        throw UsageError(path + ": " + e.what());
    }
}

std::optional<std::chrono::steady_clock::duration> to_limit(std::optional<double> seconds)
{
    if (!seconds) {
        return std::nullopt;
    }
    return std::chrono::duration_cast<std::chrono::steady_clock::duration>(std::chrono::duration<double>(*seconds));
}

double thread_cpu_seconds()
{
    timespec ts{};
    clock_gettime(CLOCK_THREAD_CPUTIME_ID, &ts);
    return static_cast<double>(ts.tv_sec) + static_cast<double>(ts.tv_nsec) * 1e-9;
}

std::uint64_t random_start_seed(const GeneratorParams& params, int index)
{
    return splitmix64(instance_seed(params, index) ^ 0x5EEDULL);
}

} // namespace

std::string instance_stem(const GeneratorParams& params, int index)
{
    char buf[96];
    std::snprintf(buf, sizeof buf, "H%d_W%d_%s_%03d", params.height, params.width,
                  params.policy == HeightPolicy::unlimited ? "unlimited" : "Hplus2", index);
    return buf;
}

std::vector<std::string> cmd_generate(const GenerateOptions& opts)
{
    std::filesystem::create_directories(opts.out_dir);
    std::vector<std::string> paths;
    for (int i = 1; i <= opts.params.count; ++i) {
        const auto path = (std::filesystem::path(opts.out_dir) / (instance_stem(opts.params, i) + ".txt")).string();
        write_file(path, write_instance(generate(opts.params, i)));
        paths.push_back(path);
    }
    return paths;
}

Solution construct_start(const Instance& inst, const std::string& heuristic, std::uint64_t seed)
{
    if (heuristic == "greedy") {
        return greedy_solve(inst);
    }
    if (heuristic == "random") {
        // detours can box the bay in under a tight height limit; retry on a derived stream
        for (int attempt = 0;; ++attempt) {
            try {
                return random_solve(inst, seed);
            } catch (const DeadEndError&) {
                if (attempt == 31) {
                    throw;
                }
                seed = splitmix64(seed);
            }
        }
    }
    throw UsageError("unknown heuristic '" + heuristic + "' (expected greedy or random)");
}

int cmd_solve(const SolveOptions& opts, std::ostream& out)
{
    const Instance inst = load_instance(opts.instance_path);
    const Solution sol = construct_start(inst, opts.heuristic, opts.seed);
    const std::string comment = opts.heuristic + " R=" + std::to_string(sol.relocation_count());
    if (opts.out_path.empty()) {
        out << write_solution(sol, comment);
    } else {
        write_file(opts.out_path, write_solution(sol, comment));
        out << "R=" << sol.relocation_count() << " written to " << opts.out_path << '\n';
    }
    return 0;
}

int cmd_improve(const ImproveOptions& opts, std::ostream& out)
{
    const Instance inst = load_instance(opts.instance_path);
    const Solution start = load_solution(opts.solution_path);
    const auto report = validate(inst, start);
    if (!report.ok) {
        throw UsageError("starting solution is invalid: " + report.message);
    }
    LsOptions ls_opts;
    ls_opts.speedups = opts.speedups;
    ls_opts.time_limit = to_limit(opts.timeout_s);
    const LsResult res = local_search(inst, start, ls_opts);

    const std::string comment = "local search R=" + std::to_string(res.solution.relocation_count()) +
                                (res.timed_out ? " (timeout)" : "");
    if (opts.out_path.empty()) {
        out << write_solution(res.solution, comment);
    } else {
        write_file(opts.out_path, write_solution(res.solution, comment));
    }
    if (!opts.log_path.empty()) {
        std::ostringstream log;
        log << "sweep,container,old_f,new_f,aspirated\n";
        for (const auto& e : res.log) {
            log << e.sweep << ',' << e.container << ',' << e.old_f << ',' << e.new_f << ',' << (e.aspirated ? 1 : 0)
                << '\n';
        }
        write_file(opts.log_path, log.str());
    }
    if (!opts.out_path.empty()) {
        out << "R " << start.relocation_count() << " -> " << res.solution.relocation_count() << " ("
            << res.log.size() << " improvements, " << res.sweeps << " sweeps" << (res.timed_out ? ", timeout" : "")
            << ")\n";
    }
    return 0;
}

int cmd_validate(const ValidateOptions& opts, std::ostream& out)
{
    const Instance inst = load_instance(opts.instance_path);
    const Solution sol = load_solution(opts.solution_path);
    const auto report = validate(inst, sol);
    if (!report.ok) {
        out << "invalid: " << report.message << '\n';
        return 1;
    }
    out << "valid: N=" << inst.n_containers << " R=" << sol.relocation_count()
        << " lower_bound=" << global_lower_bound(inst) << '\n';
    return 0;
}

double percentage_gap(int before, int after)
{
    if (before == 0) {
        return 0.0;
    }
    return 100.0 * static_cast<double>(before - after) / static_cast<double>(before);
}

BenchReport run_bench(const BenchOptions& opts)
{
    if (opts.starts.empty()) {
        throw UsageError("at least one starting heuristic is required");
    }
    for (const auto& h : opts.starts) {
        if (h != "greedy" && h != "random") {
            throw UsageError("unknown heuristic '" + h + "'");
        }
    }
    BenchReport report;
    report.params = opts.params;
    const int count = std::max(opts.params.count, 0);
    const std::size_t n_starts = opts.starts.size();
    report.rows.resize(static_cast<std::size_t>(count) * n_starts);

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t job = next.fetch_add(1);
            if (job >= report.rows.size()) {
                return;
            }
            const int index = static_cast<int>(job / n_starts) + 1;
            const std::string& heuristic = opts.starts[job % n_starts];
            const Instance inst = generate(opts.params, index);
            const Solution start = construct_start(inst, heuristic, random_start_seed(opts.params, index));

            LsOptions ls_opts;
            ls_opts.speedups = opts.speedups;
            ls_opts.time_limit = to_limit(opts.timeout_s);
            const double cpu0 = thread_cpu_seconds();
            const LsResult res = local_search(inst, start, ls_opts);
            const double cpu = thread_cpu_seconds() - cpu0;

            BenchRow& row = report.rows[job];
            row.instance = index;
            row.heuristic = heuristic;
            row.r_before = start.relocation_count();
            row.r_after = res.solution.relocation_count();
            row.gap_pct = percentage_gap(row.r_before, row.r_after);
            row.improved = row.r_after < row.r_before;
            row.cpu_s = cpu;
            row.timeout = res.timed_out;
        }
    };
    const int jobs = std::max(1, opts.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int j = 0; j < jobs; ++j) {
            pool.emplace_back(worker);
        }
        for (auto& t : pool) {
            t.join();
        }
    }

    for (int i = 0; i < count; ++i) {
        InstanceExtremes ex{i + 1, 0, 0};
        for (std::size_t k = 0; k < n_starts; ++k) {
            const BenchRow& row = report.rows[static_cast<std::size_t>(i) * n_starts + k];
            ex.best_before = k == 0 ? row.r_before : std::min(ex.best_before, row.r_before);
            ex.worst_after = k == 0 ? row.r_after : std::max(ex.worst_after, row.r_after);
        }
        report.extremes.push_back(ex);
    }
    return report;
}

std::string format_bench_csv(const BenchReport& report, bool timing)
{
    const auto& p = report.params;
    const std::string prefix = std::to_string(p.height) + ',' + std::to_string(p.width) + ',' + to_string(p.policy) +
                               ',' + std::to_string(p.seed) + ',';
    std::ostringstream out;
    out << "H,W,policy,seed,instance,heuristic,R_before,R_after,gap_pct,improved,cpu_s,timeout\n";
    for (const auto& row : report.rows) {
        out << prefix << row.instance << ',' << row.heuristic << ',' << row.r_before << ',' << row.r_after << ','
            << fixed2(row.gap_pct) << ',' << (row.improved ? 1 : 0) << ',' << fixed2(timing ? row.cpu_s : 0.0) << ','
            << (row.timeout ? 1 : 0) << '\n';
    }

    // summary rows keep the order in which starts first appear
    std::vector<std::string> order;
    std::map<std::string, std::vector<const BenchRow*>> groups;
    for (const auto& row : report.rows) {
        auto& g = groups[row.heuristic];
        if (g.empty()) {
            order.push_back(row.heuristic);
        }
        g.push_back(&row);
    }
    for (const auto& heuristic : order) {
        const auto& g = groups[heuristic];
        double before = 0;
        double after = 0;
        double gap = 0;
        double cpu = 0;
        int improved = 0;
        int timeouts = 0;
        for (const BenchRow* row : g) {
            before += row->r_before;
            after += row->r_after;
            gap += row->gap_pct;
            cpu += row->cpu_s;
            improved += row->improved ? 1 : 0;
            timeouts += row->timeout ? 1 : 0;
        }
        const double k = static_cast<double>(g.size());
        out << prefix << "AVG," << heuristic << ',' << fixed2(before / k) << ',' << fixed2(after / k) << ','
            << fixed2(gap / k) << ',' << improved << ',' << fixed2(timing ? cpu / k : 0.0) << ',' << timeouts << '\n';
    }
    return out.str();
}

std::string format_extremes_csv(const BenchReport& report)
{
    const auto& p = report.params;
    std::ostringstream out;
    out << "H,W,policy,instance,BB,WA\n";
    for (const auto& ex : report.extremes) {
        out << p.height << ',' << p.width << ',' << to_string(p.policy) << ',' << ex.instance << ',' << ex.best_before
            << ',' << ex.worst_after << '\n';
    }
    return out.str();
}

int cmd_bench(const BenchOptions& opts, std::ostream& out)
{
    const BenchReport report = run_bench(opts);
    const std::string csv = format_bench_csv(report, opts.timing);
    if (opts.out_csv.empty()) {
        out << csv;
    } else {
        write_file(opts.out_csv, csv);
    }
    if (!opts.extremes_csv.empty()) {
        write_file(opts.extremes_csv, format_extremes_csv(report));
    }
    return 0;
}

int cmd_oracle(const OracleOptions& opts, std::ostream& out)
{
    const Instance inst = load_instance(opts.instance_path);
    if (opts.solution_path.empty()) {
        oracle::ExactLimits limits;
        limits.max_relocations = opts.max_relocations;
        limits.max_containers = opts.max_containers;
        std::optional<int> best;
        try {
            best = oracle::exact_solve(inst, limits);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        out << "lower_bound=" << global_lower_bound(inst) << '\n';
        if (best) {
            out << "optimum R=" << *best << '\n';
        } else {
            out << "optimum exceeds " << opts.max_relocations << " relocations\n";
        }
        return 0;
    }

    const Solution sol = load_solution(opts.solution_path);
    const auto report = validate(inst, sol);
    if (!report.ok) {
        throw UsageError("solution is invalid: " + report.message);
    }
    const auto stats = container_stats(inst, sol);
    int first = 1;
    int last = inst.n_containers;
    if (opts.container) {
        if (*opts.container < 1 || *opts.container > inst.n_containers) {
            throw UsageError("container out of range");
        }
        first = last = *opts.container;
    }
    out << "container,f_n,lb_n,graph_opt,dp_opt,dp_improved\n";
    int mismatches = 0;
    for (int n = first; n <= last; ++n) {
        const auto graph = oracle::explicit_graph_opt(inst, sol, n);
        const auto dp = opt_n(inst, sol, n, SpeedupOptions::none());
        out << n << ',' << stats.f(n) << ',' << stats.lb(n) << ',' << (graph ? std::to_string(*graph) : "none") << ','
            << dp.best_cost << ',' << (dp.improved ? 1 : 0) << '\n';
        if (!graph || *graph != dp.best_cost) {
            ++mismatches;
        }
    }
    return mismatches == 0 ? 0 : 1;
}

int default_jobs()
{
    if (const char* env = std::getenv("BRP_JOBS")) {
        const int v = std::atoi(env);
        if (v > 0) {
            return v;
        }
    }
    return 1;
}

} // namespace brp::cli
