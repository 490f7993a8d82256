#include "cli/commands.hpp"

#include "brp/io.hpp"

#include "fixtures.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

namespace brp {
namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
protected:
    void SetUp() override
    {
        dir = fs::temp_directory_path() /
              ("brp_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir);
        fs::create_directories(dir);
        instance = (dir / "fig1.txt").string();
        solution = (dir / "table1.sol").string();
        write_file(instance, write_instance(testing::figure1_instance()));
        write_file(solution, write_solution(testing::table1_solution()));
    }
    void TearDown() override { fs::remove_all(dir); }

    fs::path dir;
    std::string instance;
    std::string solution;
};

std::vector<std::string> lines_of(const std::string& text)
{
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        out.push_back(line);
    }
    return out;
}

std::vector<std::string> split(const std::string& line)
{
    std::vector<std::string> out;
    std::istringstream in(line);
    for (std::string cell; std::getline(in, cell, ',');) {
        out.push_back(cell);
    }
    return out;
}

TEST_F(CliTest, ValidateWorkedExample)
{
    std::ostringstream out;
    EXPECT_EQ(cli::cmd_validate({instance, solution}, out), 0);
    EXPECT_EQ(out.str(), "valid: N=5 R=3 lower_bound=2\n");

    auto broken = testing::table1_solution();
    broken.moves[1] = Move::retrieve(2);
    const auto bad = (dir / "bad.sol").string();
    write_file(bad, write_solution(broken));
    std::ostringstream out2;
    EXPECT_EQ(cli::cmd_validate({instance, bad}, out2), 1);
    EXPECT_NE(out2.str().find("move 2"), std::string::npos);
}

TEST_F(CliTest, ImproveWorkedExample)
{
    cli::ImproveOptions opts;
    opts.instance_path = instance;
    opts.solution_path = solution;
    opts.out_path = (dir / "improved.sol").string();
    opts.log_path = (dir / "improve.csv").string();
    std::ostringstream out;
    EXPECT_EQ(cli::cmd_improve(opts, out), 0);
    const auto improved = parse_solution(read_file(opts.out_path));
    EXPECT_EQ(improved.relocation_count(), 2);
    EXPECT_TRUE(validate(testing::figure1_instance(), improved).ok);
    EXPECT_EQ(read_file(opts.log_path), "sweep,container,old_f,new_f,aspirated\n1,3,2,1,1\n");
}

TEST_F(CliTest, SolveAndErrors)
{
    cli::SolveOptions opts{instance, "greedy", 1, (dir / "g.sol").string()};
    std::ostringstream out;
    EXPECT_EQ(cli::cmd_solve(opts, out), 0);
    EXPECT_EQ(parse_solution(read_file(opts.out_path)).relocation_count(), 2);

    opts.heuristic = "annealing";
    EXPECT_THROW(cli::cmd_solve(opts, out), cli::UsageError);

    write_file((dir / "broken.txt").string(), "3 5 3\n2 1 3\n");
    opts.instance_path = (dir / "broken.txt").string();
    opts.heuristic = "greedy";
    EXPECT_THROW(cli::cmd_solve(opts, out), cli::UsageError);
}

TEST_F(CliTest, GenerateIsReproducible)
{
    cli::GenerateOptions opts;
    opts.params = GeneratorParams{3, 4, HeightPolicy::h_plus_2, 9, 3};
    opts.out_dir = (dir / "a").string();
    const auto a = cli::cmd_generate(opts);
    opts.out_dir = (dir / "b").string();
    const auto b = cli::cmd_generate(opts);
    ASSERT_EQ(a.size(), 3u);
    EXPECT_EQ(fs::path(a[0]).filename(), "H3_W4_Hplus2_001.txt");
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(read_file(a[i]), read_file(b[i]));
        EXPECT_EQ(parse_instance(read_file(a[i])).h_max.raw(), 5);
    }
}

TEST_F(CliTest, BenchCsvShape)
{
    cli::BenchOptions opts;
    opts.params = GeneratorParams{3, 3, HeightPolicy::unlimited, 42, 5};
    opts.timing = false;
    const auto report = cli::run_bench(opts);
    const auto csv = cli::format_bench_csv(report, false);
    const auto lines = lines_of(csv);
    ASSERT_EQ(lines.size(), 1u + 5u + 1u);
    EXPECT_EQ(lines[0], "H,W,policy,seed,instance,heuristic,R_before,R_after,gap_pct,improved,cpu_s,timeout");

    double gap_sum = 0;
    for (int i = 1; i <= 5; ++i) {
        const auto cells = split(lines[static_cast<std::size_t>(i)]);
        ASSERT_EQ(cells.size(), 12u);
        EXPECT_EQ(cells[4], std::to_string(i));
        const int before = std::stoi(cells[6]);
        const int after = std::stoi(cells[7]);
        EXPECT_LE(after, before);
        char expect[32];
        std::snprintf(expect, sizeof expect, "%.2f", cli::percentage_gap(before, after));
        EXPECT_EQ(cells[8], expect);
        gap_sum += cli::percentage_gap(before, after);
        EXPECT_EQ(cells[10], "0.00");
    }
    const auto summary = split(lines.back());
    EXPECT_EQ(summary[4], "AVG");
    char expect[32];
    std::snprintf(expect, sizeof expect, "%.2f", gap_sum / 5);
    EXPECT_EQ(summary[8], expect);

    EXPECT_EQ(csv, cli::format_bench_csv(cli::run_bench(opts), false));
    opts.jobs = 3;
    EXPECT_EQ(csv, cli::format_bench_csv(cli::run_bench(opts), false));
}

TEST_F(CliTest, BenchExtremesAcrossStarts)
{
    cli::BenchOptions opts;
    opts.params = GeneratorParams{3, 4, HeightPolicy::h_plus_2, 5, 4};
    opts.starts = {"greedy", "random"};
    const auto report = cli::run_bench(opts);
    ASSERT_EQ(report.rows.size(), 8u);
    ASSERT_EQ(report.extremes.size(), 4u);
    for (const auto& ex : report.extremes) {
        const auto& g = report.rows[static_cast<std::size_t>(ex.instance - 1) * 2];
        const auto& r = report.rows[static_cast<std::size_t>(ex.instance - 1) * 2 + 1];
        EXPECT_EQ(ex.best_before, std::min(g.r_before, r.r_before));
        EXPECT_EQ(ex.worst_after, std::max(g.r_after, r.r_after));
    }
    const auto lines = lines_of(cli::format_bench_csv(report, true));
    EXPECT_EQ(lines.size(), 1u + 8u + 2u);
    EXPECT_EQ(split(lines[9])[5], "greedy");
    EXPECT_EQ(split(lines[10])[5], "random");
    EXPECT_EQ(lines_of(cli::format_extremes_csv(report))[0], "H,W,policy,instance,BB,WA");
}

TEST(PercentageGap, Arithmetic)
{
    EXPECT_DOUBLE_EQ(cli::percentage_gap(10, 6), 40.0);
    EXPECT_DOUBLE_EQ(cli::percentage_gap(0, 0), 0.0);
    EXPECT_DOUBLE_EQ(cli::percentage_gap(3, 3), 0.0);
}

TEST_F(CliTest, OracleSubcommand)
{
    cli::OracleOptions opts;
    opts.instance_path = instance;
    std::ostringstream exact;
    EXPECT_EQ(cli::cmd_oracle(opts, exact), 0);
    EXPECT_EQ(exact.str(), "lower_bound=2\noptimum R=2\n");

    opts.solution_path = solution;
    opts.container = 3;
    std::ostringstream one;
    EXPECT_EQ(cli::cmd_oracle(opts, one), 0);
    EXPECT_EQ(one.str(), "container,f_n,lb_n,graph_opt,dp_opt,dp_improved\n3,2,1,1,1,1\n");
}

} // namespace
} // namespace brp
