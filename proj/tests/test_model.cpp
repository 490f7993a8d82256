#include "brp/model.hpp"

#include "fixtures.hpp"

#include <gtest/gtest.h>

namespace brp {
namespace {

using testing::figure1_instance;
using testing::table1_solution;

TEST(Instance, RejectsDuplicatesGapsAndTallStacks)
{
    EXPECT_THROW(Instance::make(Bay({{1, 1}}), HeightLimit::unlimited()), std::invalid_argument);
    EXPECT_THROW(Instance::make(Bay({{1, 3}}), HeightLimit::unlimited()), std::invalid_argument);
    EXPECT_THROW(Instance::make(Bay({{1, 2, 3}}), HeightLimit::bounded(2)), std::invalid_argument);
    EXPECT_THROW(Instance::make(Bay(std::vector<std::vector<int>>{}), HeightLimit::unlimited()),
                 std::invalid_argument);
    EXPECT_NO_THROW(Instance::make(Bay({{}, {}}), HeightLimit::unlimited()));
}

TEST(Validate, AcceptsTheWorkedExample)
{
    const auto report = validate(figure1_instance(), table1_solution());
    EXPECT_TRUE(report.ok) << report.message;
    EXPECT_EQ(table1_solution().relocation_count(), 3);
    // N + R moves, N + R + 1 configurations
    EXPECT_EQ(table1_solution().moves.size(), 5u + 3u);
}

TEST(Validate, EmptyInstanceEmptySolution)
{
    const auto inst = Instance::make(Bay({{}, {}}), HeightLimit::unlimited());
    EXPECT_TRUE(validate(inst, Solution{}).ok);
}

TEST(Validate, PinpointsTamperedRetrieval)
{
    auto sol = table1_solution();
    sol.moves[1] = Move::retrieve(2);
    const auto report = validate(figure1_instance(), sol);
    EXPECT_FALSE(report.ok);
    EXPECT_EQ(report.move_index, 2u);
    EXPECT_NE(report.message.find("top container is 3"), std::string::npos) << report.message;
}

TEST(Validate, ReportsEachKindOfViolation)
{
    const auto inst = figure1_instance();
    auto first_violation = [&](Solution sol) { return validate(inst, sol); };

    auto r = first_violation(Solution{{Move::relocate(1, 1)}});
    EXPECT_EQ(r.move_index, 1u);
    r = first_violation(Solution{{Move::relocate(4, 1)}});
    EXPECT_EQ(r.move_index, 1u);
    r = first_violation(Solution{{Move::relocate(1, 2), Move::relocate(3, 2)}});
    EXPECT_EQ(r.move_index, 2u); // stack 2 already holds three containers
    EXPECT_NE(r.message.find("full"), std::string::npos);

    auto truncated = table1_solution();
    truncated.moves.pop_back();
    r = first_violation(truncated);
    EXPECT_FALSE(r.ok);
    EXPECT_EQ(r.move_index, 0u);
}

TEST(LowerBound, PerContainerOnFigure1)
{
    const auto inst = figure1_instance();
    EXPECT_EQ(lb_container(inst, 3), 1);
    EXPECT_EQ(lb_container(inst, 4), 1);
    EXPECT_EQ(lb_container(inst, 5), 0);
    EXPECT_EQ(lb_container(inst, 1), 0);
    EXPECT_THROW(lb_container(inst, 0), std::out_of_range);
    EXPECT_THROW(lb_container(inst, 6), std::out_of_range);
}

TEST(LowerBound, Global)
{
    EXPECT_EQ(global_lower_bound(figure1_instance()), 2);
    EXPECT_EQ(global_lower_bound(Instance::make(Bay({{3, 2, 1}}), HeightLimit::unlimited())), 0);
    EXPECT_EQ(global_lower_bound(Instance::make(Bay({{1, 2, 3}}), HeightLimit::unlimited())), 2);
}

TEST(LowerBound, SmallestOnTopMeansZeroEverywhere)
{
    const auto inst = Instance::make(Bay({{6, 4, 1}, {5, 3, 2}}), HeightLimit::unlimited());
    for (int n = 1; n <= inst.n_containers; ++n) {
        EXPECT_EQ(lb_container(inst, n), 0) << n;
    }
}

TEST(ContainerStats, CountsRelocationsByReplay)
{
    const auto stats = container_stats(figure1_instance(), table1_solution());
    EXPECT_EQ(stats.f(3), 2);
    EXPECT_EQ(stats.f(4), 1);
    EXPECT_EQ(stats.f(1), 0);
    EXPECT_EQ(stats.f(2), 0);
    EXPECT_EQ(stats.f(5), 0);
    EXPECT_EQ(stats.lb(3), 1);
    EXPECT_EQ(stats.initial_position[4], (Position{2, 2}));
    for (int n = 1; n <= 5; ++n) {
        EXPECT_GE(stats.f(n), stats.lb(n));
    }
}

TEST(ContainerStats, RejectsInvalidSolutions)
{
    auto sol = table1_solution();
    sol.moves[1] = Move::retrieve(2);
    EXPECT_THROW(container_stats(figure1_instance(), sol), std::invalid_argument);
}

TEST(ContainerStats, ZeroRelocationSolution)
{
    const auto inst = Instance::make(Bay({{3, 2, 1}}), HeightLimit::unlimited());
    const Solution sol{{Move::retrieve(1), Move::retrieve(1), Move::retrieve(1)}};
    const auto stats = container_stats(inst, sol);
    for (int n = 1; n <= 3; ++n) {
        EXPECT_EQ(stats.f(n), 0);
    }
}

TEST(HeightLimit, EffectiveBound)
{
    EXPECT_EQ(HeightLimit::unlimited().effective(7), 7);
    EXPECT_EQ(HeightLimit::bounded(4).effective(7), 4);
    EXPECT_EQ(HeightLimit::unlimited().effective(0), 1);
    EXPECT_THROW(HeightLimit::bounded(0), std::invalid_argument);
}

} // namespace
} // namespace brp
