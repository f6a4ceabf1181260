#include "test_util.hpp"

#include <gtest/gtest.h>

using namespace akc;

TEST(Planner, FindsMinimalConditionalPlan)
{
    const auto& t = test::window();
    const auto r = solve_conditional(t, 2, 3);
    ASSERT_EQ(r.status, SearchStatus::Found);
    EXPECT_EQ(r.plan, test::window_plan(2));
    EXPECT_TRUE(is_solution(t, r.plan));
}

TEST(Planner, TooNarrowOrShallowBoundsFail)
{
    const auto& t = test::window();
    EXPECT_EQ(solve_conditional(t, 2, 2).status, SearchStatus::NoPlan);
    EXPECT_EQ(solve_conditional(t, 1, 3).status, SearchStatus::NoPlan);
}

TEST(Planner, IterativeReportsSmallestBounds)
{
    SearchBudget budget;
    budget.h_max = 5;
    budget.w_max = 5;
    const auto r = solve_iterative(test::window(), budget);
    ASSERT_EQ(r.status, SearchStatus::Found);
    EXPECT_EQ(r.h, 2u);
    EXPECT_EQ(r.w, 3u);
    EXPECT_EQ(plan_width(r.plan), 3u);
    EXPECT_GT(r.nodes, 0u);
}

TEST(Planner, NoConformantPlanForWindow)
{
    const auto& t = test::window();
    for (std::size_t h = 1; h <= 10; ++h)
        EXPECT_EQ(solve_conformant(t, h).status, SearchStatus::NoPlan) << h;
    SearchBudget budget;
    budget.h_max = 10;
    budget.w_max = 1;
    EXPECT_EQ(solve_iterative(t, budget).status, SearchStatus::NoPlan);
}

TEST(Planner, NodeLimitExhaustsBudget)
{
    SearchBudget budget;
    budget.h_max = 10;
    budget.w_max = 1;
    budget.node_limit = 3;
    EXPECT_EQ(solve_iterative(test::window(), budget).status, SearchStatus::BudgetExhausted);
    EXPECT_EQ(solve_conditional(test::window(), 10, 1, budget).status, SearchStatus::BudgetExhausted);
}

TEST(Planner, GoalAlreadyKnownGivesEmptyPlan)
{
    const auto t = parse_theory("fluent(f). action(a). executable(a,[]). causes(a,f,[]). initially(f). goal(f).");
    SearchBudget budget;
    const auto r = solve_iterative(t, budget);
    ASSERT_EQ(r.status, SearchStatus::Found);
    EXPECT_TRUE(r.plan.empty());
}

TEST(Planner, ConformantSequence)
{
    const auto t = parse_theory("fluent(f). fluent(g). action(a). action(b)."
                                "executable(a,[]). executable(b,[f]). causes(a,f,[]). causes(b,g,[])."
                                "goal(g).");
    SearchBudget budget;
    const auto r = solve_iterative(t, budget);
    ASSERT_EQ(r.status, SearchStatus::Found);
    EXPECT_EQ(print_plan(r.plan), "[a; b]");
    EXPECT_EQ(r.h, 2u);
    EXPECT_EQ(r.w, 1u);
}

TEST(Planner, DeterministicAcrossRuns)
{
    SearchBudget budget;
    budget.w_max = 4;
    const auto t = bench::generate(bench::Family::SICK, {3});
    const auto a = solve_iterative(t, budget);
    const auto b = solve_iterative(t, budget);
    ASSERT_EQ(a.status, SearchStatus::Found);
    EXPECT_EQ(a.plan, b.plan);
    EXPECT_EQ(a.nodes, b.nodes);
}
