#include "random_theory.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

using namespace akc;
using namespace akc::test;

TEST(Properties, NonSensingResultIsSoundAndDeterministic)
{
    std::mt19937 rng{7};
    const auto theories = consistent_theories(11, 500, {});
    std::size_t checked = 0;
    for (const auto& t : theories) {
        for (const auto& s : all_states(t)) {
            const auto lits = s.literals();
            for (int trial = 0; trial < 4; ++trial) {
                LiteralSet sub = t.empty_set();
                for (const Literal l : lits)
                    if (std::bernoulli_distribution{0.5}(rng))
                        sub.insert(l);
                const AState delta = closure(t, sub);
                ASSERT_TRUE(delta.is_subset_of(s));
                for (ActionId a = 0; a < t.actions().size(); ++a) {
                    if (t.is_sensing(a) || !is_executable(t, a, delta))
                        continue;
                    const auto r = phi(t, a, delta);
                    ASSERT_FALSE(r.is_undefined());
                    ASSERT_EQ(r.states().size(), 1u) << print_theory(t) << t.format_set(delta);
                    for (const auto& s1 : res_c_oracle(t, a, s))
                        ASSERT_TRUE(r.states().front().is_subset_of(s1)) << print_theory(t);
                    ++checked;
                }
            }
        }
    }
    EXPECT_GT(checked, 1000u);
}

TEST(Properties, SensingKeepsAValidAState)
{
    const auto theories = consistent_theories(23, 200, {4, 3, true});
    for (const auto& t : theories) {
        const ActionId a = 0;
        ASSERT_TRUE(t.is_sensing(a));
        for (const auto& delta : all_literal_sets(t.fluent_count())) {
            if (!delta.consistent() || closure(t, delta) != delta || !is_valid_astate(t, delta) ||
                !is_executable(t, a, delta))
                continue;
            const auto r = phi(t, a, delta);
            ASSERT_TRUE(std::any_of(r.states().begin(), r.states().end(),
                                    [&](const AState& d) { return is_valid_astate(t, d); }))
                << print_theory(t) << t.format_set(delta);
        }
    }
}

TEST(Properties, ExecutablePlansKeepAValidAState)
{
    const auto theories = consistent_theories(31, 60, {4, 3, true});
    std::size_t executable = 0;
    for (const auto& t : theories) {
        const AState init = initial_astate(t);
        for_each_plan(t, 3, [&](const ConditionalPlan& p) {
            const auto r = phi_hat(t, p, init);
            if (r.is_undefined())
                return;
            ++executable;
            ASSERT_TRUE(std::any_of(r.states().begin(), r.states().end(),
                                    [&](const AState& d) { return is_valid_astate(t, d); }))
                << print_theory(t) << print_plan(p);
        });
    }
    EXPECT_GT(executable, 1000u);
}

TEST(Properties, ClosureIsExtensiveIdempotentMonotone)
{
    std::mt19937 rng{3};
    const auto sets = all_literal_sets(3);
    for (int trial = 0; trial < 40; ++trial) {
        TheoryBuilder b;
        for (const char* f : {"f", "g", "h"})
            b.fluent(f);
        for (int i = 0, k = std::uniform_int_distribution<int>{1, 5}(rng); i < k; ++i)
            b.static_law(random_literal(rng, 3), random_literals(rng, 3, 1, 3));
        b.goal(b.pos("f"));
        const auto t = b.build();
        std::vector<LiteralSet> closed;
        for (const auto& s : sets) {
            const auto c = closure(t, s);
            ASSERT_TRUE(s.is_subset_of(c));
            ASSERT_EQ(closure(t, c), c);
            closed.push_back(c);
        }
        for (std::size_t i = 0; i < sets.size(); ++i)
            for (std::size_t j = 0; j < sets.size(); ++j)
                if (sets[i].is_subset_of(sets[j]))
                    ASSERT_TRUE(closed[i].is_subset_of(closed[j]));
    }
}

TEST(Properties, ReductOfPlannerOutputIsASolution)
{
    const std::vector<std::pair<bench::Family, std::vector<int>>> instances{
        {bench::Family::BT, {2}},    {bench::Family::BTC, {4}},  {bench::Family::BMTUC, {2, 2}},
        {bench::Family::RING, {2}},  {bench::Family::BTS1, {2}}, {bench::Family::MED, {2}},
        {bench::Family::SICK, {4}},  {bench::Family::RINGS, {1}}, {bench::Family::DOMS, {2}}};
    for (const auto& [family, params] : instances) {
        const auto t = bench::generate(family, params);
        SearchBudget budget;
        budget.w_max = 6;
        const auto r = solve_iterative(t, budget);
        ASSERT_EQ(r.status, SearchStatus::Found) << bench::info(family).name;
        const AState init = initial_astate(t);
        const auto reduced = reduct(t, init, r.plan);
        EXPECT_TRUE(is_solution(t, reduced)) << bench::info(family).name;
        EXPECT_EQ(reduct(t, init, reduced), reduced);
        EXPECT_LE(plan_size(reduced), plan_size(r.plan));
    }
}

TEST(Properties, ReductOnRandomSolutions)
{
    const auto theories = consistent_theories(41, 250, {4, 3, true});
    std::size_t solutions = 0;
    for (const auto& t : theories) {
        const AState init = initial_astate(t);
        for_each_plan(t, 2, [&](const ConditionalPlan& p) {
            if (!is_solution(t, p))
                return;
            ++solutions;
            const auto reduced = reduct(t, init, p);
            ASSERT_TRUE(is_solution(t, reduced)) << print_theory(t) << print_plan(p);
            ASSERT_EQ(reduct(t, init, reduced), reduced);
            ASSERT_EQ(reduct(t, init, p), reduced);
        });
    }
    EXPECT_GT(solutions, 100u);
}
