#include "test_util.hpp"

#include <gtest/gtest.h>

using namespace akc;

namespace {

std::vector<int> small_params(const bench::FamilyInfo& f)
{
    if (f.family == bench::Family::MED)
        return {2};
    return std::vector<int>(f.arity, 2);
}

} // namespace

TEST(Bench, EveryFamilyValidatesAndRoundTrips)
{
    for (const auto& f : bench::families()) {
        const auto t = bench::generate(f.family, small_params(f));
        EXPECT_TRUE(validate_theory(t).empty()) << f.name;
        if (t.fluent_count() <= 10)
            EXPECT_TRUE(is_consistent_theory(t)) << f.name;
        EXPECT_EQ(parse_theory(print_theory(t)), t) << f.name;
    }
}

TEST(Bench, FamilyNamesAreCaseInsensitive)
{
    EXPECT_EQ(bench::parse_family("bmtc"), bench::Family::BMTC);
    EXPECT_EQ(bench::parse_family("Rings"), bench::Family::RINGS);
    EXPECT_FALSE(bench::parse_family("toilet").has_value());
    EXPECT_EQ(bench::families().size(), 16u);
}

TEST(Bench, BadParametersAreRejected)
{
    EXPECT_THROW((void)bench::generate(bench::Family::BT, {}), std::invalid_argument);
    EXPECT_THROW((void)bench::generate(bench::Family::BMT, {2}), std::invalid_argument);
    EXPECT_THROW((void)bench::generate(bench::Family::DOM, {0}), std::invalid_argument);
    EXPECT_THROW((void)bench::generate(bench::Family::MED, {6}), std::invalid_argument);
}

TEST(Bench, BombSizes)
{
    const auto bt = bench::generate(bench::Family::BT, {4});
    EXPECT_EQ(bt.fluent_count(), 8u);
    EXPECT_EQ(bt.actions().size(), 4u);
    const auto bmt = bench::generate(bench::Family::BMT, {4, 2});
    EXPECT_EQ(bmt.fluent_count(), 8u);
    EXPECT_EQ(bmt.actions().size(), 8u);
    const auto bmtc = bench::generate(bench::Family::BMTC, {4, 2});
    EXPECT_EQ(bmtc.fluent_count(), 10u);
    EXPECT_EQ(bmtc.actions().size(), 10u);
    const auto bts = bench::generate(bench::Family::BTS1, {3});
    EXPECT_EQ(bts.k_propositions().size(), 3u);
}

TEST(Bench, DominoSizes)
{
    const auto dom = bench::generate(bench::Family::DOM, {50});
    EXPECT_EQ(dom.fluent_count(), 50u);
    EXPECT_EQ(dom.actions().size(), 1u);
    EXPECT_EQ(dom.static_laws().size(), 49u);
}

TEST(Bench, SmallInstancesSolve)
{
    SearchBudget budget;
    budget.w_max = 4;
    const auto r = solve_iterative(bench::generate(bench::Family::BT, {2}), budget);
    ASSERT_EQ(r.status, SearchStatus::Found);
    EXPECT_EQ(r.h, 2u);
    EXPECT_EQ(r.w, 1u);
}
