#include "test_util.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <functional>

using namespace akc;

namespace {

// Kleene values as 0, 1, 2 (false, unknown, true): and = min, or = max, not = 2 - x.
int oracle(const LiteralSet& s, const Formula& f)
{
    switch (f.kind()) {
    case Formula::Kind::Literal:
        return s.contains(f.leaf()) ? 2 : s.contains(f.leaf().complement()) ? 0 : 1;
    case Formula::Kind::Not:
        return 2 - oracle(s, f.operands()[0]);
    case Formula::Kind::And:
        return std::min(oracle(s, f.operands()[0]), oracle(s, f.operands()[1]));
    case Formula::Kind::Or:
        return std::max(oracle(s, f.operands()[0]), oracle(s, f.operands()[1]));
    }
    return -1;
}

int as_int(TruthValue v) { return v == TruthValue::False ? 0 : v == TruthValue::Unknown ? 1 : 2; }

std::vector<Formula> formulas_upto(int depth)
{
    std::vector<Formula> out;
    for (FluentId f = 0; f < 2; ++f)
        for (bool pos : {true, false})
            out.push_back(Formula::literal({f, pos}));
    for (int d = 1; d < depth; ++d) {
        const auto prev = out;
        for (const auto& a : prev)
            out.push_back(Formula::negation(a));
        // binary nodes over a sample of the previous level keep the set manageable
        const std::size_t n = std::min<std::size_t>(prev.size(), 24);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                out.push_back(Formula::conjunction(prev[i], prev[j]));
                out.push_back(Formula::disjunction(prev[i], prev[j]));
            }
    }
    return out;
}

std::vector<LiteralSet> consistent_sets(std::size_t n)
{
    std::vector<LiteralSet> out;
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i)
        total *= 3;
    for (std::size_t code = 0; code < total; ++code) {
        LiteralSet s{n};
        std::size_t c = code;
        for (FluentId f = 0; f < n; ++f, c /= 3)
            if (c % 3 == 1)
                s.insert({f, true});
            else if (c % 3 == 2)
                s.insert({f, false});
        out.push_back(s);
    }
    return out;
}

} // namespace

TEST(Literal, ComplementIsInvolution)
{
    const Literal l{3, true};
    EXPECT_EQ(l.complement(), (Literal{3, false}));
    EXPECT_EQ(l.complement().complement(), l);
    EXPECT_NE(l.code(), l.complement().code());
    EXPECT_EQ(Literal::from_code(l.code()), l);
}

TEST(LiteralSet, ConsistencyAndCompleteness)
{
    LiteralSet s{70};
    EXPECT_TRUE(s.consistent());
    EXPECT_TRUE(s.empty());
    s.insert({65, true});
    s.insert({2, false});
    EXPECT_TRUE(s.consistent());
    EXPECT_FALSE(s.complete());
    EXPECT_EQ(s.size(), 2u);
    s.insert({65, false});
    EXPECT_FALSE(s.consistent());
    s.erase({65, false});
    EXPECT_TRUE(s.consistent());
}

TEST(LiteralSet, SetAlgebra)
{
    const LiteralSet a{3, {{0, true}, {1, false}}};
    const LiteralSet b{3, {{0, true}, {1, false}, {2, true}}};
    EXPECT_TRUE(a.is_subset_of(b));
    EXPECT_FALSE(b.is_subset_of(a));
    EXPECT_TRUE(holds(b, a));
    EXPECT_EQ(a | b, b);
    EXPECT_EQ(a & b, a);
    const LiteralSet c = a.complemented();
    EXPECT_TRUE(c.contains({0, false}));
    EXPECT_TRUE(c.contains({1, true}));
    EXPECT_FALSE(a.intersects(c));
    EXPECT_FALSE(possibly_holds(b, c));
    EXPECT_TRUE(possibly_holds(LiteralSet{3}, c));
}

TEST(LiteralSet, IterationFollowsCodes)
{
    const LiteralSet s{40, {{33, false}, {1, true}, {20, true}}};
    const std::vector<Literal> expected{{1, true}, {20, true}, {33, false}};
    EXPECT_EQ(s.literals(), expected);
}

TEST(Formula, WindowExamples)
{
    const auto& t = test::window();
    const LiteralSet sigma = test::set(t, {"-open", "closed"});
    EXPECT_EQ(eval_formula(sigma, parse_formula(t, "closed")), TruthValue::True);
    EXPECT_EQ(eval_formula(sigma, parse_formula(t, "open | closed")), TruthValue::True);
    EXPECT_EQ(eval_formula(sigma, parse_formula(t, "open & locked")), TruthValue::False);
    EXPECT_EQ(eval_formula(sigma, parse_formula(t, "locked")), TruthValue::Unknown);
    EXPECT_EQ(eval_formula(sigma, parse_formula(t, "locked | ~locked")), TruthValue::Unknown);
    EXPECT_EQ(eval_formula(sigma, parse_formula(t, "~(open | locked) & closed")), TruthValue::Unknown);
}

TEST(Formula, RejectsInconsistentSet)
{
    const LiteralSet bad{1, {{0, true}, {0, false}}};
    EXPECT_THROW((void)eval_formula(bad, Formula::literal({0, true})), std::invalid_argument);
}

TEST(Formula, MatchesKleeneTablesExhaustively)
{
    const auto sets = consistent_sets(2);
    const auto formulas = formulas_upto(3);
    ASSERT_GT(formulas.size(), 1000u);
    for (const auto& f : formulas)
        for (const auto& s : sets)
            ASSERT_EQ(as_int(eval_formula(s, f)), oracle(s, f));
}

TEST(Formula, DefiniteValuesAgreeWithEveryCompletion)
{
    const auto sets = consistent_sets(2);
    std::vector<LiteralSet> complete;
    std::copy_if(sets.begin(), sets.end(), std::back_inserter(complete), [](const auto& s) { return s.complete(); });
    for (const auto& f : formulas_upto(3))
        for (const auto& s : sets) {
            const auto v = eval_formula(s, f);
            if (v == TruthValue::Unknown)
                continue;
            for (const auto& c : complete)
                if (s.is_subset_of(c))
                    ASSERT_EQ(eval_formula(c, f), v);
        }
}
