#include "test_util.hpp"

#include <gtest/gtest.h>

using namespace akc;

namespace {

std::string violations_of(std::string_view text)
{
    try {
        (void)parse_theory(text);
    } catch (const InvalidTheory& e) {
        std::string out;
        for (const auto& v : e.violations())
            out += v + "\n";
        return out;
    }
    return {};
}

const char* kMinimal = "fluent(f). action(a). causes(a,f,[]). executable(a,[]). goal(f).";

} // namespace

TEST(TheoryIo, ParsesWindowDomain)
{
    const auto& t = test::window();
    EXPECT_EQ(t.fluents(), (std::vector<std::string>{"open", "closed", "locked"}));
    ASSERT_EQ(t.actions().size(), 4u);
    EXPECT_TRUE(t.is_sensing(test::act(t, "check")));
    EXPECT_FALSE(t.is_sensing(test::act(t, "flip_lock")));
    EXPECT_EQ(t.executability_laws().size(), 4u);
    EXPECT_EQ(t.dynamic_laws().size(), 4u);
    EXPECT_EQ(t.static_laws().size(), 9u);
    EXPECT_EQ(t.oneof_groups().size(), 1u);
    ASSERT_NE(t.k_proposition(test::act(t, "check")), nullptr);
    EXPECT_EQ(t.k_proposition(test::act(t, "check"))->sensed.size(), 3u);
    EXPECT_EQ(t.initially(), (std::vector<Literal>{test::lit(t, "-open")}));
    EXPECT_EQ(t.goal(), (std::vector<Literal>{test::lit(t, "locked")}));
}

TEST(TheoryIo, PrintParseRoundTrip)
{
    const auto& t = test::window();
    const std::string printed = print_theory(t);
    const auto again = parse_theory(printed);
    EXPECT_EQ(again, t);
    EXPECT_EQ(print_theory(again), printed);
}

TEST(TheoryIo, PrintedWindowMatchesSampleUpToTrailingSpace)
{
    std::string sample = test::slurp(std::string{AKC_SAMPLES} + "/window.akc");
    std::string cleaned;
    std::istringstream in{sample};
    for (std::string line; std::getline(in, line);) {
        while (!line.empty() && line.back() == ' ')
            line.pop_back();
        cleaned += line + "\n";
    }
    EXPECT_EQ(print_theory(test::window()), cleaned);
}

TEST(TheoryIo, CommentsAndWhitespaceAreIgnored)
{
    const auto t = parse_theory("% a comment\nfluent( f ).\n\n action(a). % trailing\n"
                                "executable(a, []).\ncauses(a, f, []).\ngoal(f).\n");
    EXPECT_EQ(t.fluents().size(), 1u);
    EXPECT_EQ(t.dynamic_laws().size(), 1u);
}

TEST(TheoryIo, DeterminesShorthandSensesBothPolarities)
{
    const auto t = parse_theory("fluent(f). action(s). executable(s,[]). determines(s,f). goal(f).");
    const auto* k = t.k_proposition(0);
    ASSERT_NE(k, nullptr);
    EXPECT_TRUE(is_complementary_pair(k->sensed));
}

TEST(TheoryIo, ParseErrorsCarryPositions)
{
    try {
        (void)parse_theory("fluent(f).\naction(a).\ncauses(a,g,[]).\ngoal(f).");
        FAIL() << "expected a parse error";
    } catch (const ParseError& e) {
        EXPECT_NE(std::string{e.what()}.find("3:"), std::string::npos) << e.what();
        EXPECT_NE(std::string{e.what()}.find("unknown fluent 'g'"), std::string::npos) << e.what();
    }
    EXPECT_THROW((void)parse_theory("fluent(f)"), ParseError);
    EXPECT_THROW((void)parse_theory("fluent(f). causes(a,f,[]). goal(f)."), ParseError);
    EXPECT_THROW((void)parse_theory("fluent(f). action(a). causes(a,f). goal(f)."), ParseError);
    EXPECT_THROW((void)parse_theory("fluent(f). frobnicate(f). goal(f)."), ParseError);
    EXPECT_THROW((void)parse_theory("fluent(f). action(a). determines(a,[f]). goal(f)."), ParseError);
    EXPECT_THROW((void)parse_theory("fluent(f). oneof([f]). goal(f)."), ParseError);
    EXPECT_THROW((void)parse_theory("fluent(F). goal(F)."), ParseError);
}

TEST(TheoryIo, ValidationViolations)
{
    EXPECT_EQ(violations_of(kMinimal), "");
    EXPECT_NE(violations_of("").find("no goal"), std::string::npos);
    EXPECT_NE(violations_of("fluent(f). action(f). goal(f).").find("both as a fluent and as an action"),
              std::string::npos);
    EXPECT_NE(violations_of("fluent(f). action(s). causes(s,f,[]). determines(s,f). goal(f).")
                  .find("both sensing and non-sensing"),
              std::string::npos);
    EXPECT_NE(violations_of("fluent(f). fluent(g). action(s). determines(s,f). determines(s,g). goal(f).")
                  .find("more than one determines"),
              std::string::npos);
    EXPECT_NE(violations_of("fluent(a1). fluent(a2). fluent(a3). action(s). determines(s,[a1,a2,a3]). goal(a1).")
                  .find("missing oneof"),
              std::string::npos);
    EXPECT_NE(violations_of("fluent(f). if(f,[]). goal(f).").find("empty body"), std::string::npos);
    EXPECT_NE(violations_of("fluent(f). initially(f). initially(neg(f)). goal(f).").find("inconsistent"),
              std::string::npos);
}

TEST(TheoryIo, BuilderDeduplicates)
{
    TheoryBuilder b;
    const auto f = b.fluent("f");
    EXPECT_EQ(b.fluent("f"), f);
    const auto a = b.action("a");
    b.causes(a, b.pos("f"), {}).causes(a, b.pos("f"), {});
    b.goal(b.pos("f")).goal(b.pos("f"));
    const auto t = b.build();
    EXPECT_EQ(t.dynamic_laws().size(), 1u);
    EXPECT_EQ(t.goal().size(), 1u);
}

TEST(TheoryIo, OneofExpansion)
{
    const std::vector<Literal> theta{{0, true}, {1, true}, {2, true}};
    const auto laws = expand_oneof(theta);
    ASSERT_EQ(laws.size(), 9u);
    EXPECT_EQ(laws[0].head, (Literal{0, false}));
    EXPECT_EQ(laws[0].body, (std::vector<Literal>{{1, true}}));
    EXPECT_EQ(laws[2].head, (Literal{0, true}));
    EXPECT_EQ(laws[2].body, (std::vector<Literal>{{1, false}, {2, false}}));
    EXPECT_EQ(expand_oneof(std::vector<Literal>{{0, true}, {1, false}}).size(), 4u);
    EXPECT_THROW((void)expand_oneof(std::vector<Literal>{{0, true}}), std::invalid_argument);
}

TEST(TheoryIo, FormulaParsingAndPrinting)
{
    const auto& t = test::window();
    const auto f = parse_formula(t, "~open & (closed | neg(locked))");
    EXPECT_EQ(f.kind(), Formula::Kind::And);
    EXPECT_EQ(parse_formula(t, print_formula(t, f)), f);
}

TEST(TheoryIo, FormulaErrors)
{
    const auto& t = test::window();
    EXPECT_THROW((void)parse_formula(t, "open &"), ParseError);
    EXPECT_THROW((void)parse_formula(t, "(open"), ParseError);
    EXPECT_THROW((void)parse_formula(t, "door"), ParseError);
    EXPECT_THROW((void)parse_formula(t, "open closed"), ParseError);
}

TEST(TheoryIo, SetFormatting)
{
    const auto& t = test::window();
    EXPECT_EQ(t.format_set(test::set(t, {"locked", "-open", "-closed"})), "{neg(closed), locked, neg(open)}");
}
