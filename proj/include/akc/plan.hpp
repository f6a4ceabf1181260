#pragma once

#include "akc/lexer.hpp"
#include "akc/theory.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace akc {

// A literal referenced by fluent name, so plans can exist without a theory.
struct PlanLiteral {
    std::string fluent;
    bool positive = true;

    [[nodiscard]] std::string str() const { return positive ? fluent : "neg(" + fluent + ")"; }
    friend auto operator<=>(const PlanLiteral&, const PlanLiteral&) = default;
};

struct CaseBranch;

struct CaseStep {
    std::string action;
    std::vector<CaseBranch> branches;
};

// [a1; ...; ak] optionally followed by a sensing action with its cases.
// The empty plan has no actions and no case step.
struct ConditionalPlan {
    std::vector<std::string> sequence;
    std::optional<CaseStep> cases;

    [[nodiscard]] bool empty() const { return sequence.empty() && !cases; }

    static ConditionalPlan of(std::vector<std::string> actions) { return {std::move(actions), std::nullopt}; }
};

struct CaseBranch {
    PlanLiteral label;
    ConditionalPlan plan;
};

inline bool operator==(const CaseBranch& a, const CaseBranch& b);
inline bool operator==(const CaseStep& a, const CaseStep& b)
{
    return a.action == b.action && a.branches == b.branches;
}
inline bool operator==(const ConditionalPlan& a, const ConditionalPlan& b)
{
    return a.sequence == b.sequence && a.cases == b.cases;
}
inline bool operator==(const CaseBranch& a, const CaseBranch& b) { return a.label == b.label && a.plan == b.plan; }

[[nodiscard]] inline PlanLiteral to_plan_literal(const ActionTheory& t, Literal l)
{
    return {t.fluents().at(l.fluent), l.positive};
}

// size([]) = 0, size([a;p]) = 1 + size(p),
// size([a;cases(g_j -> p_j)]) = 1 + sum(1 + size(p_j)).
[[nodiscard]] inline std::size_t plan_size(const ConditionalPlan& p)
{
    std::size_t n = p.sequence.size();
    if (p.cases) {
        n += 1;
        for (const auto& b : p.cases->branches)
            n += 1 + plan_size(b.plan);
    }
    return n;
}

// Largest number of actions on a root-to-leaf path.
[[nodiscard]] inline std::size_t plan_depth(const ConditionalPlan& p)
{
    std::size_t below = 0;
    if (p.cases) {
        below = 1;
        for (const auto& b : p.cases->branches)
            below = std::max(below, 1 + plan_depth(b.plan));
    }
    return p.sequence.size() + below;
}

// Number of leaves of the plan tree.
[[nodiscard]] inline std::size_t plan_width(const ConditionalPlan& p)
{
    if (!p.cases)
        return 1;
    std::size_t n = 0;
    for (const auto& b : p.cases->branches)
        n += plan_width(b.plan);
    return n;
}

[[nodiscard]] inline std::string print_plan(const ConditionalPlan& p)
{
    std::string out = "[";
    for (std::size_t i = 0; i < p.sequence.size(); ++i) {
        if (i > 0)
            out += "; ";
        out += p.sequence[i];
    }
    if (p.cases) {
        if (!p.sequence.empty())
            out += "; ";
        out += p.cases->action + "; cases(";
        for (std::size_t i = 0; i < p.cases->branches.size(); ++i) {
            if (i > 0)
                out += "; ";
            out += p.cases->branches[i].label.str() + " -> " + print_plan(p.cases->branches[i].plan);
        }
        out += ")";
    }
    return out + "]";
}

class PlanError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Checks a plan against a theory: actions exist, only the action before
// cases is sensing, and branch labels are exactly its sensed literals.
inline void check_plan(const ActionTheory& t, const ConditionalPlan& p)
{
    for (const auto& name : p.sequence) {
        const auto id = t.find_action(name);
        if (!id)
            throw PlanError("unknown action '" + name + "'");
        if (t.is_sensing(*id))
            throw PlanError("sensing action '" + name + "' must be followed by cases");
    }
    if (!p.cases)
        return;
    const auto id = t.find_action(p.cases->action);
    if (!id)
        throw PlanError("unknown action '" + p.cases->action + "'");
    const KProposition* k = t.k_proposition(*id);
    if (!k)
        throw PlanError("action '" + p.cases->action + "' does not sense anything");
    std::vector<PlanLiteral> expected;
    for (const Literal l : k->sensed)
        expected.push_back(to_plan_literal(t, l));
    std::vector<PlanLiteral> labels;
    for (const auto& b : p.cases->branches)
        labels.push_back(b.label);
    auto sorted_expected = expected;
    std::sort(sorted_expected.begin(), sorted_expected.end());
    std::sort(labels.begin(), labels.end());
    if (labels != sorted_expected)
        throw PlanError("branch labels of '" + p.cases->action + "' do not match its sensed literals");
    for (const auto& b : p.cases->branches)
        check_plan(t, b.plan);
}

namespace detail {

inline PlanLiteral parse_plan_literal(TokenStream& ts)
{
    const Token& first = ts.expect(TokenKind::Ident);
    if (first.text == "neg" && ts.accept(TokenKind::LParen)) {
        PlanLiteral l{ts.expect(TokenKind::Ident).text, false};
        ts.expect(TokenKind::RParen);
        return l;
    }
    return {first.text, true};
}

inline ConditionalPlan parse_plan_body(TokenStream& ts)
{
    ConditionalPlan p;
    ts.expect(TokenKind::LBracket);
    if (ts.accept(TokenKind::RBracket))
        return p;
    for (;;) {
        const Token& step = ts.expect(TokenKind::Ident);
        if (step.text == "cases")
            throw ParseError("cases must follow a sensing action", step.pos);
        const std::string action = step.text;
        if (ts.accept(TokenKind::RBracket)) {
            p.sequence.push_back(action);
            return p;
        }
        ts.expect(TokenKind::Semicolon);
        if (ts.at(TokenKind::Ident) && ts.peek().text == "cases" && ts.peek(1).kind == TokenKind::LParen) {
            ts.next();
            ts.next();
            CaseStep c{action, {}};
            do {
                PlanLiteral label = parse_plan_literal(ts);
                ts.expect(TokenKind::Arrow);
                c.branches.push_back({std::move(label), parse_plan_body(ts)});
            } while (ts.accept(TokenKind::Semicolon));
            ts.expect(TokenKind::RParen);
            ts.expect(TokenKind::RBracket);
            p.cases = std::move(c);
            return p;
        }
        p.sequence.push_back(action);
    }
}

} // namespace detail

// plan := "[" (step (";" step)*)? "]" ; the last step may be
// "a; cases(g -> plan; ...)".
[[nodiscard]] inline ConditionalPlan parse_plan(std::string_view text)
{
    TokenStream ts{text};
    ConditionalPlan p = detail::parse_plan_body(ts);
    if (!ts.at_end())
        ts.fail("unexpected " + ts.found() + " after plan");
    return p;
}

[[nodiscard]] inline ConditionalPlan parse_plan(std::string_view text, const ActionTheory& t)
{
    ConditionalPlan p = parse_plan(text);
    check_plan(t, p);
    return p;
}

} // namespace akc
