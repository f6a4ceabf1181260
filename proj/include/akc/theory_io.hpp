#pragma once

#include "akc/formula.hpp"
#include "akc/lexer.hpp"
#include "akc/theory.hpp"

#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace akc {

// Raised when a syntactically correct theory breaks a structural invariant.
class InvalidTheory : public std::runtime_error {
public:
    explicit InvalidTheory(std::vector<std::string> violations)
        : std::runtime_error(join(violations)), violations_{std::move(violations)}
    {
    }
    [[nodiscard]] const std::vector<std::string>& violations() const { return violations_; }

private:
    static std::string join(const std::vector<std::string>& v)
    {
        std::string out = "invalid theory";
        for (const auto& s : v)
            out += "; " + s;
        return out;
    }
    std::vector<std::string> violations_;
};

using FluentLookup = std::function<std::optional<FluentId>(std::string_view)>;

// literal := ident | "neg(" ident ")"
inline Literal parse_literal(TokenStream& ts, const FluentLookup& lookup)
{
    const Token& first = ts.expect(TokenKind::Ident);
    bool positive = true;
    Token name = first;
    if (first.text == "neg" && ts.at(TokenKind::LParen)) {
        ts.next();
        name = ts.expect(TokenKind::Ident);
        ts.expect(TokenKind::RParen);
        positive = false;
    }
    const auto id = lookup(name.text);
    if (!id)
        throw ParseError("unknown fluent '" + name.text + "'", name.pos);
    return {*id, positive};
}

namespace detail {

// A generic declaration argument: literal-shaped term or bracketed list.
struct Arg {
    bool is_list = false;
    std::string name;
    bool negated = false;
    std::vector<Arg> items;
    SourcePos pos;
};

struct Decl {
    std::string head;
    std::vector<Arg> args;
    SourcePos pos;
};

inline Arg parse_arg(TokenStream& ts)
{
    Arg a;
    a.pos = ts.peek().pos;
    if (ts.accept(TokenKind::LBracket)) {
        a.is_list = true;
        if (!ts.at(TokenKind::RBracket)) {
            do {
                Arg item = parse_arg(ts);
                if (item.is_list)
                    throw ParseError("nested lists are not allowed", item.pos);
                a.items.push_back(std::move(item));
            } while (ts.accept(TokenKind::Comma));
        }
        ts.expect(TokenKind::RBracket);
        return a;
    }
    const Token& id = ts.expect(TokenKind::Ident);
    if (id.text == "neg" && ts.accept(TokenKind::LParen)) {
        a.name = ts.expect(TokenKind::Ident).text;
        a.negated = true;
        ts.expect(TokenKind::RParen);
    } else {
        a.name = id.text;
    }
    return a;
}

inline std::vector<Decl> parse_decls(std::string_view text)
{
    TokenStream ts{text};
    std::vector<Decl> decls;
    while (!ts.at_end()) {
        Decl d;
        d.pos = ts.peek().pos;
        d.head = ts.expect(TokenKind::Ident).text;
        ts.expect(TokenKind::LParen);
        do {
            d.args.push_back(parse_arg(ts));
        } while (ts.accept(TokenKind::Comma));
        ts.expect(TokenKind::RParen);
        ts.expect(TokenKind::Dot);
        decls.push_back(std::move(d));
    }
    return decls;
}

} // namespace detail

// Parse the declaration format used for action theories:
//   fluent(f). action(a). executable(a,[..]). causes(a,l,[..]). if(l,[..]).
//   determines(a,[..]) or determines(a,f). oneof([..]). initially(l). goal(l).
// Fluents and actions may be declared anywhere in the file.
[[nodiscard]] inline ActionTheory parse_theory(std::string_view text)
{
    const auto decls = detail::parse_decls(text);
    TheoryBuilder b;

    auto arity = [](const detail::Decl& d, std::size_t n) {
        if (d.args.size() != n)
            throw ParseError(d.head + " expects " + std::to_string(n) + " argument(s), got "
                                 + std::to_string(d.args.size()),
                             d.pos);
    };
    auto name_arg = [](const detail::Arg& a, const char* what) {
        if (a.is_list || a.negated)
            throw ParseError(std::string{"expected "} + what + " name", a.pos);
        return a.name;
    };

    for (const auto& d : decls) {
        if (d.head == "fluent") {
            arity(d, 1);
            const auto n = name_arg(d.args[0], "fluent");
            if (n == "neg")
                throw ParseError("'neg' is reserved", d.args[0].pos);
            b.fluent(n);
        } else if (d.head == "action") {
            arity(d, 1);
            b.action(name_arg(d.args[0], "action"));
        }
    }

    auto literal = [&](const detail::Arg& a) {
        if (a.is_list)
            throw ParseError("expected a literal, found a list", a.pos);
        const auto id = b.find_fluent(a.name);
        if (!id)
            throw ParseError("unknown fluent '" + a.name + "'", a.pos);
        return Literal{*id, !a.negated};
    };
    auto literals = [&](const detail::Arg& a) {
        if (!a.is_list)
            throw ParseError("expected a literal list", a.pos);
        std::vector<Literal> out;
        for (const auto& item : a.items)
            out.push_back(literal(item));
        return out;
    };
    auto action = [&](const detail::Arg& a) {
        const auto n = name_arg(a, "action");
        const auto id = b.find_action(n);
        if (!id)
            throw ParseError("unknown action '" + n + "'", a.pos);
        return *id;
    };

    for (const auto& d : decls) {
        if (d.head == "fluent" || d.head == "action") {
            continue;
        } else if (d.head == "executable") {
            arity(d, 2);
            b.executable(action(d.args[0]), literals(d.args[1]));
        } else if (d.head == "causes") {
            arity(d, 3);
            b.causes(action(d.args[0]), literal(d.args[1]), literals(d.args[2]));
        } else if (d.head == "if") {
            arity(d, 2);
            b.static_law(literal(d.args[0]), literals(d.args[1]));
        } else if (d.head == "determines") {
            arity(d, 2);
            const auto a = action(d.args[0]);
            if (d.args[1].is_list) {
                auto theta = literals(d.args[1]);
                if (theta.size() < 2)
                    throw ParseError("determines needs at least two sensed literals", d.args[1].pos);
                b.determines(a, std::move(theta));
            } else {
                const Literal f = literal(d.args[1]);
                b.determines(a, {f, f.complement()});
            }
        } else if (d.head == "oneof") {
            arity(d, 1);
            auto theta = literals(d.args[0]);
            if (theta.size() < 2)
                throw ParseError("oneof needs at least two literals", d.args[0].pos);
            b.oneof(std::move(theta));
        } else if (d.head == "initially") {
            arity(d, 1);
            b.initially(literal(d.args[0]));
        } else if (d.head == "goal") {
            arity(d, 1);
            b.goal(literal(d.args[0]));
        } else {
            throw ParseError("unknown declaration '" + d.head + "'", d.pos);
        }
    }

    ActionTheory t = b.build();
    if (auto violations = validate_theory(t); !violations.empty())
        throw InvalidTheory(std::move(violations));
    return t;
}

[[nodiscard]] inline std::string format_literal_list(const ActionTheory& t, std::span<const Literal> lits)
{
    std::string out = "[";
    for (std::size_t i = 0; i < lits.size(); ++i) {
        if (i > 0)
            out += ",";
        out += t.literal_name(lits[i]);
    }
    return out + "]";
}

// Sections in a fixed order, separated by blank lines; laws keep their
// declaration order and oneof groups are re-emitted as the macro.
[[nodiscard]] inline std::string print_theory(const ActionTheory& t)
{
    std::vector<std::string> sections;
    auto section = [&](const std::string& body) {
        if (!body.empty())
            sections.push_back(body);
    };
    const auto lits = [&](std::span<const Literal> l) { return format_literal_list(t, l); };

    std::string s;
    for (const auto& f : t.fluents())
        s += "fluent(" + f + ").\n";
    section(s);
    s.clear();
    for (const auto& a : t.actions())
        s += "action(" + a.name + ").\n";
    section(s);
    s.clear();
    for (const auto& law : t.executability_laws())
        s += "executable(" + t.action(law.action).name + "," + lits(law.precondition) + ").\n";
    section(s);
    s.clear();
    for (const auto& law : t.dynamic_laws())
        s += "causes(" + t.action(law.action).name + "," + t.literal_name(law.effect) + "," + lits(law.condition)
             + ").\n";
    section(s);
    s.clear();
    for (const auto& k : t.k_propositions())
        s += "determines(" + t.action(k.action).name + "," + lits(k.sensed) + ").\n";
    section(s);
    s.clear();
    std::optional<std::size_t> last_group;
    for (const auto& law : t.static_laws()) {
        if (law.oneof_group) {
            if (law.oneof_group != last_group)
                s += "oneof(" + lits(t.oneof_groups().at(*law.oneof_group)) + ").\n";
        } else {
            s += "if(" + t.literal_name(law.head) + "," + lits(law.body) + ").\n";
        }
        last_group = law.oneof_group;
    }
    section(s);
    s.clear();
    for (const Literal l : t.initially())
        s += "initially(" + t.literal_name(l) + ").\n";
    section(s);
    s.clear();
    for (const Literal l : t.goal())
        s += "goal(" + t.literal_name(l) + ").\n";
    section(s);

    std::string out;
    for (std::size_t i = 0; i < sections.size(); ++i) {
        if (i > 0)
            out += "\n";
        out += sections[i];
    }
    return out;
}

namespace detail {

inline Formula parse_disjunction(TokenStream& ts, const FluentLookup& lookup);

inline Formula parse_unary(TokenStream& ts, const FluentLookup& lookup)
{
    if (ts.accept(TokenKind::Tilde))
        return Formula::negation(parse_unary(ts, lookup));
    if (ts.accept(TokenKind::LParen)) {
        Formula f = parse_disjunction(ts, lookup);
        ts.expect(TokenKind::RParen);
        return f;
    }
    return Formula::literal(parse_literal(ts, lookup));
}

inline Formula parse_conjunction(TokenStream& ts, const FluentLookup& lookup)
{
    Formula f = parse_unary(ts, lookup);
    while (ts.accept(TokenKind::Amp))
        f = Formula::conjunction(std::move(f), parse_unary(ts, lookup));
    return f;
}

inline Formula parse_disjunction(TokenStream& ts, const FluentLookup& lookup)
{
    Formula f = parse_conjunction(ts, lookup);
    while (ts.accept(TokenKind::Bar))
        f = Formula::disjunction(std::move(f), parse_conjunction(ts, lookup));
    return f;
}

} // namespace detail

// formula := conj ("|" conj)* ; conj := unary ("&" unary)* ;
// unary := "~" unary | "(" formula ")" | literal
[[nodiscard]] inline Formula parse_formula(const ActionTheory& t, std::string_view text)
{
    TokenStream ts{text};
    const FluentLookup lookup = [&t](std::string_view n) { return t.find_fluent(n); };
    Formula f = detail::parse_disjunction(ts, lookup);
    if (!ts.at_end())
        ts.fail("unexpected " + ts.found() + " after formula");
    return f;
}

[[nodiscard]] inline std::string print_formula(const ActionTheory& t, const Formula& f)
{
    switch (f.kind()) {
    case Formula::Kind::Literal: return t.literal_name(f.leaf());
    case Formula::Kind::Not: return "~" + print_formula(t, f.operands()[0]);
    case Formula::Kind::And:
        return "(" + print_formula(t, f.operands()[0]) + " & " + print_formula(t, f.operands()[1]) + ")";
    case Formula::Kind::Or:
        return "(" + print_formula(t, f.operands()[0]) + " | " + print_formula(t, f.operands()[1]) + ")";
    }
    return {};
}

} // namespace akc
