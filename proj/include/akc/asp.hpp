#pragma once

#include "akc/lexer.hpp"
#include "akc/plan.hpp"
#include "akc/plan_grid.hpp"
#include "akc/semantics.hpp"
#include "akc/theory.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace akc {

namespace detail {

inline const std::string kIndent = "        ";

// "head :-\n        b1,\n        b2.\n" or "head.\n" for an empty body.
inline std::string rule(const std::string& head, const std::vector<std::string>& body)
{
    if (body.empty())
        return head + ".\n";
    std::string out = head + " :-\n";
    for (std::size_t i = 0; i < body.size(); ++i)
        out += kIndent + body[i] + (i + 1 < body.size() ? ",\n" : ".\n");
    return out;
}

inline std::string constraint(const std::vector<std::string>& body)
{
    std::string out = ":- " + body.front();
    for (std::size_t i = 1; i < body.size(); ++i)
        out += ",\n" + kIndent + body[i];
    return out + ".\n";
}

inline std::string atom(const std::string& pred, const std::string& l, const std::string& rest)
{
    return pred + "(" + l + "," + rest + ")";
}

inline const char* const kHeader = "#domain fluent(F).\n"
                                   "#domain literal(L;L1).\n"
                                   "#domain sense(G;G1;G2).\n"
                                   "#domain time(T).\n"
                                   "#domain time1(T1).\n"
                                   "#domain path(P;P1;P2).\n"
                                   "#domain action(A).\n"
                                   "\n"
                                   "time(1..h).\n"
                                   "time1(1..h+1).\n"
                                   "path(1..w).\n"
                                   "\n";

inline const char* const kInertia = "holds(L,T+1,P) :-\n"
                                    "        e(L,T+1,P).\n"
                                    "\n"
                                    "holds(L,T+1,P) :-\n"
                                    "        holds(L,T,P),\n"
                                    "        contrary(L,L1),\n"
                                    "        not pc(L1,T+1,P).\n"
                                    "\n";

inline const char* const kBranchConstraints = ":- P1 < P2,\n"
                                              "        P2 < P,\n"
                                              "        br(G1,T,P1,P),\n"
                                              "        br(G2,T,P2,P).\n"
                                              "\n"
                                              ":- G1 != G2,\n"
                                              "        P1 <= P,\n"
                                              "        br(G1,T,P1,P),\n"
                                              "        br(G2,T,P1,P).\n"
                                              "\n"
                                              ":- P1 < P,\n"
                                              "        br(G,T,P1,P),\n"
                                              "        used(T,P).\n"
                                              "\n";

inline const char* const kBranchEffects = "used(T+1,P) :-\n"
                                          "        P1 < P,\n"
                                          "        br(G,T,P1,P).\n"
                                          "\n"
                                          "holds(G,T+1,P) :-\n"
                                          "        P1 <= P,\n"
                                          "        br(G,T,P1,P).\n"
                                          "\n"
                                          "holds(L,T+1,P) :-\n"
                                          "        P1 < P,\n"
                                          "        br(G,T,P1,P),\n"
                                          "        holds(L,T,P1).\n"
                                          "\n";

inline const char* const kGenerate = "1{occ(X,T,P):action(X)}1 :-\n"
                                     "        used(T,P),\n"
                                     "        not goal(T,P).\n"
                                     "\n";

inline const char* const kExecutable = ":- occ(A,T,P),\n"
                                       "        not poss(A,T,P).\n"
                                       "\n";

inline const char* const kAuxiliary = "literal(F).\n"
                                      "literal(neg(F)).\n"
                                      "\n"
                                      "contrary(F,neg(F)).\n"
                                      "contrary(neg(F),F).\n"
                                      "\n";

inline const char* const kNewBranch = "new_br(P,P1) :-\n"
                                      "        P <= P1.\n"
                                      "\n";

inline const char* const kUsed = "used(1,1).\n"
                                 "used(T+1,P) :-\n"
                                 "        used(T,P).\n"
                                 "\n";

struct EmitOptions {
    bool planner = true; // false: reasoner variant without generation and goal rules
};

inline std::string emit(const ActionTheory& t, const EmitOptions& opt)
{
    const auto lit = [&](Literal l) { return t.literal_name(l); };
    const auto& act = [&](ActionId a) -> const std::string& { return t.action(a).name; };
    std::string out = kHeader;

    for (const auto& a : t.actions())
        out += "action(" + a.name + ").\n";
    out += "\n";
    for (const auto& f : t.fluents())
        out += "fluent(" + f + ").\n";
    std::vector<Literal> sensed;
    for (const auto& k : t.k_propositions())
        for (const Literal g : k.sensed)
            if (std::find(sensed.begin(), sensed.end(), g) == sensed.end())
                sensed.push_back(g);
    for (const Literal g : sensed)
        out += "sense(" + lit(g) + ").\n";
    out += "\n\n";

    for (const Literal l : t.initially())
        out += "holds(" + lit(l) + ",1,1).\n";
    out += "\n";

    std::string facts;
    std::string rules;
    for (const auto& law : t.executability_laws()) {
        std::vector<std::string> body;
        for (const Literal l : law.precondition)
            body.push_back(atom("holds", lit(l), "T,P"));
        (body.empty() ? facts : rules) += rule("poss(" + act(law.action) + ",T,P)", body);
    }
    if (!facts.empty())
        out += facts + "\n";
    out += rules + "\n";

    for (const auto& law : t.dynamic_laws()) {
        const std::string occ = "occ(" + act(law.action) + ",T,P)";
        std::vector<std::string> e_body{occ};
        std::vector<std::string> pc_body{occ};
        for (const Literal l : law.condition) {
            e_body.push_back(atom("holds", lit(l), "T,P"));
            pc_body.push_back("not " + atom("holds", lit(l.complement()), "T,P"));
        }
        out += rule(atom("e", lit(law.effect), "T+1,P"), e_body);
        out += rule(atom("pc", lit(law.effect), "T+1,P"), pc_body);
    }
    out += "\n";

    if (opt.planner) {
        for (const auto& k : t.k_propositions()) {
            const std::string occ = "occ(" + act(k.action) + ",T,P)";
            std::vector<std::string> body{occ};
            for (const Literal g : k.sensed)
                body.push_back("not br(" + lit(g) + ",T,P,P)");
            out += constraint(body);
            for (const Literal g : k.sensed)
                out += rule("1{br(" + lit(g) + ",T,P,X):new_br(P,X)}1", {occ});
            for (const Literal g : k.sensed)
                out += constraint({occ, atom("holds", lit(g), "T,P")});
        }
        out += "\n";
    }

    for (const auto& law : t.static_laws()) {
        std::vector<std::string> holds_body;
        std::vector<std::string> e_body;
        for (const Literal l : law.body) {
            holds_body.push_back(atom("holds", lit(l), "T1,P"));
            e_body.push_back(atom("e", lit(l), "T+1,P"));
        }
        out += rule(atom("holds", lit(law.head), "T1,P"), holds_body) + "\n";
        out += rule(atom("e", lit(law.head), "T+1,P"), e_body) + "\n";
        for (const Literal trigger : law.body) {
            std::vector<std::string> body{atom("pc", lit(trigger), "T+1,P"),
                                          "not " + atom("holds", lit(law.head), "T,P")};
            for (const Literal l : law.body)
                body.push_back("not " + atom("e", lit(l.complement()), "T+1,P"));
            out += rule(atom("pc", lit(law.head), "T+1,P"), body);
        }
        out += "\n";
    }
    out += "\n";

    if (opt.planner) {
        std::vector<std::string> goal_body;
        for (const Literal g : t.goal())
            goal_body.push_back(atom("holds", lit(g), "T1,P"));
        out += rule("goal(T1,P)", goal_body) + "\n";
        out += rule("goal(T1,P)", {"contrary(L,L1)", "holds(L,T1,P)", "holds(L1,T1,P)"}) + "\n";
        out += constraint({"used(h+1,P)", "not goal(h+1,P)"}) + "\n";
    }

    out += kInertia;
    if (opt.planner)
        out += kBranchConstraints;
    out += kBranchEffects;
    if (opt.planner)
        out += kGenerate;
    out += kExecutable;
    out += kAuxiliary;
    if (opt.planner)
        out += kNewBranch;
    out += kUsed;
    return out;
}

} // namespace detail

// The planning program for (D, I, G); h and w are left as constants to be
// supplied to the grounder (-c h=H -c w=W).
[[nodiscard]] inline std::string emit_program(const ActionTheory& t)
{
    return detail::emit(t, {true}) + "hide.\nshow occ(A,T,P).\nshow br(G,T,P,P1).\n";
}

// Bounds are not part of the text; the overload exists so callers can
// validate them up front.
[[nodiscard]] inline std::string emit_program(const ActionTheory& t, std::size_t h, std::size_t w)
{
    if (h < 1 || w < 1)
        throw std::invalid_argument("h and w must be positive");
    return emit_program(t);
}

// The reasoner program for a fixed plan: generation, goal and branch
// constraints removed, the numbered plan tree added as facts. Returns the
// grid used so callers know h and w.
[[nodiscard]] inline std::string emit_reasoner_program(const ActionTheory& t, const ConditionalPlan& p,
                                                       PlanGrid* grid_out = nullptr)
{
    check_plan(t, p);
    const std::size_t h = std::max<std::size_t>(1, plan_depth(p));
    const std::size_t w = plan_width(p);
    const PlanGrid grid = number_plan(p, h, w);
    std::string out = "% lparse -c h=" + std::to_string(h) + " -c w=" + std::to_string(w) + "\n";
    out += detail::emit(t, {false});
    for (const auto& o : grid.occurrences())
        out += "occ(" + o.action + "," + std::to_string(o.t) + "," + std::to_string(o.p) + ").\n";
    for (const auto& b : grid.branches())
        out += "br(" + b.label.str() + "," + std::to_string(b.t) + "," + std::to_string(b.from) + ","
               + std::to_string(b.to) + ").\n";
    out += "\nhide.\nshow holds(L,T,P).\nshow used(T,P).\n";
    if (grid_out)
        *grid_out = grid;
    return out;
}

// A ground atom with arguments kept in their printed form.
struct GroundAtom {
    std::string predicate;
    std::vector<std::string> args;

    [[nodiscard]] std::string str() const
    {
        std::string out = predicate + "(";
        for (std::size_t i = 0; i < args.size(); ++i)
            out += (i > 0 ? "," : "") + args[i];
        return out + ")";
    }
    friend auto operator<=>(const GroundAtom&, const GroundAtom&) = default;
};

struct AtomSet {
    std::size_t h = 1;
    std::size_t w = 1;
    std::set<GroundAtom> atoms;

    [[nodiscard]] bool contains(const GroundAtom& a) const { return atoms.count(a) > 0; }
    [[nodiscard]] std::string str() const
    {
        std::string out;
        for (const auto& a : atoms)
            out += (out.empty() ? "" : " ") + a.str();
        return out;
    }
};

namespace detail {

inline std::string parse_term(TokenStream& ts)
{
    if (ts.at(TokenKind::Number))
        return ts.next().text;
    std::string out = ts.expect(TokenKind::Ident).text;
    if (ts.accept(TokenKind::LParen)) {
        out += "(";
        bool first = true;
        do {
            out += (first ? "" : ",") + parse_term(ts);
            first = false;
        } while (ts.accept(TokenKind::Comma));
        ts.expect(TokenKind::RParen);
        out += ")";
    }
    return out;
}

struct AtomShape {
    std::size_t arity;
    std::size_t time_index;
    bool time_upto_h; // time argument at most h, otherwise at most h + 1
    std::vector<std::size_t> path_indices;
};

inline const std::map<std::string, AtomShape>& atom_shapes()
{
    static const std::map<std::string, AtomShape> shapes{
        {"occ", {3, 1, true, {2}}},     {"br", {4, 1, true, {2, 3}}},   {"holds", {3, 1, false, {2}}},
        {"used", {2, 0, false, {1}}},   {"goal", {2, 0, false, {1}}},   {"e", {3, 1, false, {2}}},
        {"pc", {3, 1, false, {2}}},     {"poss", {3, 1, true, {2}}},
    };
    return shapes;
}

inline std::size_t to_index(const std::string& s, SourcePos pos)
{
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
        throw ParseError("expected a positive integer, found '" + s + "'", pos);
    return std::stoul(s);
}

} // namespace detail

// The atom text of the first answer set in solver output: the rest of the
// "Stable Model:" / "Answer set:" line plus the following lines that start
// with an atom. Without such a marker the whole text is the payload, with
// any per-line prefix up to a ':' removed.
[[nodiscard]] inline std::string answer_set_payload(std::string_view text)
{
    std::vector<std::string> lines;
    {
        std::istringstream in{std::string{text}};
        std::string line;
        while (std::getline(in, line))
            lines.push_back(line);
    }
    for (std::size_t i = 0; i < lines.size(); ++i) {
        std::size_t at = std::string::npos;
        for (const char* marker : {"Stable Model:", "Answer set:"})
            if (const auto m = lines[i].find(marker); m != std::string::npos)
                at = m + std::string_view{marker}.size();
        if (at == std::string::npos)
            continue;
        std::string payload = lines[i].substr(at) + "\n";
        for (std::size_t j = i + 1; j < lines.size(); ++j) {
            const auto first = lines[j].find_first_not_of(" \t\r");
            if (first == std::string::npos || !std::islower(static_cast<unsigned char>(lines[j][first])))
                break;
            payload += lines[j] + "\n";
        }
        return payload;
    }
    std::string payload;
    for (auto& line : lines) {
        if (const auto colon = line.find(':'); colon != std::string::npos)
            line.erase(0, colon + 1);
        payload += line + "\n";
    }
    return payload;
}

// Reads the atoms of one answer set (see answer_set_payload). Atoms of
// other predicates are skipped and reported through warn.
[[nodiscard]] inline AtomSet parse_answer_set(std::string_view text, std::size_t h, std::size_t w,
                                              const std::function<void(const std::string&)>& warn = {})
{
    AtomSet out{h, w, {}};
    const std::string payload = answer_set_payload(text);
    TokenStream ts{payload};
    std::set<std::string> warned;
    while (!ts.at_end()) {
        const SourcePos pos = ts.peek().pos;
        GroundAtom a;
        a.predicate = ts.expect(TokenKind::Ident).text;
        if (ts.accept(TokenKind::LParen)) {
            do {
                a.args.push_back(detail::parse_term(ts));
            } while (ts.accept(TokenKind::Comma));
            ts.expect(TokenKind::RParen);
        }
        ts.accept(TokenKind::Dot);
        const auto& shapes = detail::atom_shapes();
        const auto shape = shapes.find(a.predicate);
        if (shape == shapes.end()) {
            if (warn && warned.insert(a.predicate + "/" + std::to_string(a.args.size())).second)
                warn("ignoring unknown predicate " + a.predicate + "/" + std::to_string(a.args.size()));
            continue;
        }
        const auto& s = shape->second;
        if (a.args.size() != s.arity)
            throw ParseError(a.predicate + " expects " + std::to_string(s.arity) + " arguments", pos);
        const std::size_t time = detail::to_index(a.args[s.time_index], pos);
        const std::size_t time_max = s.time_upto_h ? h : h + 1;
        if (time < 1 || time > time_max)
            throw ParseError("time " + std::to_string(time) + " of " + a.str() + " is outside 1.."
                                 + std::to_string(time_max),
                             pos);
        for (const auto i : s.path_indices) {
            const std::size_t path = detail::to_index(a.args[i], pos);
            if (path < 1 || path > w)
                throw ParseError("path " + std::to_string(path) + " of " + a.str() + " is outside 1.."
                                     + std::to_string(w),
                                 pos);
        }
        out.atoms.insert(std::move(a));
    }
    return out;
}

class ExtractionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline ConditionalPlan extract_at(const ActionTheory& t, const AtomSet& s,
                                  const std::map<std::pair<std::size_t, std::size_t>, std::string>& occ,
                                  std::size_t i, std::size_t k)
{
    ConditionalPlan out;
    for (; i <= s.h; ++i) {
        const auto it = occ.find({i, k});
        if (it == occ.end())
            return out;
        const auto id = t.find_action(it->second);
        if (!id)
            throw ExtractionError("occ of unknown action '" + it->second + "'");
        if (!t.is_sensing(*id)) {
            out.sequence.push_back(it->second);
            continue;
        }
        CaseStep step{it->second, {}};
        for (const Literal g : t.k_proposition(*id)->sensed) {
            const std::string label = t.literal_name(g);
            std::optional<std::size_t> target;
            for (std::size_t kj = 1; kj <= s.w; ++kj) {
                if (s.contains({"br", {label, std::to_string(i), std::to_string(k), std::to_string(kj)}})) {
                    if (target)
                        throw ExtractionError("several branches for " + label + " at (" + std::to_string(i) + ","
                                              + std::to_string(k) + ")");
                    target = kj;
                }
            }
            if (!target)
                throw ExtractionError("missing br(" + label + "," + std::to_string(i) + "," + std::to_string(k)
                                      + ",_) for the occurrence of " + it->second);
            step.branches.push_back({to_plan_literal(t, g), extract_at(t, s, occ, i + 1, *target)});
        }
        out.cases = std::move(step);
        return out;
    }
    return out;
}

} // namespace detail

// The plan p(1,1) read off the occ and br atoms of an answer set.
[[nodiscard]] inline ConditionalPlan extract_plan(const ActionTheory& t, const AtomSet& s)
{
    std::map<std::pair<std::size_t, std::size_t>, std::string> occ;
    for (const auto& a : s.atoms) {
        if (a.predicate != "occ")
            continue;
        const auto key = std::make_pair(std::stoul(a.args[1]), std::stoul(a.args[2]));
        if (auto [it, inserted] = occ.emplace(key, a.args[0]); !inserted && it->second != a.args[0])
            throw ExtractionError("two actions occur at (" + a.args[1] + "," + a.args[2] + ")");
    }
    return detail::extract_at(t, s, occ, 1, 1);
}

// The a-states at the leaves (h+1, j) of a reasoner answer set; nullopt
// where the path is unused or the literals are inconsistent.
[[nodiscard]] inline std::vector<std::optional<LiteralSet>> final_astates(const ActionTheory& t, const AtomSet& s)
{
    std::vector<std::optional<LiteralSet>> out;
    const std::string last = std::to_string(s.h + 1);
    for (std::size_t j = 1; j <= s.w; ++j) {
        const std::string path = std::to_string(j);
        if (!s.contains({"used", {last, path}})) {
            out.emplace_back();
            continue;
        }
        LiteralSet delta = t.empty_set();
        for (const auto& a : s.atoms) {
            if (a.predicate != "holds" || a.args[1] != last || a.args[2] != path)
                continue;
            const std::string& name = a.args[0];
            const bool negative = name.rfind("neg(", 0) == 0 && name.back() == ')';
            const auto f = t.find_fluent(negative ? name.substr(4, name.size() - 5) : name);
            if (!f)
                throw ExtractionError("holds atom over unknown fluent '" + name + "'");
            delta.insert({*f, !negative});
        }
        if (delta.consistent())
            out.emplace_back(std::move(delta));
        else
            out.emplace_back();
    }
    return out;
}

} // namespace akc
