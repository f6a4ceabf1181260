#pragma once

#include "akc/formula.hpp"
#include "akc/plan.hpp"
#include "akc/theory.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace akc {

// An a-state: a consistent literal set closed under the static laws.
using AState = LiteralSet;

// Either undefined (the action or plan is not executable) or a set of
// successor a-states, kept sorted and duplicate-free. The set may be empty.
class StepResult {
public:
    static StepResult undefined() { return StepResult{true, {}}; }
    static StepResult successors(std::vector<AState> states)
    {
        std::sort(states.begin(), states.end());
        states.erase(std::unique(states.begin(), states.end()), states.end());
        return StepResult{false, std::move(states)};
    }

    [[nodiscard]] bool is_undefined() const { return undefined_; }
    [[nodiscard]] const std::vector<AState>& states() const
    {
        if (undefined_)
            throw std::logic_error("undefined step result has no states");
        return states_;
    }

    friend bool operator==(const StepResult&, const StepResult&) = default;

private:
    StepResult(bool undefined, std::vector<AState> states) : undefined_{undefined}, states_{std::move(states)} {}

    bool undefined_ = false;
    std::vector<AState> states_;
};

// Least superset of sigma closed under the static laws. May be inconsistent.
[[nodiscard]] inline LiteralSet closure(const ActionTheory& t, LiteralSet sigma)
{
    const auto& laws = t.static_laws();
    const auto& bodies = t.static_bodies();
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < laws.size(); ++i) {
            if (!sigma.contains(laws[i].head) && bodies[i].is_subset_of(sigma)) {
                sigma.insert(laws[i].head);
                changed = true;
            }
        }
    }
    return sigma;
}

[[nodiscard]] inline bool is_executable(const ActionTheory& t, ActionId a, const LiteralSet& delta)
{
    const auto& laws = t.executability_laws();
    for (std::size_t i = 0; i < laws.size(); ++i)
        if (laws[i].action == a && t.preconditions()[i].is_subset_of(delta))
            return true;
    return false;
}

namespace detail {

inline void require_nonsensing(const ActionTheory& t, ActionId a, const LiteralSet& delta)
{
    if (t.is_sensing(a))
        throw std::invalid_argument("'" + t.action(a).name + "' is a sensing action");
    if (!is_executable(t, a, delta))
        throw std::invalid_argument("'" + t.action(a).name + "' is not executable");
}

} // namespace detail

// What definitely holds after a: the closure of the effects whose
// conditions hold in delta.
[[nodiscard]] inline LiteralSet e_set(const ActionTheory& t, ActionId a, const AState& delta)
{
    detail::require_nonsensing(t, a, delta);
    LiteralSet effects = t.empty_set();
    const auto& laws = t.dynamic_laws();
    for (std::size_t i = 0; i < laws.size(); ++i)
        if (laws[i].action == a && t.dynamic_conditions()[i].is_subset_of(delta))
            effects.insert(laws[i].effect);
    return closure(t, std::move(effects));
}

// What may change after a.
[[nodiscard]] inline LiteralSet pc_set(const ActionTheory& t, ActionId a, const AState& delta)
{
    const LiteralSet e = e_set(t, a, delta);
    LiteralSet pc = t.empty_set();
    const auto& dyn = t.dynamic_laws();
    for (std::size_t i = 0; i < dyn.size(); ++i)
        if (dyn[i].action == a && !delta.contains(dyn[i].effect) && possibly_holds(delta, t.dynamic_conditions()[i]))
            pc.insert(dyn[i].effect);

    const auto& laws = t.static_laws();
    const auto& bodies = t.static_bodies();
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < laws.size(); ++i) {
            const Literal l = laws[i].head;
            if (pc.contains(l) || delta.contains(l))
                continue;
            if (bodies[i].intersects(pc) && possibly_holds(e, bodies[i])) {
                pc.insert(l);
                changed = true;
            }
        }
    }
    return pc;
}

[[nodiscard]] inline StepResult res_nonsensing(const ActionTheory& t, ActionId a, const AState& delta)
{
    const LiteralSet e = e_set(t, a, delta);
    const LiteralSet pc = pc_set(t, a, delta);
    LiteralSet next = closure(t, e | (delta - pc.complemented()));
    if (!next.consistent())
        return StepResult::successors({});
    return StepResult::successors({std::move(next)});
}

[[nodiscard]] inline StepResult res_sensing(const ActionTheory& t, ActionId a, const AState& delta)
{
    const KProposition* k = t.k_proposition(a);
    if (!k)
        throw std::invalid_argument("'" + t.action(a).name + "' is not a sensing action");
    if (!is_executable(t, a, delta))
        throw std::invalid_argument("'" + t.action(a).name + "' is not executable");
    std::vector<AState> out;
    for (const Literal g : k->sensed) {
        LiteralSet next = delta;
        next.insert(g);
        next = closure(t, std::move(next));
        if (next.consistent())
            out.push_back(std::move(next));
    }
    return StepResult::successors(std::move(out));
}

[[nodiscard]] inline StepResult phi(const ActionTheory& t, ActionId a, const AState& delta)
{
    if (!is_executable(t, a, delta))
        return StepResult::undefined();
    return t.is_sensing(a) ? res_sensing(t, a, delta) : res_nonsensing(t, a, delta);
}

namespace detail {

inline ActionId resolve_action(const ActionTheory& t, const std::string& name)
{
    const auto id = t.find_action(name);
    if (!id)
        throw PlanError("unknown action '" + name + "'");
    return *id;
}

inline Literal resolve_literal(const ActionTheory& t, const PlanLiteral& l)
{
    const auto f = t.find_fluent(l.fluent);
    if (!f)
        throw PlanError("unknown fluent '" + l.fluent + "'");
    return {*f, l.positive};
}

inline bool phi_hat_into(const ActionTheory& t, const ConditionalPlan& p, const AState& delta, std::vector<AState>& out)
{
    std::vector<AState> current{delta};
    for (const auto& name : p.sequence) {
        const ActionId a = resolve_action(t, name);
        std::vector<AState> next;
        for (const auto& d : current) {
            const StepResult r = phi(t, a, d);
            if (r.is_undefined())
                return false;
            next.insert(next.end(), r.states().begin(), r.states().end());
        }
        current = std::move(next);
    }
    if (!p.cases) {
        out.insert(out.end(), current.begin(), current.end());
        return true;
    }
    const ActionId a = resolve_action(t, p.cases->action);
    for (const auto& d : current) {
        const StepResult r = phi(t, a, d);
        if (r.is_undefined())
            return false;
        for (const auto& d2 : r.states()) {
            const CaseBranch* taken = nullptr;
            for (const auto& b : p.cases->branches) {
                if (d2.contains(resolve_literal(t, b.label))) {
                    taken = &b;
                    break;
                }
            }
            if (!taken)
                throw PlanError("no case of '" + p.cases->action + "' matches a sensing outcome");
            if (!phi_hat_into(t, taken->plan, d2, out))
                return false;
        }
    }
    return true;
}

} // namespace detail

// Extended transition function over conditional plans.
[[nodiscard]] inline StepResult phi_hat(const ActionTheory& t, const ConditionalPlan& p, const AState& delta)
{
    std::vector<AState> out;
    if (!detail::phi_hat_into(t, p, delta, out))
        return StepResult::undefined();
    return StepResult::successors(std::move(out));
}

class InconsistentInitialState : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

[[nodiscard]] inline AState initial_astate(const ActionTheory& t)
{
    LiteralSet delta = closure(t, t.make_set(t.initially()));
    if (!delta.consistent())
        throw InconsistentInitialState("closure of the initial facts is inconsistent");
    return delta;
}

enum class QueryMode { Knows, Whether };

// knows rho after p / whether rho after p, from the initial a-state.
// False when the plan is not executable; vacuously true when no a-state results.
[[nodiscard]] inline bool entails(const ActionTheory& t, QueryMode mode, const Formula& rho, const ConditionalPlan& p)
{
    const StepResult r = phi_hat(t, p, initial_astate(t));
    if (r.is_undefined())
        return false;
    return std::all_of(r.states().begin(), r.states().end(), [&](const AState& d) {
        const TruthValue v = eval_formula(d, rho);
        return mode == QueryMode::Knows ? v == TruthValue::True : v != TruthValue::Unknown;
    });
}

[[nodiscard]] inline bool is_solution(const ActionTheory& t, const ConditionalPlan& p)
{
    return entails(t, QueryMode::Knows, Formula::all_of(t.goal()), p);
}

// Brute-force possible-world machinery, exponential in the fluent count.

inline constexpr std::size_t kDefaultFluentGuard = 16;

class SizeGuardExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline void check_guard(const ActionTheory& t, std::size_t guard)
{
    if (t.fluent_count() > guard)
        throw SizeGuardExceeded(std::to_string(t.fluent_count()) + " fluents exceed the enumeration limit of "
                                + std::to_string(guard));
}

inline LiteralSet interpretation(std::size_t n, std::uint64_t bits)
{
    LiteralSet s{n};
    for (FluentId f = 0; f < n; ++f)
        s.insert({f, ((bits >> f) & 1U) != 0});
    return s;
}

} // namespace detail

// All complete interpretations closed under the static laws.
[[nodiscard]] inline std::vector<LiteralSet> all_states(const ActionTheory& t, std::size_t guard = kDefaultFluentGuard)
{
    detail::check_guard(t, guard);
    const std::size_t n = t.fluent_count();
    std::vector<LiteralSet> out;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
        LiteralSet s = detail::interpretation(n, bits);
        if (closure(t, s) == s)
            out.push_back(std::move(s));
    }
    return out;
}

// Successor states s' with s' = Cl(E(a,s) + (s & s')).
[[nodiscard]] inline std::vector<LiteralSet> res_c_oracle(const ActionTheory& t, ActionId a, const LiteralSet& s,
                                                          std::size_t guard = kDefaultFluentGuard)
{
    detail::check_guard(t, guard);
    if (t.is_sensing(a))
        throw std::invalid_argument("'" + t.action(a).name + "' is a sensing action");
    if (!is_executable(t, a, s))
        throw std::invalid_argument("'" + t.action(a).name + "' is not executable");
    LiteralSet effects = t.empty_set();
    const auto& laws = t.dynamic_laws();
    for (std::size_t i = 0; i < laws.size(); ++i)
        if (laws[i].action == a && t.dynamic_conditions()[i].is_subset_of(s))
            effects.insert(laws[i].effect);
    const std::size_t n = t.fluent_count();
    std::vector<LiteralSet> out;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
        LiteralSet next = detail::interpretation(n, bits);
        if (closure(t, effects | (s & next)) == next)
            out.push_back(std::move(next));
    }
    return out;
}

// Some state contains delta.
[[nodiscard]] inline bool is_valid_astate(const ActionTheory& t, const LiteralSet& delta,
                                          std::size_t guard = kDefaultFluentGuard)
{
    for (const auto& s : all_states(t, guard))
        if (delta.is_subset_of(s))
            return true;
    return false;
}

// Every executable non-sensing action has a successor in every state,
// and the initial a-state is valid.
[[nodiscard]] inline bool is_consistent_theory(const ActionTheory& t, std::size_t guard = kDefaultFluentGuard)
{
    const auto states = all_states(t, guard);
    for (const auto& s : states)
        for (ActionId a = 0; a < t.actions().size(); ++a)
            if (!t.is_sensing(a) && is_executable(t, a, s) && res_c_oracle(t, a, s, guard).empty())
                return false;
    const LiteralSet init = closure(t, t.make_set(t.initially()));
    if (!init.consistent())
        return false;
    return std::any_of(states.begin(), states.end(), [&](const LiteralSet& s) { return init.is_subset_of(s); });
}

} // namespace akc
