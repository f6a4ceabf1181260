#pragma once

#include "akc/plan.hpp"
#include "akc/semantics.hpp"

#include <span>
#include <stdexcept>

namespace akc {

namespace detail {

inline ConditionalPlan reduct_from(const ActionTheory& t, const AState& delta, std::span<const std::string> sequence,
                                   const std::optional<CaseStep>& cases)
{
    if ((sequence.empty() && !cases) || holds(delta, t.goal_set()))
        return {};
    if (!sequence.empty()) {
        const ActionId a = resolve_action(t, sequence.front());
        const StepResult r = phi(t, a, delta);
        if (r.is_undefined())
            throw PlanError("reduct of a plan that is not executable");
        ConditionalPlan out;
        out.sequence.push_back(sequence.front());
        if (r.states().size() != 1)
            return out;
        ConditionalPlan rest = reduct_from(t, r.states().front(), sequence.subspan(1), cases);
        out.sequence.insert(out.sequence.end(), rest.sequence.begin(), rest.sequence.end());
        out.cases = std::move(rest.cases);
        return out;
    }
    const ActionId a = resolve_action(t, cases->action);
    if (!is_executable(t, a, delta))
        throw PlanError("reduct of a plan that is not executable");
    for (const auto& b : cases->branches)
        if (delta.contains(resolve_literal(t, b.label)))
            return reduct_from(t, delta, b.plan.sequence, b.plan.cases);
    CaseStep step{cases->action, {}};
    for (const auto& b : cases->branches) {
        LiteralSet next = delta;
        next.insert(resolve_literal(t, b.label));
        next = closure(t, std::move(next));
        if (!next.consistent())
            step.branches.push_back({b.label, {}});
        else
            step.branches.push_back({b.label, reduct_from(t, next, b.plan.sequence, b.plan.cases)});
    }
    ConditionalPlan out;
    out.cases = std::move(step);
    return out;
}

} // namespace detail

// Drops actions after the goal or after an inconsistent outcome, collapses
// cases whose outcome is already known, and empties impossible branches.
[[nodiscard]] inline ConditionalPlan reduct(const ActionTheory& t, const AState& delta, const ConditionalPlan& p)
{
    return detail::reduct_from(t, delta, p.sequence, p.cases);
}

} // namespace akc
