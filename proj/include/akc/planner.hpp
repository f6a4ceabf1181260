#pragma once

#include "akc/plan.hpp"
#include "akc/semantics.hpp"

#include <chrono>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

namespace akc {

struct SearchBudget {
    std::size_t h_max = 10;
    std::size_t w_max = 1;
    std::optional<std::uint64_t> node_limit;
    std::optional<std::chrono::milliseconds> time_limit;
};

enum class SearchStatus { Found, NoPlan, BudgetExhausted };

struct SearchResult {
    SearchStatus status = SearchStatus::NoPlan;
    ConditionalPlan plan;
    std::size_t h = 0;
    std::size_t w = 0;
    std::uint64_t nodes = 0;
};

namespace detail {

struct BudgetExhausted {};

// Minimum-width AND-OR search over a-states. best(delta, d) is the
// narrowest plan of depth at most d that reaches the goal from delta, with
// actions tried in declaration order and ties going to the earliest.
class WidthSearch {
public:
    struct Entry {
        bool solvable = false;
        std::size_t width = 0;
        ConditionalPlan plan;
    };

    WidthSearch(const ActionTheory& t, const SearchBudget& budget)
        : t_{t}, goal_{t.goal_set()}, node_limit_{budget.node_limit}
    {
        if (budget.time_limit)
            deadline_ = std::chrono::steady_clock::now() + *budget.time_limit;
    }

    const Entry& best(const AState& delta, std::size_t depth)
    {
        const Key key{delta, depth};
        if (auto it = memo_.find(key); it != memo_.end())
            return it->second;
        tick();
        Entry result = compute(delta, depth);
        return memo_.emplace(key, std::move(result)).first->second;
    }

    [[nodiscard]] std::uint64_t nodes() const { return nodes_; }

private:
    struct Key {
        AState delta;
        std::size_t depth;
        friend bool operator==(const Key&, const Key&) = default;
    };
    struct KeyHash {
        std::size_t operator()(const Key& k) const { return k.delta.hash() * 31 + k.depth; }
    };

    void tick()
    {
        ++nodes_;
        if (node_limit_ && nodes_ > *node_limit_)
            throw BudgetExhausted{};
        if (deadline_ && (nodes_ & 0xFF) == 0 && std::chrono::steady_clock::now() > *deadline_)
            throw BudgetExhausted{};
    }

    Entry compute(const AState& delta, std::size_t depth)
    {
        if (holds(delta, goal_))
            return {true, 1, {}};
        if (depth == 0)
            return {};
        Entry best_entry;
        for (ActionId a = 0; a < t_.actions().size(); ++a) {
            if (!is_executable(t_, a, delta))
                continue;
            Entry candidate = t_.is_sensing(a) ? try_sensing(a, delta, depth, best_entry)
                                               : try_nonsensing(a, delta, depth);
            if (candidate.solvable && (!best_entry.solvable || candidate.width < best_entry.width)) {
                best_entry = std::move(candidate);
                if (best_entry.width == 1)
                    break;
            }
        }
        return best_entry;
    }

    Entry try_nonsensing(ActionId a, const AState& delta, std::size_t depth)
    {
        const StepResult r = res_nonsensing(t_, a, delta);
        Entry out;
        out.plan.sequence.push_back(t_.action(a).name);
        if (r.states().empty()) {
            out.solvable = true;
            out.width = 1;
            return out;
        }
        const Entry& sub = best(r.states().front(), depth - 1);
        if (!sub.solvable)
            return {};
        out.solvable = true;
        out.width = sub.width;
        out.plan.sequence.insert(out.plan.sequence.end(), sub.plan.sequence.begin(), sub.plan.sequence.end());
        out.plan.cases = sub.plan.cases;
        return out;
    }

    Entry try_sensing(ActionId a, const AState& delta, std::size_t depth, const Entry& incumbent)
    {
        const KProposition& k = *t_.k_proposition(a);
        for (const Literal g : k.sensed)
            if (delta.contains(g))
                return {};
        Entry out;
        CaseStep step{t_.action(a).name, {}};
        std::size_t width = 0;
        for (const Literal g : k.sensed) {
            LiteralSet next = delta;
            next.insert(g);
            next = closure(t_, std::move(next));
            if (!next.consistent()) {
                step.branches.push_back({to_plan_literal(t_, g), {}});
                width += 1;
            } else {
                const Entry& sub = best(next, depth - 1);
                if (!sub.solvable)
                    return {};
                step.branches.push_back({to_plan_literal(t_, g), sub.plan});
                width += sub.width;
            }
            if (incumbent.solvable && width >= incumbent.width)
                return {};
        }
        out.solvable = true;
        out.width = width;
        out.plan.cases = std::move(step);
        return out;
    }

    const ActionTheory& t_;
    LiteralSet goal_;
    std::optional<std::uint64_t> node_limit_;
    std::optional<std::chrono::steady_clock::time_point> deadline_;
    std::uint64_t nodes_ = 0;
    std::unordered_map<Key, Entry, KeyHash> memo_;
};

} // namespace detail

// A plan of depth at most h and width at most w that solves the instance,
// never acting once the goal holds and never sensing a known outcome.
[[nodiscard]] inline SearchResult solve_conditional(const ActionTheory& t, std::size_t h, std::size_t w,
                                                    const SearchBudget& limits = {})
{
    SearchResult out;
    detail::WidthSearch search{t, limits};
    try {
        const auto& e = search.best(initial_astate(t), h);
        out.nodes = search.nodes();
        if (e.solvable && e.width <= w) {
            out.status = SearchStatus::Found;
            out.plan = e.plan;
            out.h = h;
            out.w = w;
        }
    } catch (const detail::BudgetExhausted&) {
        out.status = SearchStatus::BudgetExhausted;
        out.nodes = search.nodes();
    }
    return out;
}

[[nodiscard]] inline SearchResult solve_conformant(const ActionTheory& t, std::size_t h,
                                                   const SearchBudget& limits = {})
{
    return solve_conditional(t, h, 1, limits);
}

// Smallest h in 1..h_max admitting a plan of width at most w_max, and the
// smallest width for that h.
[[nodiscard]] inline SearchResult solve_iterative(const ActionTheory& t, const SearchBudget& budget)
{
    SearchResult out;
    detail::WidthSearch search{t, budget};
    const AState start = initial_astate(t);
    try {
        for (std::size_t h = 1; h <= budget.h_max; ++h) {
            const auto& e = search.best(start, h);
            if (e.solvable && e.width <= budget.w_max) {
                out.status = SearchStatus::Found;
                out.plan = e.plan;
                out.h = h;
                out.w = e.width;
                break;
            }
        }
    } catch (const detail::BudgetExhausted&) {
        out.status = SearchStatus::BudgetExhausted;
    }
    out.nodes = search.nodes();
    return out;
}

} // namespace akc
