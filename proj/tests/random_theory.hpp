#pragma once

#include "akc/akc.hpp"

#include <functional>
#include <random>
#include <vector>

namespace akc::test {

struct RandomTheoryOptions {
    std::size_t max_fluents = 5;
    std::size_t max_actions = 4;
    bool sensing = false;
};

inline Literal random_literal(std::mt19937& rng, std::size_t n)
{
    return {static_cast<FluentId>(std::uniform_int_distribution<std::size_t>{0, n - 1}(rng)),
            std::bernoulli_distribution{0.5}(rng)};
}

inline std::vector<Literal> random_literals(std::mt19937& rng, std::size_t n, std::size_t lo, std::size_t hi)
{
    std::vector<Literal> out;
    const auto k = std::uniform_int_distribution<std::size_t>{lo, hi}(rng);
    for (std::size_t i = 0; i < k; ++i)
        out.push_back(random_literal(rng, n));
    return out;
}

inline ActionTheory random_theory(std::mt19937& rng, const RandomTheoryOptions& o)
{
    TheoryBuilder b;
    const auto n = std::uniform_int_distribution<std::size_t>{2, o.max_fluents}(rng);
    for (std::size_t i = 0; i < n; ++i)
        b.fluent("f" + std::to_string(i));
    const auto m = std::uniform_int_distribution<std::size_t>{1, o.max_actions}(rng);
    for (std::size_t i = 0; i < m; ++i) {
        const auto a = b.action("a" + std::to_string(i));
        if (std::bernoulli_distribution{0.8}(rng))
            b.executable(a, random_literals(rng, n, 0, 1));
        if (o.sensing && i == 0) {
            const Literal g = random_literal(rng, n);
            b.determines(a, {g, g.complement()});
            continue;
        }
        for (const auto& l : random_literals(rng, n, 1, 2))
            b.causes(a, l, random_literals(rng, n, 0, 2));
    }
    for (std::size_t i = 0, k = std::uniform_int_distribution<std::size_t>{0, 3}(rng); i < k; ++i)
        b.static_law(random_literal(rng, n), random_literals(rng, n, 1, 2));
    for (const auto& l : random_literals(rng, n, 0, 2))
        b.initially(l);
    b.goal(random_literal(rng, n));
    return b.build();
}

// Consistent theories only: the propositions below assume consistency.
inline std::vector<ActionTheory> consistent_theories(std::uint32_t seed, std::size_t count, const RandomTheoryOptions& o)
{
    std::mt19937 rng{seed};
    std::vector<ActionTheory> out;
    while (out.size() < count) {
        auto t = random_theory(rng, o);
        if (validate_theory(t).empty() && is_consistent_theory(t))
            out.push_back(std::move(t));
    }
    return out;
}

inline std::vector<LiteralSet> all_literal_sets(std::size_t n)
{
    std::vector<LiteralSet> out;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (2 * n)); ++bits) {
        LiteralSet s{n};
        for (std::size_t c = 0; c < 2 * n; ++c)
            if (bits >> c & 1)
                s.insert(Literal::from_code(c));
        out.push_back(s);
    }
    return out;
}

// Every plan over the theory's actions of depth at most d.
inline void for_each_plan(const ActionTheory& t, std::size_t d, const std::function<void(const ConditionalPlan&)>& visit)
{
    std::function<std::vector<ConditionalPlan>(std::size_t)> plans = [&](std::size_t depth) {
        std::vector<ConditionalPlan> out{ConditionalPlan{}};
        if (depth == 0)
            return out;
        const auto shorter = plans(depth - 1);
        for (ActionId a = 0; a < t.actions().size(); ++a) {
            const auto& name = t.action(a).name;
            if (!t.is_sensing(a)) {
                for (const auto& rest : shorter) {
                    ConditionalPlan p = rest;
                    p.sequence.insert(p.sequence.begin(), name);
                    out.push_back(std::move(p));
                }
                continue;
            }
            const auto& theta = t.k_proposition(a)->sensed;
            for (const auto& first : shorter)
                for (const auto& second : shorter) {
                    ConditionalPlan p;
                    p.cases = CaseStep{name, {{to_plan_literal(t, theta[0]), first}, {to_plan_literal(t, theta[1]), second}}};
                    out.push_back(std::move(p));
                }
        }
        return out;
    };
    for (const auto& p : plans(d))
        visit(p);
}


} // namespace akc::test
