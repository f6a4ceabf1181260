#pragma once

#include "akc/formula.hpp"
#include "akc/literal.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace akc {

using ActionId = std::uint32_t;

enum class ActionKind { NonSensing, Sensing };

struct Action {
    std::string name;
    ActionKind kind = ActionKind::NonSensing;

    friend bool operator==(const Action&, const Action&) = default;
};

struct ExecutabilityLaw {
    ActionId action;
    std::vector<Literal> precondition;
    friend bool operator==(const ExecutabilityLaw&, const ExecutabilityLaw&) = default;
};

struct DynamicLaw {
    ActionId action;
    Literal effect;
    std::vector<Literal> condition;
    friend bool operator==(const DynamicLaw&, const DynamicLaw&) = default;
};

struct StaticLaw {
    Literal head;
    std::vector<Literal> body;
    // Index of the oneof declaration this law was expanded from, if any.
    std::optional<std::size_t> oneof_group;
    friend bool operator==(const StaticLaw&, const StaticLaw&) = default;
};

struct KProposition {
    ActionId action;
    std::vector<Literal> sensed;
    friend bool operator==(const KProposition&, const KProposition&) = default;
};

// The static laws abbreviated by oneof(theta), in the order the encoding
// emits them: for each g, if(neg g, {g'}) for every other g', then
// if(g, {neg g' | g' != g}).
[[nodiscard]] inline std::vector<StaticLaw> expand_oneof(std::span<const Literal> theta,
                                                        std::optional<std::size_t> group = std::nullopt)
{
    if (theta.size() < 2)
        throw std::invalid_argument("oneof needs at least two literals");
    std::vector<StaticLaw> laws;
    laws.reserve(theta.size() * theta.size());
    for (const Literal g : theta) {
        for (const Literal other : theta)
            if (other != g)
                laws.push_back({g.complement(), {other}, group});
        std::vector<Literal> body;
        for (const Literal other : theta)
            if (other != g)
                body.push_back(other.complement());
        laws.push_back({g, std::move(body), group});
    }
    return laws;
}

[[nodiscard]] inline bool is_complementary_pair(std::span<const Literal> theta)
{
    return theta.size() == 2 && theta[0] == theta[1].complement();
}

// An action theory (D, I) together with its goal G. Immutable once built;
// construct through TheoryBuilder.
class ActionTheory {
public:
    [[nodiscard]] std::size_t fluent_count() const { return fluents_.size(); }
    [[nodiscard]] const std::vector<std::string>& fluents() const { return fluents_; }
    [[nodiscard]] const std::vector<Action>& actions() const { return actions_; }
    [[nodiscard]] const std::vector<ExecutabilityLaw>& executability_laws() const { return executability_; }
    [[nodiscard]] const std::vector<DynamicLaw>& dynamic_laws() const { return dynamic_; }
    [[nodiscard]] const std::vector<StaticLaw>& static_laws() const { return static_; }
    [[nodiscard]] const std::vector<KProposition>& k_propositions() const { return sensing_; }
    [[nodiscard]] const std::vector<std::vector<Literal>>& oneof_groups() const { return oneof_groups_; }
    [[nodiscard]] const std::vector<Literal>& initially() const { return initially_; }
    [[nodiscard]] const std::vector<Literal>& goal() const { return goal_; }

    [[nodiscard]] std::optional<FluentId> find_fluent(std::string_view name) const
    {
        if (auto it = fluent_index_.find(std::string{name}); it != fluent_index_.end())
            return it->second;
        return std::nullopt;
    }
    [[nodiscard]] std::optional<ActionId> find_action(std::string_view name) const
    {
        if (auto it = action_index_.find(std::string{name}); it != action_index_.end())
            return it->second;
        return std::nullopt;
    }
    [[nodiscard]] const Action& action(ActionId id) const { return actions_.at(id); }
    [[nodiscard]] bool is_sensing(ActionId id) const { return actions_.at(id).kind == ActionKind::Sensing; }

    // The k-proposition of a sensing action, or nullptr.
    [[nodiscard]] const KProposition* k_proposition(ActionId id) const
    {
        for (const auto& k : sensing_)
            if (k.action == id)
                return &k;
        return nullptr;
    }

    [[nodiscard]] LiteralSet make_set(std::span<const Literal> literals) const
    {
        return LiteralSet{fluent_count(), literals};
    }
    [[nodiscard]] LiteralSet empty_set() const { return LiteralSet{fluent_count()}; }
    [[nodiscard]] LiteralSet goal_set() const { return make_set(goal_); }

    // Laws pre-converted to bitsets, parallel to the vectors above.
    [[nodiscard]] const std::vector<LiteralSet>& static_bodies() const { return static_bodies_; }
    [[nodiscard]] const std::vector<LiteralSet>& dynamic_conditions() const { return dynamic_conditions_; }
    [[nodiscard]] const std::vector<LiteralSet>& preconditions() const { return preconditions_; }

    // "open" / "neg(open)"
    [[nodiscard]] std::string literal_name(Literal l) const
    {
        const auto& f = fluents_.at(l.fluent);
        return l.positive ? f : "neg(" + f + ")";
    }

    // Literals ordered by fluent name, positive before negative.
    [[nodiscard]] std::vector<Literal> canonical_order(const LiteralSet& s) const
    {
        auto lits = s.literals();
        std::sort(lits.begin(), lits.end(), [this](Literal a, Literal b) {
            if (a.fluent != b.fluent)
                return name_rank_[a.fluent] < name_rank_[b.fluent];
            return a.positive && !b.positive;
        });
        return lits;
    }

    // "{neg(open), closed}" in canonical order.
    [[nodiscard]] std::string format_set(const LiteralSet& s) const
    {
        std::string out = "{";
        bool first = true;
        for (const Literal l : canonical_order(s)) {
            if (!first)
                out += ", ";
            out += literal_name(l);
            first = false;
        }
        return out + "}";
    }

    friend bool operator==(const ActionTheory& a, const ActionTheory& b)
    {
        return a.fluents_ == b.fluents_ && a.actions_ == b.actions_ && a.executability_ == b.executability_
               && a.dynamic_ == b.dynamic_ && a.static_ == b.static_ && a.sensing_ == b.sensing_
               && a.oneof_groups_ == b.oneof_groups_ && a.initially_ == b.initially_ && a.goal_ == b.goal_;
    }

private:
    friend class TheoryBuilder;

    void finalize()
    {
        fluent_index_.clear();
        for (FluentId f = 0; f < fluents_.size(); ++f)
            fluent_index_.emplace(fluents_[f], f);
        action_index_.clear();
        for (ActionId a = 0; a < actions_.size(); ++a)
            action_index_.emplace(actions_[a].name, a);
        for (auto& action : actions_)
            action.kind = ActionKind::NonSensing;
        for (const auto& k : sensing_)
            actions_.at(k.action).kind = ActionKind::Sensing;

        std::vector<FluentId> order(fluents_.size());
        std::iota(order.begin(), order.end(), FluentId{0});
        std::sort(order.begin(), order.end(), [this](FluentId a, FluentId b) { return fluents_[a] < fluents_[b]; });
        name_rank_.assign(fluents_.size(), 0);
        for (std::size_t i = 0; i < order.size(); ++i)
            name_rank_[order[i]] = static_cast<std::uint32_t>(i);

        static_bodies_.clear();
        for (const auto& law : static_)
            static_bodies_.push_back(make_set(law.body));
        dynamic_conditions_.clear();
        for (const auto& law : dynamic_)
            dynamic_conditions_.push_back(make_set(law.condition));
        preconditions_.clear();
        for (const auto& law : executability_)
            preconditions_.push_back(make_set(law.precondition));
    }

    std::vector<std::string> fluents_;
    std::vector<Action> actions_;
    std::vector<ExecutabilityLaw> executability_;
    std::vector<DynamicLaw> dynamic_;
    std::vector<StaticLaw> static_;
    std::vector<KProposition> sensing_;
    std::vector<std::vector<Literal>> oneof_groups_;
    std::vector<Literal> initially_;
    std::vector<Literal> goal_;

    std::unordered_map<std::string, FluentId> fluent_index_;
    std::unordered_map<std::string, ActionId> action_index_;
    std::vector<std::uint32_t> name_rank_;
    std::vector<LiteralSet> static_bodies_;
    std::vector<LiteralSet> dynamic_conditions_;
    std::vector<LiteralSet> preconditions_;
};

// Incremental construction of an ActionTheory. Declarations are idempotent:
// repeating an identical proposition has no effect.
class TheoryBuilder {
public:
    FluentId fluent(std::string_view name)
    {
        if (auto it = fluents_.find(std::string{name}); it != fluents_.end())
            return it->second;
        const auto id = static_cast<FluentId>(t_.fluents_.size());
        t_.fluents_.emplace_back(name);
        fluents_.emplace(std::string{name}, id);
        return id;
    }
    ActionId action(std::string_view name)
    {
        if (auto it = actions_.find(std::string{name}); it != actions_.end())
            return it->second;
        const auto id = static_cast<ActionId>(t_.actions_.size());
        t_.actions_.push_back({std::string{name}, ActionKind::NonSensing});
        actions_.emplace(std::string{name}, id);
        return id;
    }

    [[nodiscard]] std::optional<FluentId> find_fluent(std::string_view name) const
    {
        if (auto it = fluents_.find(std::string{name}); it != fluents_.end())
            return it->second;
        return std::nullopt;
    }
    [[nodiscard]] std::optional<ActionId> find_action(std::string_view name) const
    {
        if (auto it = actions_.find(std::string{name}); it != actions_.end())
            return it->second;
        return std::nullopt;
    }

    // Positive or negative literal over a declared fluent.
    [[nodiscard]] Literal pos(std::string_view fluent_name) const { return {require_fluent(fluent_name), true}; }
    [[nodiscard]] Literal neg(std::string_view fluent_name) const { return {require_fluent(fluent_name), false}; }

    TheoryBuilder& executable(ActionId a, std::vector<Literal> psi)
    {
        add_unique(t_.executability_, ExecutabilityLaw{a, dedup(std::move(psi))});
        return *this;
    }
    TheoryBuilder& causes(ActionId a, Literal l, std::vector<Literal> phi)
    {
        add_unique(t_.dynamic_, DynamicLaw{a, l, dedup(std::move(phi))});
        return *this;
    }
    TheoryBuilder& static_law(Literal l, std::vector<Literal> body)
    {
        add_unique(t_.static_, StaticLaw{l, dedup(std::move(body)), std::nullopt});
        return *this;
    }
    TheoryBuilder& determines(ActionId a, std::vector<Literal> theta)
    {
        add_unique(t_.sensing_, KProposition{a, dedup(std::move(theta))});
        return *this;
    }
    TheoryBuilder& oneof(std::vector<Literal> theta)
    {
        theta = dedup(std::move(theta));
        if (std::find(t_.oneof_groups_.begin(), t_.oneof_groups_.end(), theta) != t_.oneof_groups_.end())
            return *this;
        const auto group = t_.oneof_groups_.size();
        for (auto& law : expand_oneof(theta, group))
            t_.static_.push_back(std::move(law));
        t_.oneof_groups_.push_back(std::move(theta));
        return *this;
    }
    TheoryBuilder& initially(Literal l)
    {
        add_unique(t_.initially_, l);
        return *this;
    }
    TheoryBuilder& goal(Literal l)
    {
        add_unique(t_.goal_, l);
        return *this;
    }

    [[nodiscard]] ActionTheory build() const
    {
        ActionTheory out = t_;
        out.finalize();
        return out;
    }

private:
    FluentId require_fluent(std::string_view name) const
    {
        if (auto id = find_fluent(name))
            return *id;
        throw std::invalid_argument("undeclared fluent '" + std::string{name} + "'");
    }

    static std::vector<Literal> dedup(std::vector<Literal> v)
    {
        std::vector<Literal> out;
        for (const Literal l : v)
            if (std::find(out.begin(), out.end(), l) == out.end())
                out.push_back(l);
        return out;
    }
    template <typename T>
    static void add_unique(std::vector<T>& v, T item)
    {
        if (std::find(v.begin(), v.end(), item) == v.end())
            v.push_back(std::move(item));
    }

    ActionTheory t_;
    std::unordered_map<std::string, FluentId> fluents_;
    std::unordered_map<std::string, ActionId> actions_;
};

// Structural problems of a theory. An empty result means the theory is
// well-formed.
[[nodiscard]] inline std::vector<std::string> validate_theory(const ActionTheory& t)
{
    std::vector<std::string> violations;
    auto name = [&](ActionId a) { return t.action(a).name; };

    for (const auto& f : t.fluents())
        if (t.find_action(f))
            violations.push_back("name '" + f + "' is declared both as a fluent and as an action");

    std::set<ActionId> with_effects;
    for (const auto& law : t.dynamic_laws())
        with_effects.insert(law.action);
    std::map<ActionId, int> k_count;
    for (const auto& k : t.k_propositions())
        ++k_count[k.action];
    for (const auto& [a, n] : k_count) {
        if (with_effects.count(a))
            violations.push_back("action '" + name(a) + "' is both sensing and non-sensing");
        if (n > 1)
            violations.push_back("sensing action '" + name(a) + "' appears in more than one determines proposition");
    }

    auto same_law = [](const StaticLaw& law, Literal head, const std::vector<Literal>& body) {
        if (law.head != head || law.body.size() != body.size())
            return false;
        return std::is_permutation(law.body.begin(), law.body.end(), body.begin());
    };
    for (const auto& k : t.k_propositions()) {
        if (k.sensed.size() < 2) {
            violations.push_back("determines(" + name(k.action) + ", ...) must sense at least two literals");
            continue;
        }
        if (is_complementary_pair(k.sensed))
            continue;
        for (const auto& required : expand_oneof(k.sensed)) {
            const bool present = std::any_of(t.static_laws().begin(), t.static_laws().end(), [&](const StaticLaw& law) {
                return same_law(law, required.head, required.body);
            });
            if (!present) {
                violations.push_back("sensed literals of '" + name(k.action)
                                     + "' are not declared mutually exclusive (missing oneof laws)");
                break;
            }
        }
    }

    for (const auto& law : t.static_laws())
        if (law.body.empty())
            violations.push_back("static law for " + t.literal_name(law.head) + " has an empty body");

    if (t.goal().empty())
        violations.push_back("no goal declared");

    if (!t.make_set(t.initially()).consistent())
        violations.push_back("initial facts are inconsistent");

    return violations;
}

} // namespace akc
