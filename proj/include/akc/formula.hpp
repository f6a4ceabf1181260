#pragma once

#include "akc/literal.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace akc {

// Propositional fluent formula: literal leaves under negation, conjunction and
// disjunction.
class Formula {
public:
    enum class Kind { Literal, Not, And, Or };

    static Formula literal(Literal l) { return Formula{Kind::Literal, l, {}}; }
    static Formula negation(Formula f) { return Formula{Kind::Not, {}, {std::move(f)}}; }
    static Formula conjunction(Formula a, Formula b) { return Formula{Kind::And, {}, {std::move(a), std::move(b)}}; }
    static Formula disjunction(Formula a, Formula b) { return Formula{Kind::Or, {}, {std::move(a), std::move(b)}}; }

    // Conjunction of a nonempty literal list, left-nested.
    static Formula all_of(std::span<const Literal> literals)
    {
        if (literals.empty())
            throw std::invalid_argument("conjunction of an empty literal list");
        Formula out = literal(literals.front());
        for (std::size_t i = 1; i < literals.size(); ++i)
            out = conjunction(std::move(out), literal(literals[i]));
        return out;
    }

    [[nodiscard]] Kind kind() const { return kind_; }
    [[nodiscard]] Literal leaf() const { return leaf_; }
    [[nodiscard]] const std::vector<Formula>& operands() const { return operands_; }

    friend bool operator==(const Formula&, const Formula&) = default;

private:
    Formula(Kind kind, Literal leaf, std::vector<Formula> operands)
        : kind_{kind}, leaf_{leaf}, operands_{std::move(operands)}
    {
    }

    Kind kind_;
    Literal leaf_;
    std::vector<Formula> operands_;
};

namespace detail {

inline TruthValue eval_unchecked(const LiteralSet& sigma, const Formula& rho)
{
    using enum TruthValue;
    switch (rho.kind()) {
    case Formula::Kind::Literal:
        if (sigma.contains(rho.leaf()))
            return True;
        if (sigma.contains(rho.leaf().complement()))
            return False;
        return Unknown;
    case Formula::Kind::Not:
        switch (eval_unchecked(sigma, rho.operands()[0])) {
        case True: return False;
        case False: return True;
        case Unknown: return Unknown;
        }
        break;
    case Formula::Kind::And: {
        const auto a = eval_unchecked(sigma, rho.operands()[0]);
        const auto b = eval_unchecked(sigma, rho.operands()[1]);
        if (a == True && b == True)
            return True;
        if (a == False || b == False)
            return False;
        return Unknown;
    }
    case Formula::Kind::Or: {
        const auto a = eval_unchecked(sigma, rho.operands()[0]);
        const auto b = eval_unchecked(sigma, rho.operands()[1]);
        if (a == True || b == True)
            return True;
        if (a == False && b == False)
            return False;
        return Unknown;
    }
    }
    return Unknown;
}

} // namespace detail

// Three-valued truth of rho in a consistent literal set.
[[nodiscard]] inline TruthValue eval_formula(const LiteralSet& sigma, const Formula& rho)
{
    if (!sigma.consistent())
        throw std::invalid_argument("formula evaluated against an inconsistent literal set");
    return detail::eval_unchecked(sigma, rho);
}

} // namespace akc
