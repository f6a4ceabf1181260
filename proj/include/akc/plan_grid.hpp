#pragma once

#include "akc/plan.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace akc {

// A plan-tree node placed on the (time, path) grid.
struct GridNode {
    std::size_t t = 1;
    std::size_t p = 1;
    std::optional<std::string> action;       // empty for leaves
    std::optional<std::size_t> parent;       // index into PlanGrid::nodes
    std::optional<PlanLiteral> branch_label; // set when reached through a case
};

struct GridOccurrence {
    std::string action;
    std::size_t t;
    std::size_t p;
    friend bool operator==(const GridOccurrence&, const GridOccurrence&) = default;
};

struct GridBranch {
    PlanLiteral label;
    std::size_t t;
    std::size_t from;
    std::size_t to;
    friend bool operator==(const GridBranch&, const GridBranch&) = default;
};

struct PlanGrid {
    std::size_t h = 1;
    std::size_t w = 1;
    std::vector<GridNode> nodes; // nodes[0] is the root

    [[nodiscard]] std::vector<GridOccurrence> occurrences() const
    {
        std::vector<GridOccurrence> out;
        for (const auto& n : nodes)
            if (n.action)
                out.push_back({*n.action, n.t, n.p});
        return out;
    }
    [[nodiscard]] std::vector<GridBranch> branches() const
    {
        std::vector<GridBranch> out;
        for (const auto& n : nodes)
            if (n.branch_label)
                out.push_back({*n.branch_label, nodes[*n.parent].t, nodes[*n.parent].p, n.p});
        return out;
    }
};

class GridError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

// Places p with its first node at (t, column); returns the next free column.
inline std::size_t place(const ConditionalPlan& p, std::size_t t, std::size_t column, std::optional<std::size_t> parent,
                         std::optional<PlanLiteral> label, std::vector<GridNode>& nodes)
{
    auto add = [&](std::optional<std::string> action) {
        nodes.push_back({t, column, std::move(action), parent, std::move(label)});
        label.reset();
        parent = nodes.size() - 1;
    };
    for (const auto& a : p.sequence) {
        add(a);
        ++t;
    }
    if (!p.cases) {
        add(std::nullopt);
        return column + 1;
    }
    add(p.cases->action);
    const std::size_t self = *parent;
    std::size_t next = column;
    for (const auto& b : p.cases->branches)
        next = place(b.plan, t + 1, next, self, b.label, nodes);
    return next;
}

} // namespace detail

// Leaves get columns 1, 2, ... from left to right; every other node takes
// the column of its leftmost leaf. Action nodes need t <= h; leaves may sit
// at h + 1.
[[nodiscard]] inline PlanGrid number_plan(const ConditionalPlan& p, std::size_t h, std::size_t w)
{
    if (h < 1 || w < 1)
        throw GridError("grid bounds must be positive");
    if (plan_depth(p) > h)
        throw GridError("plan depth " + std::to_string(plan_depth(p)) + " exceeds h = " + std::to_string(h));
    if (plan_width(p) > w)
        throw GridError("plan width " + std::to_string(plan_width(p)) + " exceeds w = " + std::to_string(w));
    PlanGrid g{h, w, {}};
    detail::place(p, 1, 1, std::nullopt, std::nullopt, g.nodes);
    return g;
}

// Structural numbering properties: root at (1,1); distinct leaf columns,
// one of them 1; each inner node on the minimum column of its children;
// bounds respected.
[[nodiscard]] inline bool grid_well_formed(const PlanGrid& g)
{
    if (g.nodes.empty() || g.nodes[0].t != 1 || g.nodes[0].p != 1)
        return false;
    std::vector<std::vector<std::size_t>> children(g.nodes.size());
    for (std::size_t i = 1; i < g.nodes.size(); ++i) {
        const auto& n = g.nodes[i];
        if (!n.parent || *n.parent >= i)
            return false;
        children[*n.parent].push_back(i);
        if (n.t != g.nodes[*n.parent].t + 1)
            return false;
    }
    std::vector<std::size_t> leaf_columns;
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        const auto& n = g.nodes[i];
        if (n.p < 1 || n.p > g.w)
            return false;
        if (n.action ? n.t > g.h : n.t > g.h + 1)
            return false;
        if (children[i].empty()) {
            leaf_columns.push_back(n.p);
            continue;
        }
        std::size_t lowest = g.nodes[children[i].front()].p;
        for (const auto c : children[i])
            lowest = std::min(lowest, g.nodes[c].p);
        if (lowest != n.p)
            return false;
    }
    std::sort(leaf_columns.begin(), leaf_columns.end());
    if (std::adjacent_find(leaf_columns.begin(), leaf_columns.end()) != leaf_columns.end())
        return false;
    return !leaf_columns.empty() && leaf_columns.front() == 1;
}

} // namespace akc
