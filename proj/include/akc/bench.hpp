#pragma once

#include "akc/theory.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace akc::bench {

enum class Family { BT, BMT, BTC, BMTC, BTUC, BMTUC, RING, DOM, BTS1, BTS2, BTS3, BTS4, MED, SICK, RINGS, DOMS };

struct BenchmarkSpec {
    Family family;
    std::vector<int> params;
};

struct FamilyInfo {
    Family family;
    const char* name;
    std::size_t arity;
    const char* usage;
};

inline const std::vector<FamilyInfo>& families()
{
    static const std::vector<FamilyInfo> info{
        {Family::BT, "BT", 1, "BT PACKAGES"},
        {Family::BMT, "BMT", 2, "BMT PACKAGES TOILETS"},
        {Family::BTC, "BTC", 1, "BTC PACKAGES"},
        {Family::BMTC, "BMTC", 2, "BMTC PACKAGES TOILETS"},
        {Family::BTUC, "BTUC", 1, "BTUC PACKAGES"},
        {Family::BMTUC, "BMTUC", 2, "BMTUC PACKAGES TOILETS"},
        {Family::RING, "RING", 1, "RING ROOMS"},
        {Family::DOM, "DOM", 1, "DOM DOMINOS"},
        {Family::BTS1, "BTS1", 1, "BTS1 PACKAGES"},
        {Family::BTS2, "BTS2", 1, "BTS2 PACKAGES"},
        {Family::BTS3, "BTS3", 1, "BTS3 PACKAGES"},
        {Family::BTS4, "BTS4", 1, "BTS4 PACKAGES"},
        {Family::MED, "MED", 1, "MED VARIANT(1-5)"},
        {Family::SICK, "SICK", 1, "SICK ILLNESSES"},
        {Family::RINGS, "RINGS", 1, "RINGS ROOMS"},
        {Family::DOMS, "DOMS", 1, "DOMS DOMINOS"},
    };
    return info;
}

[[nodiscard]] inline std::optional<Family> parse_family(std::string_view name)
{
    std::string upper{name};
    std::transform(upper.begin(), upper.end(), upper.begin(), [](unsigned char c) { return std::toupper(c); });
    for (const auto& f : families())
        if (upper == f.name)
            return f.family;
    return std::nullopt;
}

[[nodiscard]] inline const FamilyInfo& info(Family f)
{
    for (const auto& i : families())
        if (i.family == f)
            return i;
    throw std::invalid_argument("unknown family");
}

namespace detail {

inline std::string idx(const char* stem, int i) { return std::string{stem} + "_" + std::to_string(i); }

struct BombOptions {
    int packages = 1;
    int toilets = 1;
    bool clogging = false;
    bool clog_known = true;
    std::vector<std::string> sensors;
};

// Packages p_i, one of which holds the bomb; dunking a package into a
// toilet disarms it. With clogging, a dunk clogs the toilet and a clogged
// toilet has to be flushed before the next dunk.
inline ActionTheory bomb(const BombOptions& o)
{
    TheoryBuilder b;
    for (int i = 1; i <= o.packages; ++i)
        b.fluent(idx("in_p", i));
    for (int i = 1; i <= o.packages; ++i)
        b.fluent(idx("armed_p", i));
    if (o.clogging)
        for (int j = 1; j <= o.toilets; ++j)
            b.fluent(idx("clogged_t", j));

    for (int i = 1; i <= o.packages; ++i)
        for (int j = 1; j <= o.toilets; ++j)
            b.action("dunk_p" + std::to_string(i) + "_t" + std::to_string(j));
    if (o.clogging)
        for (int j = 1; j <= o.toilets; ++j)
            b.action(idx("flush_t", j));
    for (const auto& sensor : o.sensors)
        for (int i = 1; i <= o.packages; ++i)
            b.action(sensor + "_p" + std::to_string(i));

    for (int i = 1; i <= o.packages; ++i) {
        for (int j = 1; j <= o.toilets; ++j) {
            const auto a = *b.find_action("dunk_p" + std::to_string(i) + "_t" + std::to_string(j));
            if (o.clogging)
                b.executable(a, {b.neg(idx("clogged_t", j))});
            else
                b.executable(a, {});
        }
    }
    if (o.clogging)
        for (int j = 1; j <= o.toilets; ++j)
            b.executable(*b.find_action(idx("flush_t", j)), {});
    for (const auto& sensor : o.sensors)
        for (int i = 1; i <= o.packages; ++i)
            b.executable(*b.find_action(sensor + "_p" + std::to_string(i)), {});

    for (int i = 1; i <= o.packages; ++i) {
        for (int j = 1; j <= o.toilets; ++j) {
            const auto a = *b.find_action("dunk_p" + std::to_string(i) + "_t" + std::to_string(j));
            b.causes(a, b.neg(idx("armed_p", i)), {});
            if (o.clogging)
                b.causes(a, b.pos(idx("clogged_t", j)), {});
        }
    }
    if (o.clogging)
        for (int j = 1; j <= o.toilets; ++j)
            b.causes(*b.find_action(idx("flush_t", j)), b.neg(idx("clogged_t", j)), {});

    for (const auto& sensor : o.sensors)
        for (int i = 1; i <= o.packages; ++i)
            b.determines(*b.find_action(sensor + "_p" + std::to_string(i)),
                         {b.pos(idx("in_p", i)), b.neg(idx("in_p", i))});

    for (int i = 1; i <= o.packages; ++i)
        b.static_law(b.neg(idx("armed_p", i)), {b.neg(idx("in_p", i))});
    if (o.packages >= 2) {
        std::vector<Literal> location;
        for (int i = 1; i <= o.packages; ++i)
            location.push_back(b.pos(idx("in_p", i)));
        b.oneof(location);
    } else {
        b.initially(b.pos("in_p_1"));
    }

    if (o.clogging && o.clog_known)
        for (int j = 1; j <= o.toilets; ++j)
            b.initially(b.neg(idx("clogged_t", j)));
    for (int i = 1; i <= o.packages; ++i)
        b.goal(b.neg(idx("armed_p", i)));
    return b.build();
}

// A ring of rooms, each with one window that is open, closed or locked.
// The agent knows where it is but not the window states. In the sensing
// variant the agent can observe the window of the room it is in, and
// closing only affects an open window.
inline ActionTheory ring(int n, bool sensing)
{
    TheoryBuilder b;
    for (int i = 1; i <= n; ++i)
        b.fluent(idx("at", i));
    for (int i = 1; i <= n; ++i) {
        b.fluent(idx("open", i));
        b.fluent(idx("closed", i));
        b.fluent(idx("locked", i));
    }
    const bool moves = n >= 2;
    if (moves) {
        b.action("forward");
        b.action("backward");
    }
    b.action("close");
    b.action("lock");
    if (sensing)
        for (int i = 1; i <= n; ++i)
            b.action(idx("observe", i));

    if (moves) {
        b.executable(*b.find_action("forward"), {});
        b.executable(*b.find_action("backward"), {});
    }
    b.executable(*b.find_action("close"), {});
    b.executable(*b.find_action("lock"), {});
    if (sensing)
        for (int i = 1; i <= n; ++i)
            b.executable(*b.find_action(idx("observe", i)), {b.pos(idx("at", i))});

    if (moves) {
        for (int i = 1; i <= n; ++i) {
            const int next = i % n + 1;
            const int prev = (i + n - 2) % n + 1;
            b.causes(*b.find_action("forward"), b.pos(idx("at", next)), {b.pos(idx("at", i))});
            b.causes(*b.find_action("backward"), b.pos(idx("at", prev)), {b.pos(idx("at", i))});
        }
    }
    for (int i = 1; i <= n; ++i) {
        std::vector<Literal> when{b.pos(idx("at", i))};
        if (sensing)
            when.push_back(b.pos(idx("open", i)));
        b.causes(*b.find_action("close"), b.pos(idx("closed", i)), when);
    }
    for (int i = 1; i <= n; ++i)
        b.causes(*b.find_action("lock"), b.pos(idx("locked", i)), {b.pos(idx("at", i)), b.pos(idx("closed", i))});

    if (sensing)
        for (int i = 1; i <= n; ++i)
            b.determines(*b.find_action(idx("observe", i)),
                         {b.pos(idx("open", i)), b.pos(idx("closed", i)), b.pos(idx("locked", i))});

    if (moves) {
        std::vector<Literal> where;
        for (int i = 1; i <= n; ++i)
            where.push_back(b.pos(idx("at", i)));
        b.oneof(where);
    }
    for (int i = 1; i <= n; ++i)
        b.oneof({b.pos(idx("open", i)), b.pos(idx("closed", i)), b.pos(idx("locked", i))});

    b.initially(b.pos("at_1"));
    for (int i = 1; i <= n; ++i)
        b.goal(b.pos(idx("locked", i)));
    return b.build();
}

// A row of dominos; touching the first one topples every domino behind it
// through static laws.
inline ActionTheory domino(int n)
{
    TheoryBuilder b;
    for (int i = 1; i <= n; ++i)
        b.fluent(idx("fall", i));
    const auto touch = b.action("touch");
    b.executable(touch, {});
    b.causes(touch, b.pos("fall_1"), {});
    for (int i = 1; i < n; ++i)
        b.static_law(b.pos(idx("fall", i + 1)), {b.pos(idx("fall", i))});
    for (int i = 1; i <= n; ++i)
        b.initially(b.neg(idx("fall", i)));
    b.goal(b.pos(idx("fall", n)));
    return b.build();
}

// Dominos that may be glued to the table; a glued domino neither falls nor
// passes the fall on. Glue can be observed and removed.
inline ActionTheory glued_domino(int n)
{
    TheoryBuilder b;
    for (int i = 1; i <= n; ++i)
        b.fluent(idx("fall", i));
    for (int i = 1; i <= n; ++i)
        b.fluent(idx("glued", i));
    const auto touch = b.action("touch");
    for (int i = 1; i <= n; ++i)
        b.action(idx("unglue", i));
    for (int i = 1; i <= n; ++i)
        b.action(idx("observe", i));

    b.executable(touch, {});
    for (int i = 1; i <= n; ++i)
        b.executable(*b.find_action(idx("unglue", i)), {b.pos(idx("glued", i))});
    for (int i = 1; i <= n; ++i)
        b.executable(*b.find_action(idx("observe", i)), {});

    b.causes(touch, b.pos("fall_1"), {b.neg("glued_1")});
    for (int i = 1; i <= n; ++i)
        b.causes(*b.find_action(idx("unglue", i)), b.neg(idx("glued", i)), {});
    for (int i = 1; i <= n; ++i)
        b.determines(*b.find_action(idx("observe", i)), {b.pos(idx("glued", i)), b.neg(idx("glued", i))});
    for (int i = 1; i < n; ++i)
        b.static_law(b.pos(idx("fall", i + 1)), {b.pos(idx("fall", i)), b.neg(idx("glued", i + 1))});
    for (int i = 1; i <= n; ++i)
        b.initially(b.neg(idx("fall", i)));
    b.goal(b.pos(idx("fall", n)));
    return b.build();
}

// A patient with one of five illnesses, told apart by the color of a
// cultured sample and by a blood analysis. Variants differ in what is known
// about the illness initially.
inline ActionTheory medical(int variant)
{
    TheoryBuilder b;
    for (int i = 1; i <= 5; ++i)
        b.fluent(idx("ill", i));
    for (const char* f : {"red", "blue", "white", "high", "cultured", "sampled", "cured", "dead"})
        b.fluent(f);

    const auto culture = b.action("culture");
    const auto inspect = b.action("inspect");
    const auto take_blood = b.action("take_blood");
    const auto analyze = b.action("analyze");
    for (int i = 1; i <= 5; ++i)
        b.action(idx("medicate", i));

    b.executable(culture, {});
    b.executable(inspect, {b.pos("cultured")});
    b.executable(take_blood, {});
    b.executable(analyze, {b.pos("sampled")});
    for (int i = 1; i <= 5; ++i)
        b.executable(*b.find_action(idx("medicate", i)), {});

    b.causes(culture, b.pos("cultured"), {});
    b.causes(take_blood, b.pos("sampled"), {});
    for (int i = 1; i <= 5; ++i) {
        const auto m = *b.find_action(idx("medicate", i));
        b.causes(m, b.pos("cured"), {b.pos(idx("ill", i))});
        b.causes(m, b.pos("dead"), {b.neg(idx("ill", i))});
    }

    b.determines(inspect, {b.pos("red"), b.pos("blue"), b.pos("white")});
    b.determines(analyze, {b.pos("high"), b.neg("high")});

    b.oneof({b.pos("red"), b.pos("blue"), b.pos("white")});
    b.static_law(b.pos("ill_1"), {b.pos("red")});
    b.static_law(b.pos("ill_2"), {b.pos("blue"), b.pos("high")});
    b.static_law(b.pos("ill_3"), {b.pos("blue"), b.neg("high")});
    b.static_law(b.pos("ill_4"), {b.pos("white"), b.pos("high")});
    b.static_law(b.pos("ill_5"), {b.pos("white"), b.neg("high")});

    for (const char* f : {"dead", "cured", "cultured", "sampled"})
        b.initially(b.neg(f));
    switch (variant) {
    case 1: b.initially(b.pos("ill_1")); break;
    case 2: break;
    case 3: b.initially(b.neg("ill_1")); break;
    case 4:
        b.initially(b.neg("ill_1"));
        b.initially(b.neg("ill_2"));
        break;
    case 5:
        b.initially(b.neg("ill_1"));
        b.initially(b.neg("ill_2"));
        b.initially(b.neg("ill_4"));
        break;
    default: throw std::invalid_argument("MED variant must be between 1 and 5");
    }
    b.goal(b.pos("cured"));
    b.goal(b.neg("dead"));
    return b.build();
}

// One of n illnesses, each with its own culture color.
inline ActionTheory sick(int n)
{
    TheoryBuilder b;
    for (int i = 1; i <= n; ++i)
        b.fluent(idx("ill", i));
    for (int i = 1; i <= n; ++i)
        b.fluent(idx("color", i));
    for (const char* f : {"cultured", "cured", "dead"})
        b.fluent(f);

    const auto culture = b.action("culture");
    const auto inspect = b.action("inspect");
    for (int i = 1; i <= n; ++i)
        b.action(idx("medicate", i));

    b.executable(culture, {});
    b.executable(inspect, {b.pos("cultured")});
    for (int i = 1; i <= n; ++i)
        b.executable(*b.find_action(idx("medicate", i)), {});

    b.causes(culture, b.pos("cultured"), {});
    for (int i = 1; i <= n; ++i) {
        const auto m = *b.find_action(idx("medicate", i));
        b.causes(m, b.pos("cured"), {b.pos(idx("ill", i))});
        b.causes(m, b.pos("dead"), {b.neg(idx("ill", i))});
    }

    std::vector<Literal> colors;
    for (int i = 1; i <= n; ++i)
        colors.push_back(b.pos(idx("color", i)));
    if (n >= 2) {
        b.determines(inspect, colors);
        std::vector<Literal> ills;
        for (int i = 1; i <= n; ++i)
            ills.push_back(b.pos(idx("ill", i)));
        b.oneof(ills);
        b.oneof(colors);
    } else {
        b.determines(inspect, {b.pos("color_1"), b.neg("color_1")});
    }
    for (int i = 1; i <= n; ++i)
        b.static_law(b.pos(idx("ill", i)), {b.pos(idx("color", i))});

    for (const char* f : {"dead", "cured", "cultured"})
        b.initially(b.neg(f));
    b.goal(b.pos("cured"));
    b.goal(b.neg("dead"));
    return b.build();
}

} // namespace detail

[[nodiscard]] inline ActionTheory generate(const BenchmarkSpec& spec)
{
    const auto& fi = info(spec.family);
    if (spec.params.size() != fi.arity)
        throw std::invalid_argument(std::string{"usage: "} + fi.usage);
    for (const int p : spec.params)
        if (p < 1)
            throw std::invalid_argument("benchmark parameters must be positive");
    const int n = spec.params[0];
    const int second = spec.params.size() > 1 ? spec.params[1] : 1;
    using detail::BombOptions;
    switch (spec.family) {
    case Family::BT: return detail::bomb({n, 1, false, true, {}});
    case Family::BMT: return detail::bomb({n, second, false, true, {}});
    case Family::BTC: return detail::bomb({n, 1, true, true, {}});
    case Family::BMTC: return detail::bomb({n, second, true, true, {}});
    case Family::BTUC: return detail::bomb({n, 1, true, false, {}});
    case Family::BMTUC: return detail::bomb({n, second, true, false, {}});
    case Family::BTS1: return detail::bomb({n, 1, true, true, {"detect_metal"}});
    case Family::BTS2: return detail::bomb({n, 1, true, true, {"detect_metal", "sniff"}});
    case Family::BTS3: return detail::bomb({n, 1, true, true, {"detect_metal", "sniff", "xray"}});
    case Family::BTS4:
        return detail::bomb({n, 1, true, true, {"detect_metal", "sniff", "xray", "listen_for_ticking"}});
    case Family::RING: return detail::ring(n, false);
    case Family::RINGS: return detail::ring(n, true);
    case Family::DOM: return detail::domino(n);
    case Family::DOMS: return detail::glued_domino(n);
    case Family::MED: return detail::medical(n);
    case Family::SICK: return detail::sick(n);
    }
    throw std::invalid_argument("unknown family");
}

[[nodiscard]] inline ActionTheory generate(Family f, std::vector<int> params)
{
    return generate(BenchmarkSpec{f, std::move(params)});
}

} // namespace akc::bench
