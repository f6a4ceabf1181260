#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

namespace akc {

using FluentId = std::uint32_t;

// A fluent literal: a fluent index into the owning theory plus a polarity.
struct Literal {
    FluentId fluent = 0;
    bool positive = true;

    [[nodiscard]] constexpr Literal complement() const { return {fluent, !positive}; }

    // Bit position inside a LiteralSet: 2f for f, 2f+1 for neg(f).
    [[nodiscard]] constexpr std::size_t code() const { return 2 * std::size_t{fluent} + (positive ? 0 : 1); }
    [[nodiscard]] static constexpr Literal from_code(std::size_t code)
    {
        return {static_cast<FluentId>(code / 2), code % 2 == 0};
    }

    friend constexpr auto operator<=>(const Literal&, const Literal&) = default;
};

[[nodiscard]] constexpr Literal complement(Literal l) { return l.complement(); }

enum class TruthValue { False, Unknown, True };

// A set of literals over a fixed fluent vocabulary, stored as a bitset of
// 2 * fluent_count bits. Iteration order is by literal code.
class LiteralSet {
public:
    LiteralSet() = default;
    explicit LiteralSet(std::size_t fluent_count)
        : fluent_count_{fluent_count}, words_((2 * fluent_count + 63) / 64, 0)
    {
    }
    LiteralSet(std::size_t fluent_count, std::span<const Literal> literals) : LiteralSet(fluent_count)
    {
        for (const Literal l : literals)
            insert(l);
    }
    LiteralSet(std::size_t fluent_count, std::initializer_list<Literal> literals)
        : LiteralSet(fluent_count, std::span<const Literal>{literals.begin(), literals.size()})
    {
    }

    [[nodiscard]] std::size_t fluent_count() const { return fluent_count_; }

    [[nodiscard]] bool contains(Literal l) const
    {
        const auto c = l.code();
        return (words_[c / 64] >> (c % 64)) & 1U;
    }
    void insert(Literal l)
    {
        check_range(l);
        const auto c = l.code();
        words_[c / 64] |= std::uint64_t{1} << (c % 64);
    }
    void erase(Literal l)
    {
        check_range(l);
        const auto c = l.code();
        words_[c / 64] &= ~(std::uint64_t{1} << (c % 64));
    }

    [[nodiscard]] bool empty() const
    {
        for (const auto w : words_)
            if (w != 0)
                return false;
        return true;
    }
    [[nodiscard]] std::size_t size() const
    {
        std::size_t n = 0;
        for (const auto w : words_)
            n += static_cast<std::size_t>(std::popcount(w));
        return n;
    }

    // No fluent appears with both polarities.
    [[nodiscard]] bool consistent() const
    {
        for (const auto w : words_)
            if ((w & (w >> 1) & kEvenBits) != 0)
                return false;
        return true;
    }

    // Every fluent appears with exactly one polarity.
    [[nodiscard]] bool complete() const
    {
        for (FluentId f = 0; f < fluent_count_; ++f)
            if (contains({f, true}) == contains({f, false}))
                return false;
        return true;
    }

    // { complement(l) | l in this }
    [[nodiscard]] LiteralSet complemented() const
    {
        LiteralSet out{*this};
        for (auto& w : out.words_)
            w = ((w & kEvenBits) << 1) | ((w >> 1) & kEvenBits);
        return out;
    }

    [[nodiscard]] bool is_subset_of(const LiteralSet& other) const
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if ((words_[i] & ~other.words_[i]) != 0)
                return false;
        return true;
    }
    [[nodiscard]] bool intersects(const LiteralSet& other) const
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if ((words_[i] & other.words_[i]) != 0)
                return true;
        return false;
    }

    LiteralSet& operator|=(const LiteralSet& other)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] |= other.words_[i];
        return *this;
    }
    LiteralSet& operator&=(const LiteralSet& other)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= other.words_[i];
        return *this;
    }
    // Set difference.
    LiteralSet& operator-=(const LiteralSet& other)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= ~other.words_[i];
        return *this;
    }
    friend LiteralSet operator|(LiteralSet a, const LiteralSet& b) { return a |= b; }
    friend LiteralSet operator&(LiteralSet a, const LiteralSet& b) { return a &= b; }
    friend LiteralSet operator-(LiteralSet a, const LiteralSet& b) { return a -= b; }

    [[nodiscard]] std::vector<Literal> literals() const
    {
        std::vector<Literal> out;
        for (std::size_t i = 0; i < words_.size(); ++i) {
            auto w = words_[i];
            while (w != 0) {
                const auto bit = static_cast<std::size_t>(std::countr_zero(w));
                out.push_back(Literal::from_code(64 * i + bit));
                w &= w - 1;
            }
        }
        return out;
    }

    [[nodiscard]] std::size_t hash() const
    {
        std::size_t h = fluent_count_;
        for (const auto w : words_)
            h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }

    friend bool operator==(const LiteralSet&, const LiteralSet&) = default;
    // Deterministic total order (by bit words); used for canonical set ordering.
    friend std::strong_ordering operator<=>(const LiteralSet& a, const LiteralSet& b)
    {
        if (auto c = a.fluent_count_ <=> b.fluent_count_; c != 0)
            return c;
        return a.words_ <=> b.words_;
    }

private:
    static constexpr std::uint64_t kEvenBits = 0x5555555555555555ULL;

    void check_range(Literal l) const
    {
        if (l.fluent >= fluent_count_)
            throw std::out_of_range("literal fluent index outside the vocabulary");
    }

    std::size_t fluent_count_ = 0;
    std::vector<std::uint64_t> words_;
};

// "gamma holds in sigma"
[[nodiscard]] inline bool holds(const LiteralSet& sigma, const LiteralSet& gamma) { return gamma.is_subset_of(sigma); }

// "gamma possibly holds in sigma": no complement of gamma is in sigma.
[[nodiscard]] inline bool possibly_holds(const LiteralSet& sigma, const LiteralSet& gamma)
{
    return !gamma.complemented().intersects(sigma);
}

struct LiteralSetHash {
    std::size_t operator()(const LiteralSet& s) const { return s.hash(); }
};

} // namespace akc
