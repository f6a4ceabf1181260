#pragma once

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace akc {

struct SourcePos {
    std::size_t line = 1;
    std::size_t column = 1;
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, SourcePos pos)
        : std::runtime_error(std::to_string(pos.line) + ":" + std::to_string(pos.column) + ": " + message), pos_{pos}
    {
    }
    [[nodiscard]] SourcePos position() const { return pos_; }

private:
    SourcePos pos_;
};

enum class TokenKind { Ident, Number, LParen, RParen, LBracket, RBracket, Comma, Dot, Semicolon, Arrow, Tilde, Amp, Bar, End };

struct Token {
    TokenKind kind;
    std::string text;
    SourcePos pos;
};

[[nodiscard]] inline std::string describe(TokenKind k)
{
    switch (k) {
    case TokenKind::Ident: return "identifier";
    case TokenKind::Number: return "number";
    case TokenKind::LParen: return "'('";
    case TokenKind::RParen: return "')'";
    case TokenKind::LBracket: return "'['";
    case TokenKind::RBracket: return "']'";
    case TokenKind::Comma: return "','";
    case TokenKind::Dot: return "'.'";
    case TokenKind::Semicolon: return "';'";
    case TokenKind::Arrow: return "'->'";
    case TokenKind::Tilde: return "'~'";
    case TokenKind::Amp: return "'&'";
    case TokenKind::Bar: return "'|'";
    case TokenKind::End: return "end of input";
    }
    return "token";
}

// Identifiers start with a lowercase letter and continue with letters,
// digits or underscores. '%' starts a comment running to end of line.
[[nodiscard]] inline std::vector<Token> tokenize(std::string_view text)
{
    std::vector<Token> out;
    SourcePos pos;
    std::size_t i = 0;
    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k, ++i) {
            if (text[i] == '\n') {
                ++pos.line;
                pos.column = 1;
            } else {
                ++pos.column;
            }
        }
    };
    while (i < text.size()) {
        const char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
            continue;
        }
        if (c == '%') {
            while (i < text.size() && text[i] != '\n')
                advance(1);
            continue;
        }
        const SourcePos start = pos;
        if (std::islower(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
                ++j;
            out.push_back({TokenKind::Ident, std::string{text.substr(i, j - i)}, start});
            advance(j - i);
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])))
                ++j;
            out.push_back({TokenKind::Number, std::string{text.substr(i, j - i)}, start});
            advance(j - i);
            continue;
        }
        if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
            out.push_back({TokenKind::Arrow, "->", start});
            advance(2);
            continue;
        }
        TokenKind kind;
        switch (c) {
        case '(': kind = TokenKind::LParen; break;
        case ')': kind = TokenKind::RParen; break;
        case '[': kind = TokenKind::LBracket; break;
        case ']': kind = TokenKind::RBracket; break;
        case ',': kind = TokenKind::Comma; break;
        case '.': kind = TokenKind::Dot; break;
        case ';': kind = TokenKind::Semicolon; break;
        case '~': kind = TokenKind::Tilde; break;
        case '&': kind = TokenKind::Amp; break;
        case '|': kind = TokenKind::Bar; break;
        default: throw ParseError(std::string{"unexpected character '"} + c + "'", start);
        }
        out.push_back({kind, std::string(1, c), start});
        advance(1);
    }
    out.push_back({TokenKind::End, "", pos});
    return out;
}

// Cursor over a token vector with expect/accept helpers.
class TokenStream {
public:
    explicit TokenStream(std::vector<Token> tokens) : tokens_{std::move(tokens)} {}
    explicit TokenStream(std::string_view text) : tokens_{tokenize(text)} {}

    [[nodiscard]] const Token& peek(std::size_t ahead = 0) const
    {
        return tokens_[std::min(index_ + ahead, tokens_.size() - 1)];
    }
    [[nodiscard]] bool at(TokenKind k) const { return peek().kind == k; }
    [[nodiscard]] bool at_end() const { return at(TokenKind::End); }

    const Token& next()
    {
        const Token& t = peek();
        if (index_ < tokens_.size() - 1)
            ++index_;
        return t;
    }
    bool accept(TokenKind k)
    {
        if (!at(k))
            return false;
        next();
        return true;
    }
    const Token& expect(TokenKind k)
    {
        if (!at(k))
            fail("expected " + describe(k) + ", found " + found());
        return next();
    }
    [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, peek().pos); }

    [[nodiscard]] std::string found() const
    {
        const Token& t = peek();
        if (t.kind == TokenKind::Ident || t.kind == TokenKind::Number)
            return "'" + t.text + "'";
        return describe(t.kind);
    }

private:
    std::vector<Token> tokens_;
    std::size_t index_ = 0;
};

} // namespace akc
