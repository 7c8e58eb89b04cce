//----------------------------------*-C++-*----------------------------------//
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file SolidParser.cc
//---------------------------------------------------------------------------//
#include "qsolid/SolidParser.hh"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <sstream>
#include <vector>

namespace qsolid
{
namespace
{
//---------------------------------------------------------------------------//
enum class Tok
{
    number,
    variable,
    plus,
    minus,
    star,
    caret,
    le,
    ge,
    separator,
    end
};

struct Token
{
    Tok type;
    real_type value{0};  // number literal
    int var{0};  // 0, 1, 2 for x, y, z
    int line{1};
    int column{1};
};

//---------------------------------------------------------------------------//
/*!
 * Split source into tokens, tracking the constraint index for errors.
 */
class Lexer
{
  public:
    explicit Lexer(std::string_view text) : text_{text} {}

    std::vector<Token> tokenize()
    {
        std::vector<Token> result;
        while (pos_ < text_.size())
        {
            char c = text_[pos_];
            if (c == '#')
            {
                while (pos_ < text_.size() && text_[pos_] != '\n')
                    advance();
                continue;
            }
            if (c == '\n' || c == ';')
            {
                push(result, Tok::separator);
                advance();
                continue;
            }
            if (c == ' ' || c == '\t' || c == '\r')
            {
                advance();
                continue;
            }
            if (std::isdigit(static_cast<unsigned char>(c)) || c == '.')
            {
                result.push_back(lex_number());
                seen_content_ = true;
                continue;
            }
            if (std::isalpha(static_cast<unsigned char>(c)) || c == '_')
            {
                result.push_back(lex_identifier());
                seen_content_ = true;
                continue;
            }
            switch (c)
            {
                case '+':
                    push(result, Tok::plus);
                    advance();
                    continue;
                case '-':
                    push(result, Tok::minus);
                    advance();
                    continue;
                case '*':
                    push(result, Tok::star);
                    advance();
                    continue;
                case '^':
                    push(result, Tok::caret);
                    advance();
                    continue;
                case '<':
                case '>':
                    if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '=')
                    {
                        push(result, c == '<' ? Tok::le : Tok::ge);
                        advance();
                        advance();
                        continue;
                    }
                    // A known character in the wrong form: strict inequality
                    error("strict inequality is not supported; expected '"
                              + std::string(1, c) + "='",
                          ParseError::Kind::syntax);
                default:
                    break;
            }
            std::ostringstream msg;
            if (static_cast<unsigned char>(c) < 0x80
                && std::isprint(static_cast<unsigned char>(c)))
            {
                msg << "unexpected character '" << c << "'";
            }
            else
            {
                msg << "unexpected byte 0x" << std::hex
                    << static_cast<int>(static_cast<unsigned char>(c));
            }
            error(msg.str());
        }
        Token end{Tok::end};
        end.line = line_;
        end.column = column_;
        result.push_back(end);
        return result;
    }

  private:
    std::string_view text_;
    std::size_t pos_{0};
    int line_{1};
    int column_{1};
    int completed_{0};
    bool seen_content_{false};

    void advance()
    {
        if (text_[pos_] == '\n')
        {
            ++line_;
            column_ = 1;
        }
        else
        {
            ++column_;
        }
        ++pos_;
    }

    void push(std::vector<Token>& tokens, Tok t)
    {
        Token tok{t};
        tok.line = line_;
        tok.column = column_;
        tokens.push_back(tok);
        if (t == Tok::separator)
        {
            if (seen_content_)
                ++completed_;
            seen_content_ = false;
        }
        else
        {
            seen_content_ = true;
        }
    }

    [[noreturn]] void
    error(std::string const& msg,
          ParseError::Kind kind = ParseError::Kind::lexical) const
    {
        throw ParseError(kind, msg, line_, column_, completed_ + 1);
    }

    bool digit_at(std::size_t i) const
    {
        return i < text_.size()
               && std::isdigit(static_cast<unsigned char>(text_[i]));
    }

    Token lex_number()
    {
        Token tok{Tok::number};
        tok.line = line_;
        tok.column = column_;
        std::size_t start = pos_;
        std::size_t end = pos_;
        bool digits = false;
        while (digit_at(end))
        {
            ++end;
            digits = true;
        }
        if (end < text_.size() && text_[end] == '.')
        {
            ++end;
            while (digit_at(end))
            {
                ++end;
                digits = true;
            }
        }
        if (!digits)
            error("malformed number");
        if (end < text_.size() && (text_[end] == 'e' || text_[end] == 'E'))
        {
            std::size_t exp = end + 1;
            if (exp < text_.size() && (text_[exp] == '+' || text_[exp] == '-'))
                ++exp;
            if (digit_at(exp))
            {
                end = exp;
                while (digit_at(end))
                    ++end;
            }
        }
        char const* first = text_.data() + start;
        char const* last = text_.data() + end;
        if (*first == '+')
            ++first;
        auto [ptr, ec] = std::from_chars(first, last, tok.value);
        if (ec != std::errc{} || ptr != last || !std::isfinite(tok.value))
            error("malformed number '" + std::string(first, last) + "'");
        while (pos_ < end)
            advance();
        return tok;
    }

    Token lex_identifier()
    {
        Token tok{Tok::variable};
        tok.line = line_;
        tok.column = column_;
        std::size_t end = pos_;
        while (end < text_.size()
               && (std::isalnum(static_cast<unsigned char>(text_[end]))
                   || text_[end] == '_'))
        {
            ++end;
        }
        std::string_view ident = text_.substr(pos_, end - pos_);
        if (ident == "x")
            tok.var = 0;
        else if (ident == "y")
            tok.var = 1;
        else if (ident == "z")
            tok.var = 2;
        else
            error("unknown identifier '" + std::string(ident) + "'");
        while (pos_ < end)
            advance();
        return tok;
    }
};

//---------------------------------------------------------------------------//
/*!
 * Polynomial accumulator indexed by monomial.
 *
 * Slots follow the canonical order x^2, y^2, z^2, xy, xz, yz, x, y, z, 1.
 */
using Poly = std::array<real_type, 10>;

int monomial_slot(std::array<int, 3> const& e)
{
    int degree = e[0] + e[1] + e[2];
    if (degree == 0)
        return 9;
    if (degree == 1)
        return 6 + (e[0] ? 0 : e[1] ? 1 : 2);
    for (int i = 0; i < 3; ++i)
    {
        if (e[i] == 2)
            return i;
    }
    if (e[0] && e[1])
        return 3;
    if (e[0] && e[2])
        return 4;
    return 5;
}

QuadricForm to_form(Poly const& p)
{
    QuadricCoeffs c;
    c.xx = p[0];
    c.yy = p[1];
    c.zz = p[2];
    c.xy = p[3];
    c.xz = p[4];
    c.yz = p[5];
    c.x = p[6];
    c.y = p[7];
    c.z = p[8];
    c.c = p[9];
    return QuadricForm::from_coeffs(c);
}

//---------------------------------------------------------------------------//
class Parser
{
  public:
    explicit Parser(std::vector<Token> tokens) : tokens_{std::move(tokens)}
    {
    }

    ImplicitSolid parse()
    {
        ImplicitSolid::VecHalfSpace cons;
        while (peek().type != Tok::end)
        {
            if (peek().type == Tok::separator)
            {
                ++pos_;
                continue;
            }
            ++constraint_;
            cons.push_back(parse_constraint());
        }
        if (cons.empty())
        {
            Token const& t = peek();
            throw ParseError(ParseError::Kind::empty,
                             "no constraints in input",
                             t.line,
                             t.column,
                             0);
        }
        return ImplicitSolid{std::move(cons)};
    }

  private:
    std::vector<Token> tokens_;
    std::size_t pos_{0};
    int constraint_{0};

    Token const& peek() const { return tokens_[pos_]; }

    [[noreturn]] void fail(ParseError::Kind kind,
                           std::string const& msg,
                           Token const& at) const
    {
        throw ParseError(kind, msg, at.line, at.column, constraint_);
    }

    HalfSpace parse_constraint()
    {
        Poly lhs = parse_poly();
        Token const& rel = peek();
        if (rel.type != Tok::le && rel.type != Tok::ge)
            fail(ParseError::Kind::syntax, "expected '<=' or '>='", rel);
        bool less = rel.type == Tok::le;
        ++pos_;
        Poly rhs = parse_poly();
        Token const& after = peek();
        if (after.type != Tok::separator && after.type != Tok::end)
            fail(ParseError::Kind::syntax, "expected end of constraint", after);

        Poly diff;
        for (std::size_t i = 0; i < diff.size(); ++i)
            diff[i] = less ? lhs[i] - rhs[i] : rhs[i] - lhs[i];
        return HalfSpace{to_form(diff)};
    }

    Poly parse_poly()
    {
        Poly result{};
        bool first = true;
        while (true)
        {
            Token const& t = peek();
            real_type sign = 1;
            if (t.type == Tok::plus || t.type == Tok::minus)
            {
                sign = t.type == Tok::minus ? -1 : 1;
                ++pos_;
            }
            else if (!first)
            {
                break;
            }
            parse_term(sign, &result);
            first = false;
        }
        return result;
    }

    void parse_term(real_type coeff, Poly* poly)
    {
        enum class Prev
        {
            none,
            number,
            variable
        };

        std::array<int, 3> exponents{0, 0, 0};
        Token const start = peek();
        Prev prev = Prev::none;
        bool after_star = false;
        while (true)
        {
            Token const& t = peek();
            if (t.type == Tok::number)
            {
                if (prev != Prev::none && !after_star)
                    fail(ParseError::Kind::syntax, "expected '*'", t);
                coeff *= t.value;
                ++pos_;
                prev = Prev::number;
            }
            else if (t.type == Tok::variable)
            {
                if (prev == Prev::variable && !after_star)
                {
                    fail(ParseError::Kind::syntax,
                         "variables must be joined with '*'",
                         t);
                }
                ++pos_;
                int power = 1;
                if (peek().type == Tok::caret)
                {
                    ++pos_;
                    Token const& e = peek();
                    if (e.type != Tok::number || e.value != std::floor(e.value))
                    {
                        fail(ParseError::Kind::syntax,
                             "expected integer exponent",
                             e);
                    }
                    if (e.value > 2)
                    {
                        fail(ParseError::Kind::degree,
                             "term degree exceeds 2",
                             start);
                    }
                    power = static_cast<int>(e.value);
                    ++pos_;
                }
                exponents[t.var] += power;
                prev = Prev::variable;
            }
            else
            {
                if (prev == Prev::none || after_star)
                    fail(ParseError::Kind::syntax, "expected factor", t);
                break;
            }
            if (exponents[0] + exponents[1] + exponents[2] > 2)
                fail(ParseError::Kind::degree, "term degree exceeds 2", start);

            after_star = peek().type == Tok::star;
            if (after_star)
                ++pos_;
        }
        (*poly)[monomial_slot(exponents)] += coeff;
    }
};

//---------------------------------------------------------------------------//
std::string shortest(real_type v)
{
    std::array<char, 64> buf;
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), ptr);
}

//---------------------------------------------------------------------------//
}  // namespace

//---------------------------------------------------------------------------//
ParseError::ParseError(
    Kind kind, std::string const& what, int line, int column, int constraint)
    : std::runtime_error{[&] {
        std::ostringstream os;
        os << "line " << line << ", column " << column;
        if (constraint > 0)
            os << " (constraint " << constraint << ")";
        os << ": " << what;
        return os.str();
    }()}
    , kind_{kind}
    , line_{line}
    , column_{column}
    , constraint_{constraint}
{
}

//---------------------------------------------------------------------------//
ImplicitSolid parse_solid(std::string_view text)
{
    Lexer lex{text};
    Parser parser{lex.tokenize()};
    return parser.parse();
}

//---------------------------------------------------------------------------//
std::string format_polynomial(QuadricForm const& q)
{
    QuadricCoeffs c = q.coeffs();
    std::array<real_type, 10> const values{
        c.xx, c.yy, c.zz, c.xy, c.xz, c.yz, c.x, c.y, c.z, c.c};
    static char const* const names[] = {
        "x^2", "y^2", "z^2", "x*y", "x*z", "y*z", "x", "y", "z", ""};

    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i)
    {
        real_type v = values[i];
        if (v == 0)
            continue;
        bool neg = std::signbit(v);
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";

        real_type mag = std::abs(v);
        if (i == 9)
            out += shortest(mag);
        else if (mag == 1)
            out += names[i];
        else
            out += shortest(mag) + "*" + names[i];
    }
    if (out.empty())
        out = "0";
    return out;
}

//---------------------------------------------------------------------------//
std::string format_solid(ImplicitSolid const& s)
{
    std::string out;
    for (auto const& h : s.constraints())
    {
        out += format_polynomial(h.form);
        out += " <= 0\n";
    }
    return out;
}

//---------------------------------------------------------------------------//
}  // namespace qsolid
