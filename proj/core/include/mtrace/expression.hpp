#ifndef MTRACE_EXPRESSION_HPP
#define MTRACE_EXPRESSION_HPP

#include <cctype>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include <mtrace/error.hpp>

namespace mtrace
{

// Callbacks that give meaning to an infix expression. Unset division means
// the value type has no division.
template <typename V>
struct InfixSemantics {
    std::function<V(const mpz_class &)> integer;
    // name, optional integer argument as in "Pn(3)"
    std::function<V(std::string_view, std::optional<long>)> identifier;
    std::function<V(const V &, const V &)> divide;
};

namespace detail
{

template <typename V>
class InfixParser
{
public:
    InfixParser(std::string_view text, const InfixSemantics<V> &sem) : text_(text), sem_(sem) {}

    V run()
    {
        skip_space();
        if (pos_ == text_.size()) {
            fail("empty expression");
        }
        V v = sum();
        skip_space();
        if (pos_ != text_.size()) {
            fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        }
        return v;
    }

private:
    // sum := term (('+'|'-') term)*
    V sum()
    {
        V acc = term();
        for (;;) {
            skip_space();
            if (accept('+')) {
                acc = acc + term();
            } else if (accept('-')) {
                acc = acc - term();
            } else {
                return acc;
            }
        }
    }

    // term := unary (('*'|'/') unary)*
    V term()
    {
        V acc = unary();
        for (;;) {
            skip_space();
            if (accept('*')) {
                acc = acc * unary();
            } else if (peek() == '/') {
                if (!sem_.divide) {
                    fail("division is not supported here");
                }
                ++pos_;
                acc = sem_.divide(acc, unary());
            } else {
                return acc;
            }
        }
    }

    // unary := '-' unary | power
    V unary()
    {
        skip_space();
        if (accept('-')) {
            V v = unary();
            return sem_.integer(mpz_class(0)) - v;
        }
        if (accept('+')) {
            return unary();
        }
        return power();
    }

    // power := primary ('^' integer)?
    V power()
    {
        V base = primary();
        skip_space();
        if (!accept('^')) {
            return base;
        }
        skip_space();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            fail("exponent must be a non-negative integer");
        }
        const mpz_class e = number();
        if (e > 4096) {
            fail("exponent too large");
        }
        V acc = sem_.integer(mpz_class(1));
        for (unsigned long i = 0; i < e.get_ui(); ++i) {
            acc = acc * base;
        }
        return acc;
    }

    V primary()
    {
        skip_space();
        if (pos_ >= text_.size()) {
            fail("unexpected end of expression");
        }
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            V v = sum();
            skip_space();
            if (!accept(')')) {
                fail("expected ')'");
            }
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            return sem_.integer(number());
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) {
                ++pos_;
            }
            const std::string_view name = text_.substr(start, pos_ - start);
            std::optional<long> arg;
            skip_space();
            if (accept('(')) {
                skip_space();
                if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                    fail("expected an integer argument to '" + std::string(name) + "'");
                }
                const mpz_class a = number();
                if (!a.fits_slong_p()) {
                    fail("argument too large");
                }
                arg = a.get_si();
                skip_space();
                if (!accept(')')) {
                    fail("expected ')'");
                }
            }
            return sem_.identifier(name, arg);
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    mpz_class number()
    {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        return mpz_class(std::string(text_.substr(start, pos_ - start)));
    }

    char peek() const
    {
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    bool accept(char c)
    {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }
    [[noreturn]] void fail(const std::string &what) const
    {
        throw ParseError(0, "'" + std::string(text_) + "' at column " + std::to_string(pos_ + 1) + ": " + what);
    }

    std::string_view text_;
    const InfixSemantics<V> &sem_;
    std::size_t pos_ = 0;
};

} // namespace detail

// Parses + - * / ^ and parentheses over integers and identifiers. V must
// provide binary + - *.
template <typename V>
V parse_infix(std::string_view text, const InfixSemantics<V> &semantics)
{
    return detail::InfixParser<V>(text, semantics).run();
}

} // namespace mtrace

#endif
