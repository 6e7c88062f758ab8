#include "genival/parse.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <string>

#include "genival/embed.hpp"
#include "genival/error.hpp"

namespace genival {

namespace {

class cursor {
public:
    explicit cursor(std::string_view text) : text_(text) {}

    void skip_ws()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    bool at_end()
    {
        skip_ws();
        return pos_ >= text_.size();
    }

    bool consume(std::string_view token)
    {
        skip_ws();
        if (text_.substr(pos_, token.size()) == token) {
            pos_ += token.size();
            return true;
        }
        return false;
    }

    void expect(std::string_view token)
    {
        if (!consume(token)) {
            fail("expected '" + std::string(token) + "'");
        }
    }

    bool number_ahead()
    {
        skip_ws();
        if (pos_ >= text_.size()) {
            return false;
        }
        const char c = text_[pos_];
        return std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == '-' || c == '+';
    }

    double number()
    {
        skip_ws();
        // strtod accepts "inf"/"nan" and hex; restrict to plain decimal literals.
        std::size_t end = pos_;
        if (end < text_.size() && (text_[end] == '-' || text_[end] == '+')) {
            ++end;
        }
        bool digits = false;
        bool dot = false;
        bool exponent = false;
        auto digit_at = [&](std::size_t i) {
            return i < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i]));
        };
        while (end < text_.size()) {
            const char c = text_[end];
            if (std::isdigit(static_cast<unsigned char>(c))) {
                digits = true;
                ++end;
            } else if (c == '.' && !dot && !exponent && digit_at(end + 1)) {
                // "2.[1,3]" is the scalar action, not the literal "2."
                dot = true;
                ++end;
            } else if ((c == 'e' || c == 'E') && digits && !exponent) {
                exponent = true;
                ++end;
                if (end < text_.size() && (text_[end] == '-' || text_[end] == '+')) {
                    ++end;
                }
            } else {
                break;
            }
        }
        if (!digits) {
            fail("expected a number");
        }
        const std::string literal(text_.substr(pos_, end - pos_));
        char* stop = nullptr;
        const double v = std::strtod(literal.c_str(), &stop);
        if (stop != literal.c_str() + literal.size()) {
            fail("malformed number '" + literal + "'");
        }
        pos_ = end;
        return v;
    }

    char peek()
    {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    std::size_t position() const { return pos_; }

    [[noreturn]] void fail(const std::string& what) const { throw parse_error(pos_, what); }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

gelement element(cursor& in)
{
    if (in.consume("dual")) {
        in.expect("[");
        const double a = in.number();
        in.expect(",");
        const double b = in.number();
        in.expect("]");
        return gelement::from_negative(interval(a, b));
    }
    if (in.consume("[")) {
        const double a = in.number();
        in.expect(",");
        const double b = in.number();
        in.expect("]");
        return gelement::from_proper(interval(a, b));
    }
    if (in.consume("(")) {
        const double p = in.number();
        in.expect(",");
        const double q = in.number();
        in.expect(")");
        return {p, q};
    }
    return gelement::point(in.number());
}

class expression_parser {
public:
    explicit expression_parser(std::string_view text) : in_(text) {}

    gelement parse()
    {
        const gelement v = sum();
        if (!in_.at_end()) {
            in_.fail("unexpected trailing input");
        }
        return v;
    }

private:
    cursor in_;

    gelement sum()
    {
        gelement acc = product();
        for (;;) {
            if (in_.consume("+")) {
                acc = acc + product();
            } else if (in_.consume("-")) {
                acc = acc - product();
            } else {
                return acc;
            }
        }
    }

    gelement product()
    {
        gelement acc = unary();
        for (;;) {
            if (in_.consume("*")) {
                acc = bullet(acc, unary());
            } else if (in_.consume("\xC2\xB7") || in_.consume(".")) {
                const sign_class s = sign(acc);
                if (s.kind != sign_kind::point) {
                    in_.fail("scalar action needs a real on the left");
                }
                acc = s.value * unary();
            } else {
                return acc;
            }
        }
    }

    gelement unary()
    {
        if (in_.consume("-")) {
            return -unary();
        }
        if (in_.peek() == '(') {
            // "(p,q)" raw coordinates or a parenthesized expression.
            const cursor saved = in_;
            try {
                return element(in_);
            } catch (const parse_error&) {
                in_ = saved;
            }
            in_.expect("(");
            const gelement v = sum();
            in_.expect(")");
            return v;
        }
        return element(in_);
    }
};

} // namespace

gelement parse_gelement(std::string_view text)
{
    cursor in(text);
    const gelement v = element(in);
    if (!in.at_end()) {
        in.fail("unexpected trailing input");
    }
    return v;
}

a4 parse_a4(std::string_view text)
{
    cursor in(text);
    in.expect("(");
    a4 out;
    for (std::size_t i = 0; i < 4; ++i) {
        if (i > 0) {
            in.expect(",");
        }
        out[i] = in.number();
    }
    in.expect(")");
    if (!in.at_end()) {
        in.fail("unexpected trailing input");
    }
    return out;
}

gelement eval_expr(std::string_view text) { return expression_parser(text).parse(); }

} // namespace genival
