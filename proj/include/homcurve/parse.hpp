#pragma once

// Polynomial input grammar shared by the library and the CLI:
//   form   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor (['*'] factor)*
//   factor := number | variable
//   variable := ('x'|'y') ['^' digits]
//   number := digits ['/' digits]            (exact backend)
//           | digits ['.' digits] [exponent] (float backend only)
// Whitespace-insensitive; the input must be homogeneous.

#include <cctype>
#include <charconv>
#include <string>
#include <string_view>

#include "homcurve/binary_form.hpp"

namespace homcurve {

/// Malformed input; position is the byte offset of the offending character.
struct ParseError : std::runtime_error {
    size_t position;
    ParseError(const std::string& msg, size_t pos)
        : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

/// Syntactically valid input that the selected arithmetic backend rejects
/// (a floating-point literal in exact mode).
struct BackendError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

template <class R>
struct FormParser {
    std::string_view src;
    size_t pos = 0;

    void skip_ws() {
        while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
    }

    char peek() {
        skip_ws();
        return pos < src.size() ? src[pos] : '\0';
    }

    bool starts_factor(char c) const {
        return c == 'x' || c == 'y' || std::isdigit(static_cast<unsigned char>(c));
    }

    long parse_digits(const char* what) {
        skip_ws();
        size_t start = pos;
        while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
        if (pos == start) throw ParseError(std::string("expected ") + what, start);
        long value = 0;
        auto res = std::from_chars(src.data() + start, src.data() + pos, value);
        if (res.ec != std::errc{}) throw ParseError("integer out of range", start);
        return value;
    }

    R parse_number() {
        size_t start = pos;
        long intpart = parse_digits("a number");
        bool is_float = false;
        std::string text = std::to_string(intpart);
        if (pos < src.size() && src[pos] == '.') {
            is_float = true;
            text += '.';
            ++pos;
            while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) text += src[pos++];
        }
        if (pos < src.size() && (src[pos] == 'e' || src[pos] == 'E')) {
            is_float = true;
            text += 'e';
            ++pos;
            if (pos < src.size() && (src[pos] == '+' || src[pos] == '-')) text += src[pos++];
            size_t ds = pos;
            while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) text += src[pos++];
            if (pos == ds) throw ParseError("expected exponent digits", pos);
        }
        if (is_float) {
            if constexpr (std::is_same_v<R, double>)
                return std::stod(text);
            else
                throw BackendError("floating-point literal '" + text + "' requires the float backend");
        }
        if (peek() == '/') {
            ++pos;
            long den = parse_digits("a denominator");
            if (den == 0) throw ParseError("zero denominator", start);
            if constexpr (std::is_same_v<R, double>)
                return double(intpart) / double(den);
            else
                return R(Rational(intpart, den));
        }
        return R(int(intpart));
    }

    struct Term {
        R coeff;
        int ex = 0, ey = 0;
    };

    Term parse_term() {
        Term t{R(1), 0, 0};
        bool first = true;
        for (;;) {
            char c = peek();
            if (c == 'x' || c == 'y') {
                ++pos;
                int e = 1;
                if (peek() == '^') {
                    ++pos;
                    e = int(parse_digits("an exponent"));
                }
                (c == 'x' ? t.ex : t.ey) += e;
            } else if (std::isdigit(static_cast<unsigned char>(c))) {
                t.coeff = t.coeff * parse_number();
            } else if (first) {
                throw ParseError("expected a term", pos);
            } else {
                return t;
            }
            first = false;
            char n = peek();
            if (n == '*') {
                ++pos;
                if (!starts_factor(peek())) throw ParseError("expected a factor after '*'", pos);
            } else if (!starts_factor(n)) {
                return t;
            }
        }
    }

    BinaryForm<R> parse() {
        std::vector<Term> terms;
        for (;;) {
            char c = peek();
            R sign(1);
            if (c == '+' || c == '-') {
                if (c == '-') sign = R(-1);
                ++pos;
            } else if (!terms.empty()) {
                throw ParseError("expected '+' or '-' between terms", pos);
            }
            Term t = parse_term();
            t.coeff = t.coeff * sign;
            terms.push_back(t);
            if (peek() == '\0') break;
        }
        int tau = terms.front().ex + terms.front().ey;
        for (const auto& t : terms)
            if (t.ex + t.ey != tau)
                throw ParseError("polynomial is not homogeneous (degree " + std::to_string(tau) + " vs " +
                                     std::to_string(t.ex + t.ey) + ")",
                                 0);
        auto h = BinaryForm<R>::zero(tau);
        for (const auto& t : terms) h.coeff(t.ey) = h.coeff(t.ey) + t.coeff;
        return h;
    }
};

}  // namespace detail

template <class R>
BinaryForm<R> parse_form(std::string_view src) {
    detail::FormParser<R> p{src};
    if (p.peek() == '\0') throw ParseError("empty input", 0);
    return p.parse();
}

namespace detail {

inline std::string coeff_to_string(const Rational& c) {
    std::string s = numerator(c).str();
    if (denominator(c) != 1) s += "/" + denominator(c).str();
    return s;
}

inline std::string coeff_to_string(double c) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", c);
    return buf;
}

inline bool coeff_is_one(const Rational& c) { return c == 1; }
inline bool coeff_is_one(double c) { return c == 1.0; }

}  // namespace detail

/// Canonical rendering, terms by descending x-power; inverse of the parser.
template <class R>
std::string form_to_string(const BinaryForm<R>& h) {
    if (h.is_zero()) return "0";
    std::string out;
    int tau = h.degree();
    for (int k = 0; k <= tau; ++k) {
        const R& c = h.coeff(k);
        if (is_zero(c)) continue;
        bool neg = sign(c) < 0;
        R mag = neg ? R(-c) : c;
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        std::string mono;
        if (tau - k > 0) {
            mono += "x";
            if (tau - k > 1) mono += "^" + std::to_string(tau - k);
        }
        if (k > 0) {
            if (!mono.empty()) mono += "*";
            mono += "y";
            if (k > 1) mono += "^" + std::to_string(k);
        }
        if (mono.empty())
            out += detail::coeff_to_string(mag);
        else if (detail::coeff_is_one(mag))
            out += mono;
        else
            out += detail::coeff_to_string(mag) + "*" + mono;
    }
    return out;
}

}  // namespace homcurve
