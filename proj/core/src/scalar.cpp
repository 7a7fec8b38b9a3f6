#include "hodgekit/scalar.hpp"

#include <cctype>
#include <cstdlib>

namespace hodgekit {

Scalar imaginary_power(long k) {
    long m = ((k % 4) + 4) % 4;
    switch (m) {
        case 0: return Scalar(1);
        case 1: return Scalar(Rational(0), Rational(1));
        case 2: return Scalar(-1);
        default: return Scalar(Rational(0), Rational(-1));
    }
}

std::string to_string(const Rational &r) {
    return r.str();
}

std::string to_string(const Scalar &s) {
    if (s.is_zero()) return "0";
    std::string out;
    if (s.re != 0) out += s.re.str();
    if (s.im != 0) {
        if (s.im > 0 && !out.empty()) out += "+";
        if (s.im == -1)
            out += "-";
        else if (s.im != 1)
            out += s.im.str() + "*";
        out += "i";
    }
    return out;
}

namespace {

// Parses a signed rational starting at pos; advances pos past it.
Rational parse_rational_at(const std::string &t, size_t &pos) {
    size_t start = pos;
    if (pos < t.size() && (t[pos] == '+' || t[pos] == '-')) ++pos;
    size_t digits = pos;
    while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos]))) ++pos;
    if (pos == digits)
        throw std::invalid_argument("scalar parse error at position " +
                                    std::to_string(start) + " in \"" + t + "\"");
    std::string num = t.substr(start, pos - start);
    if (pos < t.size() && t[pos] == '/') {
        ++pos;
        size_t dstart = pos;
        while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos]))) ++pos;
        if (pos == dstart)
            throw std::invalid_argument("scalar parse error: missing denominator in \"" + t + "\"");
        std::string den = t.substr(dstart, pos - dstart);
        boost::multiprecision::cpp_int d(den);
        if (d == 0) throw std::invalid_argument("scalar parse error: zero denominator in \"" + t + "\"");
        return Rational(boost::multiprecision::cpp_int(num), d);
    }
    return Rational(boost::multiprecision::cpp_int(num));
}

}  // namespace

Rational parse_rational(const std::string &text) {
    size_t pos = 0;
    Rational r = parse_rational_at(text, pos);
    if (pos != text.size())
        throw std::invalid_argument("trailing characters in rational \"" + text + "\"");
    return r;
}

Scalar parse_scalar(const std::string &text) {
    if (text.empty()) throw std::invalid_argument("empty scalar string");
    size_t pos = 0;
    Scalar out;

    auto parse_term = [&](bool first) {
        // A term is either "<rat>", "<rat>*i", "i", "+i", "-i".
        Rational sign(1);
        if (!first) {
            if (text[pos] == '+') {
                ++pos;
            } else if (text[pos] == '-') {
                sign = -1;
                ++pos;
            } else {
                throw std::invalid_argument("scalar parse error at position " +
                                            std::to_string(pos) + " in \"" + text + "\"");
            }
        } else if (text[pos] == '+' || text[pos] == '-') {
            if (pos + 1 < text.size() && text[pos + 1] == 'i') {
                sign = (text[pos] == '-') ? -1 : 1;
                ++pos;
            }
        }
        if (pos < text.size() && text[pos] == 'i') {
            ++pos;
            out.im += sign;
            return;
        }
        Rational r = sign * parse_rational_at(text, pos);
        if (pos < text.size() && (text[pos] == '*' || text[pos] == 'i')) {
            if (text[pos] == '*') {
                ++pos;
                if (pos >= text.size() || text[pos] != 'i')
                    throw std::invalid_argument("expected i after * in \"" + text + "\"");
            }
            ++pos;  // consume 'i'
            out.im += r;
        } else {
            out.re += r;
        }
    };

    parse_term(true);
    if (pos < text.size()) parse_term(false);
    if (pos != text.size())
        throw std::invalid_argument("trailing characters in scalar \"" + text + "\"");
    return out;
}

}  // namespace hodgekit
