#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace hodgekit {

using Rational = boost::multiprecision::cpp_rational;

/// A Gaussian rational re + im*i. All arithmetic is exact; the real
/// subfield (im == 0) carries the distinguished real structure.
struct Scalar {
    Rational re;
    Rational im;

    Scalar() = default;
    Scalar(Rational r) : re(std::move(r)) {}
    Scalar(long r) : re(r) {}
    Scalar(int r) : re(r) {}
    Scalar(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static Scalar zero() { return Scalar(); }
    static Scalar one() { return Scalar(1); }
    static Scalar imaginary_unit() { return Scalar(Rational(0), Rational(1)); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    Scalar conj() const { return Scalar(re, -im); }
    Rational norm() const { return re * re + im * im; }

    Scalar operator-() const { return Scalar(-re, -im); }
    Scalar &operator+=(const Scalar &o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    Scalar &operator-=(const Scalar &o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    Scalar &operator*=(const Scalar &o) {
        Rational r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = std::move(r);
        return *this;
    }
    Scalar &operator/=(const Scalar &o) {
        if (o.is_zero()) throw std::domain_error("Scalar: division by zero");
        Rational n = o.norm();
        Rational r = (re * o.re + im * o.im) / n;
        im = (im * o.re - re * o.im) / n;
        re = std::move(r);
        return *this;
    }

    friend Scalar operator+(Scalar a, const Scalar &b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar &b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar &b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar &b) { return a /= b; }
    friend bool operator==(const Scalar &a, const Scalar &b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const Scalar &a, const Scalar &b) { return !(a == b); }
};

/// i^k for any integer k (k may be negative).
Scalar imaginary_power(long k);

/// Renders in the wire grammar: "a", "a/b", "c*i", "a/b+c/d*i", "0".
/// No spaces, lowercase i.
std::string to_string(const Scalar &s);
std::string to_string(const Rational &r);

/// Parses the grammar accepted by to_string. Throws std::invalid_argument
/// with a position hint on malformed input.
Scalar parse_scalar(const std::string &text);
Rational parse_rational(const std::string &text);

}  // namespace hodgekit
