#pragma once

#include <gmpxx.h>

#include <cstdlib>
#include <optional>
#include <ostream>
#include <string>

#include "mopkit/errors.hpp"

namespace mopkit {

// Exact arbitrary-precision scalars. GMP keeps rationals in lowest terms with
// positive denominator after every arithmetic operation.
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Parses "p", "p/q", or a plain decimal integer with optional sign.
inline std::optional<Rational> parse_rational(const std::string& text) {
    if (text.empty()) return std::nullopt;
    Rational r;
    if (r.set_str(text, 10) != 0) return std::nullopt;
    r.canonicalize();
    if (r.get_den() == 0) return std::nullopt;
    return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

// True when r is in {0, -1, -2, ...}; the classical pole set of the Gamma factors.
inline bool is_nonpositive_integer(const Rational& r) {
    return is_integer(r) && sgn(r) <= 0;
}

// The exact field Q(i).  All polynomial coefficients, parameters, and moments
// live here.
class ComplexRational {
public:
    ComplexRational() = default;
    ComplexRational(long v) : re_(v) {}  // NOLINT: implicit by design
    ComplexRational(Rational re) : re_(std::move(re)) {}
    ComplexRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    ComplexRational conj() const { return {re_, Rational(-im_)}; }

    // |z|^2; exact.
    Rational norm2() const { return Rational(re_ * re_ + im_ * im_); }

    ComplexRational& operator+=(const ComplexRational& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    ComplexRational& operator-=(const ComplexRational& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    ComplexRational& operator*=(const ComplexRational& o) {
        Rational r(re_ * o.re_ - im_ * o.im_);
        Rational i(re_ * o.im_ + im_ * o.re_);
        re_ = std::move(r);
        im_ = std::move(i);
        return *this;
    }
    ComplexRational& operator/=(const ComplexRational& o) {
        Rational d = o.norm2();
        if (sgn(d) == 0) throw MopkitError("ComplexRational: division by zero");
        Rational r((re_ * o.re_ + im_ * o.im_) / d);
        Rational i((im_ * o.re_ - re_ * o.im_) / d);
        re_ = std::move(r);
        im_ = std::move(i);
        return *this;
    }

    friend ComplexRational operator+(ComplexRational a, const ComplexRational& b) { return a += b; }
    friend ComplexRational operator-(ComplexRational a, const ComplexRational& b) { return a -= b; }
    friend ComplexRational operator*(ComplexRational a, const ComplexRational& b) { return a *= b; }
    friend ComplexRational operator/(ComplexRational a, const ComplexRational& b) { return a /= b; }
    friend ComplexRational operator-(const ComplexRational& a) {
        return {Rational(-a.re_), Rational(-a.im_)};
    }
    friend bool operator==(const ComplexRational& a, const ComplexRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const ComplexRational& a, const ComplexRational& b) {
        return !(a == b);
    }

private:
    Rational re_{0};
    Rational im_{0};
};

inline ComplexRational imaginary_unit() { return {Rational(0), Rational(1)}; }

// Serializes as "p/q" when real, else "p/q+r/s*i" (or "-r/s*i").
std::string to_string(const ComplexRational& z);

// Parses the format produced by to_string.
std::optional<ComplexRational> parse_complex_rational(const std::string& text);

inline std::ostream& operator<<(std::ostream& os, const ComplexRational& z) {
    return os << to_string(z);
}

// |re| + |im|; a cheap exact magnitude surrogate for convergence-rate checks.
inline Rational abs1(const ComplexRational& z) {
    return Rational(abs(z.re()) + abs(z.im()));
}

}  // namespace mopkit
