#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

#include "mopkit/rational.hpp"

namespace mopkit {

// Library-wide default working precision in bits.  The CLI seeds this from
// MOPKIT_PRECISION_BITS.
long default_precision();
void set_default_precision(long bits);

// Immutable-by-convention arbitrary-precision float.  Every value carries its
// working precision; binary operations widen to the larger operand precision
// and never silently downgrade.
class BigFloat {
public:
    explicit BigFloat(long prec = default_precision()) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
    BigFloat(const BigFloat& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    BigFloat(BigFloat&& o) noexcept {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_swap(v_, o.v_);
    }
    BigFloat& operator=(const BigFloat& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    BigFloat& operator=(BigFloat&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~BigFloat() { mpfr_clear(v_); }

    static BigFloat of(long value, long prec = default_precision());
    static BigFloat of(const Rational& value, long prec = default_precision());
    static BigFloat of_double(double value, long prec = default_precision());
    static BigFloat pi(long prec = default_precision());
    static BigFloat two_pow(long e, long prec = default_precision());  // 2^e

    long prec() const { return mpfr_get_prec(v_); }
    int sign() const { return mpfr_sgn(v_); }
    bool is_nan() const { return mpfr_nan_p(v_) != 0; }
    bool is_inf() const { return mpfr_inf_p(v_) != 0; }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }
    std::string str(size_t digits = 30) const;

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

private:
    mpfr_t v_;
};

BigFloat operator+(const BigFloat& a, const BigFloat& b);
BigFloat operator-(const BigFloat& a, const BigFloat& b);
BigFloat operator*(const BigFloat& a, const BigFloat& b);
BigFloat operator/(const BigFloat& a, const BigFloat& b);
BigFloat operator-(const BigFloat& a);
bool operator<(const BigFloat& a, const BigFloat& b);
bool operator<=(const BigFloat& a, const BigFloat& b);
bool operator>(const BigFloat& a, const BigFloat& b);
bool operator>=(const BigFloat& a, const BigFloat& b);
bool operator==(const BigFloat& a, const BigFloat& b);

BigFloat abs(const BigFloat& a);
BigFloat sqrt(const BigFloat& a);
BigFloat exp(const BigFloat& a);
BigFloat log(const BigFloat& a);
BigFloat log1p(const BigFloat& a);
BigFloat pow(const BigFloat& a, const BigFloat& b);
BigFloat sin(const BigFloat& a);
BigFloat cos(const BigFloat& a);
BigFloat sinh(const BigFloat& a);
BigFloat cosh(const BigFloat& a);
BigFloat atan2(const BigFloat& y, const BigFloat& x);
BigFloat floor(const BigFloat& a);
BigFloat gamma_real(const BigFloat& a);
BigFloat digamma_real(const BigFloat& a);

// Complex value on top of BigFloat; real and imaginary parts share precision.
class ComplexBigFloat {
public:
    ComplexBigFloat() = default;
    explicit ComplexBigFloat(long prec) : re_(prec), im_(prec) {}
    ComplexBigFloat(BigFloat re, BigFloat im) : re_(std::move(re)), im_(std::move(im)) {}
    explicit ComplexBigFloat(BigFloat re) : re_(std::move(re)), im_(re_.prec()) {}
    static ComplexBigFloat of(const ComplexRational& z, long prec = default_precision());

    const BigFloat& re() const { return re_; }
    const BigFloat& im() const { return im_; }
    long prec() const { return std::max(re_.prec(), im_.prec()); }
    bool is_real_zero_im() const { return im_.is_zero(); }
    ComplexBigFloat conj() const { return {re_, -im_}; }
    std::string str(size_t digits = 30) const { return re_.str(digits) + " + " + im_.str(digits) + "*i"; }

private:
    BigFloat re_, im_;
};

ComplexBigFloat operator+(const ComplexBigFloat& a, const ComplexBigFloat& b);
ComplexBigFloat operator-(const ComplexBigFloat& a, const ComplexBigFloat& b);
ComplexBigFloat operator*(const ComplexBigFloat& a, const ComplexBigFloat& b);
ComplexBigFloat operator/(const ComplexBigFloat& a, const ComplexBigFloat& b);
ComplexBigFloat operator-(const ComplexBigFloat& a);

BigFloat abs(const ComplexBigFloat& a);
ComplexBigFloat exp(const ComplexBigFloat& a);
// Principal branch.
ComplexBigFloat log(const ComplexBigFloat& a);
ComplexBigFloat pow(const ComplexBigFloat& base, const ComplexBigFloat& expo);
ComplexBigFloat sin(const ComplexBigFloat& a);

}  // namespace mopkit
