#include "mopkit/bigfloat.hpp"

#include <algorithm>
#include <atomic>

namespace mopkit {

namespace {
std::atomic<long> g_default_prec{256};
}

long default_precision() { return g_default_prec.load(); }
void set_default_precision(long bits) {
    if (bits < 16) bits = 16;
    g_default_prec.store(bits);
}

BigFloat BigFloat::of(long value, long prec) {
    BigFloat r(prec);
    mpfr_set_si(r.v_, value, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::of(const Rational& value, long prec) {
    BigFloat r(prec);
    mpfr_set_q(r.v_, value.get_mpq_t(), MPFR_RNDN);
    return r;
}

BigFloat BigFloat::of_double(double value, long prec) {
    BigFloat r(prec);
    mpfr_set_d(r.v_, value, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::pi(long prec) {
    BigFloat r(prec);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::two_pow(long e, long prec) {
    BigFloat r(prec);
    mpfr_set_si_2exp(r.v_, 1, e, MPFR_RNDN);
    return r;
}

std::string BigFloat::str(size_t digits) const {
    char* out = nullptr;
    // %.NRe style via mpfr_asprintf
    if (mpfr_asprintf(&out, "%.*Re", static_cast<int>(digits), v_) < 0) return "nan";
    std::string s(out);
    mpfr_free_str(out);
    return s;
}

namespace {
long join(const BigFloat& a, const BigFloat& b) { return std::max(a.prec(), b.prec()); }
}  // namespace

#define MOPKIT_BF_BINOP(op, fn)                                   \
    BigFloat operator op(const BigFloat& a, const BigFloat& b) {  \
        BigFloat r(join(a, b));                                   \
        fn(r.raw(), a.raw(), b.raw(), MPFR_RNDN);                 \
        return r;                                                 \
    }

MOPKIT_BF_BINOP(+, mpfr_add)
MOPKIT_BF_BINOP(-, mpfr_sub)
MOPKIT_BF_BINOP(*, mpfr_mul)
MOPKIT_BF_BINOP(/, mpfr_div)
#undef MOPKIT_BF_BINOP

BigFloat operator-(const BigFloat& a) {
    BigFloat r(a.prec());
    mpfr_neg(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}

bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.raw(), b.raw()) < 0; }
bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.raw(), b.raw()) <= 0; }
bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.raw(), b.raw()) > 0; }
bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.raw(), b.raw()) >= 0; }
bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.raw(), b.raw()) == 0; }

#define MOPKIT_BF_UNFN(name, fn)              \
    BigFloat name(const BigFloat& a) {        \
        BigFloat r(a.prec());                 \
        fn(r.raw(), a.raw(), MPFR_RNDN);      \
        return r;                             \
    }

MOPKIT_BF_UNFN(abs, mpfr_abs)
MOPKIT_BF_UNFN(sqrt, mpfr_sqrt)
MOPKIT_BF_UNFN(exp, mpfr_exp)
MOPKIT_BF_UNFN(log, mpfr_log)
MOPKIT_BF_UNFN(log1p, mpfr_log1p)
MOPKIT_BF_UNFN(sin, mpfr_sin)
MOPKIT_BF_UNFN(cos, mpfr_cos)
MOPKIT_BF_UNFN(sinh, mpfr_sinh)
MOPKIT_BF_UNFN(cosh, mpfr_cosh)
MOPKIT_BF_UNFN(gamma_real, mpfr_gamma)
MOPKIT_BF_UNFN(digamma_real, mpfr_digamma)
#undef MOPKIT_BF_UNFN

BigFloat floor(const BigFloat& a) {
    BigFloat r(a.prec());
    mpfr_floor(r.raw(), a.raw());
    return r;
}

BigFloat pow(const BigFloat& a, const BigFloat& b) {
    BigFloat r(join(a, b));
    mpfr_pow(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}

BigFloat atan2(const BigFloat& y, const BigFloat& x) {
    BigFloat r(join(y, x));
    mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
    return r;
}

ComplexBigFloat ComplexBigFloat::of(const ComplexRational& z, long prec) {
    return {BigFloat::of(z.re(), prec), BigFloat::of(z.im(), prec)};
}

ComplexBigFloat operator+(const ComplexBigFloat& a, const ComplexBigFloat& b) {
    return {a.re() + b.re(), a.im() + b.im()};
}
ComplexBigFloat operator-(const ComplexBigFloat& a, const ComplexBigFloat& b) {
    return {a.re() - b.re(), a.im() - b.im()};
}
ComplexBigFloat operator*(const ComplexBigFloat& a, const ComplexBigFloat& b) {
    return {a.re() * b.re() - a.im() * b.im(), a.re() * b.im() + a.im() * b.re()};
}
ComplexBigFloat operator/(const ComplexBigFloat& a, const ComplexBigFloat& b) {
    BigFloat d = b.re() * b.re() + b.im() * b.im();
    return {(a.re() * b.re() + a.im() * b.im()) / d, (a.im() * b.re() - a.re() * b.im()) / d};
}
ComplexBigFloat operator-(const ComplexBigFloat& a) { return {-a.re(), -a.im()}; }

BigFloat abs(const ComplexBigFloat& a) {
    BigFloat r(a.prec());
    mpfr_hypot(r.raw(), a.re().raw(), a.im().raw(), MPFR_RNDN);
    return r;
}

ComplexBigFloat exp(const ComplexBigFloat& a) {
    BigFloat m = exp(a.re());
    return {m * cos(a.im()), m * sin(a.im())};
}

ComplexBigFloat log(const ComplexBigFloat& a) {
    return {log(abs(a)), atan2(a.im(), a.re())};
}

ComplexBigFloat pow(const ComplexBigFloat& base, const ComplexBigFloat& expo) {
    if (base.is_real_zero_im() && base.re().sign() > 0 && expo.is_real_zero_im())
        return ComplexBigFloat(pow(base.re(), expo.re()), BigFloat(base.prec()));
    return exp(expo * log(base));
}

ComplexBigFloat sin(const ComplexBigFloat& a) {
    return {sin(a.re()) * cosh(a.im()), cos(a.re()) * sinh(a.im())};
}

}  // namespace mopkit
