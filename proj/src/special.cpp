#include "mopkit/special.hpp"

#include <vector>

#include "mopkit/arith.hpp"
#include "mopkit/errors.hpp"

namespace mopkit {

namespace {

// Even-index Bernoulli numbers B_{2n} as exact rationals, grown on demand
// (single-threaded use).
const Rational& bernoulli_even(size_t n) {
    static std::vector<Rational> even;               // even[k] = B_{2k+2}
    static std::vector<Rational> all = {Rational(1)};  // B_0, B_1, ...
    while (even.size() <= n) {
        // extend through B_m via sum_{j<=m} C(m+1, j) B_j = 0
        size_t m = all.size();
        Rational acc(0);
        Integer binom(1);  // C(m+1, j), starting at j = 0
        for (size_t j = 0; j < m; ++j) {
            acc += Rational(binom) * all[j];
            binom = binom * static_cast<long>(m + 1 - j) / static_cast<long>(j + 1);
        }
        Rational bm = -acc / Rational(Integer(static_cast<long>(m + 1)));
        all.push_back(bm);
        if (m >= 2 && m % 2 == 0) even.push_back(bm);
    }
    return even[n];
}

bool near_integer(const BigFloat& x, long& out) {
    BigFloat r = floor(x + BigFloat::of(make_rational(1, 2), x.prec()));
    if (abs(x - r) < BigFloat::two_pow(-x.prec() / 2, x.prec())) {
        out = r.to_long();
        return true;
    }
    return false;
}

ComplexBigFloat cbf_of_long(long v, long prec) {
    return ComplexBigFloat(BigFloat::of(v, prec), BigFloat(prec));
}

// Stirling series for ln Gamma; needs |w| of size ~prec/8 with Re(w) > 0.
ComplexBigFloat lngamma_stirling(const ComplexBigFloat& w) {
    const long prec = w.prec();
    ComplexBigFloat half(BigFloat::of(make_rational(1, 2), prec), BigFloat(prec));
    BigFloat two_pi = BigFloat::pi(prec) * BigFloat::of(2, prec);
    ComplexBigFloat acc = (w - half) * log(w) - w +
                          ComplexBigFloat(log(two_pi) / BigFloat::of(2, prec), BigFloat(prec));
    ComplexBigFloat winv = cbf_of_long(1, prec) / w;
    ComplexBigFloat winv2 = winv * winv;
    ComplexBigFloat power = winv;  // w^{-(2n-1)}
    BigFloat eps = BigFloat::two_pow(-prec - 8, prec);
    BigFloat prev_mag = abs(acc) + BigFloat::of(1, prec);
    for (size_t n = 1; n <= 500; ++n) {
        Rational coeff = bernoulli_even(n - 1) /
                         Rational(static_cast<long>(2 * n) * static_cast<long>(2 * n - 1));
        ComplexBigFloat term = ComplexBigFloat::of(ComplexRational(coeff), prec) * power;
        BigFloat mag = abs(term);
        if (mag > prev_mag) throw NonConvergence("Stirling series diverging; shift too small");
        acc = acc + term;
        if (mag < eps) return acc;
        prev_mag = mag;
        power = power * winv2;
    }
    throw NonConvergence("Stirling series needed too many terms");
}

long stirling_shift_target(long prec) { return prec / 8 + 12; }

// prod_{i=0}^{shift-1} (z + i); the argument-shift factor.
ComplexBigFloat shift_product(const ComplexBigFloat& z, long shift, long prec) {
    ComplexBigFloat acc = cbf_of_long(1, prec);
    ComplexBigFloat cur = z;
    for (long i = 0; i < shift; ++i) {
        acc = acc * cur;
        cur = cur + cbf_of_long(1, prec);
    }
    return acc;
}

bool is_nonpositive_integer_point(const ComplexBigFloat& z, long& k) {
    if (!z.im().is_zero()) return false;
    long r;
    if (!near_integer(z.re(), r)) return false;
    if (r > 0) return false;
    k = r;
    return true;
}

}  // namespace

ComplexBigFloat lngamma_complex(const ComplexBigFloat& z) {
    const long prec = z.prec();
    long pole;
    if (is_nonpositive_integer_point(z, pole))
        throw PoleError("Gamma pole at " + std::to_string(pole));
    if (z.re().sign() < 0) {
        // ln Gamma(z) = ln(pi / sin(pi z)) - ln Gamma(1 - z)
        BigFloat pi = BigFloat::pi(prec);
        ComplexBigFloat pi_c(pi, BigFloat(prec));
        ComplexBigFloat one = cbf_of_long(1, prec);
        return log(pi_c / sin(pi_c * z)) - lngamma_complex(one - z);
    }
    long shift = stirling_shift_target(prec) - static_cast<long>(z.re().to_double());
    if (shift < 0) shift = 0;
    ComplexBigFloat result = lngamma_stirling(z + cbf_of_long(shift, prec));
    ComplexBigFloat acc{BigFloat(prec), BigFloat(prec)};
    ComplexBigFloat cur = z;
    for (long i = 0; i < shift; ++i) {
        acc = acc + log(cur);
        cur = cur + cbf_of_long(1, prec);
    }
    return result - acc;
}

ComplexBigFloat gamma_complex(const ComplexBigFloat& z) {
    const long prec = z.prec();
    if (z.im().is_zero() && z.re().sign() > 0)
        return ComplexBigFloat(gamma_real(z.re()), BigFloat(prec));
    long pole;
    if (is_nonpositive_integer_point(z, pole))
        throw PoleError("Gamma pole at " + std::to_string(pole));
    if (z.re().sign() < 0) {
        BigFloat pi = BigFloat::pi(prec);
        ComplexBigFloat pi_c(pi, BigFloat(prec));
        ComplexBigFloat one = cbf_of_long(1, prec);
        return pi_c / (sin(pi_c * z) * gamma_complex(one - z));
    }
    long shift = stirling_shift_target(prec) - static_cast<long>(z.re().to_double());
    if (shift < 0) shift = 0;
    // Gamma(z) = Gamma(z + s) / prod_{i<s}(z + i)
    return exp(lngamma_stirling(z + cbf_of_long(shift, prec))) / shift_product(z, shift, prec);
}

BigFloat gamma_abs(const ComplexBigFloat& z) { return exp(lngamma_abs(z)); }

BigFloat lngamma_abs(const ComplexBigFloat& z) {
    const long prec = z.prec();
    if (z.im().is_zero()) {
        BigFloat r(prec);
        int sign = 0;
        mpfr_lgamma(r.raw(), &sign, z.re().raw(), MPFR_RNDN);
        return r;
    }
    if (z.re().sign() < 0) {
        // ln|Gamma(z)| = ln pi - ln|sin(pi z)| - ln|Gamma(1-z)|
        BigFloat pi = BigFloat::pi(prec);
        ComplexBigFloat pi_c(pi, BigFloat(prec));
        ComplexBigFloat one = cbf_of_long(1, prec);
        return log(pi) - log(abs(sin(pi_c * z))) - lngamma_abs(one - z);
    }
    long shift = stirling_shift_target(prec) - static_cast<long>(z.re().to_double());
    if (shift < 0) shift = 0;
    return lngamma_stirling(z + cbf_of_long(shift, prec)).re() -
           log(abs(shift_product(z, shift, prec)));
}

ComplexBigFloat digamma_complex(const ComplexBigFloat& z) {
    const long prec = z.prec();
    if (z.im().is_zero() && z.re().sign() > 0)
        return ComplexBigFloat(digamma_real(z.re()), BigFloat(prec));
    long pole;
    if (is_nonpositive_integer_point(z, pole))
        throw PoleError("digamma pole at " + std::to_string(pole));
    if (z.re().sign() < 0) {
        // psi(z) = psi(1 - z) - pi cot(pi z)
        BigFloat pi = BigFloat::pi(prec);
        ComplexBigFloat pz = ComplexBigFloat(pi, BigFloat(prec)) * z;
        ComplexBigFloat cospz(cos(pz.re()) * cosh(pz.im()), -sin(pz.re()) * sinh(pz.im()));
        ComplexBigFloat one = cbf_of_long(1, prec);
        return digamma_complex(one - z) -
               ComplexBigFloat(pi, BigFloat(prec)) * cospz / sin(pz);
    }
    long shift = stirling_shift_target(prec) - static_cast<long>(z.re().to_double());
    if (shift < 0) shift = 0;
    ComplexBigFloat w = z + cbf_of_long(shift, prec);
    ComplexBigFloat winv = cbf_of_long(1, prec) / w;
    ComplexBigFloat winv2 = winv * winv;
    ComplexBigFloat acc = log(w) - winv * ComplexBigFloat(BigFloat::of(make_rational(1, 2), prec),
                                                          BigFloat(prec));
    ComplexBigFloat power = winv2;
    BigFloat eps = BigFloat::two_pow(-prec - 8, prec);
    bool converged = false;
    for (size_t n = 1; n <= 500 && !converged; ++n) {
        Rational coeff = bernoulli_even(n - 1) / Rational(static_cast<long>(2 * n));
        ComplexBigFloat term = ComplexBigFloat::of(ComplexRational(coeff), prec) * power;
        acc = acc - term;
        converged = abs(term) < eps;
        power = power * winv2;
    }
    if (!converged) throw NonConvergence("digamma series needed too many terms");
    ComplexBigFloat cur = z;
    for (long i = 0; i < shift; ++i) {
        acc = acc - cbf_of_long(1, prec) / cur;
        cur = cur + cbf_of_long(1, prec);
    }
    return acc;
}

namespace {

// Direct series for |z| away from 1.
ComplexBigFloat hyp2f1_series(const ComplexBigFloat& A, const ComplexBigFloat& B,
                              const ComplexBigFloat& C, const BigFloat& z) {
    const long prec = z.prec() > A.prec() ? z.prec() : A.prec();
    ComplexBigFloat term = cbf_of_long(1, prec);
    ComplexBigFloat acc = term;
    BigFloat eps = BigFloat::two_pow(-prec - 4, prec);
    ComplexBigFloat zc(z, BigFloat(prec));
    for (long k = 0; k < 200000; ++k) {
        ComplexBigFloat kk = cbf_of_long(k, prec);
        term = term * (A + kk) * (B + kk) / ((C + kk) * cbf_of_long(k + 1, prec)) * zc;
        acc = acc + term;
        if (k > 4 && abs(term) < eps * abs(acc)) return acc;
    }
    throw NonConvergence("2F1 direct series did not converge");
}

// Logarithmic connection case C = A + B + mu, integer mu >= 0, expanded in
// w = 1 - x (Abramowitz-Stegun 15.3.10 / 15.3.12).
ComplexBigFloat hyp2f1_log_case(const ComplexBigFloat& A, const ComplexBigFloat& B, long mu,
                                const BigFloat& w, long prec) {
    ComplexBigFloat one = cbf_of_long(1, prec);
    ComplexBigFloat wc(w, BigFloat(prec));
    ComplexBigFloat logw(log(w), BigFloat(prec));
    ComplexBigFloat C = A + B + cbf_of_long(mu, prec);
    BigFloat eps = BigFloat::two_pow(-prec - 4, prec);
    if (mu == 0) {
        ComplexBigFloat pref = gamma_complex(C) / (gamma_complex(A) * gamma_complex(B));
        ComplexBigFloat total{BigFloat(prec), BigFloat(prec)};
        ComplexBigFloat coef = one;
        for (long n = 0;; ++n) {
            if (n == 200000) throw NonConvergence("2F1 log case (mu = 0)");
            ComplexBigFloat nn = cbf_of_long(n, prec);
            ComplexBigFloat bracket = digamma_complex(nn + one) * cbf_of_long(2, prec) -
                                      digamma_complex(A + nn) - digamma_complex(B + nn) - logw;
            ComplexBigFloat term = coef * bracket;
            total = total + term;
            if (n > 4 && abs(term) < eps * abs(total)) break;
            ComplexBigFloat np1 = cbf_of_long(n + 1, prec);
            coef = coef * (A + nn) * (B + nn) / (np1 * np1) * wc;
        }
        return pref * total;
    }
    // finite sum: sum_{n<mu} (A)_n (B)_n / (n! (1-mu)_n) w^n
    ComplexBigFloat finite{BigFloat(prec), BigFloat(prec)};
    ComplexBigFloat coef = one;
    for (long n = 0; n < mu; ++n) {
        finite = finite + coef;
        if (n + 1 < mu) {
            ComplexBigFloat nn = cbf_of_long(n, prec);
            coef = coef * (A + nn) * (B + nn) /
                   (cbf_of_long(n + 1, prec) * cbf_of_long(1 - mu + n, prec)) * wc;
        }
    }
    ComplexBigFloat gamma_mu = cbf_of_long(1, prec);
    for (long i = 1; i < mu; ++i) gamma_mu = gamma_mu * cbf_of_long(i, prec);
    ComplexBigFloat t1 = gamma_mu * gamma_complex(C) /
                         (gamma_complex(A + cbf_of_long(mu, prec)) *
                          gamma_complex(B + cbf_of_long(mu, prec))) *
                         finite;
    // infinite sum with digamma bracket
    ComplexBigFloat Am = A + cbf_of_long(mu, prec);
    ComplexBigFloat Bm = B + cbf_of_long(mu, prec);
    ComplexBigFloat series{BigFloat(prec), BigFloat(prec)};
    ComplexBigFloat coef2 = one;
    for (long i = 1; i <= mu; ++i) coef2 = coef2 / cbf_of_long(i, prec);  // 1/(0! mu!)
    for (long n = 0;; ++n) {
        if (n == 200000) throw NonConvergence("2F1 log case tail");
        ComplexBigFloat nn = cbf_of_long(n, prec);
        ComplexBigFloat bracket = logw - digamma_complex(nn + one) -
                                  digamma_complex(nn + cbf_of_long(mu + 1, prec)) +
                                  digamma_complex(A + nn + cbf_of_long(mu, prec)) +
                                  digamma_complex(B + nn + cbf_of_long(mu, prec));
        ComplexBigFloat term = coef2 * bracket;
        series = series + term;
        if (n > 4 && abs(term) < eps * (abs(series) + eps)) break;
        coef2 = coef2 * (Am + nn) * (Bm + nn) /
                (cbf_of_long(n + 1, prec) * cbf_of_long(n + 1 + mu, prec)) * wc;
    }
    ComplexBigFloat wpow = pow(wc, cbf_of_long(mu, prec));
    ComplexBigFloat sign = cbf_of_long(mu % 2 == 0 ? 1 : -1, prec);
    ComplexBigFloat t2 = sign * gamma_complex(C) / (gamma_complex(A) * gamma_complex(B)) * wpow *
                         series;
    return t1 - t2;
}

}  // namespace

ComplexBigFloat hyp2f1_numeric(const ComplexBigFloat& A, const ComplexBigFloat& B,
                               const ComplexBigFloat& C, const BigFloat& x,
                               const BigFloat& one_minus_x) {
    const long prec = x.prec() > A.prec() ? x.prec() : A.prec();
    if (x.sign() < 0 || one_minus_x.sign() <= 0)
        throw HypothesisViolation("2F1 argument must lie in [0, 1)");
    long pole;
    if (is_nonpositive_integer_point(C, pole)) throw PoleError("2F1 lower-parameter pole");
    if (x < BigFloat::of(make_rational(3, 5), prec)) return hyp2f1_series(A, B, C, x);
    const BigFloat& w = one_minus_x;
    ComplexBigFloat mu = C - A - B;
    long mu_int;
    if (mu.im().is_zero() && near_integer(mu.re(), mu_int)) {
        if (mu_int >= 0) return hyp2f1_log_case(A, B, mu_int, w, prec);
        // Euler transform flips mu: 2F1(A,B;C;x) = w^{mu} 2F1(C-A, C-B; C; x).
        ComplexBigFloat flipped = hyp2f1_log_case(C - A, C - B, -mu_int, w, prec);
        return pow(ComplexBigFloat(w, BigFloat(prec)), mu) * flipped;
    }
    ComplexBigFloat one = cbf_of_long(1, prec);
    ComplexBigFloat t1 = gamma_complex(C) * gamma_complex(mu) /
                         (gamma_complex(C - A) * gamma_complex(C - B)) *
                         hyp2f1_series(A, B, one - mu, w);
    ComplexBigFloat t2 = gamma_complex(C) * gamma_complex(-mu) /
                         (gamma_complex(A) * gamma_complex(B)) *
                         pow(ComplexBigFloat(w, BigFloat(prec)), mu) *
                         hyp2f1_series(C - A, C - B, one + mu, w);
    return t1 + t2;
}

ComplexBigFloat hyp2f1_numeric(const ComplexBigFloat& A, const ComplexBigFloat& B,
                               const ComplexBigFloat& C, const BigFloat& x) {
    return hyp2f1_numeric(A, B, C, x, BigFloat::of(1, x.prec()) - x);
}

}  // namespace mopkit
