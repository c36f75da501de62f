#pragma once

#include <functional>

#include "mopkit/bigfloat.hpp"

namespace mopkit {

// Double-exponential quadrature configuration.  The tolerance is relative and
// must be achievable at the working precision (tolerance >= 2^{-prec/2}).
struct QuadratureConfig {
    long prec_bits = 256;
    int max_levels = 12;
    Rational tolerance = make_rational(1, 1) / Rational(Integer(1) << 100);  // 2^-100

    BigFloat tol() const { return BigFloat::of(tolerance, prec_bits); }
    void validate() const;
};

// Integrand over (0,1); receives both u and 1-u exactly from the node map so
// endpoint powers stay accurate.
using Integrand01 = std::function<BigFloat(const BigFloat& u, const BigFloat& one_minus_u)>;

// Integrand over (0, inf).
using IntegrandHalfLine = std::function<BigFloat(const BigFloat& x)>;

// tanh-sinh rule on (0,1); handles algebraic endpoint singularities.
BigFloat tanh_sinh_01(const Integrand01& f, const QuadratureConfig& config);

// exp-sinh rule on (0, inf) for integrands with exponential decay.
BigFloat exp_sinh_half_line(const IntegrandHalfLine& f, const QuadratureConfig& config);

}  // namespace mopkit
