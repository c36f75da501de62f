#pragma once

#include "mopkit/bigfloat.hpp"

namespace mopkit {

// Gamma on the complex plane at the argument's precision: Stirling series with
// Bernoulli-number tail after an argument shift, reflection for Re(z) < 1/2.
// Throws PoleError at non-positive integers.
ComplexBigFloat gamma_complex(const ComplexBigFloat& z);
ComplexBigFloat lngamma_complex(const ComplexBigFloat& z);
ComplexBigFloat digamma_complex(const ComplexBigFloat& z);

// |Gamma(z)| without evaluating the oscillatory part; the workhorse for the
// Wilson weight quadrature.
BigFloat gamma_abs(const ComplexBigFloat& z);

// ln |Gamma(z)|; keeps products of Gamma ratios out of the underflow range.
BigFloat lngamma_abs(const ComplexBigFloat& z);

// Gauss hypergeometric 2F1(A,B;C;x) for real x in (0,1), complex parameters.
// Direct series away from 1; the 1-x connection formulas near 1, including the
// logarithmic cases when C-A-B is an integer.  Throws NonConvergence when the
// tail bound is not reached.
ComplexBigFloat hyp2f1_numeric(const ComplexBigFloat& A, const ComplexBigFloat& B,
                               const ComplexBigFloat& C, const BigFloat& x);
// Variant with 1-x supplied exactly (tanh-sinh nodes know both endpoints).
ComplexBigFloat hyp2f1_numeric(const ComplexBigFloat& A, const ComplexBigFloat& B,
                               const ComplexBigFloat& C, const BigFloat& x,
                               const BigFloat& one_minus_x);

}  // namespace mopkit
