#pragma once

#include <functional>
#include <variant>
#include <vector>

#include "mopkit/arith.hpp"
#include "mopkit/multi_index.hpp"
#include "mopkit/poly.hpp"

namespace mopkit {

// A pair of upper parameters (u - y, u + y) whose joint Pochhammer product is
// a polynomial in the quadratic variable:
//   (p - y)_k (q + y)_k -> prod_{i<k} ((i+p)(i+q) - V)
// with V = s for Wilson pairs (p = q = a, s = t^2) and V = lambda(x) for
// Racah pairs (p = 0, q = gamma + delta + 1).
struct PairedParam {
    ComplexRational p, q;
};

// Upper parameter of the hypergeometric sums: exact scalar, polynomial in the
// series variable, or a quadratic pair.
using UpperParam = std::variant<ComplexRational, Poly, PairedParam>;

// (param)_k as a polynomial in `var`.
Poly upper_pochhammer(const UpperParam& p, int k, VarRole var);

// Smallest K with an upper scalar in {0,-1,...,-K}; -1 when none terminates.
int termination_bound(const std::vector<UpperParam>& upper);

// Terminating pFq: sum_k prod(upper)_k / prod(lower)_k z^k / k!.
// Throws VanishingLowerPochhammer when a lower Pochhammer vanishes inside the
// summed range with a nonzero numerator.
Poly eval_pfq_terminating(const std::vector<UpperParam>& upper,
                          const std::vector<ComplexRational>& lower, const Poly& z);

// The m-fold hypergeometric sum
//   M^{p;r}_{q,n}(f; g_1:...:g_r / phi; psi_1:...:psi_r)(x),
// where the r-group Pochhammers run over the partial sums
// |k|-k_1, |k|-k_1-k_2, ..., k_m.
struct MSeriesSpec {
    std::vector<UpperParam> f;
    std::vector<ComplexRational> phi;
    std::vector<std::vector<ComplexRational>> g;    // r vectors of length m-1
    std::vector<std::vector<ComplexRational>> psi;  // r vectors of length m-1
    MultiIndex n;
    std::vector<Poly> x;  // m arguments
    VarRole var = VarRole::X;

    void validate() const;
};

Poly eval_M(const MSeriesSpec& spec);

// Two-variable Kampé de Fériet series
//   F^{p:p1;p2}_{q:q1;q2}(f: g; h / phi: psi; xi)(x, y).
// Under the cancellation-truncated policy the outer sum stops at
// `outer_degree` and the full inner sums for outer_degree < k <= k_max are
// asserted to vanish exactly (CancellationFailure otherwise).
struct KampeSpec {
    std::vector<UpperParam> f;
    std::vector<ComplexRational> phi;
    std::vector<ComplexRational> g, psi;  // inner-left
    std::vector<ComplexRational> h, xi;   // inner-right
    Poly x, y;
    VarRole var = VarRole::X;

    enum class Policy { Terminating, CancellationTruncated };
    Policy policy = Policy::Terminating;
    int outer_degree = -1;  // cancellation policy: sum outer k <= outer_degree
    int k_max = -1;         // cancellation policy: assert zero tails through k_max
};

Poly eval_kampe(const KampeSpec& spec);

// First degree_bound+1 coefficients of (1-t)^{-beta} * (power series), by
// finite convolution with the binomial series (beta)_l / l!.  When
// zero_tail_through > degree_bound the coefficients in
// (degree_bound, zero_tail_through] are additionally required to vanish.
Poly truncated_product_coeffs(const ComplexRational& beta,
                              const std::function<ComplexRational(int)>& series_coeff,
                              int degree_bound, VarRole var, int zero_tail_through = -1);

}  // namespace mopkit
