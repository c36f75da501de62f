#pragma once

#include <string>
#include <vector>

#include "mopkit/oracle.hpp"
#include "mopkit/quadrature.hpp"
#include "mopkit/scheme.hpp"
#include "mopkit/special.hpp"

namespace mopkit {

// ---- limit relations -----------------------------------------------------------

struct LimitCheckReport {
    struct Stage {
        Rational T;
        double max_coeff_diff;  // exact difference, rendered as double
        bool exact_zero;
    };
    std::vector<Stage> stages;
    std::vector<double> decay_ratios;  // diff(T_{i+1}) / diff(T_i)
    int expected_order = 1;
    bool pass = false;
    std::string detail;
};

// Evaluates the edge exactly at each T and checks that coefficient differences
// shrink consistently with the expected order (ratio within a factor 4).
// Exact edges (specialization / scalar reduction) must have zero difference.
LimitCheckReport check_limit(const LimitEdge& edge, const MultiIndex& n,
                             const std::vector<Rational>& T_values);

// ---- recurrence ------------------------------------------------------------------

struct RecurrenceReport {
    struct Step {
        MultiIndex center;
        std::vector<ComplexRational> coefficients;  // x p_i = p_{i+1} + sum c_t p_{i-t}
        bool residual_zero;
    };
    std::vector<Step> steps;
    bool pass = false;
};

// Verifies the order-(m+1) relation x p_{pi_i} = p_{pi_{i+1}} + sum_{t<=m}
// c_t p_{pi_{i-t}} along a step-line path of multi-indices; the polynomials are
// the monic oracle solutions, and the expansion residual must vanish exactly.
// Throws InconsistentRecurrence when a full-length relation fails.
RecurrenceReport check_recurrence(const FamilySpec& spec, const std::vector<MultiIndex>& path);

// The step line n_0 = 0 -> e_1 -> e_1+e_2 -> ... cycling components.
std::vector<MultiIndex> step_line_path(int m, int length);

// ---- transform identities --------------------------------------------------------

struct TransformReport {
    struct Item {
        std::string name;
        double rel_error;
        bool pass;
    };
    std::vector<Item> items;
    bool pass = true;

    void add(const std::string& name, const BigFloat& relerr, const BigFloat& tol);
};

struct WilsonTransformParams {
    ComplexRational a, c, d;
    std::vector<ComplexRational> b;  // one entry per weight
    Rational t;                      // evaluation point, 0 < |t| < a
};

// Numeric kernel K(u, t; a, b, c, d) at a tanh-sinh node.
ComplexBigFloat transform_kernel(const BigFloat& u, const BigFloat& one_minus_u,
                                 const Rational& t, const ComplexRational& a,
                                 const ComplexRational& b, const ComplexRational& c,
                                 const ComplexRational& d, long prec);

// Quadrature verification of the Jacobi(-Pineiro) transform identities:
// the moment identity chain (l = 0..max_l), the kernel symmetry, and the
// scalar/multiple transform equalities at the exact polynomial value.
TransformReport verify_transform(const WilsonTransformParams& params, const MultiIndex& n,
                                 const QuadratureConfig& config, int max_l = 4,
                                 const Rational& rel_tol = make_rational(1, 1000000000000L));

// ---- Wilson weight quadrature (criterion 9) --------------------------------------

// nu_k of the Wilson measure from the real orthogonality weight
// |Gamma(a+ix)Gamma(b+ix)Gamma(c+ix)Gamma(d+ix)/Gamma(2ix)|^2 on (0, inf);
// equals (-1)^k int x^{2k} w / int w.
BigFloat wilson_weight_moment_quadrature(const ComplexRational& a, const ComplexRational& b,
                                         const ComplexRational& c, const ComplexRational& d,
                                         int k, const QuadratureConfig& config);

// Exact-polynomial evaluation helpers at BigFloat points.
ComplexBigFloat eval_poly(const Poly& p, const ComplexBigFloat& z);

}  // namespace mopkit
