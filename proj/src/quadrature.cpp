#include "mopkit/quadrature.hpp"

#include "mopkit/errors.hpp"

namespace mopkit {

void QuadratureConfig::validate() const {
    // tolerance >= 2^{-prec/2}
    Rational floor_tol = make_rational(1, 1) / Rational(Integer(1) << (prec_bits / 2));
    if (tolerance < floor_tol)
        throw NonConvergence("quadrature tolerance is below 2^{-prec/2}");
}

namespace {

// One tanh-sinh node: u = 1/(1+e^{-2g}), 1-u = 1/(1+e^{2g}), g = (pi/2) sinh(tau);
// weight du/dtau = (pi/2) cosh(tau) / (2 cosh^2 g) computed in stable form.
struct Node01 {
    BigFloat u, one_minus_u, weight;
    bool negligible;  // weight underflowed at working precision
};

Node01 tanh_sinh_node(const BigFloat& tau, long prec) {
    BigFloat half_pi = BigFloat::pi(prec) / BigFloat::of(2, prec);
    BigFloat g = half_pi * sinh(tau);
    BigFloat one = BigFloat::of(1, prec);
    BigFloat e2g = exp(-(g + g));
    BigFloat e2gp = exp(g + g);
    Node01 node;
    node.u = one / (one + e2g);
    node.one_minus_u = one / (one + e2gp);
    BigFloat ch = cosh(g);
    node.weight = half_pi * cosh(tau) / (BigFloat::of(2, prec) * ch * ch);
    node.negligible = node.weight.is_zero() || node.one_minus_u.is_zero() || node.u.is_zero();
    return node;
}

template <class NodeFn, class EvalFn>
BigFloat de_integrate(const QuadratureConfig& config, const NodeFn& make_node,
                      const EvalFn& eval) {
    config.validate();
    const long prec = config.prec_bits;
    BigFloat tol = config.tol();
    BigFloat tiny = BigFloat::two_pow(-prec - 16, prec);
    BigFloat h = BigFloat::of(1, prec);
    BigFloat total(prec);
    BigFloat prev(prec);
    // Level 0: step 1; each level halves the step and adds the odd multiples.
    for (int level = 0; level <= config.max_levels; ++level) {
        BigFloat level_sum(prec);
        long step = (level == 0) ? 1 : 2;
        long start = (level == 0) ? 0 : 1;
        // walk outward in both directions until the terms vanish
        for (int dir = 0; dir < 2; ++dir) {
            long k = start;
            if (level == 0 && dir == 1) k = 1;  // tau = 0 only once
            int dead = 0;
            while (true) {
                BigFloat tau = h * BigFloat::of(dir == 0 ? k : -k, prec);
                auto node = make_node(tau, prec);
                if (node.negligible) {
                    if (++dead >= 2) break;
                    k += step;
                    continue;
                }
                BigFloat term = eval(node) * node.weight;
                level_sum = level_sum + term;
                if (abs(term) < tiny * (BigFloat::of(1, prec) + abs(level_sum))) {
                    if (++dead >= 2) break;
                } else {
                    dead = 0;
                }
                k += step;
                if (k > 1000000) throw NonConvergence("quadrature node walk did not terminate");
            }
        }
        if (level == 0) {
            total = level_sum * h;
        } else {
            total = total / BigFloat::of(2, prec) + level_sum * h;
        }
        if (level >= 3) {
            BigFloat err = abs(total - prev);
            if (err <= tol * abs(total)) return total;
        }
        prev = total;
        h = h / BigFloat::of(2, prec);
    }
    throw NonConvergence("quadrature did not reach the target tolerance");
}

}  // namespace

BigFloat tanh_sinh_01(const Integrand01& f, const QuadratureConfig& config) {
    return de_integrate(
        config, [](const BigFloat& tau, long prec) { return tanh_sinh_node(tau, prec); },
        [&f](const Node01& node) { return f(node.u, node.one_minus_u); });
}

BigFloat exp_sinh_half_line(const IntegrandHalfLine& f, const QuadratureConfig& config) {
    struct NodeH {
        BigFloat x, weight;
        bool negligible;
    };
    return de_integrate(
        config,
        [](const BigFloat& tau, long prec) {
            BigFloat half_pi = BigFloat::pi(prec) / BigFloat::of(2, prec);
            NodeH node{exp(half_pi * sinh(tau)), BigFloat(prec), false};
            node.weight = node.x * half_pi * cosh(tau);
            node.negligible = node.x.is_zero() || node.x.is_inf() || node.weight.is_inf();
            return node;
        },
        [&f](const NodeH& node) { return f(node.x); });
}

}  // namespace mopkit
