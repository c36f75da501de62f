#include "mopkit/analysis.hpp"

#include <cmath>

#include "mopkit/errors.hpp"

namespace mopkit {

namespace {
ComplexRational q(long num, long den = 1) { return ComplexRational(make_rational(num, den)); }
}  // namespace

// ---- limits ----------------------------------------------------------------------

LimitCheckReport check_limit(const LimitEdge& edge, const MultiIndex& n,
                             const std::vector<Rational>& T_values) {
    LimitCheckReport report;
    report.expected_order = edge.expected_order;
    bool all_exact = true;
    std::vector<double> diffs;
    for (const auto& T : T_values) {
        auto [src, tgt] = edge.realize(T, n);
        Poly diff = src - tgt.with_var(src.var());
        double max_abs = 0.0;
        for (int k = 0; k <= diff.degree(); ++k) {
            double v = std::fabs(mpq_get_d(diff.coeff(k).re().get_mpq_t())) +
                       std::fabs(mpq_get_d(diff.coeff(k).im().get_mpq_t()));
            if (v > max_abs) max_abs = v;
        }
        bool exact = diff.is_zero();
        all_exact = all_exact && exact;
        diffs.push_back(max_abs);
        report.stages.push_back({T, max_abs, exact});
    }
    if (edge.kind != LimitEdge::Kind::Limit) {
        report.pass = all_exact;
        report.detail = all_exact ? "exact match" : "exact edge has nonzero difference";
        return report;
    }
    if (all_exact) {
        report.pass = true;
        report.detail = "differences identically zero";
        return report;
    }
    report.pass = true;
    for (size_t i = 0; i + 1 < diffs.size(); ++i) {
        if (diffs[i] == 0.0 || diffs[i + 1] == 0.0) {
            report.decay_ratios.push_back(0.0);
            continue;
        }
        double ratio = diffs[i + 1] / diffs[i];
        report.decay_ratios.push_back(ratio);
        double t0 = mpq_get_d(T_values[i].get_mpq_t());
        double t1 = mpq_get_d(T_values[i + 1].get_mpq_t());
        double expected = std::pow(t0 / t1, edge.expected_order);
        if (!(ratio >= expected / 4.0 && ratio <= expected * 4.0)) report.pass = false;
    }
    report.detail = report.pass ? "decay consistent with expected order"
                                : "decay inconsistent with expected order";
    return report;
}

// ---- recurrence ------------------------------------------------------------------

std::vector<MultiIndex> step_line_path(int m, int length) {
    std::vector<MultiIndex> path;
    std::vector<int> cur(static_cast<size_t>(m), 0);
    path.emplace_back(cur);
    int j = 0;
    for (int i = 1; i < length; ++i) {
        cur[static_cast<size_t>(j)] += 1;
        path.emplace_back(cur);
        j = (j + 1) % m;
    }
    return path;
}

RecurrenceReport check_recurrence(const FamilySpec& spec, const std::vector<MultiIndex>& path) {
    if (path.size() < 2) throw MopkitError("check_recurrence: path too short");
    const int m = spec.m;
    for (size_t i = 0; i + 1 < path.size(); ++i) {
        if (path[i + 1].total() != path[i].total() + 1)
            throw MopkitError("check_recurrence: path indices must grow one step at a time");
        int bumps = 0;
        for (int j = 0; j < m; ++j) {
            int d = path[i + 1][j] - path[i][j];
            if (d == 1) ++bumps;
            else if (d != 0)
                throw MopkitError("check_recurrence: consecutive indices must differ by a unit");
        }
        if (bumps != 1) throw MopkitError("check_recurrence: not a step-line path");
    }
    auto functionals = make_moment_functionals(spec);
    VarRole var = spec.variable();
    std::vector<Poly> polys;
    polys.reserve(path.size());
    for (const auto& idx : path) polys.push_back(solve_type2(functionals, idx, var));

    RecurrenceReport report;
    report.pass = true;
    Poly x = Poly::variable(var);
    for (size_t i = 0; i + 1 < path.size(); ++i) {
        Poly r = x * polys[i] - polys[i + 1];  // monic leading terms cancel
        std::vector<ComplexRational> coeffs;
        size_t lowest = i >= static_cast<size_t>(m) ? i - static_cast<size_t>(m) : 0;
        for (size_t l = i + 1; l-- > lowest;) {
            int deg = path[l].total();
            ComplexRational c = r.coeff(deg);
            coeffs.push_back(c);
            r -= polys[l] * c;
        }
        bool zero = r.is_zero();
        report.steps.push_back({path[i], coeffs, zero});
        if (!zero) {
            report.pass = false;
            if (i >= static_cast<size_t>(m))
                throw InconsistentRecurrence("residual nonzero at path position " +
                                             std::to_string(i));
        }
    }
    return report;
}

// ---- transforms ------------------------------------------------------------------

ComplexBigFloat eval_poly(const Poly& p, const ComplexBigFloat& z) {
    const long prec = z.prec();
    ComplexBigFloat acc{BigFloat(prec), BigFloat(prec)};
    for (int k = p.degree(); k >= 0; --k)
        acc = acc * z + ComplexBigFloat::of(p.coeff(k), prec);
    return acc;
}

void TransformReport::add(const std::string& name, const BigFloat& relerr, const BigFloat& tol) {
    bool ok = !(relerr > tol) && !relerr.is_nan();
    items.push_back({name, relerr.to_double(), ok});
    pass = pass && ok;
}

ComplexBigFloat transform_kernel(const BigFloat& u, const BigFloat& one_minus_u,
                                 const Rational& t, const ComplexRational& a,
                                 const ComplexRational& b, const ComplexRational& c,
                                 const ComplexRational& d, long prec) {
    // K(u,t;a,b,c,d) = u^{-b-t} / (Gamma(a-t) Gamma(a+t) Gamma(c+d))
    //                  * 2F1(c-t, d-t; c+d; 1-u)
    ComplexRational tc{t};
    ComplexBigFloat f21 = hyp2f1_numeric(ComplexBigFloat::of(c - tc, prec),
                                         ComplexBigFloat::of(d - tc, prec),
                                         ComplexBigFloat::of(c + d, prec), one_minus_u, u);
    ComplexBigFloat upow =
        exp(ComplexBigFloat::of(-(b + tc), prec) * ComplexBigFloat(log(u), BigFloat(prec)));
    ComplexBigFloat denom = gamma_complex(ComplexBigFloat::of(a - tc, prec)) *
                            gamma_complex(ComplexBigFloat::of(a + tc, prec)) *
                            gamma_complex(ComplexBigFloat::of(c + d, prec));
    return upow * f21 / denom;
}

namespace {

BigFloat rel_error(const BigFloat& got, const BigFloat& want) {
    BigFloat denom = abs(want);
    if (denom.is_zero()) return abs(got);
    return abs(got - want) / denom;
}

// Real-valued integral of g(u) u^{expo_u - 1} (1-u)^{expo_1mu - 1} over (0,1).
BigFloat beta_weighted_integral(const std::function<BigFloat(const BigFloat&, const BigFloat&)>& g,
                                const Rational& expo_u, const Rational& expo_1mu,
                                const QuadratureConfig& config) {
    const long prec = config.prec_bits;
    BigFloat eu = BigFloat::of(expo_u, prec) - BigFloat::of(1, prec);
    BigFloat e1 = BigFloat::of(expo_1mu, prec) - BigFloat::of(1, prec);
    return tanh_sinh_01(
        [&](const BigFloat& u, const BigFloat& omu) {
            BigFloat w = exp(eu * log(u) + e1 * log(omu));
            return g(u, omu) * w;
        },
        config);
}

}  // namespace

TransformReport verify_transform(const WilsonTransformParams& params, const MultiIndex& n,
                                 const QuadratureConfig& config, int max_l,
                                 const Rational& rel_tol) {
    const long prec = config.prec_bits;
    TransformReport report;
    BigFloat tol = BigFloat::of(rel_tol, prec);

    const ComplexRational &a = params.a, &c = params.c, &d = params.d;
    if (!a.is_real() || !c.is_real() || !d.is_real())
        throw HypothesisViolation("transform checks use real rational parameters");
    Rational t = params.t;
    if (sgn(t) < 0) t = -t;  // kernel is symmetric in t
    if (!(sgn(t) > 0 && t < a.re()))
        throw HypothesisViolation("need 0 < |Re t| < Re a");
    if (!(sgn(c.re() + d.re()) > 0)) throw HypothesisViolation("need Re(c+d) > 0");
    ComplexRational tc{t};
    Rational cd = Rational(c.re() + d.re());

    // kernel symmetry K(u,-t) = K(u,t) at a fixed interior point
    {
        BigFloat u0 = BigFloat::of(make_rational(3, 10), prec);
        BigFloat omu0 = BigFloat::of(make_rational(7, 10), prec);
        ComplexBigFloat k1 = transform_kernel(u0, omu0, t, a + q(2), q(0), c, d, prec);
        ComplexBigFloat k2 = transform_kernel(u0, omu0, Rational(-t), a + q(2), q(0), c, d, prec);
        report.add("kernel-symmetry", rel_error(k1.re(), k2.re()) + abs(k1.im() - k2.im()), tol);
    }

    // (remains) and (bewijstransform): for l = 0..max_l,
    //   int u^l w^{(a-1, c+d-1)} K(u,t;a,0,c,d) du
    //     = (a-t)_l (a+t)_l / (Gamma(a+c+l) Gamma(a+d+l))
    for (int l = 0; l <= max_l; ++l) {
        BigFloat integral = beta_weighted_integral(
            [&](const BigFloat& u, const BigFloat& omu) {
                ComplexBigFloat kv = transform_kernel(u, omu, t, a, q(0), c, d, prec);
                BigFloat upow = exp(BigFloat::of(l, prec) * log(u));
                return kv.re() * upow;
            },
            Rational(a.re()), cd, config);
        ComplexRational poch = pochhammer(a - tc, l) * pochhammer(a + tc, l);
        BigFloat want = BigFloat::of(poch.re(), prec) /
                        (gamma_real(BigFloat::of(Rational(a.re() + c.re() + l), prec)) *
                         gamma_real(BigFloat::of(Rational(a.re() + d.re() + l), prec)));
        report.add(l == 0 ? "remains" : "bewijstransform-l" + std::to_string(l),
                   rel_error(integral, want), tol);
    }

    // scal_trans for each weight: p_n(t^2; a, b_j, c, d) with n = |n| scalar
    // degree is checked at m=1 wiring; sim_trans for the full multi-index.
    const ComplexRational s_value{Rational(t * t)};
    {
        const ComplexRational& b0 = params.b.at(0);
        int n_scalar = n[0];
        Poly p = wilson(n_scalar, a, b0, c, d);
        ComplexRational alpha = a + b0 - q(1);
        ComplexRational beta = c + d - q(1);
        Poly jac = jacobi(n_scalar, alpha, beta);
        BigFloat integral = beta_weighted_integral(
            [&](const BigFloat& u, const BigFloat& omu) {
                ComplexBigFloat kv = transform_kernel(u, omu, t, a, b0, c, d, prec);
                ComplexBigFloat pv = eval_poly(jac, ComplexBigFloat(u, BigFloat(prec)));
                return kv.re() * pv.re();
            },
            Rational(alpha.re() + 1), cd, config);
        BigFloat kn = BigFloat::of(Rational(factorial_int(n_scalar)), prec) *
                      gamma_real(BigFloat::of(Rational(a.re() + c.re() + n_scalar), prec)) *
                      gamma_real(BigFloat::of(Rational(a.re() + d.re() + n_scalar), prec));
        BigFloat got = kn * integral;
        BigFloat want = eval_poly(p, ComplexBigFloat::of(s_value, prec)).re();
        report.add("scal_trans", rel_error(got, want), tol);
    }
    {
        Poly p = multiple_wilson_m_series(n, a, params.b, c, d);
        std::vector<ComplexRational> alpha;
        for (const auto& bj : params.b) alpha.push_back(a + bj - q(1));
        ComplexRational beta = c + d - q(1);
        Poly jp = jacobi_pineiro_m_series(n, alpha, beta);
        BigFloat integral = beta_weighted_integral(
            [&](const BigFloat& u, const BigFloat& omu) {
                ComplexBigFloat kv = transform_kernel(u, omu, t, a, q(0), c, d, prec);
                ComplexBigFloat pv = eval_poly(jp, ComplexBigFloat(u, BigFloat(prec)));
                return kv.re() * pv.re();
            },
            Rational(a.re()), cd, config);
        BigFloat kn = BigFloat::of(multi_factorial(n), prec) *
                      gamma_real(BigFloat::of(Rational(a.re() + c.re() + n.total()), prec)) *
                      gamma_real(BigFloat::of(Rational(a.re() + d.re() + n.total()), prec));
        BigFloat got = kn * integral;
        BigFloat want = eval_poly(p, ComplexBigFloat::of(s_value, prec)).re();
        report.add("sim_trans", rel_error(got, want), tol);
    }
    return report;
}

BigFloat wilson_weight_moment_quadrature(const ComplexRational& a, const ComplexRational& b,
                                         const ComplexRational& c, const ComplexRational& d,
                                         int k, const QuadratureConfig& config) {
    const long prec = config.prec_bits;
    auto weight = [&](const BigFloat& x) {
        ComplexBigFloat ix(BigFloat(prec), x);
        BigFloat ln_mod = lngamma_abs(ComplexBigFloat::of(a, prec) + ix) +
                          lngamma_abs(ComplexBigFloat::of(b, prec) + ix) +
                          lngamma_abs(ComplexBigFloat::of(c, prec) + ix) +
                          lngamma_abs(ComplexBigFloat::of(d, prec) + ix) -
                          lngamma_abs(ix + ix);
        return exp(ln_mod + ln_mod);
    };
    BigFloat mass = exp_sinh_half_line(weight, config);
    if (k == 0) return BigFloat::of(1, prec);
    BigFloat num = exp_sinh_half_line(
        [&](const BigFloat& x) {
            BigFloat x2k = exp(BigFloat::of(2 * k, prec) * log(x));
            return weight(x) * x2k;
        },
        config);
    BigFloat nu = num / mass;
    if (k % 2 == 1) nu = -nu;
    return nu;
}

}  // namespace mopkit
