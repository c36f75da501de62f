#include "mopkit/moments.hpp"

#include "mopkit/errors.hpp"

namespace mopkit {

namespace {
const ComplexRational kOne(1);
ComplexRational cr(long v) { return ComplexRational(v); }
}  // namespace

const ComplexRational& MomentFunctional::nu(int k) const {
    if (k < 0) throw MopkitError("moment index must be non-negative");
    if (static_cast<size_t>(k) >= cache_.size()) cache_.resize(static_cast<size_t>(k) + 1);
    auto& slot = cache_[static_cast<size_t>(k)];
    if (!slot) slot = std::make_unique<ComplexRational>(k == 0 ? kOne : raw_(k));
    return *slot;
}

ComplexRational contour_moment_via_basis(const FamilySpec& spec, int weight_j, int k) {
    // var^k = sum_{l<=k} c_l p_l; back-substitute from the top degree down.
    std::vector<Poly> basis;
    basis.reserve(static_cast<size_t>(k) + 1);
    for (int l = 0; l <= k; ++l) basis.push_back(scalar_basis_poly(spec, weight_j, l));
    VarRole var = spec.variable();
    std::vector<ComplexRational> coeffs(static_cast<size_t>(k) + 1, ComplexRational(0));
    coeffs[static_cast<size_t>(k)] = kOne;  // residual = var^k
    Poly residual = Poly::from_coeffs(coeffs, var);
    ComplexRational c0(0);
    for (int l = k; l >= 0; --l) {
        const Poly& pl = basis[static_cast<size_t>(l)];
        if (pl.degree() != l || pl.lead().is_zero())
            throw SingularLeadingCoefficient("scalar basis element of degree " +
                                             std::to_string(l));
        ComplexRational cl = residual.coeff(l) / pl.lead();
        residual -= pl * cl;
        if (l == 0) c0 = cl;
    }
    if (!residual.is_zero()) throw MopkitError("basis expansion left a residual");
    return c0;
}

namespace {

// Finite-discrete functional: normalized power moments of weights w(x) at the
// points lambda(x), x = 0..N.
std::function<ComplexRational(int)> finite_discrete(std::vector<ComplexRational> weights,
                                                    std::vector<ComplexRational> points) {
    ComplexRational m0(0);
    for (const auto& w : weights) m0 += w;
    if (m0.is_zero()) throw AdmissibilityError("weight system has zero total mass");
    return [weights = std::move(weights), points = std::move(points),
            m0](int k) -> ComplexRational {
        ComplexRational acc(0);
        for (size_t i = 0; i < weights.size(); ++i) {
            ComplexRational pk(1);
            for (int t = 0; t < k; ++t) pk *= points[i];
            acc += weights[i] * pk;
        }
        return acc / m0;
    };
}

// nu_k = sum_r S(k,r) phi_r from normalized falling-factorial moments.
std::function<ComplexRational(int)> from_falling_factorial(
    std::function<ComplexRational(int)> phi) {
    return [phi = std::move(phi)](int k) -> ComplexRational {
        auto row = stirling2_row(k);
        ComplexRational acc(0);
        for (int r = 0; r <= k; ++r)
            acc += ComplexRational(Rational(row[static_cast<size_t>(r)])) * phi(r);
        return acc;
    };
}

ComplexRational rational_pow(const ComplexRational& base, int k) {
    ComplexRational acc(1);
    for (int i = 0; i < k; ++i) acc *= base;
    return acc;
}

std::function<ComplexRational(int)> hermite_recurrence(const ComplexRational& c) {
    // mu_k = (c/2) mu_{k-1} + ((k-1)/2) mu_{k-2}, mu_0 = 1.
    return [c](int k) -> ComplexRational {
        std::vector<ComplexRational> mu(static_cast<size_t>(k) + 1);
        mu[0] = ComplexRational(1);
        ComplexRational half(Rational(1, 2));
        for (int i = 1; i <= k; ++i) {
            ComplexRational v = c * half * mu[static_cast<size_t>(i - 1)];
            if (i >= 2) v += ComplexRational(Rational(i - 1, 2)) * mu[static_cast<size_t>(i - 2)];
            mu[static_cast<size_t>(i)] = v;
        }
        return mu[static_cast<size_t>(k)];
    };
}

struct RacahWeightParams {
    ComplexRational alpha, beta, gamma, delta;
};

// Printed Racah weight at integer x.
ComplexRational racah_weight(const RacahWeightParams& p, int x) {
    ComplexRational two(2);
    ComplexRational gd = p.gamma + p.delta;
    ComplexRational num = pochhammer(p.alpha + kOne, x) * pochhammer(p.gamma + kOne, x) *
                          pochhammer(p.beta + p.delta + kOne, x) * pochhammer(gd + kOne, x) *
                          pochhammer((gd + cr(3)) / two, x);
    ComplexRational den = pochhammer(-p.alpha + gd + kOne, x) *
                          pochhammer(-p.beta + p.gamma + kOne, x) *
                          pochhammer((gd + kOne) / two, x) * pochhammer(p.delta + kOne, x) *
                          ComplexRational(factorial(x));
    if (den.is_zero()) throw AdmissibilityError("Racah weight denominator vanishes on support");
    return num / den;
}

// Printed dual Hahn weight at integer x.
ComplexRational dual_hahn_weight(const ComplexRational& gamma, const ComplexRational& delta,
                                 long N, int x) {
    ComplexRational gd1 = gamma + delta + kOne;
    ComplexRational num = (cr(2 * x) + gd1) * pochhammer(gamma + kOne, x) *
                          pochhammer(cr(-N), x) * ComplexRational(factorial(static_cast<int>(N)));
    ComplexRational den = ComplexRational((x % 2) ? Rational(-1) : Rational(1)) *
                          pochhammer(cr(x) + gd1, static_cast<int>(N) + 1) *
                          pochhammer(delta + kOne, x) * ComplexRational(factorial(x));
    if (den.is_zero()) throw AdmissibilityError("dual Hahn weight denominator vanishes");
    return num / den;
}

}  // namespace

std::vector<MomentFunctional> make_moment_functionals(const FamilySpec& spec) {
    std::vector<MomentFunctional> out;
    const int m = spec.m;
    auto vec_or_scalar = [&](const char* name) -> std::vector<ComplexRational> {
        if (spec.has_vector(name)) return spec.vec(name);
        return std::vector<ComplexRational>(static_cast<size_t>(m), spec.scalar(name));
    };
    switch (spec.family) {
        case Family::Jacobi:
        case Family::JacobiPineiro: {
            bool beta_variant = spec.family == Family::JacobiPineiro &&
                                spec.variant == Variant::Beta;
            std::vector<ComplexRational> alpha =
                beta_variant ? std::vector<ComplexRational>(static_cast<size_t>(m),
                                                            spec.scalar("alpha"))
                             : vec_or_scalar("alpha");
            std::vector<ComplexRational> beta = beta_variant
                                                     ? spec.vec("beta")
                                                     : std::vector<ComplexRational>(
                                                           static_cast<size_t>(m),
                                                           spec.scalar("beta"));
            for (int j = 0; j < m; ++j) {
                ComplexRational aj = alpha[size_t(j)], bj = beta[size_t(j)];
                out.emplace_back(spec.family, j, SupportKind::Interval,
                                 [aj, bj](int k) {
                                     // Beta moments: nu_k = (alpha+1)_k / (alpha+beta+2)_k
                                     return pochhammer(aj + kOne, k) /
                                            pochhammer(aj + bj + cr(2), k);
                                 });
            }
            break;
        }
        case Family::Wilson:
        case Family::MultipleWilson:
        case Family::ContinuousDualHahn:
        case Family::MultipleContinuousDualHahn:
        case Family::MeixnerPollaczek:
        case Family::MultipleMeixnerPollaczek:
        case Family::ContinuousHahn:
        case Family::MultipleContinuousHahn: {
            for (int j = 0; j < m; ++j)
                out.emplace_back(spec.family, j, SupportKind::Contour,
                                 [spec, j](int k) { return contour_moment_via_basis(spec, j, k); });
            break;
        }
        case Family::Racah:
        case Family::MultipleRacah: {
            auto alpha = vec_or_scalar("alpha");
            auto beta = vec_or_scalar("beta");
            auto gamma = vec_or_scalar("gamma");
            auto delta = vec_or_scalar("delta");
            // N from the variant's truncation relation.
            auto as_N = [](const ComplexRational& v) -> long {
                return -(v + kOne).re().get_num().get_si();
            };
            std::vector<ComplexRational> cand;
            if (spec.family == Family::Racah)
                cand = {alpha[0], beta[0] + delta[0], gamma[0]};
            else if (spec.variant == Variant::Beta)
                cand = {alpha[0], gamma[0]};
            else if (spec.variant == Variant::GammaDelta)
                cand = {alpha[0], beta[0] + delta[0]};
            else
                cand = {beta[0] + delta[0], gamma[0]};
            long N = -1;
            for (const auto& v : cand) {
                ComplexRational v1 = v + kOne;
                if (N < 0 && v1.is_real() && is_nonpositive_integer(v1.re())) N = as_N(v);
            }
            if (N < 0) throw AdmissibilityError("Racah: no truncation relation");
            for (int j = 0; j < m; ++j) {
                RacahWeightParams p{alpha[size_t(j)], beta[size_t(j)], gamma[size_t(j)],
                                    delta[size_t(j)]};
                std::vector<ComplexRational> w, pts;
                ComplexRational gd1 = p.gamma + p.delta + kOne;
                for (int x = 0; x <= N; ++x) {
                    w.push_back(racah_weight(p, x));
                    pts.push_back(cr(x) * (cr(x) + gd1));  // lambda(x)
                }
                out.emplace_back(spec.family, j, SupportKind::FiniteDiscrete,
                                 finite_discrete(std::move(w), std::move(pts)));
            }
            break;
        }
        case Family::DualHahn:
        case Family::MultipleDualHahn: {
            auto gamma = vec_or_scalar("gamma");
            auto delta = vec_or_scalar("delta");
            long N = spec.scalar_int("N");
            for (int j = 0; j < m; ++j) {
                std::vector<ComplexRational> w, pts;
                ComplexRational gd1 = gamma[size_t(j)] + delta[size_t(j)] + kOne;
                for (int x = 0; x <= N; ++x) {
                    w.push_back(dual_hahn_weight(gamma[size_t(j)], delta[size_t(j)], N, x));
                    pts.push_back(cr(x) * (cr(x) + gd1));
                }
                out.emplace_back(spec.family, j, SupportKind::FiniteDiscrete,
                                 finite_discrete(std::move(w), std::move(pts)));
            }
            break;
        }
        case Family::Hahn: {
            long N = spec.scalar_int("N");
            auto alpha = vec_or_scalar("alpha");
            auto beta = vec_or_scalar("beta");
            for (int j = 0; j < m; ++j) {
                std::vector<ComplexRational> w, pts;
                for (int x = 0; x <= N; ++x) {
                    ComplexRational wx =
                        pochhammer(alpha[size_t(j)] + kOne, x) / ComplexRational(factorial(x)) *
                        pochhammer(beta[size_t(j)] + kOne, static_cast<int>(N) - x) /
                        ComplexRational(factorial(static_cast<int>(N) - x));
                    w.push_back(wx);
                    pts.push_back(cr(x));
                }
                out.emplace_back(spec.family, j, SupportKind::FiniteDiscrete,
                                 finite_discrete(std::move(w), std::move(pts)));
            }
            break;
        }
        case Family::MeixnerI: {
            const auto& beta = spec.scalar("beta");
            const auto& c = spec.vec("c");
            for (int j = 0; j < m; ++j) {
                ComplexRational ratio = c[size_t(j)] / (kOne - c[size_t(j)]);
                out.emplace_back(spec.family, j, SupportKind::InfiniteDiscrete,
                                 from_falling_factorial([beta, ratio](int r) {
                                     return pochhammer(beta, r) * rational_pow(ratio, r);
                                 }));
            }
            break;
        }
        case Family::MeixnerII: {
            const auto& beta = spec.vec("beta");
            const auto& c = spec.scalar("c");
            ComplexRational ratio = c / (kOne - c);
            for (int j = 0; j < m; ++j) {
                ComplexRational bj = beta[size_t(j)];
                out.emplace_back(spec.family, j, SupportKind::InfiniteDiscrete,
                                 from_falling_factorial([bj, ratio](int r) {
                                     return pochhammer(bj, r) * rational_pow(ratio, r);
                                 }));
            }
            break;
        }
        case Family::Kravchuk: {
            long N = spec.scalar_int("N");
            const auto& p = spec.vec("p");
            for (int j = 0; j < m; ++j) {
                ComplexRational pj = p[size_t(j)];
                out.emplace_back(spec.family, j, SupportKind::FiniteDiscrete,
                                 from_falling_factorial([pj, N](int r) {
                                     ComplexRational sign((r % 2) ? Rational(-1) : Rational(1));
                                     return sign * pochhammer(cr(-N), r) * rational_pow(pj, r);
                                 }));
            }
            break;
        }
        case Family::Charlier: {
            const auto& a = spec.vec("a");
            for (int j = 0; j < m; ++j) {
                ComplexRational aj = a[size_t(j)];
                out.emplace_back(spec.family, j, SupportKind::InfiniteDiscrete,
                                 from_falling_factorial(
                                     [aj](int r) { return rational_pow(aj, r); }));
            }
            break;
        }
        case Family::LaguerreI: {
            const auto& alpha = spec.vec("alpha");
            for (int j = 0; j < m; ++j) {
                ComplexRational aj = alpha[size_t(j)];
                out.emplace_back(spec.family, j, SupportKind::Interval,
                                 [aj](int k) { return pochhammer(aj + kOne, k); });
            }
            break;
        }
        case Family::LaguerreII: {
            const auto& alpha = spec.scalar("alpha");
            const auto& c = spec.vec("c");
            for (int j = 0; j < m; ++j) {
                ComplexRational cj = c[size_t(j)];
                out.emplace_back(spec.family, j, SupportKind::Interval, [alpha, cj](int k) {
                    return pochhammer(alpha + kOne, k) / rational_pow(cj, k);
                });
            }
            break;
        }
        case Family::MultipleHermite: {
            const auto& c = spec.vec("c");
            for (int j = 0; j < m; ++j)
                out.emplace_back(spec.family, j, SupportKind::Interval,
                                 hermite_recurrence(c[size_t(j)]));
            break;
        }
    }
    return out;
}

CMatrix moment_matrix(const std::vector<MomentFunctional>& functionals, const MultiIndex& n) {
    const int total = n.total();
    CMatrix d;
    d.reserve(static_cast<size_t>(total));
    for (int j = 0; j < n.m(); ++j) {
        const auto& f = functionals[static_cast<size_t>(j)];
        for (int row = 0; row < n[j]; ++row) {
            std::vector<ComplexRational> r;
            r.reserve(static_cast<size_t>(total));
            for (int col = 0; col < total; ++col) r.push_back(f.nu(row + col));
            d.push_back(std::move(r));
        }
    }
    return d;
}

DeterminantPair normality_determinant(const FamilySpec& spec, const MultiIndex& n) {
    if (spec.family != Family::Jacobi && spec.family != Family::JacobiPineiro)
        throw AdmissibilityError("normality_determinant: Jacobi / Jacobi-Pineiro only");
    if (spec.family == Family::JacobiPineiro && spec.variant == Variant::Beta)
        throw AdmissibilityError("normality_determinant: alpha-variant only");
    check_admissible(spec, n);
    std::vector<ComplexRational> alpha = spec.has_vector("alpha")
                                              ? spec.vec("alpha")
                                              : std::vector<ComplexRational>{spec.scalar("alpha")};
    const ComplexRational beta = spec.scalar("beta");
    const int total = n.total();

    // Theorem 2.1 / 3.1 product formula divided by prod_j m_0^{n_j}; every
    // Gamma ratio collapses to Pochhammers of the same base point.
    ComplexRational closed(1);
    for (int i = 1; i <= total; ++i) closed *= pochhammer(beta + kOne, i - 1);
    for (int j = 0; j < n.m(); ++j) {
        const ComplexRational& aj = alpha[static_cast<size_t>(j)];
        for (int i = 1; i <= n[j]; ++i) {
            closed *= pochhammer(aj + kOne, i - 1);
            closed /= pochhammer(aj + beta + cr(2), total + i - 2);
        }
        for (int r = 1; r <= n[j]; ++r)
            for (int s = r + 1; s <= n[j]; ++s) closed *= cr(s - r);
    }
    for (int i = 0; i < n.m(); ++i)
        for (int j = i + 1; j < n.m(); ++j)
            for (int s = 1; s <= n[i]; ++s)
                for (int r = 1; r <= n[j]; ++r)
                    closed *= alpha[static_cast<size_t>(j)] - alpha[static_cast<size_t>(i)] +
                              cr(r - s);

    auto functionals = make_moment_functionals(spec);
    ComplexRational direct = det_bareiss(moment_matrix(functionals, n));
    return {closed, direct};
}

}  // namespace mopkit
