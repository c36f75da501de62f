#include "mopkit/families.hpp"

#include <algorithm>

#include "mopkit/errors.hpp"

namespace mopkit {

namespace {

const ComplexRational kOne(1);

ComplexRational cr(long v) { return ComplexRational(v); }

void req(bool ok, const std::string& msg) {
    if (!ok) throw AdmissibilityError(msg);
}

bool nonpositive_integer(const ComplexRational& z) {
    return z.is_real() && is_nonpositive_integer(z.re());
}

bool integer_difference(const ComplexRational& a, const ComplexRational& b) {
    ComplexRational d = a - b;
    return d.is_real() && is_integer(d.re());
}

void require_distinct_mod_z(const std::vector<ComplexRational>& v, const std::string& what) {
    for (size_t i = 0; i < v.size(); ++i)
        for (size_t j = i + 1; j < v.size(); ++j)
            req(!integer_difference(v[i], v[j]), what + " must differ by a non-integer");
}

void require_distinct(const std::vector<ComplexRational>& v, const std::string& what) {
    for (size_t i = 0; i < v.size(); ++i)
        for (size_t j = i + 1; j < v.size(); ++j) req(v[i] != v[j], what + " must be distinct");
}

long as_nonneg_int(const ComplexRational& z, const std::string& what) {
    req(z.is_real() && is_integer(z.re()) && sgn(z.re()) >= 0, what + " must be a non-negative integer");
    return z.re().get_num().get_si();
}

std::vector<ComplexRational> plus_scalar(const std::vector<ComplexRational>& v,
                                         const ComplexRational& s) {
    std::vector<ComplexRational> out = v;
    for (auto& x : out) x += s;
    return out;
}

}  // namespace

const char* family_tag(Family f) {
    switch (f) {
        case Family::Jacobi: return "jacobi";
        case Family::JacobiPineiro: return "jacobi-pineiro";
        case Family::Wilson: return "wilson";
        case Family::MultipleWilson: return "multiple-wilson";
        case Family::Racah: return "racah";
        case Family::MultipleRacah: return "multiple-racah";
        case Family::ContinuousDualHahn: return "continuous-dual-hahn";
        case Family::MultipleContinuousDualHahn: return "multiple-continuous-dual-hahn";
        case Family::DualHahn: return "dual-hahn";
        case Family::MultipleDualHahn: return "multiple-dual-hahn";
        case Family::MeixnerPollaczek: return "meixner-pollaczek";
        case Family::MultipleMeixnerPollaczek: return "multiple-meixner-pollaczek";
        case Family::ContinuousHahn: return "continuous-hahn";
        case Family::MultipleContinuousHahn: return "multiple-continuous-hahn";
        case Family::Hahn: return "hahn";
        case Family::MeixnerI: return "meixner-i";
        case Family::MeixnerII: return "meixner-ii";
        case Family::Kravchuk: return "kravchuk";
        case Family::Charlier: return "charlier";
        case Family::LaguerreI: return "laguerre-i";
        case Family::LaguerreII: return "laguerre-ii";
        case Family::MultipleHermite: return "multiple-hermite";
    }
    return "?";
}

std::optional<Family> family_from_tag(const std::string& tag) {
    static const Family all[] = {
        Family::Jacobi, Family::JacobiPineiro, Family::Wilson, Family::MultipleWilson,
        Family::Racah, Family::MultipleRacah, Family::ContinuousDualHahn,
        Family::MultipleContinuousDualHahn, Family::DualHahn, Family::MultipleDualHahn,
        Family::MeixnerPollaczek, Family::MultipleMeixnerPollaczek, Family::ContinuousHahn,
        Family::MultipleContinuousHahn, Family::Hahn, Family::MeixnerI, Family::MeixnerII,
        Family::Kravchuk, Family::Charlier, Family::LaguerreI, Family::LaguerreII,
        Family::MultipleHermite};
    for (Family f : all)
        if (tag == family_tag(f)) return f;
    return std::nullopt;
}

const char* variant_tag(Variant v) {
    switch (v) {
        case Variant::Default: return "default";
        case Variant::Alpha: return "alpha";
        case Variant::Beta: return "beta";
        case Variant::GammaDelta: return "gamma-delta";
    }
    return "?";
}

std::optional<Variant> variant_from_tag(const std::string& tag) {
    for (Variant v : {Variant::Default, Variant::Alpha, Variant::Beta, Variant::GammaDelta})
        if (tag == variant_tag(v)) return v;
    return std::nullopt;
}

const ComplexRational& FamilySpec::scalar(const std::string& name) const {
    auto it = scalars.find(name);
    if (it == scalars.end()) throw AdmissibilityError("missing scalar parameter '" + name + "'");
    return it->second;
}

const std::vector<ComplexRational>& FamilySpec::vec(const std::string& name) const {
    auto it = vectors.find(name);
    if (it == vectors.end()) throw AdmissibilityError("missing vector parameter '" + name + "'");
    if (static_cast<int>(it->second.size()) != m)
        throw AdmissibilityError("parameter '" + name + "' must have m entries");
    return it->second;
}

long FamilySpec::scalar_int(const std::string& name) const {
    return as_nonneg_int(scalar(name), "parameter '" + name + "'");
}

VarRole FamilySpec::variable() const {
    switch (family) {
        case Family::Wilson:
        case Family::MultipleWilson:
        case Family::ContinuousDualHahn:
        case Family::MultipleContinuousDualHahn: return VarRole::S;
        case Family::Racah:
        case Family::MultipleRacah:
        case Family::DualHahn:
        case Family::MultipleDualHahn: return VarRole::LambdaX;
        case Family::Jacobi:
        case Family::JacobiPineiro:
        case Family::ContinuousHahn:
        case Family::MultipleContinuousHahn: return VarRole::T;
        default: return VarRole::X;
    }
}

// ---- admissibility ------------------------------------------------------------

namespace {

void check_wilson_quadruple(const ComplexRational& a, const ComplexRational& b,
                            const ComplexRational& c, const ComplexRational& d) {
    const ComplexRational vals[] = {a + a, a + b, a + c, a + d, b + b, b + c,
                                    b + d, c + c, c + d, d + d, a + b + c + d};
    for (const auto& v : vals)
        req(!nonpositive_integer(v), "Wilson-type pair sums must avoid {0,-1,-2,...}");
}

void check_jp_params(const std::vector<ComplexRational>& alpha, const ComplexRational& beta) {
    req(!nonpositive_integer(beta + kOne), "beta must avoid {-1,-2,...}");
    for (const auto& aj : alpha) {
        req(!nonpositive_integer(aj + kOne), "alpha_j must avoid {-1,-2,...}");
        req(!nonpositive_integer(aj + beta + cr(2)), "alpha_j+beta must avoid {-1,-2,...}");
    }
    require_distinct_mod_z(alpha, "alpha_j");
}

}  // namespace

void check_admissible(const FamilySpec& spec, const MultiIndex& n) {
    if (n.m() != spec.m) throw AdmissibilityError("multi-index length != m");
    const int total = n.total();
    switch (spec.family) {
        case Family::Jacobi:
            check_jp_params({spec.scalar("alpha")}, spec.scalar("beta"));
            break;
        case Family::JacobiPineiro:
            if (spec.variant == Variant::Beta) {
                // P^{(alpha, beta_vec)}: reflection-equivalent to the alpha family.
                check_jp_params(spec.vec("beta"), spec.scalar("alpha"));
            } else {
                check_jp_params(spec.vec("alpha"), spec.scalar("beta"));
            }
            break;
        case Family::Wilson:
            check_wilson_quadruple(spec.scalar("a"), spec.scalar("b"), spec.scalar("c"),
                                   spec.scalar("d"));
            break;
        case Family::MultipleWilson: {
            const auto& b = spec.vec("b");
            for (const auto& bj : b)
                check_wilson_quadruple(spec.scalar("a"), bj, spec.scalar("c"), spec.scalar("d"));
            require_distinct_mod_z(b, "b_j");
            break;
        }
        case Family::Racah:
        case Family::MultipleRacah: {
            std::vector<ComplexRational> alpha, beta, gamma, delta;
            if (spec.family == Family::Racah) {
                alpha = {spec.scalar("alpha")};
                beta = {spec.scalar("beta")};
                gamma = {spec.scalar("gamma")};
                delta = {spec.scalar("delta")};
            } else if (spec.variant == Variant::Beta) {
                alpha = {spec.scalar("alpha")};
                beta = spec.vec("beta");
                gamma = {spec.scalar("gamma")};
                delta = {spec.scalar("delta")};
                require_distinct_mod_z(beta, "beta_j");
            } else if (spec.variant == Variant::GammaDelta) {
                alpha = {spec.scalar("alpha")};
                beta = spec.vec("beta");
                gamma = spec.vec("gamma");
                delta = spec.vec("delta");
                require_distinct_mod_z(gamma, "gamma_j");
                for (int j = 1; j < spec.m; ++j) {
                    req(gamma[size_t(j)] + delta[size_t(j)] == gamma[0] + delta[0],
                        "gamma_j+delta_j must not depend on j");
                    req(beta[size_t(j)] + delta[size_t(j)] == beta[0] + delta[0],
                        "beta_j+delta_j must not depend on j");
                }
            } else {
                alpha = spec.vec("alpha");
                beta = {spec.scalar("beta")};
                gamma = {spec.scalar("gamma")};
                delta = {spec.scalar("delta")};
                require_distinct_mod_z(alpha, "alpha_j");
            }
            // one of the truncation relations must hold with N >= |n|
            auto trunc_ok = [&](const ComplexRational& v) {
                if (!nonpositive_integer(v + kOne)) return false;
                long N = -(v + kOne).re().get_num().get_si();
                return N >= total;
            };
            bool ok = false;
            if (spec.family == Family::Racah)
                ok = trunc_ok(alpha[0]) || trunc_ok(beta[0] + delta[0]) || trunc_ok(gamma[0]);
            else if (spec.variant == Variant::Beta)
                ok = trunc_ok(alpha[0]) || trunc_ok(gamma[0]);
            else if (spec.variant == Variant::GammaDelta)
                ok = trunc_ok(alpha[0]) || trunc_ok(beta[0] + delta[0]);
            else
                ok = trunc_ok(beta[0] + delta[0]) || trunc_ok(gamma[0]);
            req(ok, "Racah needs a -N truncation relation with N >= |n|");
            break;
        }
        case Family::ContinuousDualHahn:
        case Family::MultipleContinuousDualHahn: {
            std::vector<ComplexRational> b = spec.family == Family::ContinuousDualHahn
                                                  ? std::vector<ComplexRational>{spec.scalar("b")}
                                                  : spec.vec("b");
            const auto &a = spec.scalar("a"), &c = spec.scalar("c");
            for (const auto& bj : b) {
                const ComplexRational vals[] = {a + a, a + bj, a + c, bj + bj, bj + c, c + c};
                for (const auto& v : vals)
                    req(!nonpositive_integer(v), "dual-Hahn-type pair sums must avoid {0,-1,...}");
            }
            require_distinct_mod_z(b, "b_j");
            break;
        }
        case Family::DualHahn:
        case Family::MultipleDualHahn: {
            long N = spec.scalar_int("N");
            req(N >= total, "dual Hahn needs N >= |n|");
            std::vector<ComplexRational> gamma, delta;
            if (spec.family == Family::DualHahn) {
                gamma = {spec.scalar("gamma")};
                delta = {spec.scalar("delta")};
            } else {
                gamma = spec.vec("gamma");
                delta = spec.vec("delta");
                for (int j = 1; j < spec.m; ++j)
                    req(gamma[size_t(j)] + delta[size_t(j)] == gamma[0] + delta[0],
                        "gamma_j+delta_j must not depend on j");
                require_distinct_mod_z(gamma, "gamma_j");
            }
            for (int j = 0; j < spec.m; ++j) {
                req(!nonpositive_integer(gamma[size_t(j)] + kOne), "gamma_j must avoid {-1,-2,...}");
                // weight denominator (delta_j+1)_x, x <= N
                ComplexRational dj1 = delta[size_t(j)] + kOne;
                if (nonpositive_integer(dj1)) {
                    long k = -dj1.re().get_num().get_si();
                    req(k > N, "delta_j makes a weight denominator vanish on {0..N}");
                }
            }
            break;
        }
        case Family::MeixnerPollaczek:
        case Family::MultipleMeixnerPollaczek: {
            std::vector<ComplexRational> w = spec.family == Family::MeixnerPollaczek
                                                  ? std::vector<ComplexRational>{spec.scalar("w")}
                                                  : spec.vec("w");
            req(!nonpositive_integer(spec.scalar("lambda") * cr(2)),
                "2*lambda must avoid {0,-1,-2,...}");
            for (const auto& wj : w) {
                req(wj.is_real() && !wj.is_zero(), "w_j must be nonzero rational");
                req(sgn(wj.re()) > 0, "w_j > 0 keeps 0 < phi_j < pi");
            }
            require_distinct(w, "w_j");
            break;
        }
        case Family::ContinuousHahn:
        case Family::MultipleContinuousHahn: {
            std::vector<ComplexRational> b = spec.family == Family::ContinuousHahn
                                                  ? std::vector<ComplexRational>{spec.scalar("b")}
                                                  : spec.vec("b");
            for (const auto& bj : b)
                check_wilson_quadruple(spec.scalar("a"), bj, spec.scalar("c"), spec.scalar("d"));
            require_distinct_mod_z(b, "b_j");
            break;
        }
        case Family::Hahn: {
            long N = spec.scalar_int("N");
            req(N >= total, "Hahn needs N >= |n|");
            std::vector<ComplexRational> alpha, beta;
            if (spec.variant == Variant::Beta) {
                alpha = {spec.scalar("alpha")};
                beta = spec.vec("beta");
            } else {
                alpha = spec.vec("alpha");
                beta = {spec.scalar("beta")};
            }
            for (const auto& v : alpha)
                req(!nonpositive_integer(v + kOne), "alpha must avoid {-1,-2,...}");
            for (const auto& v : beta)
                req(!nonpositive_integer(v + kOne), "beta must avoid {-1,-2,...}");
            const auto& varying = spec.variant == Variant::Beta ? beta : alpha;
            for (size_t i = 0; i < varying.size(); ++i)
                for (size_t j = i + 1; j < varying.size(); ++j) {
                    ComplexRational d = varying[i] - varying[j];
                    if (d.is_real() && is_integer(d.re()))
                        req(abs(d.re()) >= N, "varying Hahn parameters must differ outside {0..N-1}");
                }
            break;
        }
        case Family::MeixnerI: {
            req(!nonpositive_integer(spec.scalar("beta")), "beta must avoid {0,-1,-2,...}");
            const auto& c = spec.vec("c");
            for (const auto& cj : c)
                req(!cj.is_zero() && cj != kOne, "c_j must avoid {0,1}");
            require_distinct(c, "c_j");
            break;
        }
        case Family::MeixnerII: {
            const auto& beta = spec.vec("beta");
            for (const auto& bj : beta)
                req(!nonpositive_integer(bj), "beta_j must avoid {0,-1,-2,...}");
            require_distinct_mod_z(beta, "beta_j");
            const auto& c = spec.scalar("c");
            req(!c.is_zero() && c != kOne, "c must avoid {0,1}");
            break;
        }
        case Family::Kravchuk: {
            long N = spec.scalar_int("N");
            req(N >= total, "Kravchuk needs N >= |n|");
            const auto& p = spec.vec("p");
            for (const auto& pj : p) req(!pj.is_zero() && pj != kOne, "p_j must avoid {0,1}");
            require_distinct(p, "p_j");
            break;
        }
        case Family::Charlier: {
            const auto& a = spec.vec("a");
            for (const auto& aj : a) req(!aj.is_zero(), "a_j must be nonzero");
            require_distinct(a, "a_j");
            break;
        }
        case Family::LaguerreI: {
            const auto& alpha = spec.vec("alpha");
            for (const auto& aj : alpha)
                req(!nonpositive_integer(aj + kOne), "alpha_j must avoid {-1,-2,...}");
            require_distinct_mod_z(alpha, "alpha_j");
            break;
        }
        case Family::LaguerreII: {
            req(!nonpositive_integer(spec.scalar("alpha") + kOne), "alpha must avoid {-1,-2,...}");
            const auto& c = spec.vec("c");
            for (const auto& cj : c) req(!cj.is_zero(), "c_j must be nonzero");
            require_distinct(c, "c_j");
            break;
        }
        case Family::MultipleHermite: {
            const auto& c = spec.vec("c");
            for (const auto& cj : c) req(cj.is_real(), "c_j must be real");
            require_distinct(c, "c_j");
            break;
        }
    }
}

// ---- Jacobi-Pineiro -----------------------------------------------------------

Poly jacobi(int n, const ComplexRational& alpha, const ComplexRational& beta) {
    return jacobi_pineiro_m_series(MultiIndex({n}), {alpha}, beta);
}

Poly jacobi_euler(int n, const ComplexRational& alpha, const ComplexRational& beta) {
    return jacobi_pineiro_euler(MultiIndex({n}), {alpha}, beta);
}

Poly jacobi_pineiro_rodrigues(const MultiIndex& n, const std::vector<ComplexRational>& alpha,
                              const ComplexRational& beta) {
    const int m = n.m();
    const int total = n.total();
    // State (gamma, delta, f) represents t^gamma (1-t)^delta f(t); one derivative
    // rewrites to t^{gamma-1}(1-t)^{delta-1}(gamma(1-t)f - delta t f + t(1-t)f').
    ComplexRational gamma(0);
    ComplexRational delta = beta + ComplexRational(total);
    Poly f(kOne, VarRole::T);
    const Poly t = Poly::variable(VarRole::T);
    const Poly one_minus_t = Poly(kOne, VarRole::T) - t;
    for (int j = m - 1; j >= 0; --j) {
        gamma += alpha[static_cast<size_t>(j)] + cr(n[j]);
        for (int step = 0; step < n[j]; ++step) {
            Poly fp = derivative(f);
            f = Poly(gamma, VarRole::T) * one_minus_t * f - Poly(delta, VarRole::T) * t * f +
                t * one_minus_t * fp;
            gamma -= kOne;
            delta -= kOne;
        }
        gamma -= alpha[static_cast<size_t>(j)];
    }
    delta -= beta;
    if (!gamma.is_zero() || !delta.is_zero())
        throw ResidualExponentError("Rodrigues pipeline left exponents (" + to_string(gamma) +
                                    "," + to_string(delta) + ")");
    return f / ComplexRational(multi_factorial(n));
}

namespace {
// Shared wiring of Eq.-style M data for the alpha-varying Jacobi-Pineiro/Hahn
// block: groups (v+n+e)^{(m)} : (v+s(n)+(beta+1)e)^{(1)} over (v+e)^{(1)} :
// (v+s(n)+(beta+1)e)^{(m)}.
struct AlphaGroups {
    std::vector<std::vector<ComplexRational>> g, psi;
};

AlphaGroups alpha_variant_groups(const std::vector<ComplexRational>& alpha,
                                 const ComplexRational& beta, const MultiIndex& n) {
    const int m = n.m();
    auto s = n.partial_sums();
    std::vector<ComplexRational> an1, a1, asb_hi, asb_lo;
    for (int j = 0; j + 1 < m; ++j) {
        an1.push_back(alpha[size_t(j)] + cr(n[j] + 1));
        asb_lo.push_back(alpha[size_t(j)] + cr(s[size_t(j)]) + beta + kOne);
    }
    for (int j = 1; j < m; ++j) {
        a1.push_back(alpha[size_t(j)] + kOne);
        asb_hi.push_back(alpha[size_t(j)] + cr(s[size_t(j)]) + beta + kOne);
    }
    return {{an1, asb_hi}, {a1, asb_lo}};
}

ComplexRational jp_prefactor(const MultiIndex& n, const std::vector<ComplexRational>& alpha) {
    ComplexRational pref(1);
    for (int j = 0; j < n.m(); ++j)
        pref *= pochhammer(alpha[size_t(j)] + kOne, n[j]) / ComplexRational(factorial(n[j]));
    return pref;
}
}  // namespace

Poly jacobi_pineiro_m_series(const MultiIndex& n, const std::vector<ComplexRational>& alpha,
                             const ComplexRational& beta) {
    auto groups = alpha_variant_groups(alpha, beta, n);
    MSeriesSpec spec;
    spec.f = {UpperParam(alpha[0] + beta + cr(n[0] + 1))};
    spec.phi = {alpha[0] + kOne};
    spec.g = groups.g;
    spec.psi = groups.psi;
    spec.n = n;
    spec.var = VarRole::T;
    spec.x.assign(static_cast<size_t>(n.m()), Poly::variable(VarRole::T));
    return eval_M(spec) * jp_prefactor(n, alpha);
}

Poly jacobi_pineiro_euler(const MultiIndex& n, const std::vector<ComplexRational>& alpha,
                          const ComplexRational& beta) {
    const int total = n.total();
    auto series = [&](int k) {
        ComplexRational c = pochhammer(-beta - cr(total), k) / ComplexRational(factorial(k));
        for (int j = 0; j < n.m(); ++j)
            c *= pochhammer(alpha[size_t(j)] + cr(n[j] + 1), k) /
                 pochhammer(alpha[size_t(j)] + kOne, k);
        return c;
    };
    Poly p = truncated_product_coeffs(beta, series, total, VarRole::T, total + 5);
    return p * jp_prefactor(n, alpha);
}

// ---- Wilson -------------------------------------------------------------------

namespace {
ComplexRational mwilson_prefactor(const MultiIndex& n, const ComplexRational& a,
                                  const std::vector<ComplexRational>& b, const ComplexRational& c,
                                  const ComplexRational& d) {
    ComplexRational pref = pochhammer(a + c, n.total()) * pochhammer(a + d, n.total());
    for (int j = 0; j < n.m(); ++j) pref *= pochhammer(a + b[size_t(j)], n[j]);
    return pref;
}

Poly mwilson_m_series_raw(const MultiIndex& n, const ComplexRational& a,
                          const std::vector<ComplexRational>& b, const ComplexRational& c,
                          const ComplexRational& d) {
    const int m = n.m();
    auto s = n.partial_sums();
    std::vector<ComplexRational> sigma;
    for (int j = 0; j < m; ++j) sigma.push_back(a + b[size_t(j)] + c + d - kOne);
    MSeriesSpec spec;
    spec.f = {UpperParam(PairedParam{a, a}), UpperParam(sigma[0] + cr(n[0]))};
    spec.phi = {a + c, a + d, a + b[0]};
    std::vector<ComplexRational> g1, psi1, g2, psi2;
    for (int j = 0; j + 1 < m; ++j) {
        g1.push_back(a + b[size_t(j)] + cr(n[j]));
        psi2.push_back(sigma[size_t(j)] + cr(s[size_t(j)]));
    }
    for (int j = 1; j < m; ++j) {
        psi1.push_back(a + b[size_t(j)]);
        g2.push_back(sigma[size_t(j)] + cr(s[size_t(j)]));
    }
    spec.g = {g1, g2};
    spec.psi = {psi1, psi2};
    spec.n = n;
    spec.var = VarRole::S;
    spec.x.assign(static_cast<size_t>(m), Poly(kOne, VarRole::S));
    return eval_M(spec) * mwilson_prefactor(n, a, b, c, d);
}
}  // namespace

Poly wilson(int n, const ComplexRational& a, const ComplexRational& b, const ComplexRational& c,
            const ComplexRational& d) {
    return mwilson_m_series_raw(MultiIndex({n}), a, {b}, c, d);
}

Poly multiple_wilson_m_series(const MultiIndex& n, const ComplexRational& a,
                              const std::vector<ComplexRational>& b, const ComplexRational& c,
                              const ComplexRational& d) {
    return mwilson_m_series_raw(n, a, b, c, d);
}

Poly multiple_wilson_kampe(const MultiIndex& n, const ComplexRational& a,
                           const std::vector<ComplexRational>& b, const ComplexRational& c,
                           const ComplexRational& d) {
    const int total = n.total();
    KampeSpec spec;
    spec.f = {UpperParam(PairedParam{a, a})};
    spec.phi = {a + c, a + d};
    spec.g = {c + d - kOne};
    for (int j = 0; j < n.m(); ++j) {
        spec.h.push_back(a + b[size_t(j)] + cr(n[j]));
        spec.xi.push_back(a + b[size_t(j)]);
    }
    spec.h.push_back(kOne - c - d - cr(total));
    spec.var = VarRole::S;
    spec.x = Poly(kOne, VarRole::S);
    spec.y = Poly(kOne, VarRole::S);
    spec.policy = KampeSpec::Policy::CancellationTruncated;
    spec.outer_degree = total;
    spec.k_max = total + 5;
    return eval_kampe(spec) * mwilson_prefactor(n, a, b, c, d);
}

ComplexRational mp_exp_iphi(const ComplexRational& w) {
    ComplexRational denom = kOne + w * w;
    return ComplexRational(Rational(1) - w.re() * w.re(), Rational(2) * w.re()) / denom;
}

// ---- limit families: concrete builders -----------------------------------------

namespace {

struct RacahParams {
    std::vector<ComplexRational> alpha, beta, gamma, delta;  // broadcast to m entries
};

RacahParams racah_params(const FamilySpec& spec) {
    auto broadcast = [&](const char* name) -> std::vector<ComplexRational> {
        if (spec.has_vector(name)) return spec.vec(name);
        return std::vector<ComplexRational>(static_cast<size_t>(spec.m), spec.scalar(name));
    };
    return {broadcast("alpha"), broadcast("beta"), broadcast("gamma"), broadcast("delta")};
}

// Alpha-variant multiple Racah M-series (the printed formula).
Poly mracah_alpha_m(const MultiIndex& n, const std::vector<ComplexRational>& alpha,
                    const ComplexRational& beta, const ComplexRational& gamma,
                    const ComplexRational& delta) {
    auto groups = alpha_variant_groups(alpha, beta, n);
    MSeriesSpec spec;
    spec.f = {UpperParam(PairedParam{ComplexRational(0), gamma + delta + kOne}),
              UpperParam(alpha[0] + beta + cr(n[0] + 1))};
    spec.phi = {beta + delta + kOne, gamma + kOne, alpha[0] + kOne};
    spec.g = groups.g;
    spec.psi = groups.psi;
    spec.n = n;
    spec.var = VarRole::LambdaX;
    spec.x.assign(static_cast<size_t>(n.m()), Poly(kOne, VarRole::LambdaX));
    return eval_M(spec);
}

Poly mracah_alpha_kampe(const MultiIndex& n, const std::vector<ComplexRational>& alpha,
                        const ComplexRational& beta, const ComplexRational& gamma,
                        const ComplexRational& delta) {
    const int total = n.total();
    KampeSpec spec;
    spec.f = {UpperParam(PairedParam{ComplexRational(0), gamma + delta + kOne})};
    spec.phi = {beta + delta + kOne, gamma + kOne};
    spec.g = {beta};
    for (int j = 0; j < n.m(); ++j) {
        spec.h.push_back(alpha[size_t(j)] + cr(n[j] + 1));
        spec.xi.push_back(alpha[size_t(j)] + kOne);
    }
    spec.h.push_back(-beta - cr(total));
    spec.var = VarRole::LambdaX;
    spec.x = Poly(kOne, VarRole::LambdaX);
    spec.y = Poly(kOne, VarRole::LambdaX);
    spec.policy = KampeSpec::Policy::CancellationTruncated;
    spec.outer_degree = total;
    spec.k_max = total + 5;
    return eval_kampe(spec);
}

// Multiple Racah through the Wilson route: substitute t -> x+a (i.e. the
// variable change s = lambda + a^2) in the suitably parameterized multiple
// Wilson polynomial divided by its leading normalization.
Poly mracah_from_wilson(const MultiIndex& n, const RacahParams& p, Variant variant) {
    const int m = n.m();
    ComplexRational a, c, d, fixed1, fixed2;
    std::vector<ComplexRational> vary(static_cast<size_t>(m));
    // alpha_j = a+b_j-1, beta_j = c_j+d_j-1, gamma_j = a+d_j-1, delta_j = a-d_j.
    ComplexRational two(2);
    a = (p.gamma[0] + p.delta[0] + kOne) / two;
    if (variant == Variant::Alpha) {
        d = a - p.delta[0];
        c = p.beta[0] + kOne - d;
        for (int j = 0; j < m; ++j) vary[size_t(j)] = p.alpha[size_t(j)] + kOne - a;
        fixed1 = c;
        fixed2 = d;
    } else if (variant == Variant::Beta) {
        d = a - p.delta[0];
        ComplexRational b = p.alpha[0] + kOne - a;
        for (int j = 0; j < m; ++j) vary[size_t(j)] = p.beta[size_t(j)] + kOne - d;
        fixed1 = b;
        fixed2 = d;
    } else {  // GammaDelta: d_j varies, c = beta_j+1-d_j is j-independent
        ComplexRational b = p.alpha[0] + kOne - a;
        for (int j = 0; j < m; ++j) vary[size_t(j)] = p.gamma[size_t(j)] + kOne - a;
        fixed1 = b;
        fixed2 = p.beta[0] + kOne - vary[0];
    }
    Poly w = mwilson_m_series_raw(n, a, vary, fixed1, fixed2);
    w /= mwilson_prefactor(n, a, vary, fixed1, fixed2);
    return compose_affine(w, kOne, a * a, VarRole::LambdaX);
}

Poly build_mracah(const FamilySpec& spec, const MultiIndex& n, int route) {
    RacahParams p = racah_params(spec);
    Variant v = spec.family == Family::Racah ? Variant::Alpha
                : spec.variant == Variant::Default ? Variant::Alpha
                                                   : spec.variant;
    if (route == 2) return mracah_from_wilson(n, p, v);
    if (v == Variant::Alpha) {
        if (route == 1) return mracah_alpha_kampe(n, p.alpha, p.beta[0], p.gamma[0], p.delta[0]);
        return mracah_alpha_m(n, p.alpha, p.beta[0], p.gamma[0], p.delta[0]);
    }
    if (v == Variant::Beta) {
        // tussenRacah1: R(.;alpha, beta_vec, gamma, delta) =
        //               R(.; beta_vec + delta e, alpha - delta, gamma, delta)
        auto alpha2 = plus_scalar(p.beta, p.delta[0]);
        ComplexRational beta2 = p.alpha[0] - p.delta[0];
        if (route == 1) return mracah_alpha_kampe(n, alpha2, beta2, p.gamma[0], p.delta[0]);
        return mracah_alpha_m(n, alpha2, beta2, p.gamma[0], p.delta[0]);
    }
    // tussenRacah: R(.;alpha, beta_v, gamma_v, delta_v) =
    //              R(.; gamma_v, alpha+beta_j-gamma_j, alpha, gamma_j+delta_j-alpha)
    ComplexRational beta2 = p.alpha[0] + p.beta[0] - p.gamma[0];
    ComplexRational delta2 = p.gamma[0] + p.delta[0] - p.alpha[0];
    if (route == 1) return mracah_alpha_kampe(n, p.gamma, beta2, p.alpha[0], delta2);
    return mracah_alpha_m(n, p.gamma, beta2, p.alpha[0], delta2);
}

Poly build_cdh(const FamilySpec& spec, const MultiIndex& n, bool kampe) {
    const auto& a = spec.scalar("a");
    const auto& c = spec.scalar("c");
    std::vector<ComplexRational> b = spec.family == Family::ContinuousDualHahn
                                          ? std::vector<ComplexRational>{spec.scalar("b")}
                                          : spec.vec("b");
    const int m = n.m();
    const int total = n.total();
    ComplexRational pref = pochhammer(a + c, total);
    for (int j = 0; j < m; ++j) pref *= pochhammer(a + b[size_t(j)], n[j]);
    if (!kampe) {
        MSeriesSpec ms;
        ms.f = {UpperParam(PairedParam{a, a})};
        ms.phi = {a + c, a + b[0]};
        std::vector<ComplexRational> g1, psi1;
        for (int j = 0; j + 1 < m; ++j) g1.push_back(a + b[size_t(j)] + cr(n[j]));
        for (int j = 1; j < m; ++j) psi1.push_back(a + b[size_t(j)]);
        ms.g = {g1};
        ms.psi = {psi1};
        ms.n = n;
        ms.var = VarRole::S;
        ms.x.assign(static_cast<size_t>(m), Poly(kOne, VarRole::S));
        return eval_M(ms) * pref;
    }
    KampeSpec ks;
    ks.f = {UpperParam(PairedParam{a, a})};
    ks.phi = {a + c};
    for (int j = 0; j < m; ++j) {
        ks.h.push_back(a + b[size_t(j)] + cr(n[j]));
        ks.xi.push_back(a + b[size_t(j)]);
    }
    ks.var = VarRole::S;
    ks.x = Poly(kOne, VarRole::S);
    ks.y = Poly(ComplexRational(-1), VarRole::S);
    ks.policy = KampeSpec::Policy::CancellationTruncated;
    ks.outer_degree = total;
    ks.k_max = total + 5;
    return eval_kampe(ks) * pref;
}

Poly build_dual_hahn(const FamilySpec& spec, const MultiIndex& n, bool kampe) {
    std::vector<ComplexRational> gamma, delta;
    if (spec.family == Family::DualHahn) {
        gamma = {spec.scalar("gamma")};
        delta = {spec.scalar("delta")};
    } else {
        gamma = spec.vec("gamma");
        delta = spec.vec("delta");
    }
    ComplexRational N(Rational(spec.scalar_int("N")));
    const int m = n.m();
    const int total = n.total();
    ComplexRational gd1 = gamma[0] + delta[0] + kOne;
    if (!kampe) {
        MSeriesSpec ms;
        ms.f = {UpperParam(PairedParam{ComplexRational(0), gd1})};
        ms.phi = {-N, gamma[0] + kOne};
        std::vector<ComplexRational> g1, psi1;
        for (int j = 0; j + 1 < m; ++j) g1.push_back(gamma[size_t(j)] + cr(n[j] + 1));
        for (int j = 1; j < m; ++j) psi1.push_back(gamma[size_t(j)] + kOne);
        ms.g = {g1};
        ms.psi = {psi1};
        ms.n = n;
        ms.var = VarRole::LambdaX;
        ms.x.assign(static_cast<size_t>(m), Poly(kOne, VarRole::LambdaX));
        return eval_M(ms);
    }
    KampeSpec ks;
    ks.f = {UpperParam(PairedParam{ComplexRational(0), gd1})};
    ks.phi = {-N};
    for (int j = 0; j < m; ++j) {
        ks.h.push_back(gamma[size_t(j)] + cr(n[j] + 1));
        ks.xi.push_back(gamma[size_t(j)] + kOne);
    }
    ks.var = VarRole::LambdaX;
    ks.x = Poly(kOne, VarRole::LambdaX);
    ks.y = Poly(ComplexRational(-1), VarRole::LambdaX);
    ks.policy = KampeSpec::Policy::CancellationTruncated;
    ks.outer_degree = total;
    ks.k_max = total + 5;
    return eval_kampe(ks);
}

Poly build_mp(const FamilySpec& spec, const MultiIndex& n) {
    const auto& lambda = spec.scalar("lambda");
    std::vector<ComplexRational> w = spec.family == Family::MeixnerPollaczek
                                          ? std::vector<ComplexRational>{spec.scalar("w")}
                                          : spec.vec("w");
    const int m = n.m();
    MSeriesSpec ms;
    Poly ix = Poly::from_coeffs({lambda, imaginary_unit()}, VarRole::X);  // lambda + i x
    ms.f = {UpperParam(ix)};
    ms.phi = {lambda * cr(2)};
    ms.n = n;
    ms.var = VarRole::X;
    ComplexRational pref = pochhammer(lambda * cr(2), n.total()) /
                           ComplexRational(multi_factorial(n));
    for (int j = 0; j < m; ++j) {
        ComplexRational e_iphi = mp_exp_iphi(w[size_t(j)]);
        ComplexRational e_m2iphi = (kOne / e_iphi) * (kOne / e_iphi);
        ms.x.push_back(Poly(kOne - e_m2iphi, VarRole::X));
        for (int i = 0; i < n[j]; ++i) pref *= e_iphi;  // e^{i n_j phi_j}
    }
    return eval_M(ms) * pref;
}

Poly build_ch(const FamilySpec& spec, const MultiIndex& n, bool kampe) {
    const auto& a = spec.scalar("a");
    const auto& c = spec.scalar("c");
    const auto& d = spec.scalar("d");
    std::vector<ComplexRational> b = spec.family == Family::ContinuousHahn
                                          ? std::vector<ComplexRational>{spec.scalar("b")}
                                          : spec.vec("b");
    const int m = n.m();
    const int total = n.total();
    auto s = n.partial_sums();
    std::vector<ComplexRational> sigma;
    for (int j = 0; j < m; ++j) sigma.push_back(a + b[size_t(j)] + c + d - kOne);
    ComplexRational pref = pochhammer(a + d, total);
    for (int j = 0; j < m; ++j) pref *= pochhammer(a + b[size_t(j)], n[j]);
    Poly at = Poly::from_coeffs({a, kOne}, VarRole::T);  // a + t
    if (!kampe) {
        MSeriesSpec ms;
        ms.f = {UpperParam(at), UpperParam(sigma[0] + cr(n[0]))};
        ms.phi = {a + d, a + b[0]};
        std::vector<ComplexRational> g1, psi1, g2, psi2;
        for (int j = 0; j + 1 < m; ++j) {
            g1.push_back(a + b[size_t(j)] + cr(n[j]));
            psi2.push_back(sigma[size_t(j)] + cr(s[size_t(j)]));
        }
        for (int j = 1; j < m; ++j) {
            psi1.push_back(a + b[size_t(j)]);
            g2.push_back(sigma[size_t(j)] + cr(s[size_t(j)]));
        }
        ms.g = {g1, g2};
        ms.psi = {psi1, psi2};
        ms.n = n;
        ms.var = VarRole::T;
        ms.x.assign(static_cast<size_t>(m), Poly(kOne, VarRole::T));
        return eval_M(ms) * pref;
    }
    KampeSpec ks;
    ks.f = {UpperParam(at)};
    ks.phi = {a + d};
    ks.g = {c + d - kOne};
    for (int j = 0; j < m; ++j) {
        ks.h.push_back(a + b[size_t(j)] + cr(n[j]));
        ks.xi.push_back(a + b[size_t(j)]);
    }
    ks.h.push_back(kOne - c - d - cr(total));
    ks.var = VarRole::T;
    ks.x = Poly(kOne, VarRole::T);
    ks.y = Poly(kOne, VarRole::T);
    ks.policy = KampeSpec::Policy::CancellationTruncated;
    ks.outer_degree = total;
    ks.k_max = total + 5;
    return eval_kampe(ks) * pref;
}

Poly build_hahn(const FamilySpec& spec, const MultiIndex& n, bool kampe) {
    ComplexRational N(Rational(spec.scalar_int("N")));
    const int m = n.m();
    const int total = n.total();
    Poly minus_x = Poly::from_coeffs({ComplexRational(0), ComplexRational(-1)}, VarRole::X);
    if (spec.variant == Variant::Beta) {
        // beta-variant: single surviving parameter group (r = 1).
        const auto& alpha = spec.scalar("alpha");
        const auto& beta = spec.vec("beta");
        auto s = n.partial_sums();
        MSeriesSpec ms;
        ms.f = {UpperParam(minus_x), UpperParam(alpha + beta[0] + cr(n[0] + 1))};
        ms.phi = {-N, alpha + kOne};
        std::vector<ComplexRational> g1, psi1;
        for (int j = 1; j < m; ++j)
            g1.push_back(beta[size_t(j)] + cr(s[size_t(j)]) + alpha + kOne);
        for (int j = 0; j + 1 < m; ++j)
            psi1.push_back(beta[size_t(j)] + cr(s[size_t(j)]) + alpha + kOne);
        ms.g = {g1};
        ms.psi = {psi1};
        ms.n = n;
        ms.var = VarRole::X;
        ms.x.assign(static_cast<size_t>(m), Poly(kOne, VarRole::X));
        return eval_M(ms);
    }
    const auto& alpha = spec.vec("alpha");
    const auto& beta = spec.scalar("beta");
    if (!kampe) {
        auto groups = alpha_variant_groups(alpha, beta, n);
        MSeriesSpec ms;
        ms.f = {UpperParam(minus_x), UpperParam(alpha[0] + beta + cr(n[0] + 1))};
        ms.phi = {-N, alpha[0] + kOne};
        ms.g = groups.g;
        ms.psi = groups.psi;
        ms.n = n;
        ms.var = VarRole::X;
        ms.x.assign(static_cast<size_t>(m), Poly(kOne, VarRole::X));
        return eval_M(ms);
    }
    KampeSpec ks;
    ks.f = {UpperParam(minus_x)};
    ks.phi = {-N};
    ks.g = {beta};
    for (int j = 0; j < m; ++j) {
        ks.h.push_back(alpha[size_t(j)] + cr(n[j] + 1));
        ks.xi.push_back(alpha[size_t(j)] + kOne);
    }
    ks.h.push_back(-beta - cr(total));
    ks.var = VarRole::X;
    ks.x = Poly(kOne, VarRole::X);
    ks.y = Poly(kOne, VarRole::X);
    ks.policy = KampeSpec::Policy::CancellationTruncated;
    ks.outer_degree = total;
    ks.k_max = total + 5;
    return eval_kampe(ks);
}

Poly build_meixner1(const FamilySpec& spec, const MultiIndex& n) {
    const auto& beta = spec.scalar("beta");
    const auto& c = spec.vec("c");
    MSeriesSpec ms;
    ms.f = {UpperParam(Poly::from_coeffs({ComplexRational(0), ComplexRational(-1)}, VarRole::X))};
    ms.phi = {beta};
    ms.n = n;
    ms.var = VarRole::X;
    for (int j = 0; j < n.m(); ++j)
        ms.x.push_back(Poly((c[size_t(j)] - kOne) / c[size_t(j)], VarRole::X));
    return eval_M(ms);
}

Poly build_meixner2(const FamilySpec& spec, const MultiIndex& n, bool kampe) {
    const auto& beta = spec.vec("beta");
    const auto& c = spec.scalar("c");
    const int m = n.m();
    Poly minus_x = Poly::from_coeffs({ComplexRational(0), ComplexRational(-1)}, VarRole::X);
    if (!kampe) {
        MSeriesSpec ms;
        ms.f = {UpperParam(minus_x)};
        ms.phi = {beta[0]};
        std::vector<ComplexRational> g1, psi1;
        for (int j = 0; j + 1 < m; ++j) g1.push_back(beta[size_t(j)] + cr(n[j]));
        for (int j = 1; j < m; ++j) psi1.push_back(beta[size_t(j)]);
        ms.g = {g1};
        ms.psi = {psi1};
        ms.n = n;
        ms.var = VarRole::X;
        ms.x.assign(static_cast<size_t>(m), Poly((c - kOne) / c, VarRole::X));
        return eval_M(ms);
    }
    KampeSpec ks;
    ks.f = {UpperParam(minus_x)};
    for (int j = 0; j < m; ++j) {
        ks.h.push_back(beta[size_t(j)] + cr(n[j]));
        ks.xi.push_back(beta[size_t(j)]);
    }
    ks.var = VarRole::X;
    ks.x = Poly((c - kOne) / c, VarRole::X);
    ks.y = Poly((kOne - c) / c, VarRole::X);
    ks.policy = KampeSpec::Policy::CancellationTruncated;
    ks.outer_degree = n.total();
    ks.k_max = n.total() + 5;
    return eval_kampe(ks);
}

Poly build_kravchuk(const FamilySpec& spec, const MultiIndex& n) {
    ComplexRational N(Rational(spec.scalar_int("N")));
    const auto& p = spec.vec("p");
    MSeriesSpec ms;
    ms.f = {UpperParam(Poly::from_coeffs({ComplexRational(0), ComplexRational(-1)}, VarRole::X))};
    ms.phi = {-N};
    ms.n = n;
    ms.var = VarRole::X;
    for (int j = 0; j < n.m(); ++j) ms.x.push_back(Poly(kOne / p[size_t(j)], VarRole::X));
    return eval_M(ms);
}

Poly build_charlier(const FamilySpec& spec, const MultiIndex& n) {
    const auto& a = spec.vec("a");
    MSeriesSpec ms;
    ms.f = {UpperParam(Poly::from_coeffs({ComplexRational(0), ComplexRational(-1)}, VarRole::X))};
    ms.n = n;
    ms.var = VarRole::X;
    for (int j = 0; j < n.m(); ++j)
        ms.x.push_back(Poly(ComplexRational(-1) / a[size_t(j)], VarRole::X));
    return eval_M(ms);
}

Poly build_jp_beta(const FamilySpec& spec, const MultiIndex& n) {
    const auto& alpha = spec.scalar("alpha");
    const auto& beta = spec.vec("beta");
    const int m = n.m();
    auto s = n.partial_sums();
    MSeriesSpec ms;
    ms.f = {UpperParam(alpha + beta[0] + cr(n[0] + 1))};
    ms.phi = {alpha + kOne};
    std::vector<ComplexRational> g1, psi1;
    for (int j = 1; j < m; ++j) g1.push_back(beta[size_t(j)] + cr(s[size_t(j)]) + alpha + kOne);
    for (int j = 0; j + 1 < m; ++j)
        psi1.push_back(beta[size_t(j)] + cr(s[size_t(j)]) + alpha + kOne);
    ms.g = {g1};
    ms.psi = {psi1};
    ms.n = n;
    ms.var = VarRole::T;
    ms.x.assign(static_cast<size_t>(m), Poly::variable(VarRole::T));
    ComplexRational pref =
        pochhammer(alpha + kOne, n.total()) / ComplexRational(multi_factorial(n));
    return eval_M(ms) * pref;
}

Poly build_laguerre1(const FamilySpec& spec, const MultiIndex& n, bool product_route) {
    const auto& alpha = spec.vec("alpha");
    const int m = n.m();
    ComplexRational pref = jp_prefactor(n, alpha);
    if (product_route) {
        // e^x mFm(alpha+n+e; alpha+e; -x): exponential-series convolution.
        const int total = n.total();
        auto series = [&](int k) {
            ComplexRational c = ComplexRational((k % 2) ? Rational(-1) : Rational(1)) /
                                ComplexRational(factorial(k));
            for (int j = 0; j < m; ++j)
                c *= pochhammer(alpha[size_t(j)] + cr(n[j] + 1), k) /
                     pochhammer(alpha[size_t(j)] + kOne, k);
            return c;
        };
        // exp(x) = sum x^l / l! = (1-t)^{-beta} shape does not apply; convolve
        // directly against the exponential coefficients.
        std::vector<ComplexRational> coeffs(static_cast<size_t>(total) + 1);
        for (int k = 0; k <= total + 5; ++k) {
            ComplexRational ck(0);
            for (int l = 0; l <= k; ++l)
                ck += series(k - l) / ComplexRational(factorial(l));
            if (k <= total)
                coeffs[static_cast<size_t>(k)] = ck;
            else if (!ck.is_zero())
                throw CancellationFailure("Laguerre I product tail coefficient nonzero");
        }
        return Poly::from_coeffs(std::move(coeffs), VarRole::X) * pref;
    }
    MSeriesSpec ms;
    ms.phi = {alpha[0] + kOne};
    std::vector<ComplexRational> g1, psi1;
    for (int j = 0; j + 1 < m; ++j) g1.push_back(alpha[size_t(j)] + cr(n[j] + 1));
    for (int j = 1; j < m; ++j) psi1.push_back(alpha[size_t(j)] + kOne);
    ms.g = {g1};
    ms.psi = {psi1};
    ms.n = n;
    ms.var = VarRole::X;
    ms.x.assign(static_cast<size_t>(m), Poly::variable(VarRole::X));
    return eval_M(ms) * pref;
}

Poly build_laguerre2(const FamilySpec& spec, const MultiIndex& n) {
    const auto& alpha = spec.scalar("alpha");
    const auto& c = spec.vec("c");
    MSeriesSpec ms;
    ms.phi = {alpha + kOne};
    ms.n = n;
    ms.var = VarRole::X;
    for (int j = 0; j < n.m(); ++j)
        ms.x.push_back(Poly::variable(VarRole::X) * c[size_t(j)]);
    ComplexRational pref =
        pochhammer(alpha + kOne, n.total()) / ComplexRational(multi_factorial(n));
    return eval_M(ms) * pref;
}

// Route table entries; `route` disambiguates among a family's representations.
Poly dispatch(const FamilySpec& spec, const MultiIndex& n, int route) {
    switch (spec.family) {
        case Family::Jacobi:
            return route == 1 ? jacobi_euler(n[0], spec.scalar("alpha"), spec.scalar("beta"))
                              : jacobi(n[0], spec.scalar("alpha"), spec.scalar("beta"));
        case Family::JacobiPineiro:
            if (spec.variant == Variant::Beta) return build_jp_beta(spec, n);
            if (route == 1) return jacobi_pineiro_m_series(n, spec.vec("alpha"), spec.scalar("beta"));
            if (route == 2) return jacobi_pineiro_euler(n, spec.vec("alpha"), spec.scalar("beta"));
            return jacobi_pineiro_rodrigues(n, spec.vec("alpha"), spec.scalar("beta"));
        case Family::Wilson:
            return route == 1 ? multiple_wilson_kampe(n, spec.scalar("a"), {spec.scalar("b")},
                                                      spec.scalar("c"), spec.scalar("d"))
                              : wilson(n[0], spec.scalar("a"), spec.scalar("b"), spec.scalar("c"),
                                       spec.scalar("d"));
        case Family::MultipleWilson:
            return route == 1
                       ? multiple_wilson_kampe(n, spec.scalar("a"), spec.vec("b"), spec.scalar("c"),
                                               spec.scalar("d"))
                       : multiple_wilson_m_series(n, spec.scalar("a"), spec.vec("b"),
                                                  spec.scalar("c"), spec.scalar("d"));
        case Family::Racah:
        case Family::MultipleRacah:
            return build_mracah(spec, n, route);
        case Family::ContinuousDualHahn:
        case Family::MultipleContinuousDualHahn:
            return build_cdh(spec, n, route == 1);
        case Family::DualHahn:
        case Family::MultipleDualHahn:
            return build_dual_hahn(spec, n, route == 1);
        case Family::MeixnerPollaczek:
        case Family::MultipleMeixnerPollaczek:
            return build_mp(spec, n);
        case Family::ContinuousHahn:
        case Family::MultipleContinuousHahn:
            return build_ch(spec, n, route == 1);
        case Family::Hahn:
            return build_hahn(spec, n, route == 1);
        case Family::MeixnerI:
            return build_meixner1(spec, n);
        case Family::MeixnerII:
            return build_meixner2(spec, n, route == 1);
        case Family::Kravchuk:
            return build_kravchuk(spec, n);
        case Family::Charlier:
            return build_charlier(spec, n);
        case Family::LaguerreI:
            return build_laguerre1(spec, n, route == 1);
        case Family::LaguerreII:
            return build_laguerre2(spec, n);
        case Family::MultipleHermite:
            throw UnavailableRepresentation(
                "multiple Hermite has no closed-form constructor; use the oracle");
    }
    throw MopkitError("dispatch: unknown family");
}

template <int Route>
Poly route_thunk(const FamilySpec& spec, const MultiIndex& n) {
    return dispatch(spec, n, Route);
}

}  // namespace

std::vector<Representation> representations(const FamilySpec& spec) {
    switch (spec.family) {
        case Family::Jacobi:
            return {{"hypergeometric", route_thunk<0>}, {"euler", route_thunk<1>}};
        case Family::JacobiPineiro:
            if (spec.variant == Variant::Beta) return {{"m-series", route_thunk<0>}};
            return {{"rodrigues", route_thunk<0>},
                    {"m-series", route_thunk<1>},
                    {"euler", route_thunk<2>}};
        case Family::Wilson:
        case Family::MultipleWilson:
            return {{"m-series", route_thunk<0>}, {"kampe", route_thunk<1>}};
        case Family::Racah:
        case Family::MultipleRacah:
            return {{"m-series", route_thunk<0>},
                    {"kampe", route_thunk<1>},
                    {"from-wilson", route_thunk<2>}};
        case Family::ContinuousDualHahn:
        case Family::MultipleContinuousDualHahn:
        case Family::DualHahn:
        case Family::MultipleDualHahn:
        case Family::ContinuousHahn:
        case Family::MultipleContinuousHahn:
        case Family::MeixnerII:
            return {{"m-series", route_thunk<0>}, {"kampe", route_thunk<1>}};
        case Family::Hahn:
            if (spec.variant == Variant::Beta) return {{"m-series", route_thunk<0>}};
            return {{"m-series", route_thunk<0>}, {"kampe", route_thunk<1>}};
        case Family::LaguerreI:
            return {{"m-series", route_thunk<0>}, {"product", route_thunk<1>}};
        case Family::MeixnerPollaczek:
        case Family::MultipleMeixnerPollaczek:
        case Family::MeixnerI:
        case Family::Kravchuk:
        case Family::Charlier:
        case Family::LaguerreII:
            return {{"m-series", route_thunk<0>}};
        case Family::MultipleHermite:
            return {};
    }
    return {};
}

Poly construct(const FamilySpec& spec, const MultiIndex& n) {
    check_admissible(spec, n);
    Poly p = dispatch(spec, n, 0);
    if (p.degree() != n.total())
        throw MopkitError("constructor degree " + std::to_string(p.degree()) + " != |n| = " +
                          std::to_string(n.total()));
    return p;
}

Poly build_limit_family(const FamilySpec& spec, const MultiIndex& n) {
    check_admissible(spec, n);
    return dispatch(spec, n, 0);
}

Poly scalar_basis_poly(const FamilySpec& spec, int weight_j, int degree) {
    FamilySpec s1 = spec;
    s1.m = 1;
    s1.vectors.clear();
    for (const auto& [name, values] : spec.vectors)
        s1.vectors[name] = {values.at(static_cast<size_t>(weight_j))};
    MultiIndex n1({degree});
    return dispatch(s1, n1, 0);
}

}  // namespace mopkit
