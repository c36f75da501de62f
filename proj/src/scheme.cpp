#include "mopkit/scheme.hpp"

#include <json.hpp>

#include "mopkit/oracle.hpp"

namespace mopkit {

namespace {

ComplexRational q(long num, long den = 1) { return ComplexRational(make_rational(num, den)); }

Poly substitute(const Poly& p, const Poly& q_poly) { return compose(p, q_poly); }

// ---- edge realizations at fixed representative admissible parameters -----

std::pair<Poly, Poly> wilson_to_racah(const Rational&, const MultiIndex& n) {
    FamilySpec spec;
    spec.family = Family::MultipleRacah;
    spec.variant = Variant::Alpha;
    spec.m = n.m();
    spec.vectors["alpha"] = n.m() == 1 ? std::vector<ComplexRational>{q(5, 2)}
                                       : std::vector<ComplexRational>{q(5, 2), q(13, 7)};
    spec.scalars["beta"] = q(3, 4);
    spec.scalars["gamma"] = q(-9);  // N = 8
    spec.scalars["delta"] = q(1, 3);
    auto reps = representations(spec);
    // from-wilson route vs the printed M-series route
    Poly src = reps[2].build(spec, n);
    Poly tgt = reps[0].build(spec, n);
    return {src, tgt};
}

std::pair<Poly, Poly> wilson_to_cdh(const Rational& T, const MultiIndex& n) {
    ComplexRational a = q(1, 2), c = q(4, 3);
    std::vector<ComplexRational> b = {q(2, 3), q(5, 4), q(9, 7)};
    b.resize(static_cast<size_t>(n.m()));
    Poly w = multiple_wilson_m_series(n, a, b, c, ComplexRational(T));
    w /= pochhammer(a + ComplexRational(T), n.total());
    FamilySpec cdh;
    cdh.family = Family::MultipleContinuousDualHahn;
    cdh.m = n.m();
    cdh.scalars["a"] = a;
    cdh.scalars["c"] = c;
    cdh.vectors["b"] = b;
    return {w, build_limit_family(cdh, n)};
}

std::pair<Poly, Poly> wilson_to_ch(const Rational& T, const MultiIndex& n) {
    ComplexRational a = q(1, 2), c = q(2, 3), d = q(3, 4);
    std::vector<ComplexRational> b = {q(4, 5), q(6, 7), q(9, 11)};
    b.resize(static_cast<size_t>(n.m()));
    ComplexRational Tc(T);
    std::vector<ComplexRational> bshift = b;
    for (auto& v : bshift) v += Tc;
    Poly w = multiple_wilson_m_series(n, a - Tc, bshift, c - Tc, d + Tc);
    // s -> (t + T)^2
    Poly tshift = Poly::from_coeffs({Tc, q(1)}, VarRole::T);
    Poly src = substitute(w, tshift * tshift);
    src /= pochhammer(a + c - Tc - Tc, n.total()) * ComplexRational(multi_factorial(n));
    FamilySpec ch;
    ch.family = Family::MultipleContinuousHahn;
    ch.m = n.m();
    ch.scalars["a"] = a;
    ch.scalars["c"] = c;
    ch.scalars["d"] = d;
    ch.vectors["b"] = b;
    return {src, build_limit_family(ch, n)};
}

std::pair<Poly, Poly> racah_to_dual_hahn(const Rational& T, const MultiIndex& n) {
    const long N = 8;
    std::vector<ComplexRational> gamma = {q(1, 3), q(3, 4), q(6, 5)};
    gamma.resize(static_cast<size_t>(n.m()));
    ComplexRational gd_sum = q(3, 2) + gamma[0];  // gamma_j + delta_j fixed
    ComplexRational Tc(T);
    // alpha-variant source: alpha_vec = gamma, beta = T - gd_sum - N - 1,
    // gamma = T, delta = gd_sum - T  (then beta + delta + 1 = -N exactly).
    FamilySpec racah;
    racah.family = Family::MultipleRacah;
    racah.variant = Variant::Alpha;
    racah.m = n.m();
    racah.vectors["alpha"] = gamma;
    racah.scalars["beta"] = Tc - gd_sum - q(N + 1);
    racah.scalars["gamma"] = Tc;
    racah.scalars["delta"] = gd_sum - Tc;
    Poly src = build_limit_family(racah, n);
    FamilySpec dh;
    dh.family = Family::MultipleDualHahn;
    dh.m = n.m();
    dh.vectors["gamma"] = gamma;
    std::vector<ComplexRational> delta;
    for (const auto& g : gamma) delta.push_back(gd_sum - g);
    dh.vectors["delta"] = delta;
    dh.scalars["N"] = q(N);
    return {src, build_limit_family(dh, n)};
}

std::pair<Poly, Poly> racah_to_hahn(const Rational& T, const MultiIndex& n) {
    const long N = 8;
    std::vector<ComplexRational> alpha = {q(1, 3), q(3, 4), q(6, 5)};
    alpha.resize(static_cast<size_t>(n.m()));
    ComplexRational beta = q(1, 2);
    FamilySpec racah;
    racah.family = Family::MultipleRacah;
    racah.variant = Variant::Alpha;
    racah.m = n.m();
    racah.vectors["alpha"] = alpha;
    racah.scalars["beta"] = beta;
    racah.scalars["gamma"] = q(-N - 1);
    racah.scalars["delta"] = ComplexRational(T);
    Poly src = build_limit_family(racah, n);
    // lambda(x) = x(x + gamma + delta + 1) at gamma = -N-1, delta = T
    Poly x = Poly::variable(VarRole::X);
    Poly lam = x * (x + Poly(ComplexRational(T) + q(-N), VarRole::X));
    Poly src_x = substitute(src, lam);
    FamilySpec hahn;
    hahn.family = Family::Hahn;
    hahn.variant = Variant::Alpha;
    hahn.m = n.m();
    hahn.vectors["alpha"] = alpha;
    hahn.scalars["beta"] = beta;
    hahn.scalars["N"] = q(N);
    return {src_x, build_limit_family(hahn, n)};
}

std::pair<Poly, Poly> cdh_to_mp(const Rational& T, const MultiIndex& n) {
    ComplexRational lambda = q(3, 4);
    std::vector<ComplexRational> w = {q(1, 2), q(1, 3), q(2, 5)};
    w.resize(static_cast<size_t>(n.m()));
    ComplexRational Tc(T);
    ComplexRational i = imaginary_unit();
    ComplexRational a = lambda + i * Tc;
    ComplexRational c = lambda - i * Tc;
    std::vector<ComplexRational> b, csc;
    for (const auto& wj : w) {
        // cot = (1-w^2)/(2w), csc = (1+w^2)/(2w)
        ComplexRational w2 = wj * wj;
        b.push_back(Tc * (q(1) - w2) / (q(2) * wj));
        csc.push_back((q(1) + w2) / (q(2) * wj));
    }
    // CDH in the formal variable s; the real-form argument (x-T)^2 maps to
    // s = -(x-T)^2.
    FamilySpec cdh;
    cdh.family = Family::MultipleContinuousDualHahn;
    cdh.m = n.m();
    cdh.scalars["a"] = a;
    cdh.scalars["c"] = c;
    cdh.vectors["b"] = b;
    Poly s_poly = build_limit_family(cdh, n);
    Poly x = Poly::variable(VarRole::X);
    Poly xmT = x - Poly(Tc, VarRole::X);
    Poly src = substitute(s_poly, -(xmT * xmT));
    ComplexRational div = ComplexRational(multi_factorial(n));
    for (int j = 0; j < n.m(); ++j) div *= pochhammer(Tc * csc[size_t(j)], n[j]);
    src /= div;
    FamilySpec mp;
    mp.family = Family::MultipleMeixnerPollaczek;
    mp.m = n.m();
    mp.scalars["lambda"] = lambda;
    mp.vectors["w"] = w;
    return {src, build_limit_family(mp, n)};
}

std::pair<Poly, Poly> hahn_to_meixner1(const Rational& T, const MultiIndex& n) {
    ComplexRational beta = q(5, 2);
    std::vector<ComplexRational> c = {q(1, 3), q(1, 5), q(1, 7)};
    c.resize(static_cast<size_t>(n.m()));
    FamilySpec hahn;
    hahn.family = Family::Hahn;
    hahn.variant = Variant::Beta;
    hahn.m = n.m();
    hahn.scalars["alpha"] = beta - q(1);
    std::vector<ComplexRational> bv;
    for (const auto& cj : c) bv.push_back(ComplexRational(T) * (q(1) - cj) / cj);
    hahn.vectors["beta"] = bv;
    hahn.scalars["N"] = ComplexRational(T);
    Poly src = build_limit_family(hahn, n);
    FamilySpec mx;
    mx.family = Family::MeixnerI;
    mx.m = n.m();
    mx.scalars["beta"] = beta;
    mx.vectors["c"] = c;
    return {src, build_limit_family(mx, n)};
}

std::pair<Poly, Poly> hahn_to_meixner2(const Rational& T, const MultiIndex& n) {
    std::vector<ComplexRational> beta = {q(5, 2), q(7, 3), q(9, 5)};
    beta.resize(static_cast<size_t>(n.m()));
    ComplexRational c = q(1, 4);
    FamilySpec hahn;
    hahn.family = Family::Hahn;
    hahn.variant = Variant::Alpha;
    hahn.m = n.m();
    std::vector<ComplexRational> av;
    for (const auto& bj : beta) av.push_back(bj - q(1));
    hahn.vectors["alpha"] = av;
    hahn.scalars["beta"] = ComplexRational(T) * (q(1) - c) / c;
    hahn.scalars["N"] = ComplexRational(T);
    Poly src = build_limit_family(hahn, n);
    FamilySpec mx;
    mx.family = Family::MeixnerII;
    mx.m = n.m();
    mx.vectors["beta"] = beta;
    mx.scalars["c"] = c;
    return {src, build_limit_family(mx, n)};
}

std::pair<Poly, Poly> hahn_to_kravchuk(const Rational& T, const MultiIndex& n) {
    const long N = 8;
    std::vector<ComplexRational> p = {q(1, 3), q(2, 5), q(3, 7)};
    p.resize(static_cast<size_t>(n.m()));
    FamilySpec hahn;
    hahn.family = Family::Hahn;
    hahn.variant = Variant::Alpha;
    hahn.m = n.m();
    std::vector<ComplexRational> av;
    for (const auto& pj : p) av.push_back(pj / (q(1) - pj) * ComplexRational(T));
    hahn.vectors["alpha"] = av;
    hahn.scalars["beta"] = ComplexRational(T);
    hahn.scalars["N"] = q(N);
    Poly src = build_limit_family(hahn, n);
    FamilySpec kr;
    kr.family = Family::Kravchuk;
    kr.m = n.m();
    kr.vectors["p"] = p;
    kr.scalars["N"] = q(N);
    return {src, build_limit_family(kr, n)};
}

std::pair<Poly, Poly> meixner1_to_charlier(const Rational& T, const MultiIndex& n) {
    std::vector<ComplexRational> a = {q(1), q(2), q(7, 2)};
    a.resize(static_cast<size_t>(n.m()));
    FamilySpec mx;
    mx.family = Family::MeixnerI;
    mx.m = n.m();
    mx.scalars["beta"] = ComplexRational(T);
    std::vector<ComplexRational> c;
    for (const auto& aj : a) c.push_back(aj / (aj + ComplexRational(T)));
    mx.vectors["c"] = c;
    Poly src = build_limit_family(mx, n);
    FamilySpec ch;
    ch.family = Family::Charlier;
    ch.m = n.m();
    ch.vectors["a"] = a;
    return {src, build_limit_family(ch, n)};
}

std::pair<Poly, Poly> hahn_to_jp(const Rational& T, const MultiIndex& n) {
    ComplexRational alpha = q(1, 2);
    std::vector<ComplexRational> beta = {q(1, 3), q(3, 4), q(6, 5)};
    beta.resize(static_cast<size_t>(n.m()));
    FamilySpec hahn;
    hahn.family = Family::Hahn;
    hahn.variant = Variant::Beta;
    hahn.m = n.m();
    hahn.scalars["alpha"] = alpha;
    hahn.vectors["beta"] = beta;
    hahn.scalars["N"] = ComplexRational(T);
    Poly src = build_limit_family(hahn, n);
    // x -> N x, then times (alpha+1)_{|n|} / n!
    src = compose_affine(src, ComplexRational(T), q(0), VarRole::T);
    src *= pochhammer(alpha + q(1), n.total()) / ComplexRational(multi_factorial(n));
    FamilySpec jp;
    jp.family = Family::JacobiPineiro;
    jp.variant = Variant::Beta;
    jp.m = n.m();
    jp.scalars["alpha"] = alpha;
    jp.vectors["beta"] = beta;
    return {src, build_limit_family(jp, n)};
}

std::pair<Poly, Poly> jp_to_laguerre1(const Rational& T, const MultiIndex& n) {
    std::vector<ComplexRational> alpha = {q(1, 2), q(3, 4), q(9, 7)};
    alpha.resize(static_cast<size_t>(n.m()));
    Poly src = jacobi_pineiro_m_series(n, alpha, ComplexRational(T));
    src = compose_affine(src, ComplexRational(Rational(1) / T), q(0), VarRole::X);
    FamilySpec lag;
    lag.family = Family::LaguerreI;
    lag.m = n.m();
    lag.vectors["alpha"] = alpha;
    return {src, build_limit_family(lag, n)};
}

std::pair<Poly, Poly> jp_to_laguerre2(const Rational& T, const MultiIndex& n) {
    ComplexRational alpha = q(2, 3);
    std::vector<ComplexRational> c = {q(1), q(3, 2), q(5, 2)};
    c.resize(static_cast<size_t>(n.m()));
    FamilySpec jp;
    jp.family = Family::JacobiPineiro;
    jp.variant = Variant::Beta;
    jp.m = n.m();
    jp.scalars["alpha"] = alpha;
    std::vector<ComplexRational> bv;
    for (const auto& cj : c) bv.push_back(cj * ComplexRational(T));
    jp.vectors["beta"] = bv;
    Poly src = build_limit_family(jp, n);
    src = compose_affine(src, ComplexRational(Rational(1) / T), q(0), VarRole::X);
    FamilySpec lag;
    lag.family = Family::LaguerreII;
    lag.m = n.m();
    lag.scalars["alpha"] = alpha;
    lag.vectors["c"] = c;
    return {src, build_limit_family(lag, n)};
}

std::pair<Poly, Poly> jp_to_hermite(const Rational& T, const MultiIndex& n) {
    std::vector<ComplexRational> c = {q(1), q(2), q(7, 2)};
    c.resize(static_cast<size_t>(n.m()));
    // beta = T^2 keeps alpha_j = beta + c_j sqrt(beta) rational.
    ComplexRational T2(T * T);
    std::vector<ComplexRational> alpha;
    for (const auto& cj : c) alpha.push_back(T2 + cj * ComplexRational(T));
    Poly src = jacobi_pineiro_m_series(n, alpha, T2);
    // x -> (x + T) / (2T); compare monic against the oracle Hermite.
    ComplexRational half_over_T(Rational(1) / (2 * T));
    src = compose_affine(src, half_over_T, q(1, 2), VarRole::X);
    src = monic(src);
    FamilySpec herm;
    herm.family = Family::MultipleHermite;
    herm.m = n.m();
    herm.vectors["c"] = c;
    auto fs = make_moment_functionals(herm);
    Poly tgt = solve_type2(fs, n, VarRole::X);
    return {src, tgt};
}

// Scalar reduction: multiple family at m = 1 equals the scalar family.
std::pair<Poly, Poly> scalar_reduction(Family multiple, Family scalar, const MultiIndex& n) {
    MultiIndex n1({n.total()});
    FamilySpec ms, ss;
    ms.family = multiple;
    ms.m = 1;
    ss.family = scalar;
    ss.m = 1;
    switch (multiple) {
        case Family::MultipleWilson:
        case Family::MultipleContinuousHahn:
            ms.scalars["a"] = ss.scalars["a"] = q(1, 2);
            ms.vectors["b"] = {q(5, 4)};
            ss.scalars["b"] = q(5, 4);
            ms.scalars["c"] = ss.scalars["c"] = q(4, 3);
            ms.scalars["d"] = ss.scalars["d"] = q(7, 6);
            break;
        case Family::MultipleContinuousDualHahn:
            ms.scalars["a"] = ss.scalars["a"] = q(1, 2);
            ms.vectors["b"] = {q(5, 4)};
            ss.scalars["b"] = q(5, 4);
            ms.scalars["c"] = ss.scalars["c"] = q(4, 3);
            break;
        case Family::MultipleRacah:
            ms.variant = Variant::Alpha;
            ms.vectors["alpha"] = {q(5, 2)};
            ss.scalars["alpha"] = q(5, 2);
            ms.scalars["beta"] = ss.scalars["beta"] = q(3, 4);
            ms.scalars["gamma"] = ss.scalars["gamma"] = q(-9);
            ms.scalars["delta"] = ss.scalars["delta"] = q(1, 3);
            break;
        case Family::MultipleDualHahn:
            ms.vectors["gamma"] = {q(1, 3)};
            ss.scalars["gamma"] = q(1, 3);
            ms.vectors["delta"] = {q(3, 2)};
            ss.scalars["delta"] = q(3, 2);
            ms.scalars["N"] = ss.scalars["N"] = q(8);
            break;
        case Family::MultipleMeixnerPollaczek:
            ms.scalars["lambda"] = ss.scalars["lambda"] = q(3, 4);
            ms.vectors["w"] = {q(1, 2)};
            ss.scalars["w"] = q(1, 2);
            break;
        case Family::JacobiPineiro:
            ms.vectors["alpha"] = {q(1, 3)};
            ss.scalars["alpha"] = q(1, 3);
            ms.scalars["beta"] = ss.scalars["beta"] = q(1, 2);
            break;
        default:
            throw MopkitError("scalar_reduction: unsupported family");
    }
    return {build_limit_family(ms, n1), build_limit_family(ss, n1)};
}

std::vector<LimitEdge> build_edges() {
    std::vector<LimitEdge> edges;
    auto add = [&](LimitEdge e) { edges.push_back(std::move(e)); };

    add({"multiple-wilson->multiple-racah", Family::MultipleWilson, Family::MultipleRacah,
         LimitEdge::Kind::Specialization, 0, false, "a+d = -N via alpha_j=a+b_j-1, beta=c+d-1, gamma=a+d-1, delta=a-d",
         "(ae+b)_n (a+c)_{|n|} (a+d)_{|n|}", "t -> x+a  (s = lambda + a^2)", "4.2",
         [](const Rational& T, const MultiIndex& n) { return wilson_to_racah(T, n); }});
    add({"multiple-wilson->multiple-continuous-dual-hahn", Family::MultipleWilson,
         Family::MultipleContinuousDualHahn, LimitEdge::Kind::Limit, 1, false, "d = T -> inf",
         "(a+d)_{|n|}", "none", "4.3.1",
         [](const Rational& T, const MultiIndex& n) { return wilson_to_cdh(T, n); }});
    add({"multiple-wilson->multiple-continuous-hahn", Family::MultipleWilson,
         Family::MultipleContinuousHahn, LimitEdge::Kind::Limit, 1, false,
         "(a,b,c,d) -> (a-T, b+Te, c-T, d+T), T -> inf", "(a+c-2T)_{|n|} n!", "s -> (t+T)^2",
         "4.3.4",
         [](const Rational& T, const MultiIndex& n) { return wilson_to_ch(T, n); }});
    add({"multiple-racah->multiple-dual-hahn", Family::MultipleRacah, Family::MultipleDualHahn,
         LimitEdge::Kind::Limit, 1, false,
         "alpha-variant (gamma_vec, T-gamma-delta-N-1, T, gamma+delta-T), T -> inf", "none",
         "none", "4.3.2",
         [](const Rational& T, const MultiIndex& n) { return racah_to_dual_hahn(T, n); }});
    add({"multiple-racah->hahn", Family::MultipleRacah, Family::Hahn, LimitEdge::Kind::Limit, 1,
         false, "gamma+1 = -N, delta = T -> inf", "none", "lambda(x) -> x", "4.4",
         [](const Rational& T, const MultiIndex& n) { return racah_to_hahn(T, n); }});
    add({"multiple-continuous-dual-hahn->multiple-meixner-pollaczek",
         Family::MultipleContinuousDualHahn, Family::MultipleMeixnerPollaczek,
         LimitEdge::Kind::Limit, 1, false,
         "(a, b_j, c) = (lambda+iT, T cot phi_j, lambda-iT), T -> inf", "(T csc phi)_n n!",
         "s -> -(x-T)^2", "4.3.3",
         [](const Rational& T, const MultiIndex& n) { return cdh_to_mp(T, n); }});
    add({"hahn->meixner-i", Family::Hahn, Family::MeixnerI, LimitEdge::Kind::Limit, 1, false,
         "alpha = beta-1, beta_j = T(1-c_j)/c_j, N = T -> inf", "none", "none", "4.4",
         [](const Rational& T, const MultiIndex& n) { return hahn_to_meixner1(T, n); }});
    add({"hahn->meixner-ii", Family::Hahn, Family::MeixnerII, LimitEdge::Kind::Limit, 1, false,
         "alpha_j = beta_j-1, beta = T(1-c)/c, N = T -> inf", "none", "none", "4.4",
         [](const Rational& T, const MultiIndex& n) { return hahn_to_meixner2(T, n); }});
    add({"hahn->kravchuk", Family::Hahn, Family::Kravchuk, LimitEdge::Kind::Limit, 1, false,
         "beta = T, alpha_j = p_j T/(1-p_j), T -> inf", "none", "none", "4.4",
         [](const Rational& T, const MultiIndex& n) { return hahn_to_kravchuk(T, n); }});
    add({"meixner-i->charlier", Family::MeixnerI, Family::Charlier, LimitEdge::Kind::Limit, 1,
         false, "c_j = a_j/(a_j+T), beta = T -> inf", "none", "none", "4.4",
         [](const Rational& T, const MultiIndex& n) { return meixner1_to_charlier(T, n); }});
    add({"hahn->jacobi-pineiro", Family::Hahn, Family::JacobiPineiro, LimitEdge::Kind::Limit, 1,
         false, "N = T -> inf", "n! / (alpha+1)_{|n|}", "x -> N x", "4.5",
         [](const Rational& T, const MultiIndex& n) { return hahn_to_jp(T, n); }});
    add({"jacobi-pineiro->multiple-laguerre-i", Family::JacobiPineiro, Family::LaguerreI,
         LimitEdge::Kind::Limit, 1, false, "beta = T -> inf", "none", "x -> x/T", "4.5",
         [](const Rational& T, const MultiIndex& n) { return jp_to_laguerre1(T, n); }});
    add({"jacobi-pineiro->multiple-laguerre-ii", Family::JacobiPineiro, Family::LaguerreII,
         LimitEdge::Kind::Limit, 1, false, "beta_j = c_j T, T -> inf", "none", "x -> x/T",
         "4.5",
         [](const Rational& T, const MultiIndex& n) { return jp_to_laguerre2(T, n); }});
    add({"jacobi-pineiro->multiple-hermite", Family::JacobiPineiro, Family::MultipleHermite,
         LimitEdge::Kind::Limit, 1, true,
         "alpha_j = T^2 + c_j T, beta = T^2, T -> inf (monic both sides)", "leading coefficient",
         "x -> (x+T)/(2T)", "4.5",
         [](const Rational& T, const MultiIndex& n) { return jp_to_hermite(T, n); }});

    auto add_reduction = [&](Family multiple, Family scalar) {
        add({std::string(family_tag(multiple)) + "->" + family_tag(scalar), multiple, scalar,
             LimitEdge::Kind::ScalarReduction, 0, false, "m = 1", "none", "none", "2,4",
             [multiple, scalar](const Rational&, const MultiIndex& n) {
                 return scalar_reduction(multiple, scalar, n);
             }});
    };
    add_reduction(Family::MultipleWilson, Family::Wilson);
    add_reduction(Family::MultipleRacah, Family::Racah);
    add_reduction(Family::MultipleContinuousDualHahn, Family::ContinuousDualHahn);
    add_reduction(Family::MultipleDualHahn, Family::DualHahn);
    add_reduction(Family::MultipleMeixnerPollaczek, Family::MeixnerPollaczek);
    add_reduction(Family::MultipleContinuousHahn, Family::ContinuousHahn);
    add_reduction(Family::JacobiPineiro, Family::Jacobi);
    return edges;
}

}  // namespace

const std::vector<LimitEdge>& scheme_edges() {
    static const std::vector<LimitEdge> edges = build_edges();
    return edges;
}

std::vector<Family> scheme_nodes() {
    return {Family::Jacobi,
            Family::JacobiPineiro,
            Family::Wilson,
            Family::MultipleWilson,
            Family::Racah,
            Family::MultipleRacah,
            Family::ContinuousDualHahn,
            Family::MultipleContinuousDualHahn,
            Family::DualHahn,
            Family::MultipleDualHahn,
            Family::MeixnerPollaczek,
            Family::MultipleMeixnerPollaczek,
            Family::ContinuousHahn,
            Family::MultipleContinuousHahn,
            Family::Hahn,
            Family::MeixnerI,
            Family::MeixnerII,
            Family::Kravchuk,
            Family::Charlier,
            Family::LaguerreI,
            Family::LaguerreII,
            Family::MultipleHermite};
}

std::string scheme_to_json() {
    nlohmann::ordered_json doc;
    doc["nodes"] = nlohmann::ordered_json::array();
    for (Family f : scheme_nodes()) doc["nodes"].push_back(family_tag(f));
    doc["edges"] = nlohmann::ordered_json::array();
    for (const auto& e : scheme_edges()) {
        nlohmann::ordered_json je;
        je["name"] = e.name;
        je["source"] = family_tag(e.source);
        je["target"] = family_tag(e.target);
        je["kind"] = e.kind == LimitEdge::Kind::Limit ? "limit"
                     : e.kind == LimitEdge::Kind::Specialization ? "specialization"
                                                                  : "scalar-reduction";
        je["expected_order"] = e.expected_order;
        je["oracle_target"] = e.oracle_target;
        je["schedule"] = e.schedule;
        je["divisor"] = e.divisor;
        je["substitution"] = e.substitution;
        je["section"] = e.section;
        doc["edges"].push_back(je);
    }
    return doc.dump(2);
}

}  // namespace mopkit
