#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "family_fixtures.hpp"
#include "mopkit/analysis.hpp"

using namespace mopkit;
using namespace mopkit::fixtures;

namespace {
ComplexRational q(long num, long den = 1) { return ComplexRational(make_rational(num, den)); }

BigFloat bf(const char* text, long prec = 256) {
    BigFloat r(prec);
    mpfr_set_str(r.raw(), text, 10, MPFR_RNDN);
    return r;
}

bool close(const BigFloat& got, const BigFloat& want, int bits = 200) {
    BigFloat scale = abs(want);
    if (scale.is_zero()) scale = BigFloat::of(1, got.prec());
    return abs(got - want) < scale * BigFloat::two_pow(-bits, got.prec());
}
}  // namespace

TEST_CASE("complex gamma basics") {
    long prec = 256;
    ComplexBigFloat one(BigFloat::of(1, prec), BigFloat(prec));
    CHECK(close(gamma_complex(one).re(), BigFloat::of(1, prec)));
    // Gamma(1/2)^2 = pi
    ComplexBigFloat half(BigFloat::of(make_rational(1, 2), prec), BigFloat(prec));
    BigFloat g = gamma_complex(half).re();
    CHECK(close(g * g, BigFloat::pi(prec)));
    // frozen mpmath value at 1 + 2i
    ComplexBigFloat z(BigFloat::of(1, prec), BigFloat::of(2, prec));
    ComplexBigFloat gz = gamma_complex(z);
    CHECK(close(gz.re(), bf("0.151904002670036137448160950545001503668186264"), 140));
    CHECK(close(gz.im(), bf("0.0198048801618549819719101316709638945480161262"), 140));
    CHECK_THROWS_AS(gamma_complex(ComplexBigFloat(BigFloat::of(-3, prec), BigFloat(prec))),
                    PoleError);
}

TEST_CASE("complex gamma functional equation and conjugation") {
    long prec = 256;
    ComplexBigFloat z(BigFloat::of(make_rational(-7, 3), prec), BigFloat::of(make_rational(3, 5), prec));
    ComplexBigFloat lhs = gamma_complex(z + ComplexBigFloat(BigFloat::of(1, prec), BigFloat(prec)));
    ComplexBigFloat rhs = z * gamma_complex(z);
    CHECK(close(lhs.re(), rhs.re()));
    CHECK(close(lhs.im(), rhs.im()));
    ComplexBigFloat gc = gamma_complex(z.conj());
    ComplexBigFloat g = gamma_complex(z);
    CHECK(close(gc.re(), g.re()));
    CHECK(close(gc.im(), -g.im()));
}

TEST_CASE("hyp2f1 values against frozen references") {
    long prec = 256;
    auto C = [&](const Rational& r) {
        return ComplexBigFloat(BigFloat::of(r, prec), BigFloat(prec));
    };
    // trivial x = 0
    CHECK(close(hyp2f1_numeric(C(make_rational(1, 3)), C(make_rational(2, 5)),
                               C(make_rational(7, 4)), BigFloat(prec))
                    .re(),
                BigFloat::of(1, prec)));
    // generic connection region
    CHECK(close(hyp2f1_numeric(C(make_rational(1, 3)), C(make_rational(1, 4)),
                               C(make_rational(2, 3)), BigFloat::of(make_rational(9, 10), prec))
                    .re(),
                bf("1.28084856350610976936395412342625717076466547"), 135));
    // logarithmic cases mu = 1, 0, and -2 via Euler transform
    Rational A = make_rational(3, 10), B = make_rational(7, 10);
    CHECK(close(hyp2f1_numeric(C(A), C(B), C(Rational(A + B + 1)),
                               BigFloat::of(make_rational(93, 100), prec))
                    .re(),
                bf("1.17791022675518808445840713475156345283226286"), 135));
    CHECK(close(hyp2f1_numeric(C(A), C(B), C(Rational(A + B)),
                               BigFloat::of(make_rational(93, 100), prec))
                    .re(),
                bf("1.6172579895651944775162301071118989573030202"), 135));
    Rational A2 = make_rational(13, 10), B2 = make_rational(17, 10);
    CHECK(close(hyp2f1_numeric(C(A2), C(B2), C(Rational(A2 + B2 - 2)),
                               BigFloat::of(make_rational(93, 100), prec))
                    .re(),
                bf("246.666238806507863667847906697303456764329771"), 130));
    CHECK(close(hyp2f1_numeric(C(A2), C(B2), C(Rational(A2 + B2 - 2)),
                               BigFloat::of(make_rational(35, 100), prec))
                    .re(),
                bf("2.54434503645292896238375353889912035266046926"), 135));
}

TEST_CASE("tanh-sinh handles endpoint singularities") {
    QuadratureConfig config;
    // int_0^1 u^{-1/2} (1-u)^{-1/2} du = pi
    BigFloat got = tanh_sinh_01(
        [&](const BigFloat& u, const BigFloat& omu) {
            return BigFloat::of(1, 256) / (sqrt(u) * sqrt(omu));
        },
        config);
    CHECK(close(got, BigFloat::pi(256), 96));
    // int_0^1 u^3 du = 1/4
    BigFloat cubic = tanh_sinh_01(
        [&](const BigFloat& u, const BigFloat&) { return u * u * u; }, config);
    CHECK(close(cubic, BigFloat::of(make_rational(1, 4), 256), 96));
}

TEST_CASE("exp-sinh integrates exponential decay") {
    QuadratureConfig config;
    BigFloat got = exp_sinh_half_line([](const BigFloat& x) { return exp(-x); }, config);
    CHECK(close(got, BigFloat::of(1, 256), 96));
}

TEST_CASE("quadrature tolerance must respect precision") {
    QuadratureConfig config;
    config.prec_bits = 64;
    config.tolerance = make_rational(1, 1) / Rational(Integer(1) << 60);
    CHECK_THROWS_AS(tanh_sinh_01([](const BigFloat& u, const BigFloat&) { return u; }, config),
                    NonConvergence);
}

TEST_CASE("Wilson weight mass matches the closed form M_0") {
    // M_0 = 2 pi Gamma(a+b)...Gamma(c+d) / Gamma(a+b+c+d) at (1,2,3,4)
    QuadratureConfig config;
    config.tolerance = make_rational(1, 1) / Rational(Integer(1) << 60);
    BigFloat mass = exp_sinh_half_line(
        [&](const BigFloat& x) {
            long prec = 256;
            ComplexBigFloat ix(BigFloat(prec), x);
            BigFloat ln_mod = lngamma_abs(ComplexBigFloat::of(q(1), prec) + ix) +
                              lngamma_abs(ComplexBigFloat::of(q(2), prec) + ix) +
                              lngamma_abs(ComplexBigFloat::of(q(3), prec) + ix) +
                              lngamma_abs(ComplexBigFloat::of(q(4), prec) + ix) -
                              lngamma_abs(ix + ix);
            return exp(ln_mod + ln_mod);
        },
        config);
    CHECK(close(mass, bf("10340.327819815548030597043364394249493128969"), 55));
}

TEST_CASE("Wilson quadrature moments match basis inversion") {
    QuadratureConfig config;
    config.tolerance = make_rational(1, 1) / Rational(Integer(1) << 60);
    FamilySpec spec;
    spec.family = Family::Wilson;
    spec.m = 1;
    spec.scalars["a"] = q(1);
    spec.scalars["b"] = q(2);
    spec.scalars["c"] = q(3);
    spec.scalars["d"] = q(4);
    for (int k = 1; k <= 2; ++k) {
        BigFloat got = wilson_weight_moment_quadrature(q(1), q(2), q(3), q(4), k, config);
        BigFloat want = BigFloat::of(contour_moment_via_basis(spec, 0, k).re(), 256);
        CHECK(abs(got - want) < abs(want) * BigFloat::of_double(1e-10, 256));
    }
}

TEST_CASE("transform identities at the reference point (a,c,d,t) = (2,1,3/2,1/2)") {
    WilsonTransformParams params;
    params.a = q(2);
    params.c = q(1);
    params.d = q(3, 2);
    params.b = {q(3, 4), q(4, 3)};
    params.t = make_rational(1, 2);
    QuadratureConfig config;
    auto report = verify_transform(params, MultiIndex({1, 1}), config, 3);
    for (const auto& item : report.items) {
        INFO(item.name, " rel error ", item.rel_error);
        CHECK(item.pass);
    }
    CHECK(report.pass);
}

TEST_CASE("transform hypothesis violations are rejected") {
    WilsonTransformParams params;
    params.a = q(1, 4);
    params.c = q(1);
    params.d = q(3, 2);
    params.b = {q(3, 4)};
    params.t = make_rational(1, 2);  // |t| >= a
    QuadratureConfig config;
    CHECK_THROWS_AS(verify_transform(params, MultiIndex({1}), config, 0), HypothesisViolation);
}

TEST_CASE("recurrence: classical Jacobi three-term relation") {
    FamilySpec spec;
    spec.family = Family::Jacobi;
    spec.m = 1;
    spec.scalars["alpha"] = q(0);
    spec.scalars["beta"] = q(0);
    auto path = step_line_path(1, 5);  // n = 0..4
    auto report = check_recurrence(spec, path);
    CHECK(report.pass);
    // cross-check b_n, c_n against direct moment computation:
    //   x p_n = p_{n+1} + b_n p_n + c_n p_{n-1},
    //   b_n = <x p_n, p_n>/<p_n,p_n>, c_n = <x p_n, p_{n-1}>/<p_{n-1},p_{n-1}>
    auto fs = make_moment_functionals(spec);
    auto inner = [&](const Poly& f, const Poly& g) {
        ComplexRational acc(0);
        Poly prod = f * g;
        for (int i = 0; i <= prod.degree(); ++i) acc += prod.coeff(i) * fs[0].nu(i);
        return acc;
    };
    Poly x = Poly::variable(VarRole::T);
    for (size_t i = 1; i + 1 < path.size(); ++i) {
        Poly pn = solve_type2(fs, path[i], VarRole::T);
        Poly pm = solve_type2(fs, path[i - 1], VarRole::T);
        ComplexRational bn = inner(x * pn, pn) / inner(pn, pn);
        ComplexRational cn = inner(x * pn, pm) / inner(pm, pm);
        const auto& step = report.steps[i];
        REQUIRE(step.coefficients.size() >= 2);
        CHECK(step.coefficients[0] == bn);
        CHECK(step.coefficients[1] == cn);
    }
}

TEST_CASE("recurrence: multiple Charlier 4-term relation") {
    FamilySpec spec;
    spec.family = Family::Charlier;
    spec.m = 2;
    spec.vectors["a"] = {q(1), q(2)};
    // path (0,0)->(1,0)->(1,1)->(2,1)->(2,2)
    std::vector<MultiIndex> path = {MultiIndex({0, 0}), MultiIndex({1, 0}), MultiIndex({1, 1}),
                                    MultiIndex({2, 1}), MultiIndex({2, 2})};
    auto report = check_recurrence(spec, path);
    CHECK(report.pass);
    for (const auto& step : report.steps) CHECK(step.residual_zero);
}

TEST_CASE("recurrence across AT families at m = 2") {
    std::mt19937_64 rng(808);
    for (Family family : {Family::JacobiPineiro, Family::MeixnerI, Family::Kravchuk,
                          Family::LaguerreI, Family::MultipleHermite}) {
        FamilySpec spec = random_spec(family, 2, rng);
        auto report = check_recurrence(spec, step_line_path(2, 6));
        INFO(family_tag(family));
        CHECK(report.pass);
    }
}

TEST_CASE("scheme edge metadata") {
    const auto& edges = scheme_edges();
    CHECK(edges.size() >= 20);
    CHECK(scheme_nodes().size() >= 16);
    bool found_cdh = false, found_hermite = false;
    for (const auto& e : edges) {
        if (e.source == Family::MultipleWilson && e.target == Family::MultipleContinuousDualHahn)
            found_cdh = true;
        if (e.source == Family::JacobiPineiro && e.target == Family::MultipleHermite) {
            found_hermite = true;
            CHECK(e.oracle_target);
        }
    }
    CHECK(found_cdh);
    CHECK(found_hermite);
    CHECK(scheme_to_json().find("multiple-wilson") != std::string::npos);
}

TEST_CASE("check_limit on representative edges (two decades)") {
    std::vector<Rational> Ts = {Rational(100), Rational(10000)};
    MultiIndex n({1, 1});
    for (const auto& e : scheme_edges()) {
        if (e.name == "multiple-wilson->multiple-continuous-dual-hahn" ||
            e.name == "hahn->meixner-i" || e.name == "jacobi-pineiro->multiple-hermite") {
            auto report = check_limit(e, n, Ts);
            INFO(e.name, " detail: ", report.detail);
            CHECK(report.pass);
        }
        if (e.kind != LimitEdge::Kind::Limit) {
            auto report = check_limit(e, MultiIndex({2, 1}), {Rational(1)});
            INFO(e.name);
            CHECK(report.pass);
            CHECK(report.stages[0].exact_zero);
        }
    }
}
