#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mopkit/hyperseries.hpp"

using namespace mopkit;

namespace {
std::mt19937_64 rng(77001);

Rational rq(int lo, int hi, int den_hi = 9) {
    std::uniform_int_distribution<int> num(lo, hi);
    std::uniform_int_distribution<int> den(1, den_hi);
    Rational r = make_rational(num(rng), den(rng));
    return r;
}

ComplexRational positive_param() {
    Rational r = rq(1, 12);
    if (sgn(r) <= 0) r = make_rational(1, 3);
    return ComplexRational(r);
}

Poly constant(const Rational& r, VarRole var = VarRole::X) {
    return Poly(ComplexRational(r), var);
}
}  // namespace

TEST_CASE("terminating pFq small cases") {
    Poly x = Poly::variable(VarRole::X);
    // 2F1(-1, 2; 1; x) = 1 - 2x
    Poly p = eval_pfq_terminating({ComplexRational(-1), ComplexRational(2)}, {ComplexRational(1)},
                                  x);
    CHECK(p == Poly::from_coeffs({ComplexRational(1), ComplexRational(-2)}, VarRole::X));
    // upper parameter 0 -> constant 1
    Poly q = eval_pfq_terminating({ComplexRational(0), ComplexRational(Rational(5))},
                                  {ComplexRational(Rational(7))}, x);
    CHECK(q == Poly(ComplexRational(1), VarRole::X));
    // 2F1(-2, 1; 1; 1) = 1 - 2 + 1 = 0
    Poly z = eval_pfq_terminating({ComplexRational(-2), ComplexRational(1)}, {ComplexRational(1)},
                                  Poly(ComplexRational(1), VarRole::X));
    CHECK(z.is_zero());
}

TEST_CASE("vanishing lower pochhammer is an error") {
    Poly x = Poly::variable(VarRole::X);
    CHECK_THROWS_AS(eval_pfq_terminating({ComplexRational(-4), ComplexRational(1)},
                                         {ComplexRational(-2)}, x),
                    VanishingLowerPochhammer);
}

TEST_CASE("M series trivial values") {
    MSeriesSpec spec;
    spec.f = {UpperParam(ComplexRational(Rational(3)))};
    spec.phi = {ComplexRational(Rational(5, 2))};
    spec.g = {{ComplexRational(Rational(1, 3))}};
    spec.psi = {{ComplexRational(Rational(4, 3))}};
    spec.n = MultiIndex({0, 0});
    spec.x = {Poly::variable(VarRole::X), Poly::variable(VarRole::X)};
    CHECK(eval_M(spec) == Poly(ComplexRational(1), VarRole::X));
    spec.n = MultiIndex({2, 1});
    spec.x = {Poly(VarRole::X), Poly(VarRole::X)};  // all arguments zero
    CHECK(eval_M(spec) == Poly(ComplexRational(1), VarRole::X));
}

TEST_CASE("M series at m=1 equals pFq") {
    for (int trial = 0; trial < 30; ++trial) {
        std::uniform_int_distribution<int> nd(0, 5);
        int n = nd(rng);
        ComplexRational f1 = positive_param();
        ComplexRational phi1 = positive_param();
        Poly x = Poly::variable(VarRole::X);
        MSeriesSpec spec;
        spec.f = {f1};
        spec.phi = {phi1};
        spec.g = {};
        spec.psi = {};
        spec.n = MultiIndex({n});
        spec.x = {x};
        Poly lhs = eval_M(spec);
        Poly rhs = eval_pfq_terminating({ComplexRational(Rational(-n)), f1}, {phi1}, x);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("link between M (m=2) and Kampe de Feriet") {
    // Eq.-style identity: M^{p;r}_{q,(n1,n2)}(f; g_1..g_r)(x1,x2)
    //   = F^{q:0;r}_{p:1;r+1}(f:(-n1);(-n2,g_1..g_r) / phi:();(psi_1..psi_r))(x1,x2)
    int passes = 0;
    for (int trial = 0; trial < 60; ++trial) {
        std::uniform_int_distribution<int> nd(0, 3), rd(0, 2), pd(0, 2);
        int n1 = nd(rng), n2 = nd(rng), r = rd(rng), p = pd(rng), q = pd(rng);
        MSeriesSpec ms;
        for (int i = 0; i < p; ++i) ms.f.push_back(UpperParam(positive_param()));
        for (int i = 0; i < q; ++i) ms.phi.push_back(positive_param());
        KampeSpec ks;
        ks.f = ms.f;
        ks.phi = ms.phi;
        ks.g = {ComplexRational(Rational(-n1))};
        ks.h = {ComplexRational(Rational(-n2))};
        for (int i = 0; i < r; ++i) {
            ComplexRational gi = positive_param(), pi = positive_param();
            ms.g.push_back({gi});
            ms.psi.push_back({pi});
            ks.h.push_back(gi);
            ks.xi.push_back(pi);
        }
        ms.n = MultiIndex({n1, n2});
        Poly x1 = constant(rq(-3, 3));
        Poly x2 = constant(rq(-3, 3));
        ms.x = {x1, x2};
        ks.x = x1;
        ks.y = x2;
        Poly lhs = eval_M(ms);
        Poly rhs = eval_kampe(ks);
        CHECK(lhs == rhs);
        ++passes;
    }
    CHECK(passes >= 50);
}

TEST_CASE("Kampe with p=q=0 factors into a product of two pFq values") {
    for (int trial = 0; trial < 20; ++trial) {
        std::uniform_int_distribution<int> nd(0, 4);
        int n1 = nd(rng), n2 = nd(rng);
        ComplexRational g2 = positive_param(), psi1 = positive_param();
        ComplexRational h2 = positive_param(), xi1 = positive_param();
        Poly x = constant(rq(-3, 3), VarRole::X);
        Poly y = constant(rq(-3, 3), VarRole::X);
        KampeSpec ks;
        ks.g = {ComplexRational(Rational(-n1)), g2};
        ks.psi = {psi1};
        ks.h = {ComplexRational(Rational(-n2)), h2};
        ks.xi = {xi1};
        ks.x = x;
        ks.y = y;
        Poly lhs = eval_kampe(ks);
        Poly f1 = eval_pfq_terminating({ComplexRational(Rational(-n1)), g2}, {psi1}, x);
        Poly f2 = eval_pfq_terminating({ComplexRational(Rational(-n2)), h2}, {xi1}, y);
        CHECK(lhs == f1 * f2);
    }
}

TEST_CASE("Kampe x=y=0 gives 1") {
    KampeSpec ks;
    ks.g = {ComplexRational(-2)};
    ks.h = {ComplexRational(-3)};
    ks.x = Poly(VarRole::X);
    ks.y = Poly(VarRole::X);
    CHECK(eval_kampe(ks) == Poly(ComplexRational(1), VarRole::X));
}

TEST_CASE("truncated product with beta = 0 reproduces the series") {
    auto series = [](int k) { return ComplexRational(Rational(k + 1)); };
    Poly p = truncated_product_coeffs(ComplexRational(0), series, 4, VarRole::T);
    CHECK(p == Poly::from_coeffs({ComplexRational(1), ComplexRational(2), ComplexRational(3),
                                  ComplexRational(4), ComplexRational(5)},
                                 VarRole::T));
}

TEST_CASE("truncated product: (1-t) from beta = -1 and unit series") {
    auto series = [](int k) { return ComplexRational(Rational(k == 0 ? 1 : 0)); };
    Poly p = truncated_product_coeffs(ComplexRational(-1), series, 4, VarRole::T);
    CHECK(p == Poly::from_coeffs({ComplexRational(1), ComplexRational(-1)}, VarRole::T));
}
