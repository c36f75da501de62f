#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "family_fixtures.hpp"
#include "mopkit/families.hpp"

using namespace mopkit;
using namespace mopkit::fixtures;

namespace {
std::mt19937_64 rng(420042);

ComplexRational q(long num, long den = 1) { return ComplexRational(make_rational(num, den)); }

Poly poly_of(std::vector<ComplexRational> coeffs, VarRole var) {
    return Poly::from_coeffs(std::move(coeffs), var);
}
}  // namespace

TEST_CASE("shifted Jacobi explicit low degrees") {
    CHECK(jacobi(0, q(0), q(0)) == Poly(q(1), VarRole::T));
    CHECK(jacobi(1, q(0), q(0)) == poly_of({q(1), q(-2)}, VarRole::T));
    CHECK(jacobi(2, q(0), q(0)) == poly_of({q(1), q(-6), q(6)}, VarRole::T));
}

TEST_CASE("Jacobi euler route equals hypergeometric route") {
    for (int trial = 0; trial < 20; ++trial) {
        ComplexRational alpha = positive_scalar(rng);
        ComplexRational beta = positive_scalar(rng);
        std::uniform_int_distribution<int> nd(0, 5);
        int n = nd(rng);
        CHECK(jacobi(n, alpha, beta) == jacobi_euler(n, alpha, beta));
    }
}

TEST_CASE("Jacobi-Pineiro representations agree (random, m up to 3)") {
    for (int trial = 0; trial < 30; ++trial) {
        std::uniform_int_distribution<int> md(1, 3);
        int m = md(rng);
        MultiIndex n = random_index(rng, m, 6);
        auto alpha = spread_params(rng, m);
        ComplexRational beta = positive_scalar(rng);
        Poly a = jacobi_pineiro_rodrigues(n, alpha, beta);
        Poly b = jacobi_pineiro_m_series(n, alpha, beta);
        Poly c = jacobi_pineiro_euler(n, alpha, beta);
        CHECK(a == b);
        CHECK(a == c);
        CHECK(a.degree() == n.total());
    }
}

TEST_CASE("Jacobi-Pineiro m=1 reduces to Jacobi") {
    for (int n = 0; n <= 4; ++n) {
        ComplexRational alpha = positive_scalar(rng);
        ComplexRational beta = positive_scalar(rng);
        CHECK(jacobi_pineiro_rodrigues(MultiIndex({n}), {alpha}, beta) ==
              jacobi(n, alpha, beta));
    }
}

TEST_CASE("Jacobi-Pineiro zero index") {
    CHECK(jacobi_pineiro_rodrigues(MultiIndex({0, 0}), {q(0), q(1, 2)}, q(0)) ==
          Poly(q(1), VarRole::T));
}

TEST_CASE("Jacobi-Pineiro frozen m=2 example") {
    // alpha = (0, 1/2), beta = 0, n = (1,1): 3/2 - 10 t + 21/2 t^2
    Poly p = jacobi_pineiro_m_series(MultiIndex({1, 1}), {q(0), q(1, 2)}, q(0));
    CHECK(p == poly_of({q(3, 2), q(-10), q(21, 2)}, VarRole::T));
}

TEST_CASE("Wilson n=1 frozen example and zero case") {
    CHECK(wilson(0, q(1), q(2), q(3), q(4)) == Poly(q(1), VarRole::S));
    CHECK(wilson(1, q(1), q(2), q(3), q(4)) == poly_of({q(50), q(10)}, VarRole::S));
}

TEST_CASE("Wilson 24-permutation symmetry") {
    ComplexRational params[4] = {q(1), q(2), q(3), q(4)};
    Poly base = wilson(2, params[0], params[1], params[2], params[3]);
    int order[4] = {0, 1, 2, 3};
    int count = 0;
    do {
        Poly p = wilson(2, params[order[0]], params[order[1]], params[order[2]], params[order[3]]);
        CHECK(p == base);
        ++count;
    } while (std::next_permutation(order, order + 4));
    CHECK(count == 24);
    // non-integer parameters as well, n up to 3
    ComplexRational w[4] = {q(1, 2), q(5, 4), q(4, 3), q(7, 6)};
    for (int n = 0; n <= 3; ++n) {
        Poly ref = wilson(n, w[0], w[1], w[2], w[3]);
        int ord[4] = {0, 1, 2, 3};
        do {
            CHECK(wilson(n, w[ord[0]], w[ord[1]], w[ord[2]], w[ord[3]]) == ref);
        } while (std::next_permutation(ord, ord + 4));
    }
}

TEST_CASE("multiple Wilson representations and frozen example") {
    MultiIndex n({1, 1});
    ComplexRational a = q(1), c = q(3, 2), d = q(2);
    std::vector<ComplexRational> b = {q(1, 2), q(5, 4)};
    Poly pm = multiple_wilson_m_series(n, a, b, c, d);
    Poly pk = multiple_wilson_kampe(n, a, b, c, d);
    CHECK(pm == pk);
    CHECK(pm == poly_of({q(981, 8), q(765, 4), q(81, 2)}, VarRole::S));
}

TEST_CASE("multiple Wilson m=1 reduces to scalar Wilson") {
    for (int n = 0; n <= 3; ++n) {
        ComplexRational a = positive_scalar(rng), c = positive_scalar(rng),
                        d = positive_scalar(rng);
        ComplexRational b = ComplexRational(rational_in(rng, 1, 7, 5));
        CHECK(multiple_wilson_m_series(MultiIndex({n}), a, {b}, c, d) == wilson(n, a, b, c, d));
        CHECK(multiple_wilson_kampe(MultiIndex({n}), a, {b}, c, d) == wilson(n, a, b, c, d));
    }
}

TEST_CASE("multiple Wilson representation agreement, random m in {1,2,3}") {
    for (int trial = 0; trial < 12; ++trial) {
        std::uniform_int_distribution<int> md(1, 3);
        int m = md(rng);
        MultiIndex n = random_index(rng, m, 5);
        FamilySpec spec = random_spec(Family::MultipleWilson, m, rng);
        Poly pm = multiple_wilson_m_series(n, spec.scalar("a"), spec.vec("b"), spec.scalar("c"),
                                           spec.scalar("d"));
        Poly pk = multiple_wilson_kampe(n, spec.scalar("a"), spec.vec("b"), spec.scalar("c"),
                                        spec.scalar("d"));
        CHECK(pm == pk);
        CHECK(pm.degree() == n.total());
    }
}

TEST_CASE("every family representation set agrees and has exact degree") {
    for (Family family : constructible_families()) {
        int max_m = scalar_only(family) ? 1 : 3;
        for (int m = 1; m <= max_m; ++m) {
            FamilySpec spec = random_spec(family, m, rng);
            MultiIndex n = random_index(rng, m, m == 3 ? 6 : 4);
            check_admissible(spec, n);
            auto reps = representations(spec);
            REQUIRE(!reps.empty());
            Poly first = reps[0].build(spec, n);
            CHECK(first.degree() == n.total());
            for (size_t i = 1; i < reps.size(); ++i) {
                INFO(family_tag(family), " rep ", reps[i].name, " m=", m, " n=", n.str());
                CHECK(reps[i].build(spec, n) == first);
            }
        }
    }
}

TEST_CASE("limit families at the zero index give 1") {
    for (Family family : constructible_families()) {
        int m = scalar_only(family) ? 1 : 2;
        FamilySpec spec = random_spec(family, m, rng);
        MultiIndex zero(std::vector<int>(static_cast<size_t>(m), 0));
        Poly p = build_limit_family(spec, zero);
        CHECK(p.degree() == 0);
        CHECK(p.coeff(0) == ComplexRational(1));
    }
}

TEST_CASE("multiple Racah beta-variant relation tussenRacah1") {
    // R(lambda; alpha, beta_vec, gamma, delta) = R(lambda; beta_vec+delta e, alpha-delta, ...)
    long N = 6;
    FamilySpec beta_spec;
    beta_spec.family = Family::MultipleRacah;
    beta_spec.variant = Variant::Beta;
    beta_spec.m = 2;
    beta_spec.scalars["alpha"] = q(7, 3);
    beta_spec.vectors["beta"] = {q(3, 2), q(9, 4)};
    beta_spec.scalars["gamma"] = q(-N - 1);
    beta_spec.scalars["delta"] = q(2, 5);
    MultiIndex n({1, 1});
    Poly lhs = construct(beta_spec, n);

    FamilySpec alpha_spec;
    alpha_spec.family = Family::MultipleRacah;
    alpha_spec.variant = Variant::Alpha;
    alpha_spec.m = 2;
    alpha_spec.vectors["alpha"] = {q(3, 2) + q(2, 5), q(9, 4) + q(2, 5)};
    alpha_spec.scalars["beta"] = q(7, 3) - q(2, 5);
    alpha_spec.scalars["gamma"] = q(-N - 1);
    alpha_spec.scalars["delta"] = q(2, 5);
    Poly rhs = construct(alpha_spec, n);
    CHECK(lhs == rhs);
}

TEST_CASE("multiple Racah gamma-delta variant relation tussenRacah") {
    long N = 5;
    // gd-variant data with alpha+1 = -N
    ComplexRational a2 = q(9, 8);
    ComplexRational bsc = q(-N) - a2;
    ComplexRational c0 = q(7, 6);
    std::vector<ComplexRational> dvec = {q(1, 2), q(5, 3)};
    FamilySpec gd;
    gd.family = Family::MultipleRacah;
    gd.variant = Variant::GammaDelta;
    gd.m = 2;
    gd.scalars["alpha"] = a2 + bsc - q(1);
    gd.vectors["beta"] = {c0 + dvec[0] - q(1), c0 + dvec[1] - q(1)};
    gd.vectors["gamma"] = {a2 + dvec[0] - q(1), a2 + dvec[1] - q(1)};
    gd.vectors["delta"] = {a2 - dvec[0], a2 - dvec[1]};
    MultiIndex n({1, 1});
    Poly lhs = construct(gd, n);

    FamilySpec al;
    al.family = Family::MultipleRacah;
    al.variant = Variant::Alpha;
    al.m = 2;
    al.vectors["alpha"] = gd.vectors["gamma"];
    al.scalars["beta"] = gd.scalars["alpha"] + gd.vectors["beta"][0] - gd.vectors["gamma"][0];
    al.scalars["gamma"] = gd.scalars["alpha"];
    al.scalars["delta"] = gd.vectors["gamma"][0] + gd.vectors["delta"][0] - gd.scalars["alpha"];
    Poly rhs = construct(al, n);
    CHECK(lhs == rhs);
}

TEST_CASE("Hahn reflection: Q^{alpha;beta}(x) proportional to Q^{beta;alpha}(N-x)") {
    long N = 7;
    MultiIndex n({1, 1});
    FamilySpec beta_spec;
    beta_spec.family = Family::Hahn;
    beta_spec.variant = Variant::Beta;
    beta_spec.m = 2;
    beta_spec.scalars["alpha"] = q(1, 2);
    beta_spec.vectors["beta"] = {q(1, 3), q(3, 4)};
    beta_spec.scalars["N"] = q(N);
    Poly lhs = construct(beta_spec, n);

    FamilySpec alpha_spec;
    alpha_spec.family = Family::Hahn;
    alpha_spec.variant = Variant::Alpha;
    alpha_spec.m = 2;
    alpha_spec.vectors["alpha"] = {q(1, 3), q(3, 4)};
    alpha_spec.scalars["beta"] = q(1, 2);
    alpha_spec.scalars["N"] = q(N);
    Poly reflected = compose_affine(construct(alpha_spec, n), q(-1), q(N));

    // exact proportionality of coefficient vectors
    REQUIRE(lhs.degree() == reflected.degree());
    ComplexRational ratio = lhs.lead() / reflected.lead();
    CHECK(lhs == reflected * ratio);
    CHECK(!ratio.is_zero());
}

TEST_CASE("Jacobi-Pineiro reflection identity") {
    // P^{(alpha, beta_vec)}(x) = (-1)^{|n|} P^{(beta_vec, alpha)}(1-x)
    MultiIndex n({2, 1});
    FamilySpec beta_spec;
    beta_spec.family = Family::JacobiPineiro;
    beta_spec.variant = Variant::Beta;
    beta_spec.m = 2;
    beta_spec.scalars["alpha"] = q(1, 2);
    beta_spec.vectors["beta"] = {q(1, 3), q(3, 4)};
    Poly lhs = construct(beta_spec, n);

    Poly rhs = jacobi_pineiro_m_series(n, {q(1, 3), q(3, 4)}, q(1, 2));
    rhs = compose_affine(rhs, q(-1), q(1));
    if (n.total() % 2 == 1) rhs = -rhs;
    CHECK(lhs == rhs);
}

TEST_CASE("admissibility rejections") {
    FamilySpec spec;
    spec.family = Family::JacobiPineiro;
    spec.m = 2;
    spec.vectors["alpha"] = {q(1, 2), q(3, 2)};  // difference = 1, integer
    spec.scalars["beta"] = q(0);
    CHECK_THROWS_AS(construct(spec, MultiIndex({1, 1})), AdmissibilityError);

    FamilySpec wil;
    wil.family = Family::Wilson;
    wil.m = 1;
    wil.scalars["a"] = q(1);
    wil.scalars["b"] = q(-1);  // a+b = 0
    wil.scalars["c"] = q(3);
    wil.scalars["d"] = q(4);
    CHECK_THROWS_AS(construct(wil, MultiIndex({1})), AdmissibilityError);

    FamilySpec hahn;
    hahn.family = Family::Hahn;
    hahn.variant = Variant::Alpha;
    hahn.m = 1;
    hahn.vectors["alpha"] = {q(1, 2)};
    hahn.scalars["beta"] = q(1, 3);
    hahn.scalars["N"] = q(2);
    CHECK_THROWS_AS(construct(hahn, MultiIndex({3})), AdmissibilityError);  // N < |n|

    FamilySpec herm;
    herm.family = Family::MultipleHermite;
    herm.m = 2;
    herm.vectors["c"] = {q(1), q(2)};
    CHECK_THROWS_AS(build_limit_family(herm, MultiIndex({1, 1})), UnavailableRepresentation);
}
