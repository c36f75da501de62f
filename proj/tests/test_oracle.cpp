#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "family_fixtures.hpp"
#include "mopkit/oracle.hpp"

using namespace mopkit;
using namespace mopkit::fixtures;

namespace {
std::mt19937_64 rng(55771);
ComplexRational q(long num, long den = 1) { return ComplexRational(make_rational(num, den)); }
}  // namespace

TEST_CASE("solve_type2 basics") {
    FamilySpec spec;
    spec.family = Family::Jacobi;
    spec.m = 1;
    spec.scalars["alpha"] = q(0);
    spec.scalars["beta"] = q(0);
    auto fs = make_moment_functionals(spec);
    CHECK(solve_type2(fs, MultiIndex({0}), VarRole::T) == Poly(q(1), VarRole::T));
    // monic multiple of 1 - 6x + 6x^2: x^2 - x + 1/6
    Poly p2 = solve_type2(fs, MultiIndex({2}), VarRole::T);
    CHECK(p2 == Poly::from_coeffs({q(1, 6), q(-1), q(1)}, VarRole::T));
    CHECK(monic(jacobi(2, q(0), q(0))) == p2);
}

TEST_CASE("multiple Hermite via oracle") {
    FamilySpec spec;
    spec.family = Family::MultipleHermite;
    spec.m = 2;
    spec.vectors["c"] = {q(1), q(2)};
    auto fs = make_moment_functionals(spec);
    Poly p = solve_type2(fs, MultiIndex({1, 1}), VarRole::X);
    CHECK(p == Poly::from_coeffs({q(0), q(-3, 2), q(1)}, VarRole::X));  // x^2 - 3x/2
    auto report = verify_orthogonality(p, fs, MultiIndex({1, 1}));
    CHECK(report.pass(2));
}

TEST_CASE("verify_orthogonality flags the zero polynomial") {
    FamilySpec spec;
    spec.family = Family::Charlier;
    spec.m = 2;
    spec.vectors["a"] = {q(1), q(2)};
    auto fs = make_moment_functionals(spec);
    auto report = verify_orthogonality(Poly(VarRole::X), fs, MultiIndex({1, 1}));
    CHECK(report.degree == -1);
    CHECK(!report.pass(2));
}

TEST_CASE("Charlier frozen oracle example") {
    FamilySpec spec;
    spec.family = Family::Charlier;
    spec.m = 2;
    spec.vectors["a"] = {q(1), q(2)};
    auto fs = make_moment_functionals(spec);
    Poly oracle = solve_type2(fs, MultiIndex({1, 1}), VarRole::X);
    CHECK(oracle == Poly::from_coeffs({q(2), q(-4), q(1)}, VarRole::X));
    Poly ctor = construct(spec, MultiIndex({1, 1}));
    CHECK(monic(ctor) == oracle);
}

TEST_CASE("oracle equivalence across all families (m <= 3, |n| <= 6)") {
    for (Family family : constructible_families()) {
        int max_m = scalar_only(family) ? 1 : 3;
        for (int m = 1; m <= max_m; ++m) {
            int max_total = m == 3 ? 6 : 4;
            FamilySpec spec = random_spec(family, m, rng);
            MultiIndex n = random_index(rng, m, max_total);
            INFO(family_tag(family), " m=", m, " n=", n.str());
            Poly p = construct(spec, n);
            auto fs = make_moment_functionals(spec);
            auto report = verify_orthogonality(p, fs, n);
            CHECK(report.pass(n.total()));
        }
    }
}

TEST_CASE("scalar-basis expansion: unit vector for basis elements") {
    FamilySpec spec = random_spec(Family::MultipleWilson, 2, rng);
    std::vector<Poly> basis;
    for (int l = 0; l <= 3; ++l) basis.push_back(scalar_basis_poly(spec, 0, l));
    auto coeffs = expand_in_scalar_basis(basis[2], basis);
    CHECK(coeffs.size() == 3);
    CHECK(coeffs[0].is_zero());
    CHECK(coeffs[1].is_zero());
    CHECK(coeffs[2] == ComplexRational(1));
}

TEST_CASE("multiple Wilson Lemma-3.5 vanishing pattern (frozen parameters)") {
    FamilySpec spec;
    spec.family = Family::MultipleWilson;
    spec.m = 2;
    spec.scalars["a"] = q(1);
    spec.vectors["b"] = {q(1, 2), q(5, 4)};
    spec.scalars["c"] = q(3, 2);
    spec.scalars["d"] = q(2);
    MultiIndex n({1, 1});
    Poly p = construct(spec, n);
    for (int j = 0; j < 2; ++j) {
        std::vector<Poly> basis;
        for (int l = 0; l <= n.total(); ++l) basis.push_back(scalar_basis_poly(spec, j, l));
        auto coeffs = expand_in_scalar_basis(p, basis);
        CHECK(lemma_vanishing_pattern(coeffs, n[j], n.total()));
        CHECK(coeffs[0].is_zero());  // c^{(j)}_{n,0} = 0 exactly
    }
    // frozen values from the moment-system prototype
    std::vector<Poly> basis0;
    for (int l = 0; l <= 2; ++l) basis0.push_back(scalar_basis_poly(spec, 0, l));
    auto c0 = expand_in_scalar_basis(p, basis0);
    CHECK(c0[1] == q(-9, 4));
    CHECK(c0[2] == q(27, 28));
}

TEST_CASE("Jacobi-Pineiro expansion in scalar Jacobi basis mirrors the pattern") {
    FamilySpec spec = random_spec(Family::JacobiPineiro, 2, rng);
    MultiIndex n({2, 1});
    Poly p = construct(spec, n);
    for (int j = 0; j < 2; ++j) {
        std::vector<Poly> basis;
        for (int l = 0; l <= n.total(); ++l) basis.push_back(scalar_basis_poly(spec, j, l));
        auto coeffs = expand_in_scalar_basis(p, basis);
        CHECK(lemma_vanishing_pattern(coeffs, n[j], n.total()));
    }
}

TEST_CASE("extras nonzero witness perfectness on random AT draws") {
    for (int trial = 0; trial < 8; ++trial) {
        FamilySpec spec = random_spec(Family::JacobiPineiro, 2, rng);
        MultiIndex n = random_index(rng, 2, 5);
        auto fs = make_moment_functionals(spec);
        Poly p = solve_type2(fs, n, VarRole::T);
        auto report = verify_orthogonality(p, fs, n);
        CHECK(report.residuals_zero());
        CHECK(report.extras_nonzero());
    }
}
