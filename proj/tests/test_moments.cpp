#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "family_fixtures.hpp"
#include "mopkit/moments.hpp"

using namespace mopkit;
using namespace mopkit::fixtures;

namespace {
std::mt19937_64 rng(99120);
ComplexRational q(long num, long den = 1) { return ComplexRational(make_rational(num, den)); }

FamilySpec jacobi_spec(const ComplexRational& a, const ComplexRational& b) {
    FamilySpec s;
    s.family = Family::Jacobi;
    s.m = 1;
    s.scalars["alpha"] = a;
    s.scalars["beta"] = b;
    return s;
}
}  // namespace

TEST_CASE("nu_0 is always 1") {
    for (Family family : constructible_families()) {
        int m = scalar_only(family) ? 1 : 2;
        FamilySpec spec = random_spec(family, m, rng);
        auto fs = make_moment_functionals(spec);
        REQUIRE(static_cast<int>(fs.size()) == m);
        for (const auto& f : fs) CHECK(f.nu(0) == ComplexRational(1));
    }
}

TEST_CASE("Jacobi uniform-measure moments") {
    auto fs = make_moment_functionals(jacobi_spec(q(0), q(0)));
    for (int k = 0; k <= 6; ++k) CHECK(fs[0].nu(k) == q(1, k + 1));
}

TEST_CASE("Charlier factorial-moment conversion") {
    FamilySpec spec;
    spec.family = Family::Charlier;
    spec.m = 1;
    spec.vectors["a"] = {q(2)};
    auto fs = make_moment_functionals(spec);
    // phi_r = 2^r, nu_2 = S(2,1)*2 + S(2,2)*4 = 6
    CHECK(fs[0].nu(1) == q(2));
    CHECK(fs[0].nu(2) == q(6));
    // cross-check by truncated series summation of the Poisson weights
    // sum_k 2^k/k! k^p  /  sum_k 2^k/k!, truncated far enough to be exact in
    // double precision terms; use rationals with k <= 40 and compare numerically.
    double num = 0, den = 0, num1 = 0;
    double fact = 1;
    for (int k = 0; k <= 40; ++k) {
        if (k > 0) fact *= k;
        double w = std::pow(2.0, k) / fact;
        den += w;
        num += w * k * k;
        num1 += w * k;
    }
    CHECK(std::abs(num / den - 6.0) < 1e-9);
    CHECK(std::abs(num1 / den - 2.0) < 1e-9);
}

TEST_CASE("Hahn uniform weights N=2") {
    FamilySpec spec;
    spec.family = Family::Hahn;
    spec.variant = Variant::Alpha;
    spec.m = 1;
    spec.vectors["alpha"] = {q(0)};
    spec.scalars["beta"] = q(0);
    spec.scalars["N"] = q(2);
    auto fs = make_moment_functionals(spec);
    CHECK(fs[0].nu(1) == q(1));
    CHECK(fs[0].nu(2) == q(5, 3));
}

TEST_CASE("Wilson contour moments via basis inversion") {
    FamilySpec spec;
    spec.family = Family::Wilson;
    spec.m = 1;
    spec.scalars["a"] = q(1);
    spec.scalars["b"] = q(2);
    spec.scalars["c"] = q(3);
    spec.scalars["d"] = q(4);
    CHECK(contour_moment_via_basis(spec, 0, 0) == q(1));
    CHECK(contour_moment_via_basis(spec, 0, 1) == q(-5));
    CHECK(contour_moment_via_basis(spec, 0, 2) == q(401, 11));
    CHECK(contour_moment_via_basis(spec, 0, 3) == q(-3895, 11));
}

TEST_CASE("triangularity: expansion of s^k uses only p_0..p_k") {
    // implied by construction; check the basis expansion of p_k itself is a unit vector
    FamilySpec spec;
    spec.family = Family::Wilson;
    spec.m = 1;
    spec.scalars["a"] = q(1, 2);
    spec.scalars["b"] = q(5, 4);
    spec.scalars["c"] = q(4, 3);
    spec.scalars["d"] = q(7, 6);
    auto fs = make_moment_functionals(spec);
    for (int k = 1; k <= 4; ++k) {
        // nu_k of the measure must satisfy int p_1 s^{k-1} relations implicitly;
        // verified through the oracle tests. Here: nu is real for real parameters.
        CHECK(fs[0].nu(k).is_real());
    }
}

TEST_CASE("moment matrix layout and rank") {
    FamilySpec spec;
    spec.family = Family::JacobiPineiro;
    spec.m = 2;
    spec.vectors["alpha"] = {q(0), q(1, 2)};
    spec.scalars["beta"] = q(0);
    auto fs = make_moment_functionals(spec);
    MultiIndex n({1, 1});
    CMatrix d = moment_matrix(fs, n);
    REQUIRE(d.size() == 2);
    CHECK(d[0][0] == q(1));
    CHECK(d[0][1] == q(1, 2));
    CHECK(d[1][0] == q(1));
    CHECK(d[1][1] == q(3, 5));
    CHECK(det_bareiss(d) == q(1, 10));

    // rank |n| for admissible parameters across random draws
    for (int trial = 0; trial < 10; ++trial) {
        FamilySpec s = random_spec(Family::JacobiPineiro, 2, rng);
        MultiIndex nn = random_index(rng, 2, 5);
        auto f2 = make_moment_functionals(s);
        if (nn.total() == 0) continue;
        CHECK(!det_bareiss(moment_matrix(f2, nn)).is_zero());
    }
}

TEST_CASE("normality determinant: closed form equals direct") {
    // n=1 Jacobi alpha=beta=0 -> both equal 1
    auto pair0 = normality_determinant(jacobi_spec(q(0), q(0)), MultiIndex({1}));
    CHECK(pair0.closed_form == q(1));
    CHECK(pair0.direct == q(1));
    // frozen 2x2 uniform case: det [[1,1/2],[1/2,1/3]] = 1/12
    auto pair1 = normality_determinant(jacobi_spec(q(0), q(0)), MultiIndex({2}));
    CHECK(pair1.direct == q(1, 12));
    CHECK(pair1.closed_form == q(1, 12));
    // randomized Jacobi and Jacobi-Pineiro
    for (int trial = 0; trial < 10; ++trial) {
        FamilySpec spec = random_spec(Family::Jacobi, 1, rng);
        MultiIndex n({static_cast<int>(rng() % 5) + 1});
        auto pr = normality_determinant(spec, n);
        CHECK(pr.closed_form == pr.direct);
        CHECK(!pr.direct.is_zero());
    }
    for (int trial = 0; trial < 10; ++trial) {
        std::uniform_int_distribution<int> md(1, 3);
        int m = md(rng);
        FamilySpec spec = random_spec(Family::JacobiPineiro, m, rng);
        MultiIndex n = random_index(rng, m, 6);
        auto pr = normality_determinant(spec, n);
        CHECK(pr.closed_form == pr.direct);
        if (n.total() > 0) CHECK(!pr.direct.is_zero());
    }
}

TEST_CASE("discrete functionals match brute-force weighted sums") {
    FamilySpec spec = random_spec(Family::Kravchuk, 2, rng);
    auto fs = make_moment_functionals(spec);
    long N = spec.scalar_int("N");
    const auto& p = spec.vec("p");
    for (int j = 0; j < 2; ++j) {
        // binomial weights C(N,k) p^k (1-p)^{N-k}
        std::vector<ComplexRational> w;
        ComplexRational one(1);
        for (int k = 0; k <= N; ++k) {
            ComplexRational binom(Rational(factorial_int(static_cast<int>(N)) /
                                           (factorial_int(k) * factorial_int(static_cast<int>(N) - k))));
            ComplexRational pk(1), qk(1);
            for (int i = 0; i < k; ++i) pk *= p[static_cast<size_t>(j)];
            for (int i = 0; i < N - k; ++i) qk *= one - p[static_cast<size_t>(j)];
            w.push_back(binom * pk * qk);
        }
        for (int kk = 0; kk <= 4; ++kk) {
            ComplexRational direct(0), mass(0);
            for (int x = 0; x <= N; ++x) {
                ComplexRational xk(1);
                for (int i = 0; i < kk; ++i) xk *= ComplexRational(Rational(x));
                direct += w[static_cast<size_t>(x)] * xk;
                mass += w[static_cast<size_t>(x)];
            }
            CHECK(fs[static_cast<size_t>(j)].nu(kk) == direct / mass);
        }
    }
}
