#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mopkit/arith.hpp"
#include "mopkit/bigfloat.hpp"
#include "mopkit/poly.hpp"

using namespace mopkit;

namespace {
std::mt19937_64 rng(20240915);

Rational random_rational(int max_num = 20, int max_den = 12) {
    std::uniform_int_distribution<int> num(-max_num, max_num);
    std::uniform_int_distribution<int> den(1, max_den);
    return make_rational(num(rng), den(rng));
}

ComplexRational random_complex() { return {random_rational(), random_rational(8, 6)}; }

Poly random_poly(int maxdeg, VarRole var) {
    std::uniform_int_distribution<int> deg(0, maxdeg);
    std::vector<ComplexRational> c(static_cast<size_t>(deg(rng)) + 1);
    for (auto& v : c) v = random_complex();
    return Poly::from_coeffs(std::move(c), var);
}
}  // namespace

TEST_CASE("rational parsing and printing") {
    CHECK(*parse_rational("3/4") == make_rational(3, 4));
    CHECK(*parse_rational("-7") == make_rational(-7));
    CHECK(to_string(*parse_complex_rational("1/2+1/3*i")) == "1/2+1/3*i");
    CHECK(to_string(*parse_complex_rational("1/2-1/3*i")) == "1/2-1/3*i");
    CHECK(to_string(*parse_complex_rational("-2/5*i")) == "-2/5*i");
    CHECK(to_string(ComplexRational(make_rational(5))) == "5");
    CHECK(!parse_complex_rational("").has_value());
    // round trip on random values
    for (int i = 0; i < 50; ++i) {
        ComplexRational z = random_complex();
        CHECK(*parse_complex_rational(to_string(z)) == z);
    }
}

TEST_CASE("pochhammer basics") {
    CHECK(pochhammer(random_complex(), 0) == ComplexRational(1));
    CHECK(pochhammer(ComplexRational(-3), 5).is_zero());
    CHECK(pochhammer(ComplexRational(make_rational(1, 2)), 2) ==
          ComplexRational(make_rational(3, 4)));
}

TEST_CASE("pochhammer recursion property") {
    for (int trial = 0; trial < 40; ++trial) {
        ComplexRational x = random_complex();
        std::uniform_int_distribution<int> kd(0, 10);
        int k = kd(rng);
        CHECK(pochhammer(x, k + 1) == pochhammer(x, k) * (x + ComplexRational(k)));
    }
}

TEST_CASE("stirling rows") {
    CHECK(falling_factorial_basis_change(0) == std::vector<Rational>{Rational(1)});
    CHECK(falling_factorial_basis_change(2) ==
          std::vector<Rational>{Rational(0), Rational(1), Rational(1)});
    CHECK(falling_factorial_basis_change(3) ==
          std::vector<Rational>{Rational(0), Rational(1), Rational(3), Rational(1)});
}

TEST_CASE("poly ring basics") {
    CHECK(derivative(Poly(ComplexRational(7), VarRole::X)).is_zero());
    CHECK(Poly().degree() == -1);
    Poly p = Poly::from_coeffs({ComplexRational(1), ComplexRational(-2)}, VarRole::X);
    // (1-2x) with x -> 1-x gives 2x-1
    Poly q = compose_affine(p, ComplexRational(-1), ComplexRational(1));
    CHECK(q == Poly::from_coeffs({ComplexRational(-1), ComplexRational(2)}, VarRole::X));
    Poly r = Poly::from_coeffs({ComplexRational(1), ComplexRational(0), ComplexRational(1)},
                               VarRole::X);
    CHECK(eval_at(r, ComplexRational(make_rational(3, 2))) ==
          ComplexRational(make_rational(13, 4)));
}

TEST_CASE("poly ring axioms on random triples") {
    for (int trial = 0; trial < 25; ++trial) {
        Poly a = random_poly(5, VarRole::T);
        Poly b = random_poly(5, VarRole::T);
        Poly c = random_poly(5, VarRole::T);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
    }
}

TEST_CASE("compose_affine inverse round trip") {
    for (int trial = 0; trial < 25; ++trial) {
        Poly p = random_poly(6, VarRole::X);
        ComplexRational u = random_complex();
        if (u.is_zero()) u = ComplexRational(1);
        ComplexRational v = random_complex();
        Poly q = compose_affine(compose_affine(p, u, v), ComplexRational(1) / u,
                                -v / u);
        CHECK(q == p);
    }
}

TEST_CASE("general compose matches eval") {
    for (int trial = 0; trial < 10; ++trial) {
        Poly p = random_poly(4, VarRole::X);
        Poly q = random_poly(3, VarRole::X);
        ComplexRational z = random_complex();
        CHECK(eval_at(compose(p, q), z) == eval_at(p, eval_at(q, z)));
    }
}

TEST_CASE("bigfloat precision and basics") {
    BigFloat x = BigFloat::of(make_rational(1, 3), 128);
    CHECK(x.prec() == 128);
    BigFloat y = BigFloat::of(2, 320);
    CHECK((x * y).prec() == 320);
    BigFloat pi = BigFloat::pi(256);
    CHECK(abs(sin(pi)) < BigFloat::two_pow(-250, 256));
    // gamma(1/2)^2 == pi at working precision
    BigFloat g = gamma_real(BigFloat::of(make_rational(1, 2), 256));
    CHECK(abs(g * g - pi) < BigFloat::two_pow(-248, 256));
}
