#pragma once

#include <vector>

#include "mopkit/multi_index.hpp"
#include "mopkit/poly.hpp"
#include "mopkit/rational.hpp"

namespace mopkit {

// Rising factorial (x)_k = x(x+1)...(x+k-1); exact in every supported ring.
inline Rational pochhammer(const Rational& x, int k) {
    Rational acc(1);
    Rational cur = x;
    for (int i = 0; i < k; ++i) {
        acc *= cur;
        cur += 1;
    }
    return acc;
}

inline ComplexRational pochhammer(const ComplexRational& x, int k) {
    ComplexRational acc(1);
    for (int i = 0; i < k; ++i) acc *= x + ComplexRational(i);
    return acc;
}

inline Poly pochhammer_poly(const Poly& p, int k) {
    Poly acc(ComplexRational(1), p.var());
    for (int i = 0; i < k; ++i) {
        Poly factor = p;
        factor += ComplexRational(i);
        acc *= factor;
    }
    return acc;
}

inline Integer factorial_int(int k) {
    Integer f(1);
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

inline Rational factorial(int k) { return Rational(factorial_int(k)); }

inline Rational multi_factorial(const MultiIndex& n) {
    Rational f(1);
    for (int j = 0; j < n.m(); ++j) f *= factorial(n[j]);
    return f;
}

// Row k of the Stirling-second-kind triangle: x^k = sum_r S(k,r) x(x-1)...(x-r+1).
std::vector<Integer> stirling2_row(int k);

// Spec name for the same conversion, as exact rationals.
inline std::vector<Rational> falling_factorial_basis_change(int k) {
    std::vector<Rational> out;
    for (const auto& v : stirling2_row(k)) out.emplace_back(v);
    return out;
}

}  // namespace mopkit
