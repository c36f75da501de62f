#pragma once

#include <string>
#include <vector>

#include "mopkit/rational.hpp"

namespace mopkit {

// Role of the polynomial variable.  The Wilson-type families live in s = t^2,
// the Racah-type families in lambda(x) = x(x+gamma+delta+1).
enum class VarRole : unsigned char { X, T, S, LambdaX };

const char* var_role_name(VarRole v);

// Dense univariate polynomial over Q(i), kept in canonical form (no trailing
// zero coefficient).  degree() of the zero polynomial is -1.
class Poly {
public:
    Poly() = default;  // zero polynomial, role X
    explicit Poly(VarRole var) : var_(var) {}
    Poly(ComplexRational constant, VarRole var);

    static Poly variable(VarRole var);
    static Poly from_coeffs(std::vector<ComplexRational> coeffs, VarRole var);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    VarRole var() const { return var_; }
    Poly with_var(VarRole var) const;

    // Coefficient of power k; zero beyond the degree.
    const ComplexRational& coeff(int k) const;
    const std::vector<ComplexRational>& coeffs() const { return c_; }
    const ComplexRational& lead() const;
    ComplexRational constant_term() const { return c_.empty() ? ComplexRational(0) : c_[0]; }

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const ComplexRational& c);
    Poly& operator/=(const ComplexRational& c);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
    friend Poly operator*(Poly a, const ComplexRational& c) { return a *= c; }
    friend Poly operator*(const ComplexRational& c, Poly a) { return a *= c; }
    friend Poly operator/(Poly a, const ComplexRational& c) { return a /= c; }
    friend Poly operator-(const Poly& a);
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // Also usable with integer shifts through the ComplexRational conversion.
    Poly& operator+=(const ComplexRational& c);

    std::string str() const;

private:
    void trim();
    std::vector<ComplexRational> c_;
    VarRole var_ = VarRole::X;
};

ComplexRational eval_at(const Poly& p, const ComplexRational& z);
Poly derivative(const Poly& p);

// Substitutes variable <- u*variable + v (result in role `role`, defaulting to
// the input role).
Poly compose_affine(const Poly& p, const ComplexRational& u, const ComplexRational& v);
Poly compose_affine(const Poly& p, const ComplexRational& u, const ComplexRational& v,
                    VarRole role);

// General substitution p(q(.)); needed for the quadratic variable changes
// s -> (t+y)^2 in the limit relations.
Poly compose(const Poly& p, const Poly& q);

Poly monic(const Poly& p);

}  // namespace mopkit
