#include "mopkit/poly.hpp"

#include <algorithm>

namespace mopkit {

std::string to_string(const ComplexRational& z) {
    if (z.is_real()) return z.re().get_str();
    std::string im = z.im().get_str();
    std::string out;
    if (sgn(z.re()) != 0 || sgn(z.im()) == 0) {
        out = z.re().get_str();
        if (im[0] != '-') out += "+";
    }
    return out + im + "*i";
}

std::optional<ComplexRational> parse_complex_rational(const std::string& text) {
    if (text.empty()) return std::nullopt;
    auto tail = text.size() >= 2 ? text.substr(text.size() - 2) : "";
    if (tail != "*i") {
        auto r = parse_rational(text);
        if (!r) return std::nullopt;
        return ComplexRational(*r);
    }
    std::string body = text.substr(0, text.size() - 2);
    // Split at the sign that separates the real and imaginary parts. Skip the
    // leading sign; rational strings contain no inner '+'/'-' besides it.
    size_t split = std::string::npos;
    for (size_t i = 1; i < body.size(); ++i) {
        if ((body[i] == '+' || body[i] == '-') && body[i - 1] != '/') split = i;
    }
    if (split == std::string::npos) {
        auto im = parse_rational(body);
        if (!im) return std::nullopt;
        return ComplexRational(Rational(0), *im);
    }
    auto re = parse_rational(body.substr(0, split));
    std::string im_text = body.substr(split);
    if (im_text[0] == '+') im_text = im_text.substr(1);
    auto im = parse_rational(im_text);
    if (!re || !im) return std::nullopt;
    return ComplexRational(*re, *im);
}

const char* var_role_name(VarRole v) {
    switch (v) {
        case VarRole::X: return "x";
        case VarRole::T: return "t";
        case VarRole::S: return "s";
        case VarRole::LambdaX: return "lambda";
    }
    return "?";
}

namespace {
VarRole join_roles(const Poly& a, const Poly& b) {
    if (a.is_constant()) return b.var();
    if (b.is_constant()) return a.var();
    if (a.var() != b.var())
        throw MopkitError(std::string("Poly: mixed variable roles ") + var_role_name(a.var()) +
                          " vs " + var_role_name(b.var()));
    return a.var();
}
}  // namespace

Poly::Poly(ComplexRational constant, VarRole var) : var_(var) {
    if (!constant.is_zero()) c_.push_back(std::move(constant));
}

Poly Poly::variable(VarRole var) {
    Poly p(var);
    p.c_ = {ComplexRational(0), ComplexRational(1)};
    return p;
}

Poly Poly::from_coeffs(std::vector<ComplexRational> coeffs, VarRole var) {
    Poly p(var);
    p.c_ = std::move(coeffs);
    p.trim();
    return p;
}

Poly Poly::with_var(VarRole var) const {
    Poly p = *this;
    p.var_ = var;
    return p;
}

const ComplexRational& Poly::coeff(int k) const {
    static const ComplexRational zero(0);
    if (k < 0 || k >= static_cast<int>(c_.size())) return zero;
    return c_[static_cast<size_t>(k)];
}

const ComplexRational& Poly::lead() const {
    static const ComplexRational zero(0);
    return c_.empty() ? zero : c_.back();
}

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly& Poly::operator+=(const Poly& o) {
    var_ = join_roles(*this, o);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    var_ = join_roles(*this, o);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator*=(const Poly& o) {
    var_ = join_roles(*this, o);
    if (c_.empty() || o.c_.empty()) {
        c_.clear();
        return *this;
    }
    std::vector<ComplexRational> out(c_.size() + o.c_.size() - 1);
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
    c_ = std::move(out);
    trim();
    return *this;
}

Poly& Poly::operator*=(const ComplexRational& c) {
    if (c.is_zero()) {
        c_.clear();
        return *this;
    }
    for (auto& v : c_) v *= c;
    return *this;
}

Poly& Poly::operator/=(const ComplexRational& c) {
    if (c.is_zero()) throw MopkitError("Poly: division by zero scalar");
    for (auto& v : c_) v /= c;
    return *this;
}

Poly& Poly::operator+=(const ComplexRational& c) {
    if (c_.empty()) {
        if (!c.is_zero()) c_.push_back(c);
        return *this;
    }
    c_[0] += c;
    trim();
    return *this;
}

Poly operator-(const Poly& a) {
    Poly p = a;
    for (auto& v : const_cast<std::vector<ComplexRational>&>(p.coeffs()))
        v = -v;
    return p;
}

std::string Poly::str() const {
    if (c_.empty()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        if (coeff(k).is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += "(" + to_string(coeff(k)) + ")";
        if (k >= 1) {
            out += std::string("*") + var_role_name(var_);
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

ComplexRational eval_at(const Poly& p, const ComplexRational& z) {
    ComplexRational acc(0);
    for (int k = p.degree(); k >= 0; --k) acc = acc * z + p.coeff(k);
    return acc;
}

Poly derivative(const Poly& p) {
    if (p.degree() <= 0) return Poly(p.var());
    std::vector<ComplexRational> out(static_cast<size_t>(p.degree()));
    for (int k = 1; k <= p.degree(); ++k)
        out[static_cast<size_t>(k - 1)] = ComplexRational(k) * p.coeff(k);
    return Poly::from_coeffs(std::move(out), p.var());
}

Poly compose_affine(const Poly& p, const ComplexRational& u, const ComplexRational& v,
                    VarRole role) {
    // Horner in (u*y + v).
    Poly lin = Poly::from_coeffs({v, u}, role);
    Poly acc(role);
    for (int k = p.degree(); k >= 0; --k) {
        acc *= lin;
        acc += Poly(p.coeff(k), role);
    }
    return acc;
}

Poly compose_affine(const Poly& p, const ComplexRational& u, const ComplexRational& v) {
    return compose_affine(p, u, v, p.var());
}

Poly compose(const Poly& p, const Poly& q) {
    Poly acc(q.var());
    for (int k = p.degree(); k >= 0; --k) {
        acc *= q;
        acc += Poly(p.coeff(k), q.var());
    }
    return acc;
}

Poly monic(const Poly& p) {
    if (p.is_zero()) throw MopkitError("monic: zero polynomial");
    return p / p.lead();
}

}  // namespace mopkit
