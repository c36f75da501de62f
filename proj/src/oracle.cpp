#include "mopkit/oracle.hpp"

#include "mopkit/errors.hpp"
#include "mopkit/linalg.hpp"

namespace mopkit {

Poly solve_type2(const std::vector<MomentFunctional>& functionals, const MultiIndex& n,
                 VarRole var) {
    const int total = n.total();
    if (total == 0) return Poly(ComplexRational(1), var);
    // Monic ansatz p = x^total + sum_{i<total} c_i x^i; each orthogonality
    // condition sum_i c_i nu_{k+i} = -nu_{k+total}.
    CMatrix a = moment_matrix(functionals, n);
    std::vector<ComplexRational> rhs;
    rhs.reserve(static_cast<size_t>(total));
    for (int j = 0; j < n.m(); ++j)
        for (int k = 0; k < n[j]; ++k)
            rhs.push_back(-functionals[static_cast<size_t>(j)].nu(k + total));
    auto sol = solve_exact(std::move(a), std::move(rhs));
    if (!sol) throw NotNormal("moment matrix rank-deficient at n = " + n.str());
    std::vector<ComplexRational> coeffs = std::move(*sol);
    coeffs.push_back(ComplexRational(1));
    return Poly::from_coeffs(std::move(coeffs), var);
}

VerificationReport verify_orthogonality(const Poly& candidate,
                                        const std::vector<MomentFunctional>& functionals,
                                        const MultiIndex& n) {
    VerificationReport report;
    report.degree = candidate.degree();
    const int total = n.total();
    auto pair_with = [&](int j, int k) {
        // integral of candidate * x^k against weight j, in normalized moments
        ComplexRational acc(0);
        for (int i = 0; i <= candidate.degree(); ++i)
            acc += candidate.coeff(i) * functionals[static_cast<size_t>(j)].nu(k + i);
        return acc;
    };
    for (int j = 0; j < n.m(); ++j) {
        for (int k = 0; k < n[j]; ++k)
            report.residuals.push_back({j, k, pair_with(j, k)});
        report.extras.push_back({j, n[j], pair_with(j, n[j])});
    }
    try {
        Poly oracle = solve_type2(functionals, n, candidate.is_zero() ? VarRole::X : candidate.var());
        report.normal = true;
        if (candidate.degree() == total) {
            Poly diff = candidate - candidate.lead() * oracle;
            if (diff.is_zero()) report.proportionality = candidate.lead();
        }
    } catch (const NotNormal&) {
        report.normal = false;
    }
    return report;
}

std::vector<ComplexRational> expand_in_scalar_basis(const Poly& candidate,
                                                    const std::vector<Poly>& scalar_basis) {
    const int deg = candidate.degree();
    if (deg < 0) throw MopkitError("expand_in_scalar_basis: zero polynomial");
    if (static_cast<int>(scalar_basis.size()) < deg + 1)
        throw MopkitError("expand_in_scalar_basis: basis too short");
    std::vector<ComplexRational> coeffs(static_cast<size_t>(deg) + 1);
    Poly residual = candidate;
    for (int l = deg; l >= 0; --l) {
        const Poly& pl = scalar_basis[static_cast<size_t>(l)];
        if (pl.degree() != l || pl.lead().is_zero())
            throw SingularLeadingCoefficient("basis element of degree " + std::to_string(l));
        ComplexRational cl = residual.coeff(l) / pl.lead();
        residual -= pl * cl;
        coeffs[static_cast<size_t>(l)] = cl;
    }
    if (!residual.is_zero()) throw MopkitError("expansion left a residual");
    return coeffs;
}

bool lemma_vanishing_pattern(const std::vector<ComplexRational>& coeffs, int n_j, int total) {
    if (static_cast<int>(coeffs.size()) != total + 1) return false;
    for (int l = 0; l < n_j; ++l)
        if (!coeffs[static_cast<size_t>(l)].is_zero()) return false;
    return !coeffs[static_cast<size_t>(n_j)].is_zero() &&
           !coeffs[static_cast<size_t>(total)].is_zero();
}

}  // namespace mopkit
