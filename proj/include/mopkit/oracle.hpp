#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mopkit/moments.hpp"

namespace mopkit {

// Outcome of checking a candidate polynomial against Eq.-(system) style
// orthogonality: exact residuals per (weight, power), the extra k = n_j
// values (all must be nonzero for perfectness), and proportionality to the
// monic oracle solution.
struct VerificationReport {
    struct Residual {
        int weight_j;
        int k;
        ComplexRational value;
    };
    std::vector<Residual> residuals;          // k < n_j; must all vanish
    std::vector<Residual> extras;             // k = n_j; must all be nonzero
    int degree = -1;
    bool normal = false;                      // moment matrix had full rank
    std::optional<ComplexRational> proportionality;  // candidate = C * monic oracle

    bool residuals_zero() const {
        for (const auto& r : residuals)
            if (!r.value.is_zero()) return false;
        return true;
    }
    bool extras_nonzero() const {
        for (const auto& r : extras)
            if (r.value.is_zero()) return false;
        return true;
    }
    bool pass(int expected_degree) const {
        return degree == expected_degree && normal && residuals_zero() && extras_nonzero() &&
               proportionality && !proportionality->is_zero();
    }
};

// Monic type II multiple orthogonal polynomial solved directly from the
// moment system; throws NotNormal when D_n is rank deficient.
Poly solve_type2(const std::vector<MomentFunctional>& functionals, const MultiIndex& n,
                 VarRole var);

VerificationReport verify_orthogonality(const Poly& candidate,
                                        const std::vector<MomentFunctional>& functionals,
                                        const MultiIndex& n);

// Exact expansion of the candidate in a scalar orthogonal basis p_0..p_{|n|}.
// The Lemma-3.5 pattern for weight j is c_l = 0 for l < n_j with c_{n_j} and
// c_{|n|} nonzero.
std::vector<ComplexRational> expand_in_scalar_basis(const Poly& candidate,
                                                    const std::vector<Poly>& scalar_basis);

bool lemma_vanishing_pattern(const std::vector<ComplexRational>& coeffs, int n_j, int total);

}  // namespace mopkit
