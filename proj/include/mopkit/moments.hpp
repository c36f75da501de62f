#pragma once

#include <functional>
#include <memory>
#include <utility>
#include <vector>

#include "mopkit/families.hpp"
#include "mopkit/linalg.hpp"

namespace mopkit {

enum class SupportKind { FiniteDiscrete, InfiniteDiscrete, Interval, Contour };

// Normalized moment map k -> nu_k = m_k / m_0 for one weight of a family.
// nu_0 = 1 by construction; values are memoized (single-thread use; share
// nothing across threads or recompute).
class MomentFunctional {
public:
    MomentFunctional(Family family, int weight_index, SupportKind support,
                     std::function<ComplexRational(int)> raw)
        : family_(family), weight_(weight_index), support_(support), raw_(std::move(raw)) {}

    const ComplexRational& nu(int k) const;
    Family family() const { return family_; }
    int weight_index() const { return weight_; }
    SupportKind support() const { return support_; }

private:
    Family family_;
    int weight_;
    SupportKind support_;
    std::function<ComplexRational(int)> raw_;
    mutable std::vector<std::unique_ptr<ComplexRational>> cache_;
};

// One functional per weight.  Contour families (Wilson, continuous dual Hahn,
// Meixner-Pollaczek, continuous Hahn) use basis inversion; everything else has
// a closed form or a finite/recursive sum.
std::vector<MomentFunctional> make_moment_functionals(const FamilySpec& spec);

// Expands the monomial var^k in the scalar orthogonal basis {p_0..p_k} by
// triangular back-substitution and returns the p_0-coefficient, which equals
// nu_k since every higher basis element integrates to zero.
ComplexRational contour_moment_via_basis(const FamilySpec& spec, int weight_j, int k);

// The stacked |n| x |n| matrix D_n with block rows D_j(n_j), entries
// nu^{(j)}_{row+col}.
CMatrix moment_matrix(const std::vector<MomentFunctional>& functionals, const MultiIndex& n);

// Closed-form normality determinant (Theorem 2.1 / 3.1 product formulas,
// normalized by powers of m_0) against the exact elimination value.
struct DeterminantPair {
    ComplexRational closed_form;
    ComplexRational direct;
};
DeterminantPair normality_determinant(const FamilySpec& spec, const MultiIndex& n);

}  // namespace mopkit
