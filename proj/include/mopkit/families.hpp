#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mopkit/hyperseries.hpp"

namespace mopkit {

enum class Family {
    Jacobi,
    JacobiPineiro,
    Wilson,
    MultipleWilson,
    Racah,
    MultipleRacah,
    ContinuousDualHahn,
    MultipleContinuousDualHahn,
    DualHahn,
    MultipleDualHahn,
    MeixnerPollaczek,
    MultipleMeixnerPollaczek,
    ContinuousHahn,
    MultipleContinuousHahn,
    Hahn,
    MeixnerI,
    MeixnerII,
    Kravchuk,
    Charlier,
    LaguerreI,
    LaguerreII,
    MultipleHermite,
};

// Which parameter the weights vary in, for the families that admit several
// conventions (multiple Racah, Hahn, Jacobi-Pineiro).
enum class Variant { Default, Alpha, Beta, GammaDelta };

const char* family_tag(Family f);
std::optional<Family> family_from_tag(const std::string& tag);
const char* variant_tag(Variant v);
std::optional<Variant> variant_from_tag(const std::string& tag);

// Family tag plus exact parameter vectors; selects weights, representations,
// and moment functionals.
struct FamilySpec {
    Family family = Family::Jacobi;
    Variant variant = Variant::Default;
    int m = 1;
    std::map<std::string, ComplexRational> scalars;
    std::map<std::string, std::vector<ComplexRational>> vectors;

    const ComplexRational& scalar(const std::string& name) const;
    const std::vector<ComplexRational>& vec(const std::string& name) const;
    bool has_scalar(const std::string& name) const { return scalars.count(name) > 0; }
    bool has_vector(const std::string& name) const { return vectors.count(name) > 0; }
    long scalar_int(const std::string& name) const;  // N-type parameters

    VarRole variable() const;
};

// Throws AdmissibilityError when the parameters violate the family's weight
// conditions; the multi-index is needed for the N >= |n| style constraints.
void check_admissible(const FamilySpec& spec, const MultiIndex& n);

// A named construction route for a family.
struct Representation {
    std::string name;
    Poly (*build)(const FamilySpec&, const MultiIndex&);
};

// All independent construction routes the paper provides for the family.
std::vector<Representation> representations(const FamilySpec& spec);

// Canonical constructor: first representation, admissibility-gated, with the
// exact-degree witness.
Poly construct(const FamilySpec& spec, const MultiIndex& n);

// ---- individual constructors -------------------------------------------------

Poly jacobi(int n, const ComplexRational& alpha, const ComplexRational& beta);
Poly jacobi_euler(int n, const ComplexRational& alpha, const ComplexRational& beta);

Poly jacobi_pineiro_rodrigues(const MultiIndex& n, const std::vector<ComplexRational>& alpha,
                              const ComplexRational& beta);
Poly jacobi_pineiro_m_series(const MultiIndex& n, const std::vector<ComplexRational>& alpha,
                             const ComplexRational& beta);
Poly jacobi_pineiro_euler(const MultiIndex& n, const std::vector<ComplexRational>& alpha,
                          const ComplexRational& beta);

Poly wilson(int n, const ComplexRational& a, const ComplexRational& b, const ComplexRational& c,
            const ComplexRational& d);

Poly multiple_wilson_m_series(const MultiIndex& n, const ComplexRational& a,
                              const std::vector<ComplexRational>& b, const ComplexRational& c,
                              const ComplexRational& d);
Poly multiple_wilson_kampe(const MultiIndex& n, const ComplexRational& a,
                           const std::vector<ComplexRational>& b, const ComplexRational& c,
                           const ComplexRational& d);

// Exact Meixner-Pollaczek circle point e^{i phi} = ((1-w^2) + 2wi)/(1+w^2).
ComplexRational mp_exp_iphi(const ComplexRational& w);

// Printed M-series / Kampé route for every limit family (multiple Racah,
// continuous dual Hahn, dual Hahn, Meixner-Pollaczek, continuous Hahn, Hahn,
// Meixner I/II, Kravchuk, Charlier, Jacobi-Pineiro variants, Laguerre I/II).
// MultipleHermite has no closed form and throws UnavailableRepresentation.
Poly build_limit_family(const FamilySpec& spec, const MultiIndex& n);

// Scalar orthogonal polynomial of degree `degree` for weight j of the family
// (the m=1 member with the j-th varying parameter).  Used for basis-inversion
// moments and the Lemma-3.5 style expansions.
Poly scalar_basis_poly(const FamilySpec& spec, int weight_j, int degree);

}  // namespace mopkit
