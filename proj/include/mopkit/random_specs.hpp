#pragma once

// Deterministic random admissible FamilySpec generators; shared by the CLI's
// batch verification and the test suites.

#include <random>
#include <vector>

#include "mopkit/families.hpp"

namespace mopkit::specgen {

Rational rational_in(std::mt19937_64& rng, int num_lo, int num_hi, int den_hi = 8);

// Positive rationals with pairwise non-integer differences.
std::vector<ComplexRational> spread_params(std::mt19937_64& rng, int m, int lo = 0, int hi = 5);

ComplexRational positive_scalar(std::mt19937_64& rng, int hi = 9);

MultiIndex random_index(std::mt19937_64& rng, int m, int max_total = 6);

// A random admissible spec; N-type parameters respect |n| <= max_total.
FamilySpec random_spec(Family family, int m, std::mt19937_64& rng, int max_total = 6);

// Families with a closed-form constructor (everything except multiple Hermite).
std::vector<Family> constructible_families();

// Families that are scalar (m = 1) by definition.
bool scalar_only(Family f);

}  // namespace mopkit::specgen
