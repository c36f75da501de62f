#include "mopkit/random_specs.hpp"

namespace mopkit::specgen {


Rational rational_in(std::mt19937_64& rng, int num_lo, int num_hi, int den_hi) {
    std::uniform_int_distribution<int> num(num_lo, num_hi);
    std::uniform_int_distribution<int> den(1, den_hi);
    return make_rational(num(rng), den(rng));
}

// Positive rationals with pairwise non-integer differences: integer part is
// random, the fractional part 1/p_j uses a distinct prime per slot.
std::vector<ComplexRational> spread_params(std::mt19937_64& rng, int m, int lo,
                                                  int hi) {
    static const int dens[] = {3, 5, 7, 11, 13};
    std::uniform_int_distribution<int> num(lo, hi);
    std::vector<ComplexRational> out;
    for (int j = 0; j < m; ++j)
        out.emplace_back(Rational(num(rng)) + make_rational(1, dens[j % 5]));
    return out;
}

ComplexRational positive_scalar(std::mt19937_64& rng, int hi) {
    return ComplexRational(rational_in(rng, 1, hi));
}

MultiIndex random_index(std::mt19937_64& rng, int m, int max_total) {
    std::vector<int> n(static_cast<size_t>(m));
    std::uniform_int_distribution<int> d(0, max_total / m >= 1 ? max_total / m : 1);
    int total;
    do {
        for (auto& v : n) v = d(rng);
        total = 0;
        for (int v : n) total += v;
    } while (total > max_total);
    return MultiIndex(n);
}

// A random admissible spec for the family; |n| <= max_total is assumed by the
// N-type parameters.
FamilySpec random_spec(Family family, int m, std::mt19937_64& rng, int max_total) {
    FamilySpec spec;
    spec.family = family;
    spec.m = m;
    long N = max_total + 2 + static_cast<long>(rng() % 4);
    switch (family) {
        case Family::Jacobi:
            spec.scalars["alpha"] = positive_scalar(rng);
            spec.scalars["beta"] = positive_scalar(rng);
            break;
        case Family::JacobiPineiro:
            spec.vectors["alpha"] = spread_params(rng, m);
            spec.scalars["beta"] = positive_scalar(rng);
            break;
        case Family::Wilson:
            spec.scalars["a"] = positive_scalar(rng);
            spec.scalars["b"] = ComplexRational(rational_in(rng, 1, 9, 5));
            spec.scalars["c"] = positive_scalar(rng);
            spec.scalars["d"] = positive_scalar(rng);
            break;
        case Family::MultipleWilson:
            spec.scalars["a"] = positive_scalar(rng);
            spec.vectors["b"] = spread_params(rng, m);
            spec.scalars["c"] = positive_scalar(rng);
            spec.scalars["d"] = positive_scalar(rng);
            break;
        case Family::Racah:
            spec.scalars["alpha"] = positive_scalar(rng);
            spec.scalars["beta"] = positive_scalar(rng);
            spec.scalars["gamma"] = ComplexRational(Rational(-N - 1));
            spec.scalars["delta"] = ComplexRational(rational_in(rng, 1, 5, 7));
            break;
        case Family::MultipleRacah:
            spec.variant = Variant::Alpha;
            spec.vectors["alpha"] = spread_params(rng, m);
            spec.scalars["beta"] = positive_scalar(rng);
            spec.scalars["gamma"] = ComplexRational(Rational(-N - 1));
            spec.scalars["delta"] = ComplexRational(rational_in(rng, 1, 5, 7));
            break;
        case Family::ContinuousDualHahn:
            spec.scalars["a"] = positive_scalar(rng);
            spec.scalars["b"] = ComplexRational(rational_in(rng, 1, 9, 5));
            spec.scalars["c"] = positive_scalar(rng);
            break;
        case Family::MultipleContinuousDualHahn:
            spec.scalars["a"] = positive_scalar(rng);
            spec.vectors["b"] = spread_params(rng, m);
            spec.scalars["c"] = positive_scalar(rng);
            break;
        case Family::DualHahn:
        case Family::MultipleDualHahn: {
            auto gamma = spread_params(rng, m);
            ComplexRational sum = positive_scalar(rng) + gamma[0];
            std::vector<ComplexRational> delta;
            for (const auto& g : gamma) delta.push_back(sum - g);
            if (family == Family::DualHahn) {
                spec.scalars["gamma"] = gamma[0];
                spec.scalars["delta"] = delta[0];
            } else {
                spec.vectors["gamma"] = gamma;
                spec.vectors["delta"] = delta;
            }
            spec.scalars["N"] = ComplexRational(Rational(N));
            break;
        }
        case Family::MeixnerPollaczek:
            spec.scalars["lambda"] = positive_scalar(rng);
            spec.scalars["w"] = ComplexRational(rational_in(rng, 1, 6, 4));
            break;
        case Family::MultipleMeixnerPollaczek: {
            spec.scalars["lambda"] = positive_scalar(rng);
            static const int dens[] = {2, 3, 5};
            std::vector<ComplexRational> w;
            for (int j = 0; j < m; ++j) w.emplace_back(make_rational(j + 1, dens[j % 3]));
            spec.vectors["w"] = w;
            break;
        }
        case Family::ContinuousHahn:
            spec.scalars["a"] = positive_scalar(rng);
            spec.scalars["b"] = ComplexRational(rational_in(rng, 1, 9, 5));
            spec.scalars["c"] = positive_scalar(rng);
            spec.scalars["d"] = positive_scalar(rng);
            break;
        case Family::MultipleContinuousHahn:
            spec.scalars["a"] = positive_scalar(rng);
            spec.vectors["b"] = spread_params(rng, m);
            spec.scalars["c"] = positive_scalar(rng);
            spec.scalars["d"] = positive_scalar(rng);
            break;
        case Family::Hahn:
            spec.variant = Variant::Alpha;
            spec.vectors["alpha"] = spread_params(rng, m);
            spec.scalars["beta"] = positive_scalar(rng);
            spec.scalars["N"] = ComplexRational(Rational(N));
            break;
        case Family::MeixnerI: {
            spec.scalars["beta"] = positive_scalar(rng);
            std::vector<ComplexRational> c;
            for (int j = 0; j < m; ++j) c.emplace_back(make_rational(1, j + 2));
            spec.vectors["c"] = c;
            break;
        }
        case Family::MeixnerII:
            spec.vectors["beta"] = spread_params(rng, m);
            spec.scalars["c"] = ComplexRational(make_rational(1, 3));
            break;
        case Family::Kravchuk: {
            std::vector<ComplexRational> p;
            for (int j = 0; j < m; ++j) p.emplace_back(make_rational(j + 1, m + 2));
            spec.vectors["p"] = p;
            spec.scalars["N"] = ComplexRational(Rational(N));
            break;
        }
        case Family::Charlier: {
            static const int dens[] = {2, 3, 5};
            std::vector<ComplexRational> a;
            for (int j = 0; j < m; ++j)
                a.emplace_back(Rational(1 + static_cast<long>(rng() % 3)) +
                               make_rational(1, dens[j % 3]));
            spec.vectors["a"] = a;
            break;
        }
        case Family::LaguerreI:
            spec.vectors["alpha"] = spread_params(rng, m);
            break;
        case Family::LaguerreII: {
            spec.scalars["alpha"] = positive_scalar(rng);
            static const int dens[] = {2, 3, 5};
            std::vector<ComplexRational> c;
            for (int j = 0; j < m; ++j)
                c.emplace_back(Rational(1 + static_cast<long>(rng() % 3)) +
                               make_rational(1, dens[j % 3]));
            spec.vectors["c"] = c;
            break;
        }
        case Family::MultipleHermite: {
            static const int dens[] = {2, 3, 5};
            std::vector<ComplexRational> c;
            for (int j = 0; j < m; ++j)
                c.emplace_back(Rational(static_cast<long>(rng() % 5) - 2) +
                               make_rational(1, dens[j % 3]));
            spec.vectors["c"] = c;
            break;
        }
    }
    return spec;
}

// Families with a closed-form constructor (everything except multiple Hermite).
std::vector<Family> constructible_families() {
    return {Family::Jacobi,
            Family::JacobiPineiro,
            Family::Wilson,
            Family::MultipleWilson,
            Family::Racah,
            Family::MultipleRacah,
            Family::ContinuousDualHahn,
            Family::MultipleContinuousDualHahn,
            Family::DualHahn,
            Family::MultipleDualHahn,
            Family::MeixnerPollaczek,
            Family::MultipleMeixnerPollaczek,
            Family::ContinuousHahn,
            Family::MultipleContinuousHahn,
            Family::Hahn,
            Family::MeixnerI,
            Family::MeixnerII,
            Family::Kravchuk,
            Family::Charlier,
            Family::LaguerreI,
            Family::LaguerreII};
}

// Scalar (m = 1) families; the remaining tags require m >= 1 as well but these
// are fixed to m = 1 by definition.
bool scalar_only(Family f) {
    switch (f) {
        case Family::Jacobi:
        case Family::Wilson:
        case Family::Racah:
        case Family::ContinuousDualHahn:
        case Family::DualHahn:
        case Family::MeixnerPollaczek:
        case Family::ContinuousHahn: return true;
        default: return false;
    }
}

}  // namespace mopkit::specgen
