#pragma once

#include <functional>
#include <string>
#include <vector>

#include "mopkit/families.hpp"

namespace mopkit {

// Directed edge of the multiple AT-Askey scheme.  Limit edges carry a
// parameter schedule in T together with the normalization and variable
// substitution; specialization and scalar-reduction edges are exact.
struct LimitEdge {
    enum class Kind { Limit, Specialization, ScalarReduction };

    std::string name;
    Family source;
    Family target;
    Kind kind = Kind::Limit;
    int expected_order = 1;  // decay order in 1/T for Kind::Limit
    bool oracle_target = false;  // target polynomial only exists via the oracle
    std::string schedule;
    std::string divisor;
    std::string substitution;
    std::string section;

    // Evaluates (normalized substituted source, target) exactly at scale T for
    // a fixed representative parameter set.
    std::function<std::pair<Poly, Poly>(const Rational& T, const MultiIndex& n)> realize;
};

const std::vector<LimitEdge>& scheme_edges();
std::vector<Family> scheme_nodes();

// JSON description of the scheme graph (nodes + edge metadata).
std::string scheme_to_json();

}  // namespace mopkit
