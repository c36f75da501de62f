#pragma once

#include "mopkit/random_specs.hpp"

namespace mopkit::fixtures {
using namespace mopkit::specgen;
}  // namespace mopkit::fixtures
