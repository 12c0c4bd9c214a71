#pragma once

#include "milnor/group_word.hpp"
#include "milnor/series.hpp"

namespace milnor {

/// Magnus expansion E, truncated at `degree_bound`: the ring homomorphism
/// sending a generator g_i to 1 + X_i and g_i^-1 to 1 - X_i + X_i^2 - ...
/// The constant term of the result is always 1.
TruncatedSeries magnus_expand(const GroupWord& word, int degree_bound);

}  // namespace milnor
