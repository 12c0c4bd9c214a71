#include "milnor/magnus.hpp"

namespace milnor {

TruncatedSeries magnus_expand(const GroupWord& word, int degree_bound) {
    TruncatedSeries result = TruncatedSeries::one(degree_bound);
    for (const auto& [gen, exp] : word.letters()) {
        TruncatedSeries base =
            TruncatedSeries::one(degree_bound) + TruncatedSeries::variable(gen, degree_bound);
        result = result * base.pow(exp);
    }
    return result;
}

}  // namespace milnor
