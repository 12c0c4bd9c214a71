#pragma once

#include <vector>

#include "milnor/diagram.hpp"

namespace milnor {

/// One letter u of a strand's longitude word: the over-arc of the crossing
/// that consumes an arc, with exponent equal to the crossing sign. The
/// Wirtinger relation at that crossing reads a' = u^-1 a u.
struct WirtingerLetter {
    ArcId arc;
    int sign = 0;
    bool operator==(const WirtingerLetter&) const = default;
};

/// Wirtinger presentation data of a diagram: for each component i the
/// letters u[i][1..r(i)-1] in strand order. Prefix products v[i][j] =
/// u[i][1] ... u[i][j] are derived via `prefix`.
struct WirtingerData {
    int component_count = 0;
    std::vector<int> arcs_per_component;
    std::vector<int> self_writhe;
    std::vector<std::vector<WirtingerLetter>> u;  // u[i-1][j-1]

    std::vector<WirtingerLetter> prefix(int component, int length) const;
};

WirtingerData wirtinger(const StringLinkDiagram& d);

}  // namespace milnor
