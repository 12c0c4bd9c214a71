#pragma once

#include <compare>
#include <iosfwd>
#include <vector>

#include "milnor/braid.hpp"
#include "milnor/group_word.hpp"

namespace milnor {

/// Arc (component, index): arcs of component i are (i,1)..(i,r(i)), numbered
/// along the orientation. Both fields are 1-based.
struct ArcId {
    int component = 0;
    int arc = 0;
    auto operator<=>(const ArcId&) const = default;
};

/// One crossing, as seen from its arcs: the under-strand enters on
/// `under_in`, leaves on `under_out` (consecutive arcs of one component),
/// and passes below `over_arc`.
///
/// Sign convention: a crossing is +1 when it is right-handed, i.e. the
/// over-strand runs from lower-left to upper-right with both strands
/// pointing upward. This makes lk(sigma_1^2) = +1.
struct Crossing {
    ArcId over_arc;
    ArcId under_in;
    ArcId under_out;
    int sign = 0;
    bool operator==(const Crossing&) const = default;
};

/// Combinatorial m-component string link diagram. The primary data is, per
/// component, the ordered list of crossing passages along the strand; arcs
/// and Wirtinger incidences are derived from it. All strands run upward.
class StringLinkDiagram {
public:
    struct Passage {
        int crossing = 0;
        bool over = false;
        bool operator==(const Passage&) const = default;
    };
    using Path = std::vector<Passage>;

    static StringLinkDiagram trivial(int component_count);
    /// Builds and validates a diagram from explicit crossing signs and
    /// per-component passage lists. Every crossing id must occur exactly
    /// once as an over-passage and exactly once as an under-passage.
    static StringLinkDiagram from_paths(int component_count, std::vector<int> signs,
                                        std::vector<Path> paths);

    int component_count() const { return component_count_; }
    int crossing_count() const { return static_cast<int>(signs_.size()); }
    const std::vector<Path>& paths() const { return paths_; }
    int crossing_sign(int id) const { return signs_.at(static_cast<std::size_t>(id)); }

    /// r(i), 1-based component index.
    int arcs_per_component(int component) const;
    /// Sum of signs of the crossings of a component with itself.
    int self_writhe(int component) const;
    Crossing crossing(int id) const;
    std::vector<Crossing> crossings() const;
    bool is_self_crossing(int id) const;

    bool operator==(const StringLinkDiagram&) const = default;

private:
    StringLinkDiagram(int component_count, std::vector<int> signs, std::vector<Path> paths);

    int component_count_ = 0;
    std::vector<int> signs_;
    std::vector<Path> paths_;

    // Derived, filled at construction.
    std::vector<int> arcs_per_component_;
    std::vector<int> self_writhe_;
    std::vector<ArcId> over_arc_;
    std::vector<ArcId> under_in_;
};

/// Winding pattern: component `carrier` leaves its vertical line and, for
/// each letter g_j^e of `word`, hooks strand j once with linking sign e
/// (two crossings of sign e with strand j). All other components stay
/// straight and the carrier has no self-crossings, so its longitude
/// correction vanishes.
struct WindingWord {
    int carrier = 0;
    GroupWord word;
};

/// Converts a pure braid into a diagram with one crossing per letter.
/// Braid letters are realized bottom to top; for a positive letter the
/// strand at `position` passes over its right-hand neighbour.
/// Throws PreconditionError if the braid is not pure.
StringLinkDiagram braid_to_diagram(const BraidWord& b);

/// Realizes a winding word as a diagram; requires m >= 2, a carrier in
/// 1..m, and word generators in 1..m distinct from the carrier.
StringLinkDiagram winding_to_diagram(const WindingWord& w, int component_count);

/// Stacking product: `b` placed above `a`, arcs renumbered consecutively.
/// Crossing ids of `b` are shifted by a.crossing_count().
StringLinkDiagram stack(const StringLinkDiagram& a, const StringLinkDiagram& b);

/// Link-homotopy move: flips the sign of a self-crossing and exchanges its
/// over/under roles. Throws PreconditionError if the crossing joins two
/// distinct components.
StringLinkDiagram self_crossing_change(const StringLinkDiagram& d, int crossing_id);

std::ostream& operator<<(std::ostream& os, const ArcId& a);

}  // namespace milnor
