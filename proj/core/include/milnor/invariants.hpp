#pragma once

#include <map>
#include <vector>

#include "milnor/diagram.hpp"
#include "milnor/integer.hpp"
#include "milnor/series.hpp"
#include "milnor/wirtinger.hpp"

namespace milnor {

/// Index sequences are plain vectors over 1..m.
using Sequence = std::vector<int>;

bool is_non_repeated(const Sequence& seq);

/// Graded-lexicographic order on sequences; used so that tables iterate
/// deterministically from short to long.
struct SequenceLess {
    bool operator()(const Sequence& a, const Sequence& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

/// Magnus images of the arc generators under the depth-q rewriting tower.
/// Entry (i,1) is exactly 1 + X_i at every depth; coefficients in degrees
/// below the depth are stable under increasing it.
class EtaTable {
public:
    EtaTable(const WirtingerData& w, int depth);

    int depth() const { return depth_; }
    const TruncatedSeries& at(ArcId arc) const;

private:
    int depth_;
    std::vector<int> offsets_;
    std::vector<int> arcs_per_component_;
    std::vector<TruncatedSeries> entries_;

    int flat(ArcId arc) const;
};

/// Magnus expansion of the preferred (zero-framed) longitude of a
/// component, computed at tower depth q and truncated at degree q-1 (only
/// degrees below q are trustworthy). The framing correction multiplies by
/// the meridian raised to minus the component's self-writhe.
TruncatedSeries longitude_series(const WirtingerData& w, const EtaTable& eta, int component);
TruncatedSeries longitude_series(const StringLinkDiagram& d, int component, int depth);

/// Milnor invariant of the sequence I = j_1 ... j_k i: the coefficient of
/// X_{j_1} ... X_{j_k} in the longitude series of component i at depth
/// |I| + 1. Length-1 invariants are 0 by definition.
Int mu(const StringLinkDiagram& d, const Sequence& seq);

/// Finite table of invariants for all sequences up to `max_length`
/// (length-1 entries are stored as 0). With `non_repeated_only` the
/// sequences are restricted to pairwise distinct indices and max_length
/// must not exceed the component count.
struct MilnorTable {
    int max_length = 0;
    bool non_repeated_only = false;
    std::map<Sequence, Int, SequenceLess> entries;

    /// Throws PreconditionError when the sequence is not in the table.
    const Int& at(const Sequence& seq) const;
};

MilnorTable mu_table(const StringLinkDiagram& d, int max_length, bool non_repeated_only,
                     int threads = 1);

/// gcd of the invariants of all sequences obtained from `seq` by removing
/// at least one index and cyclically permuting the rest; gcd of an empty or
/// all-zero set is 0. Requires the table to contain every such sequence.
Int delta(const MilnorTable& t, const Sequence& seq);

/// Link-level invariants of the closure: delta_n = gcd(delta(I), n) and
/// mu_bar = mu(I) reduced into [0, delta_n); reduction modulo 0 returns the
/// integer itself.
struct LinkInvariants {
    Int delta_n;
    Int mu_bar;
};

LinkInvariants link_invariants(const StringLinkDiagram& d, const Sequence& seq, const Int& n);

}  // namespace milnor
