#pragma once

// Shared helpers for the test suites: deterministic generators for random
// words, pure braids and diagrams, plus the independent signed-crossing
// linking-number oracle.

#include <random>
#include <vector>

#include "milnor/braid.hpp"
#include "milnor/diagram.hpp"
#include "milnor/group_word.hpp"
#include "milnor/integer.hpp"

namespace milnor::testing {

using Rng = std::mt19937_64;

inline int pick(Rng& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline GroupWord random_word(Rng& rng, int generator_count, int max_letters) {
    std::vector<GroupWord::Letter> letters;
    const int count = pick(rng, 0, max_letters);
    for (int i = 0; i < count; ++i) {
        letters.push_back({pick(rng, 1, generator_count), pick(rng, 0, 1) ? 1 : -1});
    }
    return GroupWord(letters);
}

/// Random pure braid: a random word completed by bubble-sorting the strand
/// permutation back to the identity with random crossing signs.
inline BraidWord random_pure_braid(Rng& rng, int m, int max_letters) {
    std::vector<BraidLetter> letters;
    if (m >= 2) {
        const int count = pick(rng, 0, max_letters);
        for (int i = 0; i < count; ++i) {
            letters.push_back({pick(rng, 1, m - 1), pick(rng, 0, 1) ? 1 : -1});
        }
        std::vector<int> perm = BraidWord(m, letters).permutation();
        std::vector<int> strand_at(static_cast<std::size_t>(m) + 1);
        for (int s = 1; s <= m; ++s) strand_at[static_cast<std::size_t>(perm[static_cast<std::size_t>(s)])] = s;
        bool changed = true;
        while (changed) {
            changed = false;
            for (int p = 1; p <= m - 1; ++p) {
                if (strand_at[static_cast<std::size_t>(p)] > strand_at[static_cast<std::size_t>(p) + 1]) {
                    letters.push_back({p, pick(rng, 0, 1) ? 1 : -1});
                    std::swap(strand_at[static_cast<std::size_t>(p)],
                              strand_at[static_cast<std::size_t>(p) + 1]);
                    changed = true;
                }
            }
        }
    }
    return BraidWord(m, letters);
}

/// Winding word avoiding the carrier.
inline GroupWord random_winding_word(Rng& rng, int m, int carrier, int max_letters) {
    std::vector<GroupWord::Letter> letters;
    const int count = pick(rng, 0, max_letters);
    for (int i = 0; i < count && m >= 2; ++i) {
        int g = pick(rng, 1, m - 1);
        if (g >= carrier) ++g;
        letters.push_back({g, pick(rng, 0, 1) ? 1 : -1});
    }
    return GroupWord(letters);
}

/// One-crossing curl (kink) on `component`; removable by isotopy.
inline StringLinkDiagram make_curl(int m, int component, int sign, bool over_first) {
    std::vector<StringLinkDiagram::Path> paths(static_cast<std::size_t>(m));
    paths[static_cast<std::size_t>(component - 1)] = {{0, over_first}, {0, !over_first}};
    return StringLinkDiagram::from_paths(m, {sign}, std::move(paths));
}

/// Independent oracle: lk(i,j) as half the signed count of crossings
/// between components i and j, read straight off the crossing list.
inline Int lk_oracle(const StringLinkDiagram& d, int i, int j) {
    Int total = 0;
    for (const Crossing& c : d.crossings()) {
        const int a = c.over_arc.component;
        const int b = c.under_in.component;
        if ((a == i && b == j) || (a == j && b == i)) total += c.sign;
    }
    if (total % 2 != 0) throw std::logic_error("odd inter-component crossing sum");
    return total / 2;
}

/// Random mix of the diagram sources the library can produce: braids,
/// windings, stacks of those, and curls stacked in.
inline StringLinkDiagram random_diagram(Rng& rng, int m, int size) {
    StringLinkDiagram d = braid_to_diagram(random_pure_braid(rng, m, size));
    if (m >= 2 && pick(rng, 0, 1)) {
        const int carrier = pick(rng, 1, m);
        d = stack(d, winding_to_diagram({carrier, random_winding_word(rng, m, carrier, 4)}, m));
    }
    if (pick(rng, 0, 2) == 0) {
        d = stack(d, make_curl(m, pick(rng, 1, m), pick(rng, 0, 1) ? 1 : -1, pick(rng, 0, 1)));
    }
    return d;
}

inline StringLinkDiagram borromean() {
    return winding_to_diagram(
        {3, GroupWord::commutator(GroupWord::generator(1), GroupWord::generator(2))}, 3);
}

}  // namespace milnor::testing
