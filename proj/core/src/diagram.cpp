#include "milnor/diagram.hpp"

#include <cstdlib>
#include <numeric>
#include <ostream>

#include "milnor/errors.hpp"

namespace milnor {

StringLinkDiagram::StringLinkDiagram(int component_count, std::vector<int> signs,
                                     std::vector<Path> paths)
    : component_count_(component_count), signs_(std::move(signs)), paths_(std::move(paths)) {
    const int n = crossing_count();
    std::vector<int> over_seen(static_cast<std::size_t>(n), 0);
    std::vector<int> under_seen(static_cast<std::size_t>(n), 0);
    over_arc_.resize(static_cast<std::size_t>(n));
    under_in_.resize(static_cast<std::size_t>(n));
    arcs_per_component_.resize(static_cast<std::size_t>(component_count_));
    self_writhe_.assign(static_cast<std::size_t>(component_count_), 0);

    for (int s : signs_) {
        if (s != 1 && s != -1) throw PreconditionError("crossing signs must be +-1");
    }
    for (int i = 1; i <= component_count_; ++i) {
        int arc = 1;
        for (const Passage& p : paths_[static_cast<std::size_t>(i - 1)]) {
            if (p.crossing < 0 || p.crossing >= n) {
                throw PreconditionError("passage references an unknown crossing");
            }
            const auto c = static_cast<std::size_t>(p.crossing);
            if (p.over) {
                if (over_seen[c]++) throw PreconditionError("crossing has two over-passages");
                over_arc_[c] = ArcId{i, arc};
            } else {
                if (under_seen[c]++) throw PreconditionError("crossing has two under-passages");
                under_in_[c] = ArcId{i, arc};
                ++arc;
            }
        }
        arcs_per_component_[static_cast<std::size_t>(i - 1)] = arc;
    }
    for (int c = 0; c < n; ++c) {
        const auto ci = static_cast<std::size_t>(c);
        if (!over_seen[ci] || !under_seen[ci]) {
            throw PreconditionError("crossing is missing an over- or under-passage");
        }
        if (over_arc_[ci].component == under_in_[ci].component) {
            self_writhe_[static_cast<std::size_t>(over_arc_[ci].component - 1)] += signs_[ci];
        }
    }
}

StringLinkDiagram StringLinkDiagram::trivial(int component_count) {
    return from_paths(component_count, {}, std::vector<Path>(static_cast<std::size_t>(
                                                std::max(component_count, 0))));
}

StringLinkDiagram StringLinkDiagram::from_paths(int component_count, std::vector<int> signs,
                                                std::vector<Path> paths) {
    if (component_count < 0) throw PreconditionError("component count must be >= 0");
    if (paths.size() != static_cast<std::size_t>(component_count)) {
        throw PreconditionError("one passage list per component is required");
    }
    return StringLinkDiagram(component_count, std::move(signs), std::move(paths));
}

int StringLinkDiagram::arcs_per_component(int component) const {
    return arcs_per_component_.at(static_cast<std::size_t>(component - 1));
}

int StringLinkDiagram::self_writhe(int component) const {
    return self_writhe_.at(static_cast<std::size_t>(component - 1));
}

Crossing StringLinkDiagram::crossing(int id) const {
    const auto c = static_cast<std::size_t>(id);
    const ArcId in = under_in_.at(c);
    return Crossing{over_arc_.at(c), in, ArcId{in.component, in.arc + 1}, signs_.at(c)};
}

std::vector<Crossing> StringLinkDiagram::crossings() const {
    std::vector<Crossing> out;
    out.reserve(signs_.size());
    for (int c = 0; c < crossing_count(); ++c) out.push_back(crossing(c));
    return out;
}

bool StringLinkDiagram::is_self_crossing(int id) const {
    const auto c = static_cast<std::size_t>(id);
    return over_arc_.at(c).component == under_in_.at(c).component;
}

StringLinkDiagram braid_to_diagram(const BraidWord& b) {
    if (!b.is_pure()) {
        throw PreconditionError(
            "braid is not pure: strands do not return to their starting positions");
    }
    const int m = b.strand_count();
    std::vector<int> signs;
    std::vector<StringLinkDiagram::Path> paths(static_cast<std::size_t>(m));
    std::vector<int> strand_at(static_cast<std::size_t>(m) + 1);
    std::iota(strand_at.begin(), strand_at.end(), 0);

    int id = 0;
    for (const BraidLetter& l : b.letters()) {
        const auto p = static_cast<std::size_t>(l.position);
        // Positive letter: the strand at `position` passes over its
        // right-hand neighbour; negative: the neighbour passes over.
        const int over = l.sign > 0 ? strand_at[p] : strand_at[p + 1];
        const int under = l.sign > 0 ? strand_at[p + 1] : strand_at[p];
        signs.push_back(l.sign);
        paths[static_cast<std::size_t>(over - 1)].push_back({id, true});
        paths[static_cast<std::size_t>(under - 1)].push_back({id, false});
        std::swap(strand_at[p], strand_at[p + 1]);
        ++id;
    }
    return StringLinkDiagram::from_paths(m, std::move(signs), std::move(paths));
}

StringLinkDiagram winding_to_diagram(const WindingWord& w, int component_count) {
    const int m = component_count;
    if (m < 2) throw PreconditionError("winding diagrams require at least 2 components");
    if (w.carrier < 1 || w.carrier > m) throw PreconditionError("carrier index out of range");
    for (const auto& l : w.word.letters()) {
        if (l.generator == w.carrier) {
            throw PreconditionError("winding word must not mention the carrier");
        }
        if (l.generator > m) throw PreconditionError("winding word generator out of range");
    }

    std::vector<int> signs;
    std::vector<StringLinkDiagram::Path> paths(static_cast<std::size_t>(m));
    auto& carrier_path = paths[static_cast<std::size_t>(w.carrier - 1)];

    int id = 0;
    for (const auto& l : w.word.letters()) {
        const int sign = l.exponent > 0 ? 1 : -1;
        for (int i = 0; i < std::abs(l.exponent); ++i) {
            // One hook: the carrier dips under strand j, loops, and returns
            // over it; both crossings carry the letter's sign.
            auto& strand_path = paths[static_cast<std::size_t>(l.generator - 1)];
            signs.push_back(sign);  // carrier under, strand j over
            carrier_path.push_back({id, false});
            strand_path.push_back({id, true});
            ++id;
            signs.push_back(sign);  // carrier over, strand j under
            carrier_path.push_back({id, true});
            strand_path.push_back({id, false});
            ++id;
        }
    }
    return StringLinkDiagram::from_paths(m, std::move(signs), std::move(paths));
}

StringLinkDiagram stack(const StringLinkDiagram& a, const StringLinkDiagram& b) {
    if (a.component_count() != b.component_count()) {
        throw PreconditionError("stacking requires equal component counts");
    }
    std::vector<int> signs;
    signs.reserve(static_cast<std::size_t>(a.crossing_count() + b.crossing_count()));
    for (int c = 0; c < a.crossing_count(); ++c) signs.push_back(a.crossing_sign(c));
    for (int c = 0; c < b.crossing_count(); ++c) signs.push_back(b.crossing_sign(c));

    std::vector<StringLinkDiagram::Path> paths(static_cast<std::size_t>(a.component_count()));
    const int shift = a.crossing_count();
    for (int i = 0; i < a.component_count(); ++i) {
        const auto ii = static_cast<std::size_t>(i);
        paths[ii] = a.paths()[ii];
        for (const auto& p : b.paths()[ii]) paths[ii].push_back({p.crossing + shift, p.over});
    }
    return StringLinkDiagram::from_paths(a.component_count(), std::move(signs), std::move(paths));
}

StringLinkDiagram self_crossing_change(const StringLinkDiagram& d, int crossing_id) {
    if (crossing_id < 0 || crossing_id >= d.crossing_count()) {
        throw PreconditionError("crossing id out of range");
    }
    if (!d.is_self_crossing(crossing_id)) {
        throw PreconditionError(
            "crossing joins two distinct components; only self-crossings may be flipped");
    }
    std::vector<int> signs;
    signs.reserve(static_cast<std::size_t>(d.crossing_count()));
    for (int c = 0; c < d.crossing_count(); ++c) signs.push_back(d.crossing_sign(c));
    signs[static_cast<std::size_t>(crossing_id)] *= -1;

    std::vector<StringLinkDiagram::Path> paths = d.paths();
    for (auto& path : paths) {
        for (auto& p : path) {
            if (p.crossing == crossing_id) p.over = !p.over;
        }
    }
    return StringLinkDiagram::from_paths(d.component_count(), std::move(signs), std::move(paths));
}

std::ostream& operator<<(std::ostream& os, const ArcId& a) {
    return os << '(' << a.component << ',' << a.arc << ')';
}

}  // namespace milnor
