#include "milnor/wirtinger.hpp"

#include "milnor/errors.hpp"

namespace milnor {

std::vector<WirtingerLetter> WirtingerData::prefix(int component, int length) const {
    const auto& word = u.at(static_cast<std::size_t>(component - 1));
    if (length < 0 || length > static_cast<int>(word.size())) {
        throw PreconditionError("prefix length out of range");
    }
    return {word.begin(), word.begin() + length};
}

WirtingerData wirtinger(const StringLinkDiagram& d) {
    WirtingerData out;
    out.component_count = d.component_count();
    out.arcs_per_component.reserve(static_cast<std::size_t>(d.component_count()));
    out.self_writhe.reserve(static_cast<std::size_t>(d.component_count()));
    out.u.resize(static_cast<std::size_t>(d.component_count()));

    for (int i = 1; i <= d.component_count(); ++i) {
        out.arcs_per_component.push_back(d.arcs_per_component(i));
        out.self_writhe.push_back(d.self_writhe(i));
        auto& word = out.u[static_cast<std::size_t>(i - 1)];
        for (const auto& p : d.paths()[static_cast<std::size_t>(i - 1)]) {
            if (p.over) continue;
            const Crossing c = d.crossing(p.crossing);
            word.push_back(WirtingerLetter{c.over_arc, c.sign});
        }
    }
    return out;
}

}  // namespace milnor
