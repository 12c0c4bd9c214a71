#include "milnor/invariants.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>
#include <thread>

#include "milnor/errors.hpp"

namespace milnor {

namespace {

std::string seq_str(const Sequence& seq) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (i) os << ',';
        os << seq[i];
    }
    os << ')';
    return os.str();
}

void check_indices(const Sequence& seq, int m) {
    if (seq.empty()) throw PreconditionError("sequences must be nonempty");
    for (int idx : seq) {
        if (idx < 1 || idx > m) {
            throw PreconditionError("sequence index out of range 1..m: " + seq_str(seq));
        }
    }
}

TruncatedSeries meridian(int component, int bound) {
    return TruncatedSeries::one(bound) + TruncatedSeries::variable(component, bound);
}

}  // namespace

bool is_non_repeated(const Sequence& seq) {
    std::set<int> seen(seq.begin(), seq.end());
    return seen.size() == seq.size();
}

int EtaTable::flat(ArcId arc) const {
    const auto c = static_cast<std::size_t>(arc.component - 1);
    if (arc.component < 1 || c >= offsets_.size()) {
        throw PreconditionError("arc component out of range");
    }
    if (arc.arc < 1 || arc.arc > arcs_per_component_[c]) {
        throw PreconditionError("arc index out of range");
    }
    return offsets_[c] + arc.arc - 1;
}

const TruncatedSeries& EtaTable::at(ArcId arc) const {
    return entries_[static_cast<std::size_t>(flat(arc))];
}

EtaTable::EtaTable(const WirtingerData& w, int depth) : depth_(depth) {
    if (depth < 1) throw PreconditionError("tower depth must be >= 1");
    const int m = w.component_count;
    arcs_per_component_ = w.arcs_per_component;
    offsets_.resize(static_cast<std::size_t>(m));
    int total = 0;
    for (int i = 0; i < m; ++i) {
        offsets_[static_cast<std::size_t>(i)] = total;
        total += arcs_per_component_[static_cast<std::size_t>(i)];
    }

    // Depth 1 collapses every arc to its component's meridian.
    entries_.reserve(static_cast<std::size_t>(total));
    for (int i = 1; i <= m; ++i) {
        for (int j = 0; j < arcs_per_component_[static_cast<std::size_t>(i - 1)]; ++j) {
            entries_.push_back(meridian(i, depth));
        }
    }

    for (int step = 2; step <= depth; ++step) {
        std::vector<TruncatedSeries> prev = std::move(entries_);
        entries_.clear();
        entries_.reserve(static_cast<std::size_t>(total));
        std::vector<std::optional<TruncatedSeries>> inv(static_cast<std::size_t>(total));
        auto image = [&](const WirtingerLetter& l) -> const TruncatedSeries& {
            const auto f = static_cast<std::size_t>(flat(l.arc));
            if (l.sign > 0) return prev[f];
            if (!inv[f]) inv[f] = prev[f].inverse();
            return *inv[f];
        };
        auto image_inv = [&](const WirtingerLetter& l) -> const TruncatedSeries& {
            const auto f = static_cast<std::size_t>(flat(l.arc));
            if (l.sign < 0) return prev[f];
            if (!inv[f]) inv[f] = prev[f].inverse();
            return *inv[f];
        };

        for (int i = 1; i <= m; ++i) {
            const auto& word = w.u[static_cast<std::size_t>(i - 1)];
            const TruncatedSeries mer = meridian(i, depth);
            TruncatedSeries v = TruncatedSeries::one(depth);
            TruncatedSeries v_inv = TruncatedSeries::one(depth);
            entries_.push_back(mer);  // arc (i,1) is fixed by the tower
            for (const WirtingerLetter& l : word) {
                v = v * image(l);
                v_inv = image_inv(l) * v_inv;
                entries_.push_back(v_inv * mer * v);
            }
        }
    }
}

TruncatedSeries longitude_series(const WirtingerData& w, const EtaTable& eta, int component) {
    if (component < 1 || component > w.component_count) {
        throw PreconditionError("component index out of range");
    }
    const int q = eta.depth();
    const int writhe = w.self_writhe[static_cast<std::size_t>(component - 1)];
    TruncatedSeries s = meridian(component, q).pow(-writhe);
    for (const WirtingerLetter& l : w.u[static_cast<std::size_t>(component - 1)]) {
        const TruncatedSeries& img = eta.at(l.arc);
        s = s * (l.sign > 0 ? img : img.inverse());
    }
    return s.truncated(q - 1);
}

TruncatedSeries longitude_series(const StringLinkDiagram& d, int component, int depth) {
    if (depth < 2) throw PreconditionError("longitude series require depth >= 2");
    const WirtingerData w = wirtinger(d);
    const EtaTable eta(w, depth);
    return longitude_series(w, eta, component);
}

Int mu(const StringLinkDiagram& d, const Sequence& seq) {
    check_indices(seq, d.component_count());
    if (seq.size() == 1) return 0;
    const int depth = static_cast<int>(seq.size()) + 1;
    const TruncatedSeries lambda = longitude_series(d, seq.back(), depth);
    const Sequence prefix(seq.begin(), seq.end() - 1);
    return lambda.coefficient(Monomial::from_indices(prefix));
}

namespace {

void enumerate_prefixes(int m, int max_prefix, bool non_repeated, int last_index,
                        const TruncatedSeries& lambda, Sequence& prefix,
                        std::map<Sequence, Int, SequenceLess>& out) {
    if (!prefix.empty()) {
        Sequence seq = prefix;
        seq.push_back(last_index);
        out.emplace(std::move(seq), lambda.coefficient(Monomial::from_indices(prefix)));
    }
    if (static_cast<int>(prefix.size()) == max_prefix) return;
    for (int idx = 1; idx <= m; ++idx) {
        if (non_repeated) {
            if (idx == last_index) continue;
            if (std::find(prefix.begin(), prefix.end(), idx) != prefix.end()) continue;
        }
        prefix.push_back(idx);
        enumerate_prefixes(m, max_prefix, non_repeated, last_index, lambda, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

MilnorTable mu_table(const StringLinkDiagram& d, int max_length, bool non_repeated_only,
                     int threads) {
    const int m = d.component_count();
    if (max_length < 2) throw PreconditionError("table max length must be >= 2");
    if (max_length + 1 > Monomial::kMaxDegree) {
        throw PreconditionError("table max length exceeds the supported maximum of 15");
    }
    if (non_repeated_only && max_length > m) {
        throw PreconditionError("non-repeated sequences cannot be longer than m");
    }

    const WirtingerData w = wirtinger(d);
    const EtaTable eta(w, max_length + 1);

    MilnorTable table;
    table.max_length = max_length;
    table.non_repeated_only = non_repeated_only;

    std::vector<std::map<Sequence, Int, SequenceLess>> partial(static_cast<std::size_t>(m));
    auto run = [&](int begin, int end) {
        for (int i = begin + 1; i <= end; ++i) {
            const TruncatedSeries lambda = longitude_series(w, eta, i);
            Sequence prefix;
            enumerate_prefixes(m, max_length - 1, non_repeated_only, i, lambda, prefix,
                               partial[static_cast<std::size_t>(i - 1)]);
            partial[static_cast<std::size_t>(i - 1)].emplace(Sequence{i}, 0);
        }
    };

    const int workers = std::clamp(threads, 1, m);
    if (workers <= 1) {
        run(0, m);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < workers; ++t) {
            const int begin = m * t / workers;
            const int end = m * (t + 1) / workers;
            pool.emplace_back(run, begin, end);
        }
        for (auto& t : pool) t.join();
    }

    for (auto& chunk : partial) table.entries.merge(chunk);
    return table;
}

const Int& MilnorTable::at(const Sequence& seq) const {
    auto it = entries.find(seq);
    if (it == entries.end()) {
        throw PreconditionError("sequence missing from table: " + seq_str(seq));
    }
    return it->second;
}

Int delta(const MilnorTable& t, const Sequence& seq) {
    if (seq.empty()) throw PreconditionError("sequences must be nonempty");
    if (seq.size() > 16) throw PreconditionError("sequence too long");
    const int len = static_cast<int>(seq.size());
    std::set<Sequence> subs;
    // Keep-masks with at least one index removed and at least one kept.
    for (unsigned mask = 1; mask + 1 < (1u << len); ++mask) {
        Sequence kept;
        for (int i = 0; i < len; ++i) {
            if (mask & (1u << i)) kept.push_back(seq[static_cast<std::size_t>(i)]);
        }
        Sequence rotated = kept;
        for (std::size_t r = 0; r < kept.size(); ++r) {
            subs.insert(rotated);
            std::rotate(rotated.begin(), rotated.begin() + 1, rotated.end());
        }
    }
    Int g = 0;
    for (const Sequence& j : subs) g = boost::multiprecision::gcd(g, t.at(j));
    return g;
}

LinkInvariants link_invariants(const StringLinkDiagram& d, const Sequence& seq, const Int& n) {
    if (n < 1) throw PreconditionError("link invariants require n >= 1");
    check_indices(seq, d.component_count());
    if (seq.size() == 1) {
        // mu(i) = 0 and the gcd of an empty set is 0, so delta_n = n.
        return LinkInvariants{n, 0};
    }
    const MilnorTable t = mu_table(d, static_cast<int>(seq.size()), false);
    const Int dl = delta(t, seq);
    const Int dn = boost::multiprecision::gcd(dl, n);
    const Int value = t.at(seq);
    return LinkInvariants{dn, dn == 0 ? value : positive_mod(value, dn)};
}

}  // namespace milnor
