#include "milnor/classify.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <sstream>
#include <utility>

#if __has_include(<nlohmann/json.hpp>)
#include <nlohmann/json.hpp>
#else
#include "json.hpp"
#endif

#include "milnor/errors.hpp"
#include "milnor/magnus.hpp"

namespace milnor {

namespace {

Int factorial(int n) {
    Int f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

Int binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Int b = 1;
    for (int i = 1; i <= k; ++i) {
        b *= n - k + i;
        b /= i;
    }
    return b;
}

std::int64_t to_int64(const Int& v) { return v.convert_to<std::int64_t>(); }

}  // namespace

Injection::Injection(std::vector<int> values) : values_(std::move(values)) {
    const int k = static_cast<int>(values_.size());
    if (k < 2) throw PreconditionError("injections need at least two values");
    std::vector<int> sorted = values_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw PreconditionError("injection values must be distinct");
    }
    if (sorted.front() < 1) throw PreconditionError("injection values must be >= 1");
    if (values_[static_cast<std::size_t>(k - 2)] != sorted[static_cast<std::size_t>(k - 2)] ||
        values_[static_cast<std::size_t>(k - 1)] != sorted[static_cast<std::size_t>(k - 1)]) {
        throw PreconditionError(
            "the last two values of an admissible injection must be the two largest, increasing");
    }
}

std::vector<Injection> enumerate_F(int m, int k) {
    if (k < 2 || k > m) throw PreconditionError("enumerate_F requires 2 <= k <= m");
    std::vector<std::vector<int>> results;

    std::vector<int> support(static_cast<std::size_t>(k));
    // Iterate over k-element subsets of 1..m in ascending order.
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i + 1;
    for (;;) {
        for (int i = 0; i < k; ++i) support[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i)];
        std::vector<int> middle(support.begin(), support.end() - 2);
        std::sort(middle.begin(), middle.end());
        do {
            std::vector<int> values = middle;
            values.push_back(support[static_cast<std::size_t>(k - 2)]);
            values.push_back(support[static_cast<std::size_t>(k - 1)]);
            results.push_back(std::move(values));
        } while (std::next_permutation(middle.begin(), middle.end()));

        int pos = k - 1;
        while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == m - (k - 1 - pos)) --pos;
        if (pos < 0) break;
        ++idx[static_cast<std::size_t>(pos)];
        for (int i = pos + 1; i < k; ++i) {
            idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
        }
    }

    std::sort(results.begin(), results.end(), [k](const auto& a, const auto& b) {
        const auto ka = static_cast<std::size_t>(k);
        if (a[ka - 1] != b[ka - 1]) return a[ka - 1] < b[ka - 1];
        if (a[ka - 2] != b[ka - 2]) return a[ka - 2] < b[ka - 2];
        return a < b;
    });

    std::vector<Injection> out;
    out.reserve(results.size());
    for (auto& values : results) out.emplace_back(std::move(values));
    return out;
}

Int s_value(int m) {
    if (m < 1) throw PreconditionError("s_value requires m >= 1");
    Int s = 0;
    for (int r = 2; r <= m; ++r) s += factorial(r - 2) * binomial(m, r);
    return s;
}

StringLinkDiagram generator_V(const Injection& pi, int component_count) {
    const auto& v = pi.values();
    if (pi.carrier() > component_count) {
        throw PreconditionError("injection values exceed the component count");
    }
    // Right-normed commutator of the meridians pi(1), ..., pi(k-1); the
    // left-normed form does not give a unimodular level matrix.
    const int k = pi.k();
    GroupWord word = GroupWord::generator(v[static_cast<std::size_t>(k - 2)]);
    for (int t = k - 3; t >= 0; --t) {
        word = GroupWord::commutator(GroupWord::generator(v[static_cast<std::size_t>(t)]), word);
    }
    return winding_to_diagram(WindingWord{pi.carrier(), std::move(word)}, component_count);
}

namespace {

namespace fs = std::filesystem;
using CacheJson = nlohmann::ordered_json;

std::mutex g_cache_mutex;
std::map<std::pair<int, int>, std::unique_ptr<const GeneratorMatrix>> g_cache;
std::optional<std::string> g_cache_dir;

std::string cache_file_name(int m, int k) {
    return "generator_matrix_v1_m" + std::to_string(m) + "_k" + std::to_string(k) + ".json";
}

std::unique_ptr<GeneratorMatrix> load_cached_matrix(int m, int k,
                                                    const std::vector<Injection>& expected) {
    if (!g_cache_dir) return nullptr;
    const fs::path path = fs::path(*g_cache_dir) / cache_file_name(m, k);
    std::ifstream in(path);
    if (!in) return nullptr;
    CacheJson j;
    try {
        in >> j;
        if (j.at("version").get<int>() != 1) return nullptr;
        if (j.at("m").get<int>() != m || j.at("k").get<int>() != k) return nullptr;
        const auto& inj = j.at("injections");
        if (inj.size() != expected.size()) return nullptr;
        for (std::size_t i = 0; i < expected.size(); ++i) {
            if (inj[i].get<std::vector<int>>() != expected[i].values()) return nullptr;
        }
        auto out = std::make_unique<GeneratorMatrix>();
        out->m = m;
        out->k = k;
        out->injections = expected;
        for (const auto& row : j.at("matrix")) {
            std::vector<Int> r;
            for (const auto& cell : row) r.emplace_back(cell.get<std::string>());
            if (r.size() != expected.size()) return nullptr;
            out->mu.push_back(std::move(r));
        }
        if (out->mu.size() != expected.size()) return nullptr;
        const Int det = determinant(out->mu);
        if (det != 1 && det != -1) return nullptr;
        return out;
    } catch (const std::exception&) {
        return nullptr;
    }
}

void store_cached_matrix(const GeneratorMatrix& g) {
    if (!g_cache_dir) return;
    std::error_code ec;
    fs::create_directories(*g_cache_dir, ec);
    CacheJson j;
    j["version"] = 1;
    j["m"] = g.m;
    j["k"] = g.k;
    CacheJson inj = CacheJson::array();
    for (const Injection& pi : g.injections) inj.push_back(pi.values());
    j["injections"] = std::move(inj);
    CacheJson rows = CacheJson::array();
    for (const auto& row : g.mu) {
        CacheJson r = CacheJson::array();
        for (const Int& v : row) r.push_back(v.str());
        rows.push_back(std::move(r));
    }
    j["matrix"] = std::move(rows);
    std::ofstream out(fs::path(*g_cache_dir) / cache_file_name(g.m, g.k));
    if (out) out << j.dump(2) << '\n';
}

std::unique_ptr<GeneratorMatrix> build_generator_matrix(int m, int k) {
    auto out = std::make_unique<GeneratorMatrix>();
    out->m = m;
    out->k = k;
    out->injections = enumerate_F(m, k + 1);
    const std::size_t size = out->injections.size();
    out->mu.assign(size, std::vector<Int>(size));
    for (std::size_t col = 0; col < size; ++col) {
        const StringLinkDiagram d = generator_V(out->injections[col], m);
        const MilnorTable t = mu_table(d, k + 1, true);
        for (std::size_t row = 0; row < size; ++row) {
            out->mu[row][col] = t.at(out->injections[row].sequence());
        }
    }
    const Int det = determinant(out->mu);
    if (det != 1 && det != -1) {
        throw InternalInconsistencyError("generator matrix for m=" + std::to_string(m) +
                                         ", k=" + std::to_string(k) + " is not unimodular");
    }
    return out;
}

}  // namespace

void set_generator_matrix_cache_dir(std::optional<std::string> dir) {
    std::lock_guard lock(g_cache_mutex);
    g_cache_dir = std::move(dir);
}

const GeneratorMatrix& generator_matrix(int m, int k) {
    if (k < 1 || k > m - 1) throw PreconditionError("generator matrices need 1 <= k <= m-1");
    std::lock_guard lock(g_cache_mutex);
    auto it = g_cache.find({m, k});
    if (it != g_cache.end()) return *it->second;

    std::unique_ptr<GeneratorMatrix> built =
        load_cached_matrix(m, k, enumerate_F(m, k + 1));
    if (!built) {
        built = build_generator_matrix(m, k);
        store_cached_matrix(*built);
    }
    auto [pos, inserted] = g_cache.emplace(std::make_pair(m, k), std::move(built));
    return *pos->second;
}

std::vector<Injection> canonical_injections(int m) {
    std::vector<Injection> out;
    for (int k = 2; k <= m; ++k) {
        std::vector<Injection> level = enumerate_F(m, k);
        out.insert(out.end(), std::make_move_iterator(level.begin()),
                   std::make_move_iterator(level.end()));
    }
    return out;
}

CanonicalForm identity_form(int m, std::int64_t n) {
    if (m < 1) throw PreconditionError("forms require m >= 1");
    if (n < 1) throw PreconditionError("forms require n >= 1");
    CanonicalForm f;
    f.m = m;
    f.n = n;
    f.exponents.assign(canonical_injections(m).size(), 0);
    return f;
}

namespace {

void check_form_domain(const CanonicalForm& f) {
    if (f.exponents.size() != canonical_injections(f.m).size()) {
        throw PreconditionError("form exponent count does not match the injection domain");
    }
    for (std::int64_t y : f.exponents) {
        if (y < 0 || y >= f.n) throw PreconditionError("form exponents must lie in [0, n)");
    }
}

StringLinkDiagram append_level(StringLinkDiagram partial, const std::vector<Injection>& level,
                               const std::vector<std::int64_t>& exponents, int m) {
    for (std::size_t c = 0; c < level.size(); ++c) {
        if (exponents[c] == 0) continue;
        const StringLinkDiagram v = generator_V(level[c], m);
        for (std::int64_t t = 0; t < exponents[c]; ++t) partial = stack(partial, v);
    }
    return partial;
}

}  // namespace

CanonicalForm canonical_form(const StringLinkDiagram& d, std::int64_t n) {
    if (n < 1) throw PreconditionError("canonical forms require n >= 1");
    const int m = d.component_count();
    if (m < 1) throw PreconditionError("canonical forms require m >= 1");
    CanonicalForm f;
    f.m = m;
    f.n = n;
    if (m == 1) return f;

    const MilnorTable target = mu_table(d, m, true);
    StringLinkDiagram partial = StringLinkDiagram::trivial(m);
    for (int k = 1; k <= m - 1; ++k) {
        const GeneratorMatrix& g = generator_matrix(m, k);
        const MilnorTable pt = mu_table(partial, k + 1, true);
        std::vector<Int> defect;
        defect.reserve(g.injections.size());
        for (const Injection& pi : g.injections) {
            const Sequence seq = pi.sequence();
            defect.push_back(target.at(seq) - pt.at(seq));
        }
        const std::vector<Int> x = solve_unimodular(g.mu, defect);
        std::vector<std::int64_t> y;
        y.reserve(x.size());
        for (const Int& xi : x) y.push_back(to_int64(positive_mod(xi, n)));
        partial = append_level(std::move(partial), g.injections, y, m);
        f.exponents.insert(f.exponents.end(), y.begin(), y.end());
    }
    return f;
}

StringLinkDiagram representative(const CanonicalForm& f) {
    check_form_domain(f);
    StringLinkDiagram out = StringLinkDiagram::trivial(f.m);
    std::size_t offset = 0;
    for (int k = 2; k <= f.m; ++k) {
        const std::vector<Injection> level = enumerate_F(f.m, k);
        const std::vector<std::int64_t> y(f.exponents.begin() + static_cast<std::ptrdiff_t>(offset),
                                          f.exponents.begin() +
                                              static_cast<std::ptrdiff_t>(offset + level.size()));
        out = append_level(std::move(out), level, y, f.m);
        offset += level.size();
    }
    return out;
}

EquivalenceResult equivalent_2n_lh(const StringLinkDiagram& a, const StringLinkDiagram& b,
                                   std::int64_t n) {
    if (a.component_count() != b.component_count()) {
        throw PreconditionError("equivalence requires equal component counts");
    }
    const CanonicalForm fa = canonical_form(a, n);
    const CanonicalForm fb = canonical_form(b, n);
    if (fa == fb) return EquivalenceResult{true, std::nullopt};

    // Locate the first level where the forms differ; by unimodularity some
    // invariant of that level must already differ mod n.
    const int m = a.component_count();
    std::size_t offset = 0;
    for (int k = 2; k <= m; ++k) {
        const std::vector<Injection> level = enumerate_F(m, k);
        bool differs = false;
        for (std::size_t c = 0; c < level.size(); ++c) {
            if (fa.exponents[offset + c] != fb.exponents[offset + c]) {
                differs = true;
                break;
            }
        }
        if (differs) {
            const MilnorTable ta = mu_table(a, k, true);
            const MilnorTable tb = mu_table(b, k, true);
            for (const Injection& pi : level) {
                const Sequence seq = pi.sequence();
                if (positive_mod(ta.at(seq) - tb.at(seq), n) != 0) {
                    return EquivalenceResult{false, seq};
                }
            }
        }
        offset += level.size();
    }
    throw InternalInconsistencyError(
        "forms differ but no witness sequence was found; convention bug");
}

CanonicalForm class_multiply(const CanonicalForm& f, const CanonicalForm& g) {
    if (f.m != g.m || f.n != g.n) {
        throw PreconditionError("class operations require matching (m, n)");
    }
    check_form_domain(f);
    check_form_domain(g);
    return canonical_form(stack(representative(f), representative(g)), f.n);
}

CanonicalForm class_inverse(const CanonicalForm& f) {
    check_form_domain(f);
    CanonicalForm g = identity_form(f.m, f.n);
    // Clear one level at a time: a pure level-k correction does not disturb
    // shorter invariants of the product.
    std::size_t offset = 0;
    for (int k = 2; k <= f.m; ++k) {
        const std::size_t size = enumerate_F(f.m, k).size();
        const CanonicalForm r = class_multiply(f, g);
        CanonicalForm pure = identity_form(f.m, f.n);
        bool nonzero = false;
        for (std::size_t c = 0; c < size; ++c) {
            const std::int64_t y = (f.n - r.exponents[offset + c]) % f.n;
            pure.exponents[offset + c] = y;
            nonzero = nonzero || y != 0;
        }
        if (nonzero) g = class_multiply(g, pure);
        offset += size;
    }
    return g;
}

Int group_order(int m, const Int& n) {
    if (m < 1) throw PreconditionError("group order requires m >= 1");
    if (n < 1) throw PreconditionError("group order requires n >= 1");
    if (n == 1) return 1;
    const Int s = s_value(m);
    if (s > 1'000'000) throw PreconditionError("group order would be astronomically large");
    return boost::multiprecision::pow(n, s.convert_to<unsigned>());
}

namespace {

std::vector<Sequence> length_m_non_repeated(int m) {
    Sequence seq(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) seq[static_cast<std::size_t>(i)] = i + 1;
    std::vector<Sequence> out;
    do {
        out.push_back(seq);
    } while (std::next_permutation(seq.begin(), seq.end()));
    return out;
}

}  // namespace

TrivialityReport link_trivial_2n_lh(const StringLinkDiagram& d, std::int64_t n) {
    if (n < 1) throw PreconditionError("triviality tests require n >= 1");
    const int m = d.component_count();
    TrivialityReport report;
    if (m <= 1) {
        report.trivial = true;  // mu(1) = 0 and delta_n = n by convention
        return report;
    }
    const MilnorTable t = mu_table(d, m, true);
    const Int big_n = n;
    for (const Sequence& seq : length_m_non_repeated(m)) {
        const Int dl = delta(t, seq);
        const Int dn = boost::multiprecision::gcd(dl, big_n);
        const Int mu_bar = dn == 0 ? t.at(seq) : positive_mod(t.at(seq), dn);
        if (dn != big_n || mu_bar != 0) {
            report.failures.push_back(TrivialityReport::Failure{seq, dn, mu_bar});
        }
    }
    report.trivial = report.failures.empty();
    return report;
}

bool link_equivalent_2n_lh(const StringLinkDiagram& a, const StringLinkDiagram& b,
                           std::int64_t n) {
    if (n < 1) throw PreconditionError("link equivalence requires n >= 1");
    if (a.component_count() != b.component_count()) {
        throw PreconditionError("link equivalence requires equal component counts");
    }
    const int m = a.component_count();
    if (m <= 1) return true;
    const MilnorTable ta = mu_table(a, m, true);
    const MilnorTable tb = mu_table(b, m, true);
    const Int big_n = n;
    const std::vector<Sequence> seqs = length_m_non_repeated(m);
    for (const Sequence& seq : seqs) {
        if (boost::multiprecision::gcd(delta(ta, seq), big_n) != big_n) {
            throw HypothesisViolationError(
                "link comparison is undecided here: delta_n(I) != n for the first closure", seq);
        }
        if (boost::multiprecision::gcd(delta(tb, seq), big_n) != big_n) {
            throw HypothesisViolationError(
                "link comparison is undecided here: delta_n(I) != n for the second closure", seq);
        }
    }
    for (const Sequence& seq : seqs) {
        if (positive_mod(ta.at(seq) - tb.at(seq), big_n) != 0) return false;
    }
    return true;
}

std::ostream& operator<<(std::ostream& os, const Injection& pi) {
    os << '(';
    for (std::size_t i = 0; i < pi.values().size(); ++i) {
        if (i) os << ',';
        os << pi.values()[i];
    }
    return os << ')';
}

}  // namespace milnor
