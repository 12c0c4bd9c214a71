#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "milnor/braid.hpp"
#include "milnor/classify.hpp"
#include "milnor/errors.hpp"
#include "milnor/json_io.hpp"
#include "test_support.hpp"

using namespace milnor;
using milnor::testing::Rng;

namespace {

std::vector<std::vector<int>> values_of(const std::vector<Injection>& v) {
    std::vector<std::vector<int>> out;
    for (const Injection& pi : v) out.push_back(pi.values());
    return out;
}

}  // namespace

TEST_CASE("admissible injections") {
    CHECK(values_of(enumerate_F(2, 2)) == std::vector<std::vector<int>>{{1, 2}});
    CHECK(values_of(enumerate_F(3, 2)) ==
          std::vector<std::vector<int>>{{1, 2}, {1, 3}, {2, 3}});
    CHECK(values_of(enumerate_F(3, 3)) == std::vector<std::vector<int>>{{1, 2, 3}});
    CHECK(values_of(enumerate_F(4, 3)) ==
          std::vector<std::vector<int>>{{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}});

    CHECK_THROWS_AS(enumerate_F(3, 1), PreconditionError);
    CHECK_THROWS_AS(enumerate_F(3, 4), PreconditionError);
    CHECK_THROWS_AS(Injection({2, 1}), PreconditionError);
    CHECK_THROWS_AS(Injection({1, 1}), PreconditionError);
    CHECK_THROWS_AS(Injection({3, 1, 4}), PreconditionError);
}

TEST_CASE("injection counts match the closed formula") {
    auto fact = [](int n) {
        long long f = 1;
        for (int i = 2; i <= n; ++i) f *= i;
        return f;
    };
    auto binom = [](int n, int k) {
        long long b = 1;
        for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
        return b;
    };
    for (int m = 2; m <= 6; ++m) {
        Int total = 0;
        for (int k = 2; k <= m; ++k) {
            const auto f = enumerate_F(m, k);
            CHECK(static_cast<long long>(f.size()) == fact(k - 2) * binom(m, k));
            total += static_cast<long long>(f.size());
        }
        CHECK(total == s_value(m));
        CHECK(canonical_injections(m).size() == total);
    }
}

TEST_CASE("s values") {
    CHECK(s_value(1) == 0);
    CHECK(s_value(2) == 1);
    CHECK(s_value(3) == 4);
    CHECK(s_value(4) == 12);
    CHECK(s_value(5) == 36);
}

TEST_CASE("generator windings") {
    const StringLinkDiagram v12 = generator_V(Injection({1, 2}), 2);
    CHECK(mu(v12, {1, 2}) == 1);

    const StringLinkDiagram v123 = generator_V(Injection({1, 2, 3}), 3);
    CHECK(mu(v123, {1, 2, 3}) == 1);
    for (int i = 1; i <= 3; ++i) {
        for (int j = 1; j <= 3; ++j) {
            if (i != j) CHECK(mu(v123, {i, j}) == 0);
        }
    }

    const StringLinkDiagram padded = generator_V(Injection({1, 2, 3}), 4);
    CHECK(padded.arcs_per_component(4) == 1);
    CHECK(mu(padded, {1, 2, 3}) == 1);
    CHECK(mu(padded, {1, 2, 4}) == 0);
    CHECK(mu(padded, {1, 4, 2, 3}) == 0);

    CHECK_THROWS_AS(generator_V(Injection({1, 2, 3}), 2), PreconditionError);
}

TEST_CASE("generator matrices are the identity in this convention") {
    const GeneratorMatrix& g21 = generator_matrix(2, 1);
    CHECK(g21.mu == IntMatrix{{1}});

    const GeneratorMatrix& g31 = generator_matrix(3, 1);
    CHECK(g31.mu == IntMatrix{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});

    const GeneratorMatrix& g32 = generator_matrix(3, 2);
    CHECK(g32.mu == IntMatrix{{1}});

    for (int m = 2; m <= 4; ++m) {
        for (int k = 1; k <= m - 1; ++k) {
            const Int det = determinant(generator_matrix(m, k).mu);
            CHECK((det == 1 || det == -1));
        }
    }
    CHECK_THROWS_AS(generator_matrix(3, 3), PreconditionError);
}

TEST_CASE("unimodular solver") {
    CHECK(determinant({{2, 0}, {0, 3}}) == 6);
    CHECK(determinant({{1, 2}, {2, 4}}) == 0);
    CHECK(determinant({}) == 1);
    const IntMatrix m{{1, 2, 0}, {0, 1, 5}, {0, 0, 1}};
    const std::vector<Int> rhs{3, 7, -2};
    const std::vector<Int> x = solve_unimodular(m, rhs);
    for (std::size_t r = 0; r < 3; ++r) {
        Int acc = 0;
        for (std::size_t c = 0; c < 3; ++c) acc += m[r][c] * x[c];
        CHECK(acc == rhs[r]);
    }
    CHECK_THROWS_AS(solve_unimodular({{2}}, {1}), InternalInconsistencyError);
}

TEST_CASE("generator matrix disk cache round-trips") {
    // Uses (m, k) pairs no other test touches, so the in-process cache is
    // cold and the build really goes through the directory.
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "milnor_cache_test";
    fs::remove_all(dir);
    set_generator_matrix_cache_dir(dir.string());
    const GeneratorMatrix fresh = generator_matrix(5, 1);
    CHECK(fs::exists(dir / "generator_matrix_v1_m5_k1.json"));
    CHECK(fresh.injections.size() == 10);

    // A corrupt file must be ignored and rebuilt.
    {
        std::ofstream out(dir / "generator_matrix_v1_m5_k2.json");
        out << "{\"version\": 99}\n";
    }
    const GeneratorMatrix& redone = generator_matrix(5, 2);
    const Int det = determinant(redone.mu);
    CHECK((det == 1 || det == -1));
    set_generator_matrix_cache_dir(std::nullopt);
    fs::remove_all(dir);
    CHECK(fresh.mu == generator_matrix(5, 1).mu);
}

TEST_CASE("canonical forms of basic inputs") {
    for (int m : {1, 2, 3}) {
        const CanonicalForm f = canonical_form(StringLinkDiagram::trivial(m), 3);
        CHECK(f == identity_form(m, 3));
    }

    const CanonicalForm s8 = canonical_form(braid_to_diagram(parse_braid("m=2: s1^8")), 3);
    CHECK(s8.exponents == std::vector<std::int64_t>{1});  // 4 mod 3

    const CanonicalForm borr = canonical_form(testing::borromean(), 2);
    CHECK(borr.exponents == std::vector<std::int64_t>{0, 0, 0, 1});

    CHECK_THROWS_AS(canonical_form(StringLinkDiagram::trivial(2), 0), PreconditionError);
}

TEST_CASE("canonical form JSON") {
    const CanonicalForm borr = canonical_form(testing::borromean(), 2);
    const Json j = form_to_json(borr);
    CHECK(j.at("m") == 3);
    CHECK(j.at("n") == 2);
    REQUIRE(j.at("exponents").size() == 4);
    CHECK(j["exponents"][0]["pi"].get<std::vector<int>>() == std::vector<int>{1, 2});
    CHECK(j["exponents"][3]["pi"].get<std::vector<int>>() == std::vector<int>{1, 2, 3});
    CHECK(j["exponents"][3]["y"] == 1);
}

TEST_CASE("representatives realize their forms") {
    Rng rng(79);
    for (int it = 0; it < 12; ++it) {
        const int m = testing::pick(rng, 2, 3);
        const std::int64_t n = testing::pick(rng, 2, 4);
        CanonicalForm f = identity_form(m, n);
        for (auto& y : f.exponents) y = testing::pick(rng, 0, static_cast<int>(n) - 1);
        CHECK(canonical_form(representative(f), n) == f);
    }
}

TEST_CASE("equivalence decision") {
    const auto s4 = braid_to_diagram(parse_braid("m=2: s1^4"));
    const auto triv2 = StringLinkDiagram::trivial(2);
    const EquivalenceResult same = equivalent_2n_lh(s4, triv2, 2);
    CHECK(same.equivalent);
    CHECK_FALSE(same.witness.has_value());

    const EquivalenceResult diff = equivalent_2n_lh(testing::borromean(),
                                                    StringLinkDiagram::trivial(3), 2);
    CHECK_FALSE(diff.equivalent);
    REQUIRE(diff.witness.has_value());
    CHECK(*diff.witness == Sequence{1, 2, 3});

    Rng rng(83);
    for (int it = 0; it < 8; ++it) {
        const int m = testing::pick(rng, 2, 3);
        const StringLinkDiagram d = testing::random_diagram(rng, m, 8);
        CHECK(equivalent_2n_lh(d, d, testing::pick(rng, 1, 4)).equivalent);
    }

    CHECK_THROWS_AS(equivalent_2n_lh(s4, StringLinkDiagram::trivial(3), 2), PreconditionError);
}

TEST_CASE("class arithmetic") {
    const auto s4 = braid_to_diagram(parse_braid("m=2: s1^4"));
    const CanonicalForm f = canonical_form(s4, 3);
    const CanonicalForm id = identity_form(2, 3);
    CHECK(class_multiply(f, id) == f);
    CHECK(class_multiply(id, f) == f);

    CanonicalForm one = identity_form(2, 3);
    one.exponents[0] = 1;
    CHECK(class_multiply(one, one).exponents == std::vector<std::int64_t>{2});

    const CanonicalForm v = canonical_form(generator_V(Injection({1, 2, 3}), 3), 2);
    CHECK(class_multiply(v, v) == identity_form(3, 2));

    CHECK_THROWS_AS(class_multiply(f, identity_form(2, 4)), PreconditionError);
    CHECK_THROWS_AS(class_multiply(f, identity_form(3, 3)), PreconditionError);
}

TEST_CASE("class inverses") {
    CHECK(class_inverse(identity_form(3, 2)) == identity_form(3, 2));

    CanonicalForm two = identity_form(2, 5);
    two.exponents[0] = 2;
    CHECK(class_inverse(two).exponents == std::vector<std::int64_t>{3});

    const CanonicalForm anything = canonical_form(testing::borromean(), 1);
    CHECK(class_inverse(anything) == identity_form(3, 1));

    Rng rng(89);
    for (int it = 0; it < 6; ++it) {
        const int m = testing::pick(rng, 2, 3);
        const std::int64_t n = testing::pick(rng, 2, 3);
        const CanonicalForm f = canonical_form(testing::random_diagram(rng, m, 6), n);
        CHECK(class_multiply(f, class_inverse(f)) == identity_form(m, n));
    }
}

TEST_CASE("classes multiply like stacked diagrams") {
    Rng rng(103);
    for (int it = 0; it < 10; ++it) {
        const int m = testing::pick(rng, 2, 3);
        const std::int64_t n = testing::pick(rng, 2, 4);
        const StringLinkDiagram a = testing::random_diagram(rng, m, 8);
        const StringLinkDiagram b = testing::random_diagram(rng, m, 8);
        CHECK(canonical_form(stack(a, b), n) ==
              class_multiply(canonical_form(a, n), canonical_form(b, n)));
    }
}

TEST_CASE("inverse braids give inverse classes") {
    Rng rng(107);
    for (int it = 0; it < 10; ++it) {
        const int m = testing::pick(rng, 2, 3);
        const std::int64_t n = testing::pick(rng, 2, 4);
        const BraidWord b = testing::random_pure_braid(rng, m, 10);
        const CanonicalForm f = canonical_form(braid_to_diagram(b), n);
        const CanonicalForm g = canonical_form(braid_to_diagram(b.inverse()), n);
        CHECK(class_multiply(f, g) == identity_form(m, n));
        CHECK(class_inverse(f) == g);
    }
}

TEST_CASE("generator classes have order n") {
    for (int m = 2; m <= 3; ++m) {
        for (std::int64_t n = 2; n <= 4; ++n) {
            for (const Injection& pi : canonical_injections(m)) {
                const CanonicalForm v = canonical_form(generator_V(pi, m), n);
                CanonicalForm acc = v;
                std::int64_t order = 1;
                while (acc != identity_form(m, n)) {
                    acc = class_multiply(acc, v);
                    ++order;
                    REQUIRE(order <= n);
                }
                CHECK(order == n);
            }
        }
    }
}

TEST_CASE("group orders") {
    CHECK(group_order(3, 2) == 16);
    CHECK(group_order(2, 7) == 7);
    CHECK(group_order(4, 3) == 531441);
    CHECK(group_order(1, 9) == 1);
    CHECK(group_order(5, 1) == 1);
    CHECK_THROWS_AS(group_order(0, 2), PreconditionError);
}

TEST_CASE("canonical soundness on random braids") {
    Rng rng(97);
    for (int it = 0; it < 15; ++it) {
        const int m = testing::pick(rng, 2, 3);
        const std::int64_t n = testing::pick(rng, 2, 3);
        const StringLinkDiagram d = braid_to_diagram(testing::random_pure_braid(rng, m, 12));
        const CanonicalForm f = canonical_form(d, n);
        const StringLinkDiagram rep = representative(f);
        const MilnorTable td = mu_table(d, m, true);
        const MilnorTable tr = mu_table(rep, m, true);
        for (const Injection& pi : canonical_injections(m)) {
            CHECK(positive_mod(td.at(pi.sequence()) - tr.at(pi.sequence()), n) == 0);
        }
        CHECK(equivalent_2n_lh(d, rep, n).equivalent);
    }
}

TEST_CASE("moves do not change the class") {
    Rng rng(101);
    for (int it = 0; it < 10; ++it) {
        const int m = testing::pick(rng, 2, 3);
        const std::int64_t n = testing::pick(rng, 2, 3);
        const BraidWord b = testing::random_pure_braid(rng, m, 8);
        const BraidWord moved = insert_2n_move(b, testing::pick(rng, 1, m - 1),
                                               static_cast<int>(n),
                                               testing::pick(rng, 0, 1) ? 1 : -1);
        CHECK(equivalent_2n_lh(braid_to_diagram(b), braid_to_diagram(moved), n).equivalent);
    }
    for (int it = 0; it < 10; ++it) {
        const int m = testing::pick(rng, 2, 3);
        const std::int64_t n = testing::pick(rng, 2, 3);
        const StringLinkDiagram d = testing::random_diagram(rng, m, 8);
        for (int c = 0; c < d.crossing_count(); ++c) {
            if (!d.is_self_crossing(c)) continue;
            CHECK(equivalent_2n_lh(d, self_crossing_change(d, c), n).equivalent);
            break;
        }
    }
}

TEST_CASE("braid and winding constructions of the same link agree") {
    // (s1 s2^-1)^3 closes to the Borromean rings with the opposite sign
    // convention from the winding realization: mu(123) = -1 instead of +1.
    const StringLinkDiagram braid =
        braid_to_diagram(parse_braid("m=3: s1 s2^-1 s1 s2^-1 s1 s2^-1"));
    CHECK(mu(braid, {1, 2, 3}) == -1);
    CHECK(mu(braid, {2, 1, 3}) == 1);
    for (int i = 1; i <= 3; ++i) {
        for (int j = 1; j <= 3; ++j) {
            if (i != j) CHECK(mu(braid, {i, j}) == 0);
        }
    }
    // -1 and +1 agree mod 2 but not mod 3.
    CHECK(equivalent_2n_lh(braid, testing::borromean(), 2).equivalent);
    const EquivalenceResult r = equivalent_2n_lh(braid, testing::borromean(), 3);
    CHECK_FALSE(r.equivalent);
    REQUIRE(r.witness.has_value());
    CHECK(*r.witness == Sequence{1, 2, 3});
}

TEST_CASE("link-level triviality") {
    const TrivialityReport yes = link_trivial_2n_lh(StringLinkDiagram::trivial(3), 5);
    CHECK(yes.trivial);
    CHECK(yes.failures.empty());

    const TrivialityReport no = link_trivial_2n_lh(testing::borromean(), 2);
    CHECK_FALSE(no.trivial);
    bool witnessed = false;
    for (const auto& f : no.failures) {
        if (f.sequence == Sequence{1, 2, 3}) {
            witnessed = true;
            CHECK(f.delta_n == 2);
            CHECK(f.mu_bar == 1);
        }
    }
    CHECK(witnessed);

    CHECK(link_trivial_2n_lh(testing::borromean(), 1).trivial);
}

TEST_CASE("link-level equivalence") {
    CHECK(link_equivalent_2n_lh(StringLinkDiagram::trivial(3), StringLinkDiagram::trivial(3), 4));
    CHECK_FALSE(link_equivalent_2n_lh(testing::borromean(), StringLinkDiagram::trivial(3), 2));

    // A pair with lk = 1 somewhere makes delta_n = 1 != n, so the length-m
    // criterion does not decide and the call must refuse.
    const StringLinkDiagram hook = braid_to_diagram(parse_braid("m=3: s1^2"));
    CHECK_THROWS_AS(link_equivalent_2n_lh(hook, StringLinkDiagram::trivial(3), 2),
                    HypothesisViolationError);
    try {
        link_equivalent_2n_lh(hook, StringLinkDiagram::trivial(3), 2);
    } catch (const HypothesisViolationError& e) {
        CHECK(e.sequence().size() == 3);
    }
}
