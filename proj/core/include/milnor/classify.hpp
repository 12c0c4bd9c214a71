#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "milnor/diagram.hpp"
#include "milnor/int_matrix.hpp"
#include "milnor/invariants.hpp"

namespace milnor {

/// Injection pi: {1..k} -> {1..m} with pi(i) < pi(k-1) < pi(k) for all
/// i <= k-2; equivalently, the last two values are the two largest of the
/// image, in increasing order.
class Injection {
public:
    explicit Injection(std::vector<int> values);

    int k() const { return static_cast<int>(values_.size()); }
    const std::vector<int>& values() const { return values_; }
    int carrier() const { return values_.back(); }
    Sequence sequence() const { return values_; }

    bool operator==(const Injection&) const = default;

private:
    std::vector<int> values_;
};

/// All admissible injections {1..k} -> {1..m}, ordered lexicographically by
/// (pi(k), pi(k-1), pi(1..k-2)). The count is (k-2)! * C(m, k).
std::vector<Injection> enumerate_F(int m, int k);

/// s_m = sum_{r=2}^{m} (r-2)! * C(m, r); rank of the classification data.
Int s_value(int m);

/// Generator string link: the carrier pi(k) winds along the right-normed
/// commutator word [g_{pi(1)}, [g_{pi(2)}, [... , g_{pi(k-1)}]]]. All
/// non-repeated invariants of length < k vanish and the invariant of the
/// sequence pi(1)..pi(k) is exactly 1.
StringLinkDiagram generator_V(const Injection& pi, int component_count);

/// Level-k data: matrix of invariants mu_{V_pi}(pi'(1)..pi'(k+1)) over
/// F_{k+1} x F_{k+1}, with rows indexed by sequences pi' and columns by
/// generators pi. Construction verifies |det| = 1.
struct GeneratorMatrix {
    int m = 0;
    int k = 0;
    std::vector<Injection> injections;  // F_{k+1}, canonical order
    IntMatrix mu;                       // mu[row pi'][col pi]
};

/// Cached per (m, k); construction runs the invariant engine on every
/// generator. Throws InternalInconsistencyError if the matrix is not
/// unimodular.
const GeneratorMatrix& generator_matrix(int m, int k);

/// Enables on-disk persistence of generator matrices as versioned JSON
/// files in `dir` (pass std::nullopt to disable). Corrupt or stale files
/// are ignored and rewritten.
void set_generator_matrix_cache_dir(std::optional<std::string> dir);

/// Domain of a canonical form: F_2, ..., F_m concatenated in order.
std::vector<Injection> canonical_injections(int m);

/// Canonical representative data modulo 2n-moves and link-homotopy for
/// fixed (m, n): one exponent y in [0, n) per admissible injection,
/// aligned with canonical_injections(m).
struct CanonicalForm {
    int m = 0;
    std::int64_t n = 1;
    std::vector<std::int64_t> exponents;

    bool operator==(const CanonicalForm&) const = default;
};

CanonicalForm identity_form(int m, std::int64_t n);

/// Computes the canonical form of a diagram: level by level, the defect of
/// the running partial product against the target invariants is solved
/// over the integers through the generator matrix and reduced mod n.
CanonicalForm canonical_form(const StringLinkDiagram& d, std::int64_t n);

/// Diagram realizing a canonical form: the stacked product of generator
/// windings with the stored exponents, level by level.
StringLinkDiagram representative(const CanonicalForm& f);

struct EquivalenceResult {
    bool equivalent = false;
    /// On failure, a non-repeated sequence whose invariants differ mod n.
    std::optional<Sequence> witness;
};

/// Decides equivalence up to 2n-moves and link-homotopy by comparing
/// canonical forms.
EquivalenceResult equivalent_2n_lh(const StringLinkDiagram& a, const StringLinkDiagram& b,
                                   std::int64_t n);

/// Group operations on equivalence classes (the classes of m-component
/// string links form a finite group of order n^{s_m}).
CanonicalForm class_multiply(const CanonicalForm& f, const CanonicalForm& g);
CanonicalForm class_inverse(const CanonicalForm& f);

/// n^{s_m} as an arbitrary-precision integer.
Int group_order(int m, const Int& n);

/// Link-level triviality test for the closure of `d`: trivial iff
/// delta_n(I) = n and mu_bar(I) = 0 for every non-repeated sequence I of
/// length m. The report lists each failing sequence with its values.
struct TrivialityReport {
    struct Failure {
        Sequence sequence;
        Int delta_n;
        Int mu_bar;
    };
    bool trivial = false;
    std::vector<Failure> failures;
};

TrivialityReport link_trivial_2n_lh(const StringLinkDiagram& d, std::int64_t n);

/// Link-level comparison of closures; requires delta_n(I) = n for every
/// non-repeated length-m sequence of both inputs and throws
/// HypothesisViolationError otherwise.
bool link_equivalent_2n_lh(const StringLinkDiagram& a, const StringLinkDiagram& b,
                           std::int64_t n);

std::ostream& operator<<(std::ostream& os, const Injection& pi);

}  // namespace milnor
