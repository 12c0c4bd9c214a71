#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "milnor/integer.hpp"

namespace milnor {

/// Word in the noncommuting variables X_1, X_2, ...; the empty monomial is
/// the constant term. Indices are packed four bits each, most significant
/// first, so graded-lexicographic order is numeric order of (degree, bits).
/// This caps indices at 15 and the degree at 16, which is ample here.
class Monomial {
public:
    static constexpr int kMaxIndex = 15;
    static constexpr int kMaxDegree = 16;

    Monomial() = default;
    static Monomial from_indices(const std::vector<int>& indices);
    static Monomial variable(int index);

    int degree() const { return degree_; }
    int index_at(int pos) const;
    std::vector<int> indices() const;
    bool contains(int index) const;

    /// Concatenation.
    friend Monomial operator*(const Monomial& a, const Monomial& b);

    std::strong_ordering operator<=>(const Monomial& o) const {
        if (degree_ != o.degree_) return degree_ <=> o.degree_;
        return bits_ <=> o.bits_;
    }
    bool operator==(const Monomial&) const = default;

    std::string str() const;

private:
    std::uint64_t bits_ = 0;
    std::int32_t degree_ = 0;
};

/// Polynomial in noncommuting variables over Int, truncated at a total
/// degree bound. Terms are kept sorted in graded-lexicographic order with
/// no zero coefficients stored.
class TruncatedSeries {
public:
    using Term = std::pair<Monomial, Int>;

    explicit TruncatedSeries(int degree_bound);
    static TruncatedSeries constant(Int value, int degree_bound);
    static TruncatedSeries one(int degree_bound);
    /// X_index, or the zero series if the bound is 0.
    static TruncatedSeries variable(int index, int degree_bound);

    int degree_bound() const { return degree_bound_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Stored coefficient, 0 if absent. Throws DegreeOverflowError for
    /// monomials beyond the degree bound.
    Int coefficient(const Monomial& m) const;
    Int constant_term() const;

    TruncatedSeries truncated(int new_bound) const;
    /// Multiplicative inverse; requires constant term 1.
    TruncatedSeries inverse() const;
    TruncatedSeries pow(long long e) const;

    TruncatedSeries operator-() const;
    TruncatedSeries& operator+=(const TruncatedSeries& o);
    TruncatedSeries& operator-=(const TruncatedSeries& o);
    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);

    bool operator==(const TruncatedSeries&) const = default;

    std::string str() const;

    friend TruncatedSeries series_mod(const TruncatedSeries& s, const Int& n);

private:
    int degree_bound_ = 0;
    std::vector<Term> terms_;

    static TruncatedSeries from_raw(int degree_bound, std::vector<Term> unsorted);
};

/// Coefficientwise reduction into [0, n); zero coefficients are dropped.
/// For n = 1 every coefficient vanishes.
TruncatedSeries series_mod(const TruncatedSeries& s, const Int& n);

std::ostream& operator<<(std::ostream& os, const Monomial& m);
std::ostream& operator<<(std::ostream& os, const TruncatedSeries& s);

}  // namespace milnor
