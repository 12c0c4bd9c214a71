#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace milnor {

/// One braid generator: letter (position, +1) is the standard generator at
/// that position, (position, -1) its inverse.
struct BraidLetter {
    int position = 0;
    int sign = 0;
    bool operator==(const BraidLetter&) const = default;
};

/// Braid word on `strand_count` strands, kept freely reduced (adjacent
/// mutually inverse letters cancel). Purity is not an invariant here; it is
/// checked when the word is turned into a string link diagram.
class BraidWord {
public:
    explicit BraidWord(int strand_count, std::vector<BraidLetter> letters = {});

    int strand_count() const { return strand_count_; }
    const std::vector<BraidLetter>& letters() const { return letters_; }

    /// permutation()[p] is the final position of the strand starting at
    /// position p (1-based).
    std::vector<int> permutation() const;
    bool is_pure() const;

    BraidWord inverse() const;
    friend BraidWord operator*(const BraidWord& a, const BraidWord& b);
    bool operator==(const BraidWord&) const = default;

    std::string str() const;

private:
    int strand_count_ = 1;
    std::vector<BraidLetter> letters_;
};

/// Parses the grammar `m=<int>: (s<int>(^<int>)?)*`, whitespace separated;
/// negative exponents expand to inverse letters (`s3^-2` means `s3^-1 s3^-1`).
/// Throws ParseError with a byte position on bad syntax or a generator
/// position outside 1..m-1.
BraidWord parse_braid(std::string_view text);

/// Appends 2n half-twists at `position` with the given sign; the output
/// differs from the input by a single 2n-move on two parallel strands.
BraidWord insert_2n_move(const BraidWord& b, int position, int n, int sign);

std::ostream& operator<<(std::ostream& os, const BraidWord& b);

}  // namespace milnor
