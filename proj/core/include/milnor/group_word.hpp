#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace milnor {

/// Freely reduced word in abstract generators with integer exponents.
/// Generators are indexed from 1. Invariants: no letter has exponent 0 and
/// adjacent letters never share a generator index.
class GroupWord {
public:
    struct Letter {
        int generator = 0;
        int exponent = 0;
        bool operator==(const Letter&) const = default;
    };

    GroupWord() = default;
    explicit GroupWord(std::vector<Letter> letters);

    static GroupWord generator(int index, int exponent = 1);
    /// [u, v] = u v u^-1 v^-1
    static GroupWord commutator(const GroupWord& u, const GroupWord& v);

    bool empty() const { return letters_.empty(); }
    const std::vector<Letter>& letters() const { return letters_; }
    /// Largest generator index appearing in the word, 0 if empty.
    int max_generator() const;
    bool mentions(int generator) const;
    /// Number of single-generator letters once exponents are expanded.
    long long expanded_length() const;

    GroupWord inverse() const;
    GroupWord pow(int e) const;

    friend GroupWord operator*(const GroupWord& u, const GroupWord& v);
    bool operator==(const GroupWord&) const = default;

    std::string str() const;

private:
    std::vector<Letter> letters_;
};

std::ostream& operator<<(std::ostream& os, const GroupWord& w);

}  // namespace milnor
