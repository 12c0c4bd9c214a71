#include "milnor/braid.hpp"

#include <cctype>
#include <cstdlib>
#include <numeric>
#include <ostream>
#include <sstream>

#include "milnor/errors.hpp"

namespace milnor {

namespace {

constexpr long long kMaxExponent = 1'000'000;

void append_reduced(std::vector<BraidLetter>& out, BraidLetter l) {
    if (!out.empty() && out.back().position == l.position && out.back().sign == -l.sign) {
        out.pop_back();
        return;
    }
    out.push_back(l);
}

}  // namespace

BraidWord::BraidWord(int strand_count, std::vector<BraidLetter> letters)
    : strand_count_(strand_count) {
    if (strand_count < 1) throw PreconditionError("braid strand count must be >= 1");
    letters_.reserve(letters.size());
    for (const BraidLetter& l : letters) {
        if (l.position < 1 || l.position > strand_count - 1) {
            throw PreconditionError("braid generator position out of range 1..m-1");
        }
        if (l.sign != 1 && l.sign != -1) throw PreconditionError("braid letter sign must be +-1");
        append_reduced(letters_, l);
    }
}

std::vector<int> BraidWord::permutation() const {
    // position -> strand occupying it, updated bottom to top.
    std::vector<int> strand_at(static_cast<std::size_t>(strand_count_) + 1);
    std::iota(strand_at.begin(), strand_at.end(), 0);
    for (const BraidLetter& l : letters_) {
        std::swap(strand_at[static_cast<std::size_t>(l.position)],
                  strand_at[static_cast<std::size_t>(l.position) + 1]);
    }
    std::vector<int> perm(static_cast<std::size_t>(strand_count_) + 1);
    for (int pos = 1; pos <= strand_count_; ++pos) {
        perm[static_cast<std::size_t>(strand_at[static_cast<std::size_t>(pos)])] = pos;
    }
    perm[0] = 0;
    return perm;
}

bool BraidWord::is_pure() const {
    std::vector<int> perm = permutation();
    for (int p = 1; p <= strand_count_; ++p) {
        if (perm[static_cast<std::size_t>(p)] != p) return false;
    }
    return true;
}

BraidWord BraidWord::inverse() const {
    std::vector<BraidLetter> rev;
    rev.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
        rev.push_back(BraidLetter{it->position, -it->sign});
    }
    return BraidWord(strand_count_, std::move(rev));
}

BraidWord operator*(const BraidWord& a, const BraidWord& b) {
    if (a.strand_count_ != b.strand_count_) {
        throw PreconditionError("braid product requires equal strand counts");
    }
    std::vector<BraidLetter> letters = a.letters_;
    letters.insert(letters.end(), b.letters_.begin(), b.letters_.end());
    return BraidWord(a.strand_count_, std::move(letters));
}

std::string BraidWord::str() const {
    std::ostringstream os;
    os << "m=" << strand_count_ << ':';
    for (const BraidLetter& l : letters_) {
        os << " s" << l.position;
        if (l.sign < 0) os << "^-1";
    }
    return os.str();
}

BraidWord parse_braid(std::string_view text) {
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto expect = [&](char c, const char* what) {
        if (pos >= text.size() || text[pos] != c) {
            throw ParseError(std::string("expected '") + c + "' " + what, pos);
        }
        ++pos;
    };
    auto parse_number = [&](bool allow_sign) -> long long {
        std::size_t start = pos;
        bool negative = false;
        if (allow_sign && pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
            negative = text[pos] == '-';
            ++pos;
        }
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
            throw ParseError("expected an integer", start);
        }
        long long value = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            value = value * 10 + (text[pos] - '0');
            if (value > kMaxExponent) throw ParseError("integer too large", start);
            ++pos;
        }
        return negative ? -value : value;
    };

    skip_ws();
    expect('m', "to start the strand-count header");
    expect('=', "after 'm'");
    std::size_t m_pos = pos;
    long long m = parse_number(false);
    if (m < 1) throw ParseError("strand count must be >= 1", m_pos);
    skip_ws();
    expect(':', "after the strand count");

    std::vector<BraidLetter> letters;
    for (;;) {
        skip_ws();
        if (pos >= text.size()) break;
        if (text[pos] != 's') throw ParseError("expected a generator token like 's1'", pos);
        ++pos;
        std::size_t index_pos = pos;
        long long position = parse_number(false);
        if (position < 1 || position > m - 1) {
            throw ParseError("generator position out of range 1..m-1", index_pos);
        }
        long long exponent = 1;
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            exponent = parse_number(true);
        }
        const int sign = exponent >= 0 ? 1 : -1;
        for (long long i = 0; i < std::llabs(exponent); ++i) {
            letters.push_back(BraidLetter{static_cast<int>(position), sign});
        }
    }
    return BraidWord(static_cast<int>(m), std::move(letters));
}

BraidWord insert_2n_move(const BraidWord& b, int position, int n, int sign) {
    if (position < 1 || position > b.strand_count() - 1) {
        throw PreconditionError("2n-move position out of range 1..m-1");
    }
    if (n < 1) throw PreconditionError("2n-move requires n >= 1");
    if (sign != 1 && sign != -1) throw PreconditionError("2n-move sign must be +-1");
    std::vector<BraidLetter> letters = b.letters();
    for (int i = 0; i < 2 * n; ++i) letters.push_back(BraidLetter{position, sign});
    return BraidWord(b.strand_count(), std::move(letters));
}

std::ostream& operator<<(std::ostream& os, const BraidWord& b) { return os << b.str(); }

}  // namespace milnor
