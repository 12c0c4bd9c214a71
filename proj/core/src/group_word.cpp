#include "milnor/group_word.hpp"

#include <cstdlib>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "milnor/errors.hpp"

namespace milnor {

namespace {

void append_letter(std::vector<GroupWord::Letter>& out, GroupWord::Letter l) {
    if (l.exponent == 0) return;
    if (!out.empty() && out.back().generator == l.generator) {
        out.back().exponent += l.exponent;
        if (out.back().exponent == 0) out.pop_back();
        return;
    }
    out.push_back(l);
}

}  // namespace

GroupWord::GroupWord(std::vector<Letter> letters) {
    letters_.reserve(letters.size());
    for (const Letter& l : letters) {
        if (l.generator < 1) {
            throw PreconditionError("group word generator indices must be >= 1");
        }
        append_letter(letters_, l);
    }
}

GroupWord GroupWord::generator(int index, int exponent) {
    return GroupWord({Letter{index, exponent}});
}

GroupWord GroupWord::commutator(const GroupWord& u, const GroupWord& v) {
    return u * v * u.inverse() * v.inverse();
}

int GroupWord::max_generator() const {
    int m = 0;
    for (const Letter& l : letters_) m = std::max(m, l.generator);
    return m;
}

bool GroupWord::mentions(int generator) const {
    for (const Letter& l : letters_) {
        if (l.generator == generator) return true;
    }
    return false;
}

long long GroupWord::expanded_length() const {
    long long n = 0;
    for (const Letter& l : letters_) n += std::llabs(l.exponent);
    return n;
}

GroupWord GroupWord::inverse() const {
    GroupWord out;
    out.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
        out.letters_.push_back(Letter{it->generator, -it->exponent});
    }
    return out;
}

GroupWord GroupWord::pow(int e) const {
    if (e == 0) return {};
    GroupWord base = e > 0 ? *this : inverse();
    GroupWord out;
    for (int i = 0; i < std::abs(e); ++i) out = out * base;
    return out;
}

GroupWord operator*(const GroupWord& u, const GroupWord& v) {
    GroupWord out = u;
    for (const GroupWord::Letter& l : v.letters_) append_letter(out.letters_, l);
    return out;
}

std::string GroupWord::str() const {
    if (letters_.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const Letter& l : letters_) {
        if (!first) os << ' ';
        first = false;
        os << 'g' << l.generator;
        if (l.exponent != 1) os << '^' << l.exponent;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const GroupWord& w) { return os << w.str(); }

}  // namespace milnor
