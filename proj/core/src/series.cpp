#include "milnor/series.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "milnor/errors.hpp"

namespace milnor {

Monomial Monomial::from_indices(const std::vector<int>& indices) {
    if (indices.size() > static_cast<std::size_t>(kMaxDegree)) {
        throw PreconditionError("monomial degree exceeds the supported maximum of 16");
    }
    Monomial m;
    for (int idx : indices) {
        if (idx < 1 || idx > kMaxIndex) {
            throw PreconditionError("variable index out of the supported range 1..15");
        }
        m.bits_ = (m.bits_ << 4) | static_cast<std::uint64_t>(idx);
        ++m.degree_;
    }
    return m;
}

Monomial Monomial::variable(int index) { return from_indices({index}); }

int Monomial::index_at(int pos) const {
    if (pos < 0 || pos >= degree_) throw PreconditionError("monomial position out of range");
    return static_cast<int>((bits_ >> (4 * (degree_ - 1 - pos))) & 0xF);
}

std::vector<int> Monomial::indices() const {
    std::vector<int> out(static_cast<std::size_t>(degree_));
    for (int i = 0; i < degree_; ++i) out[static_cast<std::size_t>(i)] = index_at(i);
    return out;
}

bool Monomial::contains(int index) const {
    for (int i = 0; i < degree_; ++i) {
        if (index_at(i) == index) return true;
    }
    return false;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    if (a.degree_ + b.degree_ > Monomial::kMaxDegree) {
        throw PreconditionError("monomial product exceeds the supported degree");
    }
    Monomial m;
    m.degree_ = a.degree_ + b.degree_;
    m.bits_ = (a.bits_ << (4 * b.degree_)) | b.bits_;
    return m;
}

std::string Monomial::str() const {
    if (degree_ == 0) return "1";
    std::ostringstream os;
    for (int i = 0; i < degree_; ++i) {
        if (i) os << '.';
        os << 'X' << index_at(i);
    }
    return os.str();
}

namespace {

void check_bound(int degree_bound) {
    if (degree_bound < 0 || degree_bound > Monomial::kMaxDegree) {
        throw PreconditionError("series degree bound must be in 0..16");
    }
}

}  // namespace

TruncatedSeries::TruncatedSeries(int degree_bound) : degree_bound_(degree_bound) {
    check_bound(degree_bound);
}

TruncatedSeries TruncatedSeries::constant(Int value, int degree_bound) {
    TruncatedSeries s(degree_bound);
    if (value != 0) s.terms_.emplace_back(Monomial{}, std::move(value));
    return s;
}

TruncatedSeries TruncatedSeries::one(int degree_bound) { return constant(1, degree_bound); }

TruncatedSeries TruncatedSeries::variable(int index, int degree_bound) {
    TruncatedSeries s(degree_bound);
    if (degree_bound >= 1) s.terms_.emplace_back(Monomial::variable(index), Int(1));
    return s;
}

Int TruncatedSeries::coefficient(const Monomial& m) const {
    if (m.degree() > degree_bound_) {
        throw DegreeOverflowError("coefficient requested beyond the series degree bound");
    }
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& key) { return t.first < key; });
    if (it != terms_.end() && it->first == m) return it->second;
    return 0;
}

Int TruncatedSeries::constant_term() const {
    if (!terms_.empty() && terms_.front().first.degree() == 0) return terms_.front().second;
    return 0;
}

TruncatedSeries TruncatedSeries::from_raw(int degree_bound, std::vector<Term> unsorted) {
    std::sort(unsorted.begin(), unsorted.end(),
              [](const Term& a, const Term& b) { return a.first < b.first; });
    TruncatedSeries s(degree_bound);
    s.terms_.reserve(unsorted.size());
    for (Term& t : unsorted) {
        if (t.first.degree() > degree_bound) continue;
        if (!s.terms_.empty() && s.terms_.back().first == t.first) {
            s.terms_.back().second += t.second;
            if (s.terms_.back().second == 0) s.terms_.pop_back();
        } else if (t.second != 0) {
            s.terms_.push_back(std::move(t));
        }
    }
    // A run that cancelled to zero may leave a stale zero before a new key.
    s.terms_.erase(std::remove_if(s.terms_.begin(), s.terms_.end(),
                                  [](const Term& t) { return t.second == 0; }),
                   s.terms_.end());
    return s;
}

TruncatedSeries TruncatedSeries::truncated(int new_bound) const {
    if (new_bound > degree_bound_) {
        // Enlarging would present dropped coefficients as genuine zeros.
        throw PreconditionError("cannot enlarge a series degree bound");
    }
    check_bound(new_bound);
    TruncatedSeries s(new_bound);
    for (const Term& t : terms_) {
        if (t.first.degree() <= new_bound) s.terms_.push_back(t);
    }
    return s;
}

TruncatedSeries TruncatedSeries::operator-() const {
    TruncatedSeries s(degree_bound_);
    s.terms_.reserve(terms_.size());
    for (const Term& t : terms_) s.terms_.emplace_back(t.first, -t.second);
    return s;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
    *this = *this + o;
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
    *this = *this - o;
    return *this;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.degree_bound_ != b.degree_bound_) {
        throw PreconditionError("series degree bounds differ; truncate explicitly first");
    }
    TruncatedSeries s(a.degree_bound_);
    s.terms_.reserve(a.terms_.size() + b.terms_.size());
    auto ia = a.terms_.begin();
    auto ib = b.terms_.begin();
    while (ia != a.terms_.end() || ib != b.terms_.end()) {
        if (ib == b.terms_.end() || (ia != a.terms_.end() && ia->first < ib->first)) {
            s.terms_.push_back(*ia++);
        } else if (ia == a.terms_.end() || ib->first < ia->first) {
            s.terms_.push_back(*ib++);
        } else {
            Int c = ia->second + ib->second;
            if (c != 0) s.terms_.emplace_back(ia->first, std::move(c));
            ++ia;
            ++ib;
        }
    }
    return s;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) { return a + (-b); }

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.degree_bound_ != b.degree_bound_) {
        throw PreconditionError("series degree bounds differ; truncate explicitly first");
    }
    std::vector<TruncatedSeries::Term> prod;
    prod.reserve(a.terms_.size() * 2 + b.terms_.size());
    for (const auto& [ma, ca] : a.terms_) {
        const int room = a.degree_bound_ - ma.degree();
        for (const auto& [mb, cb] : b.terms_) {
            if (mb.degree() > room) break;  // terms are graded, the rest is too big
            prod.emplace_back(ma * mb, ca * cb);
        }
    }
    return TruncatedSeries::from_raw(a.degree_bound_, std::move(prod));
}

TruncatedSeries TruncatedSeries::inverse() const {
    if (constant_term() != 1) {
        throw PreconditionError("series inverse requires constant term 1");
    }
    // S = 1 + N with N of positive order: S^-1 = sum (-N)^k, which
    // terminates because N^k has degree >= k.
    TruncatedSeries n = *this;
    if (!n.terms_.empty() && n.terms_.front().first.degree() == 0) {
        n.terms_.erase(n.terms_.begin());
    }
    TruncatedSeries minus_n = -n;
    TruncatedSeries acc = one(degree_bound_);
    TruncatedSeries power = one(degree_bound_);
    for (int k = 0; k < degree_bound_; ++k) {
        power = power * minus_n;
        if (power.is_zero()) break;
        acc += power;
    }
    return acc;
}

TruncatedSeries TruncatedSeries::pow(long long e) const {
    if (e < 0) return inverse().pow(-e);
    TruncatedSeries acc = one(degree_bound_);
    TruncatedSeries base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return acc;
}

TruncatedSeries series_mod(const TruncatedSeries& s, const Int& n) {
    if (n < 1) throw PreconditionError("series_mod requires n >= 1");
    TruncatedSeries out(s.degree_bound_);
    out.terms_.reserve(s.terms_.size());
    for (const auto& [m, c] : s.terms_) {
        Int r = positive_mod(c, n);
        if (r != 0) out.terms_.emplace_back(m, std::move(r));
    }
    return out;
}

std::string TruncatedSeries::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const Term& t : terms_) {
        Int c = t.second;
        if (first) {
            if (c < 0) {
                os << '-';
                c = -c;
            }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        if (t.first.degree() == 0) {
            os << c;
        } else {
            if (c != 1) os << c << '*';
            os << t.first.str();
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Monomial& m) { return os << m.str(); }
std::ostream& operator<<(std::ostream& os, const TruncatedSeries& s) { return os << s.str(); }

}  // namespace milnor
