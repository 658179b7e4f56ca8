#include "tistab/polynomial.h"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace tistab {

Exponent operator+(const Exponent &a, const Exponent &b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("exponent dimension mismatch");
    }
    Exponent r(a.size());
    for (size_t k = 0; k < a.size(); k++) {
        r[k] = a[k] + b[k];
    }
    return r;
}

Exponent operator-(const Exponent &a, const Exponent &b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("exponent dimension mismatch");
    }
    Exponent r(a.size());
    for (size_t k = 0; k < a.size(); k++) {
        r[k] = a[k] - b[k];
    }
    return r;
}

Exponent operator-(const Exponent &a) {
    Exponent r(a.size());
    for (size_t k = 0; k < a.size(); k++) {
        r[k] = -a[k];
    }
    return r;
}

Exponent zero_exponent(size_t dim) {
    return Exponent(dim, 0);
}

std::string exponent_str(const Exponent &e) {
    std::string s = "(";
    for (size_t k = 0; k < e.size(); k++) {
        if (k) {
            s += ",";
        }
        s += std::to_string(e[k]);
    }
    return s + ")";
}

namespace {

// Sorts and cancels duplicate pairs in place.
void canonicalize(std::vector<Exponent> &terms) {
    std::sort(terms.begin(), terms.end());
    std::vector<Exponent> out;
    out.reserve(terms.size());
    size_t i = 0;
    while (i < terms.size()) {
        size_t j = i;
        while (j < terms.size() && terms[j] == terms[i]) {
            j++;
        }
        if ((j - i) % 2 == 1) {
            out.push_back(std::move(terms[i]));
        }
        i = j;
    }
    terms = std::move(out);
}

std::string monomial_str(const Exponent &e) {
    std::string s;
    for (size_t k = 0; k < e.size(); k++) {
        if (e[k] == 0) {
            continue;
        }
        if (!s.empty()) {
            s += "*";
        }
        s += "x" + std::to_string(k + 1);
        if (e[k] != 1) {
            s += "^" + std::to_string(e[k]);
        }
    }
    return s.empty() ? "1" : s;
}

Exponent parse_monomial(std::string_view m, size_t dim) {
    Exponent e(dim, 0);
    if (m == "1") {
        return e;
    }
    size_t i = 0;
    auto fail = [&](const char *why) {
        throw std::invalid_argument("cannot parse monomial '" + std::string(m) + "': " + why);
    };
    while (i < m.size()) {
        if (m[i] == '*') {
            i++;
            continue;
        }
        size_t axis = 0;
        char c = m[i];
        if (c == 'x' && i + 1 < m.size() && std::isdigit(static_cast<unsigned char>(m[i + 1]))) {
            i++;
            size_t start = i;
            while (i < m.size() && std::isdigit(static_cast<unsigned char>(m[i]))) {
                i++;
            }
            axis = std::stoul(std::string(m.substr(start, i - start)));
            if (axis == 0) {
                fail("variables are numbered from 1");
            }
            axis -= 1;
        } else if (c == 'x' || c == 'y' || c == 'z' || c == 'w') {
            axis = c == 'x' ? 0 : c == 'y' ? 1 : c == 'z' ? 2 : 3;
            i++;
        } else {
            fail("unexpected character");
        }
        if (axis >= dim) {
            fail("variable index exceeds dimension");
        }
        int32_t power = 1;
        if (i < m.size() && m[i] == '^') {
            i++;
            bool paren = i < m.size() && m[i] == '(';
            if (paren) {
                i++;
            }
            size_t start = i;
            if (i < m.size() && (m[i] == '-' || m[i] == '+')) {
                i++;
            }
            while (i < m.size() && std::isdigit(static_cast<unsigned char>(m[i]))) {
                i++;
            }
            if (start == i) {
                fail("missing exponent");
            }
            power = std::stoi(std::string(m.substr(start, i - start)));
            if (paren) {
                if (i >= m.size() || m[i] != ')') {
                    fail("unbalanced parenthesis");
                }
                i++;
            }
        }
        e[axis] += power;
    }
    return e;
}

}  // namespace

LaurentPoly LaurentPoly::one(size_t dim) {
    return monomial(zero_exponent(dim));
}

LaurentPoly LaurentPoly::monomial(Exponent e) {
    LaurentPoly p(e.size());
    p.terms_.push_back(std::move(e));
    return p;
}

LaurentPoly LaurentPoly::from_terms(size_t dim, std::vector<Exponent> terms) {
    for (const auto &t : terms) {
        if (t.size() != dim) {
            throw std::invalid_argument("term dimension mismatch");
        }
    }
    LaurentPoly p(dim);
    canonicalize(terms);
    p.terms_ = std::move(terms);
    return p;
}

LaurentPoly LaurentPoly::parse(std::string_view text, size_t dim) {
    std::string compact;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) {
            compact += c;
        }
    }
    if (compact.empty()) {
        throw std::invalid_argument("empty polynomial text");
    }
    if (compact == "0") {
        return LaurentPoly(dim);
    }
    std::vector<Exponent> terms;
    size_t start = 0;
    for (size_t i = 0; i <= compact.size(); i++) {
        // A '+' directly after '^' or '^(' is an exponent sign, not a separator.
        bool sep = i == compact.size() ||
                   (compact[i] == '+' && i > 0 && compact[i - 1] != '^' && compact[i - 1] != '(');
        if (!sep) {
            continue;
        }
        if (i == start) {
            throw std::invalid_argument("empty term in '" + compact + "'");
        }
        terms.push_back(parse_monomial(std::string_view(compact).substr(start, i - start), dim));
        start = i + 1;
    }
    return from_terms(dim, std::move(terms));
}

bool LaurentPoly::coefficient(const Exponent &e) const {
    return std::binary_search(terms_.begin(), terms_.end(), e);
}

bool LaurentPoly::constant_term() const {
    return coefficient(zero_exponent(dim_));
}

void LaurentPoly::require_same_dim(const LaurentPoly &other) const {
    if (dim_ != other.dim_) {
        throw std::invalid_argument(
            "polynomial dimension mismatch: " + std::to_string(dim_) + " vs " + std::to_string(other.dim_));
    }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly &other) const {
    require_same_dim(other);
    LaurentPoly r(dim_);
    std::set_symmetric_difference(
        terms_.begin(), terms_.end(), other.terms_.begin(), other.terms_.end(), std::back_inserter(r.terms_));
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly &other) const {
    require_same_dim(other);
    std::vector<Exponent> prod;
    prod.reserve(terms_.size() * other.terms_.size());
    for (const auto &a : terms_) {
        for (const auto &b : other.terms_) {
            prod.push_back(a + b);
        }
    }
    canonicalize(prod);
    LaurentPoly r(dim_);
    r.terms_ = std::move(prod);
    return r;
}

LaurentPoly &LaurentPoly::operator+=(const LaurentPoly &other) {
    *this = *this + other;
    return *this;
}

LaurentPoly &LaurentPoly::operator*=(const LaurentPoly &other) {
    *this = *this * other;
    return *this;
}

LaurentPoly LaurentPoly::antipode() const {
    LaurentPoly r(dim_);
    r.terms_.reserve(terms_.size());
    for (const auto &t : terms_) {
        r.terms_.push_back(-t);
    }
    std::sort(r.terms_.begin(), r.terms_.end());
    return r;
}

LaurentPoly LaurentPoly::shifted(const Exponent &shift) const {
    if (shift.size() != dim_) {
        throw std::invalid_argument("shift dimension mismatch");
    }
    LaurentPoly r(dim_);
    r.terms_.reserve(terms_.size());
    for (const auto &t : terms_) {
        r.terms_.push_back(t + shift);
    }
    // Translation preserves lexicographic order.
    return r;
}

std::pair<Exponent, Exponent> LaurentPoly::support_box() const {
    if (terms_.empty()) {
        throw std::invalid_argument("zero polynomial has no support box");
    }
    Exponent lo = terms_.front();
    Exponent hi = terms_.front();
    for (const auto &t : terms_) {
        for (size_t k = 0; k < dim_; k++) {
            lo[k] = std::min(lo[k], t[k]);
            hi[k] = std::max(hi[k], t[k]);
        }
    }
    return {lo, hi};
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) {
        return "0";
    }
    std::string s;
    for (const auto &t : terms_) {
        if (!s.empty()) {
            s += " + ";
        }
        s += monomial_str(t);
    }
    return s;
}

std::strong_ordering LaurentPoly::operator<=>(const LaurentPoly &other) const {
    if (auto c = dim_ <=> other.dim_; c != 0) {
        return c;
    }
    return terms_ <=> other.terms_;
}

LaurentPoly divide_exact(const LaurentPoly &a, const LaurentPoly &b) {
    if (b.is_zero()) {
        throw std::domain_error("division by zero polynomial");
    }
    // Lex order on Z^d is a group order, so leading terms multiply; peeling off
    // the leading term recovers an exact quotient term by term.
    if (a.is_zero()) {
        return LaurentPoly(a.dim());
    }
    // An exact quotient lives in a box of extent box(a) - box(b); its point
    // count bounds the number of steps.
    auto [alo, ahi] = a.support_box();
    auto [blo, bhi] = b.support_box();
    size_t guard = 1;
    for (size_t k = 0; k < a.dim(); k++) {
        int64_t span = int64_t(ahi[k] - alo[k]) - int64_t(bhi[k] - blo[k]) + 1;
        if (span <= 0) {
            throw std::domain_error("polynomial division is not exact");
        }
        guard *= size_t(span);
    }
    const Exponent &lead_b = b.terms().back();
    LaurentPoly rem = a;
    std::vector<Exponent> quotient;
    while (!rem.is_zero()) {
        if (quotient.size() >= guard) {
            throw std::domain_error("polynomial division is not exact");
        }
        Exponent q = rem.terms().back() - lead_b;
        rem += b.shifted(q);
        quotient.push_back(std::move(q));
    }
    return LaurentPoly::from_terms(a.dim(), std::move(quotient));
}

}  // namespace tistab
