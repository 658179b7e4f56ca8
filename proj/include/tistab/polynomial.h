#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tistab {

/// Exponent vector of a monomial x^e over Z^d.
using Exponent = std::vector<int32_t>;

Exponent operator+(const Exponent &a, const Exponent &b);
Exponent operator-(const Exponent &a, const Exponent &b);
Exponent operator-(const Exponent &a);
Exponent zero_exponent(size_t dim);
std::string exponent_str(const Exponent &e);

/// Multivariate Laurent polynomial over GF(2).
///
/// Stored as a sorted set of exponent vectors (lexicographic order); every
/// coefficient is 1. Addition is symmetric difference, so p + p = 0.
class LaurentPoly {
  public:
    LaurentPoly() = default;
    explicit LaurentPoly(size_t dim) : dim_(dim) {}

    static LaurentPoly one(size_t dim);
    static LaurentPoly monomial(Exponent e);
    /// Duplicated terms cancel in pairs.
    static LaurentPoly from_terms(size_t dim, std::vector<Exponent> terms);

    /// Parses the text form, e.g. "1 + x1 + x1^-1*x2". Variables are x1..xd;
    /// x, y, z, w are accepted as aliases for x1..x4.
    static LaurentPoly parse(std::string_view text, size_t dim);

    size_t dim() const { return dim_; }
    const std::vector<Exponent> &terms() const { return terms_; }
    size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    bool coefficient(const Exponent &e) const;
    bool constant_term() const;

    LaurentPoly operator+(const LaurentPoly &other) const;
    LaurentPoly operator*(const LaurentPoly &other) const;
    LaurentPoly &operator+=(const LaurentPoly &other);
    LaurentPoly &operator*=(const LaurentPoly &other);

    /// Sends every monomial to its inverse.
    LaurentPoly antipode() const;
    /// Multiplies by x^shift.
    LaurentPoly shifted(const Exponent &shift) const;

    /// Componentwise min and max exponent over all terms. Throws on zero.
    std::pair<Exponent, Exponent> support_box() const;

    /// Canonical text form; "0" for the zero polynomial.
    std::string str() const;

    bool operator==(const LaurentPoly &other) const = default;
    std::strong_ordering operator<=>(const LaurentPoly &other) const;

  private:
    void require_same_dim(const LaurentPoly &other) const;

    size_t dim_ = 0;
    std::vector<Exponent> terms_;
};

/// Returns q with a == q * b. Throws std::domain_error when b does not divide a.
LaurentPoly divide_exact(const LaurentPoly &a, const LaurentPoly &b);

}  // namespace tistab
