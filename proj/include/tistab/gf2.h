#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace tistab {

/// Packed bit vector over GF(2). Pad bits in the last word are always zero.
class BitVec {
  public:
    BitVec() = default;
    explicit BitVec(size_t n) : size_(n), words_((n + 63) / 64, 0) {}

    /// Parses a string of '0'/'1' characters.
    static BitVec from_string(std::string_view bits);

    size_t size() const { return size_; }
    bool get(size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
    void set(size_t i, bool v) {
        uint64_t m = uint64_t(1) << (i & 63);
        words_[i >> 6] = v ? (words_[i >> 6] | m) : (words_[i >> 6] & ~m);
    }
    void flip(size_t i) { words_[i >> 6] ^= uint64_t(1) << (i & 63); }

    BitVec &operator^=(const BitVec &other);
    bool any() const;
    size_t popcount() const;
    std::string str() const;

    std::span<uint64_t> words() { return words_; }
    std::span<const uint64_t> words() const { return words_; }

    bool operator==(const BitVec &other) const = default;

  private:
    size_t size_ = 0;
    std::vector<uint64_t> words_;
};

/// Dense row-major bit matrix over GF(2), each row packed into 64-bit words.
class Gf2Matrix {
  public:
    Gf2Matrix() = default;
    Gf2Matrix(size_t rows, size_t cols);

    static Gf2Matrix identity(size_t n);
    /// Rows of equal length given as '0'/'1' strings.
    static Gf2Matrix from_strings(const std::vector<std::string> &rows);
    static Gf2Matrix from_rows(const std::vector<BitVec> &rows, size_t cols);
    /// Stacks the given vectors as columns.
    static Gf2Matrix from_columns(const std::vector<BitVec> &columns, size_t rows);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    size_t words_per_row() const { return stride_; }

    bool get(size_t r, size_t c) const { return (data_[r * stride_ + (c >> 6)] >> (c & 63)) & 1; }
    void set(size_t r, size_t c, bool v) {
        uint64_t &w = data_[r * stride_ + (c >> 6)];
        uint64_t m = uint64_t(1) << (c & 63);
        w = v ? (w | m) : (w & ~m);
    }
    void flip(size_t r, size_t c) { data_[r * stride_ + (c >> 6)] ^= uint64_t(1) << (c & 63); }

    std::span<uint64_t> row_words(size_t r) { return {data_.data() + r * stride_, stride_}; }
    std::span<const uint64_t> row_words(size_t r) const { return {data_.data() + r * stride_, stride_}; }
    BitVec row(size_t r) const;
    BitVec column(size_t c) const;

    /// row[dst] ^= row[src]
    void xor_row(size_t src, size_t dst);
    void swap_rows(size_t a, size_t b);

    Gf2Matrix transpose() const;
    BitVec multiply(const BitVec &v) const;
    Gf2Matrix multiply(const Gf2Matrix &other) const;
    /// Appends the rows of `other` below this matrix.
    Gf2Matrix vstack(const Gf2Matrix &other) const;
    Gf2Matrix select_columns(const std::vector<size_t> &cols) const;
    bool is_zero() const;

    /// '0'/'1' text grid, one row per line.
    std::string str() const;

    bool operator==(const Gf2Matrix &other) const = default;

  private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    size_t stride_ = 0;
    std::vector<uint64_t> data_;
};

/// Reduced row echelon form. Pivoting takes the first column with a nonzero
/// entry at or below the current row and the lowest such row index.
struct Echelon {
    Gf2Matrix reduced;
    std::vector<size_t> pivot_cols;
    size_t rank() const { return pivot_cols.size(); }
};

/// Consumes its argument.
Echelon reduced_row_echelon(Gf2Matrix m);

size_t rank(Gf2Matrix m);

/// Basis of the right nullspace {v : m v = 0}, one vector per free column,
/// ordered by free column index.
std::vector<BitVec> nullspace(const Gf2Matrix &m);

/// Some x with m x = b (free variables zero), or nullopt when inconsistent.
std::optional<BitVec> solve(const Gf2Matrix &m, const BitVec &b);

/// Rank of the span of the given vectors.
size_t span_rank(const std::vector<BitVec> &vectors, size_t length);

}  // namespace tistab
