#include "tistab/gf2.h"

#include <bit>
#include <stdexcept>

namespace tistab {

BitVec BitVec::from_string(std::string_view bits) {
    BitVec v(bits.size());
    for (size_t i = 0; i < bits.size(); i++) {
        if (bits[i] == '1') {
            v.set(i, true);
        } else if (bits[i] != '0') {
            throw std::invalid_argument("bit string may only contain '0' and '1'");
        }
    }
    return v;
}

BitVec &BitVec::operator^=(const BitVec &other) {
    if (size_ != other.size_) {
        throw std::invalid_argument("bit vector length mismatch");
    }
    for (size_t k = 0; k < words_.size(); k++) {
        words_[k] ^= other.words_[k];
    }
    return *this;
}

bool BitVec::any() const {
    for (uint64_t w : words_) {
        if (w) {
            return true;
        }
    }
    return false;
}

size_t BitVec::popcount() const {
    size_t n = 0;
    for (uint64_t w : words_) {
        n += std::popcount(w);
    }
    return n;
}

std::string BitVec::str() const {
    std::string s(size_, '0');
    for (size_t i = 0; i < size_; i++) {
        if (get(i)) {
            s[i] = '1';
        }
    }
    return s;
}

Gf2Matrix::Gf2Matrix(size_t rows, size_t cols)
    : rows_(rows), cols_(cols), stride_((cols + 63) / 64), data_(rows * ((cols + 63) / 64), 0) {}

Gf2Matrix Gf2Matrix::identity(size_t n) {
    Gf2Matrix m(n, n);
    for (size_t i = 0; i < n; i++) {
        m.set(i, i, true);
    }
    return m;
}

Gf2Matrix Gf2Matrix::from_strings(const std::vector<std::string> &rows) {
    size_t cols = rows.empty() ? 0 : rows[0].size();
    Gf2Matrix m(rows.size(), cols);
    for (size_t r = 0; r < rows.size(); r++) {
        if (rows[r].size() != cols) {
            throw std::invalid_argument("ragged bit matrix rows");
        }
        for (size_t c = 0; c < cols; c++) {
            if (rows[r][c] == '1') {
                m.set(r, c, true);
            } else if (rows[r][c] != '0') {
                throw std::invalid_argument("bit string may only contain '0' and '1'");
            }
        }
    }
    return m;
}

Gf2Matrix Gf2Matrix::from_rows(const std::vector<BitVec> &rows, size_t cols) {
    Gf2Matrix m(rows.size(), cols);
    for (size_t r = 0; r < rows.size(); r++) {
        if (rows[r].size() != cols) {
            throw std::invalid_argument("row length mismatch");
        }
        auto src = rows[r].words();
        auto dst = m.row_words(r);
        std::copy(src.begin(), src.end(), dst.begin());
    }
    return m;
}

Gf2Matrix Gf2Matrix::from_columns(const std::vector<BitVec> &columns, size_t rows) {
    Gf2Matrix m(rows, columns.size());
    for (size_t c = 0; c < columns.size(); c++) {
        if (columns[c].size() != rows) {
            throw std::invalid_argument("column length mismatch");
        }
        for (size_t r = 0; r < rows; r++) {
            if (columns[c].get(r)) {
                m.set(r, c, true);
            }
        }
    }
    return m;
}

BitVec Gf2Matrix::row(size_t r) const {
    BitVec v(cols_);
    auto src = row_words(r);
    std::copy(src.begin(), src.end(), v.words().begin());
    return v;
}

BitVec Gf2Matrix::column(size_t c) const {
    BitVec v(rows_);
    for (size_t r = 0; r < rows_; r++) {
        if (get(r, c)) {
            v.set(r, true);
        }
    }
    return v;
}

void Gf2Matrix::xor_row(size_t src, size_t dst) {
    const uint64_t *s = data_.data() + src * stride_;
    uint64_t *d = data_.data() + dst * stride_;
    for (size_t k = 0; k < stride_; k++) {
        d[k] ^= s[k];
    }
}

void Gf2Matrix::swap_rows(size_t a, size_t b) {
    if (a == b) {
        return;
    }
    std::swap_ranges(
        data_.begin() + a * stride_, data_.begin() + (a + 1) * stride_, data_.begin() + b * stride_);
}

Gf2Matrix Gf2Matrix::transpose() const {
    Gf2Matrix t(cols_, rows_);
    for (size_t r = 0; r < rows_; r++) {
        auto w = row_words(r);
        for (size_t k = 0; k < stride_; k++) {
            uint64_t bits = w[k];
            while (bits) {
                size_t c = k * 64 + std::countr_zero(bits);
                bits &= bits - 1;
                t.set(c, r, true);
            }
        }
    }
    return t;
}

BitVec Gf2Matrix::multiply(const BitVec &v) const {
    if (v.size() != cols_) {
        throw std::invalid_argument("matrix-vector shape mismatch");
    }
    BitVec out(rows_);
    auto vw = v.words();
    for (size_t r = 0; r < rows_; r++) {
        auto w = row_words(r);
        uint64_t acc = 0;
        for (size_t k = 0; k < stride_; k++) {
            acc ^= w[k] & vw[k];
        }
        if (std::popcount(acc) & 1) {
            out.set(r, true);
        }
    }
    return out;
}

Gf2Matrix Gf2Matrix::multiply(const Gf2Matrix &other) const {
    if (cols_ != other.rows_) {
        throw std::invalid_argument("matrix product shape mismatch");
    }
    Gf2Matrix out(rows_, other.cols_);
    for (size_t r = 0; r < rows_; r++) {
        auto w = row_words(r);
        auto dst = out.row_words(r);
        for (size_t k = 0; k < stride_; k++) {
            uint64_t bits = w[k];
            while (bits) {
                size_t c = k * 64 + std::countr_zero(bits);
                bits &= bits - 1;
                auto src = other.row_words(c);
                for (size_t j = 0; j < dst.size(); j++) {
                    dst[j] ^= src[j];
                }
            }
        }
    }
    return out;
}

Gf2Matrix Gf2Matrix::vstack(const Gf2Matrix &other) const {
    if (cols_ != other.cols_) {
        throw std::invalid_argument("vstack column mismatch");
    }
    Gf2Matrix out(rows_ + other.rows_, cols_);
    std::copy(data_.begin(), data_.end(), out.data_.begin());
    std::copy(other.data_.begin(), other.data_.end(), out.data_.begin() + data_.size());
    return out;
}

Gf2Matrix Gf2Matrix::select_columns(const std::vector<size_t> &cols) const {
    Gf2Matrix out(rows_, cols.size());
    for (size_t j = 0; j < cols.size(); j++) {
        for (size_t r = 0; r < rows_; r++) {
            if (get(r, cols[j])) {
                out.set(r, j, true);
            }
        }
    }
    return out;
}

bool Gf2Matrix::is_zero() const {
    for (uint64_t w : data_) {
        if (w) {
            return false;
        }
    }
    return true;
}

std::string Gf2Matrix::str() const {
    std::string s;
    for (size_t r = 0; r < rows_; r++) {
        for (size_t c = 0; c < cols_; c++) {
            s += get(r, c) ? '1' : '0';
        }
        s += '\n';
    }
    return s;
}

Echelon reduced_row_echelon(Gf2Matrix m) {
    Echelon e;
    size_t pivot_row = 0;
    const size_t stride = m.words_per_row();
    for (size_t c = 0; c < m.cols() && pivot_row < m.rows(); c++) {
        const size_t word = c >> 6;
        const uint64_t mask = uint64_t(1) << (c & 63);
        size_t found = m.rows();
        for (size_t r = pivot_row; r < m.rows(); r++) {
            if (m.row_words(r)[word] & mask) {
                found = r;
                break;
            }
        }
        if (found == m.rows()) {
            continue;
        }
        m.swap_rows(found, pivot_row);
        for (size_t r = 0; r < m.rows(); r++) {
            if (r != pivot_row && (m.row_words(r)[word] & mask)) {
                // Words below `word` are zero in the pivot row past this point.
                auto src = m.row_words(pivot_row);
                auto dst = m.row_words(r);
                for (size_t k = word; k < stride; k++) {
                    dst[k] ^= src[k];
                }
            }
        }
        e.pivot_cols.push_back(c);
        pivot_row++;
    }
    e.reduced = std::move(m);
    return e;
}

size_t rank(Gf2Matrix m) {
    return reduced_row_echelon(std::move(m)).rank();
}

std::vector<BitVec> nullspace(const Gf2Matrix &m) {
    Echelon e = reduced_row_echelon(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (size_t c : e.pivot_cols) {
        is_pivot[c] = true;
    }
    std::vector<BitVec> basis;
    for (size_t f = 0; f < m.cols(); f++) {
        if (is_pivot[f]) {
            continue;
        }
        BitVec v(m.cols());
        v.set(f, true);
        for (size_t i = 0; i < e.pivot_cols.size(); i++) {
            if (e.reduced.get(i, f)) {
                v.set(e.pivot_cols[i], true);
            }
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<BitVec> solve(const Gf2Matrix &m, const BitVec &b) {
    if (b.size() != m.rows()) {
        throw std::invalid_argument("right-hand side length mismatch");
    }
    Gf2Matrix aug(m.rows(), m.cols() + 1);
    for (size_t r = 0; r < m.rows(); r++) {
        for (size_t c = 0; c < m.cols(); c++) {
            if (m.get(r, c)) {
                aug.set(r, c, true);
            }
        }
        if (b.get(r)) {
            aug.set(r, m.cols(), true);
        }
    }
    Echelon e = reduced_row_echelon(std::move(aug));
    if (!e.pivot_cols.empty() && e.pivot_cols.back() == m.cols()) {
        return std::nullopt;
    }
    BitVec x(m.cols());
    for (size_t i = 0; i < e.pivot_cols.size(); i++) {
        if (e.reduced.get(i, m.cols())) {
            x.set(e.pivot_cols[i], true);
        }
    }
    return x;
}

size_t span_rank(const std::vector<BitVec> &vectors, size_t length) {
    return rank(Gf2Matrix::from_rows(vectors, length));
}

}  // namespace tistab
