#include "tistab/pauli.h"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tistab {

GeneratorMap GeneratorMap::zero(size_t dim, size_t rows, size_t cols) {
    GeneratorMap m;
    m.dim_ = dim;
    m.rows_ = rows;
    m.cols_ = cols;
    m.entries_.assign(rows * cols, LaurentPoly(dim));
    return m;
}

GeneratorMap GeneratorMap::identity(size_t dim, size_t n) {
    GeneratorMap m = zero(dim, n, n);
    for (size_t i = 0; i < n; i++) {
        m.set(i, i, LaurentPoly::one(dim));
    }
    return m;
}

GeneratorMap GeneratorMap::from_rows(size_t dim, const std::vector<std::vector<LaurentPoly>> &rows) {
    size_t cols = rows.empty() ? 0 : rows[0].size();
    GeneratorMap m = zero(dim, rows.size(), cols);
    for (size_t r = 0; r < rows.size(); r++) {
        if (rows[r].size() != cols) {
            throw std::invalid_argument("ragged generator map rows");
        }
        for (size_t c = 0; c < cols; c++) {
            m.set(r, c, rows[r][c]);
        }
    }
    return m;
}

GeneratorMap GeneratorMap::from_columns(
    size_t dim, size_t rows, const std::vector<std::vector<LaurentPoly>> &cols) {
    GeneratorMap m = zero(dim, rows, cols.size());
    for (size_t c = 0; c < cols.size(); c++) {
        if (cols[c].size() != rows) {
            throw std::invalid_argument("generator column has wrong length");
        }
        for (size_t r = 0; r < rows; r++) {
            m.set(r, c, cols[c][r]);
        }
    }
    return m;
}

GeneratorMap GeneratorMap::parse(size_t dim, const std::vector<std::vector<std::string>> &rows) {
    std::vector<std::vector<LaurentPoly>> polys;
    for (const auto &row : rows) {
        auto &out = polys.emplace_back();
        for (const auto &text : row) {
            out.push_back(LaurentPoly::parse(text, dim));
        }
    }
    return from_rows(dim, polys);
}

void GeneratorMap::set(size_t r, size_t c, LaurentPoly p) {
    if (p.dim() != dim_) {
        throw std::invalid_argument("entry dimension mismatch");
    }
    entries_[r * cols_ + c] = std::move(p);
}

std::vector<LaurentPoly> GeneratorMap::column(size_t c) const {
    std::vector<LaurentPoly> out;
    out.reserve(rows_);
    for (size_t r = 0; r < rows_; r++) {
        out.push_back(at(r, c));
    }
    return out;
}

GeneratorMap GeneratorMap::column_map(size_t c) const {
    return cols_slice(c, c + 1);
}

GeneratorMap GeneratorMap::rows_slice(size_t begin, size_t end) const {
    if (begin > end || end > rows_) {
        throw std::out_of_range("row slice out of range");
    }
    GeneratorMap m = zero(dim_, end - begin, cols_);
    for (size_t r = begin; r < end; r++) {
        for (size_t c = 0; c < cols_; c++) {
            m.set(r - begin, c, at(r, c));
        }
    }
    return m;
}

GeneratorMap GeneratorMap::cols_slice(size_t begin, size_t end) const {
    if (begin > end || end > cols_) {
        throw std::out_of_range("column slice out of range");
    }
    GeneratorMap m = zero(dim_, rows_, end - begin);
    for (size_t r = 0; r < rows_; r++) {
        for (size_t c = begin; c < end; c++) {
            m.set(r, c - begin, at(r, c));
        }
    }
    return m;
}

GeneratorMap GeneratorMap::hstack(const GeneratorMap &right) const {
    if (rows_ != right.rows_ || dim_ != right.dim_) {
        throw std::invalid_argument("hstack shape mismatch");
    }
    GeneratorMap m = zero(dim_, rows_, cols_ + right.cols_);
    for (size_t r = 0; r < rows_; r++) {
        for (size_t c = 0; c < cols_; c++) {
            m.set(r, c, at(r, c));
        }
        for (size_t c = 0; c < right.cols_; c++) {
            m.set(r, cols_ + c, right.at(r, c));
        }
    }
    return m;
}

GeneratorMap GeneratorMap::vstack(const GeneratorMap &below) const {
    if (cols_ != below.cols_ || dim_ != below.dim_) {
        throw std::invalid_argument("vstack shape mismatch");
    }
    GeneratorMap m = zero(dim_, rows_ + below.rows_, cols_);
    for (size_t c = 0; c < cols_; c++) {
        for (size_t r = 0; r < rows_; r++) {
            m.set(r, c, at(r, c));
        }
        for (size_t r = 0; r < below.rows_; r++) {
            m.set(rows_ + r, c, below.at(r, c));
        }
    }
    return m;
}

GeneratorMap GeneratorMap::operator+(const GeneratorMap &other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_ || dim_ != other.dim_) {
        throw std::invalid_argument("generator map sum shape mismatch");
    }
    GeneratorMap m = *this;
    for (size_t k = 0; k < entries_.size(); k++) {
        m.entries_[k] += other.entries_[k];
    }
    return m;
}

bool GeneratorMap::is_zero() const {
    return !first_nonzero().has_value();
}

std::optional<std::pair<size_t, size_t>> GeneratorMap::first_nonzero() const {
    for (size_t k = 0; k < entries_.size(); k++) {
        if (!entries_[k].is_zero()) {
            return std::pair{k / cols_, k % cols_};
        }
    }
    return std::nullopt;
}

std::optional<std::pair<Exponent, Exponent>> GeneratorMap::support_box() const {
    std::optional<std::pair<Exponent, Exponent>> box;
    for (const auto &p : entries_) {
        if (p.is_zero()) {
            continue;
        }
        auto [lo, hi] = p.support_box();
        if (!box) {
            box = std::pair{lo, hi};
            continue;
        }
        for (size_t k = 0; k < dim_; k++) {
            box->first[k] = std::min(box->first[k], lo[k]);
            box->second[k] = std::max(box->second[k], hi[k]);
        }
    }
    return box;
}

std::string GeneratorMap::str() const {
    std::string s;
    for (size_t r = 0; r < rows_; r++) {
        s += "[";
        for (size_t c = 0; c < cols_; c++) {
            if (c) {
                s += ", ";
            }
            s += at(r, c).str();
        }
        s += "]\n";
    }
    return s;
}

PauliColumn PauliColumn::identity(size_t dim, size_t q) {
    return PauliColumn{dim, q, std::vector<LaurentPoly>(q, LaurentPoly(dim)),
                       std::vector<LaurentPoly>(q, LaurentPoly(dim))};
}

PauliColumn PauliColumn::single_x(size_t dim, size_t q, size_t qubit, const Exponent &site) {
    PauliColumn p = identity(dim, q);
    p.x.at(qubit) = LaurentPoly::monomial(site);
    return p;
}

PauliColumn PauliColumn::single_z(size_t dim, size_t q, size_t qubit, const Exponent &site) {
    PauliColumn p = identity(dim, q);
    p.z.at(qubit) = LaurentPoly::monomial(site);
    return p;
}

PauliColumn PauliColumn::from_map(const GeneratorMap &m, size_t c) {
    if (m.rows() % 2 != 0) {
        throw std::invalid_argument("Pauli map needs an even number of rows");
    }
    size_t q = m.rows() / 2;
    PauliColumn p = identity(m.dim(), q);
    for (size_t k = 0; k < q; k++) {
        p.x[k] = m.at(k, c);
        p.z[k] = m.at(q + k, c);
    }
    return p;
}

GeneratorMap PauliColumn::to_map() const {
    GeneratorMap m = GeneratorMap::zero(dim, 2 * q, 1);
    for (size_t k = 0; k < q; k++) {
        m.set(k, 0, x[k]);
        m.set(q + k, 0, z[k]);
    }
    return m;
}

bool PauliColumn::is_identity() const {
    for (size_t k = 0; k < q; k++) {
        if (!x[k].is_zero() || !z[k].is_zero()) {
            return false;
        }
    }
    return true;
}

PauliColumn PauliColumn::shifted(const Exponent &shift) const {
    PauliColumn p = *this;
    for (size_t k = 0; k < q; k++) {
        p.x[k] = x[k].shifted(shift);
        p.z[k] = z[k].shifted(shift);
    }
    return p;
}

PauliColumn PauliColumn::operator*(const PauliColumn &other) const {
    if (q != other.q || dim != other.dim) {
        throw std::invalid_argument("Pauli product shape mismatch");
    }
    PauliColumn p = *this;
    for (size_t k = 0; k < q; k++) {
        p.x[k] += other.x[k];
        p.z[k] += other.z[k];
    }
    return p;
}

GeneratorMap dagger(const GeneratorMap &m) {
    GeneratorMap d = GeneratorMap::zero(m.dim(), m.cols(), m.rows());
    for (size_t r = 0; r < m.rows(); r++) {
        for (size_t c = 0; c < m.cols(); c++) {
            d.set(c, r, m.at(r, c).antipode());
        }
    }
    return d;
}

GeneratorMap compose(const GeneratorMap &a, const GeneratorMap &b) {
    if (a.cols() != b.rows()) {
        throw std::invalid_argument(
            "cannot compose " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " with " +
            std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    }
    if (a.dim() != b.dim()) {
        throw std::invalid_argument("composition dimension mismatch");
    }
    GeneratorMap out = GeneratorMap::zero(a.dim(), a.rows(), b.cols());
    for (size_t i = 0; i < a.rows(); i++) {
        for (size_t j = 0; j < b.cols(); j++) {
            LaurentPoly acc(a.dim());
            for (size_t k = 0; k < a.cols(); k++) {
                if (!a.at(i, k).is_zero() && !b.at(k, j).is_zero()) {
                    acc += a.at(i, k) * b.at(k, j);
                }
            }
            out.set(i, j, std::move(acc));
        }
    }
    return out;
}

std::vector<LaurentPoly> apply_map(const GeneratorMap &m, const std::vector<LaurentPoly> &col) {
    if (col.size() != m.cols()) {
        throw std::invalid_argument("column length does not match map");
    }
    return compose(m, GeneratorMap::from_columns(m.dim(), col.size(), {col})).column(0);
}

LaurentPoly symplectic_pair(const PauliColumn &a, const PauliColumn &b) {
    if (a.q != b.q || a.dim != b.dim) {
        throw std::invalid_argument("symplectic pair shape mismatch");
    }
    LaurentPoly acc(a.dim);
    for (size_t k = 0; k < a.q; k++) {
        acc += a.z[k].antipode() * b.x[k];
        acc += a.x[k].antipode() * b.z[k];
    }
    return acc;
}

GeneratorMap swap_sectors(const GeneratorMap &m) {
    if (m.rows() % 2 != 0) {
        throw std::invalid_argument("sector swap needs an even number of rows");
    }
    size_t q = m.rows() / 2;
    return m.rows_slice(q, 2 * q).vstack(m.rows_slice(0, q));
}

GeneratorMap epsilon_of(const GeneratorMap &sigma) {
    if (sigma.rows() % 2 != 0) {
        throw std::invalid_argument("epsilon_of needs a map with 2Q rows");
    }
    return dagger(swap_sectors(sigma));
}

size_t generic_rank(const GeneratorMap &m) {
    // Fraction-free (Bareiss) elimination with full pivoting; every division
    // below is exact in the Laurent ring.
    size_t rows = m.rows();
    size_t cols = m.cols();
    std::vector<std::vector<LaurentPoly>> a(rows);
    for (size_t r = 0; r < rows; r++) {
        for (size_t c = 0; c < cols; c++) {
            a[r].push_back(m.at(r, c));
        }
    }
    std::vector<size_t> col_order(cols);
    for (size_t c = 0; c < cols; c++) {
        col_order[c] = c;
    }
    LaurentPoly prev = LaurentPoly::one(m.dim());
    size_t rank = 0;
    for (size_t k = 0; k < std::min(rows, cols); k++) {
        size_t pr = rows;
        size_t pc = cols;
        size_t best = 0;
        for (size_t r = k; r < rows; r++) {
            for (size_t c = k; c < cols; c++) {
                const auto &p = a[r][col_order[c]];
                if (!p.is_zero() && (pr == rows || p.size() < best)) {
                    pr = r;
                    pc = c;
                    best = p.size();
                }
            }
        }
        if (pr == rows) {
            break;
        }
        std::swap(a[k], a[pr]);
        std::swap(col_order[k], col_order[pc]);
        const LaurentPoly pivot = a[k][col_order[k]];
        for (size_t r = k + 1; r < rows; r++) {
            const LaurentPoly lead = a[r][col_order[k]];
            for (size_t c = k + 1; c < cols; c++) {
                size_t cc = col_order[c];
                LaurentPoly v = pivot * a[r][cc] + lead * a[k][cc];
                a[r][cc] = divide_exact(v, prev);
            }
            a[r][col_order[k]] = LaurentPoly(m.dim());
        }
        prev = pivot;
        rank++;
    }
    return rank;
}

CodeSpec CodeSpec::make_css(
    std::string name, const GeneratorMap &sigma_x, const GeneratorMap &sigma_z, std::string notes) {
    if (sigma_x.rows() != sigma_z.rows() || sigma_x.dim() != sigma_z.dim()) {
        throw std::invalid_argument("sigma_x and sigma_z must act on the same qubits");
    }
    size_t q = sigma_x.rows();
    size_t dim = sigma_x.dim();
    GeneratorMap top = sigma_x.hstack(GeneratorMap::zero(dim, q, sigma_z.cols()));
    GeneratorMap bottom = GeneratorMap::zero(dim, q, sigma_x.cols()).hstack(sigma_z);
    CodeSpec code;
    code.name = std::move(name);
    code.dim = dim;
    code.q = q;
    code.css = true;
    code.n_x = sigma_x.cols();
    code.sigma = top.vstack(bottom);
    code.notes = std::move(notes);
    return code;
}

CodeSpec CodeSpec::make(std::string name, size_t q, const GeneratorMap &sigma, std::string notes) {
    if (sigma.rows() != 2 * q) {
        throw std::invalid_argument("sigma must have 2Q rows");
    }
    CodeSpec code;
    code.name = std::move(name);
    code.dim = sigma.dim();
    code.q = q;
    code.css = false;
    code.n_x = 0;
    code.sigma = sigma;
    code.notes = std::move(notes);
    return code;
}

GeneratorMap CodeSpec::sigma_x() const {
    return sigma.rows_slice(0, q).cols_slice(0, n_x);
}

GeneratorMap CodeSpec::sigma_z() const {
    return sigma.rows_slice(q, 2 * q).cols_slice(n_x, sigma.cols());
}

void CodeSpec::validate() const {
    if (sigma.rows() != 2 * q) {
        throw std::invalid_argument("code '" + name + "': sigma must have 2Q rows");
    }
    if (sigma.dim() != dim) {
        throw std::invalid_argument("code '" + name + "': sigma dimension mismatch");
    }
    if (!css) {
        return;
    }
    if (n_x > sigma.cols()) {
        throw std::invalid_argument("code '" + name + "': more X types than generators");
    }
    if (!sigma.rows_slice(q, 2 * q).cols_slice(0, n_x).is_zero() ||
        !sigma.rows_slice(0, q).cols_slice(n_x, sigma.cols()).is_zero()) {
        throw std::invalid_argument("code '" + name + "': generators are not of pure CSS type");
    }
}

std::string StabilizerReport::str() const {
    if (commuting) {
        return "commuting: epsilon * sigma = 0";
    }
    return "not commuting: (epsilon * sigma)[" + std::to_string(row) + "," + std::to_string(col) +
           "] = " + witness.str();
}

StabilizerReport verify_stabilizer(const CodeSpec &code) {
    code.validate();
    GeneratorMap prod = compose(epsilon_of(code.sigma), code.sigma);
    StabilizerReport rep;
    auto nz = prod.first_nonzero();
    rep.commuting = !nz.has_value();
    rep.witness = LaurentPoly(code.dim);
    if (nz) {
        rep.row = nz->first;
        rep.col = nz->second;
        rep.witness = prod.at(nz->first, nz->second);
    }
    return rep;
}

namespace {

char pauli_letter(bool x, bool z) {
    if (x && z) {
        return 'Y';
    }
    return x ? 'X' : z ? 'Z' : 'I';
}

}  // namespace

std::string render_diagram(const PauliColumn &op) {
    if (op.dim > 3) {
        throw std::invalid_argument("render_diagram supports at most 3 dimensions");
    }
    auto box = op.to_map().support_box();
    Exponent lo = box ? box->first : zero_exponent(op.dim);
    Exponent hi = box ? box->second : zero_exponent(op.dim);
    // Pad to three axes so one loop covers d = 0..3.
    int32_t lo3[3] = {0, 0, 0};
    int32_t hi3[3] = {0, 0, 0};
    for (size_t k = 0; k < op.dim; k++) {
        lo3[k] = lo[k];
        hi3[k] = hi[k];
    }
    auto cell = [&](int32_t x, int32_t y, int32_t z) {
        Exponent e(op.dim);
        int32_t xyz[3] = {x, y, z};
        for (size_t k = 0; k < op.dim; k++) {
            e[k] = xyz[k];
        }
        std::string s;
        for (size_t j = 0; j < op.q; j++) {
            s += pauli_letter(op.x[j].coefficient(e), op.z[j].coefficient(e));
        }
        return s;
    };
    std::string out;
    for (int32_t z = lo3[2]; z <= hi3[2]; z++) {
        if (op.dim == 3) {
            out += "z=" + std::to_string(z) + "\n";
        }
        for (int32_t y = hi3[1]; y >= lo3[1]; y--) {
            for (int32_t x = lo3[0]; x <= hi3[0]; x++) {
                if (x != lo3[0]) {
                    out += ' ';
                }
                out += cell(x, y, z);
            }
            out += '\n';
        }
    }
    if (!out.empty()) {
        out.pop_back();
    }
    return out;
}

std::string render_diagram(const GeneratorMap &sigma) {
    std::string out;
    for (size_t c = 0; c < sigma.cols(); c++) {
        if (c) {
            out += "\n\n";
        }
        out += "generator " + std::to_string(c) + ":\n";
        out += render_diagram(PauliColumn::from_map(sigma, c));
    }
    return out;
}

std::vector<LaurentPoly> normalize_column(const std::vector<LaurentPoly> &col) {
    std::optional<Exponent> least;
    for (const auto &p : col) {
        if (!p.is_zero() && (!least || p.terms().front() < *least)) {
            least = p.terms().front();
        }
    }
    if (!least) {
        return col;
    }
    Exponent shift = -*least;
    std::vector<LaurentPoly> out;
    out.reserve(col.size());
    for (const auto &p : col) {
        out.push_back(p.shifted(shift));
    }
    return out;
}

GeneratorMap normalize_columns(const GeneratorMap &m, bool sort_columns) {
    std::vector<std::vector<LaurentPoly>> cols;
    for (size_t c = 0; c < m.cols(); c++) {
        cols.push_back(normalize_column(m.column(c)));
    }
    if (sort_columns) {
        std::sort(cols.begin(), cols.end());
    }
    return GeneratorMap::from_columns(m.dim(), m.rows(), cols);
}

bool equal_up_to_translation(const GeneratorMap &a, const GeneratorMap &b, bool allow_permutation) {
    if (a.rows() != b.rows() || a.cols() != b.cols() || a.dim() != b.dim()) {
        return false;
    }
    return normalize_columns(a, allow_permutation) == normalize_columns(b, allow_permutation);
}

}  // namespace tistab
