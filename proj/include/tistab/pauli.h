#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tistab/polynomial.h"

namespace tistab {

/// Matrix of Laurent polynomials, i.e. a map between free modules over
/// GF(2)[x_1^±, ..., x_d^±]. Stabilizer maps have 2Q rows: X block first.
class GeneratorMap {
  public:
    GeneratorMap() = default;
    static GeneratorMap zero(size_t dim, size_t rows, size_t cols);
    static GeneratorMap identity(size_t dim, size_t n);
    static GeneratorMap from_rows(size_t dim, const std::vector<std::vector<LaurentPoly>> &rows);
    static GeneratorMap from_columns(size_t dim, size_t rows, const std::vector<std::vector<LaurentPoly>> &cols);
    /// Rows of polynomial text (see LaurentPoly::parse).
    static GeneratorMap parse(size_t dim, const std::vector<std::vector<std::string>> &rows);

    size_t dim() const { return dim_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    const LaurentPoly &at(size_t r, size_t c) const { return entries_[r * cols_ + c]; }
    void set(size_t r, size_t c, LaurentPoly p);

    std::vector<LaurentPoly> column(size_t c) const;
    GeneratorMap column_map(size_t c) const;
    GeneratorMap rows_slice(size_t begin, size_t end) const;
    GeneratorMap cols_slice(size_t begin, size_t end) const;
    GeneratorMap hstack(const GeneratorMap &right) const;
    GeneratorMap vstack(const GeneratorMap &below) const;

    GeneratorMap operator+(const GeneratorMap &other) const;
    bool is_zero() const;
    /// First nonzero entry in row-major order.
    std::optional<std::pair<size_t, size_t>> first_nonzero() const;

    /// Componentwise min/max exponents over all entries; nullopt when zero.
    std::optional<std::pair<Exponent, Exponent>> support_box() const;

    std::string str() const;

    bool operator==(const GeneratorMap &other) const = default;

  private:
    size_t dim_ = 0;
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<LaurentPoly> entries_;
};

/// A lattice Pauli operator up to phase: X block and Z block of Q polynomials.
struct PauliColumn {
    size_t dim = 0;
    size_t q = 0;
    std::vector<LaurentPoly> x;
    std::vector<LaurentPoly> z;

    static PauliColumn identity(size_t dim, size_t q);
    /// Single X (or Z) on qubit `qubit` of the site at `site`.
    static PauliColumn single_x(size_t dim, size_t q, size_t qubit, const Exponent &site);
    static PauliColumn single_z(size_t dim, size_t q, size_t qubit, const Exponent &site);
    /// Column `c` of a 2Q-row map.
    static PauliColumn from_map(const GeneratorMap &m, size_t c);
    GeneratorMap to_map() const;

    bool is_identity() const;
    PauliColumn shifted(const Exponent &shift) const;
    PauliColumn operator*(const PauliColumn &other) const;
    bool operator==(const PauliColumn &other) const = default;
};

GeneratorMap dagger(const GeneratorMap &m);
GeneratorMap compose(const GeneratorMap &a, const GeneratorMap &b);
/// m applied to a single column.
std::vector<LaurentPoly> apply_map(const GeneratorMap &m, const std::vector<LaurentPoly> &col);

/// ā_z·b_x + ā_x·b_z. The x^i coefficient is 1 iff b anticommutes with the
/// i-translate of a.
LaurentPoly symplectic_pair(const PauliColumn &a, const PauliColumn &b);

/// σ†λ_Q, i.e. [σ_Z† | σ_X†].
GeneratorMap epsilon_of(const GeneratorMap &sigma);

/// Rank over the field of fractions of the Laurent ring.
size_t generic_rank(const GeneratorMap &m);

/// Translation-invariant stabilizer code. For CSS codes the first n_x columns
/// of sigma are X type (zero Z block) and the rest are Z type.
struct CodeSpec {
    std::string name;
    size_t dim = 0;
    size_t q = 0;
    bool css = false;
    size_t n_x = 0;
    GeneratorMap sigma;
    std::string notes;

    static CodeSpec make_css(std::string name, const GeneratorMap &sigma_x, const GeneratorMap &sigma_z,
                             std::string notes = "");
    static CodeSpec make(std::string name, size_t q, const GeneratorMap &sigma, std::string notes = "");

    size_t num_generators() const { return sigma.cols(); }
    PauliColumn generator(size_t t) const { return PauliColumn::from_map(sigma, t); }
    /// Q × n_x and Q × (T − n_x); only meaningful when css.
    GeneratorMap sigma_x() const;
    GeneratorMap sigma_z() const;
    /// Checks shapes and the CSS block structure.
    void validate() const;

    bool operator==(const CodeSpec &other) const = default;
};

struct StabilizerReport {
    bool commuting = false;
    size_t row = 0;
    size_t col = 0;
    LaurentPoly witness;
    std::string str() const;
};

StabilizerReport verify_stabilizer(const CodeSpec &code);

/// ASCII picture of the operator over its support box. Each site shows Q
/// letters from {I,X,Y,Z}; rows run from high y to low y, x left to right;
/// 3D operators print one labelled z slice after another.
std::string render_diagram(const PauliColumn &op);
std::string render_diagram(const GeneratorMap &sigma);

/// Translates a column so that its lex-least monomial sits at the origin.
std::vector<LaurentPoly> normalize_column(const std::vector<LaurentPoly> &col);
/// Per-column normalization; columns optionally sorted into canonical order.
GeneratorMap normalize_columns(const GeneratorMap &m, bool sort_columns);
bool equal_up_to_translation(const GeneratorMap &a, const GeneratorMap &b, bool allow_permutation);
/// Exchanges the X and Z row blocks of a 2Q-row map.
GeneratorMap swap_sectors(const GeneratorMap &m);

}  // namespace tistab
