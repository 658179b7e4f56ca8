#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tistab/gf2.h"
#include "tistab/pauli.h"

namespace tistab {

/// Periodic lattice Z_{L_1} × ... × Z_{L_d}; every L_i ≥ 2.
class TorusShape {
  public:
    TorusShape() = default;
    explicit TorusShape(std::vector<int32_t> lengths);
    /// Parses "4,4,4".
    static TorusShape parse(std::string_view text);
    static TorusShape cube(size_t dim, int32_t length);

    size_t dim() const { return lengths_.size(); }
    const std::vector<int32_t> &lengths() const { return lengths_; }
    size_t num_sites() const;

    /// Row-major site index (first axis slowest) of an exponent reduced mod L.
    size_t site_index(const Exponent &e) const;
    Exponent site_coords(size_t index) const;

    std::string str() const;
    bool operator==(const TorusShape &other) const = default;

  private:
    std::vector<int32_t> lengths_;
};

/// Binary matrix of `m` on the torus. Row site*R + r holds row r of the map at
/// that site; column site*C + c is generator c translated by x^site. Matching
/// layouts make instantiate(a)·instantiate(b) = instantiate(a∘b).
Gf2Matrix instantiate(const GeneratorMap &m, const TorusShape &shape);

/// Coefficient vector (length R·N) of a single column of polynomials.
BitVec instantiate_column(const std::vector<LaurentPoly> &col, const TorusShape &shape);

/// Inputs of the bulk counting formula. Ranks are module ranks over the
/// fraction field, so x_types − rank_x counts locally redundant X generators.
struct FormulaInputs {
    size_t qubits_per_site = 0;
    size_t x_types = 0;
    size_t z_types = 0;
    size_t rank_x = 0;
    size_t rank_z = 0;
    size_t rank_total = 0;
};

struct CountReport {
    TorusShape shape;
    size_t n_sites = 0;
    size_t n_qubits = 0;
    size_t n_generator_translates = 0;
    size_t stab_rank = 0;
    size_t k_encoded = 0;
    FormulaInputs inputs;
    /// N·[Q − rank σ]; equals N[T − Q + S_X − S_Z] for CSS codes.
    int64_t bulk_term = 0;
    int64_t c_constant = 0;

    bool consistent() const;
    std::string str() const;
};

/// Throws std::invalid_argument for a non-commuting code.
CountReport count_logical(const CodeSpec &code, const TorusShape &shape);

struct GapReport {
    size_t dim_ker_eps = 0;
    size_t dim_im_sigma = 0;
    int64_t gap = 0;
    size_t k_encoded = 0;
    bool consistent = false;
    std::string str() const;
};

GapReport logical_operator_gap(const CodeSpec &code, const TorusShape &shape);

}  // namespace tistab
