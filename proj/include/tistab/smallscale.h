#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "tistab/gauging.h"
#include "tistab/torus.h"

namespace tistab {

/// Raised when a dense computation would exceed the qubit cap.
class QubitCapError : public std::length_error {
  public:
    using std::length_error::length_error;
};

constexpr size_t kDefaultQubitCap = 20;
/// Construction identities (involutions, idempotence).
constexpr double kConstructionTol = 1e-12;
/// Derived equalities (lemma checks).
constexpr double kDerivedTol = 1e-10;

/// Matter qubits first (index site·Q + q), then gauge qubits (index
/// n_m + site·T + t); sites in torus order. Bit i of a basis index is qubit i.
struct DenseLattice {
    TorusShape shape;
    size_t matter_q = 0;
    size_t gauge_q = 0;
    size_t n_matter = 0;
    size_t n_gauge = 0;

    size_t num_qubits() const { return n_matter + n_gauge; }
    size_t full_dim() const { return size_t(1) << num_qubits(); }
    size_t matter_dim() const { return size_t(1) << n_matter; }
};

DenseLattice make_lattice(const SymmetryModel &model, const TorusShape &shape, size_t cap = kDefaultQubitCap);

/// X^x Z^z on basis bits: (Oψ)[b ⊕ x] = (−1)^{|b ∧ z|} ψ[b]. Real throughout.
struct DensePauli {
    uint32_t x = 0;
    uint32_t z = 0;

    Eigen::VectorXd apply(const Eigen::VectorXd &psi) const;
    /// (1 + O)/2 applied to psi.
    Eigen::VectorXd project(const Eigen::VectorXd &psi) const;
    /// Dense matrix; only for small registers.
    Eigen::MatrixXd matrix(size_t n_qubits) const;
};

/// Matter-only operator (Q qubits per site).
DensePauli dense_matter(const DenseLattice &lat, const PauliColumn &op);
/// Gauge-only operator (T qubits per site).
DensePauli dense_gauge(const DenseLattice &lat, const PauliColumn &op);
/// Operator on the matter ⊕ gauge layout (Q + T qubits per site).
DensePauli dense_full(const DenseLattice &lat, const PauliColumn &op);

/// Every translate of every π generator.
std::vector<DensePauli> constraint_paulis(const SymmetryModel &model, const DenseLattice &lat);

/// Z fields on the gauge qubits: translates of the columns of mu.
std::vector<DensePauli> flux_paulis(const DenseLattice &lat, const GeneratorMap &mu);
/// Z fields for a basis of the torus kernel of η, holonomies included.
std::vector<DensePauli> completed_flux_paulis(const SymmetryModel &model, const DenseLattice &lat);

/// Enumerated X-symmetry group (masks on the matter qubits) from the torus kernel of η†.
std::vector<uint32_t> symmetry_group(const SymmetryModel &model, const DenseLattice &lat);
/// Average of the symmetry group on the matter space.
Eigen::MatrixXd symmetric_projector(const SymmetryModel &model, const DenseLattice &lat);

/// G|ψ⟩ = scale · P(|ψ⟩ ⊗ |0…0⟩). scale = 1 is the literal map; the
/// normalized map uses sqrt(2^{n_m}/|K|) so that G†G is a projector.
class StateGaugingMap {
  public:
    StateGaugingMap(const SymmetryModel &model, const DenseLattice &lat, bool normalized);

    const DenseLattice &lattice() const { return lat_; }
    double scale() const { return scale_; }
    size_t symmetry_group_size() const { return group_size_; }

    Eigen::VectorXd apply(const Eigen::VectorXd &matter) const;
    Eigen::VectorXd adjoint(const Eigen::VectorXd &full) const;
    /// Columns G|b⟩ for every matter basis state.
    Eigen::MatrixXd matrix() const;

  private:
    DenseLattice lat_;
    double scale_ = 1.0;
    size_t group_size_ = 1;
    /// Gauge bits (unshifted) of η†s for every matter mask s.
    std::vector<uint32_t> gauge_image_;
};

StateGaugingMap build_G(const SymmetryModel &model, const TorusShape &shape, bool normalized = false,
                        size_t cap = kDefaultQubitCap);

/// The projected operator 𝒢[O] = 𝒫_Γ[O ⊗ |0⟩⟨0|_Γ], averaged over the
/// projector choices on Γ. It equals O on the matter qubits times a diagonal
/// function of the gauge bits inside Γ.
struct ProjectedOperator {
    DensePauli matter_op;
    uint32_t gamma_matter = 0;
    uint32_t gamma_gauge = 0;
    size_t n_matter = 0;
    std::unordered_map<uint32_t, double> diagonal;

    Eigen::VectorXd apply(const Eigen::VectorXd &full) const;
};

/// Throws NotSymmetricError for non-symmetric input.
ProjectedOperator projected_gauge_operator(const SymmetryModel &model, const DenseLattice &lat, const PauliColumn &op);

/// The Pauli form: disentangled image of gauge_operator, X_g(η†a) Z_m(ηs) Z_g(s).
DensePauli pauli_gauge_operator(const SymmetryModel &model, const DenseLattice &lat, const PauliColumn &op);

struct CheckReport {
    std::string name;
    bool passed = false;
    double deviation = 0.0;
    double tolerance = kDerivedTol;
    std::string detail;
    std::string str() const;
};

CheckReport check_lemma2(const SymmetryModel &model, const TorusShape &shape, size_t cap = kDefaultQubitCap);
/// Both 𝒢 constructions must intertwine; the deviation is the larger one.
CheckReport check_lemma3(const SymmetryModel &model, const TorusShape &shape, const PauliColumn &op,
                         size_t cap = kDefaultQubitCap);
CheckReport check_claim1(const SymmetryModel &model, const TorusShape &shape, const PauliColumn &op,
                         size_t cap = kDefaultQubitCap);
/// Throws std::invalid_argument when psi0 is not symmetric.
CheckReport check_matrix_element(const SymmetryModel &model, const TorusShape &shape, const PauliColumn &op,
                                 const Eigen::VectorXd &psi0, const Eigen::VectorXd &psi1,
                                 size_t cap = kDefaultQubitCap);
/// Randomized: symmetrized random psi0, random psi1.
CheckReport check_matrix_elements(const SymmetryModel &model, const TorusShape &shape, const PauliColumn &op,
                                  size_t trials = 20, uint64_t seed = 2017, size_t cap = kDefaultQubitCap);

enum class FluxChoice { local, completed };

/// Ground space of the π constraints plus flux fields against span{G|λ⟩}.
/// With local flux generators the exactness assumption is tested first and
/// its failure reported as "assumption violated".
CheckReport check_groundspace_span(const SymmetryModel &model, const TorusShape &shape, FluxChoice flux,
                                   std::optional<Exponent> box = std::nullopt, size_t cap = kDefaultQubitCap);

/// Dimension of the joint +1 space of commuting Paulis, by summing the
/// diagonal of the product of their projectors.
size_t stabilized_dimension(const std::vector<DensePauli> &paulis, size_t n_qubits);

/// Parses "all", "lemma2", "lemma3", "claim1", "elements" or "groundspace".
std::vector<std::string> parse_check_list(const std::string &text);

/// Runs the named checks with the default operators: a single matter X and
/// the first constraint term as a Z product.
std::vector<CheckReport> run_checks(const SymmetryModel &model, const TorusShape &shape,
                                    const std::vector<std::string> &checks, size_t cap = kDefaultQubitCap);

}  // namespace tistab
