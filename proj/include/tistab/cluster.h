#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tistab/gauging.h"
#include "tistab/torus.h"

namespace tistab {

/// Cluster state on the bipartite graph of η. Layout: Q matter qubits then T
/// gauge qubits per site. Stabilizer q is X on matter q times Z(η†e_q) on
/// the gauge qubits; stabilizer Q + t is X on gauge t times Z(η e_t) on matter.
struct ClusterSpec {
    size_t dim = 0;
    size_t matter_q = 0;
    size_t gauge_q = 0;
    GeneratorMap eta;
    std::vector<PauliColumn> stabilizers;

    size_t num_qubits() const { return matter_q + gauge_q; }
    CodeSpec to_code(const std::string &name) const;
};

/// Throws std::logic_error if two stabilizer translates anticommute.
ClusterSpec build_cluster(const SymmetryModel &model);

/// CZ gates between block A (qubits [a, a + n_A)) and block B (qubits
/// [b, b + n_B)) along `adjacency` (n_A × n_B): X_A(p) picks up Z_B(adj† p)
/// and X_B(p) picks up Z_A(adj p).
PauliColumn cz_layer(const PauliColumn &op, const GeneratorMap &adjacency, size_t a, size_t b);

/// The CZ layer along η on a cluster layout.
PauliColumn cz_conjugate(const ClusterSpec &c, const PauliColumn &op);

/// True when the CZ layer maps every stabilizer to a single-site X.
bool sre_witness(const ClusterSpec &c);

struct SymmetryReport {
    TorusShape shape;
    /// Pure-X operators on the sublattice commuting with every stabilizer.
    size_t matter_dim = 0;
    size_t gauge_dim = 0;
    /// dim ker η† and dim ker η on the torus.
    size_t matter_expected = 0;
    size_t gauge_expected = 0;
    /// dim ker μ† on the torus, μ the flux generators; informational.
    size_t gauge_flux_count = 0;

    bool matches() const { return matter_dim == matter_expected && gauge_dim == gauge_expected; }
    std::string str() const;
};

SymmetryReport inherited_symmetries(const ClusterSpec &c, const TorusShape &shape);

enum class Sublattice { matter, gauge, both };

/// Parses "matter", "gauge" or "both".
Sublattice parse_sublattice(const std::string &text);

/// Gauges the X symmetry of one sublattice: each single X there becomes X on
/// the adjacent partner qubits, each Z product that is a constraint term
/// becomes a single Z on its partner, and the flux fields are added as Z
/// terms on the partners. Layouts: matter gives (gauge T, partners T); gauge
/// gives (matter Q, partners Q); both gives (matter partners T, gauge
/// partners Q). The note records whether the flux fields passed the window check.
CodeSpec gauge_sublattice(const ClusterSpec &c, Sublattice which, std::optional<Exponent> box = std::nullopt);

struct SelfDualityReport {
    bool layout_ok = false;
    /// The first Q + T generators reproduce the cluster stabilizers.
    bool stabilizers_match = false;
    /// Every flux field lies in the stabilizer module of the cluster.
    bool fields_generated = false;
    size_t extra_fields = 0;
    bool passed() const { return layout_ok && stabilizers_match && fields_generated; }
    std::string str() const;
};

/// Gauges both sublattices, swaps them back, exchanges X and Z and compares
/// with the original cluster up to translation.
SelfDualityReport self_duality_check(const ClusterSpec &c, std::optional<Exponent> box = std::nullopt);

}  // namespace tistab
