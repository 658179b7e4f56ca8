#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tistab/pauli.h"
#include "tistab/syzygy.h"

namespace tistab {

/// Operator outside the symmetric subalgebra.
class NotSymmetricError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Matter qubits with a Z-type constraint map η (Q × T) and an X-type
/// symmetry map φ (Q × S) satisfying φ†η = 0. Column t of η is the Z pattern
/// of local term t; column s of φ is a symmetry generator.
struct SymmetryModel {
    size_t dim = 0;
    size_t matter_q = 0;
    GeneratorMap eta;
    GeneratorMap phi;
    std::string notes;

    size_t num_terms() const { return eta.cols(); }
    void validate() const;

    /// η = σ_Z of a Z-only code; φ from the bounded kernel of η†.
    static SymmetryModel from_code(const CodeSpec &code, std::optional<Exponent> box = std::nullopt);
    /// Z-only CSS code whose generators are the constraint terms.
    CodeSpec to_code(const std::string &name) const;
};

struct GaugingComplex {
    SymmetryModel source;
    /// σ_X = η† (one X type per matter qubit type), σ_Z = μ.
    CodeSpec code;
    KernelBasis mu;
    /// Window check of μ; strict torus equality is reported separately.
    bool mu_locally_complete = false;
};

GaugingComplex gauge(const SymmetryModel &model, std::optional<Exponent> box = std::nullopt,
                     const std::string &name = "gauged");

/// Inverse direction for CSS codes: η = σ_X†, φ = ker σ_X.
SymmetryModel ungauge_css(const CodeSpec &code, std::optional<Exponent> box = std::nullopt);

struct DualityReport {
    bool x_route = false;
    bool z_route = false;
    std::vector<std::string> differences;
    bool passed() const { return x_route && z_route; }
    std::string str() const;
};

/// Ungauge then gauge again, once through the X stabilizers and once (after
/// exchanging X and Z) through the Z stabilizers; both must reproduce the
/// code up to translation and generator order.
DualityReport double_gauge_check(const CodeSpec &code, std::optional<Exponent> box = std::nullopt);

/// Image of a symmetric matter operator on the gauge qubits: X(p) goes to
/// X(η†p); Z(r) goes to Z(s) with ηs = r. Throws NotSymmetricError when r is
/// not in the image of η.
PauliColumn gauge_operator(const SymmetryModel &model, const PauliColumn &op);

/// Generators of the gauge-invariance group on the matter ⊕ gauge layout:
/// X on matter qubit q times X(η†e_q) on the gauge qubits.
std::vector<PauliColumn> pi_generators(const SymmetryModel &model);

/// Conjugation by the CNOT layer that disentangles the projector: on the
/// matter ⊕ gauge layout, (p_m, p_g | r_m, r_g) goes to
/// (p_m, p_g + η†p_m | r_m + η r_g, r_g).
PauliColumn conjugate_by_disentangler(const SymmetryModel &model, const PauliColumn &op);

/// Embeds a matter-only or gauge-only operator into the matter ⊕ gauge layout.
PauliColumn embed_matter(const SymmetryModel &model, const PauliColumn &op);
PauliColumn embed_gauge(const SymmetryModel &model, const PauliColumn &op);

}  // namespace tistab
