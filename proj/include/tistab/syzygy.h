#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tistab/pauli.h"
#include "tistab/torus.h"

namespace tistab {

/// Local generators of ker(parent), each a column of parent.cols() polynomials.
struct KernelBasis {
    GeneratorMap parent;
    /// Extent per axis; candidate supports lie in [0, box].
    Exponent box;
    GeneratorMap generators;
    std::vector<TorusShape> certified_tori;

    size_t size() const { return generators.cols(); }
    std::vector<LaurentPoly> generator(size_t i) const { return generators.column(i); }
};

/// Extent of the support box of `m` on each axis (at least 1).
Exponent default_box(const GeneratorMap &m);

/// Searches kernel elements supported in [0, box]. Sub-boxes are visited in
/// order of volume; each contributes only what the translates of earlier
/// generators do not already span, preferring fewer terms, then smaller
/// support, then the canonical text.
KernelBasis bounded_kernel(const GeneratorMap &m, const Exponent &box);

struct CertificationReport {
    TorusShape shape;
    size_t kernel_dim = 0;
    size_t span_dim = 0;
    size_t deficit = 0;
    bool contained = false;
    bool span_equals_kernel = false;
    /// Every kernel element inside the window [0, 2·box + 1] is a combination
    /// of generator translates that fit in the window.
    bool locally_complete = false;

    bool passed() const { return contained && span_equals_kernel; }
    std::string str() const;
};

/// Requires L_i > 2·box_i. On success the shape is appended to certified_tori.
CertificationReport certify_on_torus(KernelBasis &basis, const TorusShape &shape);

/// Dimension of {p supported in [0, window] : m p = 0} minus the rank of the
/// generator translates that fit in the window.
size_t window_deficit(const GeneratorMap &m, const GeneratorMap &generators, const Exponent &window);

/// Some column p supported in [lo, hi] with m p = target, or nullopt. The
/// solution is the deterministic one from the GF(2) solver.
std::optional<std::vector<LaurentPoly>> bounded_preimage(
    const GeneratorMap &m, const std::vector<LaurentPoly> &target, const Exponent &lo, const Exponent &hi);

/// Same, searching [lo(target) − hi(m), hi(target) − lo(m)]. Smaller
/// sub-boxes are tried first when there are not too many of them.
std::optional<std::vector<LaurentPoly>> preimage(const GeneratorMap &m, const std::vector<LaurentPoly> &target);

}  // namespace tistab
