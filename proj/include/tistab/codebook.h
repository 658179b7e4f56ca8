#pragma once

#include <string>
#include <vector>

#include "tistab/pauli.h"

namespace tistab {

/// Names accepted by get_code; generalized toric codes are written
/// "generalized_toric(d,k)".
std::vector<std::string> codebook_names();

/// Throws std::invalid_argument for unknown names or invalid (d, k).
CodeSpec get_code(const std::string &name);

/// Hypercubic complex in d dimensions: qubits on k-cells, X stabilizers on
/// (k−1)-cells, Z stabilizers on (k+1)-cells, 0 ≤ k ≤ d. Qubit types are the
/// k-subsets of axes in descending bitmask order.
CodeSpec generalized_toric(size_t d, size_t k);

}  // namespace tistab
