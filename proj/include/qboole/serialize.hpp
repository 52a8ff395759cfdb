#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "qboole/hamiltonian.hpp"
#include "qboole/matrix.hpp"
#include "qboole/pauli.hpp"

namespace qboole {

/// {"rows": R, "cols": C, "entries": [[re, im], ...]} row-major.
nlohmann::json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const nlohmann::json& j);

/// {"size": d, "image": [...]}.
nlohmann::json perm_to_json(const PermutationSpec& p);
PermutationSpec perm_from_json(const nlohmann::json& j);

/// Accepts either a dense matrix object ("entries") or a permutation
/// object ("image"); dense input is validated with from_dense(tol).
PermutationSpec perm_from_matrix_json(const nlohmann::json& j, double tol);

/// {"K": ..., "H": ..., "residual": r, "omega_t_convention": 1.0}.
nlohmann::json hamiltonian_to_json(const HamiltonianResult& result);

/// {"n": n, "basis": "sigma"|"spin",
///  "terms": [{"word": [...], "re": r, "im": i}, ...]}.
nlohmann::json pauli_to_json(const std::vector<PauliTerm>& terms, std::size_t n,
                             bool spin_basis);

/// Wraps nlohmann parse errors in ParseError with a one-line message.
nlohmann::json parse_json(const std::string& text);

}  // namespace qboole
