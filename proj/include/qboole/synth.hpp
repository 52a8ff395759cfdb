#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "qboole/bits.hpp"
#include "qboole/matrix.hpp"

namespace qboole {

/// A bijection on n-bit states, stored as perm[k] = image of state k under
/// the canonical encoding.
class ReversibleMap {
 public:
  /// Throws DimensionError unless 1 <= bit_count <= 63 and perm.size() is
  /// 2^bit_count; throws NotReversibleError unless perm is a bijection.
  ReversibleMap(std::size_t bit_count, std::vector<std::uint64_t> perm);

  static ReversibleMap identity(std::size_t bit_count);

  std::size_t bits() const { return bits_; }
  std::size_t size() const { return perm_.size(); }
  const std::vector<std::uint64_t>& perm() const { return perm_; }
  std::uint64_t apply(std::uint64_t k) const { return perm_[k]; }

  bool operator==(const ReversibleMap& other) const = default;

 private:
  std::size_t bits_;
  std::vector<std::uint64_t> perm_;
};

/// Interprets an n-input, n-output table as a map on states. Throws
/// NotReversibleError when outputs != inputs or two rows collide; the
/// collision diagnostic names both input assignments.
ReversibleMap map_from_truth_table(const TruthTable& tt);

/// Permutation matrix of the map: column b(x) has its 1 in row b(f(x)).
PermutationSpec matrix_from_map(const ReversibleMap& map);

/// Inverse of matrix_from_map. Throws DimensionError when the size is not
/// a power of two.
ReversibleMap map_from_matrix(const PermutationSpec& p);

/// The map as an n-input, n-output truth table.
TruthTable truth_table_from_map(const ReversibleMap& map);

ReversibleMap invert(const ReversibleMap& map);

/// first, then second: result(k) = second(first(k)).
ReversibleMap compose(const ReversibleMap& first, const ReversibleMap& second);

/// Oracle for an n-input single-output table on n+1 bits: state (x, y)
/// with y the last bit maps to (x, y xor f(x)). Fixes every state with
/// f(x) = 0 and swaps the y-pair where f(x) = 1. Throws DimensionError
/// when tt.outputs() != 1.
PermutationSpec oracle_matrix(const TruthTable& tt);

/// W u W with W the k-fold Kronecker power of the 2x2 Hadamard matrix.
/// u must be square with size 2^k; throws DimensionError otherwise.
ComplexMatrix hadamard_conjugate(const ComplexMatrix& u);

/// The k-fold Kronecker power of (1/sqrt 2)[[1,1],[1,-1]]; k = 0 gives the
/// 1x1 identity.
ComplexMatrix hadamard_power(std::size_t k);

}  // namespace qboole
