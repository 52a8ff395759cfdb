#include "qboole/synth.hpp"

#include <bit>
#include <cmath>
#include <utility>

#include "qboole/errors.hpp"

namespace qboole {

ReversibleMap::ReversibleMap(std::size_t bit_count, std::vector<std::uint64_t> perm)
    : bits_(bit_count), perm_(std::move(perm)) {
  if (bits_ == 0 || bits_ > 63)
    throw DimensionError("reversible map needs 1..63 bits, got " + std::to_string(bits_));
  std::uint64_t d = std::uint64_t{1} << bits_;
  if (perm_.size() != d)
    throw DimensionError("reversible map on " + std::to_string(bits_) + " bits needs " +
                         std::to_string(d) + " entries, got " + std::to_string(perm_.size()));
  std::vector<bool> seen(d, false);
  for (std::uint64_t k = 0; k < d; ++k) {
    std::uint64_t v = perm_[k];
    if (v >= d)
      throw NotReversibleError("image " + std::to_string(v) + " of state " + std::to_string(k) +
                               " outside 0.." + std::to_string(d - 1));
    if (seen[v])
      throw NotReversibleError("two states map to " + decode(v, bits_).str());
    seen[v] = true;
  }
}

ReversibleMap ReversibleMap::identity(std::size_t bit_count) {
  if (bit_count == 0 || bit_count > 63)
    throw DimensionError("reversible map needs 1..63 bits, got " + std::to_string(bit_count));
  std::vector<std::uint64_t> perm(std::uint64_t{1} << bit_count);
  for (std::uint64_t k = 0; k < perm.size(); ++k) perm[k] = k;
  return ReversibleMap(bit_count, std::move(perm));
}

ReversibleMap map_from_truth_table(const TruthTable& tt) {
  if (tt.outputs() != tt.inputs())
    throw NotReversibleError("a reversible map needs as many outputs as inputs; table has " +
                             std::to_string(tt.inputs()) + " inputs and " +
                             std::to_string(tt.outputs()) + " outputs");
  std::uint64_t d = tt.size();
  std::vector<std::uint64_t> perm(d);
  std::vector<std::uint64_t> first(d, d);  // first[v] = earliest input hitting v
  for (std::uint64_t k = 0; k < d; ++k) {
    std::uint64_t v = encode(tt.row(k));
    if (first[v] != d)
      throw NotReversibleError("inputs " + decode(first[v], tt.inputs()).str() + " and " +
                               decode(k, tt.inputs()).str() + " both map to " +
                               tt.row(k).str());
    first[v] = k;
    perm[k] = v;
  }
  return ReversibleMap(tt.inputs(), std::move(perm));
}

PermutationSpec matrix_from_map(const ReversibleMap& map) {
  std::vector<std::size_t> image(map.size());
  for (std::uint64_t k = 0; k < map.size(); ++k) image[k] = map.apply(k);
  return PermutationSpec(std::move(image));
}

ReversibleMap map_from_matrix(const PermutationSpec& p) {
  if (!std::has_single_bit(p.size()))
    throw DimensionError("matrix size " + std::to_string(p.size()) +
                         " is not a power of two; no bit interpretation");
  std::size_t bits = static_cast<std::size_t>(std::bit_width(p.size()) - 1);
  std::vector<std::uint64_t> perm(p.size());
  for (std::size_t c = 0; c < p.size(); ++c) perm[c] = p.image_of(c);
  return ReversibleMap(bits, std::move(perm));
}

TruthTable truth_table_from_map(const ReversibleMap& map) {
  std::vector<BitVector> rows;
  rows.reserve(map.size());
  for (std::uint64_t k = 0; k < map.size(); ++k) rows.push_back(decode(map.apply(k), map.bits()));
  return TruthTable(map.bits(), map.bits(), std::move(rows));
}

ReversibleMap invert(const ReversibleMap& map) {
  std::vector<std::uint64_t> perm(map.size());
  for (std::uint64_t k = 0; k < map.size(); ++k) perm[map.apply(k)] = k;
  return ReversibleMap(map.bits(), std::move(perm));
}

ReversibleMap compose(const ReversibleMap& first, const ReversibleMap& second) {
  if (first.bits() != second.bits())
    throw DimensionError("compose on maps of " + std::to_string(first.bits()) + " and " +
                         std::to_string(second.bits()) + " bits");
  std::vector<std::uint64_t> perm(first.size());
  for (std::uint64_t k = 0; k < first.size(); ++k) perm[k] = second.apply(first.apply(k));
  return ReversibleMap(first.bits(), std::move(perm));
}

PermutationSpec oracle_matrix(const TruthTable& tt) {
  if (tt.outputs() != 1)
    throw DimensionError("oracle needs a single-output table, got " +
                         std::to_string(tt.outputs()) + " outputs");
  std::size_t n = tt.inputs();
  if (n + 1 > 63) throw DimensionError("oracle on " + std::to_string(n) + " inputs is too wide");
  std::vector<std::size_t> image((std::size_t{1} << (n + 1)));
  for (std::uint64_t x = 0; x < tt.size(); ++x) {
    std::uint64_t f = tt.output_bit(x, 0) ? 1 : 0;
    for (std::uint64_t y = 0; y < 2; ++y) image[(x << 1) | y] = (x << 1) | (y ^ f);
  }
  return PermutationSpec(std::move(image));
}

ComplexMatrix hadamard_power(std::size_t k) {
  ComplexMatrix h(2, 2);
  const double s = 1.0 / std::sqrt(2.0);
  h.at(0, 0) = s;
  h.at(0, 1) = s;
  h.at(1, 0) = s;
  h.at(1, 1) = -s;
  ComplexMatrix w = ComplexMatrix::identity(1);
  for (std::size_t i = 0; i < k; ++i) w = kron(w, h);
  return w;
}

ComplexMatrix hadamard_conjugate(const ComplexMatrix& u) {
  if (!u.square())
    throw DimensionError("hadamard_conjugate needs a square matrix, got " +
                         std::to_string(u.rows()) + "x" + std::to_string(u.cols()));
  if (u.rows() == 0 || !std::has_single_bit(u.rows()))
    throw DimensionError("hadamard_conjugate needs size 2^k, got " + std::to_string(u.rows()));
  std::size_t k = static_cast<std::size_t>(std::bit_width(u.rows()) - 1);
  ComplexMatrix w = hadamard_power(k);
  return matmul(matmul(w, u), w);
}

}  // namespace qboole
