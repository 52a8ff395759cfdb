#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "qboole/bits.hpp"
#include "qboole/expr.hpp"

namespace qboole {

/// Product term over n variables. Bit j (counted as in the canonical
/// encoding: x1 at position n-1 of the word) is masked (absent from the
/// product) when mask has it set; otherwise bits gives its literal
/// polarity. Normalized: bits & mask == 0.
struct Cube {
  std::uint64_t bits = 0;
  std::uint64_t mask = 0;

  bool operator==(const Cube& other) const = default;
};

/// Ordered list of cubes of one width. Construction normalizes each cube
/// (masked bits zeroed). Width is at least 1 and at most 63.
class CubeList {
 public:
  explicit CubeList(std::size_t width);
  CubeList(std::size_t width, std::vector<Cube> cubes);

  std::size_t width() const { return width_; }
  const std::vector<Cube>& cubes() const { return cubes_; }
  std::size_t size() const { return cubes_.size(); }
  bool empty() const { return cubes_.empty(); }

  bool operator==(const CubeList& other) const = default;

 private:
  std::size_t width_;
  std::vector<Cube> cubes_;
};

/// Fully specified cubes (mask 0) for every row with output bit j set, in
/// ascending encode order. Throws DimensionError when j >= tt.outputs().
CubeList minterms(const TruthTable& tt, std::size_t output_index);

/// Resolution-based cover reduction. Repeats rounds until a fixpoint: two
/// cubes with equal masks whose unmasked bits differ in exactly one
/// position merge into one cube with that position masked; both partners
/// are consumed. Cubes that merged into nothing this round pass through in
/// list order. The final list is deduplicated keeping first occurrences.
/// Covers the same set of assignments as the input.
CubeList simplify_resolution(const CubeList& cubes);

/// Sum of products: cubes ORed in list order, each cube the AND of its
/// literals in variable order (x1 first). An empty list yields Constant 0;
/// a fully masked cube yields Constant 1.
Expr expr_from_cubes(const CubeList& cubes);

/// True when eval(e, x) equals output bit j of tt for every assignment.
bool equivalent(const Expr& e, const TruthTable& tt, std::size_t output_index);

/// minterms -> simplify_resolution -> expr_from_cubes for one output.
Expr minimized_expr(const TruthTable& tt, std::size_t output_index);

}  // namespace qboole
