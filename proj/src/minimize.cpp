#include "qboole/minimize.hpp"

#include <bit>
#include <set>
#include <utility>

#include "qboole/errors.hpp"

namespace qboole {

namespace {

Cube normalized(Cube c) { return Cube{c.bits & ~c.mask, c.mask}; }

std::pair<std::uint64_t, std::uint64_t> key(const Cube& c) { return {c.bits, c.mask}; }

}  // namespace

CubeList::CubeList(std::size_t width) : width_(width) {
  if (width_ == 0 || width_ > 63)
    throw DimensionError("cube width must be 1..63, got " + std::to_string(width_));
}

CubeList::CubeList(std::size_t width, std::vector<Cube> cubes) : CubeList(width) {
  std::uint64_t field = width == 63 ? ~std::uint64_t{0} >> 1 : (std::uint64_t{1} << width) - 1;
  for (Cube& c : cubes) {
    if ((c.bits | c.mask) & ~field)
      throw DimensionError("cube uses bits outside width " + std::to_string(width));
    c = normalized(c);
  }
  cubes_ = std::move(cubes);
}

CubeList minterms(const TruthTable& tt, std::size_t output_index) {
  if (output_index >= tt.outputs())
    throw DimensionError("output index " + std::to_string(output_index) + " outside " +
                         std::to_string(tt.outputs()) + " outputs");
  std::vector<Cube> cubes;
  for (std::uint64_t k = 0; k < tt.size(); ++k)
    if (tt.output_bit(k, output_index)) cubes.push_back(Cube{k, 0});
  return CubeList(tt.inputs(), std::move(cubes));
}

// Round-based resolution. Within a round every unordered pair is examined
// once, in list order; a pair with equal masks whose free bits differ in
// exactly one position emits the merged cube and consumes both partners.
// Cubes left unconsumed when their own scan finishes pass through to the
// result. Per-round merge output and the final result are deduplicated
// keeping first occurrences, which is sound because cubes are normalized.
CubeList simplify_resolution(const CubeList& cubes) {
  std::vector<Cube> result;
  std::set<std::pair<std::uint64_t, std::uint64_t>> in_result;
  std::vector<Cube> current = cubes.cubes();
  while (!current.empty()) {
    std::vector<bool> consumed(current.size(), false);
    std::vector<Cube> next;
    std::set<std::pair<std::uint64_t, std::uint64_t>> in_next;
    for (std::size_t i = 0; i < current.size(); ++i) {
      for (std::size_t j = i + 1; j < current.size(); ++j) {
        if (current[i].mask != current[j].mask) continue;
        std::uint64_t diff = current[i].bits ^ current[j].bits;
        if (std::popcount(diff) != 1) continue;
        Cube merged = normalized(Cube{current[i].bits, current[i].mask | diff});
        if (in_next.insert(key(merged)).second) next.push_back(merged);
        consumed[i] = true;
        consumed[j] = true;
      }
      if (!consumed[i] && in_result.insert(key(current[i])).second)
        result.push_back(current[i]);
    }
    current = std::move(next);
  }
  return CubeList(cubes.width(), std::move(result));
}

Expr expr_from_cubes(const CubeList& cubes) {
  if (cubes.empty()) return Expr::constant(false);
  std::size_t n = cubes.width();
  bool have_sum = false;
  Expr sum = Expr::constant(false);
  for (const Cube& c : cubes.cubes()) {
    bool have_product = false;
    Expr product = Expr::constant(true);
    for (std::size_t i = 1; i <= n; ++i) {
      std::uint64_t bit = std::uint64_t{1} << (n - i);
      if (c.mask & bit) continue;
      Expr literal = (c.bits & bit) ? Expr::variable(i) : Expr::negation(Expr::variable(i));
      product = have_product ? Expr::conjunction(std::move(product), std::move(literal))
                             : std::move(literal);
      have_product = true;
    }
    if (!have_product) product = Expr::constant(true);  // fully masked cube
    sum = have_sum ? Expr::disjunction(std::move(sum), std::move(product)) : std::move(product);
    have_sum = true;
  }
  return sum;
}

bool equivalent(const Expr& e, const TruthTable& tt, std::size_t output_index) {
  if (output_index >= tt.outputs())
    throw DimensionError("output index " + std::to_string(output_index) + " outside " +
                         std::to_string(tt.outputs()) + " outputs");
  if (e.arity() > tt.inputs()) return false;
  for (std::uint64_t k = 0; k < tt.size(); ++k)
    if (eval(e, decode(k, tt.inputs())) != tt.output_bit(k, output_index)) return false;
  return true;
}

Expr minimized_expr(const TruthTable& tt, std::size_t output_index) {
  return expr_from_cubes(simplify_resolution(minterms(tt, output_index)));
}

}  // namespace qboole
