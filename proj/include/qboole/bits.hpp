#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace qboole {

/// Fixed-width vector of bits x1..xn, x1 first. Width is at least 1.
///
/// The integer encoding used throughout the library maps x1 to the most
/// significant position: encode(x1..xn) = sum_j xj * 2^(n-j). Truth-table
/// rows, matrix rows and columns, and permutation indices all use this
/// encoding, so row k of an n-input table is the assignment decode(k, n).
class BitVector {
 public:
  /// All-zero vector of the given width. Throws DimensionError on width 0
  /// or width > 63 (indices must fit in uint64_t).
  explicit BitVector(std::size_t width);

  /// Parses a string of '0'/'1' characters, x1 first. Throws ParseError on
  /// other characters or an empty string.
  static BitVector from_string(const std::string& text);

  std::size_t width() const { return bits_.size(); }

  /// Value of x_position; position is 1-based. Throws DimensionError when
  /// position is 0 or exceeds the width.
  bool get(std::size_t position) const;
  void set(std::size_t position, bool value);

  /// "01011" form, x1 first.
  std::string str() const;

  bool operator==(const BitVector& other) const = default;

 private:
  std::vector<bool> bits_;
};

/// Index of the assignment under the canonical encoding, 0 <= result < 2^n.
std::uint64_t encode(const BitVector& x);

/// Inverse of encode. Throws DimensionError when width is 0 or > 63, or
/// when index >= 2^width.
BitVector decode(std::uint64_t index, std::size_t width);

/// Complete truth table of a function {0,1}^inputs -> {0,1}^outputs.
/// Row k holds the output for the assignment decode(k, inputs).
class TruthTable {
 public:
  /// Throws DimensionError unless inputs and outputs are both >= 1 and
  /// rows.size() == 2^inputs with every row of width outputs.
  TruthTable(std::size_t inputs, std::size_t outputs, std::vector<BitVector> rows);

  std::size_t inputs() const { return inputs_; }
  std::size_t outputs() const { return outputs_; }
  std::size_t size() const { return rows_.size(); }

  const BitVector& row(std::uint64_t k) const;

  /// Output bit j (0-based, j < outputs) of row k.
  bool output_bit(std::uint64_t k, std::size_t j) const;

  bool operator==(const TruthTable& other) const = default;

 private:
  std::size_t inputs_;
  std::size_t outputs_;
  std::vector<BitVector> rows_;
};

/// Row lookup by assignment. Throws DimensionError when x.width() differs
/// from tt.inputs().
const BitVector& evaluate_row(const TruthTable& tt, const BitVector& x);

/// One line per row: "<input bits> -> <output bits>", rows in encode order,
/// trailing newline after the last row.
std::string table_to_text(const TruthTable& tt);

/// Parses the table_to_text format. Rows may arrive in any order but must
/// cover every assignment exactly once; widths must be consistent. Throws
/// ParseError otherwise.
TruthTable table_from_text(const std::string& text);

}  // namespace qboole
