#include "qboole/bits.hpp"

#include <sstream>

#include "qboole/errors.hpp"

namespace qboole {

namespace {

void check_width(std::size_t width) {
  if (width == 0) throw DimensionError("bit width must be at least 1");
  if (width > 63) throw DimensionError("bit width above 63 is not supported");
}

}  // namespace

BitVector::BitVector(std::size_t width) {
  check_width(width);
  bits_.assign(width, false);
}

BitVector BitVector::from_string(const std::string& text) {
  if (text.empty()) throw ParseError("empty bit string");
  BitVector v(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '1') {
      v.bits_[i] = true;
    } else if (text[i] != '0') {
      throw ParseError("bit string may contain only '0' and '1'", i);
    }
  }
  return v;
}

bool BitVector::get(std::size_t position) const {
  if (position == 0 || position > bits_.size())
    throw DimensionError("bit position " + std::to_string(position) +
                         " outside width " + std::to_string(bits_.size()));
  return bits_[position - 1];
}

void BitVector::set(std::size_t position, bool value) {
  if (position == 0 || position > bits_.size())
    throw DimensionError("bit position " + std::to_string(position) +
                         " outside width " + std::to_string(bits_.size()));
  bits_[position - 1] = value;
}

std::string BitVector::str() const {
  std::string s(bits_.size(), '0');
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i]) s[i] = '1';
  return s;
}

std::uint64_t encode(const BitVector& x) {
  std::uint64_t k = 0;
  for (std::size_t j = 1; j <= x.width(); ++j) k = (k << 1) | (x.get(j) ? 1u : 0u);
  return k;
}

BitVector decode(std::uint64_t index, std::size_t width) {
  check_width(width);
  if (index >> width)
    throw DimensionError("index " + std::to_string(index) + " does not fit in " +
                         std::to_string(width) + " bits");
  BitVector v(width);
  for (std::size_t j = 1; j <= width; ++j)
    v.set(j, (index >> (width - j)) & 1u);
  return v;
}

TruthTable::TruthTable(std::size_t inputs, std::size_t outputs, std::vector<BitVector> rows)
    : inputs_(inputs), outputs_(outputs), rows_(std::move(rows)) {
  check_width(inputs_);
  if (outputs_ == 0) throw DimensionError("truth table needs at least one output");
  if (rows_.size() != (std::uint64_t{1} << inputs_))
    throw DimensionError("truth table over " + std::to_string(inputs_) + " inputs needs " +
                         std::to_string(std::uint64_t{1} << inputs_) + " rows, got " +
                         std::to_string(rows_.size()));
  for (const BitVector& row : rows_)
    if (row.width() != outputs_)
      throw DimensionError("truth table row width " + std::to_string(row.width()) +
                           " differs from output count " + std::to_string(outputs_));
}

const BitVector& TruthTable::row(std::uint64_t k) const {
  if (k >= rows_.size())
    throw DimensionError("row index " + std::to_string(k) + " outside table of size " +
                         std::to_string(rows_.size()));
  return rows_[k];
}

bool TruthTable::output_bit(std::uint64_t k, std::size_t j) const {
  if (j >= outputs_)
    throw DimensionError("output index " + std::to_string(j) + " outside " +
                         std::to_string(outputs_) + " outputs");
  return row(k).get(j + 1);
}

const BitVector& evaluate_row(const TruthTable& tt, const BitVector& x) {
  if (x.width() != tt.inputs())
    throw DimensionError("assignment width " + std::to_string(x.width()) +
                         " differs from table inputs " + std::to_string(tt.inputs()));
  return tt.row(encode(x));
}

std::string table_to_text(const TruthTable& tt) {
  std::string out;
  for (std::uint64_t k = 0; k < tt.size(); ++k) {
    out += decode(k, tt.inputs()).str();
    out += " -> ";
    out += tt.row(k).str();
    out += '\n';
  }
  return out;
}

TruthTable table_from_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t inputs = 0;
  std::size_t outputs = 0;
  std::vector<BitVector> rows;
  std::vector<bool> seen;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto arrow = line.find("->");
    if (arrow == std::string::npos)
      throw ParseError("line " + std::to_string(lineno) + ": expected \"<bits> -> <bits>\"");
    auto trim = [](std::string s) {
      auto b = s.find_first_not_of(" \t\r");
      auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    std::string lhs = trim(line.substr(0, arrow));
    std::string rhs = trim(line.substr(arrow + 2));
    BitVector in_bits = BitVector::from_string(lhs);
    BitVector out_bits = BitVector::from_string(rhs);
    if (rows.empty()) {
      inputs = in_bits.width();
      outputs = out_bits.width();
      check_width(inputs);
      seen.assign(std::size_t{1} << inputs, false);
      rows.assign(std::size_t{1} << inputs, BitVector(outputs));
    } else {
      if (in_bits.width() != inputs)
        throw ParseError("line " + std::to_string(lineno) + ": input width " +
                         std::to_string(in_bits.width()) + " differs from " +
                         std::to_string(inputs));
      if (out_bits.width() != outputs)
        throw ParseError("line " + std::to_string(lineno) + ": output width " +
                         std::to_string(out_bits.width()) + " differs from " +
                         std::to_string(outputs));
    }
    std::uint64_t k = encode(in_bits);
    if (seen[k])
      throw ParseError("line " + std::to_string(lineno) + ": duplicate row for input " + lhs);
    seen[k] = true;
    rows[k] = out_bits;
  }
  if (rows.empty()) throw ParseError("truth table text has no rows");
  for (std::size_t k = 0; k < seen.size(); ++k)
    if (!seen[k])
      throw ParseError("missing row for input " + decode(k, inputs).str());
  return TruthTable(inputs, outputs, std::move(rows));
}

}  // namespace qboole
