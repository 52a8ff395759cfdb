#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qboole {

/// Base class for all qboole failures. The what() string is a single line
/// suitable for direct display on an error stream.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input: expression grammar, bit strings, truth-table
/// text, JSON payloads, CLI values.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& message, std::size_t position = kNoPosition)
      : Error(message), position_(position) {}

  static constexpr std::size_t kNoPosition = static_cast<std::size_t>(-1);

  /// 0-based character offset of the offending token, or kNoPosition.
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// A truth table that cannot be a bijection: output width differs from the
/// input width, or two inputs collide on one output.
class NotReversibleError : public Error {
 public:
  using Error::Error;
};

/// A dense matrix that is not a 0/1 permutation matrix within tolerance.
class NotPermutationError : public Error {
 public:
  using Error::Error;
};

/// A size outside the supported range: width 0, non-power-of-two matrix,
/// or a dimension above a configured cap.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A numeric or logical self-check failed: exp(K) too far from U, or a
/// recovered expression that does not reproduce its truth table.
class VerificationError : public Error {
 public:
  using Error::Error;
};

}  // namespace qboole
