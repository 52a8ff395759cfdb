#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "qboole/bits.hpp"

namespace qboole {

/// Immutable boolean expression tree over variables x1, x2, ...
/// Nodes share subtrees; copies are cheap handle copies.
class Expr {
 public:
  enum class Kind { Constant, Variable, Not, And, Or, Xor };

  static Expr constant(bool value);
  static Expr variable(std::size_t index);  // index >= 1
  static Expr negation(Expr operand);
  static Expr conjunction(Expr left, Expr right);
  static Expr disjunction(Expr left, Expr right);
  static Expr exclusive_or(Expr left, Expr right);

  Kind kind() const;

  bool constant_value() const;         // Constant only
  std::size_t variable_index() const;  // Variable only
  Expr operand() const;                // Not only; cheap handle copy
  Expr left() const;                   // And/Or/Xor only
  Expr right() const;                  // And/Or/Xor only

  /// Highest variable index referenced; 0 for constant expressions.
  std::size_t arity() const;

  /// Structural equality (same tree shape, same leaves).
  bool operator==(const Expr& other) const;

 private:
  struct Node;
  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Parses the expression grammar
///
///   expr := or
///   or   := xor ('|' xor)*
///   xor  := and ('^' and)*
///   and  := not ('&' not)*
///   not  := '!' not | atom
///   atom := '0' | '1' | 'x' digits | '(' expr ')'
///
/// Whitespace is insignificant. Variables are 1-based ("x0" is rejected).
/// When declared_arity is given, any reference above it is a ParseError;
/// the expression's arity is then max(declared_arity, highest reference).
Expr parse(const std::string& text);
Expr parse(const std::string& text, std::size_t declared_arity);

/// Evaluates with x.get(j) supplying xj. Throws DimensionError when
/// x.width() < arity(e).
bool eval(const Expr& e, const BitVector& x);

/// Grammar text with minimal parentheses; parse(format(e)) == e.
std::string format(const Expr& e);

/// Sum-of-products style text: '*' for AND, '+' for OR, NOT[..] for
/// negation, XOR[a,b] for exclusive or, variables "x1".. or "x0".. when
/// zero_based is set.
std::string format_paper(const Expr& e, bool zero_based);

/// Truth table of m expressions over n shared inputs; column j of the
/// output is exprs[j]. Throws DimensionError when n is 0 or any arity
/// exceeds n; exprs must be nonempty.
TruthTable truth_table(const std::vector<Expr>& exprs, std::size_t n);

}  // namespace qboole
