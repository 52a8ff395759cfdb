#include "qboole/expr.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

#include "qboole/errors.hpp"

namespace qboole {

struct Expr::Node {
  Kind kind;
  bool value = false;             // Constant
  std::size_t index = 0;          // Variable
  std::shared_ptr<const Node> a;  // Not operand, binary left
  std::shared_ptr<const Node> b;  // binary right
  std::size_t arity = 0;          // highest variable index in the subtree
};

Expr Expr::constant(bool value) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Constant;
  n->value = value;
  return Expr(std::move(n));
}

Expr Expr::variable(std::size_t index) {
  if (index == 0) throw DimensionError("variable indices start at 1");
  auto n = std::make_shared<Node>();
  n->kind = Kind::Variable;
  n->index = index;
  n->arity = index;
  return Expr(std::move(n));
}

Expr Expr::negation(Expr operand) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Not;
  n->a = std::move(operand.node_);
  n->arity = n->a->arity;
  return Expr(std::move(n));
}

Expr Expr::conjunction(Expr left, Expr right) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::And;
  n->a = std::move(left.node_);
  n->b = std::move(right.node_);
  n->arity = std::max(n->a->arity, n->b->arity);
  return Expr(std::move(n));
}

Expr Expr::disjunction(Expr left, Expr right) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Or;
  n->a = std::move(left.node_);
  n->b = std::move(right.node_);
  n->arity = std::max(n->a->arity, n->b->arity);
  return Expr(std::move(n));
}

Expr Expr::exclusive_or(Expr left, Expr right) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Xor;
  n->a = std::move(left.node_);
  n->b = std::move(right.node_);
  n->arity = std::max(n->a->arity, n->b->arity);
  return Expr(std::move(n));
}

Expr::Kind Expr::kind() const { return node_->kind; }

bool Expr::constant_value() const {
  if (node_->kind != Kind::Constant) throw Error("constant_value on a non-constant node");
  return node_->value;
}

std::size_t Expr::variable_index() const {
  if (node_->kind != Kind::Variable) throw Error("variable_index on a non-variable node");
  return node_->index;
}

Expr Expr::operand() const {
  if (node_->kind != Kind::Not) throw Error("operand on a non-negation node");
  return Expr(node_->a);
}

Expr Expr::left() const {
  if (node_->kind != Kind::And && node_->kind != Kind::Or && node_->kind != Kind::Xor)
    throw Error("left on a non-binary node");
  return Expr(node_->a);
}

Expr Expr::right() const {
  if (node_->kind != Kind::And && node_->kind != Kind::Or && node_->kind != Kind::Xor)
    throw Error("right on a non-binary node");
  return Expr(node_->b);
}

std::size_t Expr::arity() const { return node_->arity; }

bool Expr::operator==(const Expr& other) const {
  const Node* x = node_.get();
  const Node* y = other.node_.get();
  if (x == y) return true;
  if (x->kind != y->kind || x->arity != y->arity) return false;
  switch (x->kind) {
    case Kind::Constant:
      return x->value == y->value;
    case Kind::Variable:
      return x->index == y->index;
    case Kind::Not:
      return Expr(x->a) == Expr(y->a);
    default:
      return Expr(x->a) == Expr(y->a) && Expr(x->b) == Expr(y->b);
  }
}

namespace {

// Recursive-descent parser over the raw text; offsets are 0-based.
class Parser {
 public:
  Parser(const std::string& text, std::size_t declared_arity)
      : text_(text), declared_(declared_arity) {}

  Expr parse_all() {
    Expr e = parse_or();
    skip_ws();
    if (pos_ != text_.size())
      throw ParseError("unexpected character '" + std::string(1, text_[pos_]) +
                           "' at position " + std::to_string(pos_),
                       pos_);
    return e;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Expr parse_or() {
    Expr e = parse_xor();
    while (eat('|')) e = Expr::disjunction(std::move(e), parse_xor());
    return e;
  }

  Expr parse_xor() {
    Expr e = parse_and();
    while (eat('^')) e = Expr::exclusive_or(std::move(e), parse_and());
    return e;
  }

  Expr parse_and() {
    Expr e = parse_not();
    while (eat('&')) e = Expr::conjunction(std::move(e), parse_not());
    return e;
  }

  Expr parse_not() {
    if (eat('!')) return Expr::negation(parse_not());
    return parse_atom();
  }

  Expr parse_atom() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of expression", pos_);
    char c = text_[pos_];
    if (c == '0') {
      ++pos_;
      return Expr::constant(false);
    }
    if (c == '1') {
      ++pos_;
      return Expr::constant(true);
    }
    if (c == '(') {
      std::size_t open = pos_++;
      Expr e = parse_or();
      if (!eat(')'))
        throw ParseError("unclosed '(' at position " + std::to_string(open), open);
      return e;
    }
    if (c == 'x') {
      std::size_t start = pos_++;
      std::size_t digits_begin = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ == digits_begin)
        throw ParseError("expected digits after 'x' at position " + std::to_string(start), start);
      std::size_t index = 0;
      for (std::size_t i = digits_begin; i < pos_; ++i) {
        index = index * 10 + static_cast<std::size_t>(text_[i] - '0');
        if (index > (1u << 20))
          throw ParseError("variable index too large at position " + std::to_string(start), start);
      }
      if (index == 0)
        throw ParseError("variables are numbered from x1; x0 is not valid (position " +
                             std::to_string(start) + ")",
                         start);
      if (declared_ != 0 && index > declared_)
        throw ParseError("variable x" + std::to_string(index) + " exceeds declared arity " +
                             std::to_string(declared_) + " (position " + std::to_string(start) +
                             ")",
                         start);
      return Expr::variable(index);
    }
    throw ParseError("unexpected character '" + std::string(1, c) + "' at position " +
                         std::to_string(pos_),
                     pos_);
  }

  const std::string& text_;
  std::size_t declared_;
  std::size_t pos_ = 0;
};

int precedence(Expr::Kind k) {
  switch (k) {
    case Expr::Kind::Or:
      return 0;
    case Expr::Kind::Xor:
      return 1;
    case Expr::Kind::And:
      return 2;
    case Expr::Kind::Not:
      return 3;
    default:
      return 4;
  }
}

char binary_symbol(Expr::Kind k) {
  switch (k) {
    case Expr::Kind::Or:
      return '|';
    case Expr::Kind::Xor:
      return '^';
    default:
      return '&';
  }
}

// Parenthesize a child when its precedence is lower, or equal on the right
// of a same-precedence binary (the grammar is left-associative, so
// a | (b | c) must keep its parentheses to round-trip structurally).
void format_rec(const Expr& e, std::string& out, int parent_prec, bool right_side) {
  int prec = precedence(e.kind());
  bool need_parens = prec < parent_prec || (prec == parent_prec && right_side && prec < 3);
  if (need_parens) out += '(';
  switch (e.kind()) {
    case Expr::Kind::Constant:
      out += e.constant_value() ? '1' : '0';
      break;
    case Expr::Kind::Variable:
      out += 'x';
      out += std::to_string(e.variable_index());
      break;
    case Expr::Kind::Not:
      out += '!';
      format_rec(e.operand(), out, precedence(Expr::Kind::Not), false);
      break;
    default: {
      format_rec(e.left(), out, prec, false);
      out += ' ';
      out += binary_symbol(e.kind());
      out += ' ';
      format_rec(e.right(), out, prec, true);
      break;
    }
  }
  if (need_parens) out += ')';
}

// Sum-of-products rendering: +/* binary forms, NOT[..] and XOR[..,..]
// bracket forms. Parentheses only where + sits under *.
void format_paper_rec(const Expr& e, std::string& out, bool zero_based, int parent_prec,
                      bool right_side) {
  int prec = precedence(e.kind());
  switch (e.kind()) {
    case Expr::Kind::Constant:
      out += e.constant_value() ? '1' : '0';
      break;
    case Expr::Kind::Variable: {
      std::size_t shown = zero_based ? e.variable_index() - 1 : e.variable_index();
      out += 'x';
      out += std::to_string(shown);
      break;
    }
    case Expr::Kind::Not:
      out += "NOT[";
      format_paper_rec(e.operand(), out, zero_based, 0, false);
      out += ']';
      break;
    case Expr::Kind::Xor:
      out += "XOR[";
      format_paper_rec(e.left(), out, zero_based, 0, false);
      out += ',';
      format_paper_rec(e.right(), out, zero_based, 0, false);
      out += ']';
      break;
    default: {
      bool parens = prec < parent_prec || (prec == parent_prec && right_side);
      if (parens) out += '(';
      format_paper_rec(e.left(), out, zero_based, prec, false);
      out += e.kind() == Expr::Kind::And ? '*' : '+';
      format_paper_rec(e.right(), out, zero_based, prec, true);
      if (parens) out += ')';
      break;
    }
  }
}

bool eval_node(const Expr& e, const BitVector& x) {
  switch (e.kind()) {
    case Expr::Kind::Constant:
      return e.constant_value();
    case Expr::Kind::Variable:
      return x.get(e.variable_index());
    case Expr::Kind::Not:
      return !eval_node(e.operand(), x);
    case Expr::Kind::And:
      return eval_node(e.left(), x) && eval_node(e.right(), x);
    case Expr::Kind::Or:
      return eval_node(e.left(), x) || eval_node(e.right(), x);
    default:
      return eval_node(e.left(), x) != eval_node(e.right(), x);
  }
}

}  // namespace

Expr parse(const std::string& text) { return Parser(text, 0).parse_all(); }

Expr parse(const std::string& text, std::size_t declared_arity) {
  return Parser(text, declared_arity).parse_all();
}

bool eval(const Expr& e, const BitVector& x) {
  if (x.width() < e.arity())
    throw DimensionError("assignment width " + std::to_string(x.width()) +
                         " below expression arity " + std::to_string(e.arity()));
  return eval_node(e, x);
}

std::string format(const Expr& e) {
  std::string out;
  format_rec(e, out, 0, false);
  return out;
}

std::string format_paper(const Expr& e, bool zero_based) {
  std::string out;
  format_paper_rec(e, out, zero_based, 0, false);
  return out;
}

TruthTable truth_table(const std::vector<Expr>& exprs, std::size_t n) {
  if (exprs.empty()) throw DimensionError("truth_table needs at least one expression");
  if (n == 0) throw DimensionError("truth_table needs at least one input");
  for (std::size_t j = 0; j < exprs.size(); ++j)
    if (exprs[j].arity() > n)
      throw DimensionError("expression " + std::to_string(j) + " references x" +
                           std::to_string(exprs[j].arity()) + " beyond " + std::to_string(n) +
                           " inputs");
  std::vector<BitVector> rows;
  rows.reserve(std::size_t{1} << n);
  for (std::uint64_t k = 0; k < (std::uint64_t{1} << n); ++k) {
    BitVector x = decode(k, n);
    BitVector y(exprs.size());
    for (std::size_t j = 0; j < exprs.size(); ++j) y.set(j + 1, eval_node(exprs[j], x));
    rows.push_back(std::move(y));
  }
  return TruthTable(n, exprs.size(), std::move(rows));
}

}  // namespace qboole
