#include "qboole/cli.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <vector>

#include <CLI11.hpp>

#include "qboole/bits.hpp"
#include "qboole/errors.hpp"
#include "qboole/expr.hpp"
#include "qboole/hamiltonian.hpp"
#include "qboole/matrix.hpp"
#include "qboole/minimize.hpp"
#include "qboole/pauli.hpp"
#include "qboole/serialize.hpp"
#include "qboole/synth.hpp"

namespace qboole::cli {

namespace {

constexpr double kDenseTol = 1e-9;
constexpr double kResidualTol = 1e-10;
constexpr double kDropTol = 1e-12;
constexpr std::size_t kPauliCap = 8;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Full output is rendered first, then placed with a same-directory rename,
// so a failing run never leaves a partial file.
void deliver(const JobConfig& cfg, std::ostream& out, const std::string& text) {
  if (!cfg.out_file) {
    out << text;
    return;
  }
  namespace fs = std::filesystem;
  fs::path target(*cfg.out_file);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw Error("cannot write file " + tmp.string());
    f << text;
    if (!f.good()) {
      f.close();
      fs::remove(tmp);
      throw Error("failed writing file " + tmp.string());
    }
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp);
    throw Error("cannot move output into place at " + target.string() + ": " + ec.message());
  }
}

std::size_t source_count(const JobConfig& cfg) {
  return static_cast<std::size_t>(cfg.expr.has_value()) + cfg.exprs.has_value() +
         cfg.table_file.has_value() + cfg.matrix_file.has_value() + cfg.perm_text.has_value();
}

void require_sources(const JobConfig& cfg, bool expr_ok, bool table_ok, bool matrix_ok,
                     const char* command) {
  if (source_count(cfg) != 1)
    throw ParseError(std::string(command) +
                     " needs exactly one input source among --expr, --exprs, --table, "
                     "--matrix, --perm");
  if (!expr_ok && (cfg.expr || cfg.exprs))
    throw ParseError(std::string(command) + " does not accept --expr/--exprs");
  if (!table_ok && cfg.table_file)
    throw ParseError(std::string(command) + " does not accept --table");
  if (!matrix_ok && (cfg.matrix_file || cfg.perm_text))
    throw ParseError(std::string(command) + " does not accept --matrix/--perm");
}

void check_cap(std::size_t n, std::size_t cap, const char* what) {
  if (n > cap)
    throw DimensionError(std::string(what) + " uses " + std::to_string(n) +
                         " bits, above the cap of " + std::to_string(cap) +
                         " (raise with --max-n)");
}

std::vector<Expr> parse_expr_list(const JobConfig& cfg) {
  std::vector<std::string> pieces;
  if (cfg.expr) {
    pieces.push_back(*cfg.expr);
  } else {
    std::string text = *cfg.exprs;
    std::size_t start = 0;
    while (true) {
      std::size_t semi = text.find(';', start);
      pieces.push_back(text.substr(start, semi - start));
      if (semi == std::string::npos) break;
      start = semi + 1;
    }
  }
  std::vector<Expr> exprs;
  exprs.reserve(pieces.size());
  for (const std::string& piece : pieces) {
    if (piece.find_first_not_of(" \t") == std::string::npos)
      throw ParseError("empty expression in list");
    exprs.push_back(parse(piece));
  }
  return exprs;
}

// Expressions plus the implied input count: highest variable, at least 1.
std::pair<std::vector<Expr>, std::size_t> parsed_inputs(const JobConfig& cfg) {
  std::vector<Expr> exprs = parse_expr_list(cfg);
  std::size_t n = 1;
  for (const Expr& e : exprs) n = std::max(n, e.arity());
  check_cap(n, cfg.max_bits, "expression list");
  return {std::move(exprs), n};
}

TruthTable load_table(const JobConfig& cfg) {
  TruthTable tt = table_from_text(read_file(*cfg.table_file));
  check_cap(tt.inputs(), cfg.max_bits, "truth table");
  return tt;
}

PermutationSpec parse_perm_text(const std::string& text) {
  std::vector<std::size_t> values;
  std::size_t current = 0;
  bool in_number = false;
  auto close_number = [&] {
    if (in_number) {
      values.push_back(current);
      current = 0;
      in_number = false;
    }
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c >= '0' && c <= '9') {
      current = current * 10 + static_cast<std::size_t>(c - '0');
      if (current > (std::size_t{1} << 40)) throw ParseError("permutation value too large", i);
      in_number = true;
    } else if (c == ',' || c == ' ' || c == '\t' || c == '[' || c == ']' || c == '\n' ||
               c == '\r') {
      close_number();
    } else {
      throw ParseError("permutation list may contain only digits, commas, and brackets", i);
    }
  }
  close_number();
  if (values.empty()) throw ParseError("permutation list is empty");
  return PermutationSpec(std::move(values));
}

PermutationSpec load_perm(const JobConfig& cfg, double dense_tol) {
  if (cfg.perm_text) return parse_perm_text(*cfg.perm_text);
  return perm_from_matrix_json(parse_json(read_file(*cfg.matrix_file)), dense_tol);
}

std::size_t rev_bits(std::size_t k, std::size_t n) {
  std::size_t r = 0;
  for (std::size_t i = 0; i < n; ++i)
    if ((k >> i) & 1u) r |= std::size_t{1} << (n - 1 - i);
  return r;
}

// The sum-of-products program convention indexes states with x1 as the
// least significant bit; its printed matrices are this library's matrices
// conjugated by the index bit reversal.
PermutationSpec paper_order(const PermutationSpec& p, std::size_t bits) {
  std::vector<std::size_t> image(p.size());
  for (std::size_t c = 0; c < p.size(); ++c)
    image[c] = rev_bits(p.image_of(rev_bits(c, bits)), bits);
  return PermutationSpec(std::move(image));
}

std::string perm_matrix_text(const PermutationSpec& p, std::size_t bits, bool paper_style) {
  if (!paper_style) return matrix_to_text(to_dense(p));
  return matrix_to_text(to_dense(paper_order(p, bits)));
}

std::string centered_block(const std::vector<std::string>& lines) {
  std::size_t width = 0;
  for (const std::string& s : lines) width = std::max(width, s.size());
  std::string out;
  for (const std::string& s : lines) {
    std::size_t left = (width - s.size() + 1) / 2;
    std::size_t right = width - s.size() - left;
    out += '[';
    out.append(left, ' ');
    out += s;
    out.append(right, ' ');
    out += "]\n";
  }
  return out;
}

nlohmann::json table_rows_json(const TruthTable& tt) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::uint64_t k = 0; k < tt.size(); ++k) rows.push_back(tt.row(k).str());
  return rows;
}

std::string json_line(const nlohmann::json& j) { return j.dump() + "\n"; }

// Minimized expressions for every output, each verified against its table
// column before anything is printed.
std::vector<Expr> recovered_outputs(const TruthTable& tt) {
  std::vector<Expr> exprs;
  exprs.reserve(tt.outputs());
  for (std::size_t j = 0; j < tt.outputs(); ++j) {
    Expr e = minimized_expr(tt, j);
    if (!equivalent(e, tt, j))
      throw VerificationError("recovered expression for output " + std::to_string(j + 1) +
                              " does not reproduce its truth table");
    exprs.push_back(std::move(e));
  }
  return exprs;
}

std::string render_exprs(const std::vector<Expr>& exprs, const JobConfig& cfg) {
  if (cfg.paper_style) {
    std::vector<std::string> lines;
    lines.reserve(exprs.size());
    for (const Expr& e : exprs) lines.push_back(format_paper(e, cfg.zero_based));
    return centered_block(lines);
  }
  std::string out;
  for (std::size_t j = 0; j < exprs.size(); ++j)
    out += "y" + std::to_string(j + 1) + " = " + format(exprs[j]) + "\n";
  return out;
}

std::vector<std::string> expr_strings(const std::vector<Expr>& exprs, const JobConfig& cfg) {
  std::vector<std::string> out;
  out.reserve(exprs.size());
  for (const Expr& e : exprs)
    out.push_back(cfg.paper_style ? format_paper(e, cfg.zero_based) : format(e));
  return out;
}

int run_truth(const JobConfig& cfg, std::ostream& out) {
  require_sources(cfg, true, true, false, "truth");
  TruthTable tt = cfg.table_file ? load_table(cfg) : [&] {
    auto [exprs, n] = parsed_inputs(cfg);
    return truth_table(exprs, n);
  }();
  if (cfg.json) {
    deliver(cfg, out, json_line({{"inputs", tt.inputs()},
                                 {"outputs", tt.outputs()},
                                 {"rows", table_rows_json(tt)}}));
  } else {
    deliver(cfg, out, table_to_text(tt));
  }
  return kOk;
}

int run_synth(const JobConfig& cfg, std::ostream& out) {
  require_sources(cfg, true, true, false, "synth");
  TruthTable tt = cfg.table_file ? load_table(cfg) : [&] {
    auto [exprs, n] = parsed_inputs(cfg);
    return truth_table(exprs, n);
  }();
  ReversibleMap map = map_from_truth_table(tt);
  PermutationSpec p = matrix_from_map(map);
  if (cfg.json)
    deliver(cfg, out, json_line(perm_to_json(p)));
  else
    deliver(cfg, out, perm_matrix_text(p, map.bits(), cfg.paper_style));
  return kOk;
}

int run_oracle(const JobConfig& cfg, std::ostream& out) {
  require_sources(cfg, true, true, false, "oracle");
  TruthTable tt = cfg.table_file ? load_table(cfg) : [&] {
    auto [exprs, n] = parsed_inputs(cfg);
    return truth_table(exprs, n);
  }();
  if (tt.outputs() != 1)
    throw DimensionError("oracle needs a single-output function, got " +
                         std::to_string(tt.outputs()) + " outputs");
  check_cap(tt.inputs() + 1, cfg.max_bits, "oracle");
  PermutationSpec p = oracle_matrix(tt);
  if (cfg.json)
    deliver(cfg, out, json_line(perm_to_json(p)));
  else
    deliver(cfg, out, perm_matrix_text(p, tt.inputs() + 1, cfg.paper_style));
  return kOk;
}

int run_extract(const JobConfig& cfg, std::ostream& out) {
  require_sources(cfg, false, false, true, "extract");
  PermutationSpec p = load_perm(cfg, cfg.tol.value_or(kDenseTol));
  ReversibleMap map = map_from_matrix(p);
  check_cap(map.bits(), cfg.max_bits, "extracted map");
  TruthTable tt = truth_table_from_map(map);
  std::vector<Expr> exprs = recovered_outputs(tt);
  if (cfg.json) {
    deliver(cfg, out, json_line({{"inputs", tt.inputs()},
                                 {"outputs", tt.outputs()},
                                 {"rows", table_rows_json(tt)},
                                 {"exprs", expr_strings(exprs, cfg)}}));
  } else {
    deliver(cfg, out, table_to_text(tt) + render_exprs(exprs, cfg));
  }
  return kOk;
}

int run_hamiltonian(const JobConfig& cfg, std::ostream& out) {
  require_sources(cfg, false, false, true, "hamiltonian");
  PermutationSpec p = load_perm(cfg, cfg.tol.value_or(kDenseTol));
  if (p.size() > (std::size_t{1} << cfg.max_bits))
    throw DimensionError("matrix of size " + std::to_string(p.size()) +
                         " is above the cap of 2^" + std::to_string(cfg.max_bits) +
                         " (raise with --max-n)");
  HamiltonianResult result = hamiltonian(p);
  double threshold = cfg.tol.value_or(kResidualTol);
  if (!(result.residual <= threshold))
    throw VerificationError("reconstruction residual " + std::to_string(result.residual) +
                            " exceeds tolerance");
  if (cfg.json) {
    deliver(cfg, out, json_line(hamiltonian_to_json(result)));
  } else {
    char residual_text[40];
    std::snprintf(residual_text, sizeof residual_text, "%.3g", result.residual);
    deliver(cfg, out, "K:\n" + matrix_to_text(result.k) + "H:\n" + matrix_to_text(result.h) +
                          "residual: " + residual_text + "\nomega_t_convention: 1\n");
  }
  return kOk;
}

// Appends the integer-coefficient view when every term is an exact
// multiple of pi/4 within 1e-9.
std::string pi_quarter_report(const std::vector<PauliTerm>& terms) {
  if (terms.empty()) return {};
  constexpr double quarter = std::numbers::pi / 4.0;
  std::vector<long> multiples;
  multiples.reserve(terms.size());
  for (const PauliTerm& term : terms) {
    if (std::abs(term.coeff.imag()) > 1e-9) return {};
    double m = term.coeff.real() / quarter;
    double q = std::round(m);
    if (q == 0.0 || std::abs(term.coeff.real() - q * quarter) > 1e-9) return {};
    multiples.push_back(static_cast<long>(q));
  }
  std::string out = "coefficients / (pi/4):\n";
  for (std::size_t t = 0; t < terms.size(); ++t) {
    out += multiples[t] < 0 ? "-" : "+";
    out += std::to_string(std::labs(multiples[t]));
    out += " *";
    for (std::size_t j = 0; j < terms[t].word.size(); ++j) {
      out += j ? " (x) s" : " s";
      out += std::to_string(terms[t].word[j]);
    }
    out += '\n';
  }
  return out;
}

int run_pauli(const JobConfig& cfg, std::ostream& out) {
  require_sources(cfg, false, false, true, "pauli");
  ComplexMatrix m;
  if (cfg.perm_text) {
    m = to_dense(parse_perm_text(*cfg.perm_text));
  } else {
    nlohmann::json j = parse_json(read_file(*cfg.matrix_file));
    if (j.is_object() && j.contains("image"))
      m = to_dense(perm_from_json(j));
    else
      m = matrix_from_json(j);
  }
  if (!m.square() || m.rows() < 2 || (m.rows() & (m.rows() - 1)) != 0)
    throw DimensionError("pauli needs a square matrix of size 2^n with n >= 1, got " +
                         std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  std::size_t n = 0;
  for (std::size_t d = m.rows(); d > 1; d >>= 1) ++n;
  check_cap(n, std::min(cfg.max_bits, kPauliCap), "pauli decomposition");
  std::vector<PauliTerm> terms = pauli_decompose(m, cfg.tol.value_or(kDropTol));
  if (cfg.spin) terms = spin_form(terms);
  if (cfg.json) {
    deliver(cfg, out, json_line(pauli_to_json(terms, n, cfg.spin)));
  } else {
    std::string text = terms_to_text(terms);
    if (terms.empty()) text = "0\n";
    text += pi_quarter_report(terms);
    deliver(cfg, out, text);
  }
  return kOk;
}

int run_roundtrip(const JobConfig& cfg, std::ostream& out) {
  require_sources(cfg, true, true, false, "roundtrip");
  TruthTable tt = cfg.table_file ? load_table(cfg) : [&] {
    auto [exprs, n] = parsed_inputs(cfg);
    return truth_table(exprs, n);
  }();
  if (tt.outputs() != 1)
    throw DimensionError("roundtrip needs a single-output function, got " +
                         std::to_string(tt.outputs()) + " outputs");
  check_cap(tt.inputs() + 1, cfg.max_bits, "oracle");
  PermutationSpec p = oracle_matrix(tt);
  ReversibleMap map = map_from_matrix(p);
  TruthTable oracle_table = truth_table_from_map(map);
  std::vector<Expr> exprs = recovered_outputs(oracle_table);
  if (cfg.json) {
    deliver(cfg, out, json_line({{"matrix", perm_to_json(p)},
                                 {"rows", table_rows_json(oracle_table)},
                                 {"exprs", expr_strings(exprs, cfg)},
                                 {"verified", true}}));
  } else {
    deliver(cfg, out, perm_matrix_text(p, map.bits(), cfg.paper_style) +
                          table_to_text(oracle_table) + render_exprs(exprs, cfg));
  }
  return kOk;
}

}  // namespace

namespace {

struct RawOptions {
  std::string expr;
  std::string exprs;
  std::string table;
  std::string matrix;
  std::string perm;
  std::string out_file;
  bool json = false;
  bool paper = false;
  bool zero_based = false;
  bool spin = false;
  double tol = 0.0;
  std::size_t max_bits = 12;
};

void add_common_options(CLI::App* sub, RawOptions* raw, bool expression_input,
                        bool matrix_input, bool spin_flag) {
  if (expression_input) {
    sub->add_option("--expr", raw->expr, "inline expression, e.g. \"x1 & !x2\"");
    sub->add_option("--exprs", raw->exprs, "semicolon-separated expressions");
    sub->add_option("--table", raw->table, "truth table file (\"<bits> -> <bits>\" lines)");
  }
  if (matrix_input) {
    sub->add_option("--matrix", raw->matrix, "matrix JSON file (dense entries or image form)");
    sub->add_option("--perm", raw->perm, "inline permutation image, e.g. \"[2,3,1,0]\"");
  }
  sub->add_option("--out", raw->out_file, "write output to this file (atomic replace)");
  sub->add_flag("--json", raw->json, "JSON output");
  sub->add_flag("--paper-style", raw->paper,
                "sum-of-products text rendering with bit-reversed matrix indexing");
  sub->add_flag("--zero-based", raw->zero_based, "number variables from x0 in --paper-style");
  if (spin_flag) sub->add_flag("--spin", raw->spin, "spin operator coefficients (sigma/2)");
  sub->add_option("--tol", raw->tol, "tolerance override for this command");
  sub->add_option("--max-n", raw->max_bits, "bit-width cap (default 12)");
}

}  // namespace

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"boolean functions as quantum gate matrices"};
  app.require_subcommand(1);
  RawOptions raw;

  struct SubSpec {
    Command command;
    CLI::App* sub;
  };
  std::vector<SubSpec> subs;
  auto add = [&](Command command, const char* name, const char* help, bool expression_input,
                 bool matrix_input, bool spin_flag = false) {
    CLI::App* sub = app.add_subcommand(name, help);
    add_common_options(sub, &raw, expression_input, matrix_input, spin_flag);
    subs.push_back(SubSpec{command, sub});
  };
  add(Command::Truth, "truth", "print the truth table of expressions or a table file", true,
      false);
  add(Command::Synth, "synth", "permutation matrix of a reversible function", true, false);
  add(Command::Oracle, "oracle", "oracle matrix of a single-output function on n+1 bits", true,
      false);
  add(Command::Extract, "extract", "recover a truth table and minimized expressions from a "
      "permutation matrix", false, true);
  add(Command::Hamiltonian, "hamiltonian", "skew generator K, H = iK, and residual", false,
      true);
  add(Command::Pauli, "pauli", "pauli word expansion of a matrix", false, true, true);
  add(Command::Roundtrip, "roundtrip", "oracle matrix, recovered map, and minimized "
      "expressions for one function", true, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kParse;
  }

  JobConfig cfg;
  CLI::App* active = nullptr;
  for (const SubSpec& s : subs)
    if (s.sub->parsed()) {
      cfg.command = s.command;
      active = s.sub;
    }
  if (active == nullptr) {
    err << "error: no subcommand\n";
    return kParse;
  }
  auto given = [&](const char* name) {
    return active->get_option_no_throw(name) != nullptr && active->count(name) > 0;
  };
  if (given("--expr")) cfg.expr = raw.expr;
  if (given("--exprs")) cfg.exprs = raw.exprs;
  if (given("--table")) cfg.table_file = raw.table;
  if (given("--matrix")) cfg.matrix_file = raw.matrix;
  if (given("--perm")) cfg.perm_text = raw.perm;
  if (given("--out")) cfg.out_file = raw.out_file;
  cfg.json = raw.json;
  cfg.paper_style = raw.paper;
  cfg.zero_based = raw.zero_based;
  cfg.spin = raw.spin;
  if (given("--tol")) {
    if (!(raw.tol > 0.0)) {
      err << "error: --tol must be positive\n";
      return kParse;
    }
    cfg.tol = raw.tol;
  }
  if (given("--max-n")) {
    if (raw.max_bits == 0 || raw.max_bits > 63) {
      err << "error: --max-n must be 1..63\n";
      return kParse;
    }
  }
  cfg.max_bits = raw.max_bits;
  return run(cfg, out, err);
}

int run(const JobConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    switch (cfg.command) {
      case Command::Truth:
        return run_truth(cfg, out);
      case Command::Synth:
        return run_synth(cfg, out);
      case Command::Oracle:
        return run_oracle(cfg, out);
      case Command::Extract:
        return run_extract(cfg, out);
      case Command::Hamiltonian:
        return run_hamiltonian(cfg, out);
      case Command::Pauli:
        return run_pauli(cfg, out);
      case Command::Roundtrip:
        return run_roundtrip(cfg, out);
    }
    err << "error: unknown command\n";
    return kFailure;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParse;
  } catch (const NotReversibleError& e) {
    err << "error: " << e.what() << "\n";
    return kNotReversible;
  } catch (const NotPermutationError& e) {
    err << "error: " << e.what() << "\n";
    return kNotPermutation;
  } catch (const DimensionError& e) {
    err << "error: " << e.what() << "\n";
    return kDimension;
  } catch (const VerificationError& e) {
    err << "error: " << e.what() << "\n";
    return kVerification;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
}

}  // namespace qboole::cli
