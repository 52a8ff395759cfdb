#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>

namespace qboole::cli {

/// Exit codes shared by every subcommand.
enum ExitCode {
  kOk = 0,
  kFailure = 1,        // unexpected error
  kParse = 2,          // malformed expression, table, JSON, or flag value
  kNotReversible = 3,  // truth table is not a bijection
  kNotPermutation = 4, // matrix is not a permutation matrix
  kDimension = 5,      // size cap exceeded or unsupported shape
  kVerification = 6    // residual or round-trip check failed
};

enum class Command { Truth, Synth, Oracle, Extract, Hamiltonian, Pauli, Roundtrip };

/// One parsed invocation. Exactly one input source must be set among
/// expr, exprs, table_file, matrix_file, perm_text.
struct JobConfig {
  Command command = Command::Truth;

  std::optional<std::string> expr;         // --expr "x1 & !x2"
  std::optional<std::string> exprs;        // --exprs "x1; x1 ^ x2"
  std::optional<std::string> table_file;   // --table FILE
  std::optional<std::string> matrix_file;  // --matrix FILE (dense or perm JSON)
  std::optional<std::string> perm_text;    // --perm "[2,3,1,0]"

  std::optional<std::string> out_file;     // --out FILE (written atomically)
  bool json = false;                       // --json
  bool paper_style = false;                // --paper-style
  bool zero_based = false;                 // --zero-based (with --paper-style)
  bool spin = false;                       // --spin (pauli)
  std::optional<double> tol;               // --tol (overrides defaults)
  std::size_t max_bits = 12;               // --max-n
};

/// Runs one job. Primary output goes to out (or cfg.out_file); every error
/// path writes a single line to err and returns its code. Output for a
/// given config is byte-identical across runs.
int run(const JobConfig& cfg, std::ostream& out, std::ostream& err);

/// argv -> JobConfig -> run, with CLI11 argument handling.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qboole::cli
