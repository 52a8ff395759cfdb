#include "qboole/cli.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>

#include <json.hpp>

#include "qboole/hamiltonian.hpp"
#include "qboole/matrix.hpp"
#include "qboole/serialize.hpp"

namespace qboole {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result invoke(const std::vector<std::string>& args) {
  std::vector<std::string> full = {"qboole"};
  full.insert(full.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  argv.reserve(full.size());
  for (const std::string& a : full) argv.push_back(a.c_str());
  std::ostringstream out, err;
  Result r;
  r.code = cli::main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    std::mt19937_64 rng(std::random_device{}());
    dir_ = fs::temp_directory_path() / ("qboole_cli_" + std::to_string(rng()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::string write(const std::string& name, const std::string& content) const {
    std::string p = path(name);
    std::ofstream f(p, std::ios::binary);
    f << content;
    return p;
  }

  static std::string slurp(const std::string& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }

  fs::path dir_;
};

constexpr const char* kCnotMatrixText =
    "[1 0 0 0]\n"
    "[0 1 0 0]\n"
    "[0 0 0 1]\n"
    "[0 0 1 0]\n";

TEST_F(CliTest, TruthText) {
  Result r = invoke({"truth", "--expr", "x1 & x2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "00 -> 0\n01 -> 0\n10 -> 0\n11 -> 1\n");
  EXPECT_EQ(r.err, "");
}

TEST_F(CliTest, TruthJson) {
  Result r = invoke({"truth", "--exprs", "x1; x1 ^ x2", "--json"});
  ASSERT_EQ(r.code, 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["inputs"], 2);
  EXPECT_EQ(j["outputs"], 2);
  EXPECT_EQ(j["rows"], nlohmann::json({"00", "01", "11", "10"}));
  EXPECT_EQ(r.out.back(), '\n');
}

TEST_F(CliTest, TruthFromTableFile) {
  std::string p = write("tab.txt", "1 -> 01\n0 -> 10\n");
  Result r = invoke({"truth", "--table", p});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "0 -> 10\n1 -> 01\n");  // rows come back in encode order
}

TEST_F(CliTest, SynthMatrixText) {
  Result r = invoke({"synth", "--exprs", "x1; x1 ^ x2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, kCnotMatrixText);
}

TEST_F(CliTest, SynthPaperStyleReversesIndexBits) {
  Result r = invoke({"synth", "--exprs", "x1; x1 ^ x2", "--paper-style"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "[1 0 0 0]\n"
            "[0 0 0 1]\n"
            "[0 0 1 0]\n"
            "[0 1 0 0]\n");
}

TEST_F(CliTest, SynthJson) {
  Result r = invoke({"synth", "--exprs", "x1; x1 ^ x2", "--json"});
  ASSERT_EQ(r.code, 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["size"], 4);
  EXPECT_EQ(j["image"], nlohmann::json({0, 1, 3, 2}));
}

TEST_F(CliTest, SynthFromTableFile) {
  std::string p = write("cnot.txt", "00 -> 00\n01 -> 01\n10 -> 11\n11 -> 10\n");
  Result r = invoke({"synth", "--table", p});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, kCnotMatrixText);
}

TEST_F(CliTest, OracleText) {
  Result r = invoke({"oracle", "--expr", "x1 & x2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "[1 0 0 0 0 0 0 0]\n"
            "[0 1 0 0 0 0 0 0]\n"
            "[0 0 1 0 0 0 0 0]\n"
            "[0 0 0 1 0 0 0 0]\n"
            "[0 0 0 0 1 0 0 0]\n"
            "[0 0 0 0 0 1 0 0]\n"
            "[0 0 0 0 0 0 0 1]\n"
            "[0 0 0 0 0 0 1 0]\n");
}

TEST_F(CliTest, OracleJsonImage) {
  Result r = invoke({"oracle", "--expr", "x1 & x2", "--json"});
  ASSERT_EQ(r.code, 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["image"], nlohmann::json({0, 1, 2, 3, 4, 5, 7, 6}));
}

TEST_F(CliTest, ExtractText) {
  Result r = invoke({"extract", "--perm", "[0,1,3,2]"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "00 -> 00\n01 -> 01\n10 -> 11\n11 -> 10\n"
            "y1 = x1\n"
            "y2 = !x1 & x2 | x1 & !x2\n");
}

TEST_F(CliTest, ExtractJson) {
  Result r = invoke({"extract", "--perm", "[0,1,3,2]", "--json"});
  ASSERT_EQ(r.code, 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["inputs"], 2);
  EXPECT_EQ(j["outputs"], 2);
  EXPECT_EQ(j["exprs"], nlohmann::json({"x1", "!x1 & x2 | x1 & !x2"}));
}

TEST_F(CliTest, ExtractAcceptsEquivalentPermSpellings) {
  Result bracketed = invoke({"extract", "--perm", "[0,1,3,2]"});
  Result bare = invoke({"extract", "--perm", "0 1 3 2"});
  Result commas = invoke({"extract", "--perm", "0,1,3,2\n"});
  EXPECT_EQ(bracketed.code, 0);
  EXPECT_EQ(bare.out, bracketed.out);
  EXPECT_EQ(commas.out, bracketed.out);
}

TEST_F(CliTest, HamiltonianText) {
  Result r = invoke({"hamiltonian", "--perm", "[0,1,3,2]"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("K:\n"
                       "[0 0 0 0]\n"
                       "[0 0 0 0]\n"
                       "[0 0 pi/2i -pi/2i]\n"
                       "[0 0 -pi/2i pi/2i]\n"
                       "H:\n"
                       "[0 0 0 0]\n"
                       "[0 0 0 0]\n"
                       "[0 0 -pi/2 pi/2]\n"
                       "[0 0 pi/2 -pi/2]\n"
                       "residual: "),
            std::string::npos)
      << r.out;
  EXPECT_NE(r.out.find("omega_t_convention: 1\n"), std::string::npos);
}

TEST_F(CliTest, HamiltonianJsonRoundTrips) {
  Result r = invoke({"hamiltonian", "--perm", "[2,3,1,0]", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  nlohmann::json j = nlohmann::json::parse(r.out);
  PermutationSpec p({2, 3, 1, 0});
  // Serialized values reparse to the exact doubles the library computed.
  EXPECT_EQ(matrix_from_json(j["K"]), skew_log(p));
  EXPECT_EQ(matrix_from_json(j["H"]), Complex(0.0, 1.0) * skew_log(p));
  EXPECT_LE(j["residual"].get<double>(), 1e-10);
  EXPECT_EQ(j["omega_t_convention"].get<double>(), 1.0);
}

TEST_F(CliTest, PauliOfPermutationMatrix) {
  Result r = invoke({"pauli", "--perm", "[0,1,3,2]"});
  EXPECT_EQ(r.code, 0);
  // U = II/2 + IX/2 + ZI/2 - ZX/2; halves are not pi/4 multiples, so no
  // quotient block is appended.
  EXPECT_EQ(r.out,
            "+0.5 * s0 (x) s0\n"
            "+0.5 * s0 (x) s1\n"
            "+0.5 * s3 (x) s0\n"
            "-0.5 * s3 (x) s1\n");
}

TEST_F(CliTest, PauliSpinScaling) {
  Result r = invoke({"pauli", "--perm", "[0,1,3,2]", "--spin"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "+0.5 * s0 (x) s0\n"
            "+1 * s0 (x) s1\n"
            "+1 * s3 (x) s0\n"
            "-2 * s3 (x) s1\n");
}

TEST_F(CliTest, PauliOfHamiltonianThroughJsonPipeline) {
  Result ham = invoke({"hamiltonian", "--perm", "[0,1,3,2]", "--json"});
  ASSERT_EQ(ham.code, 0);
  nlohmann::json j = nlohmann::json::parse(ham.out);
  std::string hfile = write("h.json", j["H"].dump());

  Result r = invoke({"pauli", "--matrix", hfile});
  ASSERT_EQ(r.code, 0) << r.err;

  char plus[40], minus[40];
  std::snprintf(plus, sizeof plus, "%+.17g", std::numbers::pi / 4);
  std::snprintf(minus, sizeof minus, "%+.17g", -std::numbers::pi / 4);
  std::string expected;
  expected += std::string(minus) + " * s0 (x) s0\n";
  expected += std::string(plus) + " * s0 (x) s1\n";
  expected += std::string(plus) + " * s3 (x) s0\n";
  expected += std::string(minus) + " * s3 (x) s1\n";
  expected +=
      "coefficients / (pi/4):\n"
      "-1 * s0 (x) s0\n"
      "+1 * s0 (x) s1\n"
      "+1 * s3 (x) s0\n"
      "-1 * s3 (x) s1\n";
  EXPECT_EQ(r.out, expected);
}

TEST_F(CliTest, PauliJson) {
  Result r = invoke({"pauli", "--perm", "[0,1,3,2]", "--json"});
  ASSERT_EQ(r.code, 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["n"], 2);
  EXPECT_EQ(j["basis"], "sigma");
  ASSERT_EQ(j["terms"].size(), 4u);
  EXPECT_EQ(j["terms"][0]["word"], nlohmann::json({0, 0}));
  EXPECT_EQ(j["terms"][0]["re"].get<double>(), 0.5);
  EXPECT_EQ(j["terms"][0]["im"].get<double>(), 0.0);

  Result spin = invoke({"pauli", "--perm", "[0,1,3,2]", "--json", "--spin"});
  EXPECT_EQ(nlohmann::json::parse(spin.out)["basis"], "spin");
}

TEST_F(CliTest, PauliDropToleranceOverride) {
  // Every coefficient of the identity is <= 1, so a drop tolerance of 2
  // empties the expansion.
  Result r = invoke({"pauli", "--perm", "[0,1]", "--tol", "2.0"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "0\n");
}

TEST_F(CliTest, RoundtripPaperStyleGolden) {
  Result r = invoke({"roundtrip", "--expr", "x1 & !x2", "--paper-style", "--zero-based"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "[1 0 0 0 0 0 0 0]\n"
            "[0 0 0 0 0 1 0 0]\n"
            "[0 0 1 0 0 0 0 0]\n"
            "[0 0 0 1 0 0 0 0]\n"
            "[0 0 0 0 1 0 0 0]\n"
            "[0 1 0 0 0 0 0 0]\n"
            "[0 0 0 0 0 0 1 0]\n"
            "[0 0 0 0 0 0 0 1]\n"
            "000 -> 000\n"
            "001 -> 001\n"
            "010 -> 010\n"
            "011 -> 011\n"
            "100 -> 101\n"
            "101 -> 100\n"
            "110 -> 110\n"
            "111 -> 111\n"
            "[                 x0                ]\n"
            "[                 x1                ]\n"
            "[x0*NOT[x1]*NOT[x2]+NOT[x0]*x2+x1*x2]\n");
}

TEST_F(CliTest, RoundtripJsonVerified) {
  Result r = invoke({"roundtrip", "--expr", "x1 & !x2", "--json"});
  ASSERT_EQ(r.code, 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["verified"], true);
  EXPECT_EQ(j["matrix"]["size"], 8);
  EXPECT_EQ(j["exprs"].size(), 3u);
  EXPECT_EQ(j["exprs"][2], "x1 & !x2 & !x3 | !x1 & x3 | x2 & x3");
}

TEST_F(CliTest, OutputsAreDeterministic) {
  std::vector<std::vector<std::string>> cases = {
      {"synth", "--exprs", "x1; x1 ^ x2"},
      {"hamiltonian", "--perm", "[2,3,1,0]"},
      {"pauli", "--perm", "[2,3,1,0]", "--json"},
      {"roundtrip", "--expr", "x1 & !x2", "--paper-style", "--zero-based"},
  };
  for (const auto& args : cases) {
    Result first = invoke(args);
    Result second = invoke(args);
    EXPECT_EQ(first.code, 0);
    EXPECT_EQ(first.out, second.out);
  }
}

TEST_F(CliTest, OutFileWrittenAtomically) {
  std::string target = path("matrix.txt");
  Result r = invoke({"synth", "--exprs", "x1; x1 ^ x2", "--out", target});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "");  // output went to the file instead
  EXPECT_EQ(slurp(target), kCnotMatrixText);
  EXPECT_FALSE(fs::exists(target + ".tmp"));
}

TEST_F(CliTest, OutFileFailureLeavesNothingBehind) {
  std::string target = path("missing_dir") + "/out.txt";
  Result r = invoke({"synth", "--exprs", "x1; x1 ^ x2", "--out", target});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("error: "), std::string::npos);
  EXPECT_FALSE(fs::exists(target));
}

TEST_F(CliTest, ParseFailuresExitTwo) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"truth", "--expr", "x1 &"},
           {"truth"},                                       // no input source
           {"extract", "--perm", "[0,1]", "--matrix", "x"}, // two sources
           {"truth", "--exprs", "x1;"},                     // empty list entry
           {"extract", "--perm", "0,1,x"},
           {"synth", "--table", path("no_such_file.txt")},
           {"truth", "--expr", "x1", "--tol", "-1"},
           {"truth", "--expr", "x1", "--max-n", "0"},
           {"truth", "--expr", "x1", "--max-n", "64"},
           {"truth", "--expr", "x1", "--bogus-flag"},
           {"extract", "--expr", "x1"},                     // wrong source kind
       }) {
    Result r = invoke(args);
    EXPECT_EQ(r.code, 2) << args[0] << ": " << r.err;
    EXPECT_FALSE(r.err.empty());
  }
}

TEST_F(CliTest, NotReversibleExitsThree) {
  Result shape = invoke({"synth", "--expr", "x1 & x2"});
  EXPECT_EQ(shape.code, 3);
  Result collision = invoke({"synth", "--exprs", "x1; x1"});
  EXPECT_EQ(collision.code, 3);
  EXPECT_NE(collision.err.find("error: "), std::string::npos);
}

TEST_F(CliTest, NotPermutationExitsFour) {
  ComplexMatrix bad(2, 2);
  bad.at(0, 0) = 1.0;
  bad.at(0, 1) = 1.0;
  std::string p = write("bad.json", matrix_to_json(bad).dump());
  Result r = invoke({"extract", "--matrix", p});
  EXPECT_EQ(r.code, 4);

  Result range = invoke({"extract", "--perm", "[1,2,3]"});
  EXPECT_EQ(range.code, 4);
}

TEST_F(CliTest, DimensionProblemsExitFive) {
  Result multi = invoke({"oracle", "--exprs", "x1; x2"});
  EXPECT_EQ(multi.code, 5);

  Result cap = invoke({"synth", "--exprs", "x1 ^ x2; x2 ^ x1 ^ x2", "--max-n", "1"});
  EXPECT_EQ(cap.code, 5);
  EXPECT_NE(cap.err.find("--max-n"), std::string::npos);

  Result odd = invoke({"pauli", "--perm", "[2,0,1]"});
  EXPECT_EQ(odd.code, 5);

  // 2^9 states is over the built-in 8-qubit expansion cap.
  std::string big = "[";
  for (std::size_t k = 0; k < 512; ++k) big += (k ? "," : "") + std::to_string(k);
  big += "]";
  Result wide = invoke({"pauli", "--perm", big});
  EXPECT_EQ(wide.code, 5);
}

TEST_F(CliTest, ResidualToleranceFailureExitsSix) {
  Result r = invoke({"hamiltonian", "--perm", "[2,3,1,0]", "--tol", "1e-30"});
  EXPECT_EQ(r.code, 6);
  EXPECT_NE(r.err.find("residual"), std::string::npos);
}

TEST_F(CliTest, DenseToleranceOverride) {
  ComplexMatrix near_cnot = to_dense(PermutationSpec({0, 1, 3, 2}));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) near_cnot.at(i, j) += 1e-6;
  std::string p = write("near.json", matrix_to_json(near_cnot).dump());

  EXPECT_EQ(invoke({"extract", "--matrix", p}).code, 4);
  Result loose = invoke({"extract", "--matrix", p, "--tol", "1e-3"});
  EXPECT_EQ(loose.code, 0);
  EXPECT_NE(loose.out.find("y1 = x1\n"), std::string::npos);
}

TEST_F(CliTest, HelpAndSubcommandRequirements) {
  Result help = invoke({"--help"});
  EXPECT_EQ(help.code, 0);
  EXPECT_NE(help.out.find("roundtrip"), std::string::npos);

  Result sub_help = invoke({"pauli", "--help"});
  EXPECT_EQ(sub_help.code, 0);
  EXPECT_NE(sub_help.out.find("--spin"), std::string::npos);

  Result none = invoke({});
  EXPECT_EQ(none.code, 2);
}

}  // namespace
}  // namespace qboole
