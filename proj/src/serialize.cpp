#include "qboole/serialize.hpp"

#include "qboole/errors.hpp"

namespace qboole {

using nlohmann::json;

json matrix_to_json(const ComplexMatrix& m) {
  json entries = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Complex& z = m.at(i, j);
      entries.push_back(json::array({z.real(), z.imag()}));
    }
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

namespace {

[[noreturn]] void bad_field(const std::string& what) {
  throw ParseError("matrix JSON: " + what);
}

}  // namespace

ComplexMatrix matrix_from_json(const json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
    bad_field("expected an object with rows, cols, entries");
  if (!j["rows"].is_number_unsigned() || !j["cols"].is_number_unsigned())
    bad_field("rows and cols must be nonnegative integers");
  std::size_t rows = j["rows"].get<std::size_t>();
  std::size_t cols = j["cols"].get<std::size_t>();
  const json& entries = j["entries"];
  if (!entries.is_array() || entries.size() != rows * cols)
    bad_field("entries must be an array of rows*cols pairs");
  ComplexMatrix m(rows, cols);
  for (std::size_t idx = 0; idx < entries.size(); ++idx) {
    const json& e = entries[idx];
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
      bad_field("entry " + std::to_string(idx) + " must be [re, im]");
    m.at(idx / cols, idx % cols) = Complex(e[0].get<double>(), e[1].get<double>());
  }
  return m;
}

json perm_to_json(const PermutationSpec& p) {
  return json{{"size", p.size()}, {"image", p.image()}};
}

PermutationSpec perm_from_json(const json& j) {
  if (!j.is_object() || !j.contains("size") || !j.contains("image"))
    throw ParseError("permutation JSON: expected an object with size and image");
  if (!j["size"].is_number_unsigned())
    throw ParseError("permutation JSON: size must be a nonnegative integer");
  std::size_t size = j["size"].get<std::size_t>();
  const json& image = j["image"];
  if (!image.is_array() || image.size() != size)
    throw ParseError("permutation JSON: image must be an array of length size");
  std::vector<std::size_t> values;
  values.reserve(size);
  for (const json& v : image) {
    if (!v.is_number_unsigned())
      throw ParseError("permutation JSON: image values must be nonnegative integers");
    values.push_back(v.get<std::size_t>());
  }
  return PermutationSpec(std::move(values));
}

PermutationSpec perm_from_matrix_json(const json& j, double tol) {
  if (j.is_object() && j.contains("image")) return perm_from_json(j);
  if (j.is_object() && j.contains("entries")) return from_dense(matrix_from_json(j), tol);
  throw ParseError("matrix JSON: expected an object with either image or entries");
}

json hamiltonian_to_json(const HamiltonianResult& result) {
  return json{{"K", matrix_to_json(result.k)},
              {"H", matrix_to_json(result.h)},
              {"residual", result.residual},
              {"omega_t_convention", 1.0}};
}

json pauli_to_json(const std::vector<PauliTerm>& terms, std::size_t n, bool spin_basis) {
  json term_list = json::array();
  for (const PauliTerm& term : terms)
    term_list.push_back(json{{"word", term.word},
                             {"re", term.coeff.real()},
                             {"im", term.coeff.imag()}});
  return json{{"n", n}, {"basis", spin_basis ? "spin" : "sigma"}, {"terms", std::move(term_list)}};
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace qboole
