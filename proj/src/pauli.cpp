#include "qboole/pauli.hpp"

#include <bit>
#include <cmath>
#include <cstdio>

#include "qboole/errors.hpp"

namespace qboole {

ComplexMatrix sigma(int index) {
  ComplexMatrix m(2, 2);
  switch (index) {
    case 0:
      m.at(0, 0) = 1.0;
      m.at(1, 1) = 1.0;
      return m;
    case 1:
      m.at(0, 1) = 1.0;
      m.at(1, 0) = 1.0;
      return m;
    case 2:
      m.at(0, 1) = Complex(0.0, -1.0);
      m.at(1, 0) = Complex(0.0, 1.0);
      return m;
    case 3:
      m.at(0, 0) = 1.0;
      m.at(1, 1) = -1.0;
      return m;
    default:
      throw DimensionError("sigma index must be 0..3, got " + std::to_string(index));
  }
}

namespace {

void check_word(const std::vector<int>& word) {
  if (word.empty()) throw DimensionError("pauli word must have at least one factor");
  for (int w : word)
    if (w < 0 || w > 3)
      throw DimensionError("pauli word factor must be 0..3, got " + std::to_string(w));
}

// Every pauli word matrix has exactly one nonzero per row: at column
// row ^ flip_mask(word), with a value from {1, -1, i, -i}.
std::size_t flip_mask(const std::vector<int>& word) {
  std::size_t n = word.size();
  std::size_t flip = 0;
  for (std::size_t j = 0; j < n; ++j)
    if (word[j] == 1 || word[j] == 2) flip |= std::size_t{1} << (n - 1 - j);
  return flip;
}

Complex word_entry(const std::vector<int>& word, std::size_t row) {
  std::size_t n = word.size();
  Complex v = 1.0;
  for (std::size_t j = 0; j < n; ++j) {
    bool bit = (row >> (n - 1 - j)) & 1u;
    switch (word[j]) {
      case 2:
        v *= bit ? Complex(0.0, 1.0) : Complex(0.0, -1.0);
        break;
      case 3:
        if (bit) v = -v;
        break;
      default:
        break;  // identity and X contribute 1
    }
  }
  return v;
}

}  // namespace

ComplexMatrix pauli_word_matrix(const std::vector<int>& word) {
  check_word(word);
  ComplexMatrix m = sigma(word[0]);
  for (std::size_t j = 1; j < word.size(); ++j) m = kron(m, sigma(word[j]));
  return m;
}

std::vector<PauliTerm> pauli_decompose(const ComplexMatrix& m, double drop_tol) {
  if (!m.square())
    throw DimensionError("pauli_decompose needs a square matrix, got " +
                         std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  std::size_t d = m.rows();
  if (d < 2 || !std::has_single_bit(d))
    throw DimensionError("pauli_decompose needs size 2^n with n >= 1, got " + std::to_string(d));
  std::size_t n = static_cast<std::size_t>(std::bit_width(d) - 1);
  std::vector<PauliTerm> terms;
  std::vector<int> word(n, 0);
  std::uint64_t word_count = std::uint64_t{1} << (2 * n);
  for (std::uint64_t w = 0; w < word_count; ++w) {
    for (std::size_t j = 0; j < n; ++j) word[j] = static_cast<int>((w >> (2 * (n - 1 - j))) & 3u);
    std::size_t flip = flip_mask(word);
    Complex trace = 0.0;
    for (std::size_t c = 0; c < d; ++c) trace += m.at(c ^ flip, c) * word_entry(word, c);
    Complex coeff = trace / static_cast<double>(d);
    if (std::abs(coeff) > drop_tol) terms.push_back(PauliTerm{word, coeff});
  }
  return terms;
}

ComplexMatrix pauli_reconstruct(const std::vector<PauliTerm>& terms, std::size_t n) {
  if (n == 0 || n > 31) throw DimensionError("pauli_reconstruct needs 1..31 qubits");
  std::size_t d = std::size_t{1} << n;
  ComplexMatrix m(d, d);
  for (const PauliTerm& term : terms) {
    check_word(term.word);
    if (term.word.size() != n)
      throw DimensionError("pauli word length " + std::to_string(term.word.size()) +
                           " differs from qubit count " + std::to_string(n));
    std::size_t flip = flip_mask(term.word);
    for (std::size_t r = 0; r < d; ++r)
      m.at(r, r ^ flip) += term.coeff * word_entry(term.word, r);
  }
  return m;
}

std::vector<PauliTerm> spin_form(const std::vector<PauliTerm>& terms) {
  std::vector<PauliTerm> out = terms;
  for (PauliTerm& term : out) {
    double factor = 1.0;
    for (int w : term.word)
      if (w != 0) factor *= 2.0;
    term.coeff *= factor;
  }
  return out;
}

namespace {

std::string signed_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%+.17g", v);
  return buf;
}

}  // namespace

std::string terms_to_text(const std::vector<PauliTerm>& terms, const std::string& label) {
  std::string out;
  for (const PauliTerm& term : terms) {
    if (term.coeff.imag() == 0.0) {
      out += signed_real(term.coeff.real());
    } else {
      char buf[96];
      std::snprintf(buf, sizeof buf, "+(%.17g%+.17gi)", term.coeff.real(), term.coeff.imag());
      out += buf;
    }
    out += " * ";
    for (std::size_t j = 0; j < term.word.size(); ++j) {
      if (j) out += " (x) ";
      out += label;
      out += std::to_string(term.word[j]);
    }
    out += '\n';
  }
  return out;
}

}  // namespace qboole
