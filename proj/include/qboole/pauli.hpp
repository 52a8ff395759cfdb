#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qboole/matrix.hpp"

namespace qboole {

/// One term of a Pauli-word expansion: word[j] in {0,1,2,3} selects the
/// factor on qubit j (0 = identity), word[0] the leftmost Kronecker
/// factor.
struct PauliTerm {
  std::vector<int> word;
  Complex coeff;

  bool operator==(const PauliTerm& other) const = default;
};

/// sigma(0) = I, sigma(1) = X, sigma(2) = Y, sigma(3) = Z as exact 2x2
/// matrices. Throws DimensionError for other indices.
ComplexMatrix sigma(int index);

/// Left-to-right Kronecker product of the word's factors. Throws
/// DimensionError on an empty word or an index outside 0..3.
ComplexMatrix pauli_word_matrix(const std::vector<int>& word);

/// Expansion m = sum_w c_w * W_w over all 4^n words of length
/// n = log2(dim), with c_w = Tr(m W_w) / 2^n. Terms with |c_w| <= drop_tol
/// are dropped; the rest are listed in lexicographic word order. Throws
/// DimensionError for a non-square or non-power-of-two matrix.
std::vector<PauliTerm> pauli_decompose(const ComplexMatrix& m, double drop_tol = 1e-12);

/// sum of coeff * word matrix for n qubits. Every word must have length n.
ComplexMatrix pauli_reconstruct(const std::vector<PauliTerm>& terms, std::size_t n);

/// Rescales sigma coefficients to spin-operator coefficients
/// (s_a = sigma_a / 2): each coefficient is multiplied by 2 for every
/// nonzero index in its word. Words are unchanged.
std::vector<PauliTerm> spin_form(const std::vector<PauliTerm>& terms);

/// One line per term: "<sign><coeff> * s0 (x) s1" with label "s" by
/// default. Real coefficients print as +v / -v; complex ones as +(re+imi).
std::string terms_to_text(const std::vector<PauliTerm>& terms, const std::string& label = "s");

}  // namespace qboole
