#pragma once

#include <cstddef>
#include <vector>

#include "qboole/matrix.hpp"

namespace qboole {

/// Disjoint cycles of a permutation in canonical order: each cycle starts
/// at its smallest element, cycles sorted by start element. Fixed points
/// appear as length-1 cycles.
std::vector<std::vector<std::size_t>> cycles(const PermutationSpec& p);

/// Eigenphases theta with every eigenvalue of the permutation matrix equal
/// to e^{i theta}, theta in (-pi, pi] (the -1 branch maps to +pi). Listed
/// cycle by cycle in canonical order, k = 0..L-1 within a cycle of length
/// L, theta_k = pi * r with r = 2k/L reduced into (-1, 1]. Exact doubles
/// whenever pi * r is one.
std::vector<double> eigenphases(const PermutationSpec& p);

/// Skew-hermitian K with exp(K) = to_dense(p), built per cycle from the
/// eigenvector basis: a cycle c_0..c_{L-1} contributes
/// K[c_j][c_l] = (i/L) sum_k theta_k e^{-2 pi i k (j-l)/L}. Fixed points
/// contribute zero rows and columns. The result is symmetrized to
/// (K - K^dagger)/2. Row sums are zero: K annihilates the all-ones vector.
ComplexMatrix skew_log(const PermutationSpec& p);

/// exp(m) by scaling and squaring with a Taylor series on the scaled
/// matrix. m must be square. Accurate to ~1e-14 for the norms this library
/// produces (||K|| <= pi).
ComplexMatrix matrix_exp(const ComplexMatrix& m);

/// K, H = iK, and the reconstruction residual max|exp(K) - U|. H is
/// hermitian with eigenvalues in (-pi, pi], and U = e^K = e^{-iH w t}
/// under the convention w t = 1.
struct HamiltonianResult {
  ComplexMatrix k;  // skew-hermitian generator, exp(k) = U
  ComplexMatrix h;  // hermitian i*k
  double residual;  // max entry of |exp(k) - U|
};

HamiltonianResult hamiltonian(const PermutationSpec& p);

}  // namespace qboole
