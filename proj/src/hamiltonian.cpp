#include "qboole/hamiltonian.hpp"

#include <cmath>
#include <numbers>

#include "qboole/errors.hpp"

namespace qboole {

std::vector<std::vector<std::size_t>> cycles(const PermutationSpec& p) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> visited(p.size(), false);
  for (std::size_t start = 0; start < p.size(); ++start) {
    if (visited[start]) continue;
    std::vector<std::size_t> cycle;
    std::size_t k = start;
    do {
      visited[k] = true;
      cycle.push_back(k);
      k = p.image_of(k);
    } while (k != start);
    out.push_back(std::move(cycle));
  }
  return out;
}

namespace {

// theta_k = pi * (2k/L reduced into (-1, 1]). Multiplying pi by the
// reduced fraction keeps the L = 4 phases bit-exact (0, pi/2, pi, -pi/2).
double cycle_phase(std::size_t k, std::size_t cycle_length) {
  double f = 2.0 * static_cast<double>(k) / static_cast<double>(cycle_length);
  if (f > 1.0) f -= 2.0;
  return std::numbers::pi * f;
}

}  // namespace

std::vector<double> eigenphases(const PermutationSpec& p) {
  std::vector<double> out;
  out.reserve(p.size());
  for (const auto& cycle : cycles(p))
    for (std::size_t k = 0; k < cycle.size(); ++k) out.push_back(cycle_phase(k, cycle.size()));
  return out;
}

ComplexMatrix skew_log(const PermutationSpec& p) {
  std::size_t d = p.size();
  ComplexMatrix k_matrix(d, d);
  for (const auto& cycle : cycles(p)) {
    std::size_t length = cycle.size();
    if (length == 1) continue;  // fixed point: zero row and column
    // g[m] = (i/L) sum_k theta_k e^{-2 pi i k m / L}; then
    // K[c_j][c_l] = g[(j - l) mod L].
    std::vector<Complex> g(length);
    for (std::size_t m = 0; m < length; ++m) {
      Complex sum = 0.0;
      for (std::size_t k = 1; k < length; ++k) {
        double theta = cycle_phase(k, length);
        double angle = -2.0 * std::numbers::pi * static_cast<double>(k * m % length) /
                       static_cast<double>(length);
        sum += theta * std::polar(1.0, angle);
      }
      g[m] = Complex(0.0, 1.0) * sum / static_cast<double>(length);
    }
    for (std::size_t j = 0; j < length; ++j)
      for (std::size_t l = 0; l < length; ++l)
        k_matrix.at(cycle[j], cycle[l]) = g[(j + length - l) % length];
  }
  // Exact skew-hermitian symmetrization; the closed form is already skew
  // up to rounding.
  ComplexMatrix adj = adjoint(k_matrix);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      k_matrix.at(i, j) = 0.5 * (k_matrix.at(i, j) - adj.at(i, j));
  return k_matrix;
}

ComplexMatrix matrix_exp(const ComplexMatrix& m) {
  if (!m.square())
    throw DimensionError("matrix_exp needs a square matrix, got " + std::to_string(m.rows()) +
                         "x" + std::to_string(m.cols()));
  // Scale until the max-entry norm is at most 1/2, run the Taylor series
  // to convergence, then square back.
  double norm = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    double row_sum = 0.0;
    for (std::size_t j = 0; j < m.cols(); ++j) row_sum += std::abs(m.at(i, j));
    norm = std::max(norm, row_sum);
  }
  int squarings = 0;
  double scale = 1.0;
  while (norm * scale > 0.5 && squarings < 60) {
    scale *= 0.5;
    ++squarings;
  }
  ComplexMatrix scaled = Complex(scale, 0.0) * m;
  ComplexMatrix sum = ComplexMatrix::identity(m.rows());
  ComplexMatrix term = ComplexMatrix::identity(m.rows());
  for (int k = 1; k <= 64; ++k) {
    term = Complex(1.0 / k, 0.0) * matmul(term, scaled);
    sum = sum + term;
    if (max_abs(term) < 1e-18) break;
  }
  for (int s = 0; s < squarings; ++s) sum = matmul(sum, sum);
  return sum;
}

HamiltonianResult hamiltonian(const PermutationSpec& p) {
  HamiltonianResult result;
  result.k = skew_log(p);
  result.h = Complex(0.0, 1.0) * result.k;
  result.residual = max_abs_diff(matrix_exp(result.k), to_dense(p));
  return result;
}

}  // namespace qboole
