#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

namespace qboole {

using Complex = std::complex<double>;

/// Dense row-major complex matrix.
class ComplexMatrix {
 public:
  ComplexMatrix() : rows_(0), cols_(0) {}
  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}

  static ComplexMatrix identity(std::size_t d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Complex& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Complex& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  const std::vector<Complex>& entries() const { return entries_; }

  bool operator==(const ComplexMatrix& other) const = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Complex> entries_;
};

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Block-diagonal stack of square blocks, in order. Throws DimensionError
/// on an empty list or any non-square block.
ComplexMatrix direct_sum(const std::vector<ComplexMatrix>& blocks);

/// Conjugate transpose.
ComplexMatrix adjoint(const ComplexMatrix& m);

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex scale, const ComplexMatrix& m);

/// sqrt(sum |a_ij - b_ij|^2). Shapes must match.
double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b);

/// max_ij |a_ij - b_ij|. Shapes must match.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// max_ij |m_ij|.
double max_abs(const ComplexMatrix& m);

/// A d x d permutation matrix in one-point-per-column form: column c has
/// its 1 in row image[c]. Equivalently the map c -> image[c].
class PermutationSpec {
 public:
  /// Throws NotPermutationError unless image is a bijection on 0..d-1.
  explicit PermutationSpec(std::vector<std::size_t> image);

  static PermutationSpec identity(std::size_t d);

  std::size_t size() const { return image_.size(); }
  const std::vector<std::size_t>& image() const { return image_; }
  std::size_t image_of(std::size_t c) const { return image_[c]; }

  bool operator==(const PermutationSpec& other) const = default;

 private:
  std::vector<std::size_t> image_;
};

/// Dense 0/1 matrix with exact 1.0 entries at (image[c], c).
ComplexMatrix to_dense(const PermutationSpec& p);

/// Recognizes a permutation matrix: every entry within tol of 0 or 1, one
/// 1 per column, one per row. Throws NotPermutationError with the offending
/// column named, or DimensionError for a non-square matrix.
PermutationSpec from_dense(const ComplexMatrix& m, double tol = 1e-9);

/// Bracketed row-per-line text: "[1 0 0 0]". Entries use format_entry.
std::string matrix_to_text(const ComplexMatrix& m);

/// Compact entry form: integers as "1"/"0"/"-1", pure real/imaginary as
/// "0.5"/"0.5i", multiples of pi/4 as "pi/2", "-3pi/4i", general values as
/// "(re+imi)".
std::string format_entry(Complex z);

}  // namespace qboole
