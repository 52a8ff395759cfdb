#include "qboole/matrix.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <numeric>

#include "qboole/errors.hpp"

namespace qboole {

ComplexMatrix ComplexMatrix::identity(std::size_t d) {
  ComplexMatrix m(d, d);
  for (std::size_t i = 0; i < d; ++i) m.at(i, i) = 1.0;
  return m;
}

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows())
    throw DimensionError("matmul shapes " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + " and " + std::to_string(b.rows()) + "x" +
                         std::to_string(b.cols()) + " do not chain");
  ComplexMatrix r(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      Complex aik = a.at(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) r.at(i, j) += aik * b.at(k, j);
    }
  }
  return r;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      Complex aij = a.at(i, j);
      if (aij == Complex{}) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          r.at(i * b.rows() + k, j * b.cols() + l) = aij * b.at(k, l);
    }
  return r;
}

ComplexMatrix direct_sum(const std::vector<ComplexMatrix>& blocks) {
  if (blocks.empty()) throw DimensionError("direct_sum needs at least one block");
  std::size_t d = 0;
  for (const ComplexMatrix& b : blocks) {
    if (!b.square())
      throw DimensionError("direct_sum block of shape " + std::to_string(b.rows()) + "x" +
                           std::to_string(b.cols()) + " is not square");
    d += b.rows();
  }
  ComplexMatrix r(d, d);
  std::size_t offset = 0;
  for (const ComplexMatrix& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) r.at(offset + i, offset + j) = b.at(i, j);
    offset += b.rows();
  }
  return r;
}

ComplexMatrix adjoint(const ComplexMatrix& m) {
  ComplexMatrix r(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r.at(j, i) = std::conj(m.at(i, j));
  return r;
}

namespace {

void check_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionError(std::string(op) + " on shapes " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + " and " + std::to_string(b.rows()) + "x" +
                         std::to_string(b.cols()));
}

}  // namespace

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
  check_same_shape(a, b, "matrix addition");
  ComplexMatrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j) + b.at(i, j);
  return r;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
  check_same_shape(a, b, "matrix subtraction");
  ComplexMatrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j) - b.at(i, j);
  return r;
}

ComplexMatrix operator*(Complex scale, const ComplexMatrix& m) {
  ComplexMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r.at(i, j) = scale * m.at(i, j);
  return r;
}

double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  check_same_shape(a, b, "frobenius_distance");
  double sum = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) sum += std::norm(a.at(i, j) - b.at(i, j));
  return std::sqrt(sum);
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  check_same_shape(a, b, "max_abs_diff");
  double best = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      best = std::max(best, std::abs(a.at(i, j) - b.at(i, j)));
  return best;
}

double max_abs(const ComplexMatrix& m) {
  double best = 0.0;
  for (const Complex& z : m.entries()) best = std::max(best, std::abs(z));
  return best;
}

PermutationSpec::PermutationSpec(std::vector<std::size_t> image) : image_(std::move(image)) {
  std::vector<bool> seen(image_.size(), false);
  for (std::size_t c = 0; c < image_.size(); ++c) {
    std::size_t r = image_[c];
    if (r >= image_.size())
      throw NotPermutationError("image value " + std::to_string(r) + " at position " +
                                std::to_string(c) + " outside 0.." +
                                std::to_string(image_.size() - 1));
    if (seen[r])
      throw NotPermutationError("image is not a bijection: value " + std::to_string(r) +
                                " repeats at position " + std::to_string(c));
    seen[r] = true;
  }
}

PermutationSpec PermutationSpec::identity(std::size_t d) {
  std::vector<std::size_t> image(d);
  std::iota(image.begin(), image.end(), std::size_t{0});
  return PermutationSpec(std::move(image));
}

ComplexMatrix to_dense(const PermutationSpec& p) {
  ComplexMatrix m(p.size(), p.size());
  for (std::size_t c = 0; c < p.size(); ++c) m.at(p.image_of(c), c) = 1.0;
  return m;
}

PermutationSpec from_dense(const ComplexMatrix& m, double tol) {
  if (!m.square())
    throw DimensionError("permutation matrix must be square, got " + std::to_string(m.rows()) +
                         "x" + std::to_string(m.cols()));
  if (m.rows() == 0) throw DimensionError("permutation matrix must be nonempty");
  std::size_t d = m.rows();
  std::vector<std::size_t> image(d, 0);
  std::vector<std::size_t> owner(d, d);  // owner[r] = column holding row r's 1
  for (std::size_t c = 0; c < d; ++c) {
    std::size_t ones = 0;
    std::size_t row = 0;
    for (std::size_t r = 0; r < d; ++r) {
      Complex z = m.at(r, c);
      if (std::abs(z - Complex{1.0, 0.0}) <= tol) {
        ++ones;
        row = r;
      } else if (std::abs(z) > tol) {
        throw NotPermutationError("column " + std::to_string(c) + " has entry " +
                                  format_entry(z) + " at row " + std::to_string(r) +
                                  ", not 0 or 1 within tolerance");
      }
    }
    if (ones != 1)
      throw NotPermutationError("column " + std::to_string(c) + " has " + std::to_string(ones) +
                                " unit entries, expected exactly 1");
    if (owner[row] != d)
      throw NotPermutationError("column " + std::to_string(c) + " maps to row " +
                                std::to_string(row) + " already taken by column " +
                                std::to_string(owner[row]));
    owner[row] = c;
    image[c] = row;
  }
  return PermutationSpec(std::move(image));
}

namespace {

// Renders v as q*(pi/4) when that is exact to 1e-9 relative, else empty.
std::string pi_quarter_form(double v) {
  constexpr double quarter = std::numbers::pi / 4.0;
  double m = v / quarter;
  double q = std::round(m);
  if (q == 0.0 || std::abs(m - q) > 1e-9 || std::abs(q) > 1e6) return {};
  long num = static_cast<long>(q);
  long den = 4;
  long g = std::gcd(std::labs(num), den);
  num /= g;
  den /= g;
  std::string s = num < 0 ? "-" : "";
  long mag = std::labs(num);
  if (mag != 1) s += std::to_string(mag);
  s += "pi";
  if (den != 1) s += "/" + std::to_string(den);
  return s;
}

std::string real_form(double v) {
  if (v == 0.0) return "0";
  double r = std::round(v);
  if (std::abs(v - r) < 1e-12 && std::abs(v) < 1e15) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.0f", r);
    return buf;
  }
  if (std::string s = pi_quarter_form(v); !s.empty()) return s;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

}  // namespace

std::string format_entry(Complex z) {
  constexpr double display_zero = 1e-12;
  double re = std::abs(z.real()) < display_zero ? 0.0 : z.real();
  double im = std::abs(z.imag()) < display_zero ? 0.0 : z.imag();
  auto imag_form = [](double v) {
    std::string s = real_form(v);
    if (s == "1") return std::string("i");
    if (s == "-1") return std::string("-i");
    return s + "i";
  };
  if (im == 0.0) return real_form(re);
  if (re == 0.0) return imag_form(im);
  std::string s = "(" + real_form(re);
  std::string it = imag_form(im);
  if (it[0] != '-') s += '+';
  s += it;
  s += ')';
  return s;
}

std::string matrix_to_text(const ComplexMatrix& m) {
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out += '[';
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ' ';
      out += format_entry(m.at(i, j));
    }
    out += "]\n";
  }
  return out;
}

}  // namespace qboole
