#include "qboole/hamiltonian.hpp"

#include <gtest/gtest.h>

#include <numbers>
#include <random>

#include "qboole/errors.hpp"
#include "test_util.hpp"

namespace qboole {
namespace {

constexpr double kPi = std::numbers::pi;

ComplexMatrix scaled(double s, std::vector<std::vector<Complex>> rows) {
  ComplexMatrix m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = s * rows[i][j];
  return m;
}

TEST(Cycles, CanonicalOrder) {
  using CycleList = std::vector<std::vector<std::size_t>>;
  EXPECT_EQ(cycles(PermutationSpec({0, 1, 2, 3})), (CycleList{{0}, {1}, {2}, {3}}));
  EXPECT_EQ(cycles(PermutationSpec({0, 1, 3, 2})), (CycleList{{0}, {1}, {2, 3}}));
  EXPECT_EQ(cycles(PermutationSpec({2, 3, 1, 0})), (CycleList{{0, 2, 1, 3}}));
  EXPECT_EQ(cycles(PermutationSpec({1, 0, 3, 2})), (CycleList{{0, 1}, {2, 3}}));
  EXPECT_EQ(cycles(PermutationSpec({1, 2, 0})), (CycleList{{0, 1, 2}}));
}

TEST(Cycles, PartitionProperty) {
  std::mt19937 rng(5150);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t d = 1 + rng() % 24;
    PermutationSpec p = testutil::random_perm(rng, d);
    auto cs = cycles(p);
    std::vector<bool> seen(d, false);
    std::size_t total = 0;
    for (const auto& cycle : cs) {
      ASSERT_FALSE(cycle.empty());
      // starts at its smallest element, applies p along the cycle
      for (std::size_t e : cycle) EXPECT_GE(e, cycle[0]);
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        EXPECT_FALSE(seen[cycle[i]]);
        seen[cycle[i]] = true;
        EXPECT_EQ(p.image_of(cycle[i]), cycle[(i + 1) % cycle.size()]);
      }
      total += cycle.size();
    }
    EXPECT_EQ(total, d);
    for (std::size_t i = 1; i < cs.size(); ++i) EXPECT_LT(cs[i - 1][0], cs[i][0]);
  }
}

TEST(Eigenphases, ExactValuesForSmallCycles) {
  // Four-cycle: phases 0, pi/2, pi, -pi/2, bit-exact by construction.
  EXPECT_EQ(eigenphases(PermutationSpec({2, 3, 1, 0})),
            (std::vector<double>{0.0, kPi / 2, kPi, -kPi / 2}));
  // Two fixed points and a transposition.
  EXPECT_EQ(eigenphases(PermutationSpec({0, 1, 3, 2})),
            (std::vector<double>{0.0, 0.0, 0.0, kPi}));
  EXPECT_EQ(eigenphases(PermutationSpec({0, 1, 2, 3})),
            (std::vector<double>{0.0, 0.0, 0.0, 0.0}));
}

TEST(Eigenphases, RangeAndMultiset) {
  std::mt19937 rng(2025);
  for (int trial = 0; trial < 100; ++trial) {
    PermutationSpec p = testutil::random_perm(rng, 1 + rng() % 16);
    std::vector<double> phases = eigenphases(p);
    EXPECT_EQ(phases.size(), p.size());
    for (double t : phases) {
      EXPECT_GT(t, -kPi);
      EXPECT_LE(t, kPi);
    }
    // e^{i theta} taken over all phases multiplies to det(U) = sign of the
    // permutation; its phase sum is an integer multiple of pi.
    double total = 0.0;
    for (double t : phases) total += t;
    double multiple = total / kPi;
    EXPECT_NEAR(multiple, std::round(multiple), 1e-9);
  }
}

TEST(SkewLog, TranspositionBlock) {
  // A single swap contributes the 2x2 block (i pi/2) [[1,-1],[-1,1]].
  ComplexMatrix k = skew_log(PermutationSpec({0, 1, 3, 2}));
  Complex a(0.0, kPi / 2);
  ComplexMatrix expected(4, 4);
  expected.at(2, 2) = a;
  expected.at(2, 3) = -a;
  expected.at(3, 2) = -a;
  expected.at(3, 3) = a;
  EXPECT_LE(max_abs_diff(k, expected), 1e-12);
  // Fixed-point rows and columns are exactly zero.
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(k.at(0, i), Complex(0.0, 0.0));
    EXPECT_EQ(k.at(i, 0), Complex(0.0, 0.0));
    EXPECT_EQ(k.at(1, i), Complex(0.0, 0.0));
    EXPECT_EQ(k.at(i, 1), Complex(0.0, 0.0));
  }
}

TEST(SkewLog, FourCycleMatrix) {
  const Complex i(0.0, 1.0);
  ComplexMatrix expected = scaled(kPi / 4, {{i, i, -1.0 - i, 1.0 - i},
                                            {i, i, 1.0 - i, -1.0 - i},
                                            {1.0 - i, -1.0 - i, i, i},
                                            {-1.0 - i, 1.0 - i, i, i}});
  EXPECT_LE(max_abs_diff(skew_log(PermutationSpec({2, 3, 1, 0})), expected), 1e-12);
}

TEST(SkewLog, IdentityGivesZero) {
  EXPECT_EQ(skew_log(PermutationSpec({0, 1, 2, 3})), ComplexMatrix(4, 4));
}

TEST(SkewLog, ExactSkewnessAndKernel) {
  std::mt19937 rng(31337);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t d = 2 + rng() % 15;
    ComplexMatrix k = skew_log(testutil::random_perm(rng, d));
    // Symmetrization makes K + K^dagger vanish entry for entry.
    EXPECT_EQ(adjoint(k), Complex(-1.0, 0.0) * k);
    // Row and column sums vanish: K annihilates the all-ones vector.
    for (std::size_t r = 0; r < d; ++r) {
      Complex row_sum = 0.0;
      Complex col_sum = 0.0;
      for (std::size_t c = 0; c < d; ++c) {
        row_sum += k.at(r, c);
        col_sum += k.at(c, r);
      }
      EXPECT_LE(std::abs(row_sum), 1e-12);
      EXPECT_LE(std::abs(col_sum), 1e-12);
    }
  }
}

TEST(MatrixExp, Goldens) {
  EXPECT_EQ(matrix_exp(ComplexMatrix(3, 3)), ComplexMatrix::identity(3));

  ComplexMatrix half_turn(1, 1);
  half_turn.at(0, 0) = Complex(0.0, kPi);
  ComplexMatrix minus_one(1, 1);
  minus_one.at(0, 0) = -1.0;
  EXPECT_LE(max_abs_diff(matrix_exp(half_turn), minus_one), 1e-14);

  // Nilpotent generator: exp([[0,1],[0,0]]) = [[1,1],[0,1]].
  ComplexMatrix n(2, 2);
  n.at(0, 1) = 1.0;
  ComplexMatrix shear = ComplexMatrix::identity(2);
  shear.at(0, 1) = 1.0;
  EXPECT_LE(max_abs_diff(matrix_exp(n), shear), 1e-15);

  // Rotation generator, large enough angle to force scaling steps.
  for (double theta : {0.7, 3.0}) {
    ComplexMatrix g(2, 2);
    g.at(0, 1) = -theta;
    g.at(1, 0) = theta;
    ComplexMatrix rot(2, 2);
    rot.at(0, 0) = std::cos(theta);
    rot.at(0, 1) = -std::sin(theta);
    rot.at(1, 0) = std::sin(theta);
    rot.at(1, 1) = std::cos(theta);
    EXPECT_LE(max_abs_diff(matrix_exp(g), rot), 1e-13);
  }

  EXPECT_THROW(matrix_exp(ComplexMatrix(2, 3)), DimensionError);
}

TEST(Hamiltonian, TranspositionAndFourCycle) {
  for (auto image : {std::vector<std::size_t>{0, 1, 3, 2}, std::vector<std::size_t>{2, 3, 1, 0}}) {
    PermutationSpec p(image);
    HamiltonianResult res = hamiltonian(p);
    EXPECT_EQ(res.k, skew_log(p));
    EXPECT_EQ(res.h, Complex(0.0, 1.0) * res.k);
    EXPECT_EQ(adjoint(res.h), res.h);  // hermitian, exactly
    EXPECT_LE(res.residual, 1e-12);
    EXPECT_LE(max_abs_diff(matrix_exp(res.k), to_dense(p)), 1e-12);
  }
}

TEST(Hamiltonian, RandomPermutationsReconstruct) {
  std::mt19937 rng(112358);
  for (std::size_t d : {2, 4, 8, 16}) {
    for (int trial = 0; trial < 25; ++trial) {
      PermutationSpec p = testutil::random_perm(rng, d);
      HamiltonianResult res = hamiltonian(p);
      EXPECT_LE(res.residual, 1e-10) << "d=" << d;
      EXPECT_EQ(adjoint(res.h), res.h);
    }
  }
}

}  // namespace
}  // namespace qboole
