#include <random>

#include <gtest/gtest.h>

#include "kcut/matrix.hpp"

namespace kcut {
namespace {

IntMatrix random_matrix(std::size_t rows, std::size_t cols, int lo, int hi,
                        std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dist(lo, hi);
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = dist(rng);
  return m;
}

TEST(Matmul, Identity) {
  std::mt19937_64 rng(1);
  IntMatrix m = random_matrix(7, 7, -5, 5, rng);
  EXPECT_EQ(matmul(IntMatrix::identity(7), m), m);
  EXPECT_EQ(matmul_strassen(IntMatrix::identity(7), m, 1), m);
}

TEST(Matmul, TwoByTwo) {
  IntMatrix a(2, 2), b(2, 2), want(2, 2);
  a(0, 0) = 1, a(0, 1) = 1, a(1, 1) = 1;
  b(0, 0) = 1, b(1, 0) = 1, b(1, 1) = 1;
  want(0, 0) = 2, want(0, 1) = 1, want(1, 0) = 1, want(1, 1) = 1;
  EXPECT_EQ(matmul_cubic(a, b), want);
  EXPECT_EQ(matmul_strassen(a, b, 1), want);
}

TEST(Matmul, StrassenMatchesCubic) {
  std::mt19937_64 rng(7);
  IntMatrix a = random_matrix(50, 50, 0, 1, rng);
  IntMatrix b = random_matrix(50, 50, 0, 1, rng);
  EXPECT_EQ(matmul_strassen(a, b, 8), matmul_cubic(a, b));
  MatmulOptions small{16};
  EXPECT_EQ(matmul(a, b, small), matmul_cubic(a, b));
}

TEST(Matmul, Rectangular) {
  std::mt19937_64 rng(3);
  IntMatrix a = random_matrix(13, 29, -9, 9, rng);
  IntMatrix b = random_matrix(29, 6, -9, 9, rng);
  IntMatrix c = matmul_strassen(a, b, 2);
  EXPECT_EQ(c.rows(), 13u);
  EXPECT_EQ(c.cols(), 6u);
  EXPECT_EQ(c, matmul_cubic(a, b));
}

TEST(Matmul, ShapeMismatch) {
  EXPECT_ANY_THROW(matmul(IntMatrix(2, 3), IntMatrix(2, 3)));
}

}  // namespace
}  // namespace kcut
