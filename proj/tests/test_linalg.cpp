#include <gtest/gtest.h>

#include "posetlab/linalg.hpp"
#include "posetlab/scalar.hpp"

using namespace posetlab;

TEST(Nullspace, SingleSumEquation) {
  DenseMatrix<Scalar> m(1, 3);
  for (std::size_t c = 0; c < 3; ++c) m(0, c) = Scalar(1);
  const auto basis = nullspace_basis(m);
  ASSERT_EQ(basis.size(), 2u);
  EXPECT_EQ(basis[0], (std::vector<Scalar>{Scalar(-1), Scalar(1), Scalar(0)}));
  EXPECT_EQ(basis[1], (std::vector<Scalar>{Scalar(-1), Scalar(0), Scalar(1)}));
  EXPECT_TRUE(in_span(basis, {Scalar(1), Scalar(-1), Scalar(0)}));
  EXPECT_FALSE(in_span(basis, {Scalar(1), Scalar(1), Scalar(0)}));
}

TEST(Nullspace, FullRankIsTrivial) {
  DenseMatrix<Scalar> m(2, 2);
  m(0, 0) = Scalar(2);
  m(0, 1) = Scalar(1);
  m(1, 0) = Scalar(1);
  m(1, 1) = Scalar::i();
  EXPECT_TRUE(nullspace_basis(m).empty());
  EXPECT_EQ(rank(m), 2u);
}

TEST(Nullspace, BasisVectorsAnnihilate) {
  DenseMatrix<Scalar> m(3, 5);
  long v = 1;
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 5; ++c) m(r, c) = Scalar((v = v * 7 % 11) - 5);
  }
  // Make row 2 dependent.
  for (std::size_t c = 0; c < 5; ++c) m(2, c) = m(0, c) + m(1, c) * Scalar(mpq_class(1, 3));
  const auto basis = nullspace_basis(m);
  EXPECT_EQ(basis.size(), 5 - rank(m));
  for (const auto& b : basis) {
    for (std::size_t r = 0; r < 3; ++r) {
      Scalar dot;
      for (std::size_t c = 0; c < 5; ++c) dot += m(r, c) * b[c];
      EXPECT_TRUE(dot.is_zero());
    }
  }
}
