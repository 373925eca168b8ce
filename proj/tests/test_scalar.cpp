#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "posetlab/scalar.hpp"

using posetlab::errc;
using posetlab::error;
using posetlab::Scalar;

TEST(Scalar, CanonicalText) {
  EXPECT_EQ(Scalar(1).to_string(), "1");
  EXPECT_EQ(Scalar(mpq_class(-2, 3)).to_string(), "-2/3");
  EXPECT_EQ(Scalar::i().to_string(), "0+1i");
  EXPECT_EQ(Scalar(mpq_class(1, 2), mpq_class(-3, 4)).to_string(), "1/2-3/4i");
  EXPECT_EQ(Scalar(mpq_class(4, 6)).to_string(), "2/3");
}

TEST(Scalar, ParsesCanonicalAndLenientForms) {
  EXPECT_EQ(Scalar::parse("1"), Scalar(1));
  EXPECT_EQ(Scalar::parse("-2/3"), Scalar(mpq_class(-2, 3)));
  EXPECT_EQ(Scalar::parse("0+1i"), Scalar::i());
  EXPECT_EQ(Scalar::parse(" 1/2 - 3/4 i "), Scalar(mpq_class(1, 2), mpq_class(-3, 4)));
  EXPECT_EQ(Scalar::parse("4/6"), Scalar(mpq_class(2, 3)));
  EXPECT_EQ(Scalar::parse("-i"), -Scalar::i());
  EXPECT_EQ(Scalar::parse("5i"), Scalar(0, 5));
  EXPECT_EQ(Scalar::parse("+3"), Scalar(3));
}

TEST(Scalar, RejectsMalformedText) {
  for (const char* bad : {"", "abc", "1/0", "1//2", "1/-2", "1+2", "1.5", "2/3/4"}) {
    try {
      Scalar::parse(bad);
      ADD_FAILURE() << "accepted '" << bad << "'";
    } catch (const error& e) {
      EXPECT_EQ(e.code(), errc::invalid_input) << bad;
    }
  }
}

TEST(Scalar, DivisionByZeroThrows) {
  EXPECT_THROW(Scalar(1) / Scalar(0), error);
}

TEST(ScalarProperty, TextRoundTrip) {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 500; ++k) {
    const Scalar s = oracle::random_scalar(rng);
    EXPECT_EQ(Scalar::parse(s.to_string()), s) << s;
  }
}

TEST(ScalarProperty, FieldIdentities) {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 300; ++k) {
    const Scalar a = oracle::random_scalar(rng);
    const Scalar b = oracle::random_scalar(rng);
    const Scalar c = oracle::random_scalar(rng, 100, true);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a * c) / c, a);
    EXPECT_EQ(a - a, Scalar(0));
    EXPECT_EQ(c * (Scalar(1) / c), Scalar(1));
    EXPECT_EQ(a * b, b * a);
  }
}
