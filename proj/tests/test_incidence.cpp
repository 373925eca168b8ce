#include <gtest/gtest.h>

#include <atomic>
#include <random>
#include <thread>

#include "oracles.hpp"
#include "posetlab/incidence.hpp"

using namespace posetlab;

namespace {

using DivFn = IntervalFunction<DivisibilityPoset>;
using ChainFn = IntervalFunction<ChainPoset>;

/// Deterministic pseudo-random interval function: value depends only on the
/// pair's canonical encodings and `seed`; diagonal entries are nonzero.
template <Poset P>
IntervalFunction<P> random_invertible(const P& p, std::uint64_t seed) {
  return IntervalFunction<P>::custom(
      p,
      [p, seed](const element_t<P>& x, const element_t<P>& y) {
        std::seed_seq seq{seed, static_cast<std::uint64_t>(std::hash<std::string>{}(p.format(x) + "|" + p.format(y)))};
        std::mt19937_64 rng(seq);
        return oracle::random_scalar(rng, 9, x == y);
      },
      "random");
}

template <Poset P>
std::vector<std::pair<element_t<P>, element_t<P>>> random_intervals(const P& p, const std::vector<element_t<P>>& xs,
                                                                     std::size_t count, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, xs.size() - 1);
  std::vector<std::pair<element_t<P>, element_t<P>>> out;
  while (out.size() < count) {
    const auto& a = xs[pick(rng)];
    const auto& b = xs[pick(rng)];
    if (p.leq(a, b)) out.emplace_back(a, b);
  }
  return out;
}

}  // namespace

TEST(Evaluate, Examples) {
  const DivisibilityPoset p;
  EXPECT_EQ(DivFn::zeta(p)(2, 12), Scalar(1));
  EXPECT_EQ(DivFn::delta(p)(2, 12), Scalar(0));
  EXPECT_EQ(DivFn::delta(p)(5, 5), Scalar(1));
}

TEST(Evaluate, OffIntervalIsAnError) {
  try {
    DivFn::zeta(DivisibilityPoset{})(4, 6);
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::not_comparable);
  }
}

TEST(MobiusValue, Examples) {
  EXPECT_EQ(mobius_value(SubsetPoset{}, Subset{2}, Subset{2}), Scalar(1));
  EXPECT_EQ(mobius_value(DivisibilityPoset{}, 7, 7), Scalar(1));

  // Oracle: direct recursion on the four-element interval {2,4,6,12}.
  const std::vector<std::uint64_t> iv{2, 4, 6, 12};
  std::vector<long> mu(iv.size());
  for (std::size_t k = 0; k < iv.size(); ++k) {
    long s = 0;
    for (std::size_t j = 0; j < k; ++j) {
      if (iv[k] % iv[j] == 0) s += mu[j];
    }
    mu[k] = k == 0 ? 1 : -s;
  }
  EXPECT_EQ(mu.back(), 1);
  EXPECT_EQ(oracle::mobius_sieve(6)[6], 1);
  EXPECT_EQ(mobius_value(DivisibilityPoset{}, 2, 12), Scalar(mu.back()));

  EXPECT_EQ(mobius_value(ChainPoset{}, 3, 5), Scalar(0));
  EXPECT_THROW(mobius_value(ChainPoset{}, 5, 3), error);
}

TEST(Convolve, Examples) {
  const DivisibilityPoset d;
  EXPECT_EQ(convolve(DivFn::mobius(d), DivFn::zeta(d))(1, 12), Scalar(0));
  const ChainPoset c;
  // Oracle: zeta*zeta counts the interval, |[1,3]| = 3.
  EXPECT_EQ(convolve(ChainFn::zeta(c), ChainFn::zeta(c))(1, 3), Scalar(3));

  const auto a = random_invertible(d, 17);
  const auto left = convolve(DivFn::delta(d), a);
  for (std::uint64_t y : {1, 6, 12, 30, 60}) {
    for (auto x : oracle::divisors_by_scan(y)) EXPECT_EQ(left(x, y), a(x, y));
  }
}

TEST(Convolve, PosetMismatch) {
  const auto p = ExplicitPoset::from_covers({"a", "b"}, {{"a", "b"}});
  const auto q = ExplicitPoset::from_covers({"a", "b"}, {{"a", "b"}});
  using F = IntervalFunction<ExplicitPoset>;
  try {
    convolve(F::zeta(p), F::mobius(q));
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::poset_mismatch);
  }
}

TEST(Invert, Examples) {
  const DivisibilityPoset d;
  EXPECT_EQ(invert(DivFn::zeta(d))(2, 12), Scalar(1));
  const auto inv_delta = invert(DivFn::delta(d));
  for (auto x : oracle::divisors_by_scan(60)) EXPECT_EQ(inv_delta(x, 60), DivFn::delta(d)(x, 60));

  const auto singular = DivFn::custom(d, [](std::uint64_t x, std::uint64_t y) { return Scalar(x == 3 && y == 3 ? 0 : 1); });
  const auto inv = invert(singular);
  EXPECT_EQ(inv(1, 2), Scalar(-1));  // never touches the zero diagonal
  try {
    inv(1, 6);
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::not_invertible);
  }
}

TEST(ClassicalMobius, Examples) {
  EXPECT_EQ(classical_mobius(1), 1);
  EXPECT_EQ(classical_mobius(6), 1);
  EXPECT_EQ(classical_mobius(4), 0);
  EXPECT_EQ(classical_mobius(30), -1);
  EXPECT_THROW(classical_mobius(0), error);
  const auto sieve = oracle::mobius_sieve(10000);
  for (std::uint64_t n = 1; n <= 10000; ++n) ASSERT_EQ(classical_mobius(n), sieve[n]) << n;
}

TEST(ClosedForm, Examples) {
  EXPECT_EQ(closed_form_mobius(DivisibilityPoset{}, 1, 30), Scalar(-1));
  EXPECT_EQ(closed_form_mobius(SubsetPoset{}, Subset{}, Subset{1, 2}), Scalar(1));
  EXPECT_EQ(closed_form_mobius(ChainPoset{}, 4, 5), Scalar(-1));
  const MultisetPoset m;
  EXPECT_EQ(closed_form_mobius(m, m.parse("2"), m.parse("2*3*5")), Scalar(1));
  EXPECT_EQ(closed_form_mobius(m, m.parse("2"), m.parse("2^3")), Scalar(0));
  const auto e = ExplicitPoset::from_covers({"a", "b"}, {{"a", "b"}});
  try {
    closed_form_mobius(e, e.parse("a"), e.parse("b"));
    FAIL();
  } catch (const error& err) {
    EXPECT_EQ(err.code(), errc::no_closed_form);
  }
}

TEST(MobiusProperty, ClosedFormAgreementDesk) {
  const DivisibilityPoset d;
  const auto mu = DivFn::mobius(d);
  for (std::uint64_t y = 1; y <= 300; ++y) {
    for (auto x : oracle::divisors_by_scan(y)) ASSERT_EQ(mu(x, y), closed_form_mobius(d, x, y)) << x << "|" << y;
  }
  const ChainPoset c;
  const auto cmu = ChainFn::mobius(c);
  for (std::uint64_t n = 1; n <= 80; ++n) {
    for (std::uint64_t m = 1; m <= n; ++m) ASSERT_EQ(cmu(m, n), closed_form_mobius(c, m, n));
  }
  const SubsetPoset s;
  const auto smu = IntervalFunction<SubsetPoset>::mobius(s);
  const auto sets = enumerate_window(s, Window<Subset>::bounded(5));
  for (const auto& a : sets) {
    for (const auto& b : sets) {
      if (s.leq(a, b)) {
        ASSERT_EQ(smu(a, b), closed_form_mobius(s, a, b));
      }
    }
  }
  const MultisetPoset m;
  const auto mmu = IntervalFunction<MultisetPoset>::mobius(m);
  const auto ms = enumerate_window(m, Window<Multiset>::bounded(200));
  for (const auto& a : ms) {
    for (const auto& b : ms) {
      if (m.leq(a, b)) {
        ASSERT_EQ(mmu(a, b), closed_form_mobius(m, a, b));
      }
    }
  }
}

TEST(MobiusProperty, IntegerValuedAndInvertsZeta) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    const auto rp = oracle::random_poset(rng, 3 + trial % 10);
    const auto p = ExplicitPoset::from_covers(rp.elements, rp.covers);
    using F = IntervalFunction<ExplicitPoset>;
    const auto mu = F::mobius(p);
    const auto left = convolve(mu, F::zeta(p));
    const auto right = convolve(F::zeta(p), mu);
    const auto xs = enumerate_window(p, Window<ExplicitElement>::whole());
    for (const auto& x : xs) {
      for (const auto& y : xs) {
        if (!p.leq(x, y)) continue;
        EXPECT_TRUE(mu(x, y).is_integer());
        const Scalar d(x == y ? 1 : 0);
        EXPECT_EQ(left(x, y), d);
        EXPECT_EQ(right(x, y), d);
      }
    }
  }
}

TEST(IncidenceProperty, ConvolutionIsAssociative) {
  std::mt19937_64 rng(8);
  const DivisibilityPoset d;
  const auto a = random_invertible(d, 1), b = random_invertible(d, 2), c = random_invertible(d, 3);
  const auto lhs = convolve(convolve(a, b), c), rhs = convolve(a, convolve(b, c));
  for (const auto& [x, y] : random_intervals(d, enumerate_window(d, Window<std::uint64_t>::bounded(120)), 100, rng)) {
    EXPECT_EQ(lhs(x, y), rhs(x, y));
  }

  const SubsetPoset s;
  const auto sa = random_invertible(s, 4), sb = random_invertible(s, 5), sc = random_invertible(s, 6);
  const auto sl = convolve(convolve(sa, sb), sc), sr = convolve(sa, convolve(sb, sc));
  for (const auto& [x, y] : random_intervals(s, enumerate_window(s, Window<Subset>::bounded(5)), 100, rng)) {
    EXPECT_EQ(sl(x, y), sr(x, y));
  }

  const ChainPoset ch;
  const auto ca = random_invertible(ch, 7), cb = random_invertible(ch, 8), cc = random_invertible(ch, 9);
  const auto cl = convolve(convolve(ca, cb), cc), cr = convolve(ca, convolve(cb, cc));
  for (const auto& [x, y] : random_intervals(ch, enumerate_window(ch, Window<std::uint64_t>::bounded(25)), 100, rng)) {
    EXPECT_EQ(cl(x, y), cr(x, y));
  }
}

TEST(IncidenceProperty, DoubleInverseIsIdentity) {
  std::mt19937_64 rng(13);
  const DivisibilityPoset d;
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto a = random_invertible(d, 100 + seed);
    const auto back = invert(invert(a));
    const auto inv = invert(a);
    const auto both = convolve(a, inv), other = convolve(inv, a);
    for (const auto& [x, y] : random_intervals(d, enumerate_window(d, Window<std::uint64_t>::bounded(60)), 40, rng)) {
      EXPECT_EQ(back(x, y), a(x, y));
      const Scalar delta(x == y ? 1 : 0);
      EXPECT_EQ(both(x, y), delta);
      EXPECT_EQ(other(x, y), delta);
    }
  }
}

TEST(IncidenceProperty, SharedInstanceAcrossThreads) {
  const ChainPoset c;
  const auto mu = ChainFn::mobius(c);
  std::atomic<int> failures{0};
  std::vector<std::thread> pool;
  for (int t = 0; t < 4; ++t) {
    pool.emplace_back([&, t] {
      for (std::uint64_t n = 1; n <= 60; ++n) {
        for (std::uint64_t m = 1 + t; m <= n; m += 2) {
          if (mu(m, n) != closed_form_mobius(c, m, n)) ++failures;
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  EXPECT_EQ(failures.load(), 0);
  // Repeated evaluation is deterministic.
  EXPECT_EQ(mu(3, 4), mu(3, 4));
}
