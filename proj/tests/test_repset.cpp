#include <gtest/gtest.h>

#include <random>
#include <set>
#include <vector>

#include "ginv/repset.hpp"

using namespace ginv;

namespace {

RepSupport from_set(std::int64_t bound, std::initializer_list<std::int64_t> xs) {
  RepSupport s(bound);
  for (auto x : xs) s.set(x);
  return s;
}

std::vector<std::int64_t> elems(const RepSupport& s) { return s.elements(); }

// Naive counter over a square box that certainly contains the ellipse
// f < bound for the coefficient range used here.
std::vector<std::int64_t> naive_counts(const BinaryQF& f, std::int64_t bound) {
  std::vector<std::int64_t> c(static_cast<std::size_t>(bound), 0);
  const std::int64_t L = bound + 4 * std::max(f.a, f.c);
  for (std::int64_t x = -L; x <= L; ++x)
    for (std::int64_t y = -L; y <= L; ++y) {
      const std::int64_t v = f.a * x * x + f.b * x * y + f.c * y * y;
      if (v < bound) ++c[static_cast<std::size_t>(v)];
    }
  return c;
}

std::vector<BinaryQF> random_forms(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> coef(-30, 30), pos(1, 30);
  std::vector<BinaryQF> out;
  while (out.size() < count) {
    BinaryQF f{pos(rng), coef(rng), pos(rng)};
    if (f.positive_definite()) out.push_back(f);
  }
  return out;
}

}  // namespace

TEST(RepSet, BinarySupportExamples) {
  EXPECT_EQ(elems(binary_support({1, 0, 1}, 10)), (std::vector<std::int64_t>{0, 1, 2, 4, 5, 8, 9}));
  EXPECT_EQ(elems(binary_support({2, -1, 11}, 14)), (std::vector<std::int64_t>{0, 2, 8, 11, 12}));
  EXPECT_EQ(elems(binary_support({1, 0, 1}, 1)), (std::vector<std::int64_t>{0}));
}

TEST(RepSet, RejectsIndefinite) {
  for (BinaryQF f : {BinaryQF{1, 3, 1}, BinaryQF{-1, 0, -1}, BinaryQF{1, 2, 1}}) {
    try {
      binary_support(f, 10);
      FAIL() << f;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::NotPositiveDefinite);
    }
    EXPECT_THROW(binary_counts(f, 10), Error);
  }
}

TEST(RepSet, BinaryCountsExamples) {
  EXPECT_EQ(binary_counts({1, 0, 1}, 2).counts, (std::vector<std::int64_t>{1, 4}));
  EXPECT_EQ(binary_counts({2, -1, 11}, 3).counts, (std::vector<std::int64_t>{1, 0, 2}));
  EXPECT_EQ(binary_counts({1, 0, 10}, 11).counts[10], 2);
}

TEST(RepSet, SumsetExamples) {
  EXPECT_EQ(elems(sumset(from_set(14, {0, 2, 8}), from_set(14, {0, 11}))),
            (std::vector<std::int64_t>{0, 2, 8, 11, 13}));
  const RepSupport s = binary_support({2, -1, 11}, 14);
  EXPECT_EQ(sumset(s, RepSupport::zero(14)), s);
  EXPECT_EQ(elems(sumset(from_set(3, {0, 1}), from_set(3, {0, 1}))), (std::vector<std::int64_t>{0, 1, 2}));
  try {
    sumset(RepSupport(10), RepSupport(11));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BoundMismatch);
  }
}

TEST(RepSet, PowerSupportExamples) {
  const RepSupport s = binary_support({2, -1, 11}, 14);
  EXPECT_EQ(power_support(s, 1), s);
  EXPECT_EQ(elems(power_support(s, 2)), (std::vector<std::int64_t>{0, 2, 4, 8, 10, 11, 12, 13}));
  // four squares hit everything
  EXPECT_EQ(elems(power_support(binary_support({1, 0, 1}, 8), 2)),
            (std::vector<std::int64_t>{0, 1, 2, 3, 4, 5, 6, 7}));
}

TEST(RepSet, CountsConvolveExamples) {
  const RepCounts sq = binary_counts({1, 0, 1}, 10);
  EXPECT_EQ(counts_convolve(sq, sq).counts[1], 8);
  RepCounts delta{10, std::vector<std::int64_t>(10, 0)};
  delta.counts[0] = 1;
  EXPECT_EQ(counts_convolve(sq, delta), sq);
  const RepCounts blk = binary_counts({2, -1, 11}, 10);
  EXPECT_EQ(counts_convolve(blk, blk).counts[4], 4);
  EXPECT_THROW(counts_convolve(sq, binary_counts({1, 0, 1}, 11)), Error);
}

TEST(RepSet, FourSquaresCountsMatchJacobi) {
  // r_4(n) = 8 * sum of divisors of n not divisible by 4
  const RepCounts sq = binary_counts({1, 0, 1}, 200);
  const RepCounts four = counts_convolve(sq, sq);
  for (std::int64_t n = 1; n < 200; ++n) {
    std::int64_t s = 0;
    for (std::int64_t k = 1; k <= n; ++k)
      if (n % k == 0 && k % 4 != 0) s += k;
    EXPECT_EQ(four.counts[static_cast<std::size_t>(n)], 8 * s) << n;
  }
}

TEST(RepSet, RandomFormsAgreeWithNaiveLoop) {
  std::mt19937_64 rng(20261014);
  std::uniform_int_distribution<std::int64_t> bounds(1, 500);
  for (const BinaryQF& f : random_forms(50, 7)) {
    const std::int64_t B = bounds(rng);
    const auto naive = naive_counts(f, B);
    const RepCounts rc = binary_counts(f, B);
    ASSERT_EQ(rc.counts, naive) << f << " B=" << B;
    EXPECT_EQ(rc.counts[0], 1);
    const RepSupport s = binary_support(f, B);
    EXPECT_EQ(rc.support(), s);
    EXPECT_TRUE(s.test(0));
    EXPECT_LE(s.count(), B);
  }
}

TEST(RepSet, PowerSupportMatchesConvolvedCounts) {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<std::int64_t> bounds(1, 500);
  for (const BinaryQF& f : random_forms(50, 11)) {
    const std::int64_t B = bounds(rng);
    const RepCounts base = binary_counts(f, B);
    RepCounts acc = base;
    const RepSupport s = binary_support(f, B);
    for (int m = 1; m <= 5; ++m) {
      if (m > 1) acc = counts_convolve(acc, base);
      ASSERT_EQ(power_support(s, m), acc.support()) << f << " B=" << B << " m=" << m;
    }
  }
}

TEST(RepSet, SumsetIsCommutativeAndAssociative) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const std::int64_t B = std::uniform_int_distribution<std::int64_t>(1, 700)(rng);
    auto random_set = [&] {
      RepSupport s(B);
      const double density = std::uniform_real_distribution<double>(0.0, 0.3)(rng);
      for (std::int64_t k = 0; k < B; ++k)
        if (std::bernoulli_distribution(density)(rng)) s.set(k);
      return s;
    };
    const RepSupport x = random_set(), y = random_set(), z = random_set();
    EXPECT_EQ(sumset(x, y), sumset(y, x));
    EXPECT_EQ(sumset(sumset(x, y), z), sumset(x, sumset(y, z)));
    // against the definition
    const RepSupport xy = sumset(x, y);
    for (std::int64_t k = 0; k < B; ++k) {
      bool hit = false;
      for (std::int64_t i = 0; i <= k && !hit; ++i) hit = x.test(i) && y.test(k - i);
      ASSERT_EQ(xy.test(k), hit) << "k=" << k;
    }
  }
}

TEST(RepSet, DenseSumsetTakesHoleFillingPath) {
  // a dense operand drives the result nearly full, exercising the per-hole phase
  const std::int64_t B = 20000;
  const RepSupport two = binary_support({1, 0, 1}, B);
  EXPECT_EQ(sumset(two, two).count(), B);
  // sums of three squares miss exactly 4^s(8t+7)
  RepSupport one(B);
  for (std::int64_t x = 0; x * x < B; ++x) one.set(x * x);
  const RepSupport threesq = sumset(two, one);
  for (std::int64_t n = 0; n < B; ++n) {
    std::int64_t m = n;
    while (m > 0 && m % 4 == 0) m /= 4;
    ASSERT_EQ(threesq.test(n), !(n > 0 && m % 8 == 7)) << n;
  }
}
