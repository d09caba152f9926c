#include <gtest/gtest.h>

#include <complex>
#include <stdexcept>
#include <vector>

#include "support/oracles.hpp"
#include "vlab/basis.hpp"
#include "vlab/transform.hpp"

namespace vlab {
namespace {

TEST(Basis, BuildProductsAndLambda) {
  const Basis b = build_basis({2, 3, 2, 4, 2, 3}, 6);
  EXPECT_EQ(b.depth(), 6);
  EXPECT_EQ(b.size(), 288);
  EXPECT_EQ(b.lambda, 4);
  const std::vector<long long> expect = {1, 2, 6, 12, 48, 96, 288};
  EXPECT_EQ(b.Mk, expect);
  EXPECT_EQ(b.label(), "2x3x2x4x2x3");
  EXPECT_FALSE(b.is_walsh());
  EXPECT_TRUE(build_basis({2}, 5).is_walsh());
}

TEST(Basis, PatternRepeatsAndTruncates) {
  const Basis cycled = build_basis({2, 3}, 5);
  EXPECT_EQ(cycled.m, (std::vector<int>{2, 3, 2, 3, 2}));
  const Basis cut = build_basis({2, 3, 5, 7}, 2);
  EXPECT_EQ(cut.m, (std::vector<int>{2, 3}));
}

TEST(Basis, BuildRejectsBadInput) {
  EXPECT_THROW(build_basis({}, 3), std::invalid_argument);
  EXPECT_THROW(build_basis({2, 1}, 2), std::invalid_argument);
  EXPECT_THROW(build_basis({2}, 0), std::invalid_argument);
  EXPECT_THROW(build_basis({2}, 70), std::overflow_error);
}

TEST(Basis, DigitRoundTripIsLittleEndian) {
  const Basis b = build_basis({2, 3, 4}, 3);
  for (long long t = 0; t < b.size(); ++t) {
    const Point x = index_to_digits(b, t);
    ASSERT_EQ(static_cast<int>(x.digits.size()), b.depth());
    long long rebuilt = 0;
    for (int k = b.depth() - 1; k >= 0; --k) {
      rebuilt = rebuilt * b.m[static_cast<std::size_t>(k)] + x.digits[static_cast<std::size_t>(k)];
    }
    EXPECT_EQ(rebuilt, t);
    EXPECT_EQ(digits_to_index(b, x), t);
  }
  // Digit 0 varies fastest.
  EXPECT_EQ(index_to_digits(b, 1).digits[0], 1);
  EXPECT_EQ(index_to_digits(b, 2).digits[0], 0);
  EXPECT_EQ(index_to_digits(b, 2).digits[1], 1);
}

TEST(Basis, GroupAddIsCoordinatewise) {
  const Basis b = build_basis({2, 3}, 2);
  for (long long s = 0; s < b.size(); ++s) {
    for (long long t = 0; t < b.size(); ++t) {
      const Point x = index_to_digits(b, s);
      const Point y = index_to_digits(b, t);
      const Point sum = group_add(b, x, y);
      for (int k = 0; k < b.depth(); ++k) {
        const std::size_t ks = static_cast<std::size_t>(k);
        EXPECT_EQ(sum.digits[ks], (x.digits[ks] + y.digits[ks]) % b.m[ks]);
      }
      EXPECT_EQ(add_index(b, s, t), digits_to_index(b, sum));
      // Subtraction inverts addition.
      EXPECT_EQ(sub_index(b, add_index(b, s, t), t), s);
      const Point back = group_sub(b, sum, y);
      EXPECT_EQ(digits_to_index(b, back), s);
    }
  }
}

TEST(Basis, CylinderMeasureAndMembership) {
  const Basis b = build_basis({2, 3, 2}, 3);
  for (int level = 0; level <= b.depth(); ++level) {
    for (long long t = 0; t < b.size(); ++t) {
      const Cylinder c = cylinder_at(b, level, index_to_digits(b, t));
      EXPECT_EQ(c.level, level);
      const Rational mu = measure(b, c);
      EXPECT_EQ(mu.num, 1);
      EXPECT_EQ(mu.den, b.Mk[static_cast<std::size_t>(level)]);
      EXPECT_EQ(anchor_index(b, c), t % b.Mk[static_cast<std::size_t>(level)]);
      for (long long u = 0; u < b.size(); ++u) {
        const bool same_class =
            u % b.Mk[static_cast<std::size_t>(level)] == t % b.Mk[static_cast<std::size_t>(level)];
        EXPECT_EQ(contains(b, c, u), same_class);
      }
    }
  }
  EXPECT_THROW(cylinder_at(b, 4, index_to_digits(b, 0)), std::out_of_range);
}

TEST(Characters, MatchPolarOracleOnMixedBasis) {
  const Basis b = build_basis({2, 3, 2, 4, 2, 3}, 6);
  for (long long n = 0; n < b.size(); ++n) {
    for (long long t = 0; t < b.size(); ++t) {
      const Complex got = character_at(b, n, t);
      const Complex want = oracle::character(b, n, t);
      ASSERT_NEAR(std::abs(got - want), 0.0, 1e-12) << "n=" << n << " t=" << t;
    }
  }
}

TEST(Characters, WalshValuesAreSigns) {
  const Basis b = build_basis({2}, 6);
  for (long long n = 0; n < b.size(); ++n) {
    for (long long t = 0; t < b.size(); ++t) {
      const Complex v = character_at(b, n, t);
      EXPECT_EQ(v.imag(), 0.0);
      EXPECT_EQ(std::abs(v.real()), 1.0);
      EXPECT_NEAR(std::abs(v - oracle::character(b, n, t)), 0.0, 1e-12);
    }
  }
}

TEST(Characters, MultiplicativeInThePoint) {
  const Basis b = build_basis({3, 2, 4}, 3);
  for (long long n = 0; n < b.size(); ++n) {
    for (long long s = 0; s < b.size(); ++s) {
      for (long long t = 0; t < b.size(); ++t) {
        const Complex lhs = character_at(b, n, add_index(b, s, t));
        const Complex rhs = character_at(b, n, s) * character_at(b, n, t);
        ASSERT_NEAR(std::abs(lhs - rhs), 0.0, 1e-12);
      }
    }
  }
}

TEST(Characters, RademacherIsCharacterAtGeneralizedPower) {
  const Basis b = build_basis({2, 3, 2, 4}, 4);
  for (int k = 0; k < b.depth(); ++k) {
    for (long long t = 0; t < b.size(); ++t) {
      const Point x = index_to_digits(b, t);
      const Complex lhs = rademacher(b, k, x);
      const Complex rhs = character_at(b, b.Mk[static_cast<std::size_t>(k)], t);
      ASSERT_NEAR(std::abs(lhs - rhs), 0.0, 1e-12);
    }
  }
}

TEST(Characters, SweepStreamsEveryRow) {
  const Basis b = build_basis({2, 3, 2, 4, 2, 3}, 6);
  CharacterSweep sweep(b);
  for (long long n = 0; n < b.size(); ++n) {
    EXPECT_EQ(sweep.index(), n);
    const std::vector<Complex> want = character_row(b, n);
    const std::vector<Complex>& got = sweep.row();
    ASSERT_EQ(got.size(), want.size());
    for (std::size_t t = 0; t < want.size(); ++t) {
      ASSERT_NEAR(std::abs(got[t] - want[t]), 0.0, 1e-12) << "n=" << n << " t=" << t;
    }
    if (n + 1 < b.size()) sweep.advance();
  }
}

}  // namespace
}  // namespace vlab
