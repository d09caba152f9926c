#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "support/oracles.hpp"
#include "vlab/dirichlet.hpp"
#include "vlab/grid.hpp"
#include "vlab/means.hpp"
#include "vlab/rng.hpp"
#include "vlab/transform.hpp"

namespace vlab {
namespace {

double max_abs(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  EXPECT_EQ(a.size(), b.size());
  double gap = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) gap = std::max(gap, std::abs(a[i] - b[i]));
  return gap;
}

TEST(Transform, ForwardMatchesDoubleSumOracle) {
  for (const Basis& b : {build_basis({2, 3, 2, 4, 2, 3}, 6), build_basis({2}, 6)}) {
    const GridFunction f = random_complex_grid(b, 42);
    const SpectralFunction fast = vft_forward(f);
    EXPECT_LE(max_abs(fast.coeffs, oracle::forward(f)), 1e-12) << b.label();
  }
}

TEST(Transform, NaiveMatchesFast) {
  for (const Basis& b : {build_basis({3, 4}, 4), build_basis({2}, 8)}) {
    const GridFunction f = random_complex_grid(b, 7);
    EXPECT_LE(max_abs(vft_forward(f).coeffs, vft_forward_naive(f).coeffs), 1e-12);
  }
}

TEST(Transform, RoundTripAndParseval) {
  const Basis b = build_basis({2, 3, 2, 4, 2, 3}, 6);
  const GridFunction f = random_complex_grid(b, 5);
  const SpectralFunction c = vft_forward(f);
  const GridFunction back = vft_inverse(c);
  EXPECT_LE(max_abs(f.values, back.values), 1e-12);

  double space = 0.0, freq = 0.0;
  for (const Complex& v : f.values) space += std::norm(v);
  space /= static_cast<double>(b.size());
  for (const Complex& v : c.coeffs) freq += std::norm(v);
  EXPECT_NEAR(space, freq, 1e-12 * space);
}

TEST(Transform, PointMassAndSingleCharacter) {
  const Basis b = build_basis({2, 3, 5}, 3);
  GridFunction delta(b);
  delta.values[0] = 1.0;
  const SpectralFunction dc = vft_forward(delta);
  for (const Complex& v : dc.coeffs) {
    EXPECT_NEAR(std::abs(v - Complex(1.0 / static_cast<double>(b.size()))), 0.0, 1e-14);
  }

  const long long j = 17;
  GridFunction psi(b, character_row(b, j));
  const SpectralFunction pc = vft_forward(psi);
  for (long long n = 0; n < b.size(); ++n) {
    const double want = n == j ? 1.0 : 0.0;
    EXPECT_NEAR(std::abs(pc.coeffs[static_cast<std::size_t>(n)]), want, 1e-12);
  }
}

TEST(Transform, TranslationTwistsCoefficients) {
  const Basis b = build_basis({3, 2, 4}, 3);
  const GridFunction f = random_complex_grid(b, 9);
  const long long shift = 13;
  GridFunction g(b);
  for (long long t = 0; t < b.size(); ++t) {
    g.values[static_cast<std::size_t>(t)] =
        f.values[static_cast<std::size_t>(sub_index(b, t, shift))];
  }
  const SpectralFunction cf = vft_forward(f);
  const SpectralFunction cg = vft_forward(g);
  for (long long n = 0; n < b.size(); ++n) {
    const Complex want = cf.coeffs[static_cast<std::size_t>(n)] *
                         std::conj(character_at(b, n, shift));
    EXPECT_NEAR(std::abs(cg.coeffs[static_cast<std::size_t>(n)] - want), 0.0, 1e-12);
  }
}

TEST(Transform, ConvolutionDiagonalizes) {
  const Basis b = build_basis({2, 3, 2}, 3);
  const GridFunction f = random_complex_grid(b, 3);
  const GridFunction g = random_complex_grid(b, 4);
  const GridFunction h = convolve(f, g);

  // Direct Haar-normalized convolution sum.
  GridFunction want(b);
  for (long long x = 0; x < b.size(); ++x) {
    Complex acc = 0.0;
    for (long long t = 0; t < b.size(); ++t) {
      acc += f.values[static_cast<std::size_t>(t)] *
             g.values[static_cast<std::size_t>(sub_index(b, x, t))];
    }
    want.values[static_cast<std::size_t>(x)] = acc / static_cast<double>(b.size());
  }
  EXPECT_LE(max_abs(h.values, want.values), 1e-12);

  const SpectralFunction ch = vft_forward(h);
  const SpectralFunction cf = vft_forward(f);
  const SpectralFunction cg = vft_forward(g);
  for (std::size_t n = 0; n < ch.coeffs.size(); ++n) {
    EXPECT_NEAR(std::abs(ch.coeffs[n] - cf.coeffs[n] * cg.coeffs[n]), 0.0, 1e-12);
  }
}

TEST(Dirichlet, GeneralizedPowerOrdersAreScaledIndicators) {
  for (const Basis& b : {build_basis({2, 3, 2, 4}, 4), build_basis({2}, 7)}) {
    for (int n = 0; n <= b.depth(); ++n) {
      const long long mn = b.Mk[static_cast<std::size_t>(n)];
      const GridFunction d = dirichlet_dense(b, mn);
      for (long long t = 0; t < b.size(); ++t) {
        const double want = t % mn == 0 ? static_cast<double>(mn) : 0.0;
        ASSERT_NEAR(std::abs(d.values[static_cast<std::size_t>(t)] - want), 0.0, 1e-9)
            << b.label() << " n=" << n << " t=" << t;
      }
    }
  }
}

TEST(Dirichlet, DenseMatchesCharacterSums) {
  const Basis b = build_basis({2, 3, 2, 4}, 4);
  for (const long long n : {0LL, 1LL, 2LL, 5LL, 11LL, 12LL, 13LL, 31LL, 47LL, 48LL}) {
    const GridFunction d = dirichlet_dense(b, n);
    for (long long t = 0; t < b.size(); ++t) {
      Complex acc = 0.0;
      for (long long k = 0; k < n; ++k) acc += oracle::character(b, k, t);
      ASSERT_NEAR(std::abs(d.values[static_cast<std::size_t>(t)] - acc), 0.0, 1e-11)
          << "n=" << n << " t=" << t;
    }
  }
}

TEST(Dirichlet, ClosedFormEvaluationMatchesDense) {
  const Basis b = build_basis({3, 2, 5, 2}, 4);
  for (long long n = 0; n <= b.size(); ++n) {
    const GridFunction d = dirichlet_dense(b, n);
    for (long long t = 0; t < b.size(); ++t) {
      const Point x = index_to_digits(b, t);
      const Complex got = dirichlet_eval(b, n, x);
      ASSERT_NEAR(std::abs(got - d.values[static_cast<std::size_t>(t)]), 0.0, 1e-10)
          << "n=" << n << " t=" << t;
      const Complex big = dirichlet_eval(b, mpz_class(static_cast<long>(n)), x);
      ASSERT_NEAR(std::abs(big - got), 0.0, 1e-13);
    }
  }
}

TEST(Dirichlet, FejerKernelAveragesTheFamily) {
  const Basis b = build_basis({2, 3, 2}, 3);
  for (const long long j : {1LL, 2LL, 5LL, 11LL, 12LL}) {
    const GridFunction k = fejer_kernel_dense(b, j);
    GridFunction want(b);
    for (long long i = 1; i <= j; ++i) {
      const GridFunction d = dirichlet_dense(b, i);
      for (std::size_t t = 0; t < want.values.size(); ++t) want.values[t] += d.values[t];
    }
    for (Complex& v : want.values) v /= static_cast<double>(j);
    EXPECT_LE(max_abs(k.values, want.values), 1e-11) << "j=" << j;
  }
}

TEST(Rng, DeterministicAndDecorrelated) {
  const Basis b = build_basis({2, 3}, 4);
  const GridFunction a = random_complex_grid(b, 77);
  const GridFunction c = random_complex_grid(b, 77);
  EXPECT_EQ(a.values, c.values);
  const GridFunction d = random_complex_grid(b, 78);
  EXPECT_GT(max_abs(a.values, d.values), 1e-3);

  for (const Complex& v : a.values) {
    EXPECT_GE(v.real(), -1.0);
    EXPECT_LT(v.real(), 1.0);
    EXPECT_GE(v.imag(), -1.0);
    EXPECT_LT(v.imag(), 1.0);
  }

  const SpectralFunction s = random_spectrum_below(b, 5, 9);
  for (long long n = 0; n < b.size(); ++n) {
    if (n >= 5) EXPECT_EQ(s.coeffs[static_cast<std::size_t>(n)], Complex(0.0));
  }

  SplitMix64 g1(123), g2(123);
  const Point p1 = random_point(b, g1);
  const Point p2 = random_point(b, g2);
  EXPECT_EQ(p1.digits, p2.digits);
  for (int k = 0; k < b.depth(); ++k) {
    EXPECT_GE(p1.digits[static_cast<std::size_t>(k)], 0);
    EXPECT_LT(p1.digits[static_cast<std::size_t>(k)], b.m[static_cast<std::size_t>(k)]);
  }
}

}  // namespace
}  // namespace vlab
