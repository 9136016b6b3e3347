#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "dvp/summation.hpp"
#include "test_support.hpp"

namespace dvp {
namespace {

using cplx = std::complex<double>;

// Random real trig polynomial of the given degree, coefficients listed k = -deg..deg.
FourierFunction random_real_poly(std::mt19937_64& rng, std::int64_t deg) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<cplx> c(static_cast<std::size_t>(2 * deg + 1));
  c[deg] = u(rng);
  for (std::int64_t k = 1; k <= deg; ++k) {
    c[deg + k] = cplx(u(rng), u(rng));
    c[deg - k] = std::conj(c[deg + k]);
  }
  return FourierFunction::from_coefficients("poly", std::move(c), true);
}

FourierFunction random_complex_poly(std::mt19937_64& rng, std::int64_t deg) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<cplx> c(static_cast<std::size_t>(2 * deg + 1));
  for (cplx& v : c) v = cplx(u(rng), u(rng));
  return FourierFunction::from_coefficients("cpoly", std::move(c), false);
}

cplx direct_eval(const FourierFunction& f, std::int64_t K, double x) {
  cplx acc{};
  for (std::int64_t k = -K; k <= K; ++k) {
    acc += f.coeff(k) * std::polar(1.0, 2.0 * testing::kPi * static_cast<double>(k) * x);
  }
  return acc;
}

TEST(PartialSum, ConstantFunction) {
  const FourierFunction f = catalog_function("constant");
  for (std::int64_t n : {0, 1, 7}) {
    for (double x : {0.0, 0.3, 0.91}) {
      EXPECT_NEAR(std::abs(partial_sum(f, n, x) - 1.0), 0.0, 1e-15);
    }
  }
}

TEST(PartialSum, ClassicalKernelCoefficients) {
  const FourierFunction f = catalog_function("vp12");
  for (double x : {0.0, 0.1, 0.25, 0.4, 0.8}) {
    EXPECT_NEAR(real_value(f, partial_sum(f, 1, x)), 1.0 + 2.0 * std::cos(2 * testing::kPi * x), 1e-14);
  }
}

TEST(PartialSum, SquareWaveMatchesTermByTerm) {
  const FourierFunction f = catalog_function("square");
  const cplx got = partial_sum(f, 5, 0.25);
  const cplx want = direct_eval(f, 5, 0.25);
  EXPECT_NEAR(std::abs(got - want), 0.0, 1e-14);
  // 4/pi (1 - 1/3 + 1/5)
  EXPECT_NEAR(got.real(), 4.0 / testing::kPi * (1.0 - 1.0 / 3.0 + 1.0 / 5.0), 1e-14);
}

TEST(PartialSum, ComplexFunctionsBatch) {
  std::mt19937_64 rng(51);
  const FourierFunction f = random_complex_poly(rng, 9);
  std::vector<double> xs;
  for (int i = 0; i < 19; ++i) xs.push_back(i / 19.0 - 0.3);
  const auto batch = partial_sum(f, 6, xs);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    EXPECT_NEAR(std::abs(batch[i] - direct_eval(f, 6, xs[i])), 0.0, 1e-13);
  }
}

TEST(FejerMean, Examples) {
  const FourierFunction c = catalog_function("constant");
  EXPECT_NEAR(std::abs(fejer_mean(c, 4, 0.2) - 1.0), 0.0, 1e-15);
  const FourierFunction e = catalog_function("mode1");
  for (double x : {0.1, 0.6}) {
    const cplx want = 0.5 * e.evaluate(x);
    EXPECT_NEAR(std::abs(fejer_mean(e, 1, x) - want), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(fejer_mean_cesaro(e, 1, x) - want), 0.0, 1e-15);
  }
}

TEST(FejerMean, ConvergesForSmoothFunction) {
  const FourierFunction f = catalog_function("expcos");
  double prev_err = 1e9;
  for (std::int64_t n : {4, 16, 64, 256}) {
    const double err = std::abs(fejer_mean(f, n, 0.3) - f.evaluate(0.3));
    EXPECT_LT(err, prev_err);
    prev_err = err;
  }
  EXPECT_LT(prev_err, 5e-3);
}

TEST(FejerMean, MultiplierAndAverageAgree) {
  std::mt19937_64 rng(53);
  std::uniform_real_distribution<double> ux(0.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    const FourierFunction f = trial % 2 ? random_real_poly(rng, 1 + rng() % 30)
                                        : random_complex_poly(rng, 1 + rng() % 30);
    const std::int64_t n = static_cast<std::int64_t>(rng() % 40);
    const double x = ux(rng);
    EXPECT_NEAR(std::abs(fejer_mean(f, n, x) - fejer_mean_cesaro(f, n, x)), 0.0, 1e-12);
  }
}

TEST(DelayedMean, ReproducesLowDegreePolynomials) {
  std::mt19937_64 rng(57);
  std::uniform_real_distribution<double> ux(0.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    const std::int64_t deg = static_cast<std::int64_t>(rng() % 20);
    const FourierFunction f = random_real_poly(rng, deg);
    const std::int64_t n = deg + static_cast<std::int64_t>(rng() % 5);
    const std::int64_t p = 1 + static_cast<std::int64_t>(rng() % 10);
    const double x = ux(rng);
    EXPECT_NEAR(std::abs(delayed_mean(f, n, p, x) - direct_eval(f, deg, x)), 0.0, 1e-12);
  }
}

TEST(DelayedMean, AnnihilatesHighModes) {
  for (std::int64_t n : {0, 2, 5}) {
    for (std::int64_t p : {1, 3}) {
      const FourierFunction f(
          "high", [n, p](std::int64_t k) -> cplx { return k == n + p ? 1.0 : 0.0; }, n + p, false);
      EXPECT_NEAR(std::abs(delayed_mean(f, n, p, 0.37)), 0.0, 1e-15);
    }
  }
}

TEST(DelayedMean, ThreeFormsAgree) {
  std::mt19937_64 rng(59);
  std::uniform_real_distribution<double> ux(0.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    const FourierFunction f = trial % 3 == 0 ? random_complex_poly(rng, 1 + rng() % 40)
                                             : random_real_poly(rng, 1 + rng() % 40);
    const std::int64_t n = static_cast<std::int64_t>(rng() % 25);
    const std::int64_t p = 1 + static_cast<std::int64_t>(rng() % 25);
    const double x = ux(rng);
    const cplx m = delayed_mean(f, n, p, x);
    EXPECT_NEAR(std::abs(m - delayed_mean_fejer_combination(f, n, p, x)), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(m - delayed_mean_partial_average(f, n, p, x)), 0.0, 1e-12);
  }
}

TEST(DelayedMean, UnitCoefficientsGiveTheKernel) {
  std::mt19937_64 rng(61);
  std::uniform_real_distribution<double> ux(0.0, 1.0);
  for (int trial = 0; trial < 40; ++trial) {
    const KernelParams params = testing::random_params(rng, 40);
    const FourierFunction dirac("dirac", [](std::int64_t) -> cplx { return 1.0; }, params.sN() + 3, true);
    const double x = ux(rng);
    EXPECT_NEAR(real_value(dirac, delayed_mean(dirac, params.n(), params.p(), x)), eval_vp(params, x), 1e-11);
  }
}

TEST(DelayedMean, EqualsConvolutionWithKernel) {
  const FourierFunction f = catalog_function("expcos");
  for (std::int64_t N : {1, 3, 6}) {
    const KernelParams params = make_params(1, 2, N);
    for (double x : {0.0, 0.21, 0.5, 0.83}) {
      // Periodic trapezoid: exact here up to the (negligible) tail of f.
      const double conv = testing::periodic_trapezoid(
          [&](double u) { return f.evaluate(x - u).real() * eval_vp(params, u); }, 256);
      EXPECT_NEAR(real_value(f, delayed_mean(f, N, N, x)), conv, 1e-6);
    }
  }
}

TEST(DelayedMean, InvalidArguments) {
  const FourierFunction f = catalog_function("constant");
  EXPECT_THROW(delayed_mean(f, -1, 1, 0.0), std::invalid_argument);
  EXPECT_THROW(delayed_mean(f, 1, 0, 0.0), std::invalid_argument);
  EXPECT_THROW(partial_sum(f, -1, 0.0), std::invalid_argument);
}

TEST(FourierFunction, HermitianCheck) {
  EXPECT_THROW(FourierFunction("bad", [](std::int64_t k) -> cplx { return k == 1 ? 1.0 : 0.0; }, 2, true),
               std::invalid_argument);
  EXPECT_THROW(FourierFunction::from_coefficients("even", {1.0, 2.0}, true), std::invalid_argument);
  const FourierFunction noeval("noeval", [](std::int64_t) -> cplx { return 0.0; }, 0, true);
  EXPECT_THROW(noeval.evaluate(0.1), std::logic_error);
}

TEST(FourierFunction, RealValueRejectsImaginaryResidue) {
  const FourierFunction f = catalog_function("square");
  EXPECT_THROW(real_value(f, cplx(1.0, 1e-3)), ConsistencyError);
  EXPECT_DOUBLE_EQ(real_value(f, cplx(1.0, 1e-15)), 1.0);
}

TEST(Catalog, CoefficientsMatchEvaluators) {
  for (const std::string& name : catalog_names()) {
    const FourierFunction f = catalog_function(name);
    ASSERT_TRUE(f.has_evaluator()) << name;
    // Numerical coefficients by a fine midpoint rule (jumps make this O(1/M)).
    const int M = 20000;
    for (std::int64_t k = -3; k <= 3; ++k) {
      cplx acc{};
      for (int i = 0; i < M; ++i) {
        const double x = (i + 0.5) / M;
        acc += f.evaluate(x) * std::polar(1.0, -2.0 * testing::kPi * static_cast<double>(k) * x);
      }
      EXPECT_NEAR(std::abs(acc / static_cast<double>(M) - f.coeff(k)), 0.0, 1e-4) << name << " k=" << k;
    }
  }
  EXPECT_THROW(catalog_function("nope"), std::invalid_argument);
}

TEST(ApproximateIdentity, TailMassesDecrease) {
  const std::vector<std::int64_t> Ns{1, 2, 4, 8, 16, 32};
  const auto report = approximate_identity_report(make_params(1, 2, 1), 0.1, Ns);
  ASSERT_EQ(report.size(), Ns.size());
  for (std::size_t i = 1; i < report.size(); ++i) EXPECT_LT(report[i].tail, report[i - 1].tail);
  EXPECT_LT(report.back().tail, 0.05);
  for (const TailMass& t : report) {
    EXPECT_LE(t.full, 3.0 + 1e-9);
    EXPECT_NEAR(t.full, testing::lebesgue_L1(), 1e-8);
  }
}

TEST(ApproximateIdentity, FejerWindowBound) {
  const std::vector<std::int64_t> Ns{16};
  const auto report = approximate_identity_report(make_params(0, 1, 1), 0.25, Ns);
  EXPECT_LE(report[0].tail, 1.0 / (16.0 * 0.5));
}

TEST(ApproximateIdentity, UniformNormBound) {
  for (auto [r, s] : testing::coprime_pairs(6)) {
    const std::vector<std::int64_t> Ns{1, 3, 9};
    for (const TailMass& t : approximate_identity_report(make_params(r, s, 1), 0.2, Ns)) {
      EXPECT_LE(t.full, make_params(r, s, 1).norm_upper_bound() + 1e-9);
      EXPECT_LE(t.tail, t.full);
    }
  }
  const std::vector<std::int64_t> one{1};
  EXPECT_THROW(approximate_identity_report(make_params(1, 2, 1), 0.5, one), std::invalid_argument);
  EXPECT_THROW(approximate_identity_report(make_params(1, 2, 1), 0.0, one), std::invalid_argument);
}

}  // namespace
}  // namespace dvp
