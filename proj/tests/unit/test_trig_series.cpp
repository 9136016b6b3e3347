#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "dvp/trig_series.hpp"

namespace dvp::simd {
namespace {

struct Direct {
  std::vector<double> cos_sum;
  std::vector<double> sin_sum;
};

Direct direct_sums(const std::vector<double>& c, const std::vector<double>& x) {
  Direct d{std::vector<double>(x.size()), std::vector<double>(x.size())};
  for (std::size_t i = 0; i < x.size(); ++i) {
    long double cs = 0.0L, sn = 0.0L;
    for (std::size_t k = 0; k < c.size(); ++k) {
      const long double ang = 2.0L * std::numbers::pi_v<long double> * static_cast<long double>(k) * x[i];
      cs += c[k] * std::cos(ang);
      sn += c[k] * std::sin(ang);
    }
    d.cos_sum[i] = static_cast<double>(cs);
    d.sin_sum[i] = static_cast<double>(sn);
  }
  return d;
}

double abs_sum(const std::vector<double>& c) {
  double a = 0.0;
  for (double v : c) a += std::abs(v);
  return a;
}

std::vector<Isa> available_isas() {
  std::vector<Isa> out;
  for (Isa isa : {Isa::Scalar, Isa::Avx2, Isa::Neon}) {
    if (isa_available(isa)) out.push_back(isa);
  }
  return out;
}

TEST(TrigSeries, DispatchReportsAUsableVariant) {
  EXPECT_TRUE(isa_available(Isa::Scalar));
  EXPECT_TRUE(isa_available(detected_isa()));
  EXPECT_TRUE(isa_available(active_isa()));
  EXPECT_EQ(isa_name(Isa::Avx2), "avx2");
  for (Isa isa : {Isa::Avx2, Isa::Neon}) {
    if (!isa_available(isa)) {
      std::vector<double> c{1.0}, x{0.1}, out(1);
      EXPECT_THROW(cos_sin_series(c, x, out, {}, isa), std::invalid_argument);
    }
  }
}

TEST(TrigSeries, ScalarMatchesDirectSummation) {
  std::mt19937_64 rng(101);
  std::uniform_real_distribution<double> uc(-1.0, 1.0), ux(-1.5, 1.5);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<double> c(1 + rng() % 200);
    for (double& v : c) v = uc(rng);
    std::vector<double> x(23);
    for (double& v : x) v = ux(rng);
    std::vector<double> cs(x.size()), sn(x.size());
    cos_sin_series(c, x, cs, sn, Isa::Scalar);
    const Direct d = direct_sums(c, x);
    const double scale = abs_sum(c);
    for (std::size_t i = 0; i < x.size(); ++i) {
      EXPECT_NEAR(cs[i], d.cos_sum[i], 1e-13 * scale);
      EXPECT_NEAR(sn[i], d.sin_sum[i], 1e-13 * scale);
    }
  }
}

TEST(TrigSeries, StableNearZeroAndHalf) {
  // The plain Clenshaw recurrence loses ~K^2 eps here; the Reinsch form must not.
  std::vector<double> c(400);
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = 1.0 / (1.0 + static_cast<double>(k));
  std::vector<double> x{0.0, 1e-9, -1e-9, 1e-6, 0.5, 0.5 - 1e-9, 0.5 + 1e-7, 1.0 - 1e-9};
  std::vector<double> cs(x.size()), sn(x.size());
  cos_sin_series(c, x, cs, sn, Isa::Scalar);
  const Direct d = direct_sums(c, x);
  for (std::size_t i = 0; i < x.size(); ++i) {
    EXPECT_NEAR(cs[i], d.cos_sum[i], 2e-13 * abs_sum(c)) << x[i];
    EXPECT_NEAR(sn[i], d.sin_sum[i], 2e-13 * abs_sum(c)) << x[i];
  }
}

TEST(TrigSeries, EmptyAndConstantSeries) {
  std::vector<double> x{0.1, 0.7, 0.3, 0.9, 0.2};
  std::vector<double> cs(x.size()), sn(x.size());
  for (Isa isa : available_isas()) {
    cos_sin_series(std::vector<double>{}, x, cs, sn, isa);
    for (std::size_t i = 0; i < x.size(); ++i) {
      EXPECT_EQ(cs[i], 0.0);
      EXPECT_EQ(sn[i], 0.0);
    }
    cos_sin_series(std::vector<double>{2.5}, x, cs, sn, isa);
    for (std::size_t i = 0; i < x.size(); ++i) {
      EXPECT_EQ(cs[i], 2.5);
      EXPECT_EQ(sn[i], 0.0);
    }
  }
}

TEST(TrigSeries, VariantsMatchScalarReference) {
  std::mt19937_64 rng(202);
  std::uniform_real_distribution<double> uc(-1.0, 1.0), ux(-0.5, 1.5);
  for (Isa isa : available_isas()) {
    for (std::size_t count = 0; count <= 37; ++count) {
      std::vector<double> c(1 + rng() % 257);
      for (double& v : c) v = uc(rng);
      std::vector<double> x(count);
      for (double& v : x) v = ux(rng);
      if (count > 3) {
        x[0] = 0.0;
        x[1] = 0.5;
        x[2] = 1e-9;
      }
      std::vector<double> cs_ref(count), sn_ref(count), cs(count), sn(count);
      cos_sin_series(c, x, cs_ref, sn_ref, Isa::Scalar);
      cos_sin_series(c, x, cs, sn, isa);
      const double tol = 1e-13 * abs_sum(c);
      for (std::size_t i = 0; i < count; ++i) {
        EXPECT_NEAR(cs[i], cs_ref[i], tol) << isa_name(isa) << " count=" << count << " i=" << i;
        EXPECT_NEAR(sn[i], sn_ref[i], tol) << isa_name(isa) << " count=" << count << " i=" << i;
      }
    }
  }
}

TEST(TrigSeries, SingleOutputRequests) {
  std::vector<double> c{0.5, -1.0, 0.25, 2.0};
  std::vector<double> x{0.1, 0.2, 0.3, 0.4, 0.6, 0.7, 0.8, 0.9, 0.95};
  std::vector<double> cs_all(x.size()), sn_all(x.size()), cs(x.size()), sn(x.size());
  for (Isa isa : available_isas()) {
    cos_sin_series(c, x, cs_all, sn_all, isa);
    cos_sin_series(c, x, cs, {}, isa);
    cos_sin_series(c, x, {}, sn, isa);
    EXPECT_EQ(cs, cs_all);
    EXPECT_EQ(sn, sn_all);
  }
  std::vector<double> wrong(3);
  EXPECT_THROW(cos_sin_series(c, x, wrong, {}), std::invalid_argument);
}

TEST(TrigSeries, SinglePointWrapper) {
  std::vector<double> c{1.0, 2.0, 3.0};
  const CosSin v = cos_sin_series(c, 0.125);
  const double t = 2.0 * std::numbers::pi * 0.125;
  EXPECT_NEAR(v.cos_sum, 1.0 + 2.0 * std::cos(t) + 3.0 * std::cos(2 * t), 1e-14);
  EXPECT_NEAR(v.sin_sum, 2.0 * std::sin(t) + 3.0 * std::sin(2 * t), 1e-14);
}

}  // namespace
}  // namespace dvp::simd
