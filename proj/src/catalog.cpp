#include <cmath>
#include <numbers>
#include <stdexcept>

#include "dvp/summation.hpp"

namespace dvp {

namespace {

using cplx = std::complex<double>;
constexpr double kPi = std::numbers::pi;

double frac(double x) { return x - std::floor(x); }

FourierFunction square_wave() {
  // +1 on (0, 1/2), -1 on (1/2, 1); f^(k) = 2 / (pi i k) for odd k.
  return FourierFunction(
      "square",
      [](std::int64_t k) -> cplx {
        if (k % 2 == 0) return {};
        return 2.0 / cplx(0.0, kPi * static_cast<double>(k));
      },
      std::nullopt, true,
      [](double x) -> cplx {
        const double t = frac(x);
        if (t == 0.0 || t == 0.5) return 0.0;
        return t < 0.5 ? 1.0 : -1.0;
      });
}

FourierFunction sawtooth() {
  // x - 1/2 on (0, 1); f^(k) = i / (2 pi k), f^(0) = 0.
  return FourierFunction(
      "sawtooth",
      [](std::int64_t k) -> cplx {
        if (k == 0) return {};
        return cplx(0.0, 1.0 / (2.0 * kPi * static_cast<double>(k)));
      },
      std::nullopt, true,
      [](double x) -> cplx {
        const double t = frac(x);
        return t == 0.0 ? 0.0 : t - 0.5;
      });
}

FourierFunction trigpoly() {
  // 1 + cos 2 pi x - sin(4 pi x)/2 + cos(6 pi x)/4
  return FourierFunction(
      "trigpoly",
      [](std::int64_t k) -> cplx {
        switch (k) {
          case 0: return 1.0;
          case 1: case -1: return 0.5;
          case 2: return cplx(0.0, 0.25);
          case -2: return cplx(0.0, -0.25);
          case 3: case -3: return 0.125;
          default: return {};
        }
      },
      3, true,
      [](double x) -> cplx {
        return 1.0 + std::cos(2 * kPi * x) - 0.5 * std::sin(4 * kPi * x) + 0.25 * std::cos(6 * kPi * x);
      });
}

FourierFunction expcos() {
  // exp(cos 2 pi x) = sum_k I_|k|(1) e(kx); I_40(1) is below 1e-60.
  return FourierFunction(
      "expcos",
      [](std::int64_t k) -> cplx {
        return std::cyl_bessel_i(static_cast<double>(k < 0 ? -k : k), 1.0);
      },
      40, true, [](double x) -> cplx { return std::exp(std::cos(2 * kPi * x)); });
}

FourierFunction mode1() {
  return FourierFunction(
      "mode1", [](std::int64_t k) -> cplx { return k == 1 ? 1.0 : 0.0; }, 1, false,
      [](double x) -> cplx { return {std::cos(2 * kPi * x), std::sin(2 * kPi * x)}; });
}

FourierFunction vp12() {
  const KernelParams params = KernelParams::make(1, 2, 1);
  return FourierFunction(
      "vp12", [params](std::int64_t k) -> cplx { return coefficient(params, k); }, 1, true,
      [params](double x) -> cplx { return eval_vp(params, x); });
}

}  // namespace

std::vector<std::string> catalog_names() {
  return {"constant", "square", "sawtooth", "trigpoly", "expcos", "mode1", "vp12"};
}

FourierFunction catalog_function(std::string_view name) {
  if (name == "constant") {
    return FourierFunction(
        "constant", [](std::int64_t k) -> cplx { return k == 0 ? 1.0 : 0.0; }, 0, true,
        [](double) -> cplx { return 1.0; });
  }
  if (name == "square") return square_wave();
  if (name == "sawtooth") return sawtooth();
  if (name == "trigpoly") return trigpoly();
  if (name == "expcos") return expcos();
  if (name == "mode1") return mode1();
  if (name == "vp12") return vp12();
  throw std::invalid_argument("unknown catalog function '" + std::string(name) + "'");
}

}  // namespace dvp
