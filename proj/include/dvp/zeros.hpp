#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "dvp/kernels.hpp"

namespace dvp {

/// Reduced fraction num/den with den > 0. Zero locations are compared exactly.
class Rational {
 public:
  Rational(std::int64_t num, std::int64_t den);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }
  double to_double() const noexcept {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const std::int64_t lhs = a.num_ * b.den_;  // both factors stay below 2^26
    const std::int64_t rhs = b.num_ * a.den_;
    return lhs <=> rhs;
  }

 private:
  std::int64_t num_;
  std::int64_t den_;
};

enum class ZeroKind {
  FirstFamily,   // a/((s+r)N), a zero of sin pi(s+r)Nx only
  SecondFamily,  // b/((s-r)N), a zero of sin pi(s-r)Nx only
  Coincident,    // both factors vanish: a double zero
};

const char* zero_kind_name(ZeroKind kind) noexcept;

struct Zero {
  Rational location;
  ZeroKind kind;
  int multiplicity;  // 1 or 2
  std::int64_t a;    // first-family index, 0 when not a first-family point
  std::int64_t b;    // second-family index, 0 when not a second-family point

  friend bool operator==(const Zero&, const Zero&) = default;
};

struct ZeroSet {
  KernelParams params;
  std::vector<Zero> entries;  // strictly increasing locations in (0, 1)

  std::int64_t total_multiplicity() const noexcept;
  std::size_t double_zero_count() const noexcept;
};

/// All zeros of V_{rN,sN} in (0, 1). Empty for the constant kernel (sN = 1).
ZeroSet enumerate_zeros(const KernelParams& params);

/// Looks a location up in the zero set; nullopt when V does not vanish there.
std::optional<Zero> find_zero(const ZeroSet& zeros, const Rational& location);

}  // namespace dvp
