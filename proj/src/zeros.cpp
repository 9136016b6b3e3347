#include "dvp/zeros.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace dvp {

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

const char* zero_kind_name(ZeroKind kind) noexcept {
  switch (kind) {
    case ZeroKind::FirstFamily: return "first";
    case ZeroKind::SecondFamily: return "second";
    case ZeroKind::Coincident: return "coincident";
  }
  return "?";
}

std::int64_t ZeroSet::total_multiplicity() const noexcept {
  std::int64_t total = 0;
  for (const Zero& z : entries) total += z.multiplicity;
  return total;
}

std::size_t ZeroSet::double_zero_count() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(entries.begin(), entries.end(), [](const Zero& z) { return z.multiplicity == 2; }));
}

ZeroSet enumerate_zeros(const KernelParams& params) {
  const std::int64_t P = params.sum_freq();
  const std::int64_t Q = params.diff_freq();

  std::vector<Zero> first;
  first.reserve(static_cast<std::size_t>(P > 0 ? P - 1 : 0));
  for (std::int64_t a = 1; a < P; ++a) {
    first.push_back({Rational(a, P), ZeroKind::FirstFamily, 1, a, 0});
  }
  std::vector<Zero> second;
  second.reserve(static_cast<std::size_t>(Q > 0 ? Q - 1 : 0));
  for (std::int64_t b = 1; b < Q; ++b) {
    second.push_back({Rational(b, Q), ZeroKind::SecondFamily, 1, 0, b});
  }

  // Both families are already sorted; merge, fusing equal locations.
  ZeroSet out{params, {}};
  out.entries.reserve(first.size() + second.size());
  std::size_t i = 0, j = 0;
  while (i < first.size() || j < second.size()) {
    if (j == second.size() || (i < first.size() && first[i].location < second[j].location)) {
      out.entries.push_back(first[i++]);
    } else if (i == first.size() || second[j].location < first[i].location) {
      out.entries.push_back(second[j++]);
    } else {
      out.entries.push_back({first[i].location, ZeroKind::Coincident, 2, first[i].a, second[j].b});
      ++i;
      ++j;
    }
  }
  return out;
}

std::optional<Zero> find_zero(const ZeroSet& zeros, const Rational& location) {
  auto it = std::lower_bound(zeros.entries.begin(), zeros.entries.end(), location,
                             [](const Zero& z, const Rational& loc) { return z.location < loc; });
  if (it == zeros.entries.end() || it->location != location) return std::nullopt;
  return *it;
}

}  // namespace dvp
