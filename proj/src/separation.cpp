#include "ramify/separation.hpp"

#include "ramify/error.hpp"

#include <algorithm>

namespace ramify {

Thresholds connectivity_threshold(const HullElement& gap, long p) {
  if (!is_prime(p)) throw InvalidArgument("p = " + std::to_string(p) + " is not prime");
  if (gap.sign() <= 0) throw InvalidArgument("the conjugate gap must be positive");
  const HullElement c = gap.scaled(Rational(p));
  Thresholds t{HullCut::principal(c), HullCut::open_above(c)};
  if (!subset(t.separated_at, t.connected_at) || t.separated_at == t.connected_at)
    throw InvariantViolation("separation threshold not below the connectivity threshold");
  return t;
}

HullCut st_bound(const std::vector<HullElement>& gaps, long n) {
  if (gaps.empty()) throw InvalidArgument("no gaps given");
  if (n < 2) throw InvalidArgument("degree must be >= 2");
  for (const auto& g : gaps) {
    if (g.group() != gaps.front().group()) throw DescriptorMismatch("gaps live in different groups");
    if (g.sign() <= 0) throw InvalidArgument("gaps must be positive");
  }
  const auto& least = *std::min_element(gaps.begin(), gaps.end());
  return HullCut::open_above(least.scaled(Rational(n)));
}

HullElement model_gap(const SigmaSpec& sigma, const FieldElement& s) {
  const FieldElement d = sigma_delta(sigma, s);
  if (d.is_zero()) throw InvalidArgument("s is fixed by sigma");
  return to_hull(d.valuation());
}

HullElement model_gap(const DefectModel& m, const FieldElement& s) { return model_gap(m.sigma, s); }

} // namespace ramify
