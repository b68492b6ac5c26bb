#pragma once

// Monogenic separation thresholds. For L = K(s) cyclic of degree p with
// conjugate gap g = v(sigma(s) - s), X(S, T, I) is connected at I = (b^p)
// and separated at m_A-bar b^p, where v(b) = g. For general degree n,
// the ideal generated by a^n with |a| below every gap separates.

#include "ramify/defect_lab.hpp"

#include <vector>

namespace ramify {

struct Thresholds {
  HullCut connected_at;
  HullCut separated_at;
};

/// connected at Principal(p g), separated at OpenAbove(p g).
Thresholds connectivity_threshold(const HullElement& gap, long p);

/// OpenAbove(n * min gap).
HullCut st_bound(const std::vector<HullElement>& gaps, long n);

/// v(sigma(s) - s) for s in the model ring; throws on sigma-fixed s.
HullElement model_gap(const SigmaSpec& sigma, const FieldElement& s);
HullElement model_gap(const DefectModel& m, const FieldElement& s);

} // namespace ramify
