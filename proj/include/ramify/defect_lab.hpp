#pragma once

// Explicit degree-p extensions with a prescribed Swan ideal: the
// minimal-element constructions (f = t^-c or u t^-c) and defect models
// over group-ring series fields, where sigma(x_d) = x_d + t^d for a
// cofinal sequence d = e(0) > e(1) > ... in D = {gamma | p gamma in C}.

#include "ramify/swan.hpp"

#include <random>
#include <string>
#include <vector>

namespace ramify {

/// f = t^-c when c is not in p*Gamma, else f = u t^-c with u a fresh
/// residue variable.
EqualCharAS construct_min_case(const GroupDescriptor& g, long p, const GroupElement& c);
/// Always the u t^-c form; requires c in p*Gamma.
EqualCharAS construct_min_case_unit(const GroupDescriptor& g, long p, const GroupElement& c);

struct DefectModel {
  GroupDescriptor group;
  long p;
  Cut C;
  Cut D;
  int depth;
  std::vector<GroupElement> e_seq; // e(0) > ... > e(depth), all in D
  CoeffField coeff;                // variable i is x[e(i)]
  SigmaSpec sigma;

  DefectProvenance provenance() const { return {p, C, depth}; }
  /// Artin-Schreier datum alpha^p - alpha for alpha = x_{e(0)} t^{-e(0)}.
  EqualCharAS descriptor() const;
  SwanData swan() const;
};

constexpr int kDefaultDepth = 4;

/// The i-th grid point for a bound beta of D, see the decisions ledger.
std::vector<GroupElement> grid_sequence(const Cut& D, long p, int depth);

/// Requires condition (a), no minimum and depth >= 1. Dense groups and
/// IntLex frontier cuts are accepted.
DefectModel construct_defect_model(const GroupDescriptor& g, long p, const Cut& C,
                                   int depth = kDefaultDepth);

struct Claim2Report {
  int samples = 0;
  int vacuous = 0;           // sigma-fixed samples
  int divisibility_failures = 0;
  int valuation_failures = 0;
  int failures() const { return divisibility_failures + valuation_failures; }
};

/// Small random element of Gamma_{>=0}.
GroupElement random_nonnegative(const GroupDescriptor& g, std::mt19937_64& rng);

/// Random element of the model ring: finite sums of monomials in the
/// x[e(i)] times t^gamma with gamma >= 0.
SeriesElement sample_model_element(const DefectModel& m, std::mt19937_64& rng);

struct Claim2Check {
  bool vacuous;
  bool divisible; // sigma(f) - f = t^{e(i)} q with q in the ring
  bool valuation; // v(sigma(f) - f) >= v(f) + e(i), i largest index occurring
};
Claim2Check check_claim2(const DefectModel& m, const SeriesElement& f);
Claim2Report verify_claim2(const DefectModel& m, int samples, std::mt19937_64& rng);

struct HLimitQuery {
  GroupElement gamma;
  bool member;                  // gamma in C
  std::optional<int> witness;   // least i with gamma >= p e(i)
};
std::vector<HLimitQuery> h_limit_queries(const DefectModel& m,
                                         const std::vector<GroupElement>& queries);
/// Non-members of C (rejection sampled) and members p e(i) + gamma, about
/// half each.
std::vector<GroupElement> sample_h_queries(const DefectModel& m, int count, std::mt19937_64& rng);
/// Members are witnessed by some p e(i) and non-members by none.
bool h_limit_check(const DefectModel& m, const std::vector<GroupElement>& queries);

/// One step f_i -> f_{i+1} = f_i - (h^p - h) with h = alpha_i - alpha_{i+1}
/// sigma-fixed, alpha_i = x_{e(i)} t^{-e(i)}.
struct ReductionStep {
  int index;
  GroupElement valuation; // v(f_i) = -p e(i)
  bool h_sigma_fixed;
  bool relation_holds;
};
/// Reduction inside the sigma-fixed field never reaches a normal form:
/// every step raises v(f) by p (e(i) - e(i+1)) and stays below 0.
std::vector<ReductionStep> fixed_field_reduction(const DefectModel& m);

struct Br10Pair {
  SwanData L1;
  SwanData L2;
};
/// L1: beta^p - beta = u b^-p with H = Principal(p b); L2: defect model
/// with H = OpenAbove(p b).
Br10Pair br10_pair(const GroupDescriptor& g, long p, const GroupElement& b_val,
                   int depth = kDefaultDepth);

enum class Se4Variant { Closed, OpenInGroup, OpenIrrational };
std::string to_string(Se4Variant v);
Se4Variant parse_se4_variant(const std::string& s);

/// Extension whose Swan ideal is {x >= a} (closed) or {x > a}.
SwanData se4_witness(const GroupDescriptor& g, long p, const AmbientPoint& a, Se4Variant v,
                     int depth = kDefaultDepth);

} // namespace ramify
