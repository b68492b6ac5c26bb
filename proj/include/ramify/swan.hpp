#pragma once

// Ramification invariants of a cyclic extension L/K of degree p: the Swan
// ideal H (as a cut), the refined Swan conductor in formal dlog form, the
// defect flag, and predictions for the ramification index and the residue
// extension. Also the evaluator for the image of G_log^I in Gal(L/K).

#include "ramify/cuts.hpp"
#include "ramify/series.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace ramify {

enum class CaseTag { I, II, III, IV, V };
std::string to_string(CaseTag c);
CaseTag parse_case(const std::string& s);

enum class ResiduePrediction {
  Trivial,
  PurelyInseparableP,
  /// Separable residue extension of degree p (unramified case).
  SeparableDegreeP,
};
std::string to_string(ResiduePrediction r);

/// One summand b * dlog(a) of the refined Swan conductor. ValueClass
/// arguments map to b (x) class(gamma) in k (x) Gamma; units map to zero.
struct DlogTerm {
  enum class Kind { ValueClass, UnitSymbol };
  Kind kind;
  long coefficient = 1; // in F_p
  std::optional<GroupElement> value;
  std::string unit;

  static DlogTerm value_class(const GroupElement& gamma, long coefficient = 1);
  static DlogTerm unit_symbol(std::string name, long coefficient = 1);
};

struct RswSymbol {
  long p;
  /// Valuation of a generator of H.
  GroupElement conductor_generator;
  std::vector<DlogTerm> dlog_terms;
};

struct GammaTerm {
  long coefficient;
  GroupElement value;
  friend bool operator==(const GammaTerm&, const GammaTerm&) = default;
};

/// Image of the symbol in k (x) Gamma = k (x)_{F_p} Gamma/p*Gamma. Classes in
/// p*Gamma and unit terms vanish, congruent classes merge, and a vanishing
/// total gives the empty list.
std::vector<GammaTerm> gamma_image(const RswSymbol& r);

/// Known ideal of a defect model built by the defect lab; the only accepted
/// source of a defect classification.
struct DefectProvenance {
  long p;
  Cut H;
  int depth;
};

struct SwanData {
  long p;
  Cut H;
  std::optional<RswSymbol> rsw;
  bool defect = false;
  long e_pred = 1;
  ResiduePrediction residue = ResiduePrediction::Trivial;
  bool unramified = false;
  std::string case_label;

  /// Checks the structural invariants; throws InvariantViolation.
  void check() const;
};

struct EqualCharAS {
  long p;
  FieldElement f;
  std::vector<std::string> names; // variable names for unit symbols
  std::optional<DefectProvenance> provenance;
};

struct EqualCharSymbolic {
  long p;
  CaseTag tag;               // I, II or III
  std::optional<GroupElement> c; // -v(f), required for I and II
};

struct MixedKummerSymbolic {
  long p;
  CaseTag tag;
  GroupElement e0;                // v(zeta_p - 1)
  std::optional<GroupElement> vb; // cases III, IV
  std::optional<GroupElement> va; // case I
};

using ExtensionDescriptor = std::variant<EqualCharAS, EqualCharSymbolic, MixedKummerSymbolic>;

struct AsReduction {
  FieldElement f;
  bool exhausted;
  int iterations;
  /// Detected normal form when not exhausted.
  CaseTag tag;
};

constexpr int kDefaultMaxIters = 64;

/// Artin-Schreier substitution f -> f - (g^p - g), g = r t^w, applied while
/// v(f) = p w < 0 and the leading coefficient is r^p.
AsReduction as_reduce(const FieldElement& f, long p, int max_iters = kDefaultMaxIters);

SwanData classify_equal_char(const EqualCharAS& d, int max_iters = kDefaultMaxIters);
SwanData classify_equal_char(const EqualCharSymbolic& d, const GroupDescriptor& g);
SwanData classify_mixed_symbolic(const MixedKummerSymbolic& d);
SwanData classify(const ExtensionDescriptor& d, const GroupDescriptor& g);

enum class ImageResult { Full, Trivial };
std::string to_string(ImageResult r);

/// Image of G_log^I in Gal(L/K): Full iff H is contained in I ∩ A.
ImageResult theorem1_eval(const Cut& H, const HullCut& I);

/// Minimal ideal of A-bar with full image.
HullCut break_of(const Cut& H);

bool wild_inertia_check(const SwanData& s);

Cut base_change_H(const Cut& H, const GroupEmbedding& e);
HullCut base_change(const HullCut& I, const GroupEmbedding& e);

struct Type2Move {
  long e;
  GroupElement target;
};

std::vector<Type2Move> plan_log_smooth(const RswSymbol& r, const GroupDescriptor& g);
/// Value-group enlargement realizing the moves.
GroupEmbedding apply_moves(const GroupDescriptor& g, long p, const std::vector<Type2Move>& moves);
RswSymbol transport(const RswSymbol& r, const GroupEmbedding& e);

/// key: value lines under a [swan] header.
std::string serialize(const SwanData& s);

} // namespace ramify
