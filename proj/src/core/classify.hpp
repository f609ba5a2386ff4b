#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "core/num.hpp"

namespace ts {

enum class VerdictStatus {
  kIrreducibleGuaranteed,  // the reduction is irreducible, no list needed
  kCandidateSet,           // reduction pinned down to the listed candidates
  kOutOfTheoremRange,      // hypotheses not satisfied; no verdict
};

const char* verdict_status_name(VerdictStatus s);

struct Verdict {
  VerdictStatus status = VerdictStatus::kOutOfTheoremRange;
  // Semisimple reductions rendered as strings: induced characters as
  // "Ind(w2^{k})", reducible sums as "mu_{a} w^{i} + mu_{b} w^{j}" where w is
  // the cyclotomic character mod p and mu_{a} the unramified character with
  // value a.
  std::vector<std::string> candidates;
  std::string theorem_tag;
  // The hypotheses that were checked, in order, with their outcomes.
  std::vector<std::pair<std::string, std::string>> conditions;
};

// Slope exactly one, a_p = p * (unit); a_unit is that unit mod p. Splits on
// whether p divides r - s. Weights with s in {1, 3} are out of range here.
Verdict classify_slope_one(long p, long r, long a_unit);

// For even r with slope in (3, 4): irreducibility is guaranteed when r avoids
// nine residue classes mod p(p-1). Reports the matched class otherwise.
Verdict check_weight_congruences(long p, long r);

// For even r and non-integral slope with floor v_floor: two families of
// rising-factorial conditions on r - s, split on whether s lies in
// {2, ..., 2*v_floor}, plus an unconditional low-floor clause.
Verdict classify_higher_slope(long p, long r, long v_floor);

// First applicable clause across the classification: low slope floors 1 and 2,
// the nine-class check at floor 3, then the two higher-slope families.
Verdict classification_summary(long p, long r, long v_floor);

// Annotations for the handful of small weights settled by hand.
std::optional<std::string> small_case_note(long p, long r);

}  // namespace ts
