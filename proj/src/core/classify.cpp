#include "core/classify.hpp"

#include "core/sums.hpp"

namespace ts {

namespace {

void require_odd_prime(long p) {
  if (p < 3 || !is_prime(Int(p))) throw UsageError("classify: p must be an odd prime");
}

std::string num(long v) { return std::to_string(v); }

// true iff p divides none of (r-s), (r-s)+1, ..., (r-s)+n-1
bool rising_factorial_unit(long p, long r, long s, long n) {
  for (long i = 0; i < n; ++i)
    if ((r - s + i) % p == 0) return false;
  return true;
}

std::string induced_label(long exponent) {
  return "Ind(w2^{" + num(exponent) + "})";
}

void push(Verdict& v, const std::string& name, const std::string& value) {
  v.conditions.emplace_back(name, value);
}

}  // namespace

const char* verdict_status_name(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::kIrreducibleGuaranteed: return "IRREDUCIBLE_GUARANTEED";
    case VerdictStatus::kCandidateSet: return "CANDIDATE_SET";
    case VerdictStatus::kOutOfTheoremRange: return "OUT_OF_THEOREM_RANGE";
  }
  return "UNKNOWN";
}

Verdict classify_slope_one(long p, long r, long a_unit) {
  require_odd_prime(p);
  if (a_unit % p == 0) throw UsageError("classify: a_unit must be a unit mod p");
  Decomposition d = decompose(p, r);
  if (d.t < 1) throw UsageError("classify: slope-one case needs r > p - 1");

  Verdict v;
  v.theorem_tag = "slope-one-classification";
  push(v, "s", num(d.s));
  push(v, "t", num(d.t));

  if (d.s == 1 || d.s == 3) {
    push(v, "s outside {1, 3}", "no");
    v.status = VerdictStatus::kOutOfTheoremRange;
    return v;
  }
  push(v, "s outside {1, 3}", "yes");

  long rs = mod_reduce(r - d.s, p);
  push(v, "(r - s) mod p", num(rs));
  v.status = VerdictStatus::kCandidateSet;
  if (rs != 0) {
    // lambda = a_unit * s / (s - r) mod p
    long lambda = mod_reduce(a_unit, p) * mod_reduce(d.s, p) % p;
    lambda = lambda * mod_inverse(mod_reduce(d.s - r, p), p) % p;
    long lambda_inv = mod_inverse(lambda, p);
    push(v, "lambda", num(lambda));
    v.candidates.push_back("mu_{" + num(lambda) + "} w^{" + num(d.s) + "} + mu_{" +
                           num(lambda_inv) + "} w^{1}");
    v.candidates.push_back(induced_label(d.s + p));
  } else {
    v.candidates.push_back(induced_label(d.s + 1));
    v.candidates.push_back(induced_label(d.s + p));
  }
  return v;
}

Verdict check_weight_congruences(long p, long r) {
  require_odd_prime(p);
  if (r % 2 != 0) throw UsageError("classify: r must be even here");
  if (r < 1) throw UsageError("classify: r must be >= 1");
  Decomposition d = decompose(p, r);

  Verdict v;
  v.theorem_tag = "nine-class-congruence-check";
  push(v, "s", num(d.s));
  push(v, "t", num(d.t));

  long modulus = p * (p - 1);
  long rm = mod_reduce(r, modulus);
  push(v, "r mod p(p-1)", num(rm));

  const std::pair<std::string, long> classes[] = {
      {"3p+1", 3 * p + 1}, {"3p+3", 3 * p + 3}, {"4p", 4 * p},
      {"4p+2", 4 * p + 2}, {"5p+1", 5 * p + 1}, {"6p", 6 * p},
      {"s", d.s},          {"s+p-1", d.s + p - 1}, {"s+2p-2", d.s + 2 * p - 2}};
  std::vector<std::string> matched;
  for (const auto& [label, value] : classes) {
    bool hit = rm == mod_reduce(value, modulus);
    push(v, "class " + label + " (" + num(mod_reduce(value, modulus)) + ")",
         hit ? "matched" : "avoided");
    if (hit) matched.push_back(label);
  }

  if (matched.empty()) {
    v.status = VerdictStatus::kIrreducibleGuaranteed;
  } else {
    v.status = VerdictStatus::kOutOfTheoremRange;
    std::string all = matched[0];
    for (size_t i = 1; i < matched.size(); ++i) all += ", " + matched[i];
    push(v, "matched classes", all);
  }
  return v;
}

Verdict classify_higher_slope(long p, long r, long v_floor) {
  require_odd_prime(p);
  if (r % 2 != 0) throw UsageError("classify: r must be even here");
  if (v_floor < 1) throw UsageError("classify: v_floor must be >= 1");
  Decomposition d = decompose(p, r);

  Verdict v;
  v.theorem_tag = "higher-slope-families";
  push(v, "s", num(d.s));
  push(v, "t", num(d.t));

  bool s_in = 2 <= d.s && d.s <= 2 * v_floor;
  push(v, "s in {2..2*v_floor}", s_in ? "yes" : "no");

  if (s_in) {
    long n = 2 * v_floor + 1;
    bool unit = rising_factorial_unit(p, r, d.s, n);
    push(v, "v_floor <= 5", v_floor <= 5 ? "yes" : "no");
    push(v, "p does not divide (r-s)...(r-s+" + num(n - 1) + ")", unit ? "yes" : "no");
    v.status = (v_floor <= 5 && unit) ? VerdictStatus::kIrreducibleGuaranteed
                                      : VerdictStatus::kOutOfTheoremRange;
    return v;
  }

  bool unit = rising_factorial_unit(p, r, d.s, v_floor);
  push(v, "v_floor <= 37", v_floor <= 37 ? "yes" : "no");
  push(v, "p does not divide (r-s)...(r-s+" + num(v_floor - 1) + ")", unit ? "yes" : "no");
  if (v_floor <= 37 && unit) {
    v.status = VerdictStatus::kIrreducibleGuaranteed;
    v.candidates.push_back(induced_label(d.s + (p - 1) * v_floor + 1));
    return v;
  }
  push(v, "v_floor <= 2", v_floor <= 2 ? "yes" : "no");
  v.status = v_floor <= 2 ? VerdictStatus::kIrreducibleGuaranteed
                          : VerdictStatus::kOutOfTheoremRange;
  return v;
}

Verdict classification_summary(long p, long r, long v_floor) {
  require_odd_prime(p);
  if (r % 2 != 0) throw UsageError("classify: r must be even here");
  if (v_floor < 1) throw UsageError("classify: v_floor must be >= 1");
  Decomposition d = decompose(p, r);

  Verdict v;
  push(v, "s", num(d.s));
  push(v, "t", num(d.t));
  push(v, "v_floor", num(v_floor));

  if (v_floor <= 2) {
    push(v, "slope below 3", "yes");
    v.status = VerdictStatus::kIrreducibleGuaranteed;
    v.theorem_tag = "low-slope-irreducibility";
  } else {
    push(v, "slope below 3", "no");
  }

  if (v.status != VerdictStatus::kIrreducibleGuaranteed && v_floor == 3) {
    Verdict nine = check_weight_congruences(p, r);
    if (nine.status == VerdictStatus::kIrreducibleGuaranteed) {
      push(v, "nine-class check", "all avoided");
      v.status = VerdictStatus::kIrreducibleGuaranteed;
      v.theorem_tag = "nine-class-congruence-check";
    } else {
      std::string matched = "matched";
      for (const auto& [name, value] : nine.conditions)
        if (name == "matched classes") matched += " " + value;
      push(v, "nine-class check", matched);
    }
  }

  if (v.status != VerdictStatus::kIrreducibleGuaranteed) {
    bool s_in = 2 <= d.s && d.s <= 2 * v_floor;
    if (s_in && v_floor <= 5) {
      long n = 2 * v_floor + 1;
      bool unit = rising_factorial_unit(p, r, d.s, n);
      push(v, "family s in {2..2*v_floor}, rising factorial of length " + num(n),
           unit ? "unit" : "divisible by p");
      if (unit) {
        v.status = VerdictStatus::kIrreducibleGuaranteed;
        v.theorem_tag = "higher-slope-families";
      }
    } else if (!s_in && v_floor <= 37) {
      bool unit = rising_factorial_unit(p, r, d.s, v_floor);
      push(v, "family s outside {2..2*v_floor}, rising factorial of length " + num(v_floor),
           unit ? "unit" : "divisible by p");
      if (unit) {
        v.status = VerdictStatus::kIrreducibleGuaranteed;
        v.theorem_tag = "higher-slope-families";
        v.candidates.push_back(induced_label(d.s + (p - 1) * v_floor + 1));
      }
    } else {
      push(v, "slope floor within a covered family", "no");
    }
  }

  if (v.status != VerdictStatus::kIrreducibleGuaranteed) {
    v.status = VerdictStatus::kOutOfTheoremRange;
    v.theorem_tag = "none";
  }

  if (std::optional<std::string> note = small_case_note(p, r)) {
    push(v, "small weight note", *note);
    if (v.theorem_tag == "none") v.theorem_tag = "small-weight-table";
  }
  return v;
}

std::optional<std::string> small_case_note(long p, long r) {
  if (p == 3 && r == 6) return "trivial";
  if (p == 3 && r == 8) return "pi(0,0,1)";
  if (p == 5 && r == 12) return "pi(2,0,w)";
  return std::nullopt;
}

}  // namespace ts
