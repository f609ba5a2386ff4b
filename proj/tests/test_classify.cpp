#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "core/classify.hpp"
#include "core/langlands.hpp"
#include "core/num.hpp"

using namespace ts;

namespace {

bool has_condition(const Verdict& v, const std::string& name, const std::string& value) {
  for (const auto& [n, val] : v.conditions)
    if (n == name && val == value) return true;
  return false;
}

}  // namespace

TEST_CASE("status names") {
  CHECK(std::string(verdict_status_name(VerdictStatus::kIrreducibleGuaranteed)) ==
        "IRREDUCIBLE_GUARANTEED");
  CHECK(std::string(verdict_status_name(VerdictStatus::kCandidateSet)) == "CANDIDATE_SET");
  CHECK(std::string(verdict_status_name(VerdictStatus::kOutOfTheoremRange)) ==
        "OUT_OF_THEOREM_RANGE");
}

TEST_CASE("slope one, generic residue") {
  Verdict v = classify_slope_one(7, 30, 1);
  CHECK(v.status == VerdictStatus::kCandidateSet);
  CHECK(v.theorem_tag == "slope-one-classification");
  REQUIRE(v.candidates.size() == 2);
  CHECK(v.candidates[0] == "mu_{5} w^{6} + mu_{3} w^{1}");
  CHECK(v.candidates[1] == "Ind(w2^{13})");
  CHECK(has_condition(v, "lambda", "5"));
  CHECK(has_condition(v, "s outside {1, 3}", "yes"));
}

TEST_CASE("slope one, p divides r - s") {
  Verdict v = classify_slope_one(5, 22, 1);
  CHECK(v.status == VerdictStatus::kCandidateSet);
  REQUIRE(v.candidates.size() == 2);
  CHECK(v.candidates[0] == "Ind(w2^{3})");
  CHECK(v.candidates[1] == "Ind(w2^{7})");
  CHECK(has_condition(v, "(r - s) mod p", "0"));
}

TEST_CASE("slope one, excluded residues and bad input") {
  Verdict v = classify_slope_one(5, 13, 1);  // s = 1
  CHECK(v.status == VerdictStatus::kOutOfTheoremRange);
  CHECK(v.candidates.empty());
  CHECK(has_condition(v, "s outside {1, 3}", "no"));

  v = classify_slope_one(7, 21, 2);  // s = 3
  CHECK(v.status == VerdictStatus::kOutOfTheoremRange);

  CHECK_THROWS_AS(classify_slope_one(7, 30, 7), UsageError);   // a_unit not a unit
  CHECK_THROWS_AS(classify_slope_one(7, 3, 1), UsageError);    // t = 0
  CHECK_THROWS_AS(classify_slope_one(4, 30, 1), UsageError);   // p not an odd prime
}

TEST_CASE("nine-class congruence check") {
  Verdict v = check_weight_congruences(7, 64);  // 64 = 22 mod 42 hits 3p+1
  CHECK(v.status == VerdictStatus::kOutOfTheoremRange);
  CHECK(v.theorem_tag == "nine-class-congruence-check");
  CHECK(has_condition(v, "matched classes", "3p+1"));

  v = check_weight_congruences(7, 44);  // 44 = 2 mod 42 hits s
  CHECK(v.status == VerdictStatus::kOutOfTheoremRange);
  CHECK(has_condition(v, "matched classes", "s"));

  v = check_weight_congruences(11, 40);
  CHECK(v.status == VerdictStatus::kIrreducibleGuaranteed);
  CHECK(v.candidates.empty());

  CHECK_THROWS_AS(check_weight_congruences(7, 31), UsageError);  // odd r

  // The verdict only depends on r mod p(p-1).
  for (long r : {40L, 64L}) {
    Verdict a = check_weight_congruences(7, r);
    Verdict b = check_weight_congruences(7, r + 42);
    CHECK(a.status == b.status);
    CHECK(a.candidates == b.candidates);
  }
}

TEST_CASE("higher slope families") {
  // s inside the window, rising factorial a unit
  Verdict v = classify_higher_slope(11, 92, 4);
  CHECK(v.status == VerdictStatus::kIrreducibleGuaranteed);
  CHECK(v.theorem_tag == "higher-slope-families");
  CHECK(v.candidates.empty());
  CHECK(has_condition(v, "s in {2..2*v_floor}", "yes"));

  // s inside, rising factorial divisible by p
  v = classify_higher_slope(11, 24, 4);
  CHECK(v.status == VerdictStatus::kOutOfTheoremRange);

  // s inside but the floor is above the proven window
  v = classify_higher_slope(11, 92, 6);
  CHECK(v.status == VerdictStatus::kOutOfTheoremRange);

  // s outside: verdict pins the induced character
  v = classify_higher_slope(11, 38, 3);
  CHECK(v.status == VerdictStatus::kIrreducibleGuaranteed);
  REQUIRE(v.candidates.size() == 1);
  CHECK(v.candidates[0] == "Ind(w2^{39})");
  CHECK(has_condition(v, "s in {2..2*v_floor}", "no"));

  // s outside and not a unit, no low-floor rescue
  v = classify_higher_slope(11, 18, 3);
  CHECK(v.status == VerdictStatus::kOutOfTheoremRange);

  // low-floor fallback clause
  v = classify_higher_slope(7, 12, 2);
  CHECK(v.status == VerdictStatus::kIrreducibleGuaranteed);
  CHECK(v.candidates.empty());
  CHECK(has_condition(v, "v_floor <= 2", "yes"));

  CHECK_THROWS_AS(classify_higher_slope(7, 13, 2), UsageError);  // odd r
  CHECK_THROWS_AS(classify_higher_slope(7, 12, 0), UsageError);  // v_floor < 1
}

TEST_CASE("summary applies the first matching clause") {
  Verdict v = classification_summary(7, 30, 1);
  CHECK(v.status == VerdictStatus::kIrreducibleGuaranteed);
  CHECK(v.theorem_tag == "low-slope-irreducibility");
  CHECK(has_condition(v, "slope below 3", "yes"));

  v = classification_summary(7, 30, 2);
  CHECK(v.status == VerdictStatus::kIrreducibleGuaranteed);
  CHECK(v.theorem_tag == "low-slope-irreducibility");

  v = classification_summary(11, 40, 3);
  CHECK(v.status == VerdictStatus::kIrreducibleGuaranteed);
  CHECK(v.theorem_tag == "nine-class-congruence-check");
  CHECK(has_condition(v, "nine-class check", "all avoided"));

  v = classification_summary(7, 64, 3);
  CHECK(v.status == VerdictStatus::kOutOfTheoremRange);
  CHECK(v.theorem_tag == "none");
  CHECK(has_condition(v, "nine-class check", "matched 3p+1"));

  v = classification_summary(11, 92, 4);
  CHECK(v.status == VerdictStatus::kIrreducibleGuaranteed);
  CHECK(v.theorem_tag == "higher-slope-families");
  CHECK(v.candidates.empty());

  v = classification_summary(11, 38, 40);  // floor too high for either family
  CHECK(v.status == VerdictStatus::kOutOfTheoremRange);
  CHECK(has_condition(v, "slope floor within a covered family", "no"));

  CHECK_THROWS_AS(classification_summary(7, 31, 1), UsageError);
  CHECK_THROWS_AS(classification_summary(7, 30, 0), UsageError);
  CHECK_THROWS_AS(classification_summary(9, 30, 1), UsageError);
}

TEST_CASE("hand-settled small weights") {
  REQUIRE(small_case_note(3, 6).has_value());
  CHECK(*small_case_note(3, 6) == "trivial");
  REQUIRE(small_case_note(3, 8).has_value());
  CHECK(*small_case_note(3, 8) == "pi(0,0,1)");
  REQUIRE(small_case_note(5, 12).has_value());
  CHECK(*small_case_note(5, 12) == "pi(2,0,w)");
  CHECK_FALSE(small_case_note(7, 10).has_value());

  Verdict v = classification_summary(3, 6, 3);
  CHECK(v.status == VerdictStatus::kOutOfTheoremRange);
  CHECK(v.theorem_tag == "small-weight-table");
  CHECK(has_condition(v, "small weight note", "trivial"));
}

TEST_CASE("exceptional residues fall outside the guaranteed classes") {
  // Weights congruent to a root of the exceptional products land outside the
  // guaranteed verdicts, with a single known exception in the m = 3, L = 1
  // family where the avoided-classes check happens to clear the residue.
  const long p = 23;
  long guaranteed = 0;
  for (long m = 1; m <= 3; ++m) {
    for (const RootReport& rr : roots_for_all_matrices(m)) {
      for (const Rat& root : rr.roots) {
        REQUIRE(root.get_den() == 1);
        long rho = root.get_num().get_si();
        long r = mod_reduce(rho, p);
        while (mod_reduce(r - 2 * rr.L, p - 1) != 0 || r < 100) r += p;
        Verdict v = classification_summary(p, r, 3);
        if (v.status == VerdictStatus::kIrreducibleGuaranteed) {
          ++guaranteed;
          CHECK(m == 3);
          CHECK(rr.L == 1);
          CHECK(rho == -1);
          CHECK(r == 574);
        }
      }
    }
  }
  CHECK(guaranteed == 1);
}
