// Command-line front end. Parses flags, forwards everything through the C API
// in thetaslope.h, prints the rendered report, and maps ts_status to the exit
// code: 0 ok, 1 failed mathematical check, 2 usage, 3 internal inconsistency.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "thetaslope.h"

namespace {

struct SubSpec {
  CLI::App* app = nullptr;
  std::map<std::string, std::string> params;
};

void add_param(SubSpec& spec, const std::string& flag, const std::string& key,
               const std::string& desc) {
  spec.app->add_option_function<std::string>(
      flag, [&spec, key](const std::string& value) { spec.params[key] = value; }, desc);
}

void add_flag_param(SubSpec& spec, const std::string& flag, const std::string& key,
                    const std::string& desc) {
  spec.app->add_flag_callback(
      flag, [&spec, key]() { spec.params[key] = "1"; }, desc);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks for binomial congruences, theta factorizations, kernel "
               "polynomials, and mod-p classification verdicts."};
  app.require_subcommand(1);

  std::string format = "text";
  std::string out_path;
  int jobs = 1;
  if (const char* env = std::getenv("THETA_SLOPE_JOBS")) {
    int v = std::atoi(env);
    if (v >= 1) jobs = v;
  }

  std::map<std::string, SubSpec> specs;
  auto make_sub = [&](const std::string& name, const std::string& desc) -> SubSpec& {
    SubSpec& spec = specs[name];
    spec.app = app.add_subcommand(name, desc);
    spec.app->add_option("--format", format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    spec.app->add_option("--jobs", jobs, "worker threads for sweeps")
        ->check(CLI::PositiveNumber);
    spec.app->add_option("--out", out_path, "also write the report to this file");
    return spec;
  };

  {
    SubSpec& s = make_sub("lemmas", "binomial-coefficient congruences and identities");
    add_param(s, "--check", "check", "sum (default), alternating, shift, or kappa");
    add_param(s, "--part", "part", "which congruence family, 1..6");
    add_param(s, "--p", "p", "odd prime");
    add_param(s, "--r", "r", "weight / row index");
    add_param(s, "--A", "A", "offset for parts 5 and 6");
    add_flag_param(s, "--sweep", "sweep", "run the whole default grid");
    add_param(s, "--p-set", "p-set", "comma-separated primes for sweeps");
    add_param(s, "--r-max", "r-max", "sweep bound on r");
    add_param(s, "--A-min", "A-min", "sweep bound on A");
    add_param(s, "--A-max", "A-max", "sweep bound on A");
    add_param(s, "--t-max", "t-max", "sweep bound on t (part 2)");
    add_param(s, "--L-max", "L-max", "alternating sweep bound");
    add_param(s, "--b-max", "b-max", "alternating sweep bound");
    add_param(s, "--N-max", "N-max", "alternating sweep bound");
    add_param(s, "--extent", "extent", "alternating sweep r range above (L+b)N");
    add_param(s, "--L", "L", "alternating parameter L / kappa parameter L");
    add_param(s, "--b", "b", "alternating parameter b");
    add_param(s, "--N", "N", "alternating parameter N");
    add_param(s, "--which", "which", "shift identity: 1 exact, 2 mod p");
    add_param(s, "--z", "z", "shift identity argument (which = 1)");
    add_param(s, "--i", "i", "shift identity argument (which = 2)");
    add_param(s, "--w", "w", "weight index");
    add_param(s, "--m", "m", "kappa parameter m");
    add_param(s, "--l", "l", "kappa column shift l");
    add_param(s, "--variant", "variant", "kappa weight: binom-ip (default) or binom-i");
  }
  {
    SubSpec& s = make_sub("psi", "character-sum operator vs its closed form");
    add_param(s, "--p", "p", "odd prime");
    add_param(s, "--r", "r", "degree, r = t(p-1) + s with t >= 2");
    add_param(s, "--i", "i", "check a single monomial x^i y^{r-i}");
    add_param(s, "--samples", "samples", "random equivariance samples (default 100)");
    add_param(s, "--seed", "seed", "RNG seed for the samples");
  }
  {
    SubSpec& s = make_sub("span", "GL2-stable span closure of monomials");
    add_param(s, "--p", "p", "odd prime");
    add_param(s, "--r", "r", "degree");
    add_param(s, "--m", "m", "use generators x^i y^{r-i}, i <= m, and compare "
                             "against the reference list");
    add_param(s, "--gens", "gens", "comma-separated custom generator exponents");
  }
  {
    SubSpec& s = make_sub("theta", "divisibility by theta = x y^p - x^p y");
    add_param(s, "--mode", "mode", "factor (default) or divide");
    add_param(s, "--p", "p", "odd prime");
    add_param(s, "--r", "r", "degree");
    add_param(s, "--alpha", "alpha", "requested theta power (factor mode)");
    add_param(s, "--gamma", "gamma", "exponent offset (factor mode)");
    add_param(s, "--C", "C", "comma-separated ladder coefficients C_0..C_beta");
    add_param(s, "--k", "k", "requested theta power (divide mode)");
    add_param(s, "--terms", "terms", "sparse polynomial, entries exponent:coeff");
  }
  {
    SubSpec& s = make_sub("matrix", "the kernel matrices over Q[r]");
    add_param(s, "--m", "m", "size parameter");
    add_param(s, "--alpha", "alpha", "row parameter, 0..m");
    add_param(s, "--L", "L", "column parameter, 1..m");
    add_param(s, "--kind", "kind", "full (default) or small");
    add_flag_param(s, "--gcd", "gcd", "also print the gcd of the maximal minors");
  }
  {
    SubSpec& s = make_sub("roots", "exceptional rational roots for each L");
    add_param(s, "--m", "m", "size parameter");
    add_flag_param(s, "--details", "details",
                   "also print per-alpha factors and kernel diagnostics");
  }
  {
    SubSpec& s = make_sub("m-w", "solve the small matrix for its constants");
    add_param(s, "--m", "m", "size parameter");
    add_param(s, "--alpha", "alpha", "row parameter, 0..m");
    add_param(s, "--L", "L", "column parameter, 1..m");
    add_param(s, "--p", "p", "evaluate the restricted sums at this prime");
    add_param(s, "--r", "r", "evaluation weight");
    add_param(s, "--w", "w", "evaluation row");
  }
  {
    SubSpec& s = make_sub("big-poly", "kernel polynomials of the three-variable matrix");
    add_param(s, "--m", "m", "size parameter");
    add_param(s, "--alpha", "alpha", "single alpha instead of 0..m-1");
  }
  {
    SubSpec& s = make_sub("conjecture", "roots, integrality, and kernel checks");
    add_param(s, "--m", "m", "size parameter");
  }
  {
    SubSpec& s = make_sub("hyper", "cleared hypergeometric identities in (r, s)");
    add_param(s, "--alpha-max", "alpha-max", "verify every alpha up to this bound (<= 36)");
  }
  {
    SubSpec& s = make_sub("classify", "irreducibility verdicts for mod-p reductions");
    add_param(s, "--p", "p", "odd prime");
    add_param(s, "--r", "r", "weight");
    add_param(s, "--case", "case", "summary (default), slope-one, nine-class, higher");
    add_param(s, "--v", "v", "exact slope, e.g. 7/2");
    add_param(s, "--v-floor", "v-floor", "floor of a known non-integral slope");
    add_param(s, "--a-unit", "a-unit", "unit u with a_p = p u (slope-one case)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const SubSpec* chosen = nullptr;
  for (const auto& [name, spec] : specs) {
    if (spec.app->parsed()) {
      chosen = &spec;
      break;
    }
  }
  if (chosen == nullptr) {
    std::cerr << "error: no subcommand selected" << std::endl;
    return 2;
  }

  std::vector<const char*> keys, values;
  keys.reserve(chosen->params.size());
  values.reserve(chosen->params.size());
  for (const auto& [k, v] : chosen->params) {
    keys.push_back(k.c_str());
    values.push_back(v.c_str());
  }

  ts_report* rep = nullptr;
  ts_status status =
      ts_run(chosen->app->get_name().c_str(), keys.data(), values.data(),
             static_cast<int>(keys.size()), jobs, &rep);

  if (status == TS_USAGE_ERROR || status == TS_INTERNAL_ERROR) {
    std::cerr << "error: " << ts_last_error() << std::endl;
    return static_cast<int>(status);
  }

  std::string rendered = format == "json" ? ts_report_json(rep) : ts_report_text(rep);
  ts_report_free(rep);
  std::cout << rendered;

  if (!out_path.empty()) {
    std::ofstream f(out_path, std::ios::binary);
    f << rendered;
    if (!f.good()) {
      std::cerr << "error: could not write " << out_path << std::endl;
      return 2;
    }
  }
  return static_cast<int>(status);
}
