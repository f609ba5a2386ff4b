#include "core/commands.hpp"

#include <chrono>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>

#include "core/classify.hpp"
#include "core/fppoly.hpp"
#include "core/langlands.hpp"
#include "core/num.hpp"
#include "core/roots.hpp"
#include "core/sums.hpp"
#include "core/thetafac.hpp"

namespace ts {

namespace {

class Params {
 public:
  explicit Params(const std::map<std::string, std::string>& raw) : raw_(raw) {}

  bool has(const std::string& key) const { return raw_.count(key) != 0; }

  std::string str(const std::string& key) {
    auto it = raw_.find(key);
    if (it == raw_.end()) throw UsageError("missing required parameter --" + key);
    used_.insert(key);
    return it->second;
  }

  std::string str_or(const std::string& key, const std::string& dflt) {
    return has(key) ? str(key) : dflt;
  }

  long integer(const std::string& key) { return parse_long(key, str(key)); }

  long integer_or(const std::string& key, long dflt) {
    return has(key) ? integer(key) : dflt;
  }

  std::optional<long> integer_opt(const std::string& key) {
    if (!has(key)) return std::nullopt;
    return integer(key);
  }

  Rat rational(const std::string& key) {
    std::string text = str(key);
    try {
      Rat q(text);
      if (q.get_den() == 0) throw UsageError("parameter --" + key + " divides by zero");
      q.canonicalize();
      return q;
    } catch (const std::invalid_argument&) {
      throw UsageError("parameter --" + key + " expects a rational like 7/2, got '" +
                       text + "'");
    }
  }

  std::vector<long> integer_list(const std::string& key) {
    std::vector<long> out;
    for (const std::string& piece : split(str(key), key))
      out.push_back(parse_long(key, piece));
    return out;
  }

  std::vector<Int> bigint_list(const std::string& key) {
    std::vector<Int> out;
    for (const std::string& piece : split(str(key), key)) {
      try {
        out.emplace_back(piece);
      } catch (const std::invalid_argument&) {
        throw UsageError("parameter --" + key + " expects integers, got '" + piece + "'");
      }
    }
    return out;
  }

  bool flag(const std::string& key) {
    if (!has(key)) return false;
    std::string v = str(key);
    if (v == "1" || v == "true" || v.empty()) return true;
    if (v == "0" || v == "false") return false;
    throw UsageError("parameter --" + key + " expects 0 or 1");
  }

  // Reject keys that no branch of the subcommand consumed.
  void finish() const {
    for (const auto& [key, value] : raw_)
      if (used_.count(key) == 0)
        throw UsageError("unknown parameter --" + key + " for this subcommand");
  }

 private:
  static std::vector<std::string> split(const std::string& text, const std::string& key) {
    std::vector<std::string> out;
    size_t start = 0;
    while (start <= text.size()) {
      size_t comma = text.find(',', start);
      if (comma == std::string::npos) comma = text.size();
      if (comma == start)
        throw UsageError("parameter --" + key + " has an empty list entry");
      out.push_back(text.substr(start, comma - start));
      start = comma + 1;
    }
    if (out.empty()) throw UsageError("parameter --" + key + " expects a list");
    return out;
  }

  static long parse_long(const std::string& key, const std::string& text) {
    try {
      size_t pos = 0;
      long v = std::stol(text, &pos);
      if (pos != text.size()) throw std::invalid_argument(text);
      return v;
    } catch (const std::exception&) {
      throw UsageError("parameter --" + key + " expects an integer, got '" + text + "'");
    }
  }

  const std::map<std::string, std::string>& raw_;
  std::set<std::string> used_;
};

std::string val_str(long v) {
  return v == kValInfinity ? std::string("inf") : std::to_string(v);
}

Json val_json(long v) {
  if (v == kValInfinity) return "inf";
  return v;
}

void set_check_status(CommandOutcome& out, bool pass) {
  out.report.status = pass ? "pass" : "fail";
  out.exit_code = pass ? 0 : 1;
}

Json sum_report_row(const SumReport& rep) {
  Json row;
  row["part"] = rep.part;
  row["p"] = rep.p;
  row["r"] = rep.r;
  row["value"] = rat_str(rep.value);
  row["target"] = rat_str(rep.target);
  row["required_valuation"] = rep.required_valuation;
  row["achieved_valuation"] = val_json(rep.achieved_valuation);
  row["pass"] = rep.pass;
  if (!rep.notes.empty()) {
    Json notes;
    for (const auto& [k, v] : rep.notes) notes[k] = v;
    row["notes"] = notes;
  }
  return row;
}

std::string sum_report_line(const SumReport& rep) {
  std::string line = "part " + std::to_string(rep.part) + ", p=" + std::to_string(rep.p) +
                     ", r=" + std::to_string(rep.r);
  for (const auto& [k, v] : rep.notes) line += ", " + k + "=" + v;
  line += ": value " + rat_str(rep.value) + ", target " + rat_str(rep.target) +
          ", valuation " + val_str(rep.achieved_valuation) + " (need " +
          std::to_string(rep.required_valuation) + "): " + (rep.pass ? "ok" : "FAIL");
  return line;
}

void require_odd_prime_param(long p) {
  if (p < 3 || !is_prime(Int(p))) throw UsageError("p must be an odd prime");
}

long powmod(long base, long e, long p) {
  long out = 1 % p;
  long b = mod_reduce(base, p);
  while (e > 0) {
    if (e & 1) out = static_cast<long>((static_cast<unsigned long long>(out) * b) % p);
    b = static_cast<long>((static_cast<unsigned long long>(b) * b) % p);
    e >>= 1;
  }
  return out;
}

void cmd_lemmas(Params& P, int jobs, CommandOutcome& out) {
  std::string check = P.str_or("check", "sum");
  Report& rep = out.report;

  if (check == "sum") {
    int part = static_cast<int>(P.integer("part"));
    if (P.flag("sweep")) {
      SweepGrid grid = default_sweep_grid(part);
      if (P.has("p-set")) grid.ps = P.integer_list("p-set");
      grid.r_max = P.integer_or("r-max", grid.r_max);
      grid.A_min = P.integer_or("A-min", grid.A_min);
      grid.A_max = P.integer_or("A-max", grid.A_max);
      grid.t_max = P.integer_or("t-max", grid.t_max);
      P.finish();
      SweepResult res = sweep_binomial_sums(part, grid, jobs);
      Json row;
      row["part"] = part;
      row["points"] = res.total;
      row["failed"] = res.failed;
      rep.results.push_back(row);
      for (const SumReport& f : res.failures) rep.results.push_back(sum_report_row(f));
      rep.text_lines.push_back("part " + std::to_string(part) + " sweep: " +
                               std::to_string(res.total) + " points, " +
                               std::to_string(res.failed) + " failures");
      for (const SumReport& f : res.failures) rep.text_lines.push_back(sum_report_line(f));
      set_check_status(out, res.failed == 0);
    } else {
      long p = P.integer("p");
      long r = P.integer("r");
      std::optional<long> A = P.integer_opt("A");
      P.finish();
      if (A && part != 5 && part != 6)
        throw UsageError("--A only applies to parts 5 and 6");
      SumReport sr = binomial_sum_check(part, p, r, A);
      rep.results.push_back(sum_report_row(sr));
      rep.text_lines.push_back(sum_report_line(sr));
      set_check_status(out, sr.pass);
    }
    return;
  }

  if (check == "alternating") {
    if (P.flag("sweep")) {
      long L_max = P.integer_or("L-max", 4);
      long b_max = P.integer_or("b-max", 3);
      long N_max = P.integer_or("N-max", 5);
      long extent = P.integer_or("extent", 30);
      P.finish();
      SweepResult res = sweep_alternating(L_max, b_max, N_max, extent, jobs);
      Json row;
      row["points"] = res.total;
      row["failed"] = res.failed;
      rep.results.push_back(row);
      for (const SumReport& f : res.failures) rep.results.push_back(sum_report_row(f));
      rep.text_lines.push_back("alternating sweep: " + std::to_string(res.total) +
                               " points, " + std::to_string(res.failed) + " failures");
      set_check_status(out, res.failed == 0);
    } else {
      long r = P.integer("r");
      long L = P.integer("L");
      long b = P.integer("b");
      long N = P.integer("N");
      P.finish();
      bool ok = alternating_binomial_identity(r, L, b, N);
      Json row;
      row["r"] = r;
      row["L"] = L;
      row["b"] = b;
      row["N"] = N;
      row["pass"] = ok;
      rep.results.push_back(row);
      rep.text_lines.push_back("alternating identity at r=" + std::to_string(r) +
                               ", L=" + std::to_string(L) + ", b=" + std::to_string(b) +
                               ", N=" + std::to_string(N) + ": " + (ok ? "ok" : "FAIL"));
      set_check_status(out, ok);
    }
    return;
  }

  if (check == "shift") {
    int which = static_cast<int>(P.integer("which"));
    if (which != 1 && which != 2)
      throw UsageError("--which must be 1 (exact) or 2 (mod p)");
    long A = P.integer("A");
    long z = which == 1 ? P.integer("z") : P.integer("i");
    long w = P.integer("w");
    long p = which == 2 ? P.integer("p") : P.integer_or("p", 0);
    P.finish();
    bool ok = binomial_shift_identity(which, A, z, w, p);
    Json row;
    row["which"] = which;
    row["A"] = A;
    row[which == 1 ? "z" : "i"] = z;
    row["w"] = w;
    if (which == 2) row["p"] = p;
    row["pass"] = ok;
    rep.results.push_back(row);
    rep.text_lines.push_back(std::string("shift identity (") +
                             (which == 1 ? "exact" : "mod p") + "): " +
                             (ok ? "ok" : "FAIL"));
    set_check_status(out, ok);
    return;
  }

  if (check == "kappa") {
    long p = P.integer("p");
    long r = P.integer("r");
    long m = P.integer("m");
    long l = P.integer("l");
    long w = P.integer("w");
    long L = P.integer("L");
    std::string variant = P.str_or("variant", "binom-ip");
    P.finish();
    SumReport sr = kappa_congruence_check(p, r, m, l, w, L, variant);
    rep.results.push_back(sum_report_row(sr));
    rep.text_lines.push_back(sum_report_line(sr));
    set_check_status(out, sr.pass);
    return;
  }

  throw UsageError("unknown --check '" + check + "' (sum, alternating, shift, kappa)");
}

void cmd_psi(Params& P, CommandOutcome& out) {
  long p = P.integer("p");
  long r = P.integer("r");
  std::optional<long> only_i = P.integer_opt("i");
  long samples = P.integer_or("samples", 100);
  require_odd_prime_param(p);
  Decomposition d = decompose(p, r);
  long default_seed = 0x5eed + p * 1000 + r;
  long seed = P.integer_or("seed", default_seed);
  P.finish();
  if (d.t < 2) throw UsageError("psi: needs r = t(p-1) + s with t >= 2");
  if (samples < 0) throw UsageError("psi: --samples must be >= 0");
  if (only_i && (*only_i < 0 || *only_i > r))
    throw UsageError("psi: --i must be in 0..r");

  long s = d.s;
  long n = p - 1 - s;

  std::vector<long> exponents;
  if (only_i) {
    exponents.push_back(*only_i);
  } else {
    for (long i = 0; i <= r; ++i) exponents.push_back(i);
  }
  for (long i : exponents) {
    FpHomPoly img = psi_apply(fp_monomial(p, r, i), s);
    for (long j = 0; j <= n; ++j) {
      long want = psi_matrix_entry(p, r, s, i, j);
      if (img.c[static_cast<size_t>(j)] != want)
        throw InternalError("psi: character sum disagrees with the closed form at i=" +
                            std::to_string(i) + ", j=" + std::to_string(j));
    }
    if (only_i) {
      Json row;
      row["i"] = i;
      Json coeffs = Json::array();
      for (long j = 0; j <= n; ++j) coeffs.push_back(img.c[static_cast<size_t>(j)]);
      row["coefficients"] = coeffs;
      out.report.results.push_back(row);
      std::string line = "psi(x^" + std::to_string(i) + " y^" + std::to_string(r - i) +
                         ") coefficients on X^j Y^{" + std::to_string(n) + "-j}:";
      for (long j = 0; j <= n; ++j) line += " " + std::to_string(img.c[static_cast<size_t>(j)]);
      out.report.text_lines.push_back(line);
    }
  }

  std::mt19937_64 rng(static_cast<unsigned long long>(seed));
  auto draw = [&]() { return static_cast<long>(rng() % static_cast<unsigned long long>(p)); };
  for (long k = 0; k < samples; ++k) {
    Mat2 g{};
    long det = 0;
    while (det == 0) {
      g = Mat2{draw(), draw(), draw(), draw()};
      det = mod_reduce(g.a * g.d - g.b * g.c, p);
    }
    FpHomPoly f(p, r);
    for (long i = 0; i <= r; ++i) f.c[static_cast<size_t>(i)] = draw();
    FpHomPoly lhs = psi_apply(gl2_act(f, g), s);
    FpHomPoly rhs = fp_scale(gl2_act(psi_apply(f, s), g), powmod(det, s, p));
    if (!(lhs == rhs))
      throw InternalError("psi: equivariance failed on sample " + std::to_string(k));
  }

  Json row;
  row["p"] = p;
  row["r"] = r;
  row["s"] = s;
  row["t"] = d.t;
  row["monomials_checked"] = static_cast<long>(exponents.size());
  row["equivariance_samples"] = samples;
  row["oracle_matches_closed_form"] = true;
  out.report.results.push_back(row);
  out.report.text_lines.push_back(
      "character-sum oracle agrees with the closed form on " +
      std::to_string(exponents.size()) + " monomials; " + std::to_string(samples) +
      " equivariance samples ok");
  set_check_status(out, true);
}

void cmd_span(Params& P, CommandOutcome& out) {
  long p = P.integer("p");
  long r = P.integer("r");
  bool have_m = P.has("m");
  bool have_gens = P.has("gens");
  if (have_m == have_gens) throw UsageError("span: pass exactly one of --m or --gens");
  require_odd_prime_param(p);
  if (r < 1) throw UsageError("span: r must be >= 1");

  std::vector<long> gen_exponents;
  long m = -1;
  if (have_m) {
    m = P.integer("m");
    if (m < 0 || 2 * m >= r) throw UsageError("span: needs 0 <= m and 2m < r");
    for (long i = 0; i <= m; ++i) gen_exponents.push_back(i);
  } else {
    gen_exponents = P.integer_list("gens");
    for (long i : gen_exponents)
      if (i < 0 || i > r) throw UsageError("span: generator exponents must be in 0..r");
  }
  P.finish();

  std::vector<FpHomPoly> gens;
  gens.reserve(gen_exponents.size());
  for (long i : gen_exponents) gens.push_back(fp_monomial(p, r, i));
  SpanClosure cl = span_closure(gens);

  Json row;
  row["p"] = p;
  row["r"] = r;
  row["generators"] = static_cast<long>(gens.size());
  row["dimension"] = cl.dimension;
  row["generations"] = cl.generations;
  out.report.text_lines.push_back("stable span dimension " + std::to_string(cl.dimension) +
                                  " (closed after " + std::to_string(cl.generations) +
                                  " passes)");

  if (have_m) {
    std::vector<FpHomPoly> list = standard_span_list(p, r, m);
    bool forward = true;
    for (const FpHomPoly& f : list)
      if (!in_row_span(f, cl.basis)) forward = false;
    bool backward = true;
    for (const FpHomPoly& f : cl.basis)
      if (!in_row_span(f, list)) backward = false;
    bool equal = forward && backward;
    row["list_size"] = static_cast<long>(list.size());
    row["matches_reference_list"] = equal;
    out.report.results.push_back(row);
    out.report.text_lines.push_back(
        "reference list of " + std::to_string(list.size()) +
        " polynomials spans the same subspace: " + (equal ? "yes" : "NO"));
    set_check_status(out, equal);
  } else {
    out.report.results.push_back(row);
    out.report.status = "info";
  }
}

void cmd_theta(Params& P, CommandOutcome& out) {
  std::string mode = P.str_or("mode", "factor");

  if (mode == "factor") {
    long p = P.integer("p");
    long r = P.integer("r");
    long alpha = P.integer("alpha");
    long gamma = P.integer_or("gamma", 0);
    std::vector<Int> C = P.bigint_list("C");
    P.finish();
    ThetaFactorization tf = theta_factor(C, alpha, gamma, r, p);
    Json row;
    row["p"] = p;
    row["r"] = r;
    row["alpha"] = alpha;
    row["gamma"] = gamma;
    row["beta"] = static_cast<long>(C.size()) - 1;
    Json moments = Json::array();
    for (const Int& mo : tf.moments) moments.push_back(mo.get_str());
    row["moments"] = moments;
    row["ok"] = tf.ok;
    if (tf.ok) {
      row["epsilon"] = tf.epsilon;
      Json reduced = Json::array();
      for (const Int& dj : tf.reduced) reduced.push_back(dj.get_str());
      row["reduced"] = reduced;
      out.report.text_lines.push_back(
          "all " + std::to_string(alpha) +
          " moment conditions vanish; quotient coefficients recovered with sign " +
          std::to_string(tf.epsilon));
    } else {
      row["first_violated_w"] = tf.first_violated_w;
      out.report.text_lines.push_back(
          "moment condition fails first at w = " + std::to_string(tf.first_violated_w) +
          ": the polynomial is not divisible by theta^" + std::to_string(alpha));
    }
    out.report.results.push_back(row);
    set_check_status(out, tf.ok);
    return;
  }

  if (mode == "divide") {
    long p = P.integer("p");
    long r = P.integer("r");
    long k = P.integer_or("k", 1);
    std::string terms = P.str("terms");
    P.finish();
    require_odd_prime_param(p);
    if (r < 1) throw UsageError("theta: r must be >= 1");
    if (k < 0) throw UsageError("theta: k must be >= 0");

    FpHomPoly f(p, r);
    size_t start = 0;
    while (start <= terms.size()) {
      size_t comma = terms.find(',', start);
      if (comma == std::string::npos) comma = terms.size();
      std::string piece = terms.substr(start, comma - start);
      size_t colon = piece.find(':');
      if (colon == std::string::npos)
        throw UsageError("theta: --terms expects entries like 3:-1");
      long i = 0, c = 0;
      try {
        size_t pos = 0;
        i = std::stol(piece.substr(0, colon), &pos);
        if (pos != colon) throw std::invalid_argument(piece);
        std::string cs = piece.substr(colon + 1);
        c = std::stol(cs, &pos);
        if (pos != cs.size()) throw std::invalid_argument(piece);
      } catch (const std::exception&) {
        throw UsageError("theta: --terms entry '" + piece + "' is not exponent:coeff");
      }
      if (i < 0 || i > r) throw UsageError("theta: term exponent out of 0..r");
      f.c[static_cast<size_t>(i)] = mod_reduce(f.c[static_cast<size_t>(i)] + c, p);
      start = comma + 1;
    }

    ThetaDivideResult td = theta_divide(f, k);
    Json row;
    row["p"] = p;
    row["r"] = r;
    row["requested"] = td.requested;
    row["achieved"] = td.achieved;
    Json quot = Json::array();
    for (long i = 0; i <= td.quotient.r; ++i)
      if (td.quotient.c[static_cast<size_t>(i)] != 0)
        quot.push_back(std::to_string(i) + ":" +
                       std::to_string(td.quotient.c[static_cast<size_t>(i)]));
    row["quotient_terms"] = quot;
    out.report.results.push_back(row);
    out.report.text_lines.push_back("theta divides " + std::to_string(td.achieved) +
                                    " times (requested " + std::to_string(td.requested) +
                                    ")");
    set_check_status(out, td.achieved == td.requested);
    return;
  }

  throw UsageError("unknown --mode '" + mode + "' (factor, divide)");
}

void cmd_matrix(Params& P, CommandOutcome& out) {
  long m = P.integer("m");
  long alpha = P.integer("alpha");
  long L = P.integer("L");
  std::string kind = P.str_or("kind", "full");
  bool want_gcd = P.flag("gcd");
  P.finish();

  PolyMat A = [&] {
    if (kind == "full") return construct_matrix(m, alpha, L);
    if (kind == "small") return construct_small_matrix(m, alpha, L);
    throw UsageError("unknown --kind '" + kind + "' (full, small)");
  }();

  for (long i = 0; i < A.rows; ++i) {
    Json row;
    row["w"] = i;
    Json entries = Json::array();
    std::string line = "w=" + std::to_string(i) + ":";
    for (long j = 0; j < A.cols; ++j) {
      entries.push_back(A.at(i, j).str());
      line += (j == 0 ? " " : " | ") + A.at(i, j).str();
    }
    row["entries"] = entries;
    out.report.results.push_back(row);
    out.report.text_lines.push_back(line);
  }
  if (want_gcd) {
    MPoly g = gcd_for_the_matrix(m, alpha, L);
    Json row;
    row["minor_gcd"] = g.str();
    out.report.results.push_back(row);
    out.report.text_lines.push_back("gcd of the maximal minors: " + g.str());
  }
  out.report.status = "info";
}

Json root_report_row(const RootReport& rr) {
  Json row;
  row["L"] = rr.L;
  Json roots = Json::array();
  for (const Rat& z : rr.roots) roots.push_back(rat_str(z));
  row["roots"] = roots;
  row["all_integral"] = rr.all_integral;
  row["in_window"] = rr.in_window;
  row["window"] = "[" + std::to_string(2 * (rr.L - rr.m)) + ", " +
                  std::to_string(2 * rr.L) + "]";
  return row;
}

std::string root_report_line(const RootReport& rr) {
  std::string line = "L=" + std::to_string(rr.L) + ": roots {";
  for (size_t i = 0; i < rr.roots.size(); ++i)
    line += (i ? ", " : "") + rat_str(rr.roots[i]);
  line += "} in [" + std::to_string(2 * (rr.L - rr.m)) + ", " +
          std::to_string(2 * rr.L) + "]: ";
  line += (rr.all_integral && rr.in_window) ? "ok" : "FAIL";
  return line;
}

void cmd_roots(Params& P, CommandOutcome& out) {
  long m = P.integer("m");
  bool details = P.flag("details");
  P.finish();
  std::vector<RootReport> reports = roots_for_all_matrices(m);
  bool ok = true;
  for (const RootReport& rr : reports) {
    Json row = root_report_row(rr);
    out.report.text_lines.push_back(root_report_line(rr));
    if (details) {
      Json factors = Json::array();
      for (long alpha = 1; alpha <= m; ++alpha) {
        ExceptionalResult er = exceptional_cases(m, alpha, rr.L);
        Json frow;
        frow["alpha"] = alpha;
        frow["product"] = er.product.str();
        frow["kernel_factor"] = er.kernel_factor.str();
        frow["kernel_dimension"] = er.kernel_dimension;
        frow["used_gcd_factor"] = er.used_gcd_factor;
        Json cleared = Json::array();
        for (const MPoly& e : er.kernel_cleared) cleared.push_back(e.str());
        frow["kernel_cleared"] = cleared;
        factors.push_back(frow);
        out.report.text_lines.push_back(
            "  alpha=" + std::to_string(alpha) + ": factor " + er.product.str() +
            "; kernel factor " + er.kernel_factor.str() + " (dim " +
            std::to_string(er.kernel_dimension) + ")");
      }
      row["factors"] = factors;
    }
    out.report.results.push_back(row);
    if (!rr.all_integral || !rr.in_window) ok = false;
  }
  set_check_status(out, ok);
}

void cmd_m_w(Params& P, CommandOutcome& out) {
  long m = P.integer("m");
  long alpha = P.integer("alpha");
  long L = P.integer("L");
  std::optional<long> p = P.integer_opt("p");
  std::optional<long> r = P.integer_opt("r");
  std::optional<long> w = P.integer_opt("w");
  P.finish();
  if (p.has_value() != r.has_value() || p.has_value() != w.has_value())
    throw UsageError("m-w: evaluation needs all of --p, --r, --w");

  MwList mw = find_m_w(m, alpha, L);
  Json row;
  row["m"] = m;
  row["alpha"] = alpha;
  row["L"] = L;
  row["kernel_dimension"] = mw.kernel_dimension;
  Json constants = Json::array();
  for (const RatFun& c : mw.constants) constants.push_back(c.str());
  row["constants"] = constants;
  Json values = Json::array();
  for (const RatFun& v : mw.values) values.push_back(v.str());
  row["values"] = values;
  out.report.results.push_back(row);

  std::string cline = "constants:";
  for (const RatFun& c : mw.constants) cline += " " + c.str() + ";";
  out.report.text_lines.push_back(cline);
  for (size_t i = 0; i < mw.values.size(); ++i)
    out.report.text_lines.push_back("m_" + std::to_string(i) + " = " + mw.values[i].str());

  if (p) {
    require_odd_prime_param(*p);
    int ri = var_index("r");
    auto eval_at_r = [&](const RatFun& f) {
      std::array<Rat, 4> pt{};
      pt[static_cast<size_t>(ri)] = Rat(*r);
      Rat dv = f.den.eval(pt);
      if (dv == 0) throw UsageError("m-w: constants have a pole at this r");
      return f.num.eval(pt) / dv;
    };
    Rat c0 = eval_at_r(mw.constants[0]);
    if (c0 == 0) throw UsageError("m-w: leading constant vanishes at this r");
    std::vector<Rat> C;
    for (long l = 1; l <= alpha; ++l)
      C.push_back(eval_at_r(mw.constants[static_cast<size_t>(l)]) / c0);
    Rat value = eval_m_w_exact(*p, *r, alpha, C, *w);
    long valuation = padic_valuation(value, Int(*p));
    Json erow;
    erow["p"] = *p;
    erow["r"] = *r;
    erow["w"] = *w;
    Json cvals = Json::array();
    for (const Rat& cv : C) cvals.push_back(rat_str(cv));
    erow["constants_at_r"] = cvals;
    erow["value"] = rat_str(value);
    erow["valuation"] = val_json(valuation);
    out.report.results.push_back(erow);
    out.report.text_lines.push_back("restricted sum at p=" + std::to_string(*p) +
                                    ", r=" + std::to_string(*r) + ", w=" +
                                    std::to_string(*w) + ": " + rat_str(value) +
                                    " (valuation " + val_str(valuation) + ")");
  }
  out.report.status = "info";
}

void cmd_big_poly(Params& P, CommandOutcome& out) {
  long m = P.integer("m");
  std::optional<long> alpha = P.integer_opt("alpha");
  P.finish();

  if (alpha) {
    BigPolyResult bp = polynomial_from_the_big_matrix(m, *alpha);
    Json row;
    row["alpha"] = *alpha;
    row["value"] = bp.value.str();
    row["kernel_ok"] = bp.kernel_ok;
    out.report.results.push_back(row);
    out.report.text_lines.push_back("alpha=" + std::to_string(*alpha) + ": " +
                                    bp.value.str());
  } else {
    RatFun product(1L);
    for (long a = 0; a <= m - 1; ++a) {
      BigPolyResult bp = polynomial_from_the_big_matrix(m, a);
      Json row;
      row["alpha"] = a;
      row["value"] = bp.value.str();
      row["kernel_ok"] = bp.kernel_ok;
      out.report.results.push_back(row);
      out.report.text_lines.push_back("alpha=" + std::to_string(a) + ": " +
                                      bp.value.str());
      product *= bp.value;
    }
    Json prow;
    prow["product"] = product.str();
    out.report.results.push_back(prow);
    out.report.text_lines.push_back("product: " + product.str());
  }
  out.report.status = "info";
}

void cmd_conjecture(Params& P, CommandOutcome& out) {
  long m = P.integer("m");
  P.finish();
  ConjectureReport rep = verify_conjecture(m);
  for (const RootReport& rr : rep.root_reports) {
    out.report.results.push_back(root_report_row(rr));
    out.report.text_lines.push_back(root_report_line(rr));
  }
  Json row;
  row["roots_ok"] = rep.roots_ok;
  row["integral_ok"] = rep.integral_ok;
  row["kernels_ok"] = rep.kernels_ok;
  row["ok"] = rep.ok;
  row["product"] = rep.product.str();
  if (rep.integral_ok) row["quotient"] = rep.quotient.str();
  out.report.results.push_back(row);
  out.report.text_lines.push_back(std::string("all roots integral and inside their "
                                              "windows: ") +
                                  (rep.roots_ok ? "yes" : "NO"));
  out.report.text_lines.push_back(
      std::string("product of the leading-coefficient polynomials divides the "
                  "expected power product: ") +
      (rep.integral_ok ? "yes" : "NO"));
  out.report.text_lines.push_back(std::string("kernel normalizations: ") +
                                  (rep.kernels_ok ? "ok" : "FAILED"));
  out.report.text_lines.push_back("verification for m = " + std::to_string(m) + ": " +
                                  (rep.ok ? "pass" : "FAIL"));
  set_check_status(out, rep.ok);
}

void cmd_hyper(Params& P, CommandOutcome& out) {
  long alpha_max = P.integer("alpha-max");
  P.finish();
  if (alpha_max < 1 || alpha_max > 36)
    throw UsageError("hyper: --alpha-max must be in 1..36");
  HyperReport rep = verify_hypergeometric(alpha_max);
  for (const HyperReport::PerAlpha& pa : rep.checks) {
    Json row;
    row["alpha"] = pa.alpha;
    row["sum_identity"] = pa.sum_identity;
    row["alternating_identity"] = pa.alternating_identity;
    Json weighted = Json::array();
    for (char v : pa.weighted) weighted.push_back(v != 0);
    row["weighted_identities"] = weighted;
    row["ok"] = pa.ok;
    out.report.results.push_back(row);
    out.report.text_lines.push_back("alpha=" + std::to_string(pa.alpha) + ": " +
                                    (pa.ok ? "all identities hold" : "FAILED"));
  }
  set_check_status(out, rep.ok);
}

long floor_of(const Rat& v) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), v.get_num().get_mpz_t(), v.get_den().get_mpz_t());
  return q.get_si();
}

void cmd_classify(Params& P, CommandOutcome& out) {
  long p = P.integer("p");
  long r = P.integer("r");
  std::string kase = P.str_or("case", "summary");
  std::optional<Rat> v;
  if (P.has("v")) v = P.rational("v");
  std::optional<long> v_floor = P.integer_opt("v-floor");
  std::optional<long> a_unit = P.integer_opt("a-unit");
  P.finish();

  auto resolve_v_floor = [&]() -> long {
    if (v) {
      if (v->get_den() == 1)
        throw UsageError(
            "classify: this case needs a non-integral slope; --v is an integer");
      return floor_of(*v);
    }
    if (v_floor) return *v_floor;
    throw UsageError("classify: pass --v (like 7/2) or --v-floor");
  };

  Verdict verdict;
  if (kase == "slope-one") {
    if (v && *v != Rat(1))
      throw UsageError("classify: the slope-one case needs v = 1");
    if (!a_unit)
      throw UsageError("classify: --a-unit (a_p = p * unit) is required here");
    verdict = classify_slope_one(p, r, *a_unit);
  } else if (kase == "nine-class") {
    verdict = check_weight_congruences(p, r);
  } else if (kase == "higher") {
    verdict = classify_higher_slope(p, r, resolve_v_floor());
  } else if (kase == "summary") {
    if (v && v->get_den() == 1) {
      long vi = floor_of(*v);
      if (vi == 1) {
        if (!a_unit)
          throw UsageError("classify: integer slope 1 needs --a-unit");
        verdict = classify_slope_one(p, r, *a_unit);
      } else {
        verdict.status = VerdictStatus::kOutOfTheoremRange;
        verdict.theorem_tag = "none";
        verdict.conditions.emplace_back("v", rat_str(*v));
        verdict.conditions.emplace_back(
            "v is an integer", "the non-integral-slope classification does not apply");
      }
    } else {
      verdict = classification_summary(p, r, resolve_v_floor());
    }
  } else {
    throw UsageError("classify: unknown --case (summary, slope-one, nine-class, higher)");
  }

  bool has_note = false;
  for (const auto& [name, value] : verdict.conditions)
    if (name == "small weight note") has_note = true;
  if (!has_note) {
    if (std::optional<std::string> note = small_case_note(p, r))
      verdict.conditions.emplace_back("small weight note", *note);
  }

  Json row;
  row["status"] = verdict_status_name(verdict.status);
  row["theorem_tag"] = verdict.theorem_tag;
  Json cands = Json::array();
  for (const std::string& c : verdict.candidates) cands.push_back(c);
  row["candidates"] = cands;
  Json conds = Json::array();
  for (const auto& [name, value] : verdict.conditions) {
    Json c;
    c["name"] = name;
    c["value"] = value;
    conds.push_back(c);
  }
  row["conditions"] = conds;
  out.report.results.push_back(row);

  out.report.text_lines.push_back(std::string("verdict: ") +
                                  verdict_status_name(verdict.status));
  out.report.text_lines.push_back("theorem: " + verdict.theorem_tag);
  if (verdict.candidates.empty()) {
    out.report.text_lines.push_back("candidates: (none)");
  } else {
    std::string line = "candidates: ";
    for (size_t i = 0; i < verdict.candidates.size(); ++i)
      line += (i ? " | " : "") + verdict.candidates[i];
    out.report.text_lines.push_back(line);
  }
  for (const auto& [name, value] : verdict.conditions)
    out.report.text_lines.push_back(name + ": " + value);
  out.report.status = "info";
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = {
      "lemmas", "psi",    "span",     "theta", "matrix",  "roots",
      "m-w",    "big-poly", "conjecture", "hyper", "classify"};
  return names;
}

CommandOutcome run_command(const CommandRequest& req) {
  auto t0 = std::chrono::steady_clock::now();
  CommandOutcome out;
  out.report.command = req.subcommand;
  for (const auto& [k, v] : req.params) out.report.params[k] = v;
  int jobs = req.jobs < 1 ? 1 : req.jobs;
  Params P(req.params);

  if (req.subcommand == "lemmas") {
    cmd_lemmas(P, jobs, out);
  } else if (req.subcommand == "psi") {
    cmd_psi(P, out);
  } else if (req.subcommand == "span") {
    cmd_span(P, out);
  } else if (req.subcommand == "theta") {
    cmd_theta(P, out);
  } else if (req.subcommand == "matrix") {
    cmd_matrix(P, out);
  } else if (req.subcommand == "roots") {
    cmd_roots(P, out);
  } else if (req.subcommand == "m-w") {
    cmd_m_w(P, out);
  } else if (req.subcommand == "big-poly") {
    cmd_big_poly(P, out);
  } else if (req.subcommand == "conjecture") {
    cmd_conjecture(P, out);
  } else if (req.subcommand == "hyper") {
    cmd_hyper(P, out);
  } else if (req.subcommand == "classify") {
    cmd_classify(P, out);
  } else {
    throw UsageError("unknown subcommand '" + req.subcommand + "'");
  }

  auto t1 = std::chrono::steady_clock::now();
  out.report.timing_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
  return out;
}

}  // namespace ts
