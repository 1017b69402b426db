// mopoly: exact construction, verification, and zero-interlacing decisions
// for type II multiple orthogonal polynomials.

#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "mopoly/error.hpp"
#include "mopoly/families.hpp"
#include "mopoly/interlacing.hpp"
#include "mopoly/lattice.hpp"
#include "mopoly/multi_index.hpp"
#include "mopoly/oracle.hpp"
#include "mopoly/poly.hpp"
#include "mopoly/rational.hpp"
#include "mopoly/roots.hpp"

namespace {

using namespace mopoly;

constexpr const char* kScanHeader =
    "family,params,n,k,b,a_list,sum_a,real_simple,verdict";

struct Options {
  std::string family;
  std::vector<std::string> c, a, beta, p, alpha;
  long bigN = -1;
  std::vector<long> n;
  int k = 0;  // 1-based; 0 means "all" where a direction is optional
  long max_len = -1;
  std::string format = "table";
  std::string width = "1/1000000000000";
  unsigned long seed = 0;
  std::string inject;
  bool corrupt = false;
};

Rational parse_param(const std::string& text, const std::string& flag) {
  auto q = parse_rational(text);
  if (!q)
    throw DomainError("cannot parse " + flag + " value '" + text +
                      "' as a rational p/q");
  return *q;
}

std::vector<Rational> parse_params(const std::vector<std::string>& values,
                                   const std::string& flag) {
  std::vector<Rational> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(parse_param(v, flag));
  return out;
}

Rational parse_single(const std::vector<std::string>& values,
                      const std::string& flag) {
  if (values.size() != 1)
    throw DomainError(flag + " takes exactly one rational for this family");
  return parse_param(values[0], flag);
}

FamilySpec build_spec(const Options& o) {
  if (o.family.empty())
    throw DomainError("--family is required");
  if (o.family == "hermite") {
    if (o.c.empty()) throw DomainError("hermite requires --c");
    return Hermite{parse_params(o.c, "--c")};
  }
  if (o.family == "charlier") {
    if (o.a.empty()) throw DomainError("charlier requires --a");
    return Charlier{parse_params(o.a, "--a")};
  }
  if (o.family == "meixner1") {
    if (o.beta.empty() || o.c.empty())
      throw DomainError("meixner1 requires --beta and --c");
    return MeixnerFirst{parse_single(o.beta, "--beta"), parse_params(o.c, "--c")};
  }
  if (o.family == "krawtchouk") {
    if (o.p.empty() || o.bigN < 0)
      throw DomainError("krawtchouk requires --p and --bigN");
    return Krawtchouk{parse_params(o.p, "--p"), o.bigN};
  }
  if (o.family == "laguerre2") {
    if (o.alpha.empty() || o.c.empty())
      throw DomainError("laguerre2 requires --alpha and --c");
    return LaguerreSecond{parse_single(o.alpha, "--alpha"),
                          parse_params(o.c, "--c")};
  }
  if (o.family == "laguerre1") {
    if (o.alpha.empty()) throw DomainError("laguerre1 requires --alpha");
    return LaguerreFirst{parse_params(o.alpha, "--alpha")};
  }
  if (o.family == "meixner2") {
    if (o.c.empty() || o.beta.empty())
      throw DomainError("meixner2 requires --c and --beta");
    return MeixnerSecond{parse_single(o.c, "--c"), parse_params(o.beta, "--beta")};
  }
  throw DomainError("unknown family '" + o.family +
                    "' (expected hermite|charlier|meixner1|krawtchouk|"
                    "laguerre2|laguerre1|meixner2)");
}

FamilySpec checked_spec(const Options& o) {
  FamilySpec spec = build_spec(o);
  auto violations = validate(spec);
  if (!violations.empty()) {
    std::string msg = "invalid " + family_name(spec) + " parameters:";
    for (const auto& v : violations) msg += "\n  " + v;
    throw DomainError(msg);
  }
  return spec;
}

MultiIndex index_from(const Options& o, const FamilySpec& spec) {
  if (o.n.empty()) throw DomainError("--n is required for this command");
  MultiIndex n{o.n};
  if (n.r() != num_measures(spec))
    throw DomainError("--n has " + std::to_string(n.r()) +
                      " components, family has " +
                      std::to_string(num_measures(spec)));
  return n;
}

Rational display_width(const Options& o) {
  auto w = parse_rational(o.width);
  if (!w || *w <= 0)
    throw DomainError("--width must be a positive rational p/q");
  return *w;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += "\"\"";
    else out += ch;
  }
  out += "\"";
  return out;
}

std::string join_rationals(const std::vector<Rational>& v) {
  std::ostringstream out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out << ",";
    out << to_string(v[i]);
  }
  return out.str();
}

nlohmann::json json_index(const MultiIndex& n) {
  auto arr = nlohmann::json::array();
  for (long e : n.entries()) arr.push_back(e);
  return arr;
}

nlohmann::json json_rationals(const std::vector<Rational>& v) {
  auto arr = nlohmann::json::array();
  for (const auto& q : v) arr.push_back(to_string(q));
  return arr;
}

// Exact value with a decimal approximation certified to the given width.
std::string rat_with_approx(const Rational& v, const Rational& width) {
  return to_string(v) + " (~" + decimal_approx(v, width) + ")";
}

struct PolyTriple {
  Poly recurrence;
  Poly explicit_sum;
  Poly moments;
};

PolyTriple build_triple(const FamilySpec& spec, const MultiIndex& n) {
  FamilyCoefficients provider(spec);
  LatticeCache cache(provider);
  PolyTriple t;
  t.recurrence = cache.at(n);
  t.explicit_sum = explicit_polynomial(spec, n);
  t.moments = solve_from_moments(spec, n);
  return t;
}

int cmd_coeffs(const Options& o) {
  FamilySpec spec = checked_spec(o);
  MultiIndex n = index_from(o, spec);
  const int r = num_measures(spec);
  Rational width = display_width(o);

  std::vector<int> directions;
  if (o.k == 0) {
    for (int k = 0; k < r; ++k) directions.push_back(k);
  } else {
    if (o.k < 1 || o.k > r)
      throw DomainError("--k must lie in 1.." + std::to_string(r));
    directions.push_back(o.k - 1);
  }

  if (o.format == "csv") std::cout << kScanHeader << "\n";
  if (o.format == "table")
    std::cout << "coeffs " << family_name(spec) << " " << params_string(spec)
              << " n=" << to_string(n) << "\n";

  for (int k : directions) {
    NNCoefficients c = nn_coefficients(spec, n, k);
    Rational sum(0);
    for (const auto& a : c.a) sum += a;
    if (o.format == "table") {
      std::cout << "k=" << (k + 1) << ": b = " << rat_with_approx(c.b, width)
                << ", a = (" << join_rationals(c.a) << "), sum(a) = "
                << to_string(sum) << "\n";
    } else if (o.format == "csv") {
      std::cout << family_name(spec) << "," << csv_escape(params_string(spec))
                << "," << csv_escape(to_string(n)) << "," << (k + 1) << ","
                << to_string(c.b) << "," << csv_escape(join_rationals(c.a))
                << "," << to_string(sum) << ",,\n";
    } else {
      nlohmann::json row{{"family", family_name(spec)},
                         {"params", params_string(spec)},
                         {"n", json_index(n)},
                         {"k", k + 1},
                         {"b", to_string(c.b)},
                         {"a", json_rationals(c.a)},
                         {"sum_a", to_string(sum)}};
      std::cout << row.dump() << "\n";
    }
  }
  if (o.format == "table")
    std::cout << "decimals approximate the exact values within "
              << to_string(width) << "\n";
  return 0;
}

int cmd_poly(const Options& o) {
  FamilySpec spec = checked_spec(o);
  MultiIndex n = index_from(o, spec);
  PolyTriple t = build_triple(spec, n);
  if (!(t.recurrence == t.explicit_sum && t.recurrence == t.moments)) {
    std::cerr << "internal disagreement between construction routes at n="
              << to_string(n) << "\n";
    return 1;
  }
  const Poly& P = t.recurrence;
  std::vector<Rational> coeffs = P.coeffs();
  if (coeffs.empty()) coeffs.push_back(Rational(0));

  if (o.format == "table") {
    std::cout << "P_" << to_string(n) << " = " << to_string(P) << "\n";
    std::cout << "coefficients (ascending): " << join_rationals(coeffs) << "\n";
    std::cout << "agreement: recurrence = explicit sum = moment solve\n";
  } else if (o.format == "csv") {
    std::cout << "family,params,n,degree,coeffs\n";
    std::cout << family_name(spec) << "," << csv_escape(params_string(spec))
              << "," << csv_escape(to_string(n)) << "," << P.degree() << ","
              << csv_escape(join_rationals(coeffs)) << "\n";
  } else {
    nlohmann::json row{{"family", family_name(spec)},
                       {"params", params_string(spec)},
                       {"n", json_index(n)},
                       {"degree", P.degree()},
                       {"coeffs", json_rationals(coeffs)},
                       {"agreement", "recurrence=explicit=moments"}};
    std::cout << row.dump() << "\n";
  }
  return 0;
}

int cmd_zeros(const Options& o) {
  FamilySpec spec = checked_spec(o);
  MultiIndex n = index_from(o, spec);
  Rational width = display_width(o);
  FamilyCoefficients provider(spec);
  LatticeCache cache(provider);
  const Poly& P = cache.at(n);
  ZeroSet zs = zero_set(P);

  // Total certified error: refined interval midpoint is within width/4 of
  // the zero, the printed decimal within width/2 of the midpoint.
  Rational target = width / 2;
  std::vector<Interval> refined;
  std::vector<std::string> approx;
  for (const auto& iv : zs.intervals) {
    Interval fine = refine_root(P, iv, target);
    approx.push_back(decimal_approx(fine.midpoint(), width / 2));
    refined.push_back(fine);
  }

  if (o.format == "table") {
    std::cout << "P_" << to_string(n) << " = " << to_string(P) << "\n";
    std::cout << "zeros real and simple: " << (zs.real_simple ? "yes" : "no")
              << " (" << refined.size() << " real, degree " << P.degree()
              << ")\n";
    for (size_t i = 0; i < refined.size(); ++i)
      std::cout << "zero " << (i + 1) << ": in (" << to_string(refined[i].lo)
                << ", " << to_string(refined[i].hi) << ") ~ " << approx[i]
                << "\n";
    std::cout << "decimals approximate the exact zeros within "
              << to_string(width) << "\n";
  } else if (o.format == "csv") {
    std::cout << "family,params,n,root,lo,hi,approx\n";
    for (size_t i = 0; i < refined.size(); ++i)
      std::cout << family_name(spec) << "," << csv_escape(params_string(spec))
                << "," << csv_escape(to_string(n)) << "," << (i + 1) << ","
                << to_string(refined[i].lo) << "," << to_string(refined[i].hi)
                << "," << approx[i] << "\n";
  } else {
    for (size_t i = 0; i < refined.size(); ++i) {
      nlohmann::json row{{"family", family_name(spec)},
                         {"params", params_string(spec)},
                         {"n", json_index(n)},
                         {"root", i + 1},
                         {"lo", to_string(refined[i].lo)},
                         {"hi", to_string(refined[i].hi)},
                         {"approx", approx[i]},
                         {"real_simple", zs.real_simple}};
      std::cout << row.dump() << "\n";
    }
  }
  return 0;
}

int exit_code_for(InterlaceVerdict v) {
  switch (v) {
    case InterlaceVerdict::interlace: return 0;
    case InterlaceVerdict::fail: return 2;
    case InterlaceVerdict::shared_root: return 3;
  }
  return 2;
}

int report_interlace(const std::string& family, const std::string& params,
                     const std::string& pair, const InterlacingReport& report,
                     const Options& o) {
  if (o.format == "table") {
    std::cout << "interlace " << family;
    if (!params.empty()) std::cout << " " << params;
    std::cout << ": " << pair << "\n";
    std::cout << "verdict: " << to_string(report.verdict) << "\n";
    if (!report.detail.empty()) std::cout << "detail: " << report.detail << "\n";
    if (!report.witness.empty()) {
      std::cout << "zero intervals (ascending; Q owns the higher degree):\n";
      for (size_t i = 0; i < report.witness.size(); ++i)
        std::cout << "  " << (i + 1) << ". " << report.witness[i].owner
                  << " in (" << to_string(report.witness[i].iv.lo) << ", "
                  << to_string(report.witness[i].iv.hi) << ")\n";
    }
  } else if (o.format == "csv") {
    std::cout << "family,params,pair,verdict,detail\n";
    std::cout << family << "," << csv_escape(params) << "," << csv_escape(pair)
              << "," << to_string(report.verdict) << ","
              << csv_escape(report.detail) << "\n";
  } else {
    auto marks = nlohmann::json::array();
    for (const auto& m : report.witness)
      marks.push_back({{"owner", std::string(1, m.owner)},
                       {"lo", to_string(m.iv.lo)},
                       {"hi", to_string(m.iv.hi)}});
    nlohmann::json row{{"family", family},
                       {"params", params},
                       {"pair", pair},
                       {"verdict", to_string(report.verdict)},
                       {"detail", report.detail},
                       {"witness", marks}};
    std::cout << row.dump() << "\n";
  }
  return exit_code_for(report.verdict);
}

int cmd_interlace(const Options& o) {
  if (!o.inject.empty()) {
    // Debug-only negative controls with constructed polynomials.
    Poly q({Rational(-1), Rational(0), Rational(1)});  // x^2 - 1
    Poly p = o.inject == "fail" ? Poly({Rational(-2), Rational(1)})
                                : Poly({Rational(-1), Rational(1)});
    return report_interlace("injected", "", to_string(p) + " vs " + to_string(q),
                            interlace(p, q), o);
  }
  FamilySpec spec = checked_spec(o);
  MultiIndex n = index_from(o, spec);
  const int r = num_measures(spec);
  int k = o.k == 0 ? 0 : o.k - 1;
  if (k < 0 || k >= r)
    throw DomainError("--k must lie in 1.." + std::to_string(r));
  FamilyCoefficients provider(spec);
  LatticeCache cache(provider);
  const Poly& P = cache.at(n);
  const Poly& Q = cache.at(n.plus(k));
  std::string pair =
      "P_" + to_string(n) + " vs P_" + to_string(n.plus(k));
  return report_interlace(family_name(spec), params_string(spec), pair,
                          interlace(P, Q), o);
}

int cmd_scan(const Options& o) {
  FamilySpec spec = checked_spec(o);
  if (o.max_len < 0) throw DomainError("--max-len is required for scan");
  if (const auto* kr = std::get_if<Krawtchouk>(&spec)) {
    if (o.max_len > kr->N)
      throw DomainError("scan max-len " + std::to_string(o.max_len) +
                        " exceeds N = " + std::to_string(kr->N) +
                        ": indices above N are outside the family's range");
  }
  ScanReport rep = lattice_scan(spec, o.max_len);

  auto row_cells = [&](const ScanRow& row) {
    std::ostringstream line;
    line << family_name(spec) << "," << csv_escape(params_string(spec)) << ","
         << csv_escape(to_string(row.n)) << "," << (row.k + 1) << ",";
    if (row.error.empty()) {
      line << to_string(row.coeffs.b) << ","
           << csv_escape(join_rationals(row.coeffs.a)) << ","
           << to_string(row.sum_a) << ","
           << (row.real_simple ? "true" : "false") << ","
           << to_string(row.verdict);
    } else {
      line << ",,,," << csv_escape("error: " + row.error);
    }
    return line.str();
  };

  std::ostringstream footer;
  footer << "negative a present: " << (rep.any_negative_a ? "yes" : "no")
         << "; sum(a)>0: " << (rep.all_sums_positive ? "all" : "not all")
         << "; real and simple: " << (rep.all_real_simple ? "all" : "not all")
         << "; interlacing: " << (rep.all_interlace ? "all" : "not all")
         << "; errors: " << rep.errors.size();

  if (o.format == "csv") {
    std::cout << kScanHeader << "\n";
    for (const auto& row : rep.rows) std::cout << row_cells(row) << "\n";
    std::cerr << footer.str() << "\n";
  } else if (o.format == "jsonl") {
    for (const auto& row : rep.rows) {
      nlohmann::json obj{{"family", family_name(spec)},
                         {"params", params_string(spec)},
                         {"n", json_index(row.n)},
                         {"k", row.k + 1}};
      if (row.error.empty()) {
        obj["b"] = to_string(row.coeffs.b);
        obj["a"] = json_rationals(row.coeffs.a);
        obj["sum_a"] = to_string(row.sum_a);
        obj["real_simple"] = row.real_simple;
        obj["verdict"] = to_string(row.verdict);
      } else {
        obj["error"] = row.error;
      }
      std::cout << obj.dump() << "\n";
    }
    nlohmann::json summary{{"summary",
                            {{"negative_a_present", rep.any_negative_a},
                             {"all_sums_positive", rep.all_sums_positive},
                             {"all_real_simple", rep.all_real_simple},
                             {"all_interlace", rep.all_interlace},
                             {"errors", rep.errors.size()}}}};
    std::cout << summary.dump() << "\n";
  } else {
    std::cout << "scan " << family_name(spec) << " " << params_string(spec)
              << " max_len=" << o.max_len << "\n";
    std::cout << kScanHeader << "\n";
    for (const auto& row : rep.rows) std::cout << row_cells(row) << "\n";
    std::cout << footer.str() << "\n";
  }
  return 0;
}

// Corruption hook for the verify negative control: one perturbed b at the
// origin, direction 1.
class CorruptedProvider : public NNProvider {
 public:
  explicit CorruptedProvider(const NNProvider& base) : base_(base) {}
  int r() const override { return base_.r(); }
  NNCoefficients nn(const MultiIndex& m, int k) const override {
    NNCoefficients c = base_.nn(m, k);
    if (m.length() == 0 && k == 0) c.b += Rational(1, 7);
    return c;
  }

 private:
  const NNProvider& base_;
};

int cmd_verify(const Options& o) {
  FamilySpec spec = checked_spec(o);
  long max_len = o.max_len < 0 ? 6 : o.max_len;
  const int r = num_measures(spec);
  if (const auto* kr = std::get_if<Krawtchouk>(&spec)) {
    if (max_len + 1 > kr->N)
      throw DomainError("verify needs neighbor indices: choose max-len at most " +
                        std::to_string(kr->N - 1) + " for N = " +
                        std::to_string(kr->N));
  }

  FamilyCoefficients family_provider(spec);
  CorruptedProvider corrupted(family_provider);
  const NNProvider& provider =
      o.corrupt ? static_cast<const NNProvider&>(corrupted) : family_provider;
  LatticeCache cache(provider);

  std::cout << "verify " << family_name(spec) << " " << params_string(spec)
            << " max_len=" << max_len << (o.corrupt ? " (corrupted)" : "")
            << "\n";

  auto fail = [](const std::string& what) {
    std::cout << "FAIL: " << what << "\n";
    std::cout << "verify: FAIL\n";
    return 1;
  };

  auto indices = lattice_below(r, max_len);

  for (const auto& n : indices) {
    if (!check_normality(spec, n))
      return fail("index not normal at n=" + to_string(n) +
                  "; halting this branch");
    const Poly& built = cache.at(n);
    if (!built.is_monic() || built.degree() != n.length())
      return fail("recurrence build not monic of degree |n| at n=" + to_string(n));
    Poly expl = explicit_polynomial(spec, n);
    if (!(built == expl))
      return fail("recurrence build disagrees with explicit sum at n=" +
                  to_string(n));
    Poly solved = solve_from_moments(spec, n);
    if (!(built == solved))
      return fail("recurrence build disagrees with moment solve at n=" +
                  to_string(n));
    if (!verify_orthogonality(spec, n, built))
      return fail("orthogonality conditions violated at n=" + to_string(n));
  }
  std::cout << "  construction agreement and orthogonality: " << indices.size()
            << " indices ok\n";

  for (const auto& n : indices) {
    for (int k = 0; k < r; ++k) {
      NNCoefficients closed = provider.nn(n, k);
      Rational b = b_from_polynomials(cache.at(n), cache.at(n.plus(k)));
      if (b != closed.b)
        return fail("closed-form b differs from polynomial comparison at n=" +
                    to_string(n) + " k=" + std::to_string(k + 1));
      for (int j = 0; j < r; ++j) {
        if (n[j] < 1) continue;
        Rational a = a_from_integrals(spec, n, j, cache.at(n), cache.at(*n.minus(j)));
        if (a != closed.a[static_cast<size_t>(j)])
          return fail("closed-form a differs from integral quotient at n=" +
                      to_string(n) + " j=" + std::to_string(j + 1));
      }
    }
  }
  std::cout << "  coefficient closure (integral quotients, degree drop): ok\n";

  for (const auto& n : indices) {
    if (n.length() >= 2 &&
        !check_path_independence(provider, n, 100, 100, o.seed))
      return fail("path independence violated at n=" + to_string(n));
    for (int k = 0; k < r; ++k)
      for (int l = k + 1; l < r; ++l)
        if (!compatibility_identity(provider, n, k, l))
          return fail("compatibility identity violated at n=" + to_string(n) +
                      " (k=" + std::to_string(k + 1) + ", l=" +
                      std::to_string(l + 1) + ")");
  }
  std::cout << "  path independence and compatibility: ok\n";

  {
    auto seq = step_line_sequence(provider, max_len);
    auto coeffs = extract_step_line_coefficients(seq, r);
    auto regen = regenerate_step_line(coeffs, r);
    if (!(seq == regen))
      return fail("step-line coefficients do not regenerate the sequence");
    std::cout << "  step-line extraction round trip (m=" << max_len << "): ok\n";
  }

  long pairs = 0;
  for (const auto& n : indices) {
    const Poly& pn = cache.at(n);
    ZeroSet zs = zero_set(pn);
    if (!zs.real_simple)
      return fail("zeros not all real and simple at n=" + to_string(n));
    bool nonneg = true;
    bool positive = false;
    NNCoefficients c = provider.nn(n, 0);
    for (int j = 0; j < r; ++j) {
      if (c.a[static_cast<size_t>(j)] < 0) nonneg = false;
      if (c.a[static_cast<size_t>(j)] > 0) positive = true;
    }
    for (int k = 0; k < r; ++k) {
      auto rep = interlace(pn, cache.at(n.plus(k)));
      if (rep.verdict != InterlaceVerdict::interlace)
        return fail("interlacing fails at n=" + to_string(n) + " k=" +
                    std::to_string(k + 1) + " (" + to_string(rep.verdict) +
                    (rep.detail.empty() ? "" : ": " + rep.detail) + ")");
      ++pairs;
      if (nonneg && positive) {
        SignTrace trace = sign_trace(pn, cache.at(n.plus(k)));
        if (!trace.alternates)
          return fail("sign trace does not alternate at n=" + to_string(n) +
                      " k=" + std::to_string(k + 1));
      }
    }
  }
  std::cout << "  zeros real and simple, interlacing, sign traces: " << pairs
            << " neighbor pairs ok\n";

  std::cout << "verify: PASS\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact multiple orthogonal polynomials: construction, "
               "verification, and zero interlacing"};
  app.require_subcommand(1);
  Options o;

  app.add_option("--family", o.family,
                 "hermite|charlier|meixner1|krawtchouk|laguerre2|laguerre1|"
                 "meixner2");
  app.add_option("--c", o.c, "rational parameter list c (comma-separated)")
      ->delimiter(',');
  app.add_option("--a", o.a, "rational parameter list a (comma-separated)")
      ->delimiter(',');
  app.add_option("--beta", o.beta, "rational parameter(s) beta")->delimiter(',');
  app.add_option("--p", o.p, "rational parameter list p (comma-separated)")
      ->delimiter(',');
  app.add_option("--alpha", o.alpha, "rational parameter(s) alpha")
      ->delimiter(',');
  app.add_option("--bigN", o.bigN, "Krawtchouk range bound N");
  app.add_option("--n", o.n, "multi-index, comma-separated non-negative integers")
      ->delimiter(',');
  app.add_option("--k", o.k, "direction, 1-based (coeffs: omit for all)");
  app.add_option("--max-len", o.max_len, "bound on |n| for scan/verify");
  app.add_option("--format", o.format, "table|csv|jsonl")
      ->check(CLI::IsMember({"table", "csv", "jsonl"}));
  app.add_option("--width", o.width,
                 "certified width for printed decimals, rational p/q");
  app.add_option("--seed", o.seed, "seed for sampled path-independence checks");
  app.set_config("--config", "", "flat key=value file mirroring the flags");

  auto* coeffs =
      app.add_subcommand("coeffs", "closed-form recurrence coefficients at n");
  auto* poly = app.add_subcommand(
      "poly", "P_n built three ways (recurrence, explicit sum, moment solve)");
  auto* zeros = app.add_subcommand("zeros", "isolated real zeros of P_n");
  auto* interlace_cmd = app.add_subcommand(
      "interlace", "exact interlacing verdict for P_n vs P_{n+e_k}");
  auto* scan = app.add_subcommand(
      "scan", "coefficient signs and interlacing verdicts over |n| <= max-len");
  auto* verify = app.add_subcommand(
      "verify", "cross-oracle identity and interlacing suite up to max-len");

  interlace_cmd
      ->add_option("--inject", o.inject,
                   "debug: replace the pair by a constructed control")
      ->check(CLI::IsMember({"fail", "shared"}));
  verify->add_flag("--corrupt", o.corrupt,
                   "debug: perturb one recurrence coefficient");

  for (auto* sub : {coeffs, poly, zeros, interlace_cmd, scan, verify})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (app.got_subcommand(coeffs)) return cmd_coeffs(o);
    if (app.got_subcommand(poly)) return cmd_poly(o);
    if (app.got_subcommand(zeros)) return cmd_zeros(o);
    if (app.got_subcommand(interlace_cmd)) return cmd_interlace(o);
    if (app.got_subcommand(scan)) return cmd_scan(o);
    if (app.got_subcommand(verify)) return cmd_verify(o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "unexpected error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
