#include "mopoly/interlacing.hpp"

#include <algorithm>
#include <map>

#include "mopoly/error.hpp"
#include "mopoly/lattice.hpp"

namespace mopoly {

namespace {

int sign_of(const Rational& q) {
  if (q > 0) return 1;
  if (q < 0) return -1;
  return 0;
}

// One bisection step on an interval whose interior holds exactly one simple
// root of p and whose endpoints are not roots. An exact hit at the midpoint
// shrinks to a symmetric window around it, which stays root-free at the
// endpoints because the midpoint was the only root inside.
void bisect_once(const Poly& p, Interval& iv) {
  Rational mid = iv.midpoint();
  Rational v = p(mid);
  if (v == 0) {
    Rational left = mid - iv.lo;
    Rational right = iv.hi - mid;
    Rational delta = (left < right ? left : right) / 2;
    iv = Interval(mid - delta, mid + delta);
    return;
  }
  if (sign_of(v) == sign_of(p(iv.lo)))
    iv = Interval(mid, iv.hi);
  else
    iv = Interval(iv.lo, mid);
}

bool overlap(const Interval& a, const Interval& b) {
  return a.lo < b.hi && b.lo < a.hi;
}

}  // namespace

ZeroSet zero_set(const Poly& P) {
  if (P.is_zero()) throw ContractError("zero_set: zero polynomial");
  ZeroSet out;
  out.poly = P;
  if (P.degree() == 0) {
    out.real_simple = true;
    return out;
  }
  out.intervals = isolate_roots(P);
  // Distinct real roots can reach the degree only when every zero is real
  // and simple.
  out.real_simple = static_cast<int>(out.intervals.size()) == P.degree();
  return out;
}

std::string to_string(InterlaceVerdict v) {
  switch (v) {
    case InterlaceVerdict::interlace: return "interlace";
    case InterlaceVerdict::fail: return "fail";
    case InterlaceVerdict::shared_root: return "shared_root";
  }
  return "fail";
}

InterlacingReport interlace(const Poly& P, const Poly& Q) {
  if (P.is_zero() || Q.is_zero())
    throw ContractError("interlace: zero polynomial");
  if (Q.degree() != P.degree() + 1)
    throw ContractError("interlace: requires deg Q = deg P + 1");

  InterlacingReport report;
  Poly g = gcd(P, Q);
  if (g.degree() >= 1) {
    report.verdict = InterlaceVerdict::shared_root;
    report.detail = "common factor " + to_string(g);
    return report;
  }

  ZeroSet zp = zero_set(P);
  ZeroSet zq = zero_set(Q);
  if (!zp.real_simple) {
    report.verdict = InterlaceVerdict::fail;
    report.detail = "lower-degree polynomial does not have all zeros real and simple";
    return report;
  }
  if (!zq.real_simple) {
    report.verdict = InterlaceVerdict::fail;
    report.detail = "higher-degree polynomial does not have all zeros real and simple";
    return report;
  }

  // The polynomials share no root, so refining both zero sets eventually
  // separates every cross pair.
  bool any;
  do {
    any = false;
    for (auto& a : zp.intervals)
      for (auto& b : zq.intervals)
        if (overlap(a, b)) {
          any = true;
          bisect_once(P, a);
          bisect_once(Q, b);
        }
  } while (any);

  for (const auto& iv : zp.intervals) report.witness.push_back({iv, 'P'});
  for (const auto& iv : zq.intervals) report.witness.push_back({iv, 'Q'});
  std::sort(report.witness.begin(), report.witness.end(),
            [](const InterlacingReport::Mark& x, const InterlacingReport::Mark& y) {
              return x.iv.lo < y.iv.lo;
            });

  for (size_t i = 0; i < report.witness.size(); ++i) {
    char expected = (i % 2 == 0) ? 'Q' : 'P';
    if (report.witness[i].owner != expected) {
      report.verdict = InterlaceVerdict::fail;
      report.detail = "alternation breaks at position " + std::to_string(i + 1) +
                      ": expected " + expected + ", found " +
                      report.witness[i].owner;
      return report;
    }
  }
  report.verdict = InterlaceVerdict::interlace;
  return report;
}

SignTrace sign_trace(const Poly& P, const Poly& Q) {
  if (P.is_zero() || Q.is_zero())
    throw ContractError("sign_trace: zero polynomial");
  if (gcd(P, Q).degree() >= 1)
    throw ContractError("sign_trace: polynomials share a root");
  ZeroSet zp = zero_set(P);
  if (!zp.real_simple)
    throw ContractError("sign_trace: zeros not all real and simple");

  SignTrace trace;
  SturmChain q_chain = sturm_chain(Q);
  for (Interval iv : zp.intervals) {
    // Shrink around the root of P until Q is root-free on the closed
    // interval; its sign there is then constant and equals the sign at the
    // root. Termination: the root of P is not a root of Q.
    while (true) {
      if (Q(iv.lo) != 0 && Q(iv.hi) != 0 && count_roots(q_chain, iv) == 0)
        break;
      bisect_once(P, iv);
    }
    trace.signs.push_back(sign_of(Q(iv.lo)));
    trace.zeros.push_back(iv);
  }

  const size_t m = trace.signs.size();
  trace.alternates = true;
  for (size_t i = 0; i < m; ++i) {
    int expected = ((m - i) % 2 == 0) ? 1 : -1;
    if (trace.signs[i] != expected) {
      trace.alternates = false;
      break;
    }
  }
  return trace;
}

SignTrace sign_trace(const FamilySpec& spec, const MultiIndex& n, int k) {
  FamilyCoefficients provider(spec);
  LatticeCache cache(provider);
  const Poly& P = cache.at(n);
  const Poly& Q = cache.at(n.plus(k));
  return sign_trace(P, Q);
}

ScanReport lattice_scan(const FamilySpec& spec, long max_len) {
  if (max_len < 0) throw ContractError("lattice_scan: negative bound");
  FamilyCoefficients provider(spec);
  LatticeCache cache(provider);
  ScanReport report;
  std::map<MultiIndex, ZeroSet> zero_sets;

  for (const MultiIndex& n : lattice_below(provider.r(), max_len)) {
    for (int k = 0; k < provider.r(); ++k) {
      ScanRow row;
      row.n = n;
      row.k = k;
      try {
        row.coeffs = nn_coefficients(spec, n, k);
        row.sum_a = 0;
        for (const Rational& a : row.coeffs.a) row.sum_a += a;

        const Poly& pn = cache.at(n);
        auto it = zero_sets.find(n);
        if (it == zero_sets.end())
          it = zero_sets.emplace(n, zero_set(pn)).first;
        row.real_simple = it->second.real_simple;

        const Poly& q = cache.at(n.plus(k));
        row.verdict = interlace(pn, q).verdict;

        for (int j = 0; j < provider.r(); ++j)
          if (n[j] > 0 && row.coeffs.a[static_cast<size_t>(j)] < 0)
            report.any_negative_a = true;
        if (n.length() >= 1 && !(row.sum_a > 0)) report.all_sums_positive = false;
        if (!row.real_simple) report.all_real_simple = false;
        if (row.verdict != InterlaceVerdict::interlace) report.all_interlace = false;
      } catch (const Error& e) {
        row.error = e.what();
        report.errors.push_back(to_string(n) + " k=" + std::to_string(k + 1) +
                                ": " + e.what());
      }
      report.rows.push_back(std::move(row));
    }
  }
  return report;
}

}  // namespace mopoly
