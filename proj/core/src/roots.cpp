#include "mopoly/roots.hpp"

#include <algorithm>

#include "mopoly/error.hpp"

namespace mopoly {

Interval::Interval(Rational lo_, Rational hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
  if (lo >= hi) throw ContractError("Interval: requires lo < hi");
}

namespace {

int sign_of(const Rational& q) {
  if (q > 0) return 1;
  if (q < 0) return -1;
  return 0;
}

// Sign of p at +inf (leading coefficient) or -inf (flipped on odd degree).
int sign_at_inf(const Poly& p, bool positive) {
  if (p.is_zero()) return 0;
  int s = sign_of(p.leading());
  if (!positive && p.degree() % 2 != 0) s = -s;
  return s;
}

int count_variations(const std::vector<int>& signs) {
  int count = 0;
  int prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

}  // namespace

int SturmChain::variations_at(const Rational& x) const {
  std::vector<int> signs;
  signs.reserve(chain.size());
  for (const Poly& p : chain) signs.push_back(sign_of(p(x)));
  return count_variations(signs);
}

int SturmChain::variations_at_neg_inf() const {
  std::vector<int> signs;
  signs.reserve(chain.size());
  for (const Poly& p : chain) signs.push_back(sign_at_inf(p, false));
  return count_variations(signs);
}

int SturmChain::variations_at_pos_inf() const {
  std::vector<int> signs;
  signs.reserve(chain.size());
  for (const Poly& p : chain) signs.push_back(sign_at_inf(p, true));
  return count_variations(signs);
}

SturmChain sturm_chain(const Poly& p) {
  if (p.is_zero()) throw ContractError("sturm_chain: zero polynomial");
  SturmChain sc;
  sc.squarefree = squarefree_part(p);
  sc.chain.push_back(sc.squarefree);
  if (sc.squarefree.degree() >= 1) {
    sc.chain.push_back(sc.squarefree.derivative());
    while (sc.chain.back().degree() >= 1) {
      const Poly& a = sc.chain[sc.chain.size() - 2];
      const Poly& b = sc.chain.back();
      Poly r = divrem(a, b).rem;
      if (r.is_zero()) break;
      sc.chain.push_back(-r);
    }
  }
  return sc;
}

int count_roots(const SturmChain& sc) {
  return sc.variations_at_neg_inf() - sc.variations_at_pos_inf();
}

int count_roots(const Poly& p) { return count_roots(sturm_chain(p)); }

int count_roots(const SturmChain& sc, const Interval& iv) {
  if (sc.squarefree(iv.lo) == 0 || sc.squarefree(iv.hi) == 0)
    throw ContractError("count_roots: interval endpoint is a root");
  return sc.variations_at(iv.lo) - sc.variations_at(iv.hi);
}

int count_roots(const Poly& p, const Interval& iv) {
  return count_roots(sturm_chain(p), iv);
}

Integer root_bound(const Poly& p) {
  if (p.is_zero()) throw ContractError("root_bound: zero polynomial");
  Rational lead = abs(Rational(p.leading()));
  Rational max_ratio(0);
  for (int i = 0; i < p.degree(); ++i) {
    Rational ratio = abs(Rational(p.coeff(i))) / lead;
    if (ratio > max_ratio) max_ratio = ratio;
  }
  Rational bound = 1 + max_ratio;
  Integer ceil_bound;
  mpz_cdiv_q(ceil_bound.get_mpz_t(), bound.get_num().get_mpz_t(),
             bound.get_den().get_mpz_t());
  return ceil_bound;
}

namespace {

// Recursive bisection over (lo, hi) whose endpoints are not roots of sc.squarefree.
void isolate_range(const SturmChain& sc, const Rational& lo, const Rational& hi,
                   std::vector<Interval>& out) {
  int n = sc.variations_at(lo) - sc.variations_at(hi);
  if (n == 0) return;
  if (n == 1) {
    out.emplace_back(lo, hi);
    return;
  }
  Rational mid = (lo + hi) / 2;
  if (sc.squarefree(mid) == 0) {
    // Put the midpoint root inside a subinterval clear of other roots; quarters
    // of a squarefree polynomial's gap to neighboring roots shrink to admissible
    // endpoints after finitely many halvings.
    Rational delta = (hi - lo) / 4;
    while (sc.squarefree(mid - delta) == 0 || sc.squarefree(mid + delta) == 0 ||
           count_roots(sc, Interval(mid - delta, mid + delta)) != 1)
      delta /= 2;
    out.emplace_back(mid - delta, mid + delta);
    isolate_range(sc, lo, mid - delta, out);
    isolate_range(sc, mid + delta, hi, out);
    return;
  }
  isolate_range(sc, lo, mid, out);
  isolate_range(sc, mid, hi, out);
}

}  // namespace

std::vector<Interval> isolate_roots(const Poly& p) {
  if (p.is_zero()) throw ContractError("isolate_roots: zero polynomial");
  if (p.degree() == 0) return {};
  SturmChain sc = sturm_chain(p);
  Integer bound = root_bound(sc.squarefree);
  Rational lo = Rational(-bound);
  Rational hi = Rational(bound);
  // Cauchy bound is strict, so +-bound are never roots.
  std::vector<Interval> out;
  isolate_range(sc, lo, hi, out);
  std::sort(out.begin(), out.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  return out;
}

Interval refine_root(const Poly& p, Interval iv, const Rational& target_width) {
  if (target_width <= 0) throw ContractError("refine_root: target width must be > 0");
  SturmChain sc = sturm_chain(p);
  if (count_roots(sc, iv) != 1)
    throw ContractError("refine_root: interval does not isolate one root");
  Rational lo = iv.lo;
  Rational hi = iv.hi;
  while (hi - lo > target_width) {
    Rational mid = (lo + hi) / 2;
    if (sc.squarefree(mid) == 0) {
      // Root hit exactly: shrink to a third-width window around it, keeping
      // endpoints off the root.
      Rational w = hi - lo;
      Rational third = w / 3;
      lo = mid - third;
      hi = mid + third;
      while (hi - lo > target_width) {
        third /= 3;
        lo = mid - third;
        hi = mid + third;
      }
      return Interval(lo, hi);
    }
    if (sc.variations_at(lo) - sc.variations_at(mid) == 1)
      hi = mid;
    else
      lo = mid;
  }
  return Interval(lo, hi);
}

}  // namespace mopoly
