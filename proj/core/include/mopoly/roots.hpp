#ifndef MOPOLY_ROOTS_HPP
#define MOPOLY_ROOTS_HPP

#include <vector>

#include "mopoly/poly.hpp"

namespace mopoly {

// Open interval with rational endpoints. Wherever an Interval isolates a
// root, the endpoints themselves are never roots of that polynomial.
struct Interval {
  Interval(Rational lo_, Rational hi_);

  Rational lo;
  Rational hi;

  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / 2; }
  bool contains(const Rational& x) const { return lo < x && x < hi; }
};

// Sturm sequence of the squarefree part of p: the polynomial, its
// derivative, then negated Euclidean remainders down to a constant.
struct SturmChain {
  Poly squarefree;
  std::vector<Poly> chain;

  int variations_at(const Rational& x) const;
  int variations_at_neg_inf() const;
  int variations_at_pos_inf() const;
};

SturmChain sturm_chain(const Poly& p);  // throws ContractError on zero p

// Exact number of distinct real roots (Sturm's theorem). Interval
// endpoints must not be roots; that case throws ContractError so the
// caller can perturb the rational endpoint.
int count_roots(const SturmChain& chain);  // whole real line
int count_roots(const SturmChain& chain, const Interval& iv);
int count_roots(const Poly& p);
int count_roots(const Poly& p, const Interval& iv);

// Cauchy bound 1 + max|c_i| / |c_lead|, rounded up to the next integer;
// every real root lies strictly inside (-bound, bound).
Integer root_bound(const Poly& p);

// Sorted pairwise-disjoint intervals, one per distinct real root of p.
std::vector<Interval> isolate_roots(const Poly& p);

// Bisect iv until its width is <= target. iv must isolate exactly one
// root of p and target must be > 0. Deterministic.
Interval refine_root(const Poly& p, Interval iv, const Rational& target);

}  // namespace mopoly

#endif
