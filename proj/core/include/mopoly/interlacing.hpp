#pragma once

#include <string>
#include <vector>

#include "mopoly/families.hpp"
#include "mopoly/multi_index.hpp"
#include "mopoly/poly.hpp"
#include "mopoly/rational.hpp"
#include "mopoly/roots.hpp"

namespace mopoly {

// Real zeros of a polynomial as sorted disjoint isolating intervals, plus the
// verdict on the "all zeros real and simple" hypothesis (interval count equals
// degree and the polynomial is squarefree).
struct ZeroSet {
  Poly poly;
  std::vector<Interval> intervals;
  bool real_simple = false;
};

ZeroSet zero_set(const Poly& P);

enum class InterlaceVerdict { interlace, fail, shared_root };

std::string to_string(InterlaceVerdict v);

// Merged ordered root intervals labeled by owner: 'P' for the lower-degree
// polynomial, 'Q' for the higher. Interlacing means the labels read
// Q, P, Q, ..., P, Q.
struct InterlacingReport {
  InterlaceVerdict verdict = InterlaceVerdict::fail;
  struct Mark {
    Interval iv;
    char owner;
  };
  std::vector<Mark> witness;
  std::string detail;  // on failure, where the pattern broke
};

// Exact interlacing decision for deg Q = deg P + 1. A non-constant gcd yields
// the shared_root verdict; otherwise both zero sets are refined by bisection
// until every pair of intervals is disjoint, then merged and tested for
// strict alternation. Never consults floating point.
InterlacingReport interlace(const Poly& P, const Poly& Q);

// Signs of Q at the ascending zeros x_1 < ... < x_m of P, each determined
// exactly by refining the isolating interval until Q has constant sign on it.
// alternates reports whether sign Q(x_i) = (-1)^(m-i+1), the pattern that
// drives the inductive interlacing argument (negative at the largest zero).
struct SignTrace {
  std::vector<Interval> zeros;
  std::vector<int> signs;
  bool alternates = false;
};

// Requires P real-simple and gcd(P, Q) constant.
SignTrace sign_trace(const Poly& P, const Poly& Q);

// Trace for the lattice neighbors P_n and P_{n+e_k} of a family.
SignTrace sign_trace(const FamilySpec& spec, const MultiIndex& n, int k);

// One scan row per (index, direction) pair: the closed-form coefficients at
// n, their sum, whether P_n has all zeros real and simple, and the exact
// interlacing verdict against P_{n+e_k}. A row that cannot be evaluated
// (e.g. outside a finite family's degree range) carries the error text
// instead of aborting the scan.
struct ScanRow {
  MultiIndex n = MultiIndex::zeros(1);
  int k = 0;
  NNCoefficients coeffs;
  Rational sum_a;
  bool real_simple = false;
  InterlaceVerdict verdict = InterlaceVerdict::fail;
  std::string error;
};

struct ScanReport {
  std::vector<ScanRow> rows;
  bool any_negative_a = false;   // some a_{n,j} < 0 with n_j > 0
  bool all_sums_positive = true; // sum_j a_{n,j} > 0 at every index with |n| >= 1
  bool all_real_simple = true;
  bool all_interlace = true;
  std::vector<std::string> errors;
};

// Coefficient-sign hypothesis and interlacing conclusion, recorded side by
// side for every index with |n| <= max_len and every direction.
ScanReport lattice_scan(const FamilySpec& spec, long max_len);

}  // namespace mopoly
