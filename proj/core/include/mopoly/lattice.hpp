#pragma once

#include <map>
#include <vector>

#include "mopoly/multi_index.hpp"
#include "mopoly/poly.hpp"
#include "mopoly/rational.hpp"

namespace mopoly {

// Coefficients of the nearest-neighbor recurrence at index n, direction k:
//   x P_n = P_{n+e_k} + b P_n + sum_j a_j P_{n-e_j}.
// The a_j do not depend on k; a_j is stored as 0 when n_j = 0 (the neighbor
// below is the zero polynomial).
struct NNCoefficients {
  Rational b;
  std::vector<Rational> a;
};

// Source of recurrence coefficients over the lattice. Directions are 0-based.
class NNProvider {
 public:
  virtual ~NNProvider() = default;
  virtual int r() const = 0;
  virtual NNCoefficients nn(const MultiIndex& m, int k) const = 0;
};

// Memoized build over the lattice along the canonical coordinate-major path.
// Conventions baked into the recurrence step: P_0 = 1, P_m = 0 whenever any
// coordinate of m is negative. Grow-only; not safe for concurrent mutation,
// use one cache per thread.
class LatticeCache {
 public:
  explicit LatticeCache(const NNProvider& provider);

  const Poly& at(const MultiIndex& n);
  const NNProvider& provider() const { return provider_; }

 private:
  const NNProvider& provider_;
  std::map<MultiIndex, Poly> cache_;
};

Poly build_polynomial(const NNProvider& provider, const MultiIndex& n,
                      LatticeCache& cache);
Poly build_polynomial(const NNProvider& provider, const MultiIndex& n);

// True iff every monotone lattice path from 0 to n yields the identical
// polynomial. All paths are enumerated when their count is at most
// exhaustive_threshold; otherwise sample_count paths are drawn with the seed.
bool check_path_independence(const NNProvider& provider, const MultiIndex& n,
                             long exhaustive_threshold = 100,
                             long sample_count = 100,
                             unsigned long seed = 0);

// True iff P_{n+e_k} - P_{n+e_l} = (b_{n,l} - b_{n,k}) P_n exactly.
bool compatibility_identity(const NNProvider& provider, const MultiIndex& n,
                            int k, int l);

// Step-line multi-index for one-dimensional position m: writing m = q r + s
// with 0 <= s < r, the first s entries are q + 1 and the rest are q.
MultiIndex step_line_index(int r, long m);

// Step-line polynomials Q_0, ..., Q_m (Q_i = P at step_line_index(r, i)).
std::vector<Poly> step_line_sequence(const NNProvider& provider, long m);

// Row n holds the r+1 coefficients (c_{n,0}, ..., c_{n,r}) of the order-(r+2)
// recurrence x Q_n = Q_{n+1} + c_{n,0} Q_n + ... + c_{n,r} Q_{n-r}, with
// Q_i = 0 for i < 0.
struct StepLineCoefficients {
  std::vector<std::vector<Rational>> rows;
};

// Expands x Q_n - Q_{n+1} in the degree-triangular basis {Q_n, ..., Q_{n-r}}
// by leading-coefficient elimination. A nonzero residual after all r+1
// subtractions violates the step-line recurrence order and raises
// StructuralError.
StepLineCoefficients extract_step_line_coefficients(const std::vector<Poly>& polys,
                                                    int r);

// Re-runs the step-line recurrence from Q_0 = 1 with the given coefficients;
// returns rows.size() + 1 polynomials.
std::vector<Poly> regenerate_step_line(const StepLineCoefficients& coeffs, int r);

}  // namespace mopoly
