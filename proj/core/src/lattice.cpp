#include "mopoly/lattice.hpp"

#include <algorithm>
#include <random>

#include "mopoly/error.hpp"

namespace mopoly {

namespace {

// One recurrence step from m in direction k; lower neighbors looked up
// through the callback. Encodes the conventions P_0 = 1 (callers seed it)
// and P = 0 below the lattice (terms skipped).
template <typename Lookup>
Poly advance(const NNCoefficients& c, const MultiIndex& m, const Poly& pm,
             Lookup&& lower) {
  if (static_cast<int>(c.a.size()) != m.r())
    throw ContractError("recurrence step: coefficient arity mismatch");
  Poly next = pm.times_x() - c.b * pm;
  for (int j = 0; j < m.r(); ++j) {
    auto below = m.minus(j);
    if (!below) continue;
    if (c.a[static_cast<size_t>(j)] == 0) continue;
    next -= c.a[static_cast<size_t>(j)] * lower(*below);
  }
  return next;
}

}  // namespace

LatticeCache::LatticeCache(const NNProvider& provider) : provider_(provider) {}

const Poly& LatticeCache::at(const MultiIndex& n) {
  if (n.r() != provider_.r())
    throw ContractError("LatticeCache: index arity does not match provider");
  auto it = cache_.find(n);
  if (it != cache_.end()) return it->second;
  Poly value;
  if (n.length() == 0) {
    value = Poly::constant(1);
  } else {
    // Canonical path: coordinates raised in order, so the incoming step is in
    // the highest nonzero direction.
    int k = n.r() - 1;
    while (n[k] == 0) --k;
    MultiIndex m = *n.minus(k);
    NNCoefficients c = provider_.nn(m, k);
    const Poly& pm = at(m);
    value = advance(c, m, pm, [this](const MultiIndex& b) -> const Poly& {
      return at(b);
    });
  }
  return cache_.emplace(n, std::move(value)).first->second;
}

Poly build_polynomial(const NNProvider& provider, const MultiIndex& n,
                      LatticeCache& cache) {
  return cache.at(n);
}

Poly build_polynomial(const NNProvider& provider, const MultiIndex& n) {
  LatticeCache cache(provider);
  return cache.at(n);
}

namespace {

Integer factorial_mpz(long v) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(v));
  return f;
}

}  // namespace

bool check_path_independence(const NNProvider& provider, const MultiIndex& n,
                             long exhaustive_threshold, long sample_count,
                             unsigned long seed) {
  if (n.r() != provider.r())
    throw ContractError("check_path_independence: index arity mismatch");
  LatticeCache cache(provider);
  const Poly& canonical = cache.at(n);

  std::vector<int> dirs;
  for (int j = 0; j < n.r(); ++j)
    for (long t = 0; t < n[j]; ++t) dirs.push_back(j);
  if (dirs.size() <= 1) return true;

  auto run_path = [&](const std::vector<int>& seq) {
    MultiIndex m = MultiIndex::zeros(n.r());
    Poly pm = Poly::constant(1);
    for (int k : seq) {
      NNCoefficients c = provider.nn(m, k);
      pm = advance(c, m, pm, [&cache](const MultiIndex& b) -> const Poly& {
        return cache.at(b);
      });
      m = m.plus(k);
    }
    return pm == canonical;
  };

  Integer count = factorial_mpz(n.length());
  for (int j = 0; j < n.r(); ++j) count /= factorial_mpz(n[j]);

  if (count <= exhaustive_threshold) {
    std::sort(dirs.begin(), dirs.end());
    do {
      if (!run_path(dirs)) return false;
    } while (std::next_permutation(dirs.begin(), dirs.end()));
    return true;
  }

  // Hand-rolled Fisher-Yates so sampled paths are reproducible per seed
  // across standard libraries.
  std::mt19937_64 rng(seed);
  for (long s = 0; s < sample_count; ++s) {
    for (size_t i = dirs.size() - 1; i > 0; --i) {
      size_t pick = static_cast<size_t>(rng() % (i + 1));
      std::swap(dirs[i], dirs[pick]);
    }
    if (!run_path(dirs)) return false;
  }
  return true;
}

bool compatibility_identity(const NNProvider& provider, const MultiIndex& n,
                            int k, int l) {
  if (k == l) throw ContractError("compatibility_identity: requires k != l");
  LatticeCache cache(provider);
  NNCoefficients ck = provider.nn(n, k);
  NNCoefficients cl = provider.nn(n, l);
  Poly lhs = cache.at(n.plus(k)) - cache.at(n.plus(l));
  Poly rhs = (cl.b - ck.b) * cache.at(n);
  return lhs == rhs;
}

MultiIndex step_line_index(int r, long m) {
  if (r < 1) throw ContractError("step_line_index: requires r >= 1");
  if (m < 0) throw ContractError("step_line_index: negative position");
  long q = m / r;
  long s = m % r;
  std::vector<long> entries(static_cast<size_t>(r), q);
  for (long j = 0; j < s; ++j) entries[static_cast<size_t>(j)] = q + 1;
  return MultiIndex(std::move(entries));
}

std::vector<Poly> step_line_sequence(const NNProvider& provider, long m) {
  if (m < 0) throw ContractError("step_line_sequence: negative length");
  LatticeCache cache(provider);
  std::vector<Poly> out;
  out.reserve(static_cast<size_t>(m) + 1);
  for (long i = 0; i <= m; ++i)
    out.push_back(cache.at(step_line_index(provider.r(), i)));
  return out;
}

StepLineCoefficients extract_step_line_coefficients(const std::vector<Poly>& polys,
                                                    int r) {
  if (r < 1) throw ContractError("extract_step_line_coefficients: requires r >= 1");
  for (size_t i = 0; i < polys.size(); ++i) {
    if (polys[i].degree() != static_cast<int>(i) || !polys[i].is_monic())
      throw ContractError(
          "extract_step_line_coefficients: input must be monic of degrees 0..m");
  }
  StepLineCoefficients out;
  if (polys.empty()) return out;
  for (size_t n = 0; n + 1 < polys.size(); ++n) {
    Poly residual = polys[n].times_x() - polys[n + 1];
    std::vector<Rational> row(static_cast<size_t>(r) + 1, Rational(0));
    for (int i = 0; i <= r; ++i) {
      long idx = static_cast<long>(n) - i;
      if (idx < 0) break;
      Rational coef = residual.coeff(static_cast<int>(idx));
      if (coef == 0) continue;
      row[static_cast<size_t>(i)] = coef;
      residual -= coef * polys[static_cast<size_t>(idx)];
    }
    if (!residual.is_zero())
      throw StructuralError(
          "step-line recurrence violated: nonzero residual at position " +
          std::to_string(n));
    out.rows.push_back(std::move(row));
  }
  return out;
}

std::vector<Poly> regenerate_step_line(const StepLineCoefficients& coeffs, int r) {
  if (r < 1) throw ContractError("regenerate_step_line: requires r >= 1");
  std::vector<Poly> out;
  out.push_back(Poly::constant(1));
  for (size_t n = 0; n < coeffs.rows.size(); ++n) {
    const auto& row = coeffs.rows[n];
    if (row.size() != static_cast<size_t>(r) + 1)
      throw ContractError("regenerate_step_line: row arity mismatch");
    Poly next = out[n].times_x();
    for (int i = 0; i <= r; ++i) {
      long idx = static_cast<long>(n) - i;
      if (idx < 0) break;
      next -= row[static_cast<size_t>(i)] * out[static_cast<size_t>(idx)];
    }
    out.push_back(std::move(next));
  }
  return out;
}

}  // namespace mopoly
