#pragma once

// Test-only reference computations. Nothing here calls into the lattice or
// polytope code paths it is used to check.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <random>
#include <vector>

#include "majlat/core.hpp"
#include "majlat/scalar.hpp"

namespace majlat::testing {

using Q = Rational;

inline Q q(const char* text) { return ScalarTraits<Q>::parse(text); }

// mpq_class(n, d) does not reduce; GMP arithmetic requires reduced operands.
inline Q frac(long n, long d) {
  Q r(n, d);
  r.canonicalize();
  return r;
}

inline std::vector<Q> qs(std::initializer_list<const char*> items) {
  std::vector<Q> out;
  for (const char* s : items) out.push_back(q(s));
  return out;
}

inline ProbVector<Q> qv(std::initializer_list<const char*> items) { return ProbVector<Q>::make(qs(items)); }

template <class T>
std::vector<T> prefix_sums(const std::vector<T>& v) {
  std::vector<T> s{T(0)};
  for (const T& x : v) s.push_back(s.back() + x);
  return s;
}

// a dominates b at every index (weak majorization on raw sums).
inline bool sums_dominate(const std::vector<Q>& a, const std::vector<Q>& b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] < b[k]) return false;
  return true;
}

inline bool oracle_majorizes(const std::vector<Q>& x, const std::vector<Q>& y) {
  return sums_dominate(prefix_sums(x), prefix_sums(y));
}

// Least concave majorant of the points (k, s_k) at integer abscissae: the
// largest chord value over every pair a <= k <= b.
inline std::vector<Q> concave_majorant(const std::vector<Q>& s) {
  const std::size_t n = s.size();
  std::vector<Q> out(s);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t k = a + 1; k < b; ++k) {
        Q chord = s[a] + (s[b] - s[a]) * Q(static_cast<long>(k - a)) / Q(static_cast<long>(b - a));
        if (chord > out[k]) out[k] = chord;
      }
  return out;
}

inline std::vector<Q> diffs(const std::vector<Q>& s) {
  std::vector<Q> out;
  for (std::size_t k = 1; k < s.size(); ++k) out.push_back(s[k] - s[k - 1]);
  return out;
}

// Supremum of a finite set of sorted vectors via the chord oracle.
inline std::vector<Q> oracle_sup(const std::vector<std::vector<Q>>& members) {
  std::vector<Q> hi = prefix_sums(members.front());
  for (const auto& m : members) {
    const auto s = prefix_sums(m);
    for (std::size_t k = 0; k < s.size(); ++k) hi[k] = std::max(hi[k], s[k]);
  }
  return diffs(concave_majorant(hi));
}

inline std::vector<Q> oracle_inf(const std::vector<std::vector<Q>>& members) {
  std::vector<Q> lo = prefix_sums(members.front());
  for (const auto& m : members) {
    const auto s = prefix_sums(m);
    for (std::size_t k = 0; k < s.size(); ++k) lo[k] = std::min(lo[k], s[k]);
  }
  return diffs(lo);
}

// All sorted probability vectors of length d with entries in (1/n) Z.
inline std::vector<std::vector<Q>> ordered_grid(std::size_t d, long n) {
  std::vector<std::vector<Q>> out;
  std::vector<long> parts;
  std::function<void(long, long)> rec = [&](long remaining, long cap) {
    if (parts.size() == d) {
      if (remaining == 0) {
        std::vector<Q> v;
        for (long p : parts) v.push_back(frac(p, n));
        out.push_back(std::move(v));
      }
      return;
    }
    const long slots = static_cast<long>(d - parts.size());
    for (long p = std::min(cap, remaining); p >= 0; --p) {
      if (p * slots < remaining) break;  // sorted: the rest cannot exceed p
      parts.push_back(p);
      rec(remaining - p, p);
      parts.pop_back();
    }
  };
  rec(n, n);
  return out;
}

// Random sorted probability vector with entries k/den (den fixed): ties
// and zeros show up often for small den.
inline std::vector<Q> random_grid_vector(std::mt19937_64& rng, std::size_t d, long den) {
  std::vector<long> cuts{0, den};
  std::uniform_int_distribution<long> pick(0, den);
  for (std::size_t i = 0; i + 1 < d; ++i) cuts.push_back(pick(rng));
  std::sort(cuts.begin(), cuts.end());
  std::vector<Q> v;
  for (std::size_t i = 1; i < cuts.size(); ++i) {
    v.push_back(frac(cuts[i] - cuts[i - 1], den));
  }
  std::sort(v.begin(), v.end(), std::greater<Q>());
  return v;
}

// Random sorted probability vector from integer weights in [0, max_weight].
inline std::vector<Q> random_weight_vector(std::mt19937_64& rng, std::size_t d, long max_weight = 1000) {
  std::uniform_int_distribution<long> pick(0, max_weight);
  std::vector<long> w(d);
  long total = 0;
  while (total == 0) {
    total = 0;
    for (auto& x : w) {
      x = pick(rng);
      total += x;
    }
  }
  std::vector<Q> v;
  for (long x : w) {
    v.push_back(frac(x, total));
  }
  std::sort(v.begin(), v.end(), std::greater<Q>());
  return v;
}

inline ProbVector<Q> random_vector(std::mt19937_64& rng, std::size_t d) {
  // Alternate between coarse grids (ties, zeros) and fine weights.
  std::uniform_int_distribution<int> coin(0, 2);
  const int c = coin(rng);
  if (c == 0) return ProbVector<Q>::make(random_grid_vector(rng, d, 10));
  if (c == 1) return ProbVector<Q>::make(random_grid_vector(rng, d, 60));
  return ProbVector<Q>::make(random_weight_vector(rng, d));
}

inline Q l1(const std::vector<Q>& a, const std::vector<Q>& b) {
  Q t = 0;
  for (std::size_t i = 0; i < a.size(); ++i) t += abs(a[i] - b[i]);
  return t;
}

// Rejection sampler for the ball {x sorted prob vector : |x - c|_1 <= eps}:
// a random zero-sum perturbation scaled into the l1 ball, kept when the
// result stays sorted and non-negative.
inline std::vector<Q> sample_ball_member(std::mt19937_64& rng, const std::vector<Q>& c, const Q& eps) {
  const std::size_t d = c.size();
  std::uniform_int_distribution<long> pick(-1000, 1000);
  std::uniform_int_distribution<long> scale(0, 1000);
  for (;;) {
    std::vector<Q> delta(d);
    Q mean = 0;
    for (auto& x : delta) {
      x = frac(pick(rng), 1000);
      mean += x;
    }
    mean /= Q(static_cast<long>(d));
    Q norm = 0;
    for (auto& x : delta) {
      x -= mean;
      norm += abs(x);
    }
    if (norm == 0) continue;
    const Q factor = eps * frac(scale(rng), 1000) / norm;
    std::vector<Q> x(d);
    bool ok = true;
    for (std::size_t i = 0; i < d; ++i) {
      x[i] = c[i] + delta[i] * factor;
      if (x[i] < 0) ok = false;
      if (i > 0 && x[i] > x[i - 1]) ok = false;
    }
    if (ok) return x;
  }
}

}  // namespace majlat::testing
