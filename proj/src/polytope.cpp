#include "majlat/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <string>
#include <type_traits>

namespace majlat {

namespace {

Rational abs_value(const Rational& v) { return abs(v); }
double abs_value(double v) { return std::fabs(v); }

template <class T>
bool lex_greater(const ProbVector<T>& a, const ProbVector<T>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), std::greater<T>());
}

// Accepts x as a vertex candidate if it lies in the ordered simplex and in
// the ball (on its boundary when tight is set).
template <class T>
void keep_if_feasible(std::vector<T> x, const std::vector<T>& center, const T& eps, bool tight,
                      std::vector<ProbVector<T>>& out) {
  const T zero = ScalarTraits<T>::from_int(0);
  T total = zero;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (scalar_lt(x[i], zero)) return;
    if (i + 1 < x.size() && scalar_lt(x[i], x[i + 1])) return;
    total += x[i];
  }
  if (!scalar_eq(total, ScalarTraits<T>::from_int(1))) return;
  const T dist = l1_distance(x, center);
  if (tight ? !scalar_eq(dist, eps) : scalar_lt(eps, dist)) return;
  out.push_back(ProbVector<T>::make(std::move(x)));
}

// Vertices of the ordered simplex itself: uniform on the first r entries.
template <class T>
void simplex_vertices(const std::vector<T>& center, const T& eps, std::vector<ProbVector<T>>& out) {
  const std::size_t d = center.size();
  for (std::size_t r = 1; r <= d; ++r) {
    std::vector<T> x(d, ScalarTraits<T>::from_int(0));
    for (std::size_t i = 0; i < r; ++i) x[i] = ScalarTraits<T>::ratio(1, static_cast<long>(r));
    keep_if_feasible(std::move(x), center, eps, false, out);
  }
}

// A vertex of the ball where the l1 constraint is tight is fixed by its runs
// of equal entries: every run is pinned to a centre coordinate, pinned to
// zero (last run only) or free, and the sum plus the l1 equation determine
// at most two free run values.
template <class T>
class RunEnumerator {
 public:
  RunEnumerator(const std::vector<T>& center, const T& eps, std::vector<ProbVector<T>>& out)
      : center_(center), eps_(eps), out_(out), d_(center.size()) {}

  void run() {
    const std::size_t layouts = std::size_t{1} << (d_ - 1);
    for (std::size_t mask = 0; mask < layouts; ++mask) {
      runs_.clear();
      std::size_t begin = 0;
      for (std::size_t gap = 0; gap + 1 < d_; ++gap) {
        if (mask & (std::size_t{1} << gap)) {
          runs_.push_back(Run{begin, gap + 1});
          begin = gap + 1;
        }
      }
      runs_.push_back(Run{begin, d_});
      assign(0, 0);
    }
  }

 private:
  enum class Kind { Free, Pinned, Zero };
  struct Run {
    std::size_t begin;
    std::size_t end;
    Kind kind = Kind::Free;
    T value{};
    std::size_t size() const { return end - begin; }
  };
  // Affine l1 contribution alpha * b + beta of a free run valid for
  // b in [low, high]; missing bounds are unbounded.
  struct Piece {
    std::optional<T> low;
    std::optional<T> high;
    T alpha;
    T beta;
  };

  void assign(std::size_t t, std::size_t free_count) {
    if (t == runs_.size()) {
      solve();
      return;
    }
    Run& r = runs_[t];
    if (free_count < 2) {
      r.kind = Kind::Free;
      assign(t + 1, free_count + 1);
    }
    for (std::size_t i = r.begin; i < r.end; ++i) {
      if (i > r.begin && center_[i] == center_[i - 1]) continue;
      r.kind = Kind::Pinned;
      r.value = center_[i];
      assign(t + 1, free_count);
    }
    if (t + 1 == runs_.size()) {
      r.kind = Kind::Zero;
      r.value = ScalarTraits<T>::from_int(0);
      assign(t + 1, free_count);
    }
  }

  std::vector<Piece> pieces(const Run& r) const {
    std::vector<T> breaks;
    for (std::size_t i = r.begin; i < r.end; ++i)
      if (breaks.empty() || !(breaks.back() == center_[i])) breaks.push_back(center_[i]);
    // breaks is strictly decreasing since the centre is sorted.
    std::vector<Piece> out;
    for (std::size_t p = 0; p <= breaks.size(); ++p) {
      Piece piece;
      if (p > 0) piece.high = breaks[p - 1];
      if (p < breaks.size()) piece.low = breaks[p];
      long above = 0;
      long below = 0;
      T beta = ScalarTraits<T>::from_int(0);
      for (std::size_t i = r.begin; i < r.end; ++i) {
        if (p > 0 && center_[i] >= breaks[p - 1]) {
          ++above;
          beta += center_[i];
        } else {
          ++below;
          beta -= center_[i];
        }
      }
      piece.alpha = ScalarTraits<T>::from_int(below - above);
      piece.beta = beta;
      out.push_back(std::move(piece));
    }
    return out;
  }

  static bool inside(const T& b, const Piece& p) {
    if (p.low && scalar_lt(b, *p.low)) return false;
    if (p.high && scalar_lt(*p.high, b)) return false;
    return true;
  }

  void emit(const std::vector<T>& values) {
    std::vector<T> x(d_);
    for (std::size_t t = 0; t < runs_.size(); ++t)
      for (std::size_t i = runs_[t].begin; i < runs_[t].end; ++i) x[i] = values[t];
    keep_if_feasible(std::move(x), center_, eps_, true, out_);
  }

  void solve() {
    std::vector<std::size_t> free_runs;
    std::vector<T> values(runs_.size());
    T mass = ScalarTraits<T>::from_int(1);
    for (std::size_t t = 0; t < runs_.size(); ++t) {
      if (runs_[t].kind == Kind::Free) {
        free_runs.push_back(t);
      } else {
        values[t] = runs_[t].value;
        mass -= runs_[t].value * ScalarTraits<T>::from_int(static_cast<long>(runs_[t].size()));
      }
    }

    if (free_runs.empty()) {
      emit(values);
      return;
    }
    if (free_runs.size() == 1) {
      const Run& r = runs_[free_runs[0]];
      values[free_runs[0]] = mass / ScalarTraits<T>::from_int(static_cast<long>(r.size()));
      emit(values);
      return;
    }

    // Two free runs: sum and l1 equations, piece by piece.
    const std::size_t t1 = free_runs[0];
    const std::size_t t2 = free_runs[1];
    T fixed_l1 = ScalarTraits<T>::from_int(0);
    for (std::size_t t = 0; t < runs_.size(); ++t) {
      if (runs_[t].kind == Kind::Free) continue;
      for (std::size_t i = runs_[t].begin; i < runs_[t].end; ++i) fixed_l1 += abs_value(T(runs_[t].value - center_[i]));
    }
    const T s1 = ScalarTraits<T>::from_int(static_cast<long>(runs_[t1].size()));
    const T s2 = ScalarTraits<T>::from_int(static_cast<long>(runs_[t2].size()));
    const std::vector<Piece> p1 = pieces(runs_[t1]);
    const std::vector<Piece> p2 = pieces(runs_[t2]);
    for (const Piece& a : p1) {
      for (const Piece& b : p2) {
        const T det = s1 * b.alpha - s2 * a.alpha;
        if (scalar_eq(det, ScalarTraits<T>::from_int(0))) continue;
        const T rhs = eps_ - fixed_l1 - a.beta - b.beta;
        const T v1 = (mass * b.alpha - s2 * rhs) / det;
        const T v2 = (s1 * rhs - a.alpha * mass) / det;
        if (!inside(v1, a) || !inside(v2, b)) continue;
        values[t1] = v1;
        values[t2] = v2;
        emit(values);
      }
    }
  }

  const std::vector<T>& center_;
  const T& eps_;
  std::vector<ProbVector<T>>& out_;
  std::size_t d_;
  std::vector<Run> runs_;
};

template <class T>
std::optional<std::vector<T>> solve_linear(std::vector<std::vector<T>> a, std::vector<T> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t row = col + 1; row < n; ++row)
      if (abs_value(a[row][col]) > abs_value(a[pivot][col])) pivot = row;
    if (scalar_eq(a[pivot][col], ScalarTraits<T>::from_int(0))) return std::nullopt;
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    for (std::size_t row = col + 1; row < n; ++row) {
      if (a[row][col] == 0) continue;
      const T factor = a[row][col] / a[col][col];
      for (std::size_t k = col; k < n; ++k) a[row][k] -= factor * a[col][k];
      b[row] -= factor * b[col];
    }
  }
  std::vector<T> x(n);
  for (std::size_t i = n; i-- > 0;) {
    T acc = b[i];
    for (std::size_t k = i + 1; k < n; ++k) acc -= a[i][k] * x[k];
    x[i] = acc / a[i][i];
  }
  return x;
}

// Half-space a . x <= rhs.
template <class T>
struct HalfSpace {
  std::vector<T> normal;
  T rhs;
};

template <class T>
void brute_force_vertices(const std::vector<T>& center, const T& eps, std::vector<ProbVector<T>>& out) {
  const std::size_t d = center.size();
  const T zero = ScalarTraits<T>::from_int(0);
  const T one = ScalarTraits<T>::from_int(1);
  std::vector<HalfSpace<T>> constraints;

  for (std::size_t pattern = 0; pattern < (std::size_t{1} << d); ++pattern) {
    // A uniform sign pattern cannot be tight: x - center sums to zero.
    if (pattern == 0 || pattern + 1 == (std::size_t{1} << d)) continue;
    bool consistent = true;
    for (std::size_t i = 0; i + 1 < d; ++i) {
      const bool minus_here = !(pattern & (std::size_t{1} << i));
      const bool plus_next = pattern & (std::size_t{1} << (i + 1));
      // Tied centre entries: x_i - c_i >= x_{i+1} - c_{i+1} forbids (-, +).
      if (minus_here && plus_next && center[i] == center[i + 1]) consistent = false;
    }
    if (!consistent) continue;
    HalfSpace<T> h{std::vector<T>(d), eps};
    for (std::size_t i = 0; i < d; ++i) {
      const bool plus = pattern & (std::size_t{1} << i);
      h.normal[i] = plus ? one : T(-one);
      h.rhs += plus ? center[i] : T(-center[i]);
    }
    constraints.push_back(std::move(h));
  }
  for (std::size_t i = 0; i + 1 < d; ++i) {
    HalfSpace<T> h{std::vector<T>(d, zero), zero};
    h.normal[i] = -one;
    h.normal[i + 1] = one;
    constraints.push_back(std::move(h));
  }
  {
    HalfSpace<T> h{std::vector<T>(d, zero), zero};
    h.normal[d - 1] = -one;
    constraints.push_back(std::move(h));
  }

  const std::size_t pick = d - 1;
  std::vector<std::size_t> chosen;
  std::function<void(std::size_t)> recurse = [&](std::size_t from) {
    if (chosen.size() == pick) {
      std::vector<std::vector<T>> a;
      std::vector<T> b;
      for (std::size_t c : chosen) {
        a.push_back(constraints[c].normal);
        b.push_back(constraints[c].rhs);
      }
      a.emplace_back(d, one);
      b.push_back(one);
      auto x = solve_linear(std::move(a), std::move(b));
      if (!x) return;
      for (const auto& h : constraints) {
        T lhs = zero;
        for (std::size_t i = 0; i < d; ++i) lhs += h.normal[i] * (*x)[i];
        if (scalar_lt(h.rhs, lhs)) return;
      }
      keep_if_feasible(std::move(*x), center, eps, false, out);
      return;
    }
    for (std::size_t c = from; c + (pick - chosen.size()) <= constraints.size(); ++c) {
      chosen.push_back(c);
      recurse(c + 1);
      chosen.pop_back();
    }
  };
  recurse(0);
}

}  // namespace

template <class T>
T l1_distance(const std::vector<T>& a, const std::vector<T>& b) {
  require_same_dim(a.size(), b.size(), "l1 distance");
  T total = ScalarTraits<T>::from_int(0);
  for (std::size_t i = 0; i < a.size(); ++i) total += abs_value(T(a[i] - b[i]));
  return total;
}

template <class T>
Polytope<T> Polytope<T>::from_vertices(std::vector<ProbVector<T>> vertices) {
  if (vertices.empty()) throw Error(ErrorCode::EmptyFamily, "a polytope needs at least one vertex");
  for (const auto& v : vertices) require_same_dim(vertices.front().dim(), v.dim(), "polytope vertex");
  std::stable_sort(vertices.begin(), vertices.end(), lex_greater<T>);
  std::vector<ProbVector<T>> unique;
  for (auto& v : vertices) {
    // Equal vectors sit next to each other in exact mode; in float mode a
    // near-duplicate may be separated by a few entries, so scan all kept.
    const bool seen = std::any_of(unique.begin(), unique.end(), [&](const auto& u) { return u == v; });
    if (!seen) unique.push_back(std::move(v));
  }
  return Polytope(std::move(unique));
}

template <class T>
Ball<T> Ball<T>::make(ProbVector<T> center, T radius) {
  if (scalar_lt(radius, ScalarTraits<T>::from_int(0)))
    throw Error(ErrorCode::NegativeRadius, "radius " + to_decimal_string(radius) + " < 0");
  if constexpr (std::is_same_v<T, Rational>) radius.canonicalize();
  return Ball{std::move(center), std::move(radius)};
}

template <class T>
Polytope<T> ball_vertices(const Ball<T>& ball, VertexEnumOptions options) {
  const std::size_t d = ball.center.dim();
  if (d > options.max_dim)
    throw Error(ErrorCode::DimensionTooLarge,
                "dimension " + std::to_string(d) + " exceeds the vertex enumeration cap " + std::to_string(options.max_dim));
  if (d == 1 || scalar_eq(ball.radius, ScalarTraits<T>::from_int(0))) return Polytope<T>::from_vertices({ball.center});

  const std::vector<T>& center = ball.center.entries();
  std::vector<ProbVector<T>> found;
  if (options.strategy == VertexStrategy::BlockStructure) {
    simplex_vertices(center, ball.radius, found);
    RunEnumerator<T>(center, ball.radius, found).run();
  } else {
    brute_force_vertices(center, ball.radius, found);
  }
  return Polytope<T>::from_vertices(std::move(found));
}

template <class T>
ProbVector<T> polytope_inf(const Polytope<T>& p) {
  return family_inf(FamilyDescriptor<T>::finite(p.vertices()));
}

template <class T>
ProbVector<T> polytope_sup(const Polytope<T>& p) {
  return family_sup(FamilyDescriptor<T>::finite(p.vertices()));
}

template <class T>
ProbVector<T> steepest_approx(const Ball<T>& ball, VertexEnumOptions options) {
  return polytope_sup(ball_vertices(ball, options));
}

template <class T>
ProbVector<T> flattest_approx(const Ball<T>& ball, VertexEnumOptions options) {
  return polytope_inf(ball_vertices(ball, options));
}

#define MAJLAT_INSTANTIATE_POLYTOPE(T)                                               \
  template class Polytope<T>;                                                        \
  template struct Ball<T>;                                                           \
  template Polytope<T> ball_vertices<T>(const Ball<T>&, VertexEnumOptions);          \
  template T l1_distance<T>(const std::vector<T>&, const std::vector<T>&);           \
  template ProbVector<T> polytope_inf<T>(const Polytope<T>&);                        \
  template ProbVector<T> polytope_sup<T>(const Polytope<T>&);                        \
  template ProbVector<T> steepest_approx<T>(const Ball<T>&, VertexEnumOptions);      \
  template ProbVector<T> flattest_approx<T>(const Ball<T>&, VertexEnumOptions);

MAJLAT_INSTANTIATE_POLYTOPE(Rational)
MAJLAT_INSTANTIATE_POLYTOPE(double)

#undef MAJLAT_INSTANTIATE_POLYTOPE

}  // namespace majlat
