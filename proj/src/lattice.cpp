#include "majlat/lattice.hpp"

#include <algorithm>
#include <optional>
#include <string>

namespace majlat {

namespace {

template <class T>
void validate_extremal(std::size_t d, const std::vector<T>& lower, const std::vector<T>& upper) {
  auto fail = [](const std::string& what) { throw Error(ErrorCode::InvalidExtremal, what); };
  if (lower.size() != d + 1 || upper.size() != d + 1)
    fail("expected " + std::to_string(d + 1) + " values per bound map");
  const T zero = ScalarTraits<T>::from_int(0);
  const T one = ScalarTraits<T>::from_int(1);
  if (!scalar_eq(lower[0], zero) || !scalar_eq(upper[0], zero)) fail("bounds at k = 0 must be 0");
  if (!scalar_eq(lower[d], one) || !scalar_eq(upper[d], one)) fail("bounds at k = d must be 1");
  for (std::size_t k = 0; k <= d; ++k) {
    if (scalar_lt(upper[k], lower[k])) fail("lower(" + std::to_string(k) + ") > upper(" + std::to_string(k) + ")");
    const T uniform = ScalarTraits<T>::ratio(static_cast<long>(k), static_cast<long>(d));
    if (scalar_lt(lower[k], uniform)) fail("lower(" + std::to_string(k) + ") < k/d");
    if (k > 0 && scalar_lt(lower[k], lower[k - 1])) fail("lower map decreases at k = " + std::to_string(k));
    if (k > 0 && scalar_lt(upper[k], upper[k - 1])) fail("upper map decreases at k = " + std::to_string(k));
  }
}

template <class T>
std::vector<T> fold_sums(const std::vector<ProbVector<T>>& members, bool take_min) {
  std::vector<T> acc = cumulative(members.front().entries());
  for (std::size_t m = 1; m < members.size(); ++m) {
    const std::vector<T> s = cumulative(members[m].entries());
    for (std::size_t k = 0; k < acc.size(); ++k) {
      const bool replace = take_min ? s[k] < acc[k] : s[k] > acc[k];
      if (replace) acc[k] = s[k];
    }
  }
  return acc;
}

template <class T>
std::vector<T> pointwise(const ProbVector<T>& x, const ProbVector<T>& y, bool take_min) {
  require_same_dim(x.dim(), y.dim(), take_min ? "meet" : "join");
  std::vector<T> sx = cumulative(x.entries());
  const std::vector<T> sy = cumulative(y.entries());
  for (std::size_t k = 0; k < sx.size(); ++k) {
    const bool replace = take_min ? sy[k] < sx[k] : sy[k] > sx[k];
    if (replace) sx[k] = sy[k];
  }
  return sx;
}

template <class T>
std::vector<T> differences(const std::vector<T>& sums) {
  std::vector<T> out;
  out.reserve(sums.size() - 1);
  for (std::size_t k = 1; k < sums.size(); ++k) out.push_back(sums[k] - sums[k - 1]);
  return out;
}

}  // namespace

template <class T>
FamilyDescriptor<T> FamilyDescriptor<T>::finite(std::vector<ProbVector<T>> members) {
  if (members.empty()) throw Error(ErrorCode::EmptyFamily, "a family needs at least one member");
  for (const auto& m : members) require_same_dim(members.front().dim(), m.dim(), "family member");
  return FamilyDescriptor(Finite{std::move(members)});
}

template <class T>
FamilyDescriptor<T> FamilyDescriptor<T>::extremal(std::size_t d, std::vector<T> lower, std::vector<T> upper) {
  if (d == 0) throw Error(ErrorCode::ZeroDimension, "dimension must be at least 1");
  validate_extremal(d, lower, upper);
  return FamilyDescriptor(Extremal{d, std::move(lower), std::move(upper)});
}

template <class T>
FamilyDescriptor<T> FamilyDescriptor<T>::extremal(std::size_t d, const std::function<T(std::size_t)>& lower,
                                                  const std::function<T(std::size_t)>& upper) {
  std::vector<T> lo;
  std::vector<T> hi;
  for (std::size_t k = 0; k <= d; ++k) {
    lo.push_back(lower(k));
    hi.push_back(upper(k));
  }
  return extremal(d, std::move(lo), std::move(hi));
}

template <class T>
std::size_t FamilyDescriptor<T>::dim() const noexcept {
  if (const auto* f = std::get_if<Finite>(&repr_)) return f->members.front().dim();
  return std::get<Extremal>(repr_).dim;
}

template <class T>
const std::vector<ProbVector<T>>& FamilyDescriptor<T>::members() const {
  static const std::vector<ProbVector<T>> none;
  if (const auto* f = std::get_if<Finite>(&repr_)) return f->members;
  return none;
}

template <class T>
std::vector<T> FamilyDescriptor<T>::lower_sums() const {
  if (const auto* f = std::get_if<Finite>(&repr_)) return fold_sums(f->members, true);
  return std::get<Extremal>(repr_).lower;
}

template <class T>
std::vector<T> FamilyDescriptor<T>::upper_sums() const {
  if (const auto* f = std::get_if<Finite>(&repr_)) return fold_sums(f->members, false);
  return std::get<Extremal>(repr_).upper;
}

template <class T>
EnvelopeResult<T> upper_envelope(const std::vector<T>& sums) {
  if (sums.size() < 2) throw Error(ErrorCode::BadEndpoints, "need at least S_0 and S_1");
  const T zero = ScalarTraits<T>::from_int(0);
  const T one = ScalarTraits<T>::from_int(1);
  if (!scalar_eq(sums.front(), zero) || !scalar_eq(sums.back(), one))
    throw Error(ErrorCode::BadEndpoints, "curve must start at 0 and end at 1");
  for (std::size_t k = 0; k + 1 < sums.size(); ++k)
    if (scalar_lt(sums[k + 1], sums[k]))
      throw Error(ErrorCode::NotMonotone, "S_" + std::to_string(k + 1) + " < S_" + std::to_string(k));

  const std::size_t d = sums.size() - 1;
  std::vector<std::size_t> critical{0};
  std::size_t i = 0;
  while (i < d) {
    std::size_t best_j = i + 1;
    T best_slope = sums[i + 1] - sums[i];
    for (std::size_t j = i + 2; j <= d; ++j) {
      const T slope = (sums[j] - sums[i]) / ScalarTraits<T>::from_int(static_cast<long>(j - i));
      const int c = scalar_cmp(slope, best_slope);
      if (c >= 0) {
        best_j = j;  // last position of the maximum
        if (slope > best_slope) best_slope = slope;
      }
    }
    critical.push_back(best_j);
    i = best_j;
  }

  std::vector<T> values(d + 1);
  for (std::size_t c = 0; c + 1 < critical.size(); ++c) {
    const std::size_t a = critical[c];
    const std::size_t b = critical[c + 1];
    const T span = ScalarTraits<T>::from_int(static_cast<long>(b - a));
    for (std::size_t k = a; k <= b; ++k) {
      const T step = ScalarTraits<T>::from_int(static_cast<long>(k - a));
      values[k] = sums[a] + (sums[b] - sums[a]) * step / span;
    }
  }
  return EnvelopeResult<T>{std::move(critical), LorenzCurve<T>::from_sums(std::move(values))};
}

template <class T>
ProbVector<T> flatten(std::vector<T> w, std::size_t& passes) {
  // Validation only: same errors as building a vector, ordering ignored.
  (void)ProbVector<T>::make(w, MakeOptions{.normalize = false, .sort = true});

  passes = 0;
  for (;;) {
    std::optional<std::size_t> ascent;
    for (std::size_t j = 1; j < w.size(); ++j) {
      if (scalar_lt(w[j - 1], w[j])) {
        ascent = j;
        break;
      }
    }
    if (!ascent) break;
    const std::size_t j = *ascent;

    std::size_t k = j - 1;
    T mean;
    for (;; --k) {
      T block_sum = ScalarTraits<T>::from_int(0);
      for (std::size_t l = k; l <= j; ++l) block_sum += w[l];
      mean = block_sum / ScalarTraits<T>::from_int(static_cast<long>(j - k + 1));
      // k == 0 has an unbounded predecessor and always qualifies.
      if (k == 0 || scalar_le(mean, w[k - 1])) break;
    }
    for (std::size_t l = k; l <= j; ++l) w[l] = mean;
    ++passes;
  }
  return ProbVector<T>::make(std::move(w));
}

template <class T>
ProbVector<T> flatten(std::vector<T> w) {
  std::size_t passes = 0;
  return flatten(std::move(w), passes);
}

template <class T>
ProbVector<T> meet(const ProbVector<T>& x, const ProbVector<T>& y) {
  return LorenzCurve<T>::from_sums(pointwise(x, y, true)).to_vector();
}

template <class T>
std::vector<T> join_candidate(const ProbVector<T>& x, const ProbVector<T>& y) {
  return differences(pointwise(x, y, false));
}

template <class T>
ProbVector<T> join(const ProbVector<T>& x, const ProbVector<T>& y) {
  return flatten(join_candidate(x, y));
}

template <class T>
ProbVector<T> join_by_envelope(const ProbVector<T>& x, const ProbVector<T>& y) {
  return upper_envelope(pointwise(x, y, false)).curve.to_vector();
}

template <class T>
ProbVector<T> family_inf(const FamilyDescriptor<T>& family) {
  std::vector<T> lower = family.lower_sums();
  if (!family.is_finite()) {
    // A lower map that comes from an actual family is always concave.
    try {
      check_curve_shape(lower);
    } catch (const Error& e) {
      throw Error(ErrorCode::InvalidExtremal, std::string("lower map is not a Lorenz curve (") + e.what() + ")");
    }
  }
  return LorenzCurve<T>::from_sums(std::move(lower)).to_vector();
}

template <class T>
ProbVector<T> family_sup(const FamilyDescriptor<T>& family) {
  return upper_envelope(family.upper_sums()).curve.to_vector();
}

#define MAJLAT_INSTANTIATE_LATTICE(T)                                                   \
  template class FamilyDescriptor<T>;                                                   \
  template EnvelopeResult<T> upper_envelope<T>(const std::vector<T>&);                  \
  template ProbVector<T> flatten<T>(std::vector<T>);                                    \
  template ProbVector<T> flatten<T>(std::vector<T>, std::size_t&);                      \
  template ProbVector<T> meet<T>(const ProbVector<T>&, const ProbVector<T>&);           \
  template std::vector<T> join_candidate<T>(const ProbVector<T>&, const ProbVector<T>&); \
  template ProbVector<T> join<T>(const ProbVector<T>&, const ProbVector<T>&);           \
  template ProbVector<T> join_by_envelope<T>(const ProbVector<T>&, const ProbVector<T>&); \
  template ProbVector<T> family_inf<T>(const FamilyDescriptor<T>&);                     \
  template ProbVector<T> family_sup<T>(const FamilyDescriptor<T>&);

MAJLAT_INSTANTIATE_LATTICE(Rational)
MAJLAT_INSTANTIATE_LATTICE(double)

#undef MAJLAT_INSTANTIATE_LATTICE

}  // namespace majlat
