#include "majlat/core.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>
#include <type_traits>

namespace majlat {

namespace {

Rational abs_value(const Rational& v) { return abs(v); }
double abs_value(double v) { return std::fabs(v); }

std::size_t floor_index(const Rational& v) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), v.get_num().get_mpz_t(), v.get_den().get_mpz_t());
  return q.get_ui();
}
std::size_t floor_index(double v) { return static_cast<std::size_t>(std::floor(v)); }

template <class T>
std::string show(const T& v) {
  return to_decimal_string(v);
}

}  // namespace

std::string_view ordering_name(MajOrdering o) noexcept {
  switch (o) {
    case MajOrdering::Majorizes: return "Majorizes";
    case MajOrdering::MajorizedBy: return "MajorizedBy";
    case MajOrdering::Equal: return "Equal";
    case MajOrdering::Incomparable: return "Incomparable";
  }
  return "Unknown";
}

void require_same_dim(std::size_t a, std::size_t b, std::string_view what) {
  if (a != b)
    throw Error(ErrorCode::DimensionMismatch, std::string(what) + ": dimensions " +
                                                  std::to_string(a) + " and " + std::to_string(b));
}

template <class T>
ProbVector<T> ProbVector<T>::make(std::vector<T> raw, MakeOptions options) {
  if (raw.empty()) throw Error(ErrorCode::EmptyInput, "a probability vector needs at least one entry");
  // GMP arithmetic is only defined on reduced fractions.
  if constexpr (std::is_same_v<T, Rational>)
    for (T& v : raw) v.canonicalize();
  const T zero = ScalarTraits<T>::from_int(0);
  for (std::size_t i = 0; i < raw.size(); ++i)
    if (scalar_lt(raw[i], zero))
      throw Error(ErrorCode::NegativeEntry,
                  "entry " + std::to_string(i) + " is " + show(raw[i]) + " < 0");

  T total = zero;
  for (const T& v : raw) total += v;
  if (options.normalize) {
    if (!scalar_lt(zero, total)) throw Error(ErrorCode::NotNormalized, "entries sum to zero");
    for (T& v : raw) v /= total;
  } else {
    const T slack = ScalarTraits<T>::tolerance() * ScalarTraits<T>::from_int(static_cast<long>(raw.size()));
    const T deviation = abs_value(T(total - ScalarTraits<T>::from_int(1)));
    if (deviation > slack)
      throw Error(ErrorCode::NotNormalized, "entries sum to " + show(total) + ", expected 1");
  }

  if (options.sort) {
    std::stable_sort(raw.begin(), raw.end(), std::greater<T>());
  } else {
    for (std::size_t i = 0; i + 1 < raw.size(); ++i)
      if (scalar_lt(raw[i], raw[i + 1]))
        throw Error(ErrorCode::NotSorted, "entry " + std::to_string(i + 1) + " (" + show(raw[i + 1]) +
                                              ") exceeds entry " + std::to_string(i) + " (" +
                                              show(raw[i]) + ")");
  }
  return ProbVector(std::move(raw));
}

template <class T>
ProbVector<T> ProbVector<T>::top(std::size_t d) {
  if (d == 0) throw Error(ErrorCode::ZeroDimension, "dimension must be at least 1");
  std::vector<T> e(d, ScalarTraits<T>::from_int(0));
  e[0] = ScalarTraits<T>::from_int(1);
  return ProbVector(std::move(e));
}

template <class T>
ProbVector<T> ProbVector<T>::bottom(std::size_t d) {
  if (d == 0) throw Error(ErrorCode::ZeroDimension, "dimension must be at least 1");
  return ProbVector(std::vector<T>(d, ScalarTraits<T>::ratio(1, static_cast<long>(d))));
}

template <class T>
std::vector<T> cumulative(const std::vector<T>& values) {
  std::vector<T> sums;
  sums.reserve(values.size() + 1);
  T running = ScalarTraits<T>::from_int(0);
  sums.push_back(running);
  for (const T& v : values) {
    running += v;
    sums.push_back(running);
  }
  return sums;
}

template <class T>
void check_curve_shape(const std::vector<T>& sums) {
  if (sums.size() < 2) throw Error(ErrorCode::BadEndpoints, "a curve needs the points k = 0 and k = d >= 1");
  const T zero = ScalarTraits<T>::from_int(0);
  const T one = ScalarTraits<T>::from_int(1);
  if (!scalar_eq(sums.front(), zero))
    throw Error(ErrorCode::BadEndpoints, "S_0 is " + show(sums.front()) + ", expected 0");
  if (!scalar_eq(sums.back(), one))
    throw Error(ErrorCode::BadEndpoints, "S_d is " + show(sums.back()) + ", expected 1");
  for (std::size_t k = 0; k + 1 < sums.size(); ++k)
    if (scalar_lt(sums[k + 1], sums[k]))
      throw Error(ErrorCode::NotMonotone, "S_" + std::to_string(k + 1) + " < S_" + std::to_string(k));
  for (std::size_t k = 1; k + 1 < sums.size(); ++k) {
    const T left = sums[k] - sums[k - 1];
    const T right = sums[k + 1] - sums[k];
    if (scalar_lt(left, right))
      throw Error(ErrorCode::NotConcave, "increment at k = " + std::to_string(k + 1) +
                                             " exceeds the one at k = " + std::to_string(k));
  }
}

template <class T>
LorenzCurve<T> LorenzCurve<T>::from_sums(std::vector<T> sums) {
  check_curve_shape(sums);
  return LorenzCurve(std::move(sums));
}

template <class T>
T LorenzCurve<T>::evaluate(const T& omega) const {
  const T zero = ScalarTraits<T>::from_int(0);
  const T d = ScalarTraits<T>::from_int(static_cast<long>(dim()));
  if (omega < zero || omega > d) throw std::out_of_range("omega outside [0, d]");
  const std::size_t k = std::min(floor_index(omega), dim() - 1);
  const T frac = omega - ScalarTraits<T>::from_int(static_cast<long>(k));
  return T(sums_[k] + frac * (sums_[k + 1] - sums_[k]));
}

template <class T>
ProbVector<T> LorenzCurve<T>::to_vector() const {
  std::vector<T> entries;
  entries.reserve(dim());
  for (std::size_t k = 1; k < sums_.size(); ++k) entries.push_back(sums_[k] - sums_[k - 1]);
  return ProbVector<T>(std::move(entries));
}

template <class T>
LorenzCurve<T> partial_sums(const ProbVector<T>& x) {
  return LorenzCurve<T>(cumulative(x.entries()));
}

template <class T>
MajOrdering compare(const ProbVector<T>& x, const ProbVector<T>& y) {
  require_same_dim(x.dim(), y.dim(), "compare");
  bool x_dominates = true;
  bool y_dominates = true;
  T sx = ScalarTraits<T>::from_int(0);
  T sy = sx;
  // k = d holds trivially for probability vectors.
  for (std::size_t k = 0; k + 1 < x.dim(); ++k) {
    sx += x[k];
    sy += y[k];
    const int c = scalar_cmp(sx, sy);
    if (c < 0) x_dominates = false;
    if (c > 0) y_dominates = false;
  }
  if (x_dominates && y_dominates) return MajOrdering::Equal;
  if (x_dominates) return MajOrdering::Majorizes;
  if (y_dominates) return MajOrdering::MajorizedBy;
  return MajOrdering::Incomparable;
}

template <class T>
bool majorizes(const ProbVector<T>& x, const ProbVector<T>& y) {
  const MajOrdering o = compare(x, y);
  return o == MajOrdering::Majorizes || o == MajOrdering::Equal;
}

#define MAJLAT_INSTANTIATE_CORE(T)                                              \
  template class ProbVector<T>;                                                 \
  template class LorenzCurve<T>;                                                \
  template LorenzCurve<T> partial_sums<T>(const ProbVector<T>&);                \
  template std::vector<T> cumulative<T>(const std::vector<T>&);                 \
  template void check_curve_shape<T>(const std::vector<T>&);                    \
  template MajOrdering compare<T>(const ProbVector<T>&, const ProbVector<T>&);  \
  template bool majorizes<T>(const ProbVector<T>&, const ProbVector<T>&);

MAJLAT_INSTANTIATE_CORE(Rational)
MAJLAT_INSTANTIATE_CORE(double)

#undef MAJLAT_INSTANTIATE_CORE

}  // namespace majlat
