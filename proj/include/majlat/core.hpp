#pragma once

// Ordered probability vectors, their Lorenz curves and the majorization order.
//
// Every type here is an immutable value once built. T is either Rational
// (exact mode) or double (float mode, see scalar.hpp).

#include <cstddef>
#include <string_view>
#include <vector>

#include "majlat/error.hpp"
#include "majlat/scalar.hpp"

namespace majlat {

struct MakeOptions {
  bool normalize = false;  // divide by the total instead of requiring sum 1
  bool sort = false;       // rearrange non-increasing instead of rejecting
};

// A probability vector with non-increasing, non-negative entries.
template <class T>
class ProbVector {
 public:
  // Validates raw entries. Errors: EmptyInput, NegativeEntry, NotNormalized,
  // NotSorted.
  static ProbVector make(std::vector<T> raw, MakeOptions options = {});

  // e_d = [1, 0, ..., 0], the top of the lattice.
  static ProbVector top(std::size_t d);
  // u_d = [1/d, ..., 1/d], the bottom of the lattice.
  static ProbVector bottom(std::size_t d);

  std::size_t dim() const noexcept { return entries_.size(); }
  const std::vector<T>& entries() const noexcept { return entries_; }
  const T& operator[](std::size_t i) const { return entries_[i]; }
  auto begin() const noexcept { return entries_.begin(); }
  auto end() const noexcept { return entries_.end(); }

  // Exact equality in exact mode; entrywise within tau in float mode.
  friend bool operator==(const ProbVector& a, const ProbVector& b) {
    if (a.dim() != b.dim()) return false;
    for (std::size_t i = 0; i < a.dim(); ++i)
      if (!scalar_eq(a.entries_[i], b.entries_[i])) return false;
    return true;
  }

 private:
  explicit ProbVector(std::vector<T> entries) : entries_(std::move(entries)) {}

  template <class U>
  friend class LorenzCurve;

  std::vector<T> entries_;
};

// Cumulative values S_0 = 0, S_1, ..., S_d = 1 of an ordered vector. The
// curve is the linear interpolation of the points (k, S_k).
template <class T>
class LorenzCurve {
 public:
  // Validates endpoints, monotonicity and concavity.
  // Errors: BadEndpoints, NotMonotone, NotConcave.
  static LorenzCurve from_sums(std::vector<T> sums);

  std::size_t dim() const noexcept { return sums_.size() - 1; }
  const std::vector<T>& sums() const noexcept { return sums_; }
  const T& at(std::size_t k) const { return sums_.at(k); }

  // Value of the interpolated curve at omega in [0, d].
  T evaluate(const T& omega) const;

  // Finite differences S_k - S_{k-1}; the inverse of partial_sums.
  ProbVector<T> to_vector() const;

  friend bool operator==(const LorenzCurve& a, const LorenzCurve& b) {
    if (a.sums_.size() != b.sums_.size()) return false;
    for (std::size_t i = 0; i < a.sums_.size(); ++i)
      if (!scalar_eq(a.sums_[i], b.sums_[i])) return false;
    return true;
  }

 private:
  explicit LorenzCurve(std::vector<T> sums) : sums_(std::move(sums)) {}

  template <class U>
  friend LorenzCurve<U> partial_sums(const ProbVector<U>& x);

  std::vector<T> sums_;
};

enum class MajOrdering { Majorizes, MajorizedBy, Equal, Incomparable };

std::string_view ordering_name(MajOrdering o) noexcept;

template <class T>
LorenzCurve<T> partial_sums(const ProbVector<T>& x);

template <class T>
ProbVector<T> curve_to_vector(const LorenzCurve<T>& c) {
  return c.to_vector();
}

// Raw cumulative sums (size d + 1) of any sequence; no validation.
template <class T>
std::vector<T> cumulative(const std::vector<T>& values);

// Checks the Lorenz-curve invariants on raw cumulative values and throws
// the matching error.
template <class T>
void check_curve_shape(const std::vector<T>& sums);

// Errors: DimensionMismatch.
template <class T>
MajOrdering compare(const ProbVector<T>& x, const ProbVector<T>& y);

// x majorizes y (weakly).
template <class T>
bool majorizes(const ProbVector<T>& x, const ProbVector<T>& y);

void require_same_dim(std::size_t a, std::size_t b, std::string_view what);

}  // namespace majlat
