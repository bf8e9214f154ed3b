#pragma once

// Meet and join of the majorization lattice, for pairs and for arbitrary
// families.
//
// A family enters either as a finite list of vectors or through its
// partial-sum extrema: for each k, the infimum and supremum of S_k over the
// family. The second form is how a family described by continuous
// parameters is supplied; only those extrema are needed to obtain its
// infimum and supremum.

#include <cstddef>
#include <functional>
#include <variant>
#include <vector>

#include "majlat/core.hpp"

namespace majlat {

template <class T>
class FamilyDescriptor {
 public:
  struct Finite {
    std::vector<ProbVector<T>> members;
  };
  struct Extremal {
    std::size_t dim;
    std::vector<T> lower;  // inf S_k, k = 0..d
    std::vector<T> upper;  // sup S_k, k = 0..d
  };

  // Errors: EmptyFamily, DimensionMismatch.
  static FamilyDescriptor finite(std::vector<ProbVector<T>> members);

  // Errors: ZeroDimension, InvalidExtremal.
  static FamilyDescriptor extremal(std::size_t d, std::vector<T> lower, std::vector<T> upper);
  static FamilyDescriptor extremal(std::size_t d, const std::function<T(std::size_t)>& lower,
                                   const std::function<T(std::size_t)>& upper);

  std::size_t dim() const noexcept;
  bool is_finite() const noexcept { return std::holds_alternative<Finite>(repr_); }
  // Empty for an extremal descriptor.
  const std::vector<ProbVector<T>>& members() const;

  // Per-index infimum / supremum of the partial sums, k = 0..d. For a
  // finite family these are folded left to right.
  std::vector<T> lower_sums() const;
  std::vector<T> upper_sums() const;

 private:
  explicit FamilyDescriptor(std::variant<Finite, Extremal> repr) : repr_(std::move(repr)) {}

  std::variant<Finite, Extremal> repr_;
};

// Indices retained by the upper-envelope scan, plus the resulting curve.
template <class T>
struct EnvelopeResult {
  std::vector<std::size_t> critical_indices;
  LorenzCurve<T> curve;
};

// Least concave majorant of the polygon through (k, S_k). From the current
// index i, the scan moves to the last j > i attaining the maximal slope
// (S_j - S_i) / (j - i); in float mode slopes within tau of the maximum
// count as ties. Errors: BadEndpoints, NotMonotone.
template <class T>
EnvelopeResult<T> upper_envelope(const std::vector<T>& sums);

// Block-averaging repair of a vector whose cumulative curve is not concave.
// Each pass finds the first ascent w_j > w_{j-1}, then the largest
// k <= j-1 whose predecessor w_{k-1} is at least the mean a of w_k..w_j (no
// predecessor for k = 1 counts as unbounded), and replaces w_k..w_j by a.
// Errors: NegativeEntry, NotNormalized, EmptyInput.
template <class T>
ProbVector<T> flatten(std::vector<T> w);

// Same as flatten, also reporting the number of averaging passes.
template <class T>
ProbVector<T> flatten(std::vector<T> w, std::size_t& passes);

// Greatest lower bound: differences of the pointwise minimum of the two
// cumulative curves. Errors: DimensionMismatch.
template <class T>
ProbVector<T> meet(const ProbVector<T>& x, const ProbVector<T>& y);

// Differences of the pointwise maximum of the two cumulative curves. Not
// necessarily ordered; join() repairs it.
template <class T>
std::vector<T> join_candidate(const ProbVector<T>& x, const ProbVector<T>& y);

// Least upper bound via join_candidate followed by flatten.
template <class T>
ProbVector<T> join(const ProbVector<T>& x, const ProbVector<T>& y);

// Least upper bound via the upper envelope of the maximum cumulative curve.
template <class T>
ProbVector<T> join_by_envelope(const ProbVector<T>& x, const ProbVector<T>& y);

template <class T>
ProbVector<T> family_inf(const FamilyDescriptor<T>& family);

template <class T>
ProbVector<T> family_sup(const FamilyDescriptor<T>& family);

}  // namespace majlat
