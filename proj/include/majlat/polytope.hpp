#pragma once

// Infimum and supremum over convex polytopes inside the ordered simplex.
//
// The infimum (supremum) of a convex polytope equals the infimum (supremum)
// of its vertex set, so both reduce to the lattice family operations. The
// l1 ball around an ordered vector, intersected with the ordered simplex, is
// such a polytope; its supremum and infimum are the steepest and flattest
// epsilon-approximations of the centre.

#include <cstddef>
#include <vector>

#include "majlat/core.hpp"
#include "majlat/lattice.hpp"

namespace majlat {

template <class T>
class Polytope {
 public:
  // Duplicates are removed; the remaining vertices are kept in canonical
  // (lexicographically decreasing) order. Errors: EmptyFamily,
  // DimensionMismatch.
  static Polytope from_vertices(std::vector<ProbVector<T>> vertices);

  std::size_t dim() const noexcept { return vertices_.front().dim(); }
  const std::vector<ProbVector<T>>& vertices() const noexcept { return vertices_; }

 private:
  explicit Polytope(std::vector<ProbVector<T>> v) : vertices_(std::move(v)) {}

  std::vector<ProbVector<T>> vertices_;
};

template <class T>
struct Ball {
  ProbVector<T> center;
  T radius;

  // Errors: NegativeRadius.
  static Ball make(ProbVector<T> center, T radius);
};

enum class VertexStrategy {
  // Enumerates the combinatorial types a vertex can have: runs of equal
  // entries, each either pinned to a centre coordinate, pinned to zero or
  // free, with at most two free runs fixed by the sum and the tight l1
  // constraint. Polynomial per run layout; practical up to d = 10.
  BlockStructure,
  // Solves every (d-1)-subset of the half-space constraints together with
  // the sum constraint and keeps feasible solutions. Combinatorial in 2^d;
  // only usable for small d.
  ActiveSetBruteForce,
};

struct VertexEnumOptions {
  std::size_t max_dim = 10;
  VertexStrategy strategy = VertexStrategy::BlockStructure;
};

// Errors: DimensionTooLarge when d exceeds options.max_dim.
template <class T>
Polytope<T> ball_vertices(const Ball<T>& ball, VertexEnumOptions options = {});

// l1 distance between two vectors of equal dimension.
template <class T>
T l1_distance(const std::vector<T>& a, const std::vector<T>& b);

template <class T>
ProbVector<T> polytope_inf(const Polytope<T>& p);

template <class T>
ProbVector<T> polytope_sup(const Polytope<T>& p);

template <class T>
ProbVector<T> steepest_approx(const Ball<T>& ball, VertexEnumOptions options = {});

template <class T>
ProbVector<T> flattest_approx(const Ball<T>& ball, VertexEnumOptions options = {});

}  // namespace majlat
