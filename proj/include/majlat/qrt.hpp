#pragma once

// Optimal common resources for majorization-based resource theories.
//
// In a direct theory (purity) a state converts to another when its vector
// majorizes the other's, so the optimal common resource of a target set is
// the supremum of the target vectors. In a reversed theory (entanglement,
// coherence) the order flips and the infimum is the answer.

#include <cstddef>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "majlat/core.hpp"
#include "majlat/lattice.hpp"

namespace majlat {

enum class Theory { Entanglement, Coherence, Purity };
enum class Direction { Direct, Reversed };

struct QrtKind {
  Theory theory;

  constexpr Direction direction() const noexcept {
    return theory == Theory::Purity ? Direction::Direct : Direction::Reversed;
  }
};

std::string_view theory_name(Theory t) noexcept;
std::optional<Theory> parse_theory(std::string_view name) noexcept;

template <class T>
struct Amplitude {
  T re;
  T im;
};

// A pure state (or, for purity, a density matrix spectrum) as accepted by
// state_to_vector. Only the probabilities matter; phases are discarded.
template <class T>
struct PureStateSpec {
  struct Amplitudes {
    std::vector<Amplitude<T>> values;
  };
  struct SchmidtProbs {
    std::vector<T> values;
  };
  struct Spectrum {
    std::vector<T> values;
  };
  std::variant<Amplitudes, SchmidtProbs, Spectrum> data;
};

// Squared moduli (amplitudes) or the given probabilities, sorted
// non-increasing. Amplitudes are accepted for coherence and entanglement
// (Schmidt amplitudes), Schmidt probabilities for entanglement and spectra
// for purity. Errors: InvalidStateSpec, EmptyInput, NegativeProbability,
// NotNormalized.
template <class T>
ProbVector<T> state_to_vector(const PureStateSpec<T>& state, QrtKind kind);

// Supremum of the targets for a direct theory, infimum for a reversed one.
template <class T>
ProbVector<T> optimal_common_resource(const FamilyDescriptor<T>& targets, QrtKind kind);

// Targets {x : x_1 >= alpha^2} in dimension d. The partial-sum infimum is
// alpha^2 + (k - 1)(1 - alpha^2)/(d - 1); every S_k can reach 1.
// Errors: AlphaOutOfRange unless 1/d < alpha^2 <= 1 (alpha^2 = 1 is always
// accepted).
template <class T>
FamilyDescriptor<T> first_component_family(const T& alpha_sq, std::size_t d);

// [alpha^2, (1 - alpha^2)/(d - 1), ..., (1 - alpha^2)/(d - 1)].
template <class T>
ProbVector<T> ocr_first_component_bound_sq(const T& alpha_sq, std::size_t d);

// Same, parameterised by alpha itself (0 < alpha <= 1).
template <class T>
ProbVector<T> ocr_first_component_bound(const T& alpha, std::size_t d);

// Vector of the superposition alpha|mu> + beta|nu> where |mu> is uniform on
// the first d1 basis states and |nu> on the remaining d - d1, sorted.
// Errors: BlockDimensionError, AlphaMinOutOfRange (alpha_sq outside [0, 1]).
template <class T>
ProbVector<T> two_block_member(std::size_t d1, std::size_t d, const T& alpha_sq);

// Targets with alpha_min_sq <= alpha^2 <= 1. Each S_k is non-decreasing in
// alpha^2, so the extrema sit at the interval ends.
// Errors: BlockDimensionError unless 1 <= d1 < d, AlphaMinOutOfRange unless
// d1/d < alpha_min_sq <= 1.
template <class T>
FamilyDescriptor<T> two_block_family(std::size_t d1, std::size_t d, const T& alpha_min_sq);

// d1 entries alpha_min^2/d1 followed by d - d1 entries (1 - alpha_min^2)/(d - d1).
template <class T>
ProbVector<T> ocr_two_block_superposition(std::size_t d1, std::size_t d, const T& alpha_min_sq);

// Finite samples of the two continuous target sets: alpha^2 runs over
// 1, 1 - step, 1 - 2 step, ... down to the lower bound. The first-component
// sample spreads the remaining mass uniformly over the tail.
template <class T>
FamilyDescriptor<T> sample_first_component_family(const T& alpha_sq, std::size_t d, const T& step);

template <class T>
FamilyDescriptor<T> sample_two_block_family(std::size_t d1, std::size_t d, const T& alpha_min_sq, const T& step);

}  // namespace majlat
