#include "majlat/qrt.hpp"

#include <string>

namespace majlat {

namespace {

template <class T>
T from_size(std::size_t v) {
  return ScalarTraits<T>::from_int(static_cast<long>(v));
}

template <class T>
void check_first_component(const T& alpha_sq, std::size_t d) {
  if (d == 0) throw Error(ErrorCode::ZeroDimension, "dimension must be at least 1");
  const T one = ScalarTraits<T>::from_int(1);
  if (scalar_eq(alpha_sq, one)) return;
  const T uniform = ScalarTraits<T>::ratio(1, static_cast<long>(d));
  if (!scalar_lt(uniform, alpha_sq) || scalar_lt(one, alpha_sq))
    throw Error(ErrorCode::AlphaOutOfRange,
                "alpha^2 = " + to_decimal_string(alpha_sq) + " must satisfy 1/d < alpha^2 <= 1 (d = " +
                    std::to_string(d) + ")");
}

void check_blocks(std::size_t d1, std::size_t d) {
  if (d1 < 1 || d1 >= d)
    throw Error(ErrorCode::BlockDimensionError,
                "need 1 <= d1 < d, got d1 = " + std::to_string(d1) + ", d = " + std::to_string(d));
}

// Partial sums of the two-block vector before sorting.
template <class T>
T two_block_sum(std::size_t k, std::size_t d1, std::size_t d, const T& a) {
  const T one = ScalarTraits<T>::from_int(1);
  if (k <= d1) return T(a * from_size<T>(k) / from_size<T>(d1));
  return T(a + (one - a) * from_size<T>(k - d1) / from_size<T>(d - d1));
}

template <class T>
std::vector<T> alpha_grid(const T& lowest, const T& step) {
  if (!scalar_lt(ScalarTraits<T>::from_int(0), step))
    throw Error(ErrorCode::InvalidJob, "grid step must be positive");
  std::vector<T> grid;
  const T one = ScalarTraits<T>::from_int(1);
  for (long j = 0;; ++j) {
    T a = one - step * ScalarTraits<T>::from_int(j);
    if (scalar_lt(a, lowest)) break;
    grid.push_back(a);
  }
  return grid;
}

}  // namespace

std::string_view theory_name(Theory t) noexcept {
  switch (t) {
    case Theory::Entanglement: return "entanglement";
    case Theory::Coherence: return "coherence";
    case Theory::Purity: return "purity";
  }
  return "unknown";
}

std::optional<Theory> parse_theory(std::string_view name) noexcept {
  if (name == "entanglement") return Theory::Entanglement;
  if (name == "coherence") return Theory::Coherence;
  if (name == "purity") return Theory::Purity;
  return std::nullopt;
}

template <class T>
ProbVector<T> state_to_vector(const PureStateSpec<T>& state, QrtKind kind) {
  using Spec = PureStateSpec<T>;
  std::vector<T> probs;
  const T zero = ScalarTraits<T>::from_int(0);

  if (const auto* amps = std::get_if<typename Spec::Amplitudes>(&state.data)) {
    if (kind.theory == Theory::Purity)
      throw Error(ErrorCode::InvalidStateSpec, "purity takes a spectrum, not amplitudes");
    for (const auto& a : amps->values) probs.push_back(a.re * a.re + a.im * a.im);
  } else {
    const bool schmidt = std::holds_alternative<typename Spec::SchmidtProbs>(state.data);
    if (schmidt && kind.theory != Theory::Entanglement)
      throw Error(ErrorCode::InvalidStateSpec, "Schmidt probabilities only apply to entanglement");
    if (!schmidt && kind.theory != Theory::Purity)
      throw Error(ErrorCode::InvalidStateSpec, "a spectrum only applies to purity");
    probs = schmidt ? std::get<typename Spec::SchmidtProbs>(state.data).values
                    : std::get<typename Spec::Spectrum>(state.data).values;
    for (std::size_t i = 0; i < probs.size(); ++i)
      if (scalar_lt(probs[i], zero))
        throw Error(ErrorCode::NegativeProbability,
                    "probability " + std::to_string(i) + " is " + to_decimal_string(probs[i]));
  }
  return ProbVector<T>::make(std::move(probs), MakeOptions{.normalize = false, .sort = true});
}

template <class T>
ProbVector<T> optimal_common_resource(const FamilyDescriptor<T>& targets, QrtKind kind) {
  return kind.direction() == Direction::Direct ? family_sup(targets) : family_inf(targets);
}

template <class T>
FamilyDescriptor<T> first_component_family(const T& alpha_sq, std::size_t d) {
  check_first_component(alpha_sq, d);
  const T one = ScalarTraits<T>::from_int(1);
  std::vector<T> lower{ScalarTraits<T>::from_int(0)};
  std::vector<T> upper{ScalarTraits<T>::from_int(0)};
  for (std::size_t k = 1; k <= d; ++k) {
    lower.push_back(k == 1 ? alpha_sq : T(alpha_sq + (one - alpha_sq) * from_size<T>(k - 1) / from_size<T>(d - 1)));
    upper.push_back(one);
  }
  return FamilyDescriptor<T>::extremal(d, std::move(lower), std::move(upper));
}

template <class T>
ProbVector<T> ocr_first_component_bound_sq(const T& alpha_sq, std::size_t d) {
  check_first_component(alpha_sq, d);
  std::vector<T> entries{alpha_sq};
  if (d > 1) {
    const T tail = (ScalarTraits<T>::from_int(1) - alpha_sq) / from_size<T>(d - 1);
    entries.insert(entries.end(), d - 1, tail);
  }
  return ProbVector<T>::make(std::move(entries));
}

template <class T>
ProbVector<T> ocr_first_component_bound(const T& alpha, std::size_t d) {
  if (!scalar_lt(ScalarTraits<T>::from_int(0), alpha))
    throw Error(ErrorCode::AlphaOutOfRange, "alpha must be positive");
  return ocr_first_component_bound_sq(T(alpha * alpha), d);
}

template <class T>
ProbVector<T> two_block_member(std::size_t d1, std::size_t d, const T& alpha_sq) {
  check_blocks(d1, d);
  const T one = ScalarTraits<T>::from_int(1);
  if (scalar_lt(alpha_sq, ScalarTraits<T>::from_int(0)) || scalar_lt(one, alpha_sq))
    throw Error(ErrorCode::AlphaMinOutOfRange, "alpha^2 must lie in [0, 1]");
  std::vector<T> entries(d1, T(alpha_sq / from_size<T>(d1)));
  entries.insert(entries.end(), d - d1, T((one - alpha_sq) / from_size<T>(d - d1)));
  return ProbVector<T>::make(std::move(entries), MakeOptions{.normalize = false, .sort = true});
}

template <class T>
FamilyDescriptor<T> two_block_family(std::size_t d1, std::size_t d, const T& alpha_min_sq) {
  check_blocks(d1, d);
  const T one = ScalarTraits<T>::from_int(1);
  const T threshold = ScalarTraits<T>::ratio(static_cast<long>(d1), static_cast<long>(d));
  if (!scalar_lt(threshold, alpha_min_sq) || scalar_lt(one, alpha_min_sq))
    throw Error(ErrorCode::AlphaMinOutOfRange,
                "alpha_min^2 = " + to_decimal_string(alpha_min_sq) + " must satisfy d1/d < alpha_min^2 <= 1");
  std::vector<T> lower;
  std::vector<T> upper;
  for (std::size_t k = 0; k <= d; ++k) {
    lower.push_back(two_block_sum(k, d1, d, alpha_min_sq));
    upper.push_back(two_block_sum(k, d1, d, one));
  }
  return FamilyDescriptor<T>::extremal(d, std::move(lower), std::move(upper));
}

template <class T>
ProbVector<T> ocr_two_block_superposition(std::size_t d1, std::size_t d, const T& alpha_min_sq) {
  (void)two_block_family(d1, d, alpha_min_sq);  // range checks
  const T one = ScalarTraits<T>::from_int(1);
  std::vector<T> entries(d1, T(alpha_min_sq / from_size<T>(d1)));
  entries.insert(entries.end(), d - d1, T((one - alpha_min_sq) / from_size<T>(d - d1)));
  return ProbVector<T>::make(std::move(entries));
}

template <class T>
FamilyDescriptor<T> sample_first_component_family(const T& alpha_sq, std::size_t d, const T& step) {
  check_first_component(alpha_sq, d);
  const T one = ScalarTraits<T>::from_int(1);
  std::vector<ProbVector<T>> members;
  for (const T& a : alpha_grid(alpha_sq, step)) {
    std::vector<T> entries{a};
    if (d > 1) entries.insert(entries.end(), d - 1, T((one - a) / from_size<T>(d - 1)));
    members.push_back(ProbVector<T>::make(std::move(entries)));
  }
  return FamilyDescriptor<T>::finite(std::move(members));
}

template <class T>
FamilyDescriptor<T> sample_two_block_family(std::size_t d1, std::size_t d, const T& alpha_min_sq, const T& step) {
  (void)two_block_family(d1, d, alpha_min_sq);
  std::vector<ProbVector<T>> members;
  for (const T& a : alpha_grid(alpha_min_sq, step)) members.push_back(two_block_member(d1, d, a));
  return FamilyDescriptor<T>::finite(std::move(members));
}

#define MAJLAT_INSTANTIATE_QRT(T)                                                                      \
  template ProbVector<T> state_to_vector<T>(const PureStateSpec<T>&, QrtKind);                         \
  template ProbVector<T> optimal_common_resource<T>(const FamilyDescriptor<T>&, QrtKind);              \
  template FamilyDescriptor<T> first_component_family<T>(const T&, std::size_t);                       \
  template ProbVector<T> ocr_first_component_bound_sq<T>(const T&, std::size_t);                       \
  template ProbVector<T> ocr_first_component_bound<T>(const T&, std::size_t);                          \
  template ProbVector<T> two_block_member<T>(std::size_t, std::size_t, const T&);                      \
  template FamilyDescriptor<T> two_block_family<T>(std::size_t, std::size_t, const T&);                \
  template ProbVector<T> ocr_two_block_superposition<T>(std::size_t, std::size_t, const T&);           \
  template FamilyDescriptor<T> sample_first_component_family<T>(const T&, std::size_t, const T&);      \
  template FamilyDescriptor<T> sample_two_block_family<T>(std::size_t, std::size_t, const T&, const T&);

MAJLAT_INSTANTIATE_QRT(Rational)
MAJLAT_INSTANTIATE_QRT(double)

#undef MAJLAT_INSTANTIATE_QRT

}  // namespace majlat
