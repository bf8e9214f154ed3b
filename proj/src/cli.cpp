#include "majlat/cli.hpp"

#include <fstream>
#include <ostream>
#include <utility>

#include "json.hpp"
#include "majlat/io.hpp"
#include "majlat/lattice.hpp"
#include "majlat/polytope.hpp"
#include "majlat/svg.hpp"

namespace majlat {

namespace {

using Json = nlohmann::ordered_json;

template <class T>
Json vector_json(const std::vector<T>& entries) {
  Json out = Json::object();
  Json decimal = Json::array();
  for (const T& v : entries) decimal.push_back(to_decimal_string(v));
  out["decimal"] = std::move(decimal);
  if constexpr (ScalarTraits<T>::mode == NumericMode::Exact) {
    Json rational = Json::array();
    for (const T& v : entries) rational.push_back(ScalarTraits<T>::to_rational(v));
    out["rational"] = std::move(rational);
  }
  return out;
}

template <class T>
Json vector_json(const ProbVector<T>& v) {
  return vector_json(v.entries());
}

void require_count(std::size_t lo, std::size_t hi, std::size_t n, Command c) {
  if (n < lo || n > hi) {
    const std::string want = lo == hi ? std::to_string(lo) : "at least " + std::to_string(lo);
    throw Error(ErrorCode::InvalidJob,
                std::string(command_name(c)) + " needs " + want + " input vector(s), got " + std::to_string(n));
  }
}

template <class T>
class Runner {
 public:
  explicit Runner(const JobSpec& job) : job_(job) {}

  JobOutput operator()() {
    InputDocument doc;
    if (!job_.input_path.empty()) doc = read_input(job_.input_path);
    inputs_ = build_vectors<T>(doc, job_.make);

    doc_["command"] = std::string(command_name(job_.command));
    doc_["mode"] = ScalarTraits<T>::mode == NumericMode::Exact ? "exact" : "float";
    if constexpr (ScalarTraits<T>::mode == NumericMode::Float) doc_["tolerance"] = float_tolerance();

    switch (job_.command) {
      case Command::Compare: pairwise(); break;
      case Command::Meet: pairwise(); break;
      case Command::Join: pairwise(); break;
      case Command::Inf: family(); break;
      case Command::Sup: family(); break;
      case Command::Polytope: polytope(); break;
      case Command::Ball: ball(); break;
      case Command::Ocr: ocr(doc); break;
      case Command::Lorenz: lorenz(); break;
    }

    JobOutput out;
    out.json = doc_.dump(2) + "\n";
    if (!job_.svg_path.empty()) out.svg = emit_lorenz_svg(plot_);
    return out;
  }

 private:
  void echo_inputs(const std::vector<ProbVector<T>>& vs, const std::string& prefix) {
    Json arr = Json::array();
    for (std::size_t i = 0; i < vs.size(); ++i) {
      arr.push_back(vector_json(vs[i]));
      plot(prefix + std::to_string(i + 1), vs[i]);
    }
    doc_["d"] = vs.empty() ? 0 : vs.front().dim();
    doc_["inputs"] = std::move(arr);
  }

  void plot(std::string label, const ProbVector<T>& v) { plot_.push_back({std::move(label), partial_sums(v)}); }

  void pairwise() {
    require_count(2, 2, inputs_.size(), job_.command);
    echo_inputs(inputs_, "x");
    const auto& x = inputs_[0];
    const auto& y = inputs_[1];
    if (job_.command == Command::Compare) {
      doc_["ordering"] = std::string(ordering_name(compare(x, y)));
      return;
    }
    const bool is_meet = job_.command == Command::Meet;
    const ProbVector<T> r = is_meet ? meet(x, y) : join(x, y);
    doc_["result"] = vector_json(r);
    plot(is_meet ? "meet" : "join", r);
  }

  void family() {
    echo_inputs(inputs_, "x");
    const auto fam = FamilyDescriptor<T>::finite(inputs_);
    const bool is_inf = job_.command == Command::Inf;
    const ProbVector<T> r = is_inf ? family_inf(fam) : family_sup(fam);
    doc_["result"] = vector_json(r);
    plot(is_inf ? "inf" : "sup", r);
  }

  // Writes the selected polytope results; "result" holds the single vector
  // when exactly one of inf/sup is requested.
  void polytope_results(const Polytope<T>& p, bool everything) {
    const bool want_inf = job_.want_inf || everything;
    const bool want_sup = job_.want_sup || everything;
    if (job_.want_vertices || everything) {
      Json verts = Json::array();
      for (const auto& v : p.vertices()) verts.push_back(vector_json(v));
      doc_["vertices"] = std::move(verts);
    }
    if (want_inf && want_sup) {
      const auto lo = polytope_inf(p);
      const auto hi = polytope_sup(p);
      doc_["inf"] = vector_json(lo);
      doc_["sup"] = vector_json(hi);
      plot("inf", lo);
      plot("sup", hi);
    } else if (want_inf || want_sup) {
      const auto r = want_inf ? polytope_inf(p) : polytope_sup(p);
      doc_["result"] = vector_json(r);
      plot(want_inf ? "inf" : "sup", r);
    }
  }

  bool everything() const { return !job_.want_inf && !job_.want_sup && !job_.want_vertices; }

  void polytope() {
    const auto p = Polytope<T>::from_vertices(inputs_);
    echo_inputs(inputs_, "v");
    polytope_results(p, everything());
  }

  void ball() {
    std::optional<ProbVector<T>> center;
    if (!job_.center.empty()) {
      center = ProbVector<T>::make(parse_scalar_list<T>(job_.center), job_.make);
    } else if (!inputs_.empty()) {
      center = inputs_.front();
    } else {
      throw Error(ErrorCode::InvalidJob, "ball needs --center or an input vector");
    }
    if (job_.eps.empty()) throw Error(ErrorCode::InvalidJob, "ball needs --eps");
    const auto b = Ball<T>::make(*center, parse_scalar<T>(job_.eps));
    doc_["d"] = b.center.dim();
    doc_["center"] = vector_json(b.center);
    doc_["eps"] = to_decimal_string(b.radius);
    plot("center", b.center);
    const auto p = ball_vertices(b, VertexEnumOptions{.max_dim = job_.max_dim});
    polytope_results(p, everything());
  }

  void ocr(const InputDocument& doc) {
    const QrtKind kind{*job_.theory};
    std::vector<ProbVector<T>> targets = inputs_;
    for (const auto& s : doc.states) targets.push_back(state_to_vector(build_state<T>(s), kind));
    echo_inputs(targets, "target");
    const auto r = optimal_common_resource(FamilyDescriptor<T>::finite(std::move(targets)), kind);
    doc_["theory"] = std::string(theory_name(kind.theory));
    doc_["direction"] = kind.direction() == Direction::Direct ? "direct" : "reversed";
    doc_["bound"] = kind.direction() == Direction::Direct ? "supremum" : "infimum";
    doc_["result"] = vector_json(r);
    plot("ocr", r);
  }

  void lorenz() {
    require_count(1, inputs_.size(), inputs_.size(), job_.command);
    echo_inputs(inputs_, "x");
    Json curves = Json::array();
    for (std::size_t i = 0; i < inputs_.size(); ++i) {
      Json c = Json::object();
      c["label"] = "x" + std::to_string(i + 1);
      c["sums"] = vector_json(partial_sums(inputs_[i]).sums());
      curves.push_back(std::move(c));
    }
    doc_["curves"] = std::move(curves);
  }

  const JobSpec& job_;
  std::vector<ProbVector<T>> inputs_;
  Json doc_ = Json::object();
  std::vector<std::pair<std::string, LorenzCurve<T>>> plot_;
};

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw Error(ErrorCode::IoError, "cannot write '" + path + "'");
  f << content;
  if (!f) throw Error(ErrorCode::IoError, "write failed for '" + path + "'");
}

}  // namespace

std::string_view command_name(Command c) noexcept {
  switch (c) {
    case Command::Compare: return "compare";
    case Command::Meet: return "meet";
    case Command::Join: return "join";
    case Command::Inf: return "inf";
    case Command::Sup: return "sup";
    case Command::Polytope: return "polytope";
    case Command::Ball: return "ball";
    case Command::Ocr: return "ocr";
    case Command::Lorenz: return "lorenz";
  }
  return "unknown";
}

std::optional<Command> parse_command(std::string_view name) noexcept {
  for (Command c : {Command::Compare, Command::Meet, Command::Join, Command::Inf, Command::Sup, Command::Polytope,
                    Command::Ball, Command::Ocr, Command::Lorenz})
    if (command_name(c) == name) return c;
  return std::nullopt;
}

void validate_job(const JobSpec& job) {
  if (job.tolerance && job.mode != NumericMode::Float)
    throw Error(ErrorCode::InvalidJob, "--tol is only valid in float mode");
  if (job.tolerance && !(*job.tolerance >= 0.0))
    throw Error(ErrorCode::InvalidJob, "--tol must be non-negative");
  if (job.command == Command::Ocr && !job.theory) throw Error(ErrorCode::InvalidJob, "ocr requires --theory");
  if (job.command != Command::Ocr && job.theory) throw Error(ErrorCode::InvalidJob, "--theory only applies to ocr");
  if (job.input_path.empty() && !(job.command == Command::Ball && !job.center.empty()))
    throw Error(ErrorCode::InvalidJob, "an input file (--in) is required");
}

int exit_code_for(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::IoError: return 2;
    case ErrorCode::DimensionTooLarge: return 3;
    default: return 1;
  }
}

JobOutput execute(const JobSpec& job) {
  validate_job(job);
  if (job.mode == NumericMode::Exact) return Runner<Rational>(job)();
  ToleranceScope scope(job.tolerance.value_or(kDefaultTolerance));
  return Runner<double>(job)();
}

int run(const JobSpec& job, std::ostream& out, std::ostream& err) {
  try {
    const JobOutput result = execute(job);
    if (job.output_path.empty())
      out << result.json;
    else
      write_file(job.output_path, result.json);
    if (!job.svg_path.empty()) write_file(job.svg_path, result.svg);
    return 0;
  } catch (const Error& e) {
    err << "majlat: " << e.what() << '\n';
    return exit_code_for(e.code());
  }
}

}  // namespace majlat
