#include "majlat/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace majlat {

namespace {

using nlohmann::json;

[[noreturn]] void parse_fail(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  if (v.is_number_unsigned()) return std::to_string(v.get<unsigned long long>());
  if (v.is_number_float()) return ScalarTraits<double>::to_decimal(v.get<double>());
  parse_fail("expected a number or decimal string, got " + v.dump());
}

std::vector<std::string> scalar_row(const json& row) {
  if (!row.is_array()) parse_fail("expected an array of scalars, got " + row.dump());
  std::vector<std::string> out;
  for (const auto& v : row) out.push_back(scalar_text(v));
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string> split_commas(std::string_view line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = line.find(',', start);
    out.emplace_back(trim(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

InputDocument parse_json_input(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    parse_fail(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) parse_fail("top-level JSON value must be an object");

  InputDocument out;
  if (doc.contains("d")) {
    if (!doc["d"].is_number_integer() || doc["d"].get<long long>() < 1) parse_fail("\"d\" must be a positive integer");
    out.d = doc["d"].get<std::size_t>();
  }
  if (doc.contains("vectors")) {
    if (!doc["vectors"].is_array()) parse_fail("\"vectors\" must be an array");
    for (const auto& row : doc["vectors"]) out.vectors.push_back(scalar_row(row));
  } else if (doc.contains("result")) {
    const json& r = doc["result"];
    if (!r.is_object() || !(r.contains("rational") || r.contains("decimal")))
      parse_fail("\"result\" must hold a \"rational\" or \"decimal\" array");
    out.vectors.push_back(scalar_row(r.contains("rational") ? r["rational"] : r["decimal"]));
  }
  if (doc.contains("states")) {
    if (!doc["states"].is_array()) parse_fail("\"states\" must be an array");
    for (const auto& s : doc["states"]) {
      StateRecord rec;
      if (!s.is_object()) parse_fail("each state must be an object");
      if (s.contains("amplitudes")) {
        rec.kind = StateRecord::Kind::Amplitudes;
        if (!s["amplitudes"].is_array()) parse_fail("\"amplitudes\" must be an array");
        for (const auto& a : s["amplitudes"]) {
          if (a.is_array()) {
            if (a.size() != 2) parse_fail("an amplitude is [re, im]");
            rec.amplitudes.emplace_back(scalar_text(a[0]), scalar_text(a[1]));
          } else {
            rec.amplitudes.emplace_back(scalar_text(a), "0");
          }
        }
      } else if (s.contains("schmidt")) {
        rec.kind = StateRecord::Kind::Schmidt;
        rec.probabilities = scalar_row(s["schmidt"]);
      } else if (s.contains("spectrum")) {
        rec.kind = StateRecord::Kind::Spectrum;
        rec.probabilities = scalar_row(s["spectrum"]);
      } else {
        parse_fail("a state needs \"amplitudes\", \"schmidt\" or \"spectrum\"");
      }
      out.states.push_back(std::move(rec));
    }
  }
  if (out.vectors.empty() && out.states.empty()) parse_fail("no \"vectors\", \"result\" or \"states\" in input");
  return out;
}

InputDocument parse_csv_input(std::string_view text) {
  InputDocument out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    const std::string_view body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    out.vectors.push_back(split_commas(body));
  }
  if (out.vectors.empty()) parse_fail("CSV input has no rows");
  return out;
}

InputDocument read_input(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorCode::IoError, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << file.rdbuf();
  const std::string text = buf.str();
  const bool csv_name = path.size() >= 4 && path.compare(path.size() - 4, 4, ".csv") == 0;
  const std::string_view body = trim(text);
  if (!csv_name && !body.empty() && body.front() == '{') return parse_json_input(text);
  return parse_csv_input(text);
}

template <class T>
std::vector<T> parse_scalar_list(std::string_view text) {
  std::vector<T> out;
  for (const auto& item : split_commas(text)) out.push_back(parse_scalar<T>(item));
  return out;
}

template <class T>
std::vector<ProbVector<T>> build_vectors(const InputDocument& doc, MakeOptions options) {
  std::vector<ProbVector<T>> out;
  for (std::size_t i = 0; i < doc.vectors.size(); ++i) {
    const auto& row = doc.vectors[i];
    if (doc.d && row.size() != *doc.d)
      throw Error(ErrorCode::DimensionMismatch, "vector " + std::to_string(i) + " has " + std::to_string(row.size()) +
                                                    " entries but d = " + std::to_string(*doc.d));
    std::vector<T> raw;
    for (const auto& s : row) raw.push_back(parse_scalar<T>(s));
    out.push_back(ProbVector<T>::make(std::move(raw), options));
  }
  return out;
}

template <class T>
PureStateSpec<T> build_state(const StateRecord& record) {
  using Spec = PureStateSpec<T>;
  switch (record.kind) {
    case StateRecord::Kind::Amplitudes: {
      typename Spec::Amplitudes a;
      for (const auto& [re, im] : record.amplitudes) a.values.push_back({parse_scalar<T>(re), parse_scalar<T>(im)});
      return Spec{a};
    }
    case StateRecord::Kind::Schmidt: {
      typename Spec::SchmidtProbs s;
      for (const auto& p : record.probabilities) s.values.push_back(parse_scalar<T>(p));
      return Spec{s};
    }
    case StateRecord::Kind::Spectrum: break;
  }
  typename Spec::Spectrum s;
  for (const auto& p : record.probabilities) s.values.push_back(parse_scalar<T>(p));
  return Spec{s};
}

template std::vector<Rational> parse_scalar_list<Rational>(std::string_view);
template std::vector<double> parse_scalar_list<double>(std::string_view);
template std::vector<ProbVector<Rational>> build_vectors<Rational>(const InputDocument&, MakeOptions);
template std::vector<ProbVector<double>> build_vectors<double>(const InputDocument&, MakeOptions);
template PureStateSpec<Rational> build_state<Rational>(const StateRecord&);
template PureStateSpec<double> build_state<double>(const StateRecord&);

}  // namespace majlat
