#pragma once

// Job description and runner behind the majlat command-line tool.
//
// Exit statuses: 0 success, 1 validation error, 2 I/O or parse error,
// 3 unsupported request (e.g. ball dimension above the enumeration cap).

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "majlat/core.hpp"
#include "majlat/qrt.hpp"
#include "majlat/scalar.hpp"

namespace majlat {

enum class Command { Compare, Meet, Join, Inf, Sup, Polytope, Ball, Ocr, Lorenz };

std::string_view command_name(Command c) noexcept;
std::optional<Command> parse_command(std::string_view name) noexcept;

struct JobSpec {
  Command command = Command::Compare;
  NumericMode mode = NumericMode::Exact;
  std::optional<double> tolerance;  // float mode only
  std::string input_path;
  std::string output_path;  // empty: result goes to the output stream
  std::optional<Theory> theory;  // ocr only
  std::string svg_path;  // empty: no plot
  MakeOptions make{};
  // polytope / ball selectors; none set means "everything".
  bool want_inf = false;
  bool want_sup = false;
  bool want_vertices = false;
  std::string center;  // ball: comma-separated entries, else first input vector
  std::string eps;     // ball radius
  std::size_t max_dim = 10;
};

// Errors: InvalidJob.
void validate_job(const JobSpec& job);

int exit_code_for(ErrorCode code) noexcept;

struct JobOutput {
  std::string json;
  std::string svg;  // empty unless job.svg_path is set
};

// Runs the job without touching the filesystem except for reading input.
// Throws Error on failure.
JobOutput execute(const JobSpec& job);

// Full run: validates, executes, writes artifacts and reports failures on
// err. Returns the exit status.
int run(const JobSpec& job, std::ostream& out, std::ostream& err);

}  // namespace majlat
