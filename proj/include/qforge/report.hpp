#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "qforge/algebra.hpp"
#include "qforge/error.hpp"
#include "qforge/quadratic.hpp"

namespace qforge {

using Json = nlohmann::json;

// One CLI invocation, independent of argv parsing.
struct CommandOptions {
  std::string command;
  std::string file_text;
  std::string file_name;
  std::optional<std::string> theta;
  std::optional<std::string> central;
  std::optional<std::size_t> maxdeg;      // hilbert
  std::optional<std::size_t> max_degree;  // global bound for series / regularity
  std::size_t degree = 2;                 // center
  int times = 1;                          // ext
  bool direct = false;                    // corner-crosscheck: the file is B itself
  bool skip_clifford_check = false;       // deform: let PBW detect a bad θ
  Limits limits;
};

// Full report: command, conventions, result, hypotheses, status. A qforge::Error
// raised by the computation becomes status "error" with its code; any context
// gathered before the failure is kept.
Json run_command(const CommandOptions& options);

// Report for a failure, with the stable error code.
Json error_report(const std::string& command, ErrorCode code, const std::string& message);

// 0 for "ok", 1 for "failed" or a mathematical error, 2 for an input error.
int exit_code(const Json& report);

// Sorted-key JSON (2-space indent) or an indented text rendering.
std::string emit_report(const Json& report, bool as_json);

// Serialization helpers.
Json to_json(const Scalar& s);
Json to_json(const Vec& v);
Json to_json(const FiniteAlgebra& a);

}  // namespace qforge
