#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lefschetz/error.hpp"

namespace lefschetz::cli {

enum class Format { text, machine };

struct RunConfig {
  double tolerance = 1e-12;
  int max_iterations = 200;
  std::uint64_t seed = 0;
  Format format = Format::text;
};

struct Report {
  std::string command;
  std::string inputs_digest;
  nlohmann::ordered_json payload = nlohmann::ordered_json::object();
  std::vector<std::string> warnings;
  std::optional<ErrorCode> error;
  std::string error_message;
};

// 0 ok, 1 input/parse error, 2 domain precondition failure, 3 invariant breach.
int exit_code(const std::optional<ErrorCode>& error);

// File commands take the document text.
Report curve_analyze(const std::string& document, const RunConfig& config);
Report homology(const std::string& document, const RunConfig& config);
Report rh(const std::string& document, const RunConfig& config);
Report perturb(int n, double epsilon, std::complex<double> t, const RunConfig& config);
Report hessian(double a, double b, int n, const RunConfig& config);

// Failure before any command logic ran (unreadable file, bad flag).
Report input_failure(const std::string& command, const std::string& message);

std::string render(const Report& report, Format format);

}  // namespace lefschetz::cli
