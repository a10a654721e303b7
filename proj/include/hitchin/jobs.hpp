#pragma once

#include "hitchin/verify.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace hitchin::jobs {

using json = nlohmann::json;

// Malformed job input; the message carries the schema path of the failure.
struct SchemaError : std::runtime_error {
  explicit SchemaError(const std::string& path, const std::string& msg)
      : std::runtime_error(path + ": " + msg) {}
};

struct Options {
  std::string mode = "exact";  // exact | float
  double tol = 1e-10;
  int nodes = 96;
  double fdStep = 1e-3;
  bool seedFree = true;  // reserved flag; every computation is deterministic
};

// Reports are deterministic: rationals as "p/q" strings, floating values as
// 17-significant-digit strings, objects with sorted keys.
json cmd_info(const std::string& family, int rank, const Options& opt);
json cmd_dims(const std::string& family, int rank, int d, const Options& opt);
json cmd_hitchin(const json& job, const Options& opt);
json cmd_generic(const json& job, const Options& opt);
json cmd_jets(const std::string& systemText, int order, const Options& opt);
json cmd_cech(const json& job, bool withGram, const Options& opt);
json cmd_cubic(const json& job, const Options& opt);
json cmd_periods(const json& job, const Options& opt);
json cmd_verify(const std::string& suite, const Options& opt);

}  // namespace hitchin::jobs
