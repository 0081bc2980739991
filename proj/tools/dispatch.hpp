#pragma once

#include <atomic>
#include <string>
#include <vector>

#include <json.hpp>

namespace schinzel::cli {

/// One CLI invocation, already parsed. Field defaults are the documented
/// command defaults.
struct Request {
  std::string command;
  std::string ring = "Z";
  std::vector<std::string> polys;

  long want = 1;
  long scan_cap = 200;
  int degree_bound = -1;  // min-delta; -1 selects the default bound
  std::string box_lo = "-100";
  std::string box_hi = "100";
  int box_degree = 2;
  long box_height = 3;
  std::string window_lo = "0";
  std::string window_hi = "0";
  std::string modulus = "1";
  std::string two_n = "4";
  int av = 2;
  std::string fixtures_dir;
  std::string budget_scale;  // rational text, "" = 1
  unsigned long seed = 1;
  const std::atomic<bool>* interrupt = nullptr;
};

struct Response {
  int exit_code = 0;
  nlohmann::json body;
};

/// Executes one command. Exit codes: 0 success, 1 parse/config errors,
/// 2 precondition violations, 3 budget exhaustion.
Response run(const Request& req);

/// Lossy human-readable rendering of a response body.
std::string render_table(const nlohmann::json& body);

}  // namespace schinzel::cli
