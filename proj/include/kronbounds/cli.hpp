#pragma once

#include "json.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace kronbounds {

/// Parsed invocation. Numeric fields serialize as decimal strings so the
/// config survives any JSON consumer; parse/serialize round-trips exactly.
struct RunConfig {
  std::string command;
  std::vector<std::string> partitions;
  std::string method = "character";  // kron: character | alternating | both
  std::string suite;                 // verify target
  std::string qbinom_mode;           // poly | delta | gapbound
  long long qbinom_l = 0;
  long long qbinom_m = 0;
  long long qbinom_k = 0;
  int n_max = -1;  // -1 lets each suite pick its default
  int l_max = -1;
  int k = 1;
  int t_max = 3;
  int samples = -1;
  std::string format = "table";  // table | json | csv
  int jobs = 1;
  long long budget = 100'000'000;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

nlohmann::json run_config_json(const RunConfig& c);
RunConfig run_config_from_json(const nlohmann::json& j);

/// Executes one command line (without the program name) against the given
/// streams. Exit codes: 0 success, 1 verification failure or internal
/// inconsistency, 2 usage or parse error, 3 resource guard.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kronbounds
