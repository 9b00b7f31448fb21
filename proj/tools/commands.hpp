#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace tgp::cli {

struct Options {
  int threads = 1;
  bool oracle_check = false;
};

// Raised when --oracle-check finds a disagreement.
class OracleMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Input {
  std::string path;
  std::string text;
  std::string sha256;
};

Input read_input(const std::string& path);
nlohmann::ordered_json input_json(const std::vector<Input>& inputs);

nlohmann::ordered_json cmd_tnd(const Input& in, const Options& o);
nlohmann::ordered_json cmd_tmd(const Input& in, const Options& o);
nlohmann::ordered_json cmd_tcw_eval(const Input& expr, const Options& o);
nlohmann::ordered_json cmd_tcw_verify(const Input& expr, const Input& graph, const Options& o);
nlohmann::ordered_json cmd_tcw_star(const Input& in, const Options& o);
nlohmann::ordered_json cmd_tcw_compile(const Input& in, const Options& o);
nlohmann::ordered_json cmd_assoc(const Input& in, int delta, const Options& o);
nlohmann::ordered_json cmd_dclique(const Input& in, int delta, int h, const Input* expr, const Options& o);
nlohmann::ordered_json cmd_starexp(const Input& in, int tau, const Options& o);
nlohmann::ordered_json cmd_burn_simulate(const Input& in, const std::vector<std::string>& strategy, const Options& o);
nlohmann::ordered_json cmd_burn_solve(const Input& in, int h, const Options& o);
nlohmann::ordered_json cmd_burn_number(const Input& in, const Options& o);
nlohmann::ordered_json cmd_burn_gen_sat(const Input& cnf, int leaf_multiplicity, const Options& o);
nlohmann::ordered_json cmd_reachdelete(const Input& in, const std::string& source, int r, bool exclude_source,
                                       const Options& o);

}  // namespace tgp::cli
