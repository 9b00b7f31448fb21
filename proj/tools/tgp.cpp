#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "commands.hpp"
#include "tgp/core.hpp"

using json = nlohmann::ordered_json;
using namespace tgp;
using namespace tgp::cli;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitSizeBound = 3;
constexpr int kExitOracle = 4;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Temporal graph parameters and solvers"};
  app.set_help_flag("--help", "Print help and exit");
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  std::string out_path;
  app.add_option("--parallel", opt.threads, "Worker threads")->check(CLI::PositiveNumber);
  app.add_flag("--oracle-check", opt.oracle_check, "Cross-check against the brute-force oracle");
  app.add_option("-o,--out", out_path, "Write JSON here instead of stdout");

  std::string file, file2, source, expr_file;
  int delta = 0, h = 0, tau = 0, r = 0, leaf_mult = 0;
  bool exclude_source = false;
  std::vector<std::string> strategy;

  auto* tnd = app.add_subcommand("tnd", "Temporal neighbourhood partition");
  tnd->add_option("graph", file)->required();
  auto* tmd = app.add_subcommand("tmd", "Temporal modular decomposition");
  tmd->add_option("graph", file)->required();

  auto* tcw = app.add_subcommand("tcw", "Cliquewidth expressions");
  tcw->require_subcommand(1);
  auto* tcw_eval = tcw->add_subcommand("eval", "Evaluate an expression");
  tcw_eval->add_option("expression", file)->required();
  auto* tcw_verify = tcw->add_subcommand("verify", "Check that an expression builds a graph");
  tcw_verify->add_option("expression", file)->required();
  tcw_verify->add_option("graph", file2)->required();
  auto* tcw_star = tcw->add_subcommand("star", "Three-label expression for a star");
  tcw_star->add_option("graph", file)->required();
  auto* tcw_compile = tcw->add_subcommand("compile", "Expression from the modular decomposition");
  tcw_compile->add_option("graph", file)->required();

  auto* assoc = app.add_subcommand("assoc", "Delta-association graph");
  assoc->add_option("graph", file)->required();
  assoc->add_option("--delta", delta)->required();

  auto* dclique = app.add_subcommand("dclique", "Temporal delta-clique of size h");
  dclique->add_option("graph", file)->required();
  dclique->add_option("--delta", delta)->required();
  dclique->add_option("--h", h)->required();
  dclique->add_option("--expr", expr_file, "Static expression for the association graph");

  auto* starexp = app.add_subcommand("starexp", "Temporal star exploration");
  starexp->add_option("graph", file)->required();
  starexp->add_option("--tau", tau)->required();

  auto* burn = app.add_subcommand("burn", "Temporal graph burning");
  burn->require_subcommand(1);
  auto* burn_sim = burn->add_subcommand("simulate", "Run a strategy");
  burn_sim->add_option("graph", file)->required();
  burn_sim->add_option("--strategy", strategy, "Comma-separated vertex names")->required()->delimiter(',');
  auto* burn_solve = burn->add_subcommand("solve", "Decide burning within h steps");
  burn_solve->add_option("graph", file)->required();
  burn_solve->add_option("--h", h)->required();
  auto* burn_number = burn->add_subcommand("number", "Smallest successful strategy length");
  burn_number->add_option("graph", file)->required();
  auto* burn_gen = burn->add_subcommand("gen-sat", "Burning instance from a (3,2B)-SAT formula");
  burn_gen->add_option("cnf", file)->required();
  burn_gen->add_option("--leaf-multiplicity", leaf_mult, "Leaves per hub (0 = h + 1)")->check(CLI::NonNegativeNumber);

  auto* rd = app.add_subcommand("reachdelete", "Minimum time-edge deletion bounding reach");
  rd->add_option("graph", file)->required();
  rd->add_option("--source", source)->required();
  rd->add_option("--budget-reach", r)->required();
  rd->add_flag("--exclude-source", exclude_source, "Do not count the source against the budget");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  json params;
  params["parallel"] = opt.threads;
  params["oracle_check"] = opt.oracle_check;
  json doc;
  try {
    std::vector<Input> inputs;
    json result;
    std::string command;
    auto in = [&](const std::string& path) {
      inputs.push_back(read_input(path));
      return inputs.back();
    };
    if (*tnd) {
      command = "tnd";
      result = cmd_tnd(in(file), opt);
    } else if (*tmd) {
      command = "tmd";
      result = cmd_tmd(in(file), opt);
    } else if (*tcw_eval) {
      command = "tcw eval";
      result = cmd_tcw_eval(in(file), opt);
    } else if (*tcw_verify) {
      command = "tcw verify";
      auto e = in(file);
      result = cmd_tcw_verify(e, in(file2), opt);
    } else if (*tcw_star) {
      command = "tcw star";
      result = cmd_tcw_star(in(file), opt);
    } else if (*tcw_compile) {
      command = "tcw compile";
      result = cmd_tcw_compile(in(file), opt);
    } else if (*assoc) {
      command = "assoc";
      params["delta"] = delta;
      result = cmd_assoc(in(file), delta, opt);
    } else if (*dclique) {
      command = "dclique";
      params["delta"] = delta;
      params["h"] = h;
      auto g = in(file);
      if (!expr_file.empty()) {
        auto e = in(expr_file);
        result = cmd_dclique(g, delta, h, &e, opt);
      } else {
        result = cmd_dclique(g, delta, h, nullptr, opt);
      }
    } else if (*starexp) {
      command = "starexp";
      params["tau"] = tau;
      result = cmd_starexp(in(file), tau, opt);
    } else if (*burn_sim) {
      command = "burn simulate";
      params["strategy"] = strategy;
      result = cmd_burn_simulate(in(file), strategy, opt);
    } else if (*burn_solve) {
      command = "burn solve";
      params["h"] = h;
      result = cmd_burn_solve(in(file), h, opt);
    } else if (*burn_number) {
      command = "burn number";
      result = cmd_burn_number(in(file), opt);
    } else if (*burn_gen) {
      command = "burn gen-sat";
      params["leaf_multiplicity"] = leaf_mult;
      result = cmd_burn_gen_sat(in(file), leaf_mult, opt);
    } else if (*rd) {
      command = "reachdelete";
      params["source"] = source;
      params["budget_reach"] = r;
      params["exclude_source"] = exclude_source;
      result = cmd_reachdelete(in(file), source, r, exclude_source, opt);
    }
    doc["command"] = command;
    doc["inputs"] = input_json(inputs);
    doc["params"] = params;
    doc["result"] = result;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const SizeBoundError& e) {
    std::cerr << "size bound: " << e.what() << '\n';
    return kExitSizeBound;
  } catch (const OracleMismatch& e) {
    std::cerr << "oracle mismatch: " << e.what() << '\n';
    return kExitOracle;
  }

  std::string text = doc.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
      std::cerr << "error: cannot write '" << out_path << "'\n";
      return kExitInput;
    }
    f << text;
  }
  return kExitOk;
}
