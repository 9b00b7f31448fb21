#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tgp/cliquewidth.hpp"

namespace tgp::detail {

struct Part {
  std::vector<std::string> names;
  std::vector<Label> labels;
  std::map<std::pair<std::string, std::string>, TimeSet> edges;
};

Part evaluate_parts(const CWExpression& e,
                    std::map<int, std::vector<std::pair<std::string, std::string>>>* added);

}  // namespace tgp::detail
