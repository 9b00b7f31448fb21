#pragma once

#include <optional>

#include "tgp/reachdelete.hpp"

namespace tgp::detail {

// Like solve_iqp_exact, but also discards branches whose partial objective
// exceeds `cap`. Branches equal to the cap survive so ties stay visible.
std::optional<IQPSolution> solve_iqp_capped(const IQPInstance& inst, int max_vars, std::optional<long long> cap);

}  // namespace tgp::detail
