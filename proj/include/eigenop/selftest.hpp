#pragma once

// Invariant suite across all modules, run at reduced sizes. The result
// depends only on the seed and the budget, never on timing.

#include <cstdint>

#include "eigenop/budget.hpp"
#include "eigenop/json_io.hpp"

namespace eigenop {

/// {"seed": ..., "passed": bool, "checks": [{"name", "passed", "value", "limit"}...]}
Json selftest(std::uint64_t seed, const Budget& budget = {});

}  // namespace eigenop
