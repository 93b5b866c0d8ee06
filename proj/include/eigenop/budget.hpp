#pragma once

#include <cstddef>
#include <string_view>

namespace eigenop {

/// Computation caps shared by every module. Defaults can be overridden through
/// the EIGENOP_LAB_BUDGET environment variable, e.g.
///   EIGENOP_LAB_BUDGET="max_degree=2048,leibniz_work=96"
struct Budget {
  std::size_t max_degree = 4096;        // largest truncation degree any result may carry
  std::size_t leibniz_work = 64;        // cap on k*M for the multinomial Leibniz sum
  std::size_t mn_search_cap = 10000;    // cap on the m_n search in the lemma harness
  std::size_t max_iterations = 100000;  // cap on orbit length / iterate index
  std::size_t schedule_window = 48;     // iterate indices tried per block when scheduling

  /// Parses "key=value,key=value". Unknown keys or malformed values throw
  /// Error(invalid_argument).
  static Budget parse(std::string_view text);

  /// Defaults overridden by EIGENOP_LAB_BUDGET when set.
  static Budget from_env();
};

}  // namespace eigenop
