#include "eigenop/budget.hpp"

#include <charconv>
#include <cstdlib>
#include <string>

#include "eigenop/errors.hpp"

namespace eigenop {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

Budget Budget::parse(std::string_view text) {
  Budget budget;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const auto item = trim(text.substr(0, comma));
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    if (item.empty()) continue;

    const auto eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorCode::invalid_argument, "budget entry without '=': " + std::string(item));
    }
    const auto key = trim(item.substr(0, eq));
    const auto value_text = trim(item.substr(eq + 1));
    std::size_t value = 0;
    const auto [ptr, ec] =
        std::from_chars(value_text.data(), value_text.data() + value_text.size(), value);
    if (ec != std::errc{} || ptr != value_text.data() + value_text.size() || value == 0) {
      throw Error(ErrorCode::invalid_argument,
                  "budget value must be a positive integer: " + std::string(item));
    }

    if (key == "max_degree") budget.max_degree = value;
    else if (key == "leibniz_work") budget.leibniz_work = value;
    else if (key == "mn_search_cap") budget.mn_search_cap = value;
    else if (key == "max_iterations") budget.max_iterations = value;
    else if (key == "schedule_window") budget.schedule_window = value;
    else throw Error(ErrorCode::invalid_argument, "unknown budget key: " + std::string(key));
  }
  return budget;
}

Budget Budget::from_env() {
  const char* env = std::getenv("EIGENOP_LAB_BUDGET");
  return env ? parse(env) : Budget{};
}

}  // namespace eigenop
