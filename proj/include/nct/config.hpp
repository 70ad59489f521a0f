#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace nct {

// Enumeration budgets. Defaults are sized for n <= 3 and objects of <= 40 cells.
struct Budget {
  std::int64_t max_search_nodes = 5'000'000;  // backtracking nodes per enumeration
  int max_cells = 20'000;                     // cells allowed in a constructed object
  int max_completion_rounds = 10;             // free-composition closure rounds

  static Budget from_env();
};

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A configured bound was exceeded; carries the bound that tripped.
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// "Cannot happen" conditions, e.g. a limit of valid objects failing validation.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace nct
