#include "nct/config.hpp"

#include <cstdlib>

namespace nct {

Budget Budget::from_env() {
  Budget b;
  if (const char* s = std::getenv("NCT_BUDGET")) {
    char* end = nullptr;
    long long v = std::strtoll(s, &end, 10);
    if (end && *end == '\0' && v > 0) b.max_search_nodes = v;
  }
  return b;
}

}  // namespace nct
