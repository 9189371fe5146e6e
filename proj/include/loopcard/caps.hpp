#pragma once

#include <cstdint>

namespace loopcard {

// Resource guards. Exceeding one is an error, never silent truncation.
struct Caps {
  std::uint64_t order_cap = 100000;           // max group order built by closure or product
  std::uint64_t component_budget = 10000000;  // max components a groupoid may reach
  std::uint64_t work_cap = 100000000;         // max tuple checks in brute-force counting
};

// Process-wide defaults; the CLI applies env/flag overrides here once at startup.
inline Caps& global_caps() {
  static Caps caps;
  return caps;
}

}  // namespace loopcard
