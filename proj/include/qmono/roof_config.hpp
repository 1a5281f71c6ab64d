#pragma once

#include <cstdint>

namespace qmono {

/// Search settings for the convex-roof optimizer.
struct RoofConfig {
  int ensemble_size = 0;      // 0 selects min(2*rank, rank+2)
  int restarts = 20;
  int max_iterations = 2000;  // sweeps per restart
  int stall_sweeps = 50;      // consecutive sub-tolerance sweeps that end a restart
  double tolerance = 1e-9;    // relative objective decrease per sweep
  std::uint64_t seed = 0;
  /// false restricts the search to real rotations (diagnostic only).
  bool phase_search = true;

  /// Throws ArgumentError on nonpositive fields.
  void validate() const;
};

}  // namespace qmono
