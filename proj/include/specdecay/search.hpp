// search.hpp — grid-seeded scalar maximization with local refinement.
#pragma once

#include <cstddef>
#include <functional>

namespace specdecay {

struct GridPolicy {
  std::size_t points = 256;      // initial grid resolution (>= 3)
  bool log_spaced = false;       // requires lo > 0
  double refine_frac = 1e-6;     // refinement halts at step < refine_frac * box size
};

struct SupSearchResult {
  double argmax = 0.0;
  double value = 0.0;
  std::size_t evals = 0;
};

// Maximize g over [lo, hi]: evaluate the initial grid, then golden-section
// refine around the best bracket. The returned value is never below the grid
// maximum. For log_spaced grids the refinement step is measured in log
// coordinates.
SupSearchResult sup_search(const std::function<double(double)>& g, double lo, double hi,
                           const GridPolicy& policy = {});

}  // namespace specdecay
