#pragma once

#include <functional>
#include <vector>

#include "blochkit/disk_grid.hpp"
#include "blochkit/errors.hpp"

namespace blochkit {

// Result of a supremum estimation. The estimator is a lower bound of the true
// supremum: it reports the best value it actually evaluated.
//
// stage_values holds one entry for the grid sweep plus one per refinement
// round and is nondecreasing; `value` equals stage_values.back().
// `converged` is true iff the last two stages differ by less than 1e-6
// relative.
struct SupremumEstimate {
  double value = 0.0;
  Complex witness{0.0, 0.0};
  std::vector<double> stage_values;
  bool converged = false;
};

using Integrand = std::function<double(Complex)>;

// Supremum of a nonnegative integrand over the open disk: full grid sweep,
// then coordinate-wise golden-section refinement around the top grid maxima.
// The integrand must be pure (grid evaluation is data-parallel over points).
// Throws NumericalOverflow if the integrand produces a non-finite value.
SupremumEstimate sup_over_disk(const Integrand& integrand, const DiskGrid& grid);

// Per-ring maxima of the integrand at the given radii (grid angles).
std::vector<double> ring_maxima(const Integrand& integrand,
                                const std::vector<double>& radii,
                                int angles_per_ring);

// Worker threads used for grid sweeps: BLOCHKIT_THREADS if set (clamped to
// [1, 64]), otherwise hardware concurrency clamped to [1, 8]. Results do not
// depend on the thread count.
int effective_thread_count();

}  // namespace blochkit
