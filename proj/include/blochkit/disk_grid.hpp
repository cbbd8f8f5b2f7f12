#pragma once

#include <complex>
#include <vector>

namespace blochkit {

using Complex = std::complex<double>;

// Sampling grid for the open unit disk: concentric rings at the stored radii,
// each carrying `angles_per_ring` equispaced angles. Radii are strictly
// increasing, all in [0, 1). `refinement_rounds` controls the local search
// run around grid maxima by the supremum engine.
struct DiskGrid {
  std::vector<double> radii;
  int angles_per_ring = 512;
  int refinement_rounds = 3;

  // Default schedule: radii 1 - 2^-k for k = 1..20, 512 angles, 3 rounds.
  static DiskGrid standard();

  // Same geometric schedule with k = 1..rings.
  static DiskGrid with_rings(int rings, int angles = 512, int refine = 3);

  // All sample points, radius-major then angle-major. Deterministic order.
  std::vector<Complex> points() const;

  std::size_t point_count() const {
    return radii.size() * static_cast<std::size_t>(angles_per_ring);
  }
};

}  // namespace blochkit
