#include "blochkit/disk_grid.hpp"

#include <cmath>

#include "blochkit/errors.hpp"

namespace blochkit {

DiskGrid DiskGrid::standard() { return with_rings(20, 512, 3); }

DiskGrid DiskGrid::with_rings(int rings, int angles, int refine) {
  if (rings < 1 || rings > 30)
    throw DomainError("DiskGrid: rings must be in [1, 30]");
  if (angles < 8) throw DomainError("DiskGrid: angles_per_ring must be >= 8");
  if (refine < 0 || refine > 10)
    throw DomainError("DiskGrid: refinement_rounds must be in [0, 10]");
  DiskGrid g;
  g.radii.reserve(rings);
  for (int k = 1; k <= rings; ++k) g.radii.push_back(1.0 - std::ldexp(1.0, -k));
  g.angles_per_ring = angles;
  g.refinement_rounds = refine;
  return g;
}

std::vector<Complex> DiskGrid::points() const {
  std::vector<Complex> pts;
  pts.reserve(point_count());
  for (double r : radii)
    for (int j = 0; j < angles_per_ring; ++j)
      pts.push_back(std::polar(r, 2.0 * M_PI * j / angles_per_ring));
  return pts;
}

}  // namespace blochkit
