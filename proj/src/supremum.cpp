#include "blochkit/supremum.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <thread>

namespace blochkit {

namespace {

constexpr double kInvGolden = 0.6180339887498949;
constexpr int kGoldenIters = 60;
constexpr int kTopCandidates = 5;
constexpr double kConvergedRel = 1e-6;

struct Probe {
  double x = 0.0;
  double value = -1.0;
};

// Maximize g over [lo, hi]; returns the best probed point, endpoints included.
template <class G>
Probe golden_max(G&& g, double lo, double hi) {
  Probe best{lo, g(lo)};
  if (!(hi > lo)) return best;
  double fb = g(hi);
  if (fb > best.value) best = {hi, fb};
  double a = lo, b = hi;
  double x1 = b - kInvGolden * (b - a), x2 = a + kInvGolden * (b - a);
  double f1 = g(x1), f2 = g(x2);
  if (f1 > best.value) best = {x1, f1};
  if (f2 > best.value) best = {x2, f2};
  for (int it = 0; it < kGoldenIters && (b - a) > 1e-15; ++it) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kInvGolden * (b - a);
      f2 = g(x2);
      if (f2 > best.value) best = {x2, f2};
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kInvGolden * (b - a);
      f1 = g(x1);
      if (f1 > best.value) best = {x1, f1};
    }
  }
  return best;
}

double checked(const Integrand& g, Complex z) {
  double v = g(z);
  if (!std::isfinite(v))
    throw NumericalOverflow("sup_over_disk: non-finite integrand value");
  return v;
}

}  // namespace

int effective_thread_count() {
  static const int count = [] {
    if (const char* env = std::getenv("BLOCHKIT_THREADS")) {
      char* end = nullptr;
      long v = std::strtol(env, &end, 10);
      if (end != env && v >= 1) return static_cast<int>(std::min(v, 64L));
      return 1;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return static_cast<int>(std::clamp(hw, 1u, 8u));
  }();
  return count;
}

std::vector<double> ring_maxima(const Integrand& integrand,
                                const std::vector<double>& radii,
                                int angles_per_ring) {
  std::vector<double> out;
  out.reserve(radii.size());
  for (double r : radii) {
    double best = 0.0;
    for (int j = 0; j < angles_per_ring; ++j) {
      double v = checked(integrand, std::polar(r, 2.0 * M_PI * j / angles_per_ring));
      best = std::max(best, v);
    }
    out.push_back(best);
  }
  return out;
}

SupremumEstimate sup_over_disk(const Integrand& integrand, const DiskGrid& grid) {
  const std::vector<Complex> pts = grid.points();
  const std::size_t n = pts.size();
  std::vector<double> vals(n);

  // Data-parallel sweep; the reduction below is sequential and index-ordered,
  // so results do not depend on the thread count.
  const int threads = std::min<int>(effective_thread_count(),
                                    static_cast<int>((n + 1023) / 1024));
  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i) vals[i] = integrand(pts[i]);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(threads);
    const std::size_t chunk = (n + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        const std::size_t lo = t * chunk, hi = std::min(n, lo + chunk);
        try {
          for (std::size_t i = lo; i < hi; ++i) vals[i] = integrand(pts[i]);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (const auto& e : errors)
      if (e) std::rethrow_exception(e);
  }
  for (std::size_t i = 0; i < n; ++i)
    if (!std::isfinite(vals[i]))
      throw NumericalOverflow("sup_over_disk: non-finite integrand value");

  SupremumEstimate est;
  const int na = grid.angles_per_ring;
  const std::size_t nr = grid.radii.size();

  // Grid stage.
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  const std::size_t top = std::min<std::size_t>(kTopCandidates, n);
  std::partial_sort(order.begin(), order.begin() + top, order.end(),
                    [&](std::size_t a, std::size_t b) { return vals[a] > vals[b]; });
  double best_value = vals[order[0]];
  Complex best_witness = pts[order[0]];
  est.stage_values.push_back(best_value);

  // Local refinement cells around the top grid maxima. The radial bracket
  // spans the neighboring rings (down to the disk center below ring 1); the
  // angular bracket spans the neighboring angles.
  struct Cell {
    double r, th, rlo, rhi, tlo, thi;
  };
  std::vector<Cell> cells;
  const double dth = 2.0 * M_PI / na;
  for (std::size_t c = 0; c < top; ++c) {
    const std::size_t i = order[c];
    const std::size_t ri = i / na;
    const int ai = static_cast<int>(i % na);
    Cell cell;
    cell.r = grid.radii[ri];
    cell.th = dth * ai;
    cell.rlo = ri > 0 ? grid.radii[ri - 1] : 0.0;
    cell.rhi = ri + 1 < nr ? grid.radii[ri + 1] : grid.radii[ri];
    cell.tlo = cell.th - dth;
    cell.thi = cell.th + dth;
    cells.push_back(cell);
  }

  for (int round = 0; round < grid.refinement_rounds; ++round) {
    for (Cell& cell : cells) {
      Probe pr = golden_max(
          [&](double r) { return checked(integrand, std::polar(r, cell.th)); },
          cell.rlo, cell.rhi);
      if (pr.value > best_value) {
        best_value = pr.value;
        best_witness = std::polar(pr.x, cell.th);
      }
      cell.r = pr.x;
      Probe pt = golden_max(
          [&](double th) { return checked(integrand, std::polar(cell.r, th)); },
          cell.tlo, cell.thi);
      if (pt.value > best_value) {
        best_value = pt.value;
        best_witness = std::polar(cell.r, pt.x);
      }
      cell.th = pt.x;
    }
    est.stage_values.push_back(std::max(est.stage_values.back(), best_value));
  }

  est.value = est.stage_values.back();
  est.witness = best_witness;
  if (est.stage_values.size() >= 2) {
    const double last = est.stage_values[est.stage_values.size() - 1];
    const double prev = est.stage_values[est.stage_values.size() - 2];
    est.converged = (last - prev) <= kConvergedRel * std::max(last, 1e-12);
  }
  return est;
}

}  // namespace blochkit
