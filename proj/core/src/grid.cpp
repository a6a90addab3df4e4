#include "laneflow/grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace laneflow {

double ClassDensities::total() const {
  double sum = 0.0;
  for (double r : rho) sum += r;
  return sum;
}

std::string ClassDensities::validate() const {
  for (std::size_t d = 0; d < rho.size(); ++d) {
    if (!std::isfinite(rho[d]) || rho[d] < 0.0) {
      return "rho[" + std::to_string(d) + "]: must be finite and >= 0";
    }
  }
  return {};
}

double GridState::class_mass(int cls) const {
  double sum = 0.0;
  for (const auto& cell : cells) sum += cell.rho[cls];
  return sum * dx();
}

std::string GridState::validate(int class_count) const {
  if (!(ring_length > 0.0)) return "ring_length: must be > 0";
  if (cell_count() < 3) return "cells: at least 3 cells required";
  for (int l = 0; l < cell_count(); ++l) {
    if (cells[l].class_count() != class_count) {
      return "cells[" + std::to_string(l) + "]: class count mismatch";
    }
    if (auto msg = cells[l].validate(); !msg.empty()) {
      return "cells[" + std::to_string(l) + "]." + msg;
    }
  }
  return {};
}

std::string InitialProfile::validate(int class_count) const {
  if (!(ring_length > 0.0)) return "ring_length: must be > 0";
  if (segments.empty()) return "segments: at least one segment required";
  double cursor = 0.0;
  for (std::size_t s = 0; s < segments.size(); ++s) {
    const auto& seg = segments[s];
    const std::string where = "segments[" + std::to_string(s) + "]";
    if (std::abs(seg.from - cursor) > 1e-9) {
      return where + ".from: segments must tile the ring without gaps";
    }
    if (!(seg.to > seg.from)) return where + ".to: must be > from";
    if (seg.rho.class_count() != class_count) return where + ".rho: class count mismatch";
    if (auto msg = seg.rho.validate(); !msg.empty()) return where + "." + msg;
    cursor = seg.to;
  }
  if (std::abs(cursor - ring_length) > 1e-9) {
    return "segments: must end exactly at ring_length";
  }
  return {};
}

GridState rasterize(const InitialProfile& profile, int cells) {
  if (cells < 3) throw std::invalid_argument("rasterize: at least 3 cells required");
  const int classes = profile.segments.front().rho.class_count();
  GridState grid;
  grid.ring_length = profile.ring_length;
  grid.cells.assign(cells, ClassDensities(std::vector<double>(classes, 0.0)));
  const double dx = grid.dx();
  for (const auto& seg : profile.segments) {
    const int first = static_cast<int>(std::floor(seg.from / dx));
    const int last = static_cast<int>(std::ceil(seg.to / dx)) - 1;
    for (int l = first; l <= last && l < cells; ++l) {
      const double lo = std::max(seg.from, l * dx);
      const double hi = std::min(seg.to, (l + 1) * dx);
      if (hi <= lo) continue;
      const double weight = (hi - lo) / dx;
      for (int d = 0; d < classes; ++d) grid.cells[l].rho[d] += weight * seg.rho.rho[d];
    }
  }
  return grid;
}

double l1_class_distance(const GridState& a, const GridState& b, int cls) {
  if (std::abs(a.ring_length - b.ring_length) > 1e-12 * std::max(a.ring_length, 1.0)) {
    throw std::invalid_argument("l1_class_distance: ring lengths differ");
  }
  // Integrate |a - b| over the merged breakpoints of the two meshes.
  const double dxa = a.dx();
  const double dxb = b.dx();
  double sum = 0.0;
  int ia = 0;
  int ib = 0;
  double x = 0.0;
  while (ia < a.cell_count() && ib < b.cell_count()) {
    const double ea = (ia + 1) * dxa;
    const double eb = (ib + 1) * dxb;
    const double next = std::min(ea, eb);
    sum += std::abs(a.cells[ia].rho[cls] - b.cells[ib].rho[cls]) * (next - x);
    x = next;
    if (ea <= next + 1e-15 * a.ring_length) ++ia;
    if (eb <= next + 1e-15 * a.ring_length) ++ib;
  }
  return sum;
}

double relative_l1(const GridState& candidate, const GridState& reference, int cls) {
  const double mass = reference.class_mass(cls);
  if (mass <= 0.0) return l1_class_distance(candidate, reference, cls) > 0.0 ? 1.0 : 0.0;
  return l1_class_distance(candidate, reference, cls) / mass;
}

}  // namespace laneflow
