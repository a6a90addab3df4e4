#pragma once

#include <string>
#include <vector>

namespace laneflow {

/// Densities per driver class at one point or cell, veh/km, indexed by class.
struct ClassDensities {
  std::vector<double> rho;

  ClassDensities() = default;
  explicit ClassDensities(std::vector<double> values) : rho(std::move(values)) {}
  ClassDensities(std::initializer_list<double> values) : rho(values) {}

  double total() const;
  int class_count() const { return static_cast<int>(rho.size()); }

  /// Empty when all entries are finite and >= 0.
  std::string validate() const;

  bool operator==(const ClassDensities&) const = default;
};

/// Piecewise-constant class densities on a ring mesh. Cell `l` covers
/// [l*dx, (l+1)*dx); indexing is periodic.
struct GridState {
  double ring_length = 0.0;  // km
  std::vector<ClassDensities> cells;

  int cell_count() const { return static_cast<int>(cells.size()); }
  double dx() const { return ring_length / static_cast<double>(cells.size()); }
  int wrap(int cell) const {
    const int n = cell_count();
    return ((cell % n) + n) % n;
  }

  /// Total vehicles of one class on the ring.
  double class_mass(int cls) const;

  std::string validate(int class_count) const;

  bool operator==(const GridState&) const = default;
};

/// One piece of a piecewise-constant initial condition.
struct ProfileSegment {
  double from = 0.0;  // km
  double to = 0.0;    // km
  ClassDensities rho;

  bool operator==(const ProfileSegment&) const = default;
};

/// Piecewise-constant density profile on the ring; segments must tile
/// [0, ring_length) without gaps or overlaps.
struct InitialProfile {
  double ring_length = 0.0;
  std::vector<ProfileSegment> segments;

  std::string validate(int class_count) const;

  bool operator==(const InitialProfile&) const = default;
};

/// Exact cell averages of the profile on a mesh with `cells` cells
/// (handles segment breakpoints interior to cells).
GridState rasterize(const InitialProfile& profile, int cells);

/// L1 distance of one class's density field between two grids on the same
/// ring, integrated exactly over the union of cell boundaries (veh).
double l1_class_distance(const GridState& a, const GridState& b, int cls);

/// l1_class_distance normalized by the class mass of `reference`.
double relative_l1(const GridState& candidate, const GridState& reference, int cls);

}  // namespace laneflow
