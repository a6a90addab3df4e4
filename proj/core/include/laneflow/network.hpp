#pragma once

#include <string>
#include <vector>

#include "laneflow/fundamental_diagram.hpp"

namespace laneflow {

/// Road description: lanes with their speed-density laws, driver classes
/// with the lanes they may use, per-(lane, class) preferences theta (km/h),
/// and the logit sensitivity nu (km/h, > 0).
///
/// Lanes and classes are referenced by index; names are kept for I/O only.
/// A class restricted to one lane is modeled by listing only that lane in
/// `accessible` rather than by an infinite preference.
///
/// All fields are plain values; instances are immutable in practice and safe
/// to share across threads.
struct NetworkSpec {
  std::vector<std::string> lane_names;
  std::vector<std::string> class_names;
  std::vector<FundamentalDiagram> diagrams;    // per lane
  std::vector<std::vector<int>> accessible;    // per class: sorted lane indices, non-empty
  std::vector<std::vector<double>> theta;      // per class: aligned with accessible[d]
  double nu = 0.0;                             // km/h

  int lane_count() const { return static_cast<int>(lane_names.size()); }
  int class_count() const { return static_cast<int>(class_names.size()); }

  /// Classes allowed on lane i (derived from `accessible`).
  std::vector<int> classes_on_lane(int lane) const;

  /// Preference of class d for lane i; lane must be accessible to d.
  double theta_for(int cls, int lane) const;

  bool lane_accessible(int cls, int lane) const;

  /// Largest free speed over all lanes.
  double max_free_speed() const;

  /// Mean free speed over the lanes accessible to `cls` (the reported speed
  /// convention for an empty class).
  double mean_accessible_free_speed(int cls) const;

  /// Empty when well formed, otherwise one message per violation, each
  /// prefixed with the offending field (e.g. "classes[1].lanes").
  std::vector<std::string> validate() const;

  bool operator==(const NetworkSpec&) const = default;
};

/// Convenience builder: `lanes` diagrams, one class per entry of
/// `class_lanes`, all preferences zero. Used heavily by tests.
NetworkSpec make_network(std::vector<FundamentalDiagram> lanes,
                         std::vector<std::vector<int>> class_lanes, double nu);

}  // namespace laneflow
