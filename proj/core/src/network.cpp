#include "laneflow/network.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

namespace laneflow {

std::vector<int> NetworkSpec::classes_on_lane(int lane) const {
  std::vector<int> out;
  for (int d = 0; d < class_count(); ++d) {
    if (lane_accessible(d, lane)) out.push_back(d);
  }
  return out;
}

bool NetworkSpec::lane_accessible(int cls, int lane) const {
  const auto& lanes = accessible[cls];
  return std::find(lanes.begin(), lanes.end(), lane) != lanes.end();
}

double NetworkSpec::theta_for(int cls, int lane) const {
  const auto& lanes = accessible[cls];
  const auto it = std::find(lanes.begin(), lanes.end(), lane);
  return theta[cls][static_cast<std::size_t>(it - lanes.begin())];
}

double NetworkSpec::max_free_speed() const {
  double v = 0.0;
  for (const auto& fd : diagrams) v = std::max(v, fd.free_speed);
  return v;
}

double NetworkSpec::mean_accessible_free_speed(int cls) const {
  double sum = 0.0;
  for (int lane : accessible[cls]) sum += diagrams[lane].free_speed;
  return sum / static_cast<double>(accessible[cls].size());
}

std::vector<std::string> NetworkSpec::validate() const {
  std::vector<std::string> issues;
  if (lane_names.empty()) issues.push_back("lanes: at least one lane required");
  if (class_names.empty()) issues.push_back("classes: at least one class required");
  if (diagrams.size() != lane_names.size()) {
    issues.push_back("lanes: diagram count does not match lane count");
  }
  for (std::size_t i = 0; i < diagrams.size(); ++i) {
    if (auto msg = diagrams[i].validate(); !msg.empty()) {
      issues.push_back("lanes[" + std::to_string(i) + "].diagram: " + msg);
    }
  }
  if (!(nu > 0.0) || !std::isfinite(nu)) issues.push_back("nu: must be finite and > 0");
  if (accessible.size() != class_names.size() || theta.size() != class_names.size()) {
    issues.push_back("classes: accessibility/theta count does not match class count");
    return issues;
  }
  for (std::size_t d = 0; d < accessible.size(); ++d) {
    const std::string where = "classes[" + std::to_string(d) + "]";
    if (accessible[d].empty()) {
      issues.push_back(where + ".lanes: every class needs at least one accessible lane");
      continue;
    }
    std::set<int> seen;
    for (int lane : accessible[d]) {
      if (lane < 0 || lane >= lane_count()) {
        issues.push_back(where + ".lanes: lane index out of range");
      } else if (!seen.insert(lane).second) {
        issues.push_back(where + ".lanes: duplicate lane");
      }
    }
    if (!std::is_sorted(accessible[d].begin(), accessible[d].end())) {
      issues.push_back(where + ".lanes: lane indices must be sorted");
    }
    if (theta[d].size() != accessible[d].size()) {
      issues.push_back(where + ".theta: one preference per accessible lane required");
    }
    for (double t : theta[d]) {
      if (!std::isfinite(t)) issues.push_back(where + ".theta: preferences must be finite");
    }
  }
  return issues;
}

NetworkSpec make_network(std::vector<FundamentalDiagram> lanes,
                         std::vector<std::vector<int>> class_lanes, double nu) {
  NetworkSpec spec;
  for (std::size_t i = 0; i < lanes.size(); ++i) spec.lane_names.push_back(std::to_string(i + 1));
  for (std::size_t d = 0; d < class_lanes.size(); ++d) {
    spec.class_names.push_back(std::to_string(d + 1));
  }
  spec.diagrams = std::move(lanes);
  spec.accessible = std::move(class_lanes);
  for (auto& lanes_d : spec.accessible) std::sort(lanes_d.begin(), lanes_d.end());
  for (const auto& lanes_d : spec.accessible) {
    spec.theta.emplace_back(lanes_d.size(), 0.0);
  }
  spec.nu = nu;
  return spec;
}

}  // namespace laneflow
