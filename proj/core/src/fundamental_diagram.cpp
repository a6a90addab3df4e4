#include "laneflow/fundamental_diagram.hpp"

#include <algorithm>
#include <cmath>

namespace laneflow {

FundamentalDiagram FundamentalDiagram::greenshields(double free_speed, double jam_density) {
  return {Kind::Greenshields, free_speed, jam_density, 0.0};
}

FundamentalDiagram FundamentalDiagram::triangular(double free_speed, double jam_density,
                                                  double critical_density) {
  return {Kind::Triangular, free_speed, jam_density, critical_density};
}

double FundamentalDiagram::speed(double rho) const {
  rho = std::clamp(rho, 0.0, jam_density);
  switch (kind) {
    case Kind::Greenshields:
      return free_speed * (1.0 - rho / jam_density);
    case Kind::Triangular:
      if (rho <= critical_density) return free_speed;
      return free_speed * critical_density * (jam_density - rho) /
             (rho * (jam_density - critical_density));
  }
  return 0.0;
}

double FundamentalDiagram::speed_derivative(double rho) const {
  if (rho >= jam_density) return 0.0;
  switch (kind) {
    case Kind::Greenshields:
      return -free_speed / jam_density;
    case Kind::Triangular:
      if (rho < critical_density) return 0.0;
      return -free_speed * critical_density * jam_density /
             (rho * rho * (jam_density - critical_density));
  }
  return 0.0;
}

double FundamentalDiagram::speed_integral(double rho) const {
  rho = std::clamp(rho, 0.0, jam_density);
  switch (kind) {
    case Kind::Greenshields:
      return free_speed * (rho - rho * rho / (2.0 * jam_density));
    case Kind::Triangular: {
      if (rho <= critical_density) return free_speed * rho;
      const double scale = free_speed * critical_density / (jam_density - critical_density);
      return free_speed * critical_density +
             scale * (jam_density * std::log(rho / critical_density) - (rho - critical_density));
    }
  }
  return 0.0;
}

std::string FundamentalDiagram::validate() const {
  if (!(free_speed > 0.0) || !std::isfinite(free_speed)) return "free_speed must be > 0";
  if (!(jam_density > 0.0) || !std::isfinite(jam_density)) return "jam_density must be > 0";
  if (kind == Kind::Triangular &&
      !(critical_density > 0.0 && critical_density < jam_density)) {
    return "critical_density must lie in (0, jam_density)";
  }
  return {};
}

const char* to_string(FundamentalDiagram::Kind kind) {
  switch (kind) {
    case FundamentalDiagram::Kind::Greenshields: return "greenshields";
    case FundamentalDiagram::Kind::Triangular: return "triangular";
  }
  return "?";
}

}  // namespace laneflow
