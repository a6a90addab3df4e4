#pragma once

#include <string>

namespace laneflow {

/// Per-lane speed-density law V(rho). Units: km/h and veh/km.
///
/// Evaluation clamps rho to [0, jam_density], so V(rho) is always in
/// [0, free_speed]; out-of-range densities never extrapolate to negative
/// speeds. V(0) = free_speed and V(jam_density) = 0 for both kinds.
struct FundamentalDiagram {
  enum class Kind { Greenshields, Triangular };

  Kind kind = Kind::Greenshields;
  double free_speed = 0.0;        // km/h
  double jam_density = 0.0;       // veh/km
  double critical_density = 0.0;  // veh/km, Triangular only

  static FundamentalDiagram greenshields(double free_speed, double jam_density);
  static FundamentalDiagram triangular(double free_speed, double jam_density,
                                       double critical_density);

  /// Speed at density rho (clamped).
  double speed(double rho) const;

  /// One-sided derivative dV/drho of the clamped law; zero outside (0, jam).
  double speed_derivative(double rho) const;

  /// Integral of the clamped speed over [0, rho]. Constant past jam_density.
  double speed_integral(double rho) const;

  /// Flow rho * V(rho) in veh/h.
  double flow(double rho) const { return rho * speed(rho); }

  /// Empty string when well formed, otherwise a description of the violation.
  std::string validate() const;

  bool operator==(const FundamentalDiagram&) const = default;
};

const char* to_string(FundamentalDiagram::Kind kind);

}  // namespace laneflow
