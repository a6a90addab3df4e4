#pragma once

#include <stdexcept>
#include <string>

namespace laneflow {

/// Scenario file could not be parsed or violates a model invariant.
/// The message carries the offending location (file + JSON path or CSV row).
class ScenarioError : public std::runtime_error {
 public:
  explicit ScenarioError(const std::string& what) : std::runtime_error(what) {}
};

/// An equilibrium solve did not reach the requested residual.
class SolveError : public std::runtime_error {
 public:
  SolveError(const std::string& what, double residual)
      : std::runtime_error(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

/// A time step violated its stability precondition (CFL bound, collapsed
/// headway, negative-density undershoot).
class StepError : public std::runtime_error {
 public:
  explicit StepError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace laneflow
