#pragma once

#include <array>
#include <stdexcept>
#include <string>

namespace tpww {

// Spectral tail of an input is too energetic for the requested operation;
// rerun at higher resolution.
class resolution_error : public std::runtime_error {
 public:
  explicit resolution_error(const std::string& what) : std::runtime_error(what) {}
};

// Evaluation point or configuration outside the supported domain
// (below a bottom, depth margin violated, ...).
class domain_error : public std::runtime_error {
 public:
  explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// An iterative solve did not reach its tolerance.
class convergence_error : public std::runtime_error {
 public:
  convergence_error(const std::string& what, int iterations, double residual)
      : std::runtime_error(what), iterations(iterations), residual(residual) {}
  int iterations;
  double residual;
};

class self_intersection_error : public std::runtime_error {
 public:
  explicit self_intersection_error(const std::string& what) : std::runtime_error(what) {}
};

// Two tube coordinates mapping to (nearly) the same point, or a vanishing
// tube Jacobian. Carries the offending pair of (s, r) coordinates.
class tube_collision_error : public std::runtime_error {
 public:
  tube_collision_error(const std::string& what, std::array<double, 2> a,
                       std::array<double, 2> b)
      : std::runtime_error(what), first(a), second(b) {}
  std::array<double, 2> first;   // (s, r)
  std::array<double, 2> second;  // (s', r')
};

// A stability criterion was queried outside its hypotheses (e.g. sigma = 0).
class criterion_error : public std::runtime_error {
 public:
  explicit criterion_error(const std::string& what) : std::runtime_error(what) {}
};

class unsupported_error : public std::runtime_error {
 public:
  explicit unsupported_error(const std::string& what) : std::runtime_error(what) {}
};

// Scenario config problems; carries a line number when known (-1 otherwise).
class config_error : public std::runtime_error {
 public:
  explicit config_error(const std::string& what, int line = -1)
      : std::runtime_error(what), line(line) {}
  int line;
};

}  // namespace tpww
