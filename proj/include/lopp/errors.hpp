#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace lopp {

// Base of all failures this library raises on bad numerical state (as opposed
// to std::invalid_argument, which callers get for malformed inputs).
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A pairing landed between the incidence tolerance and its guard band, so the
// pair cannot be classified reliably at the configured precision.
struct AmbiguousIncidence : Error {
  AmbiguousIncidence(double pairing_, double tol_, double band_)
      : Error("pairing " + std::to_string(pairing_) +
              " falls in the guard band (" + std::to_string(tol_) + ", " +
              std::to_string(band_) + "]"),
        pairing(pairing_) {}
  double pairing;
};

struct NotIsotropic : Error {
  using Error::Error;
};

struct NotOpposite : Error {
  using Error::Error;
};

// Spectral radius not attained by a unique simple real eigenvalue with the
// required relative gap.
struct NotRegular : Error {
  using Error::Error;
};

struct EmptySample : Error {
  using Error::Error;
};

// Ping-pong certification failed. `generator` is 1-based, negated for the
// inverse letter; generator 0 flags a ball-disjointness violation.
struct PingPongFailure : Error {
  PingPongFailure(std::string what_, int generator_, double margin_)
      : Error(std::move(what_)), generator(generator_), margin(margin_) {}
  int generator;
  double margin;
};

// Domain-point search exhausted its budget without a positive margin.
// blocking_direction is the null direction of the hyperplane achieving the
// minimum at the best candidate (the densest obstruction).
struct SearchFailed : Error {
  SearchFailed(std::string what_, double best_margin_,
               std::vector<double> best_point_,
               std::vector<double> blocking_direction_)
      : Error(std::move(what_)),
        best_margin(best_margin_),
        best_point(std::move(best_point_)),
        blocking_direction(std::move(blocking_direction_)) {}
  double best_margin;
  std::vector<double> best_point;
  std::vector<double> blocking_direction;
};

}  // namespace lopp
