#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lopp/domain.hpp"

namespace lopp {

// Shortest decimal representation that round-trips the double.
std::string format_double(double x);

std::uint64_t fnv1a64(const std::string& bytes);

void write_file(const std::string& path, const std::string& content);

// One row per limit point: word_length, then the n+2 ambient coordinates of
// the canonical unit representative.
std::string limit_set_csv(const LimitSample& sample);

// Cylinder coordinates of points on the quadric through the marked line
// (minus the line itself), n = 3 only: boundary angle phi, height alpha,
// and the stereographic plane image (x, y). One row per limit point.
std::string limit_set_2d_csv(const Frame& frame, const LimitSample& sample);

struct PlanePoint {
  double phi = 0.0;    // angle of the boundary direction
  double alpha = 0.0;  // chart height of the limit point
  double x = 0.0, y = 0.0;
};

// The underlying projection: quadric point (unit null w in V', offset alpha)
// -> unit sphere via (omega, alpha)/sqrt(1+alpha^2) -> plane from the north
// pole. The marked line itself is the pole (alpha -> infinity).
PlanePoint project_quadric_point(const Frame& frame,
                                 const Eigen::VectorXd& direction,
                                 double offset);

// Scatter plot of the 2D projection.
std::string limit_set_svg(const Frame& frame, const LimitSample& sample,
                          int size_px = 640);

}  // namespace lopp
