#pragma once

#include <string>
#include <vector>

#include "lopp/groups.hpp"

namespace lopp {

// Attracting fixed line of a regular element: unique simple top eigenvalue
// with relative gap > tol.spectral_gap, real eigenvector, isotropic. Throws
// NotRegular otherwise.
IsotropicLine attracting_line(const QuadraticSpace& space,
                              const GroupElement& g, const Tolerances& tol = {});

struct LimitSample {
  std::vector<IsotropicLine> points;
  std::vector<int> word_length;  // of the shortest word that produced each
  std::string group_id;          // content hash of the generators
  long words_considered = 0;
  long skipped_irregular = 0;
};

// Attracting lines of all cyclically reduced words of length in [1, depth],
// for the affine realization of the group inside the stabilizer of the
// frame's marked line. Deduplicated at chordal distance tol.dedup,
// shortest-word representative kept. Deterministic.
LimitSample limit_sample(const Frame& frame, const SchottkyGroup& group,
                         int depth, const Tolerances& tol = {});

struct ContainmentReport {
  double max_quadric_margin;   // over sample points, against the marked line
  double min_distance;         // min chordal distance to the marked line
  long count;
};

ContainmentReport containment_report(const QuadraticSpace& space,
                                     const LimitSample& sample,
                                     const IsotropicLine& l);

double hausdorff_chordal(const std::vector<IsotropicLine>& a,
                         const std::vector<IsotropicLine>& b);

// Hausdorff distance between transvection(t) applied to the limit points of
// the group and the limit points of the t-scaled group, compared word for
// word on the raw (pre-dedup) samples. Near roundoff when the scaling
// equivariance holds.
double scaling_check(const Frame& frame, const SchottkyGroup& group, double t,
                     int depth, const Tolerances& tol = {});

}  // namespace lopp
