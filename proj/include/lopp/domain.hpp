#pragma once

#include <vector>

#include "lopp/limitset.hpp"

namespace lopp {

// The trace in the affine chart of the quadric of points incident to a limit
// point span(alpha e + w): the affine hyperplane B'(v', w) + alpha = 0, with
// w a future-oriented unit null vector of q' (V' basis coordinates).
struct HyperplaneItem {
  Eigen::VectorXd direction;  // w
  double offset;              // alpha
};

struct NullHyperplaneSet {
  std::vector<HyperplaneItem> items;
  int n = 0;
};

// One item per sample point, same order. Requires every point incident to the
// marked line but distinct from it; a point within 1e-8 of the marked line
// rejects the whole sample.
NullHyperplaneSet thickening_in_chart(const Frame& frame,
                                      const LimitSample& sample,
                                      const Tolerances& tol = {});

// min over items of |B'(v',w) + alpha| / (1 + ||v'||): a scale-normalized
// distance of the chart point to the union of hyperplanes. Positive iff v'
// avoids the thickening.
double domain_margin(const Frame& frame, const NullHyperplaneSet& hset,
                     const Eigen::VectorXd& vprime);

struct DomainPoint {
  Eigen::VectorXd vprime;
  double margin;
};

// Deterministic coarse-to-fine search for a point of positive margin:
// a grid of 64n timelike rays at doubling radii, then a compass refinement
// around the best candidate. Throws SearchFailed with diagnostics.
DomainPoint find_domain_point(const Frame& frame,
                              const NullHyperplaneSet& hset);

struct AuditReport {
  Eigen::VectorXd center;
  double radius = 0.0;
  int depth = 0;
  std::vector<long> returners_by_length;  // index = word length, 0..depth
  std::vector<long> cumulative;
  bool stabilized = false;  // cumulative(depth-1) == cumulative(depth)
};

// Counts reduced words w with ||A_w c + b_w - c|| <= r (1 + sigma_max(A_w)),
// a conservative overlap test for the ball B(c, r) meeting its w-image
// (never misses a true returner). Exact counts per length; the ball is
// wandering-certified when the cumulative count stabilizes.
AuditReport properness_audit(const Frame& frame, const SchottkyGroup& group,
                             const Eigen::VectorXd& center, double radius,
                             int depth);

// max over generators g=(A,b) and sample points v' of
// chordal( g . chart(v'), chart(Av'+b) ), with g acting through its ambient
// lift. Near roundoff when the embedding is equivariant.
double equivariance_audit(const Frame& frame, const SchottkyGroup& group,
                          const std::vector<Eigen::VectorXd>& samples,
                          const Tolerances& tol = {});

}  // namespace lopp
