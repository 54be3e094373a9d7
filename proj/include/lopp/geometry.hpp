#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "lopp/errors.hpp"

namespace lopp {

// Numeric tolerances shared across the library. Defaults are the contracts
// the test suite pins; individual calls accept overrides.
struct Tolerances {
  double null_vector = 1e-9;     // |q(rep)| for unit line representatives
  double incidence = 1e-7;       // |B(l1,l2)| below which lines are incident
  double parallel = 1e-9;        // chordal distance below which lines coincide
  double orthogonality = 1e-9;   // max-entry norm for isometry membership
  double spectral_gap = 1e-3;    // minimal relative gap of a regular element
  double dedup = 1e-8;           // chordal radius identifying limit points
  double guard_factor = 10.0;    // ambiguity band multiplier over incidence
};

// The ambient quadratic space: a hyperbolic plane spanned by the first two
// basis vectors (B(e,f)=1) orthogonal to an n-dimensional Lorentzian block
// diag(1,...,1,-1). Overall signature (n,2), dimension n+2.
class QuadraticSpace {
 public:
  explicit QuadraticSpace(int lorentz_dim);

  int n() const { return n_; }
  int dim() const { return n_ + 2; }
  const Eigen::MatrixXd& gram() const { return gram_; }

  double bilinear(const Eigen::VectorXd& u, const Eigen::VectorXd& v) const;
  double quadratic(const Eigen::VectorXd& v) const { return bilinear(v, v); }

 private:
  int n_;
  Eigen::MatrixXd gram_;
};

QuadraticSpace make_space(int n);

// Euclidean-unit vector with the first coordinate of magnitude > 1e-12 made
// positive. Two representatives of one line canonicalize to the same vector.
Eigen::VectorXd canonical_rep(Eigen::VectorXd v);

// A point of the flag manifold of isotropic lines, stored as a canonical unit
// representative.
class IsotropicLine {
 public:
  static IsotropicLine from_vector(const QuadraticSpace& space,
                                   const Eigen::VectorXd& v,
                                   const Tolerances& tol = {});

  const Eigen::VectorXd& rep() const { return rep_; }
  int dim() const { return static_cast<int>(rep_.size()); }

 private:
  explicit IsotropicLine(Eigen::VectorXd rep) : rep_(std::move(rep)) {}
  Eigen::VectorXd rep_;
};

// sin of the principal angle between the two lines; 0 iff equal as lines,
// 1 iff perpendicular representatives. Computed from the orthogonal component
// so it stays accurate near 0 for antipodal representatives too.
double chordal_distance(const IsotropicLine& l1, const IsotropicLine& l2);

// |B(m, l)| over unit representatives: 0 iff m lies on the quadric of lines
// incident to l. Exactly symmetric: the pairing is evaluated with the
// arguments in a canonical order.
double quadric_margin(const QuadraticSpace& space, const IsotropicLine& m,
                      const IsotropicLine& l);

enum class PairClass { Equal, Incident, Opposite };

const char* to_string(PairClass c);

// Schubert position of l2 relative to l1. Throws AmbiguousIncidence when the
// pairing falls inside the guard band (tol.incidence, guard_factor * it].
PairClass classify_pair(const QuadraticSpace& space, const IsotropicLine& l1,
                        const IsotropicLine& l2, const Tolerances& tol = {});

// k isotropic lines spread over the ellipsoid attached to an opposite pair:
// the projectivized null cone of the form induced on the B-complement of
// span(l, lhat). Every returned line is incident to both inputs.
std::vector<IsotropicLine> ellipsoid_sample(const QuadraticSpace& space,
                                            const IsotropicLine& l,
                                            const IsotropicLine& lhat, int k,
                                            const Tolerances& tol = {});

}  // namespace lopp
