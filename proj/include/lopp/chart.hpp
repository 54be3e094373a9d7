#pragma once

#include <Eigen/Dense>
#include <string>

#include "lopp/geometry.hpp"

namespace lopp {

// An isometry of the ambient space, as a matrix in ambient coordinates.
// Factories validate membership; the struct itself is plain data.
struct GroupElement {
  Eigen::MatrixXd mat;
};

// A marked hyperbolic pair (L, Lhat) plus a basis of their orthogonal
// complement V'. Fixing one turns the open Schubert cell opposite L into an
// affine chart modeled on V'. The standard frame is the ambient basis itself,
// for which all coordinate changes are the identity.
class Frame {
 public:
  static Frame standard(const QuadraticSpace& space, std::string label = "");

  // e, f: null vectors with B(e,f)=1; basis: dim x n matrix of V' columns,
  // B-orthogonal to both. Validated against tol.null_vector/orthogonality.
  Frame(const QuadraticSpace& space, const Eigen::VectorXd& e,
        const Eigen::VectorXd& f, const Eigen::MatrixXd& basis,
        std::string label = "", const Tolerances& tol = {});

  const QuadraticSpace& space() const { return space_; }
  int n() const { return space_.n(); }
  const Eigen::VectorXd& e() const { return e_; }
  const Eigen::VectorXd& f() const { return f_; }
  const Eigen::MatrixXd& basis() const { return basis_; }
  const std::string& label() const { return label_; }
  bool is_standard() const { return standard_; }

  // Gram matrix of the induced form q' on V', in basis coordinates;
  // signature (n-1, 1).
  const Eigen::MatrixXd& gram_prime() const { return gram_prime_; }

  double qprime(const Eigen::VectorXd& vp) const;
  double bprime(const Eigen::VectorXd& up, const Eigen::VectorXd& wp) const;

  // V' basis coordinates -> ambient vector.
  Eigen::VectorXd to_ambient(const Eigen::VectorXd& vp) const;
  // Full frame coordinates (e, f, V' components) <-> ambient.
  Eigen::VectorXd frame_coords(const Eigen::VectorXd& ambient) const;
  Eigen::MatrixXd to_ambient_matrix(const Eigen::MatrixXd& frame_mat) const;
  Eigen::MatrixXd to_frame_matrix(const Eigen::MatrixXd& ambient_mat) const;

  IsotropicLine line() const;       // span(e), the marked point at infinity
  IsotropicLine line_hat() const;   // span(f)

  // Columns: a q'-pseudo-orthonormal basis of V' in basis coordinates
  // (first n-1 spacelike, last timelike). Identity for the standard frame.
  const Eigen::MatrixXd& lorentz_basis() const { return lorentz_basis_; }

 private:
  QuadraticSpace space_;
  Eigen::VectorXd e_, f_;
  Eigen::MatrixXd basis_;          // dim x n
  Eigen::MatrixXd p_, p_inv_;      // [e f basis] and its inverse
  Eigen::MatrixXd gram_prime_;     // n x n
  Eigen::MatrixXd lorentz_basis_;  // n x n
  std::string label_;
  bool standard_ = false;
};

// The unipotent shear attached to v' in V': fixes e, moves f by v' modulo e,
// acts trivially on V' modulo e. One-parameter in v' (additive).
GroupElement shear(const Frame& frame, const Eigen::VectorXd& vprime);

// max-entry norm of shear(u+v) - shear(u)shear(v); 0 up to roundoff.
double shear_compose_check(const Frame& frame, const Eigen::VectorXd& u,
                           const Eigen::VectorXd& v);

// The affine chart on the cell opposite span(e): v' -> shear(v')(span(f)).
IsotropicLine chart_to_flag(const Frame& frame, const Eigen::VectorXd& vprime,
                            const Tolerances& tol = {});

// Inverse chart. Throws NotOpposite when m is incident to span(e)
// (|B(e, m)| < 1e-8 over the unit representative).
Eigen::VectorXd flag_to_chart(const Frame& frame, const IsotropicLine& m);

// Lift of the affine map x -> Ax + b on V' (A an isometry of q') to an
// ambient isometry fixing span(e). Rejects A outside the isometry group.
GroupElement embed_affine(const Frame& frame, const Eigen::MatrixXd& a,
                          const Eigen::VectorXd& b, const Tolerances& tol = {});

// diag(t, 1/t, id) in frame coordinates: scales the chart by t. t > 0.
GroupElement transvection(const Frame& frame, double t);

// The isometry of q' induced on V' by an element stabilizing span(e).
// Multiplicative on the stabilizer; rejects non-stabilizing input.
Eigen::MatrixXd linear_part(const Frame& frame, const GroupElement& g,
                            const Tolerances& tol = {});

GroupElement element_from_matrix(const QuadraticSpace& space,
                                 const Eigen::MatrixXd& mat,
                                 const Tolerances& tol = {});

IsotropicLine apply(const QuadraticSpace& space, const GroupElement& g,
                    const IsotropicLine& l, const Tolerances& tol = {});

}  // namespace lopp
