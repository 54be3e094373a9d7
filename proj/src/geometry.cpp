#include "lopp/geometry.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

#include "lopp/sampling.hpp"

namespace lopp {

QuadraticSpace::QuadraticSpace(int lorentz_dim) : n_(lorentz_dim) {
  // n >= 3 so that O(q') = O(n-1,1) is nonelementary.
  if (n_ < 3)
    throw std::invalid_argument("QuadraticSpace: need Lorentz dimension >= 3");
  gram_ = Eigen::MatrixXd::Zero(n_ + 2, n_ + 2);
  gram_(0, 1) = 1.0;
  gram_(1, 0) = 1.0;
  for (int i = 0; i < n_; ++i) gram_(2 + i, 2 + i) = (i + 1 < n_) ? 1.0 : -1.0;
}

double QuadraticSpace::bilinear(const Eigen::VectorXd& u,
                                const Eigen::VectorXd& v) const {
  if (u.size() != dim() || v.size() != dim())
    throw std::invalid_argument("bilinear: dimension mismatch");
  return u.dot(gram_ * v);
}

QuadraticSpace make_space(int n) { return QuadraticSpace(n); }

Eigen::VectorXd canonical_rep(Eigen::VectorXd v) {
  const double norm = v.norm();
  if (norm < 1e-300) throw std::invalid_argument("canonical_rep: zero vector");
  v /= norm;
  for (int i = 0; i < v.size(); ++i) {
    if (std::abs(v[i]) > 1e-12) {
      if (v[i] < 0) v = -v;
      break;
    }
  }
  return v;
}

IsotropicLine IsotropicLine::from_vector(const QuadraticSpace& space,
                                         const Eigen::VectorXd& v,
                                         const Tolerances& tol) {
  Eigen::VectorXd rep = canonical_rep(v);
  const double q = space.quadratic(rep);
  if (std::abs(q) > tol.null_vector)
    throw NotIsotropic("from_vector: q(rep) = " + std::to_string(q));
  return IsotropicLine(std::move(rep));
}

double chordal_distance(const IsotropicLine& l1, const IsotropicLine& l2) {
  if (l1.dim() != l2.dim())
    throw std::invalid_argument("chordal_distance: dimension mismatch");
  const Eigen::VectorXd& a = l1.rep();
  const Eigen::VectorXd& b = l2.rep();
  // sin of the angle via the chord c = 2 sin(theta/2): no cancellation near
  // theta = 0, and symmetric in the arguments down to the last bit.
  const double c = std::min((a - b).norm(), (a + b).norm());
  const double s = c * std::sqrt(std::max(0.0, 1.0 - 0.25 * c * c));
  return std::min(s, 1.0);
}

double quadric_margin(const QuadraticSpace& space, const IsotropicLine& m,
                      const IsotropicLine& l) {
  if (m.dim() != space.dim() || l.dim() != space.dim())
    throw std::invalid_argument("quadric_margin: dimension mismatch");
  // Canonical argument order makes the result exactly symmetric.
  const Eigen::VectorXd& a = m.rep();
  const Eigen::VectorXd& b = l.rep();
  bool a_first = true;
  for (int i = 0; i < a.size(); ++i) {
    if (a[i] == b[i]) continue;
    a_first = a[i] < b[i];
    break;
  }
  return a_first ? std::abs(space.bilinear(a, b))
                 : std::abs(space.bilinear(b, a));
}

const char* to_string(PairClass c) {
  switch (c) {
    case PairClass::Equal: return "equal";
    case PairClass::Incident: return "incident";
    case PairClass::Opposite: return "opposite";
  }
  return "?";
}

PairClass classify_pair(const QuadraticSpace& space, const IsotropicLine& l1,
                        const IsotropicLine& l2, const Tolerances& tol) {
  if (chordal_distance(l1, l2) <= tol.parallel) return PairClass::Equal;
  const double p = quadric_margin(space, l1, l2);
  if (p <= tol.incidence) return PairClass::Incident;
  const double band = tol.guard_factor * tol.incidence;
  if (p <= band) throw AmbiguousIncidence(p, tol.incidence, band);
  return PairClass::Opposite;
}

std::vector<IsotropicLine> ellipsoid_sample(const QuadraticSpace& space,
                                            const IsotropicLine& l,
                                            const IsotropicLine& lhat, int k,
                                            const Tolerances& tol) {
  if (k < 1) throw std::invalid_argument("ellipsoid_sample: k < 1");
  if (classify_pair(space, l, lhat, tol) != PairClass::Opposite)
    throw NotOpposite("ellipsoid_sample: lines are not opposite");
  const int d = space.dim();
  // Basis of the B-orthogonal complement of span(l, lhat).
  Eigen::MatrixXd rows(2, d);
  rows.row(0) = (space.gram() * l.rep()).transpose();
  rows.row(1) = (space.gram() * lhat.rep()).transpose();
  Eigen::FullPivLU<Eigen::MatrixXd> lu(rows);
  const Eigen::MatrixXd kernel = lu.kernel();  // d x (d-2)
  if (kernel.cols() != d - 2)
    throw Error("ellipsoid_sample: degenerate pair");
  // Pseudo-orthonormalize against the restricted form: signature (n-1, 1).
  const Eigen::MatrixXd restricted =
      kernel.transpose() * space.gram() * kernel;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(restricted);
  Eigen::MatrixXd spacelike(d, 0);
  Eigen::VectorXd timelike;
  for (int i = 0; i < d - 2; ++i) {
    const double ev = es.eigenvalues()[i];
    if (std::abs(ev) < 1e-12) throw Error("ellipsoid_sample: degenerate form");
    Eigen::VectorXd col = kernel * es.eigenvectors().col(i) / std::sqrt(std::abs(ev));
    if (ev > 0) {
      spacelike.conservativeResize(Eigen::NoChange, spacelike.cols() + 1);
      spacelike.col(spacelike.cols() - 1) = col;
    } else {
      if (timelike.size() != 0)
        throw Error("ellipsoid_sample: restricted form has extra negative direction");
      timelike = col;
    }
  }
  if (timelike.size() == 0 || spacelike.cols() != d - 3)
    throw Error("ellipsoid_sample: unexpected restricted signature");
  // Null directions in the complement: (unit sphere point, 1) in the
  // pseudo-orthonormal basis. These are exactly the lines incident to both.
  const Eigen::MatrixXd sphere =
      sphere_grid(static_cast<int>(spacelike.cols()), k);
  std::vector<IsotropicLine> out;
  out.reserve(k);
  for (int i = 0; i < k; ++i) {
    Eigen::VectorXd v = spacelike * sphere.row(i).transpose() + timelike;
    out.push_back(IsotropicLine::from_vector(space, v, tol));
  }
  return out;
}

}  // namespace lopp
