#include "lopp/chart.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

namespace lopp {

namespace {

Eigen::MatrixXd lorentz_basis_for(const Eigen::MatrixXd& gram_prime) {
  const int n = static_cast<int>(gram_prime.rows());
  Eigen::MatrixXd expected = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) expected(i, i) = (i + 1 < n) ? 1.0 : -1.0;
  if ((gram_prime - expected).cwiseAbs().maxCoeff() == 0.0)
    return Eigen::MatrixXd::Identity(n, n);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gram_prime);
  int positives = 0;
  for (int i = 0; i < n; ++i) positives += es.eigenvalues()[i] > 0 ? 1 : 0;
  if (positives != n - 1)
    throw std::invalid_argument("Frame: V' form is not Lorentzian");
  Eigen::MatrixXd basis(n, n);
  int spatial = 0;
  for (int i = 0; i < n; ++i) {
    const double ev = es.eigenvalues()[i];
    if (std::abs(ev) < 1e-12)
      throw std::invalid_argument("Frame: V' form is degenerate");
    const Eigen::VectorXd col =
        canonical_rep(es.eigenvectors().col(i)) / std::sqrt(std::abs(ev));
    if (ev > 0)
      basis.col(spatial++) = col;
    else
      basis.col(n - 1) = col;
  }
  return basis;
}

}  // namespace

Frame Frame::standard(const QuadraticSpace& space, std::string label) {
  const int d = space.dim();
  const int n = space.n();
  Frame fr(space, Eigen::VectorXd::Unit(d, 0), Eigen::VectorXd::Unit(d, 1),
           Eigen::MatrixXd::Identity(d, d).rightCols(n), std::move(label));
  fr.standard_ = true;
  return fr;
}

Frame::Frame(const QuadraticSpace& space, const Eigen::VectorXd& e,
             const Eigen::VectorXd& f, const Eigen::MatrixXd& basis,
             std::string label, const Tolerances& tol)
    : space_(space), e_(e), f_(f), basis_(basis), label_(std::move(label)) {
  const int d = space_.dim();
  const int n = space_.n();
  if (e_.size() != d || f_.size() != d || basis_.rows() != d ||
      basis_.cols() != n)
    throw std::invalid_argument("Frame: dimension mismatch");
  if (std::abs(space_.quadratic(e_)) > tol.null_vector ||
      std::abs(space_.quadratic(f_)) > tol.null_vector)
    throw std::invalid_argument("Frame: e, f must be null");
  if (std::abs(space_.bilinear(e_, f_) - 1.0) > tol.null_vector)
    throw std::invalid_argument("Frame: need B(e,f) = 1");
  for (int j = 0; j < n; ++j) {
    if (std::abs(space_.bilinear(e_, basis_.col(j))) > tol.orthogonality ||
        std::abs(space_.bilinear(f_, basis_.col(j))) > tol.orthogonality)
      throw std::invalid_argument("Frame: basis not orthogonal to the pair");
  }
  p_.resize(d, d);
  p_.col(0) = e_;
  p_.col(1) = f_;
  p_.rightCols(n) = basis_;
  Eigen::FullPivLU<Eigen::MatrixXd> lu(p_);
  if (!lu.isInvertible())
    throw std::invalid_argument("Frame: degenerate frame matrix");
  p_inv_ = lu.inverse();
  gram_prime_ = basis_.transpose() * space_.gram() * basis_;
  lorentz_basis_ = lorentz_basis_for(gram_prime_);
}

double Frame::qprime(const Eigen::VectorXd& vp) const {
  return bprime(vp, vp);
}

double Frame::bprime(const Eigen::VectorXd& up,
                     const Eigen::VectorXd& wp) const {
  if (up.size() != n() || wp.size() != n())
    throw std::invalid_argument("bprime: dimension mismatch");
  return up.dot(gram_prime_ * wp);
}

Eigen::VectorXd Frame::to_ambient(const Eigen::VectorXd& vp) const {
  if (vp.size() != n()) throw std::invalid_argument("to_ambient: bad size");
  return basis_ * vp;
}

Eigen::VectorXd Frame::frame_coords(const Eigen::VectorXd& ambient) const {
  if (ambient.size() != space_.dim())
    throw std::invalid_argument("frame_coords: bad size");
  return standard_ ? ambient : Eigen::VectorXd(p_inv_ * ambient);
}

Eigen::MatrixXd Frame::to_ambient_matrix(const Eigen::MatrixXd& frame_mat) const {
  return standard_ ? frame_mat : Eigen::MatrixXd(p_ * frame_mat * p_inv_);
}

Eigen::MatrixXd Frame::to_frame_matrix(const Eigen::MatrixXd& ambient_mat) const {
  return standard_ ? ambient_mat : Eigen::MatrixXd(p_inv_ * ambient_mat * p_);
}

IsotropicLine Frame::line() const {
  return IsotropicLine::from_vector(space_, e_);
}

IsotropicLine Frame::line_hat() const {
  return IsotropicLine::from_vector(space_, f_);
}

namespace {

// Frame-coordinate matrix of the lift of x -> Ax + b; the shear is A = id.
Eigen::MatrixXd affine_lift(const Frame& frame, const Eigen::MatrixXd& a,
                            const Eigen::VectorXd& b) {
  const int n = frame.n();
  const int d = n + 2;
  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(d, d);
  m(0, 1) = -0.5 * frame.qprime(b);
  m.block(0, 2, 1, n) = -(frame.gram_prime() * b).transpose() * a;
  m.block(2, 1, n, 1) = b;
  m.block(2, 2, n, n) = a;
  return m;
}

}  // namespace

GroupElement shear(const Frame& frame, const Eigen::VectorXd& vprime) {
  if (vprime.size() != frame.n())
    throw std::invalid_argument("shear: bad parameter size");
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(frame.n(), frame.n());
  return GroupElement{frame.to_ambient_matrix(affine_lift(frame, id, vprime))};
}

double shear_compose_check(const Frame& frame, const Eigen::VectorXd& u,
                           const Eigen::VectorXd& v) {
  const Eigen::MatrixXd lhs = shear(frame, u + v).mat;
  const Eigen::MatrixXd rhs = shear(frame, u).mat * shear(frame, v).mat;
  return (lhs - rhs).cwiseAbs().maxCoeff();
}

IsotropicLine chart_to_flag(const Frame& frame, const Eigen::VectorXd& vprime,
                            const Tolerances& tol) {
  if (vprime.size() != frame.n())
    throw std::invalid_argument("chart_to_flag: bad parameter size");
  Eigen::VectorXd v = -0.5 * frame.qprime(vprime) * frame.e() + frame.f() +
                      frame.to_ambient(vprime);
  return IsotropicLine::from_vector(frame.space(), v, tol);
}

Eigen::VectorXd flag_to_chart(const Frame& frame, const IsotropicLine& m) {
  const Eigen::VectorXd c = frame.frame_coords(m.rep());
  // c[1] = B(e, m): vanishes exactly on the quadric through the marked line.
  const double cf = c[1];
  if (std::abs(cf) < 1e-8 * m.rep().norm())
    throw NotOpposite("flag_to_chart: line is incident to the marked line");
  return c.tail(frame.n()) / cf;
}

GroupElement element_from_matrix(const QuadraticSpace& space,
                                 const Eigen::MatrixXd& mat,
                                 const Tolerances& tol) {
  if (mat.rows() != space.dim() || mat.cols() != space.dim())
    throw std::invalid_argument("element_from_matrix: bad shape");
  // relative defect: roundoff in m^T G m scales with ||m||^2, so an absolute
  // threshold would reject legitimate large-norm words
  const double defect =
      (mat.transpose() * space.gram() * mat - space.gram()).cwiseAbs().maxCoeff() /
      (1.0 + mat.squaredNorm());
  if (defect > tol.orthogonality)
    throw std::invalid_argument("element_from_matrix: not an isometry, defect " +
                                std::to_string(defect));
  return GroupElement{mat};
}

GroupElement embed_affine(const Frame& frame, const Eigen::MatrixXd& a,
                          const Eigen::VectorXd& b, const Tolerances& tol) {
  const int n = frame.n();
  if (a.rows() != n || a.cols() != n || b.size() != n)
    throw std::invalid_argument("embed_affine: bad shapes");
  const double defect =
      (a.transpose() * frame.gram_prime() * a - frame.gram_prime())
          .cwiseAbs()
          .maxCoeff() /
      (1.0 + a.squaredNorm());
  if (defect > tol.orthogonality)
    throw std::invalid_argument(
        "embed_affine: linear part is not an isometry of q', defect " +
        std::to_string(defect));
  return GroupElement{frame.to_ambient_matrix(affine_lift(frame, a, b))};
}

GroupElement transvection(const Frame& frame, double t) {
  if (!(t > 0.0)) throw std::invalid_argument("transvection: need t > 0");
  const int d = frame.n() + 2;
  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(d, d);
  m(0, 0) = t;
  m(1, 1) = 1.0 / t;
  return GroupElement{frame.to_ambient_matrix(m)};
}

Eigen::MatrixXd linear_part(const Frame& frame, const GroupElement& g,
                            const Tolerances& tol) {
  const int n = frame.n();
  const Eigen::MatrixXd m = frame.to_frame_matrix(g.mat);
  const double scale = m.col(0).norm();
  if (std::abs(m(1, 0)) > tol.orthogonality * scale ||
      m.col(0).tail(n).norm() > tol.orthogonality * scale)
    throw std::invalid_argument(
        "linear_part: element does not stabilize the marked line");
  return m.block(2, 2, n, n);
}

IsotropicLine apply(const QuadraticSpace& space, const GroupElement& g,
                    const IsotropicLine& l, const Tolerances& tol) {
  if (g.mat.rows() != space.dim())
    throw std::invalid_argument("apply: dimension mismatch");
  return IsotropicLine::from_vector(space, g.mat * l.rep(), tol);
}

}  // namespace lopp
