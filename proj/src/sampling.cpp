#include "lopp/sampling.hpp"

#include <cmath>
#include <stdexcept>

#include <unsupported/Eigen/MatrixFunctions>

#include "lopp/geometry.hpp"

namespace lopp {

double Rng::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

double Rng::gaussian() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double u1 = 0.0;
  do {
    u1 = uniform();
  } while (u1 <= 0.0);
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double a = 2.0 * M_PI * u2;
  spare_ = r * std::sin(a);
  have_spare_ = true;
  return r * std::cos(a);
}

Eigen::VectorXd Rng::gaussian_vector(int dim) {
  Eigen::VectorXd v(dim);
  for (int i = 0; i < dim; ++i) v[i] = gaussian();
  return v;
}

// Peter Acklam's quantile approximation, refined once with Halley's method on
// erfc so the tails are trustworthy.
double inverse_normal_cdf(double p) {
  if (!(p > 0.0 && p < 1.0))
    throw std::invalid_argument("inverse_normal_cdf: p outside (0,1)");
  static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                             -2.759285104469687e+02, 1.383577518672690e+02,
                             -3.066479806614716e+01, 2.506628277459239e+00};
  static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                             -1.556989798598866e+02, 6.680131188771972e+01,
                             -1.328068155288572e+01};
  static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                             -2.400758277161838e+00, -2.549732539343734e+00,
                             4.374664141464968e+00,  2.938163982698783e+00};
  static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                             2.445134137142996e+00, 3.754408661907416e+00};
  const double plow = 0.02425;
  double x = 0.0;
  if (p < plow) {
    const double q = std::sqrt(-2.0 * std::log(p));
    x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  } else if (p <= 1.0 - plow) {
    const double q = p - 0.5;
    const double r = q * q;
    x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) *
        q /
        (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
  } else {
    const double q = std::sqrt(-2.0 * std::log(1.0 - p));
    x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  const double e = 0.5 * std::erfc(-x / M_SQRT2) - p;
  const double u = e * std::sqrt(2.0 * M_PI) * std::exp(0.5 * x * x);
  return x - u / (1.0 + 0.5 * x * u);
}

namespace {

// Fractional parts of powers of the inverse generalized golden ratio: the
// standard Kronecker direction for a d-dimensional low-discrepancy sequence.
Eigen::VectorXd kronecker_alpha(int dim) {
  double phi = 1.5;
  for (int it = 0; it < 64; ++it)
    phi = std::pow(1.0 + phi, 1.0 / (dim + 1));
  Eigen::VectorXd alpha(dim);
  double g = 1.0;
  for (int i = 0; i < dim; ++i) {
    g /= phi;
    alpha[i] = g;
  }
  return alpha;
}

}  // namespace

Eigen::VectorXd sphere_point(int dim, long j) {
  if (dim < 1) throw std::invalid_argument("sphere_point: dim < 1");
  if (dim == 1) {
    Eigen::VectorXd v(1);
    v[0] = (j % 2 == 0) ? 1.0 : -1.0;
    return v;
  }
  if (dim == 2) {
    // No natural count-free spacing on a circle; fall back to the golden
    // angle, which is still equidistributed.
    const double golden = M_PI * (3.0 - std::sqrt(5.0));
    const double t = golden * static_cast<double>(j);
    Eigen::VectorXd v(2);
    v << std::cos(t), std::sin(t);
    return v;
  }
  static thread_local int cached_dim = -1;
  static thread_local Eigen::VectorXd alpha;
  if (cached_dim != dim) {
    alpha = kronecker_alpha(dim);
    cached_dim = dim;
  }
  Eigen::VectorXd v(dim);
  for (int i = 0; i < dim; ++i) {
    double u = 0.5 + alpha[i] * static_cast<double>(j + 1);
    u -= std::floor(u);
    // keep strictly inside (0,1)
    u = std::min(std::max(u, 1e-12), 1.0 - 1e-12);
    v[i] = inverse_normal_cdf(u);
  }
  const double norm = v.norm();
  if (norm < 1e-12) return sphere_point(dim, j + 1);
  return v / norm;
}

Eigen::MatrixXd sphere_grid(int dim, int count) {
  if (dim < 1 || count < 1)
    throw std::invalid_argument("sphere_grid: bad dim or count");
  Eigen::MatrixXd pts(count, dim);
  if (dim == 1) {
    for (int i = 0; i < count; ++i) pts(i, 0) = (i % 2 == 0) ? 1.0 : -1.0;
    return pts;
  }
  if (dim == 2) {
    for (int i = 0; i < count; ++i) {
      const double t = 2.0 * M_PI * i / count;
      pts(i, 0) = std::cos(t);
      pts(i, 1) = std::sin(t);
    }
    return pts;
  }
  for (int i = 0; i < count; ++i) pts.row(i) = sphere_point(dim, i).transpose();
  return pts;
}

Eigen::MatrixXd random_isometry(Rng& rng, const Eigen::MatrixXd& gram,
                                double scale) {
  const int d = static_cast<int>(gram.rows());
  if (gram.cols() != d) throw std::invalid_argument("random_isometry: gram not square");
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      const double x = rng.uniform(-scale, scale);
      m(i, j) = x;
      m(j, i) = -x;
    }
  // X = gram^{-1} m satisfies X^T gram + gram X = 0, so exp(X) preserves it.
  const Eigen::MatrixXd x = gram.fullPivLu().solve(m);
  return x.exp();
}

Eigen::VectorXd random_null(Rng& rng, const QuadraticSpace& space) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(space.gram());
  const Eigen::VectorXd& ev = es.eigenvalues();
  const int d = space.dim();
  Eigen::MatrixXd pos(d, 0), neg(d, 0);
  for (int i = 0; i < d; ++i) {
    Eigen::VectorXd col = es.eigenvectors().col(i) / std::sqrt(std::abs(ev[i]));
    if (ev[i] > 0) {
      pos.conservativeResize(Eigen::NoChange, pos.cols() + 1);
      pos.col(pos.cols() - 1) = col;
    } else {
      neg.conservativeResize(Eigen::NoChange, neg.cols() + 1);
      neg.col(neg.cols() - 1) = col;
    }
  }
  const Eigen::VectorXd x = rng.gaussian_vector(static_cast<int>(pos.cols())).normalized();
  const Eigen::VectorXd y = rng.gaussian_vector(static_cast<int>(neg.cols())).normalized();
  return pos * x + neg * y;
}

}  // namespace lopp
