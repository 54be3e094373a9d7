#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <random>

namespace lopp {

class QuadraticSpace;

// Deterministic random source. Everything downstream that says "seeded" draws
// from one of these, so identical seeds give bit-identical runs.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, 1), from the top 53 bits of the engine.
  double uniform();
  double uniform(double lo, double hi);

  // Standard normal via Box-Muller on uniform(); platform-independent,
  // unlike std::normal_distribution.
  double gaussian();
  Eigen::VectorXd gaussian_vector(int dim);

 private:
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

// Acklam's rational approximation to the standard normal quantile,
// |relative error| < 1.2e-9 on (0, 1). Used to push low-discrepancy cubes
// onto spheres.
double inverse_normal_cdf(double p);

// j-th point of a deterministic low-discrepancy sequence on S^{dim-1}.
// dim 1 alternates +1/-1; dim 2 only makes sense with a known total, so use
// sphere_grid for circles. dim >= 3 maps a Kronecker sequence through the
// normal quantile and normalizes.
Eigen::VectorXd sphere_point(int dim, long j);

// count points spread over S^{dim-1}: evenly spaced for dim 2, the
// sphere_point sequence otherwise. Rows are unit vectors.
Eigen::MatrixXd sphere_grid(int dim, int count);

// exp(gram^{-1} M) with M antisymmetric, entries uniform(-scale, scale):
// a haar-ish sample from the identity component of the isometry group of the
// symmetric bilinear form `gram`.
Eigen::MatrixXd random_isometry(Rng& rng, const Eigen::MatrixXd& gram,
                                double scale = 0.5);

// Random q-null vector: unit gaussian directions in the positive and negative
// eigenspaces of the Gram matrix, matched in length.
Eigen::VectorXd random_null(Rng& rng, const QuadraticSpace& space);

}  // namespace lopp
