#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <vector>

#include "lopp/chart.hpp"

namespace lopp {

// x -> Ax + b on V', in frame basis coordinates.
struct AffineIsometry {
  Eigen::MatrixXd linear;
  Eigen::VectorXd translation;
};

AffineIsometry affine_identity(int n);
AffineIsometry affine_compose(const AffineIsometry& a, const AffineIsometry& b);
AffineIsometry affine_inverse(const AffineIsometry& a);

// Isometry of q' with eigenvalue e^rapidity on the null line through
// `attracting`, e^-rapidity on the one through `repelling`, identity on the
// common complement. The two directions must be non-proportional null
// vectors in V' coordinates.
Eigen::MatrixXd boost(const Frame& frame, const Eigen::VectorXd& attracting,
                      const Eigen::VectorXd& repelling, double rapidity,
                      const Tolerances& tol = {});

// Boundary model: rays of the future null cone of q', coordinatized as unit
// vectors omega in R^{n-1} (the spatial part of the null direction with time
// component 1, expressed in the frame's Lorentz basis).
Eigen::VectorXd boundary_direction(const Frame& frame,
                                   const Eigen::VectorXd& null_vp);
Eigen::VectorXd boundary_apply(const Frame& frame, const Eigen::MatrixXd& a,
                               const Eigen::VectorXd& omega);
double boundary_angle(const Eigen::VectorXd& u, const Eigen::VectorXd& v);

struct BoundaryBall {
  Eigen::VectorXd center;  // unit vector in R^{n-1}
  double radius;           // angular
};

struct PingPongCertificate {
  // 2k balls: attracting then repelling, per generator.
  std::vector<BoundaryBall> balls;
  double disjointness_margin;  // min over pairs of (angle - r_i - r_j)
  double contraction_margin;   // min over letters/samples of (r - angle to center)
  int boundary_samples;
  double margin() const;       // min of the two
};

struct GeneratorSpec {
  Eigen::VectorXd attracting;   // null direction in V' coordinates
  Eigen::VectorXd repelling;
  double rapidity = 0.0;
  Eigen::VectorXd translation;  // empty means zero
  double ball_radius = 0.0;
};

struct SchottkyGroup {
  int n = 0;  // dim V'
  std::vector<AffineIsometry> generators;
  std::optional<PingPongCertificate> certificate;
};

// Builds the group generated by boosts along the given axes (composed with
// the given translations in the affine picture) and certifies the linear
// parts play ping-pong on the boundary sphere: images of each repelling-ball
// complement land strictly inside the matching attracting ball, checked on a
// deterministic dense sample. Throws PingPongFailure with the offending
// letter and achieved margin.
SchottkyGroup schottky(const Frame& frame,
                       const std::vector<GeneratorSpec>& specs,
                       int boundary_samples = 10000,
                       const Tolerances& tol = {});

// Scales every translation by t > 0; linear parts and certificate unchanged.
SchottkyGroup scale_group(const SchottkyGroup& group, double t);

// A word in k generators: signed 1-based letters, -i the inverse of i.
struct Word {
  std::vector<int> letters;
  int length() const { return static_cast<int>(letters.size()); }
};

bool is_reduced(const Word& w);
bool is_cyclically_reduced(const Word& w);
Word word_inverse(const Word& w);

// All reduced words of length <= max_len in lexicographic letter order
// (+1 < -1 < +2 < ...), identity first, shorter before longer.
std::vector<Word> words(int num_generators, int max_len);

// 1 + sum_{m=1..N} 2k (2k-1)^{m-1}.
std::uint64_t word_count(int num_generators, int max_len);

AffineIsometry evaluate(const SchottkyGroup& group, const Word& w);

}  // namespace lopp
