#include "lopp/groups.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "lopp/sampling.hpp"

namespace lopp {

AffineIsometry affine_identity(int n) {
  return {Eigen::MatrixXd::Identity(n, n), Eigen::VectorXd::Zero(n)};
}

AffineIsometry affine_compose(const AffineIsometry& a,
                              const AffineIsometry& b) {
  if (a.linear.rows() != b.linear.rows())
    throw std::invalid_argument("affine_compose: dimension mismatch");
  return {a.linear * b.linear, a.translation + a.linear * b.translation};
}

AffineIsometry affine_inverse(const AffineIsometry& a) {
  const Eigen::MatrixXd inv = a.linear.inverse();
  return {inv, -(inv * a.translation)};
}

Eigen::MatrixXd boost(const Frame& frame, const Eigen::VectorXd& attracting,
                      const Eigen::VectorXd& repelling, double rapidity,
                      const Tolerances& tol) {
  const int n = frame.n();
  if (attracting.size() != n || repelling.size() != n)
    throw std::invalid_argument("boost: bad direction size");
  const double na = attracting.norm();
  const double nr = repelling.norm();
  if (na < 1e-12 || nr < 1e-12)
    throw std::invalid_argument("boost: zero direction");
  const Eigen::VectorXd u = attracting / na;
  const Eigen::VectorXd w = repelling / nr;
  if (std::abs(frame.qprime(u)) > tol.null_vector ||
      std::abs(frame.qprime(w)) > tol.null_vector)
    throw std::invalid_argument("boost: directions must be null");
  if ((u - u.dot(w) * w).norm() <= tol.parallel)
    throw std::invalid_argument("boost: axis endpoints coincide");
  // In Lorentzian signature two non-proportional null vectors cannot pair to
  // zero, so the frame [u w complement] below is genuinely invertible.
  Eigen::MatrixXd rows(2, n);
  rows.row(0) = (frame.gram_prime() * u).transpose();
  rows.row(1) = (frame.gram_prime() * w).transpose();
  Eigen::FullPivLU<Eigen::MatrixXd> lu(rows);
  const Eigen::MatrixXd complement = lu.kernel();  // n x (n-2)
  if (complement.cols() != n - 2)
    throw std::invalid_argument("boost: degenerate axis");
  Eigen::MatrixXd p(n, n);
  p.col(0) = u;
  p.col(1) = w;
  p.rightCols(n - 2) = complement;
  Eigen::VectorXd d = Eigen::VectorXd::Ones(n);
  d[0] = std::exp(rapidity);
  d[1] = std::exp(-rapidity);
  const Eigen::MatrixXd t = p * d.asDiagonal() * p.inverse();
  const double defect =
      (t.transpose() * frame.gram_prime() * t - frame.gram_prime())
          .cwiseAbs()
          .maxCoeff();
  if (defect > tol.orthogonality)
    throw Error("boost: isometry defect " + std::to_string(defect));
  return t;
}

Eigen::VectorXd boundary_direction(const Frame& frame,
                                   const Eigen::VectorXd& null_vp) {
  const int n = frame.n();
  if (null_vp.size() != n)
    throw std::invalid_argument("boundary_direction: bad size");
  Eigen::VectorXd y = frame.lorentz_basis().fullPivLu().solve(null_vp);
  const double tau = y[n - 1];
  if (std::abs(tau) < 1e-12 * y.norm())
    throw std::invalid_argument("boundary_direction: direction is not null");
  if (tau < 0) y = -y;
  Eigen::VectorXd omega = y.head(n - 1) / std::abs(tau);
  const double norm = omega.norm();
  if (norm < 1e-12)
    throw std::invalid_argument("boundary_direction: direction is not null");
  return omega / norm;
}

Eigen::VectorXd boundary_apply(const Frame& frame, const Eigen::MatrixXd& a,
                               const Eigen::VectorXd& omega) {
  const int n = frame.n();
  if (omega.size() != n - 1)
    throw std::invalid_argument("boundary_apply: bad boundary point");
  Eigen::VectorXd y(n);
  y.head(n - 1) = omega;
  y[n - 1] = 1.0;
  return boundary_direction(frame, a * (frame.lorentz_basis() * y));
}

double boundary_angle(const Eigen::VectorXd& u, const Eigen::VectorXd& v) {
  const double c = std::clamp(u.dot(v) / (u.norm() * v.norm()), -1.0, 1.0);
  return std::acos(c);
}

double PingPongCertificate::margin() const {
  return std::min(disjointness_margin, contraction_margin);
}

SchottkyGroup schottky(const Frame& frame,
                       const std::vector<GeneratorSpec>& specs,
                       int boundary_samples, const Tolerances& tol) {
  const int n = frame.n();
  const int k = static_cast<int>(specs.size());
  if (k < 2)
    throw std::invalid_argument("schottky: need at least two generators");
  if (boundary_samples < 100)
    throw std::invalid_argument("schottky: boundary_samples too small");

  SchottkyGroup group;
  group.n = n;
  PingPongCertificate cert;
  cert.boundary_samples = boundary_samples;

  std::vector<Eigen::MatrixXd> linear;
  for (const auto& spec : specs) {
    if (!(spec.rapidity > 0))
      throw std::invalid_argument("schottky: rapidity must be positive");
    if (!(spec.ball_radius > 0) || !(spec.ball_radius < M_PI / 2))
      throw std::invalid_argument("schottky: ball radius outside (0, pi/2)");
    const Eigen::MatrixXd a =
        boost(frame, spec.attracting, spec.repelling, spec.rapidity, tol);
    Eigen::VectorXd b = spec.translation;
    if (b.size() == 0) b = Eigen::VectorXd::Zero(n);
    if (b.size() != n)
      throw std::invalid_argument("schottky: bad translation size");
    linear.push_back(a);
    group.generators.push_back({a, b});
    cert.balls.push_back(
        {boundary_direction(frame, spec.attracting), spec.ball_radius});
    cert.balls.push_back(
        {boundary_direction(frame, spec.repelling), spec.ball_radius});
  }

  cert.disjointness_margin = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < cert.balls.size(); ++i)
    for (std::size_t j = i + 1; j < cert.balls.size(); ++j) {
      const double sep =
          boundary_angle(cert.balls[i].center, cert.balls[j].center) -
          cert.balls[i].radius - cert.balls[j].radius;
      cert.disjointness_margin = std::min(cert.disjointness_margin, sep);
    }
  if (cert.disjointness_margin <= 0)
    throw PingPongFailure("schottky: boundary balls are not disjoint, margin " +
                              std::to_string(cert.disjointness_margin),
                          0, cert.disjointness_margin);

  // Each letter must map the complement of its repelling ball strictly
  // inside its attracting ball; check every letter on a dense deterministic
  // sample and record the worst margin.
  const Eigen::MatrixXd sphere = sphere_grid(n - 1, boundary_samples);
  cert.contraction_margin = std::numeric_limits<double>::infinity();
  int worst_letter = 0;
  for (int i = 0; i < k; ++i) {
    const Eigen::MatrixXd inv = linear[i].inverse();
    for (int sign = 0; sign < 2; ++sign) {
      const Eigen::MatrixXd& a = (sign == 0) ? linear[i] : inv;
      const BoundaryBall& repel = cert.balls[2 * i + (sign == 0 ? 1 : 0)];
      const BoundaryBall& attract = cert.balls[2 * i + (sign == 0 ? 0 : 1)];
      double letter_margin = std::numeric_limits<double>::infinity();
      for (int s = 0; s < boundary_samples; ++s) {
        const Eigen::VectorXd x = sphere.row(s).transpose();
        if (boundary_angle(x, repel.center) < repel.radius) continue;
        const Eigen::VectorXd y = boundary_apply(frame, a, x);
        letter_margin = std::min(
            letter_margin, attract.radius - boundary_angle(y, attract.center));
      }
      if (letter_margin < cert.contraction_margin) {
        cert.contraction_margin = letter_margin;
        worst_letter = (sign == 0) ? (i + 1) : -(i + 1);
      }
    }
  }
  if (!(cert.contraction_margin > 0))
    throw PingPongFailure(
        "schottky: letter " + std::to_string(worst_letter) +
            " fails contraction, margin " +
            std::to_string(cert.contraction_margin),
        worst_letter, cert.contraction_margin);

  group.certificate = cert;
  return group;
}

SchottkyGroup scale_group(const SchottkyGroup& group, double t) {
  if (!(t > 0)) throw std::invalid_argument("scale_group: need t > 0");
  SchottkyGroup out = group;
  for (auto& g : out.generators) g.translation *= t;
  return out;
}

bool is_reduced(const Word& w) {
  for (std::size_t i = 0; i + 1 < w.letters.size(); ++i)
    if (w.letters[i] == -w.letters[i + 1]) return false;
  return true;
}

bool is_cyclically_reduced(const Word& w) {
  if (!is_reduced(w)) return false;
  if (w.letters.size() < 2) return true;
  return w.letters.front() != -w.letters.back();
}

Word word_inverse(const Word& w) {
  Word out;
  out.letters.reserve(w.letters.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    out.letters.push_back(-*it);
  return out;
}

std::vector<Word> words(int num_generators, int max_len) {
  if (num_generators < 0 || max_len < 0)
    throw std::invalid_argument("words: negative argument");
  std::vector<int> alphabet;
  for (int i = 1; i <= num_generators; ++i) {
    alphabet.push_back(i);
    alphabet.push_back(-i);
  }
  std::vector<Word> out;
  out.push_back(Word{});
  std::size_t level_begin = 0;
  for (int len = 1; len <= max_len; ++len) {
    const std::size_t level_end = out.size();
    for (std::size_t w = level_begin; w < level_end; ++w)
      for (int letter : alphabet) {
        if (!out[w].letters.empty() && out[w].letters.back() == -letter)
          continue;
        Word next = out[w];
        next.letters.push_back(letter);
        out.push_back(std::move(next));
      }
    level_begin = level_end;
  }
  return out;
}

std::uint64_t word_count(int num_generators, int max_len) {
  if (num_generators < 0 || max_len < 0)
    throw std::invalid_argument("word_count: negative argument");
  const std::uint64_t k2 = 2ull * num_generators;
  std::uint64_t total = 1, level = k2;
  for (int len = 1; len <= max_len; ++len) {
    total += level;
    level *= (k2 == 0 ? 0 : k2 - 1);
  }
  return total;
}

AffineIsometry evaluate(const SchottkyGroup& group, const Word& w) {
  AffineIsometry acc = affine_identity(group.n);
  const int k = static_cast<int>(group.generators.size());
  for (int letter : w.letters) {
    const int i = std::abs(letter);
    if (i < 1 || i > k)
      throw std::invalid_argument("evaluate: letter outside alphabet");
    const AffineIsometry& g = group.generators[i - 1];
    acc = affine_compose(acc, letter > 0 ? g : affine_inverse(g));
  }
  return acc;
}

}  // namespace lopp
