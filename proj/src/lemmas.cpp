#include "lopp/lemmas.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

#include "lopp/chart.hpp"
#include "lopp/sampling.hpp"

namespace lopp {

bool LemmaReport::pass() const {
  for (const auto& r : results)
    if (!r.pass()) return false;
  return true;
}

const LemmaResult* LemmaReport::first_failure() const {
  for (const auto& r : results)
    if (!r.pass()) return &r;
  return nullptr;
}

namespace {

// Signature of the supplied Gram: symmetric, n positive and 2 negative
// eigenvalues, none nearly zero. Reported as a count of violations so the
// suite output stays numeric.
double signature_defect(const Eigen::MatrixXd& gram, int n) {
  double defect = 0.0;
  if (gram.rows() != n + 2 || gram.cols() != n + 2) return 1.0;
  defect += (gram - gram.transpose()).cwiseAbs().maxCoeff();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(
      0.5 * (gram + gram.transpose()));
  int pos = 0, neg = 0;
  for (int i = 0; i < n + 2; ++i) {
    const double ev = es.eigenvalues()[i];
    if (std::abs(ev) < 1e-9) defect += 1.0;
    else if (ev > 0) ++pos;
    else ++neg;
  }
  if (pos != n) defect += std::abs(pos - n);
  if (neg != 2) defect += std::abs(neg - 2);
  return defect;
}

}  // namespace

LemmaReport lemma_suite(int n, long samples, std::uint64_t seed,
                        const std::optional<Eigen::MatrixXd>& gram_override) {
  if (n < 3) throw std::invalid_argument("lemma_suite: n < 3");
  if (samples < 1) throw std::invalid_argument("lemma_suite: samples < 1");

  const QuadraticSpace space(n);
  const Frame frame = Frame::standard(space);
  const Eigen::MatrixXd gram = gram_override.value_or(space.gram());
  const Eigen::MatrixXd gram_prime = gram.block(2, 2, n, n);
  Rng rng(seed);

  LemmaResult signature{"signature", signature_defect(gram, n), 0.5, 1};
  LemmaResult orthogonality{"shear_orthogonality", 0.0, 1e-9, samples};
  LemmaResult unipotency{"shear_unipotency", 0.0, 1e-10, samples};
  LemmaResult homomorphism{"shear_homomorphism", 0.0, 1e-10, samples};
  LemmaResult equivariance{"conjugation_equivariance", 0.0, 1e-9, samples};
  LemmaResult pairing{"pairing_identity", 0.0, 1e-12, samples};
  LemmaResult round_trip{"chart_round_trip", 0.0, 1e-10, samples};

  const int d = n + 2;
  for (long s = 0; s < samples; ++s) {
    const Eigen::VectorXd v = rng.gaussian_vector(n);
    const Eigen::VectorXd u = rng.gaussian_vector(n);
    const Eigen::MatrixXd a = random_isometry(rng, frame.gram_prime(), 0.5);

    const Eigen::MatrixXd sv = shear(frame, v).mat;
    orthogonality.max_error =
        std::max(orthogonality.max_error,
                 (sv.transpose() * gram * sv - gram).cwiseAbs().maxCoeff());

    const Eigen::MatrixXd nil = sv - Eigen::MatrixXd::Identity(d, d);
    unipotency.max_error = std::max(
        unipotency.max_error, (nil * nil * nil).cwiseAbs().maxCoeff());

    homomorphism.max_error =
        std::max(homomorphism.max_error, shear_compose_check(frame, u, v));

    Eigen::MatrixXd ahat = Eigen::MatrixXd::Identity(d, d);
    ahat.block(2, 2, n, n) = a;
    const Eigen::MatrixXd conj = ahat * sv * ahat.inverse();
    equivariance.max_error =
        std::max(equivariance.max_error,
                 (conj - shear(frame, a * v).mat).cwiseAbs().maxCoeff());

    // B(f, s_v f) against -q'(v)/2 computed from the same Gram.
    const Eigen::VectorXd sf = sv * frame.f();
    const double lhs = frame.f().dot(gram * sf);
    const double qv = v.dot(gram_prime * v);
    pairing.max_error =
        std::max(pairing.max_error, std::abs(lhs + 0.5 * qv));

    const Eigen::VectorXd back =
        flag_to_chart(frame, chart_to_flag(frame, v));
    round_trip.max_error =
        std::max(round_trip.max_error, (back - v).cwiseAbs().maxCoeff());
  }

  LemmaReport report;
  report.n = n;
  report.seed = seed;
  report.results = {signature,    orthogonality, unipotency, homomorphism,
                    equivariance, pairing,       round_trip};
  return report;
}

}  // namespace lopp
