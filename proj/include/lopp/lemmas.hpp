#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lopp/geometry.hpp"

namespace lopp {

struct LemmaResult {
  std::string name;
  double max_error = 0.0;
  double tolerance = 0.0;
  long samples = 0;
  bool pass() const { return max_error <= tolerance; }
};

struct LemmaReport {
  int n = 0;
  std::uint64_t seed = 0;
  std::vector<LemmaResult> results;
  bool pass() const;
  const LemmaResult* first_failure() const;
};

// Randomized identity suite over `samples` draws: Gram signature, shear
// orthogonality, shear unipotency ((s-I)^3 = 0), the shear homomorphism,
// conjugation equivariance s_{Av'} = A s_{v'} A^{-1}, the pairing identity
// B(f, s_{v'} f) = -q'(v')/2, and the chart round trip. Tolerances are the
// published contracts. gram_override substitutes a (possibly corrupted) Gram
// matrix into the checks; the suite then reports against that matrix, which
// is how the injected-failure fixture works.
LemmaReport lemma_suite(int n, long samples, std::uint64_t seed,
                        const std::optional<Eigen::MatrixXd>& gram_override =
                            std::nullopt);

}  // namespace lopp
