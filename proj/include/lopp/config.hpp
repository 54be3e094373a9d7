#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lopp/groups.hpp"

namespace lopp {

struct GeneratorConfig {
  Eigen::VectorXd attracting;
  Eigen::VectorXd repelling;
  double rapidity = 3.0;
  double ball_radius = 0.5;
  std::optional<Eigen::VectorXd> translation;  // absent: drawn from the seed
};

struct RunConfig {
  int n = 3;
  std::vector<GeneratorConfig> generators;
  double translation_scale = 1.0;  // std-dev of seeded random translations
  double scale = 1.0;              // transvection parameter t
  int depth = 8;                   // word depth N
  int boundary_samples = 10000;
  long lemma_samples = 1000;
  std::uint64_t seed = 12345;
  std::string out_dir = "out";
  Tolerances tol;
  std::optional<Eigen::MatrixXd> gram_override;  // lemma-suite fixture only
};

// The default two-generator instance: boosts along two transverse axes of
// R^{2,1} at rapidity 3, boundary balls of angular radius 0.5, seeded random
// translations. Radius 0.5 gives contraction margin ~0.110 and disjointness
// margin ~0.571 on the boundary circle; radius 0.3 would fail certification
// at this rapidity (the repelling-ball boundary maps to angle ~0.637).
RunConfig desk_config();

RunConfig parse_config(const std::string& json_text);
RunConfig load_config(const std::string& path);
std::string serialize_config(const RunConfig& cfg);

// FNV-1a over the canonical serialization; stamped into artifacts.
std::uint64_t config_hash(const RunConfig& cfg);

// Fills in missing translations from Rng(seed) gaussians (scale
// translation_scale), in generator order. Deterministic.
std::vector<GeneratorSpec> resolve_generators(const RunConfig& cfg);

}  // namespace lopp
