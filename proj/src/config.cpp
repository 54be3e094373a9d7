#include "lopp/config.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "lopp/io.hpp"
#include "lopp/sampling.hpp"

namespace lopp {

namespace {

using nlohmann::json;

json vector_to_json(const Eigen::VectorXd& v) {
  json arr = json::array();
  for (int i = 0; i < v.size(); ++i) arr.push_back(v[i]);
  return arr;
}

Eigen::VectorXd vector_from_json(const json& arr, const char* what) {
  if (!arr.is_array())
    throw std::invalid_argument(std::string("config: ") + what +
                                " must be an array");
  Eigen::VectorXd v(arr.size());
  for (std::size_t i = 0; i < arr.size(); ++i) v[i] = arr[i].get<double>();
  return v;
}

json matrix_to_json(const Eigen::MatrixXd& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(row);
  }
  return rows;
}

Eigen::MatrixXd matrix_from_json(const json& rows, const char* what) {
  if (!rows.is_array() || rows.empty())
    throw std::invalid_argument(std::string("config: ") + what +
                                " must be a matrix");
  const std::size_t cols = rows[0].size();
  Eigen::MatrixXd m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols)
      throw std::invalid_argument(std::string("config: ragged matrix in ") +
                                  what);
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j].get<double>();
  }
  return m;
}

json tolerances_to_json(const Tolerances& t) {
  json out;
  out["null_vector"] = t.null_vector;
  out["incidence"] = t.incidence;
  out["parallel"] = t.parallel;
  out["orthogonality"] = t.orthogonality;
  out["spectral_gap"] = t.spectral_gap;
  out["dedup"] = t.dedup;
  out["guard_factor"] = t.guard_factor;
  return out;
}

Tolerances tolerances_from_json(const json& j) {
  Tolerances t;
  t.null_vector = j.value("null_vector", t.null_vector);
  t.incidence = j.value("incidence", t.incidence);
  t.parallel = j.value("parallel", t.parallel);
  t.orthogonality = j.value("orthogonality", t.orthogonality);
  t.spectral_gap = j.value("spectral_gap", t.spectral_gap);
  t.dedup = j.value("dedup", t.dedup);
  t.guard_factor = j.value("guard_factor", t.guard_factor);
  return t;
}

}  // namespace

RunConfig desk_config() {
  RunConfig cfg;
  cfg.n = 3;
  GeneratorConfig g1;
  g1.attracting = Eigen::Vector3d(1, 0, 1);
  g1.repelling = Eigen::Vector3d(-1, 0, 1);
  GeneratorConfig g2;
  g2.attracting = Eigen::Vector3d(0, 1, 1);
  g2.repelling = Eigen::Vector3d(0, -1, 1);
  cfg.generators = {g1, g2};
  return cfg;
}

RunConfig parse_config(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("config: parse error: ") +
                                e.what());
  }
  RunConfig cfg;
  cfg.n = j.value("n", cfg.n);
  if (cfg.n < 3) throw std::invalid_argument("config: n < 3");
  cfg.seed = j.value("seed", cfg.seed);
  cfg.depth = j.value("depth", cfg.depth);
  cfg.scale = j.value("scale", cfg.scale);
  cfg.translation_scale = j.value("translation_scale", cfg.translation_scale);
  cfg.boundary_samples = j.value("boundary_samples", cfg.boundary_samples);
  cfg.lemma_samples = j.value("lemma_samples", cfg.lemma_samples);
  cfg.out_dir = j.value("out_dir", cfg.out_dir);
  if (j.contains("tolerances"))
    cfg.tol = tolerances_from_json(j.at("tolerances"));
  if (j.contains("gram_override"))
    cfg.gram_override = matrix_from_json(j.at("gram_override"), "gram_override");
  cfg.generators.clear();
  if (j.contains("generators")) {
    for (const auto& gj : j.at("generators")) {
      GeneratorConfig g;
      g.attracting = vector_from_json(gj.at("attracting"), "attracting");
      g.repelling = vector_from_json(gj.at("repelling"), "repelling");
      g.rapidity = gj.value("rapidity", g.rapidity);
      g.ball_radius = gj.value("ball_radius", g.ball_radius);
      if (gj.contains("translation"))
        g.translation = vector_from_json(gj.at("translation"), "translation");
      if (g.attracting.size() != cfg.n || g.repelling.size() != cfg.n)
        throw std::invalid_argument("config: generator direction size != n");
      if (g.translation && g.translation->size() != cfg.n)
        throw std::invalid_argument("config: generator translation size != n");
      cfg.generators.push_back(std::move(g));
    }
  }
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("config: cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::string serialize_config(const RunConfig& cfg) {
  // nlohmann::json keeps keys sorted, which makes this serialization (and
  // the config hash) canonical.
  json j;
  j["schema"] = "run_config/1";
  j["n"] = cfg.n;
  j["seed"] = cfg.seed;
  j["depth"] = cfg.depth;
  j["scale"] = cfg.scale;
  j["translation_scale"] = cfg.translation_scale;
  j["boundary_samples"] = cfg.boundary_samples;
  j["lemma_samples"] = cfg.lemma_samples;
  j["out_dir"] = cfg.out_dir;
  j["tolerances"] = tolerances_to_json(cfg.tol);
  if (cfg.gram_override) j["gram_override"] = matrix_to_json(*cfg.gram_override);
  json gens = json::array();
  for (const auto& g : cfg.generators) {
    json gj;
    gj["attracting"] = vector_to_json(g.attracting);
    gj["repelling"] = vector_to_json(g.repelling);
    gj["rapidity"] = g.rapidity;
    gj["ball_radius"] = g.ball_radius;
    if (g.translation) gj["translation"] = vector_to_json(*g.translation);
    gens.push_back(gj);
  }
  j["generators"] = gens;
  return j.dump(2) + "\n";
}

std::uint64_t config_hash(const RunConfig& cfg) {
  // out_dir is plumbing, not part of the run's identity: the same
  // computation written to two directories should carry the same hash.
  RunConfig keyed = cfg;
  keyed.out_dir.clear();
  return fnv1a64(serialize_config(keyed));
}

std::vector<GeneratorSpec> resolve_generators(const RunConfig& cfg) {
  if (cfg.generators.empty())
    throw std::invalid_argument("config: no generators");
  Rng rng(cfg.seed);
  std::vector<GeneratorSpec> specs;
  specs.reserve(cfg.generators.size());
  for (const auto& g : cfg.generators) {
    GeneratorSpec spec;
    spec.attracting = g.attracting;
    spec.repelling = g.repelling;
    spec.rapidity = g.rapidity;
    spec.ball_radius = g.ball_radius;
    spec.translation = g.translation
                           ? *g.translation
                           : Eigen::VectorXd(cfg.translation_scale *
                                             rng.gaussian_vector(cfg.n));
    specs.push_back(std::move(spec));
  }
  return specs;
}

}  // namespace lopp
