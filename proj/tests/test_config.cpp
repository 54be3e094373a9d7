#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <cstdlib>
#include <string>
#include <vector>

#include "lopp/pipeline.hpp"
#include "lopp/sampling.hpp"
#include "oracles.hpp"

using namespace lopp;

TEST_CASE("default config and its canonical serialization") {
  const RunConfig cfg = desk_config();
  CHECK(cfg.n == 3);
  REQUIRE(cfg.generators.size() == 2);
  for (const auto& g : cfg.generators) {
    CHECK(g.rapidity == 3.0);
    CHECK(g.ball_radius == 0.5);
    CHECK_FALSE(g.translation.has_value());
  }
  CHECK(cfg.depth == 8);
  CHECK(cfg.seed == 12345);
  CHECK(cfg.boundary_samples == 10000);

  const std::string text = serialize_config(cfg);
  CHECK(serialize_config(parse_config(text)) == text);

  const std::uint64_t h = config_hash(cfg);
  CHECK(config_hash(desk_config()) == h);
  RunConfig reseeded = cfg;
  reseeded.seed = 54321;
  CHECK(config_hash(reseeded) != h);
  RunConfig deeper = cfg;
  deeper.depth = 9;
  CHECK(config_hash(deeper) != h);

  CHECK_THROWS_AS(parse_config("{\"n\": 2}"), std::invalid_argument);
  CHECK_THROWS_AS(parse_config("not json at all"), std::invalid_argument);

  // the checked-in default must stay in sync with the built-in one
  const RunConfig from_file =
      load_config(std::string(LOPP_SOURCE_DIR) + "/configs/desk.json");
  CHECK(serialize_config(from_file) == text);
}

TEST_CASE("generator resolution is deterministic and honors overrides") {
  const RunConfig cfg = desk_config();
  const auto a = resolve_generators(cfg);
  const auto b = resolve_generators(cfg);
  REQUIRE(a.size() == 2);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK((a[i].translation - b[i].translation).cwiseAbs().maxCoeff() == 0.0);
    CHECK(a[i].translation.size() == 3);
    CHECK(a[i].translation.norm() > 1e-6);  // actually drawn, not zeroed
  }

  RunConfig wider = cfg;
  wider.translation_scale = 2.0;
  const auto w = resolve_generators(wider);
  for (std::size_t i = 0; i < a.size(); ++i)
    CHECK((w[i].translation - 2.0 * a[i].translation).cwiseAbs().maxCoeff() <=
          1e-15);

  RunConfig pinned = cfg;
  Eigen::VectorXd t(3);
  t << 0.25, -0.5, 0.125;
  pinned.generators[0].translation = t;
  const auto p = resolve_generators(pinned);
  CHECK((p[0].translation - t).cwiseAbs().maxCoeff() == 0.0);

  RunConfig empty = cfg;
  empty.generators.clear();
  CHECK_THROWS_AS(resolve_generators(empty), std::invalid_argument);
}

TEST_CASE("doubles print in shortest round-trip form") {
  for (double x : {0.1, 1.0 / 3.0, 1e-300, -2.5, 12345.678,
                   3.14159265358979323846}) {
    const std::string s = format_double(x);
    CHECK(std::strtod(s.c_str(), nullptr) == x);
  }
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(-2.5) == "-2.5");

  CHECK(fnv1a64("") == 0xcbf29ce484222325ull);
  CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cull);
}

TEST_CASE("identity suite passes on the real form, fails on a corrupted one") {
  const LemmaReport good = lemma_suite(3, 1000, 7);
  CHECK(good.pass());
  REQUIRE(good.results.size() == 7);
  const char* expected[] = {"signature",        "shear_orthogonality",
                            "shear_unipotency", "shear_homomorphism",
                            "conjugation_equivariance", "pairing_identity",
                            "chart_round_trip"};
  const double tolerances[] = {0.5, 1e-9, 1e-10, 1e-10, 1e-9, 1e-12, 1e-10};
  for (int i = 0; i < 7; ++i) {
    CHECK(good.results[i].name == expected[i]);
    CHECK(good.results[i].tolerance == tolerances[i]);
  }
  CHECK(good.first_failure() == nullptr);

  QuadraticSpace space(3);
  Eigen::MatrixXd corrupted = space.gram();
  corrupted(4, 4) = 1.0;  // wrong signature
  const LemmaReport bad = lemma_suite(3, 1000, 7, corrupted);
  CHECK_FALSE(bad.pass());
  REQUIRE(bad.first_failure() != nullptr);
  CHECK(bad.first_failure()->name == "signature");

  // a different seed must not change the verdict
  CHECK(lemma_suite(5, 300, 1).pass());
  CHECK(lemma_suite(5, 300, 999).pass());

  CHECK_THROWS_AS(lemma_suite(2, 100, 1), std::invalid_argument);
  CHECK_THROWS_AS(lemma_suite(3, 0, 1), std::invalid_argument);
}

TEST_CASE("lemma command exit codes") {
  RunConfig cfg = desk_config();
  cfg.lemma_samples = 200;
  cfg.out_dir = std::string(LOPP_TEST_SCRATCH) + "/lemmas_ok";
  CHECK(cmd_check_lemmas(cfg) == kExitOk);

  QuadraticSpace space(3);
  Eigen::MatrixXd corrupted = space.gram();
  corrupted(4, 4) = 1.0;
  RunConfig broken = cfg;
  broken.out_dir = std::string(LOPP_TEST_SCRATCH) + "/lemmas_bad";
  broken.gram_override = corrupted;
  CHECK(cmd_check_lemmas(broken) == kExitLemmaFailure);
}

TEST_CASE("deterministic sampling utilities") {
  const Eigen::MatrixXd circle = sphere_grid(2, 8);
  REQUIRE(circle.rows() == 8);
  CHECK(std::abs(circle(0, 0) - 1.0) <= 1e-15);
  CHECK(std::abs(circle(0, 1)) <= 1e-15);
  for (int i = 0; i < circle.rows(); ++i)
    CHECK(std::abs(circle.row(i).norm() - 1.0) <= 1e-12);

  const Eigen::MatrixXd sphere = sphere_grid(3, 50);
  REQUIRE(sphere.rows() == 50);
  for (int i = 0; i < sphere.rows(); ++i)
    CHECK(std::abs(sphere.row(i).norm() - 1.0) <= 1e-12);
  CHECK((sphere_point(3, 17) - sphere_point(3, 17)).norm() == 0.0);

  CHECK(std::abs(inverse_normal_cdf(0.5)) <= 1e-12);
  CHECK(std::abs(inverse_normal_cdf(0.975) - 1.959964) <= 1e-5);

  Rng r1(5), r2(5);
  for (int i = 0; i < 100; ++i) CHECK(r1.uniform() == r2.uniform());
  Rng g(6);
  double mean = 0.0, var = 0.0;
  const int count = 4000;
  std::vector<double> draws(count);
  for (int i = 0; i < count; ++i) {
    draws[i] = g.gaussian();
    mean += draws[i];
  }
  mean /= count;
  for (double d : draws) var += (d - mean) * (d - mean);
  var /= count;
  CHECK(std::abs(mean) < 0.1);
  CHECK(var > 0.8);
  CHECK(var < 1.2);
}

TEST_CASE("stereographic projection of quadric points") {
  QuadraticSpace space(3);
  const Frame frame = Frame::standard(space);
  const double rt2 = std::sqrt(2.0);
  Eigen::VectorXd w(3);
  w << 1.0 / rt2, 0.0, 1.0 / rt2;

  const PlanePoint base = project_quadric_point(frame, w, 0.0);
  CHECK(std::abs(base.x - 1.0) <= 1e-12);
  CHECK(std::abs(base.y) <= 1e-12);
  CHECK(std::abs(base.alpha) <= 1e-12);

  const PlanePoint lifted = project_quadric_point(frame, w, 1.0 / rt2);
  CHECK(std::abs(lifted.x - (1.0 + rt2)) <= 1e-12);
  CHECK(std::abs(lifted.y) <= 1e-12);
  CHECK(std::abs(lifted.alpha - 1.0) <= 1e-12);
  CHECK(std::abs(lifted.phi) <= 1e-12);

  Eigen::VectorXd past(3), spacelike(3), axis(3);
  past << 1.0 / rt2, 0.0, -1.0 / rt2;
  spacelike << 1.0, 0.0, 0.0;
  axis << 0.0, 0.0, 1.0;
  CHECK_THROWS_AS(project_quadric_point(frame, past, 0.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(project_quadric_point(frame, spacelike, 0.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(project_quadric_point(frame, axis, 0.0),
                  std::invalid_argument);
}

TEST_CASE("artifact text formats") {
  QuadraticSpace space(3);
  const Frame frame = Frame::standard(space);
  Eigen::VectorXd v = Eigen::VectorXd::Zero(5);
  v[0] = 0.5;
  v.tail(3) << 1.0, 0.0, 1.0;
  LimitSample sample;
  sample.points.push_back(IsotropicLine::from_vector(space, v));
  sample.word_length.push_back(2);
  sample.group_id = "0123456789abcdef";
  sample.words_considered = 1;

  const std::string csv = limit_set_csv(sample);
  CHECK(csv.substr(0, csv.find('\n')) == "word_length,c0,c1,c2,c3,c4");
  CHECK(csv.substr(csv.find('\n') + 1, 2) == "2,");

  const std::string flat = limit_set_2d_csv(frame, sample);
  CHECK(flat.substr(0, flat.find('\n')) == "word_length,phi,alpha,x,y");

  const std::string svg = limit_set_svg(frame, sample);
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("</svg>") != std::string::npos);

  CHECK_THROWS_AS(limit_set_csv(LimitSample{}), EmptySample);
}
