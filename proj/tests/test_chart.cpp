#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>

#include "lopp/chart.hpp"
#include "lopp/sampling.hpp"
#include "oracles.hpp"

using namespace lopp;

namespace {

double max_abs(const Eigen::MatrixXd& m) { return m.cwiseAbs().maxCoeff(); }

// A valid non-standard frame: marked pair swapped, V' basis rescaled.
Frame swapped_frame(const QuadraticSpace& space) {
  const int d = space.dim();
  Eigen::VectorXd e = Eigen::VectorXd::Zero(d);
  Eigen::VectorXd f = Eigen::VectorXd::Zero(d);
  e[1] = 1.0;
  f[0] = 1.0;
  Eigen::MatrixXd basis = Eigen::MatrixXd::Zero(d, space.n());
  for (int j = 0; j < space.n(); ++j) basis(2 + j, j) = 2.0;
  return Frame(space, e, f, basis, "swapped");
}

}  // namespace

TEST_CASE("standard frame: marked pair, induced form, validation") {
  QuadraticSpace space(3);
  const Frame frame = Frame::standard(space);
  CHECK(frame.is_standard());
  CHECK(frame.e()[0] == 1.0);
  CHECK(frame.f()[1] == 1.0);
  Eigen::MatrixXd expected = Eigen::MatrixXd::Zero(3, 3);
  expected(0, 0) = expected(1, 1) = 1.0;
  expected(2, 2) = -1.0;
  CHECK(max_abs(frame.gram_prime() - expected) == 0.0);
  CHECK(max_abs(frame.lorentz_basis() - Eigen::MatrixXd::Identity(3, 3)) ==
        0.0);

  Eigen::VectorXd vp(3);
  vp << 1.0, 2.0, 3.0;
  CHECK(frame.qprime(vp) == -4.0);
  CHECK(frame.bprime(vp, vp) == -4.0);

  // marked vectors must be null and pair to one
  CHECK_THROWS_AS(Frame(space, Eigen::VectorXd::Ones(5), frame.f(),
                        frame.basis()),
                  std::invalid_argument);
  CHECK_THROWS_AS(Frame(space, frame.e(), 2.0 * frame.f(), frame.basis()),
                  std::invalid_argument);
}

TEST_CASE("non-standard frame: coordinates and pseudo-orthonormal basis") {
  QuadraticSpace space(4);
  const Frame frame = swapped_frame(space);
  CHECK_FALSE(frame.is_standard());

  // round trip through frame coordinates
  Rng rng(61);
  for (int trial = 0; trial < 20; ++trial) {
    const Eigen::VectorXd v = rng.gaussian_vector(space.dim());
    Eigen::VectorXd c = frame.frame_coords(v);
    Eigen::VectorXd back =
        c[0] * frame.e() + c[1] * frame.f() + frame.to_ambient(c.tail(4));
    CHECK(max_abs(v - back) < 1e-12);
  }

  // the Lorentz basis pseudo-orthonormalizes the induced form
  Eigen::MatrixXd target = Eigen::MatrixXd::Identity(4, 4);
  target(3, 3) = -1.0;
  CHECK(max_abs(frame.lorentz_basis().transpose() * frame.gram_prime() *
                    frame.lorentz_basis() -
                target) < 1e-12);
}

TEST_CASE("shear: frozen matrix, defining columns, nilpotency order") {
  QuadraticSpace space(3);
  const Frame frame = Frame::standard(space);

  Eigen::VectorXd vp(3);
  vp << 1.0, 2.0, 3.0;
  const GroupElement s = shear(frame, vp);
  CHECK(max_abs(s.mat - oracle::shear_n3_123()) == 0.0);

  // v' = b1: f goes to -e/2 + f + b1
  Eigen::VectorXd b1 = Eigen::VectorXd::Zero(3);
  b1[0] = 1.0;
  const GroupElement s1 = shear(frame, b1);
  Eigen::VectorXd image = s1.mat * frame.f();
  Eigen::VectorXd expected(5);
  expected << -0.5, 1.0, 1.0, 0.0, 0.0;
  CHECK(max_abs(image - expected) == 0.0);

  // (s - I)^3 vanishes identically, (s - I)^2 does not
  Rng rng(71);
  for (int trial = 0; trial < 25; ++trial) {
    const Eigen::VectorXd v = 3.0 * rng.gaussian_vector(3);
    const Eigen::MatrixXd nil =
        shear(frame, v).mat - Eigen::MatrixXd::Identity(5, 5);
    CHECK(max_abs(nil * nil * nil) == 0.0);
    if (std::abs(frame.qprime(v)) > 1e-6) CHECK(max_abs(nil * nil) > 1e-8);
  }
}

TEST_CASE("shear is a q-isometry and a homomorphism in v'") {
  for (int n : {3, 5}) {
    QuadraticSpace space(n);
    const Frame frame = Frame::standard(space);
    Rng rng(81 + n);
    for (int trial = 0; trial < 50; ++trial) {
      const Eigen::VectorXd u = rng.gaussian_vector(n);
      const Eigen::VectorXd v = rng.gaussian_vector(n);
      const Eigen::MatrixXd s = shear(frame, u).mat;
      CHECK(max_abs(s.transpose() * space.gram() * s - space.gram()) <= 1e-9);
      CHECK(shear_compose_check(frame, u, v) <= 1e-10);
    }
  }
}

TEST_CASE("chart: origin, round trip, incidence rejection") {
  QuadraticSpace space(3);
  for (const Frame& frame :
       {Frame::standard(space), swapped_frame(space)}) {
    CHECK(chordal_distance(chart_to_flag(frame, Eigen::VectorXd::Zero(3)),
                           frame.line_hat()) <= 1e-15);
    CHECK_THROWS_AS(flag_to_chart(frame, frame.line()), NotOpposite);

    Rng rng(91);
    for (int trial = 0; trial < 100; ++trial) {
      const Eigen::VectorXd vp = 5.0 * rng.gaussian_vector(3);
      const IsotropicLine m = chart_to_flag(frame, vp);
      CHECK(classify_pair(space, frame.line(), m) == PairClass::Opposite);
      CHECK((flag_to_chart(frame, m) - vp).cwiseAbs().maxCoeff() <= 1e-10);
    }
  }
}

TEST_CASE("conjugation moves the shear parameter") {
  QuadraticSpace space(3);
  const Frame frame = Frame::standard(space);
  Rng rng(101);

  // by the linear part: A s_v A^{-1} = s_{Av}
  for (int trial = 0; trial < 50; ++trial) {
    const Eigen::MatrixXd a = random_isometry(rng, frame.gram_prime());
    const Eigen::VectorXd v = rng.gaussian_vector(3);
    const GroupElement lift = embed_affine(frame, a, Eigen::VectorXd::Zero(3));
    const Eigen::MatrixXd conj =
        lift.mat * shear(frame, v).mat * lift.mat.inverse();
    CHECK(max_abs(conj - shear(frame, a * v).mat) <= 1e-9);
  }

  // by the transvection: a_2 s_v a_2^{-1} = s_{2v}
  const GroupElement a2 = transvection(frame, 2.0);
  const GroupElement a2inv = transvection(frame, 0.5);
  for (int trial = 0; trial < 50; ++trial) {
    const Eigen::VectorXd v = rng.gaussian_vector(3);
    const Eigen::MatrixXd conj = a2.mat * shear(frame, v).mat * a2inv.mat;
    CHECK(max_abs(conj - shear(frame, 2.0 * v).mat) <= 1e-10);
  }
  CHECK_THROWS_AS(transvection(frame, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(transvection(frame, -1.0), std::invalid_argument);
}

TEST_CASE("affine lifts: embedding, linear part, stabilizer guard") {
  QuadraticSpace space(4);
  const Frame frame = Frame::standard(space);
  Rng rng(111);

  // translation-only lift is the shear
  const Eigen::VectorXd b = rng.gaussian_vector(4);
  CHECK(max_abs(embed_affine(frame, Eigen::MatrixXd::Identity(4, 4), b).mat -
                shear(frame, b).mat) == 0.0);

  for (int trial = 0; trial < 25; ++trial) {
    const Eigen::MatrixXd a = random_isometry(rng, frame.gram_prime());
    const Eigen::VectorXd t = rng.gaussian_vector(4);
    const GroupElement g = embed_affine(frame, a, t);
    // lift is an ambient isometry fixing the marked line
    CHECK(max_abs(g.mat.transpose() * space.gram() * g.mat - space.gram()) <=
          1e-9);
    CHECK(chordal_distance(apply(space, g, frame.line()), frame.line()) <=
          1e-12);
    CHECK(max_abs(linear_part(frame, g) - a) <= 1e-12);
  }

  CHECK(max_abs(linear_part(frame, transvection(frame, 3.0)) -
                Eigen::MatrixXd::Identity(4, 4)) == 0.0);
  CHECK(max_abs(linear_part(frame, shear(frame, b)) -
                Eigen::MatrixXd::Identity(4, 4)) == 0.0);

  // multiplicative on the stabilizer
  const GroupElement g1 =
      embed_affine(frame, random_isometry(rng, frame.gram_prime()),
                   rng.gaussian_vector(4));
  const GroupElement g2 =
      embed_affine(frame, random_isometry(rng, frame.gram_prime()),
                   rng.gaussian_vector(4));
  CHECK(max_abs(linear_part(frame, GroupElement{g1.mat * g2.mat}) -
                linear_part(frame, g1) * linear_part(frame, g2)) <= 1e-12);

  // rejects non-isometries and non-stabilizing elements
  CHECK_THROWS_AS(
      embed_affine(frame, 2.0 * Eigen::MatrixXd::Identity(4, 4), b),
      std::invalid_argument);
  Eigen::MatrixXd swap = Eigen::MatrixXd::Identity(6, 6);
  swap(0, 0) = swap(1, 1) = 0.0;
  swap(0, 1) = swap(1, 0) = 1.0;
  const GroupElement sw = element_from_matrix(space, swap);
  CHECK_THROWS_AS(linear_part(frame, sw), std::invalid_argument);
  CHECK_THROWS_AS(
      element_from_matrix(space, 1.5 * Eigen::MatrixXd::Identity(6, 6)),
      std::invalid_argument);
}

TEST_CASE("chart action: shears act as translations on the cell") {
  QuadraticSpace space(3);
  const Frame frame = Frame::standard(space);
  Rng rng(121);
  for (int trial = 0; trial < 50; ++trial) {
    const Eigen::VectorXd u = rng.gaussian_vector(3);
    const Eigen::VectorXd v = rng.gaussian_vector(3);
    const IsotropicLine moved =
        apply(space, shear(frame, u), chart_to_flag(frame, v));
    CHECK(chordal_distance(moved, chart_to_flag(frame, u + v)) <= 1e-12);
  }
}
