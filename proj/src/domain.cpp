#include "lopp/domain.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <limits>

#include "lopp/sampling.hpp"

namespace lopp {

NullHyperplaneSet thickening_in_chart(const Frame& frame,
                                      const LimitSample& sample,
                                      const Tolerances& tol) {
  if (sample.points.empty())
    throw EmptySample("thickening_in_chart: empty sample");
  const int n = frame.n();
  NullHyperplaneSet out;
  out.n = n;
  out.items.reserve(sample.points.size());
  const Eigen::MatrixXd lorentz_inv = frame.lorentz_basis().inverse();
  for (const auto& p : sample.points) {
    const Eigen::VectorXd c = frame.frame_coords(p.rep());
    if (std::abs(c[1]) > tol.incidence)
      throw std::invalid_argument(
          "thickening_in_chart: sample point not incident to the marked line");
    Eigen::VectorXd w = c.tail(n);
    const double scale = w.norm();
    if (scale < 1e-8)
      throw std::invalid_argument(
          "thickening_in_chart: sample contains the marked line");
    w /= scale;
    double alpha = c[0] / scale;
    // Future-orient the null direction so the cylinder coordinates and the
    // boundary model agree.
    const Eigen::VectorXd y = lorentz_inv * w;
    if (y[n - 1] < 0) {
      w = -w;
      alpha = -alpha;
    }
    out.items.push_back({std::move(w), alpha});
  }
  return out;
}

double domain_margin(const Frame& frame, const NullHyperplaneSet& hset,
                     const Eigen::VectorXd& vprime) {
  // Empty thickening obstructs nothing.
  if (hset.items.empty()) return std::numeric_limits<double>::infinity();
  if (vprime.size() != hset.n || hset.n != frame.n())
    throw std::invalid_argument("domain_margin: dimension mismatch");
  const double denom = 1.0 + vprime.norm();
  double margin = std::numeric_limits<double>::infinity();
  for (const auto& item : hset.items) {
    const double v =
        std::abs(frame.bprime(vprime, item.direction) + item.offset);
    margin = std::min(margin, v / denom);
  }
  return margin;
}

namespace {

// 64n timelike unit (q' = -1) directions: the frame's time axis, both
// orientations, then low-discrepancy sphere points filtered to the safely
// timelike cone. Deterministic.
std::vector<Eigen::VectorXd> timelike_grid(const Frame& frame) {
  const int n = frame.n();
  const std::size_t want = static_cast<std::size_t>(64) * n;
  std::vector<Eigen::VectorXd> dirs;
  const Eigen::VectorXd axis = frame.lorentz_basis().col(n - 1);
  dirs.push_back(axis);
  dirs.push_back(-axis);
  for (long j = 0; dirs.size() < want && j < 1000000; ++j) {
    const Eigen::VectorXd d = sphere_point(n, j);
    const double q = frame.qprime(d);
    if (q > -0.1) continue;
    const Eigen::VectorXd unit = d / std::sqrt(-q);
    dirs.push_back(unit);
    if (dirs.size() < want) dirs.push_back(-unit);
  }
  return dirs;
}

}  // namespace

DomainPoint find_domain_point(const Frame& frame,
                              const NullHyperplaneSet& hset) {
  if (hset.items.empty())
    throw std::invalid_argument("find_domain_point: empty hyperplane set");
  const int n = frame.n();
  if (hset.n != n)
    throw std::invalid_argument("find_domain_point: dimension mismatch");

  DomainPoint best{Eigen::VectorXd::Zero(n),
                   -std::numeric_limits<double>::infinity()};
  for (const auto& dir : timelike_grid(frame)) {
    for (int e = 0; e <= 12; ++e) {
      const Eigen::VectorXd p = std::ldexp(1.0, e) * dir;
      const double m = domain_margin(frame, hset, p);
      if (m > best.margin) best = {p, m};
    }
  }

  // Compass refinement around the best ray point.
  double step = std::max(1.0, best.vprime.norm() / 4.0);
  const double floor_step = 1e-6 * (1.0 + best.vprime.norm());
  int budget = 400;
  while (step > floor_step && budget > 0) {
    bool improved = false;
    for (int i = 0; i < n && budget > 0; ++i) {
      for (int sign = -1; sign <= 1; sign += 2) {
        Eigen::VectorXd p = best.vprime;
        p[i] += sign * step;
        const double m = domain_margin(frame, hset, p);
        --budget;
        if (m > best.margin) {
          best = {p, m};
          improved = true;
        }
      }
    }
    if (!improved) step *= 0.5;
  }

  if (!(best.margin > 0)) {
    std::vector<double> pt(best.vprime.data(),
                           best.vprime.data() + best.vprime.size());
    const double denom = 1.0 + best.vprime.norm();
    const HyperplaneItem* blocker = &hset.items.front();
    double blocker_margin = std::numeric_limits<double>::infinity();
    for (const auto& item : hset.items) {
      const double v =
          std::abs(frame.bprime(best.vprime, item.direction) + item.offset) /
          denom;
      if (v < blocker_margin) {
        blocker_margin = v;
        blocker = &item;
      }
    }
    std::vector<double> dir(blocker->direction.data(),
                            blocker->direction.data() +
                                blocker->direction.size());
    throw SearchFailed("find_domain_point: no positive margin found, best " +
                           std::to_string(best.margin),
                       best.margin, pt, dir);
  }
  return best;
}

AuditReport properness_audit(const Frame& frame, const SchottkyGroup& group,
                             const Eigen::VectorXd& center, double radius,
                             int depth) {
  const int n = frame.n();
  if (center.size() != n || group.n != n)
    throw std::invalid_argument("properness_audit: dimension mismatch");
  if (!(radius > 0))
    throw std::invalid_argument("properness_audit: need radius > 0");
  if (depth < 2) throw std::invalid_argument("properness_audit: depth < 2");

  AuditReport report;
  report.center = center;
  report.radius = radius;
  report.depth = depth;
  report.returners_by_length.assign(depth + 1, 0);

  for (const auto& w :
       words(static_cast<int>(group.generators.size()), depth)) {
    const AffineIsometry aff = evaluate(group, w);
    const double displacement =
        (aff.linear * center + aff.translation - center).norm();
    const double top_singular =
        aff.linear.jacobiSvd().singularValues()(0);
    // Conservative overlap test: if the moved ball meets the ball at all,
    // the center displacement is at most r (1 + sigma_max). No returner is
    // ever missed; distant words can only be overcounted.
    if (displacement <= radius * (1.0 + top_singular))
      ++report.returners_by_length[w.length()];
  }

  report.cumulative.assign(depth + 1, 0);
  long acc = 0;
  for (int i = 0; i <= depth; ++i) {
    acc += report.returners_by_length[i];
    report.cumulative[i] = acc;
  }
  report.stabilized = report.cumulative[depth] == report.cumulative[depth - 1];
  return report;
}

double equivariance_audit(const Frame& frame, const SchottkyGroup& group,
                          const std::vector<Eigen::VectorXd>& samples,
                          const Tolerances& tol) {
  if (samples.empty())
    throw std::invalid_argument("equivariance_audit: no samples");
  double worst = 0.0;
  for (const auto& gen : group.generators) {
    const GroupElement g =
        embed_affine(frame, gen.linear, gen.translation, tol);
    for (const auto& v : samples) {
      const IsotropicLine moved =
          apply(frame.space(), g, chart_to_flag(frame, v, tol), tol);
      const IsotropicLine direct =
          chart_to_flag(frame, gen.linear * v + gen.translation, tol);
      worst = std::max(worst, chordal_distance(moved, direct));
    }
  }
  return worst;
}

}  // namespace lopp
