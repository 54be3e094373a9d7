#include "lopp/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>

namespace lopp {

std::string format_double(double x) {
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

void write_file(const std::string& path, const std::string& content) {
  const std::filesystem::path p(path);
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  std::ofstream out(p, std::ios::binary);
  if (!out) throw Error("write_file: cannot open " + path);
  out << content;
  if (!out) throw Error("write_file: short write to " + path);
}

std::string limit_set_csv(const LimitSample& sample) {
  if (sample.points.empty()) throw EmptySample("limit_set_csv: empty sample");
  const int d = sample.points.front().dim();
  std::string out = "word_length";
  for (int i = 0; i < d; ++i) out += ",c" + std::to_string(i);
  out += "\n";
  for (std::size_t i = 0; i < sample.points.size(); ++i) {
    out += std::to_string(sample.word_length[i]);
    const Eigen::VectorXd& rep = sample.points[i].rep();
    for (int j = 0; j < d; ++j) out += "," + format_double(rep[j]);
    out += "\n";
  }
  return out;
}

PlanePoint project_quadric_point(const Frame& frame,
                                 const Eigen::VectorXd& direction,
                                 double offset) {
  const int n = frame.n();
  if (n != 3)
    throw std::invalid_argument("project_quadric_point: needs n = 3");
  if (direction.size() != n)
    throw std::invalid_argument("project_quadric_point: bad direction");
  // Rescale the null direction to time component one; the offset scales along.
  const Eigen::VectorXd y = frame.lorentz_basis().fullPivLu().solve(direction);
  const double tau = y[n - 1];
  if (tau <= 0)
    throw std::invalid_argument(
        "project_quadric_point: direction must be future-oriented");
  Eigen::VectorXd omega = y.head(n - 1) / tau;
  const double norm = omega.norm();
  if (norm < 1e-9)
    throw std::invalid_argument("project_quadric_point: direction not null");
  omega /= norm;
  const double alpha = offset / (tau * norm);
  PlanePoint p;
  p.phi = std::atan2(omega[1], omega[0]);
  p.alpha = alpha;
  // Cylinder point (omega, alpha) -> unit sphere -> plane from the north
  // pole; the marked line sits at the pole (alpha -> +inf).
  const double s = 1.0 / std::sqrt(1.0 + alpha * alpha);
  const double sx = omega[0] * s, sy = omega[1] * s, sz = alpha * s;
  p.x = sx / (1.0 - sz);
  p.y = sy / (1.0 - sz);
  return p;
}

namespace {

std::vector<PlanePoint> plane_points(const Frame& frame,
                                     const LimitSample& sample) {
  const NullHyperplaneSet hset = thickening_in_chart(frame, sample);
  std::vector<PlanePoint> pts;
  pts.reserve(hset.items.size());
  for (const auto& item : hset.items)
    pts.push_back(project_quadric_point(frame, item.direction, item.offset));
  return pts;
}

}  // namespace

std::string limit_set_2d_csv(const Frame& frame, const LimitSample& sample) {
  const std::vector<PlanePoint> pts = plane_points(frame, sample);
  std::string out = "word_length,phi,alpha,x,y\n";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    out += std::to_string(sample.word_length[i]) + "," +
           format_double(pts[i].phi) + "," + format_double(pts[i].alpha) +
           "," + format_double(pts[i].x) + "," + format_double(pts[i].y) +
           "\n";
  }
  return out;
}

std::string limit_set_svg(const Frame& frame, const LimitSample& sample,
                          int size_px) {
  const std::vector<PlanePoint> pts = plane_points(frame, sample);
  double lo_x = pts[0].x, hi_x = pts[0].x, lo_y = pts[0].y, hi_y = pts[0].y;
  for (const auto& p : pts) {
    lo_x = std::min(lo_x, p.x);
    hi_x = std::max(hi_x, p.x);
    lo_y = std::min(lo_y, p.y);
    hi_y = std::max(hi_y, p.y);
  }
  const double span = std::max({hi_x - lo_x, hi_y - lo_y, 1e-9});
  const double pad = 0.05 * span;
  const double scale = size_px / (span + 2 * pad);
  auto px = [&](double x) { return format_double((x - lo_x + pad) * scale); };
  // SVG y grows downward; flip so the plot reads like the plane.
  auto py = [&](double y) { return format_double((hi_y - y + pad) * scale); };

  std::string svg =
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
      std::to_string(size_px) + "\" height=\"" + std::to_string(size_px) +
      "\" viewBox=\"0 0 " + std::to_string(size_px) + " " +
      std::to_string(size_px) + "\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (const auto& p : pts)
    svg += "<circle cx=\"" + px(p.x) + "\" cy=\"" + py(p.y) +
           "\" r=\"2\" fill=\"black\" fill-opacity=\"0.7\"/>\n";
  svg += "</svg>\n";
  return svg;
}

}  // namespace lopp
