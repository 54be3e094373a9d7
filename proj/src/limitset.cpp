#include "lopp/limitset.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <cstring>
#include <limits>
#include <unordered_map>

#include "lopp/io.hpp"

namespace lopp {

IsotropicLine attracting_line(const QuadraticSpace& space,
                              const GroupElement& g, const Tolerances& tol) {
  const int d = space.dim();
  if (g.mat.rows() != d || g.mat.cols() != d)
    throw std::invalid_argument("attracting_line: bad shape");
  Eigen::EigenSolver<Eigen::MatrixXd> es(g.mat);
  const auto& values = es.eigenvalues();
  int top = 0;
  for (int i = 1; i < d; ++i)
    if (std::abs(values[i]) > std::abs(values[top])) top = i;
  double second = 0.0;
  for (int i = 0; i < d; ++i) {
    if (i == top) continue;
    second = std::max(second, std::abs(values[i]));
  }
  const double leading = std::abs(values[top]);
  if (!(leading > (1.0 + tol.spectral_gap) * second))
    throw NotRegular("attracting_line: spectral gap " +
                     std::to_string(second > 0 ? leading / second : 0.0) +
                     " below threshold");
  // A strictly dominant modulus of a real matrix is attained by a real
  // eigenvalue; the imaginary part of the reported vector is solver noise.
  const Eigen::VectorXd v = es.eigenvectors().col(top).real();
  return IsotropicLine::from_vector(space, v, tol);
}

namespace {

std::string group_bytes(const SchottkyGroup& group) {
  std::string bytes;
  auto push = [&bytes](double x) {
    char buf[sizeof(double)];
    std::memcpy(buf, &x, sizeof(double));
    bytes.append(buf, sizeof(double));
  };
  push(static_cast<double>(group.n));
  for (const auto& g : group.generators) {
    for (int i = 0; i < g.linear.rows(); ++i)
      for (int j = 0; j < g.linear.cols(); ++j) push(g.linear(i, j));
    for (int i = 0; i < g.translation.size(); ++i) push(g.translation[i]);
  }
  return bytes;
}

std::string hex_u64(std::uint64_t x) {
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i) {
    s[i] = digits[x & 0xf];
    x >>= 4;
  }
  return s;
}

// Spatial hash over canonical representatives, cell width 4 * dedup radius;
// candidate duplicates can only sit in the 3^d cells around the query (either
// sign), which keeps dedup near-linear in the sample size.
class DedupIndex {
 public:
  DedupIndex(int dim, double radius) : dim_(dim), cell_(4.0 * radius) {}

  bool has_near(const std::vector<IsotropicLine>& points,
                const IsotropicLine& candidate, double radius) {
    // Probe around both signs: canonicalization can flip the sign of reps of
    // nearly identical lines when the leading coordinate sits at the
    // sign-rule threshold.
    for (int sign = 0; sign < 2; ++sign) {
      const Eigen::VectorXd probe =
          sign == 0 ? candidate.rep() : Eigen::VectorXd(-candidate.rep());
      if (scan_neighbors(probe, points, candidate, radius)) return true;
    }
    return false;
  }

  void insert(const Eigen::VectorXd& rep, int index) {
    key_.resize(dim_);
    for (int i = 0; i < dim_; ++i)
      key_[i] = static_cast<long long>(std::floor(rep[i] / cell_));
    map_[hash_key()].push_back(index);
  }

 private:
  bool scan_neighbors(const Eigen::VectorXd& probe,
                      const std::vector<IsotropicLine>& points,
                      const IsotropicLine& candidate, double radius) {
    std::vector<long long> base(dim_);
    for (int i = 0; i < dim_; ++i)
      base[i] = static_cast<long long>(std::floor(probe[i] / cell_));
    std::vector<int> offset(dim_, -1);
    while (true) {
      key_.resize(dim_);
      for (int i = 0; i < dim_; ++i) key_[i] = base[i] + offset[i];
      auto it = map_.find(hash_key());
      if (it != map_.end())
        for (int idx : it->second)
          if (chordal_distance(points[idx], candidate) < radius) return true;
      int i = 0;
      for (; i < dim_; ++i) {
        if (++offset[i] <= 1) break;
        offset[i] = -1;
      }
      if (i == dim_) return false;
    }
  }

  std::uint64_t hash_key() const {
    std::uint64_t h = 14695981039346656037ull;
    const char* raw = reinterpret_cast<const char*>(key_.data());
    for (std::size_t i = 0; i < key_.size() * sizeof(long long); ++i) {
      h ^= static_cast<unsigned char>(raw[i]);
      h *= 1099511628211ull;
    }
    return h;
  }

  int dim_;
  double cell_;
  std::vector<long long> key_;
  std::unordered_map<std::uint64_t, std::vector<int>> map_;
};

// Error-free transforms. The fixed-line offset of a deep word is a near-total
// cancellation between translation components of size ~||A_w||, so plain
// double arithmetic caps the attainable line accuracy near eps * ||A_w||;
// carrying a compensation term through the translation fold and the final
// pairing removes that cap.
struct Split {
  double hi = 0.0, lo = 0.0;
};

inline void comp_add(Split& acc, double x) {
  const double s = acc.hi + x;
  const double t = s - acc.hi;
  acc.lo += (acc.hi - (s - t)) + (x - t);
  acc.hi = s;
}

inline void comp_fma(Split& acc, double a, double b) {
  const double p = a * b;
  comp_add(acc, p);
  acc.lo += std::fma(a, b, -p);
}

// Same fold as evaluate(), with the translation kept in compensated form.
// The linear part stays a plain Eigen product so it matches evaluate() bit
// for bit; only the translation needs the extra digits.
struct CompensatedAffine {
  Eigen::MatrixXd linear;
  std::vector<Split> translation;
};

CompensatedAffine evaluate_compensated(const SchottkyGroup& group,
                                       const Word& w) {
  const int n = group.n;
  const int k = static_cast<int>(group.generators.size());
  CompensatedAffine acc{Eigen::MatrixXd::Identity(n, n),
                        std::vector<Split>(n)};
  for (int letter : w.letters) {
    const int i = std::abs(letter);
    if (i < 1 || i > k)
      throw std::invalid_argument("evaluate: letter outside alphabet");
    const AffineIsometry& g = group.generators[i - 1];
    const AffineIsometry step = letter > 0 ? g : affine_inverse(g);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c)
        comp_fma(acc.translation[r], acc.linear(r, c), step.translation[c]);
    acc.linear = acc.linear * step.linear;
  }
  return acc;
}

// Attracting line of the lifted word, computed from the n x n linear part
// instead of the (n+2) x (n+2) ambient lift. The lift adds eigenvalues {1, 1}
// to those of A and fixes exactly one line off the marked hyperplane,
// v = alpha e + w with A w = s w at the dominant eigenvalue s and
// alpha (1 - s) = s B'(b, w) from the first row of the eigenvalue equation.
// Eigensolving the lift directly would put q'(b)/2 ~ ||A_w||^2 entries in
// front of the solver and lose the offset for deep words.
IsotropicLine word_attracting_line(const Frame& frame,
                                   const SchottkyGroup& group, const Word& w,
                                   const Tolerances& tol) {
  const int n = frame.n();
  if (group.n != n)
    throw std::invalid_argument("word_attracting_line: dimension mismatch");
  const CompensatedAffine aff = evaluate_compensated(group, w);
  const double defect =
      (aff.linear.transpose() * frame.gram_prime() * aff.linear -
       frame.gram_prime())
          .cwiseAbs()
          .maxCoeff() /
      (1.0 + aff.linear.squaredNorm());
  if (defect > tol.orthogonality)
    throw std::invalid_argument(
        "word_attracting_line: linear part is not an isometry of q', "
        "defect " +
        std::to_string(defect));
  Eigen::EigenSolver<Eigen::MatrixXd> es(aff.linear);
  const auto& values = es.eigenvalues();
  int top = 0;
  for (int i = 1; i < n; ++i)
    if (std::abs(values[i]) > std::abs(values[top])) top = i;
  // the two unit eigenvalues of the lift put a floor under the runner-up
  double second = 1.0;
  for (int i = 0; i < n; ++i) {
    if (i == top) continue;
    second = std::max(second, std::abs(values[i]));
  }
  const double leading = std::abs(values[top]);
  if (!(leading > (1.0 + tol.spectral_gap) * second))
    throw NotRegular("attracting_line: spectral gap " +
                     std::to_string(leading / second) + " below threshold");
  const double s = values[top].real();
  const Eigen::VectorXd what = es.eigenvectors().col(top).real();
  Split pairing;
  for (int i = 0; i < n; ++i) {
    Split yi;  // (G' w)_i with its own rounding recovered
    for (int c = 0; c < n; ++c) comp_fma(yi, frame.gram_prime()(i, c), what[c]);
    comp_fma(pairing, aff.translation[i].hi, yi.hi);
    pairing.lo +=
        aff.translation[i].hi * yi.lo + aff.translation[i].lo * yi.hi;
  }
  const double alpha = s * (pairing.hi + pairing.lo) / (1.0 - s);
  return IsotropicLine::from_vector(
      frame.space(), alpha * frame.e() + frame.to_ambient(what), tol);
}

}  // namespace

LimitSample limit_sample(const Frame& frame, const SchottkyGroup& group,
                         int depth, const Tolerances& tol) {
  if (depth < 1) throw std::invalid_argument("limit_sample: depth < 1");
  if (group.n != frame.n())
    throw std::invalid_argument("limit_sample: dimension mismatch");
  if (!group.certificate)
    throw std::invalid_argument("limit_sample: group lacks a certificate");
  LimitSample out;
  out.group_id = hex_u64(fnv1a64(group_bytes(group)));
  DedupIndex index(frame.space().dim(), tol.dedup);
  const auto all = words(static_cast<int>(group.generators.size()), depth);
  for (const auto& w : all) {
    if (w.letters.empty() || !is_cyclically_reduced(w)) continue;
    ++out.words_considered;
    try {
      IsotropicLine line = word_attracting_line(frame, group, w, tol);
      if (index.has_near(out.points, line, tol.dedup)) continue;
      index.insert(line.rep(), static_cast<int>(out.points.size()));
      out.points.push_back(std::move(line));
      out.word_length.push_back(w.length());
    } catch (const NotRegular&) {
      ++out.skipped_irregular;
      continue;
    }
  }
  if (out.points.empty())
    throw EmptySample("limit_sample: no regular words produced points");
  return out;
}

ContainmentReport containment_report(const QuadraticSpace& space,
                                     const LimitSample& sample,
                                     const IsotropicLine& l) {
  if (sample.points.empty())
    throw EmptySample("containment_report: empty sample");
  ContainmentReport rep{0.0, std::numeric_limits<double>::infinity(),
                        static_cast<long>(sample.points.size())};
  for (const auto& p : sample.points) {
    rep.max_quadric_margin =
        std::max(rep.max_quadric_margin, quadric_margin(space, p, l));
    rep.min_distance = std::min(rep.min_distance, chordal_distance(p, l));
  }
  return rep;
}

double hausdorff_chordal(const std::vector<IsotropicLine>& a,
                         const std::vector<IsotropicLine>& b) {
  if (a.empty() || b.empty())
    throw EmptySample("hausdorff_chordal: empty point set");
  double h = 0.0;
  for (const auto& p : a) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& q : b) best = std::min(best, chordal_distance(p, q));
    h = std::max(h, best);
  }
  for (const auto& q : b) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& p : a) best = std::min(best, chordal_distance(p, q));
    h = std::max(h, best);
  }
  return h;
}

double scaling_check(const Frame& frame, const SchottkyGroup& group, double t,
                     int depth, const Tolerances& tol) {
  if (depth < 1) throw std::invalid_argument("scaling_check: depth < 1");
  const SchottkyGroup scaled = scale_group(group, t);
  const GroupElement at = transvection(frame, t);
  std::vector<IsotropicLine> lhs, rhs;
  const auto all =
      words(static_cast<int>(group.generators.size()), depth);
  for (const auto& w : all) {
    if (w.letters.empty() || !is_cyclically_reduced(w)) continue;
    try {
      const IsotropicLine p1 = word_attracting_line(frame, group, w, tol);
      const IsotropicLine p2 = word_attracting_line(frame, scaled, w, tol);
      // Same linear part on both sides, so regularity agrees word by word;
      // compare the raw per-word points to keep dedup choices out of the
      // distance.
      lhs.push_back(apply(frame.space(), at, p1, tol));
      rhs.push_back(p2);
    } catch (const NotRegular&) {
      continue;
    }
  }
  return hausdorff_chordal(lhs, rhs);
}

}  // namespace lopp
