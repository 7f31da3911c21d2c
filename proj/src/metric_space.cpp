#include "ury/metric_space.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace ury {

int FiniteMetricSpace::index_of(const std::string& label) const {
  for (size_t i = 0; i < points.size(); ++i)
    if (points[i] == label) return static_cast<int>(i);
  return -1;
}

std::vector<MetricViolation> check_metric(const FiniteMetricSpace& X) {
  std::vector<MetricViolation> out;
  size_t n = X.size();
  if (X.dist.size() != n) {
    out.push_back({"distance matrix has wrong number of rows"});
    return out;
  }
  for (size_t i = 0; i < n; ++i)
    if (X.dist[i].size() != n) {
      out.push_back({"distance matrix row " + std::to_string(i) + " has wrong length"});
      return out;
    }
  for (size_t i = 0; i < n; ++i) {
    if (!X.d(i, i).is_zero())
      out.push_back({"d(" + X.points[i] + "," + X.points[i] + ") != 0"});
    for (size_t j = 0; j < n; ++j) {
      if (!X.S.contains(X.d(i, j)))
        out.push_back({"d(" + X.points[i] + "," + X.points[j] + ")=" + X.d(i, j).str() +
                       " not in S"});
      if (i != j && X.d(i, j).is_zero())
        out.push_back({"d(" + X.points[i] + "," + X.points[j] + ")=0 for distinct points"});
      if (j > i && X.d(i, j) != X.d(j, i))
        out.push_back({"asymmetric at (" + X.points[i] + "," + X.points[j] + ")"});
    }
  }
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      for (size_t k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        if (X.d(i, j) > X.d(i, k) + X.d(k, j))
          out.push_back({"triangle violation at (" + X.points[i] + "," + X.points[j] +
                         "," + X.points[k] + ")"});
      }
  return out;
}

bool check_partial_isometry(const PartialIsometry& phi) {
  std::set<int> dom, rng;
  for (auto [x, y] : phi.pairs) {
    if (!dom.insert(x).second) return false;
    if (!rng.insert(y).second) return false;
  }
  for (size_t a = 0; a < phi.pairs.size(); ++a)
    for (size_t b = a + 1; b < phi.pairs.size(); ++b) {
      auto [x1, y1] = phi.pairs[a];
      auto [x2, y2] = phi.pairs[b];
      if (phi.source->d(x1, x2) != phi.target->d(y1, y2)) return false;
    }
  return true;
}

FiniteMetricSpace amalgam(const std::vector<FiniteMetricSpace>& spaces,
                          const std::vector<std::string>& base_labels) {
  if (spaces.empty()) throw Error(Errc::OverlapError, "no factors");
  const DistanceSet& S = spaces.front().S;
  bool bounded = S.bounded();
  if (!bounded && base_labels.empty() && spaces.size() > 1)
    throw Error(Errc::EmptyAmalgamBase, "unbounded amalgam needs a nonempty base");

  std::set<std::string> base(base_labels.begin(), base_labels.end());

  // Every factor must contain the base; outside the base, labels must be unique
  // to one factor (pairwise intersections equal A).
  std::map<std::string, int> owner;
  for (size_t k = 0; k < spaces.size(); ++k) {
    for (const auto& b : base_labels)
      if (spaces[k].index_of(b) < 0)
        throw Error(Errc::OverlapError, "factor " + std::to_string(k) + " misses base point " + b);
    for (const auto& p : spaces[k].points) {
      if (base.count(p)) continue;
      auto [it, fresh] = owner.emplace(p, static_cast<int>(k));
      if (!fresh)
        throw Error(Errc::OverlapError, "point " + p + " shared outside the base");
    }
  }
  // Metrics must agree on the base.
  for (size_t k = 1; k < spaces.size(); ++k)
    for (const auto& a : base_labels)
      for (const auto& b : base_labels) {
        int i0 = spaces[0].index_of(a), j0 = spaces[0].index_of(b);
        int ik = spaces[k].index_of(a), jk = spaces[k].index_of(b);
        if (spaces[0].d(i0, j0) != spaces[k].d(ik, jk))
          throw Error(Errc::MetricMismatchError,
                      "base distance mismatch at (" + a + "," + b + ")");
      }

  FiniteMetricSpace out;
  out.S = S;
  out.points = base_labels;
  std::vector<int> factor_of;  // -1 for base points
  factor_of.assign(base_labels.size(), -1);
  for (size_t k = 0; k < spaces.size(); ++k)
    for (const auto& p : spaces[k].points)
      if (!base.count(p)) {
        out.points.push_back(p);
        factor_of.push_back(static_cast<int>(k));
      }

  auto factor_dist = [&](int k, const std::string& a, const std::string& b) {
    return spaces[k].d(spaces[k].index_of(a), spaces[k].index_of(b));
  };
  auto in_factor = [&](int k, const std::string& p) { return spaces[k].index_of(p) >= 0; };

  size_t n = out.points.size();
  out.dist.assign(n, std::vector<Rational>(n, Rational(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const auto& p = out.points[i];
      const auto& q = out.points[j];
      int fi = factor_of[i], fj = factor_of[j];
      int common = -1;
      if (fi == -1 && fj == -1) common = 0;
      else if (fi == -1) common = fj;
      else if (fj == -1) common = fi;
      else if (fi == fj) common = fi;
      if (common >= 0) {
        out.dist[i][j] = factor_dist(common, p, q);
        continue;
      }
      // cross-factor: min over the base of path sums, capped at M
      bool found = false;
      Rational best(0);
      for (const auto& a : base_labels) {
        Rational v = factor_dist(fi, p, a) + factor_dist(fj, a, q);
        if (!found || v < best) { best = v; found = true; }
      }
      if (!found) {
        out.dist[i][j] = S.cap();  // empty base, bounded
      } else {
        out.dist[i][j] = bounded ? min(best, S.cap()) : best;
      }
    }
  (void)in_factor;
  return out;
}

}  // namespace ury
