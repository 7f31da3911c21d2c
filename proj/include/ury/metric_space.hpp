#pragma once

#include <string>
#include <vector>

#include "ury/distance_set.hpp"

namespace ury {

// A finite S-metric space with labeled points and an explicit symmetric
// distance matrix. Immutable in spirit: build once, then query.
struct FiniteMetricSpace {
  DistanceSet S;
  std::vector<std::string> points;
  std::vector<std::vector<Rational>> dist;

  size_t size() const { return points.size(); }
  const Rational& d(size_t i, size_t j) const { return dist[i][j]; }
  int index_of(const std::string& label) const;
};

struct MetricViolation {
  std::string what;  // human-readable description of the failed axiom instance
};

// Lists every violated entry/pair/triple; empty iff (X,d) is an S-metric space.
std::vector<MetricViolation> check_metric(const FiniteMetricSpace& X);

// A finite partial isometry given by index pairs (source point, target point).
struct PartialIsometry {
  const FiniteMetricSpace* source = nullptr;
  const FiniteMetricSpace* target = nullptr;
  std::vector<std::pair<int, int>> pairs;
};

// True iff the pair list is injective and distance-preserving.
bool check_partial_isometry(const PartialIsometry& phi);

// Metric amalgam of the given spaces over the common subspace consisting of
// the points named in `base_labels` (which must appear, with matching
// distances, in every factor; factors may not share any other label).
// Cross-factor distances are min(M, min_a(d_i(x,a)+d_j(a,y))); with an empty
// base all cross distances are M (bounded case only).
FiniteMetricSpace amalgam(const std::vector<FiniteMetricSpace>& spaces,
                          const std::vector<std::string>& base_labels);

}  // namespace ury
