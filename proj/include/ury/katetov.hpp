#pragma once

#include <vector>

#include "ury/metric_space.hpp"

namespace ury {

// A finitely supported one-point extension of a finite host space, stored by
// its support values. The induced total function is the Katetov extension
//   f(x) = min(M, min_{y in F}(f(y) + d(y,x)))
// (no cap term in the unbounded case, where the support must be nonempty).
// An empty support is legal for bounded hosts only and denotes the constant-M
// function.
struct KatetovFn {
  const FiniteMetricSpace* host = nullptr;
  std::vector<std::pair<int, Rational>> support;  // (point index, value)

  Rational eval(int x) const;
};

// Both Katetov inequalities, checked for a total function on X.
bool is_katetov(const FiniteMetricSpace& X, const std::vector<Rational>& f);

// Katetov extension of support values given on F (throws KatetovViolation if
// the values are not a one-point extension of F).
KatetovFn katetov_extend(const FiniteMetricSpace& X,
                         const std::vector<std::pair<int, Rational>>& support);

// A support of f no point of which can be dropped under the deterministic
// greedy order: essential points are kept, the rest are tried for removal in
// host enumeration order.
std::vector<int> minimal_support(const KatetovFn& f);

// Equality as one-point extensions: agreement on the union of supports.
bool katetov_equal(const KatetovFn& f, const KatetovFn& g);

// Amalgam metric on E_S(X): 0 for equal extensions, else
// min(M, min over the union of supports of f(x)+g(x)).
Rational ext_distance(const KatetovFn& f, const KatetovFn& g);

// The trivial extension d(x, .).
KatetovFn trivial_extension(const FiniteMetricSpace& X, int x);

}  // namespace ury
