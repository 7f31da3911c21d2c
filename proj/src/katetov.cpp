#include "ury/katetov.hpp"

#include <algorithm>
#include <set>

namespace ury {

Rational KatetovFn::eval(int x) const {
  const DistanceSet& S = host->S;
  for (const auto& [y, v] : support)
    if (y == x) return v;
  bool found = false;
  Rational best(0);
  for (const auto& [y, v] : support) {
    Rational cand = v + host->d(y, x);
    if (!found || cand < best) { best = cand; found = true; }
  }
  if (!found) {
    if (!S.bounded())
      throw Error(Errc::KatetovViolation, "empty support over an unbounded host");
    return S.cap();
  }
  return S.bounded() ? min(best, S.cap()) : best;
}

bool is_katetov(const FiniteMetricSpace& X, const std::vector<Rational>& f) {
  size_t n = X.size();
  if (f.size() != n) return false;
  for (size_t i = 0; i < n; ++i) {
    if (!X.S.contains(f[i])) return false;
    for (size_t j = i + 1; j < n; ++j) {
      if (abs(f[i] - f[j]) > X.d(i, j)) return false;
      if (X.d(i, j) > f[i] + f[j]) return false;
    }
  }
  return true;
}

KatetovFn katetov_extend(const FiniteMetricSpace& X,
                         const std::vector<std::pair<int, Rational>>& support) {
  for (size_t a = 0; a < support.size(); ++a) {
    auto [x1, v1] = support[a];
    if (!X.S.contains(v1))
      throw Error(Errc::KatetovViolation, "support value " + v1.str() + " not in S");
    for (size_t b = a + 1; b < support.size(); ++b) {
      auto [x2, v2] = support[b];
      if (x1 == x2)
        throw Error(Errc::KatetovViolation, "duplicate support point");
      if (abs(v1 - v2) > X.d(x1, x2) || X.d(x1, x2) > v1 + v2)
        throw Error(Errc::KatetovViolation,
                    "Katetov condition fails at (" + X.points[x1] + "," + X.points[x2] + ")");
    }
  }
  if (support.empty() && !X.S.bounded())
    throw Error(Errc::KatetovViolation, "empty support over an unbounded host");
  KatetovFn f;
  f.host = &X;
  f.support = support;
  std::sort(f.support.begin(), f.support.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return f;
}

std::vector<int> minimal_support(const KatetovFn& f) {
  const FiniteMetricSpace& X = *f.host;
  const DistanceSet& S = X.S;
  std::vector<std::pair<int, Rational>> cur = f.support;
  auto ext_at = [&](const std::vector<std::pair<int, Rational>>& supp, int x) {
    KatetovFn g{f.host, supp};
    return g.eval(x);
  };
  // essential points: value strictly below what the rest of the support induces
  std::set<int> essential;
  for (const auto& [x, v] : cur) {
    std::vector<std::pair<int, Rational>> rest;
    for (const auto& p : cur)
      if (p.first != x) rest.push_back(p);
    if (rest.empty() && !S.bounded()) { essential.insert(x); continue; }
    if (v < ext_at(rest, x)) essential.insert(x);
  }
  // greedy removal in host enumeration order
  std::vector<int> order;
  for (const auto& [x, v] : cur)
    if (!essential.count(x)) order.push_back(x);
  std::sort(order.begin(), order.end());
  std::vector<std::pair<int, Rational>> kept = cur;
  for (int x : order) {
    std::vector<std::pair<int, Rational>> trial;
    for (const auto& p : kept)
      if (p.first != x) trial.push_back(p);
    if (trial.empty() && !S.bounded()) continue;
    // removal is sound iff the induced extension still matches f on all
    // original support points
    bool ok = true;
    for (const auto& [y, v] : f.support)
      if (ext_at(trial, y) != v) { ok = false; break; }
    if (ok) kept = trial;
  }
  std::vector<int> out;
  for (const auto& [x, v] : kept) out.push_back(x);
  std::sort(out.begin(), out.end());
  return out;
}

bool katetov_equal(const KatetovFn& f, const KatetovFn& g) {
  std::set<int> pts;
  for (const auto& [x, v] : f.support) pts.insert(x);
  for (const auto& [x, v] : g.support) pts.insert(x);
  for (int x : pts)
    if (f.eval(x) != g.eval(x)) return false;
  return true;
}

Rational ext_distance(const KatetovFn& f, const KatetovFn& g) {
  if (katetov_equal(f, g)) return Rational(0);
  const DistanceSet& S = f.host->S;
  std::set<int> pts;
  for (const auto& [x, v] : f.support) pts.insert(x);
  for (const auto& [x, v] : g.support) pts.insert(x);
  bool found = false;
  Rational best(0);
  for (int x : pts) {
    Rational cand = f.eval(x) + g.eval(x);
    if (!found || cand < best) { best = cand; found = true; }
  }
  if (!found) return S.cap();  // both constant-M
  return S.bounded() ? min(best, S.cap()) : best;
}

KatetovFn trivial_extension(const FiniteMetricSpace& X, int x) {
  KatetovFn f;
  f.host = &X;
  f.support = {{x, Rational(0)}};
  return f;
}

}  // namespace ury
