#include "ury/distance_set.hpp"

#include <algorithm>
#include <numeric>

namespace ury {

DistanceSet DistanceSet::explicit_bounded(std::vector<Rational> values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  DistanceSet s;
  s.kind_ = Kind::ExplicitBounded;
  s.values_ = std::move(values);
  s.cap_ = s.values_.empty() ? Rational(0) : s.values_.back();
  return s;
}

DistanceSet DistanceSet::rational_bounded(Rational cap) {
  DistanceSet s;
  s.kind_ = Kind::RationalBounded;
  s.cap_ = cap;
  return s;
}

DistanceSet DistanceSet::grid_unbounded(Rational step) {
  DistanceSet s;
  s.kind_ = Kind::GridUnbounded;
  s.step_ = step;
  return s;
}

DistanceSet DistanceSet::rational_unbounded() {
  DistanceSet s;
  s.kind_ = Kind::RationalUnbounded;
  return s;
}

bool DistanceSet::contains(const Rational& s) const {
  if (!s.is_nonneg()) return false;
  switch (kind_) {
    case Kind::ExplicitBounded:
      return std::binary_search(values_.begin(), values_.end(), s);
    case Kind::RationalBounded:
      return s <= cap_;
    case Kind::GridUnbounded:
      return (s / step_).is_integer();
    case Kind::RationalUnbounded:
      return true;
  }
  return false;
}

Rational DistanceSet::add(const Rational& s, const Rational& t) const {
  if (!contains(s)) throw Error(Errc::MembershipError, s.str() + " not in S");
  if (!contains(t)) throw Error(Errc::MembershipError, t.str() + " not in S");
  Rational sum = s + t;
  if (bounded()) return min(sum, cap_);
  return sum;
}

std::vector<Rational> DistanceSet::value_menu(int max_den, const Rational& bound) const {
  std::vector<Rational> out;
  switch (kind_) {
    case Kind::ExplicitBounded:
      for (const auto& v : values_)
        if (!v.is_zero()) out.push_back(v);
      break;
    case Kind::RationalBounded:
    case Kind::RationalUnbounded: {
      Rational top = bounded() ? cap_ : bound;
      for (int den = 1; den <= max_den; ++den)
        for (long long num = 1; Rational(num, den) <= top; ++num) {
          Rational v(num, den);
          if (v.den() == den) out.push_back(v);  // lowest terms only
        }
      std::sort(out.begin(), out.end(), [](const Rational& a, const Rational& b) {
        if (a.den() != b.den()) return a.den() < b.den();
        return a.num() < b.num();
      });
      break;
    }
    case Kind::GridUnbounded: {
      for (Rational v = step_; v <= bound; v += step_) out.push_back(v);
      break;
    }
  }
  return out;
}

std::string DistanceSet::kind_name() const {
  switch (kind_) {
    case Kind::ExplicitBounded: return "explicit_bounded";
    case Kind::RationalBounded: return "rational_bounded";
    case Kind::GridUnbounded: return "grid_unbounded";
    case Kind::RationalUnbounded: return "rational_unbounded";
  }
  return "?";
}

std::vector<std::string> validate(const DistanceSet& S) {
  std::vector<std::string> issues;
  switch (S.kind()) {
    case DistanceSet::Kind::ExplicitBounded: {
      const auto& v = S.values();
      if (v.empty() || !v.front().is_zero()) issues.push_back("0 must belong to S");
      if (v.size() < 2) issues.push_back("S must have at least two elements");
      for (const auto& x : v)
        if (!x.is_nonneg()) issues.push_back("negative value " + x.str());
      if (!v.empty() && v.back() != S.cap())
        issues.push_back("max element must equal the cap");
      // closure: min(s+t, M) in S, checked exhaustively
      for (const auto& s : v)
        for (const auto& t : v) {
          Rational u = min(s + t, S.cap());
          if (!S.contains(u))
            issues.push_back("closure fails: min(" + s.str() + "+" + t.str() + ",M)=" +
                             u.str() + " not in S");
        }
      break;
    }
    case DistanceSet::Kind::RationalBounded:
      if (!(Rational(0) < S.cap())) issues.push_back("cap must be positive");
      break;
    case DistanceSet::Kind::GridUnbounded:
      if (!(Rational(0) < S.step())) issues.push_back("step must be positive");
      break;
    case DistanceSet::Kind::RationalUnbounded:
      break;
  }
  return issues;
}

}  // namespace ury
