#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ury/rational.hpp"

namespace ury {

// A value set S for metrics: 0 in S, and S is closed under truncated
// addition min(s+t, M) in the bounded case, under plain addition otherwise.
// Immutable after construction.
class DistanceSet {
 public:
  enum class Kind { ExplicitBounded, RationalBounded, GridUnbounded, RationalUnbounded };

  DistanceSet() = default;  // Q cap [0,1]

  static DistanceSet explicit_bounded(std::vector<Rational> values);
  static DistanceSet rational_bounded(Rational cap);
  static DistanceSet grid_unbounded(Rational step);
  static DistanceSet rational_unbounded();

  Kind kind() const { return kind_; }
  bool bounded() const {
    return kind_ == Kind::ExplicitBounded || kind_ == Kind::RationalBounded;
  }
  // Cap M; only meaningful for bounded kinds.
  const Rational& cap() const { return cap_; }
  const Rational& step() const { return step_; }
  const std::vector<Rational>& values() const { return values_; }

  bool contains(const Rational& s) const;
  // min(s+t, M) for bounded S, s+t for unbounded S. Throws MembershipError
  // when an argument is outside S.
  Rational add(const Rational& s, const Rational& t) const;

  // Enumeration of nonzero values, used to generate window points: explicit
  // sets in sorted order, rational kinds by (denominator, numerator) up to
  // max_den (and up to cap `bound` for unbounded kinds).
  std::vector<Rational> value_menu(int max_den, const Rational& bound) const;

  std::string kind_name() const;

 private:
  Kind kind_ = Kind::RationalBounded;
  Rational cap_ = Rational(1);   // M, bounded kinds
  Rational step_ = Rational(0);  // grid step, GridUnbounded
  std::vector<Rational> values_; // ExplicitBounded, sorted
};

// Lists every violated axiom; empty iff S is a valid distance set. For
// ExplicitBounded the closure is checked exhaustively.
std::vector<std::string> validate(const DistanceSet& S);

}  // namespace ury
