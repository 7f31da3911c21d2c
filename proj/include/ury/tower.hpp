#pragma once

#include <cstdint>
#include <map>
#include <unordered_map>
#include <vector>

#include "ury/group.hpp"
#include "ury/katetov.hpp"
#include "ury/metric_space.hpp"

namespace ury {

using PointId = int;
using Support = std::vector<std::pair<PointId, Rational>>;

// Interface shared by bounded towers and the unbounded (reparametrized)
// tower; isometry agents work against it.
class IsoSpace {
 public:
  virtual ~IsoSpace() = default;
  virtual Rational distance(PointId p, PointId q) = 0;
  // Realizes a finitely supported Katetov function as a point with exactly
  // the prescribed distances. min_level asks for placement at or above that
  // level (distinct levels give distinct realizations of the same function
  // profile in the unbounded case; in the bounded case raising the level is
  // also how callers obtain fresh points).
  virtual PointId realize(const Support& f, int min_level) = 0;
  PointId realize(const Support& f) { return realize(f, 0); }
  virtual bool canonical_eq(PointId p, PointId q) { return distance(p, q).is_zero(); }
  virtual PointId enum_point(size_t i) = 0;
  // Equivariant spaces only.
  virtual PointId act(const Elem& g, PointId p);
  virtual GroupPtr group() const { return nullptr; }
  virtual const DistanceSet& value_set() const = 0;
};

// A point of a Katetov tower: a seed point, or a finitely supported
// one-point extension of lower levels (optionally tagged with a group
// parameter in equivariant towers).
struct PointTerm {
  int level = 0;
  long long base = 0;  // seed index (plain) or interned group element (equivariant)
  int copy = 0;        // seed copy index (equivariant seeds may be several copies)
  Support support;     // Ext terms: sorted by point id, values in (0, M)
  int param = -1;      // interned group element, -1 in plain towers
  bool is_base() const { return level == 0; }
};

// Bounded Katetov tower X_{n+1} = E_S(X_n), plain over a finite seed space
// or equivariant (X_{n+1} = E_S(X_n) x_{X_n} Gamma) over a group with the
// discrete seed metric at value M. Points are hash-consed terms; pairwise
// distances are memoized. Single-writer: grow from one thread, snapshots may
// be read concurrently.
class Tower : public IsoSpace {
 public:
  Tower(DistanceSet S, FiniteMetricSpace seed);
  Tower(DistanceSet S, GroupPtr G, int copies = 1);

  const DistanceSet& value_set() const override { return S_; }
  GroupPtr group() const override { return group_; }

  PointId seed_point(int index);                    // plain towers
  PointId base_point(const Elem& g, int copy = 0);  // equivariant towers

  Rational distance(PointId p, PointId q) override;
  PointId realize(const Support& f, int min_level) override;
  using IsoSpace::realize;
  PointId act(const Elem& g, PointId p) override;

  // Canonical enumeration: plain towers list seeds then realized points in
  // creation order; equivariant towers list base points in group order.
  PointId enum_point(size_t i) override;

  const PointTerm& term(PointId p) const { return terms_[p]; }
  size_t size() const { return terms_.size(); }
  const std::vector<PointId>& at_level(int level) const;

  const Elem& interned_elem(long long i) const { return elems_[i]; }
  long long intern_elem(const Elem& g);

  std::string describe_point(PointId p) const;

 private:
  PointId intern(PointTerm t);
  Rational eval_support(const Support& f, PointId x);
  bool same_function(PointId p, PointId q);
  Support reduce_support(const Support& f);

  DistanceSet S_;
  FiniteMetricSpace seed_;
  GroupPtr group_;
  int copies_ = 1;

  std::vector<PointTerm> terms_;
  std::map<std::tuple<int, long long, int, Support, int>, PointId> term_index_;
  std::vector<std::vector<PointId>> by_level_;
  std::unordered_map<uint64_t, Rational> dist_memo_;

  std::vector<Elem> elems_;
  std::map<Elem, long long> elem_index_;
};

// Deterministic window generation for plain towers: realizes Katetov
// functions in rounds (growing value menus, supports of size <= 2 over the
// frozen window prefix) until n points exist. Returns the window in
// enumeration order.
std::vector<PointId> build_window(Tower& T, size_t n, int max_den);

}  // namespace ury
