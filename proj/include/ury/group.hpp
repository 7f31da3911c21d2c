#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ury/error.hpp"

namespace ury {

class Group;
using GroupPtr = std::shared_ptr<const Group>;

// Normal-form word payload; encoding is kind-specific and canonical, so
// payload equality is element equality.
using Elem = std::vector<long long>;

// Countable groups with solvable word problem, given as finite tables, free
// constructions, or amalgams/HNN extensions over subgroups with computable
// coset decompositions. Elements carry their normal form.
class Group {
 public:
  enum class Kind {
    FiniteTable,
    Integers,
    BoolVectors,  // direct sum of Z/2 over N, elements = finite index sets
    FreeGroup,
    FreeProduct,
    Amalgam,
    Hnn,
  };

  static GroupPtr finite_table(std::vector<std::vector<int>> table,
                               std::vector<std::string> names);
  static GroupPtr trivial();
  static GroupPtr cyclic(int n);  // Z/n, n >= 1
  static GroupPtr integers();
  static GroupPtr bool_vectors();
  static GroupPtr free_group(int rank);
  static GroupPtr free_product(std::vector<GroupPtr> factors);
  // Amalgam of two factors over sigma; sigma embeds via generator images.
  static GroupPtr amalgam(GroupPtr g1, GroupPtr g2, GroupPtr sigma,
                          std::vector<Elem> sigma_into_1, std::vector<Elem> sigma_into_2);
  // HNN extension of h over sigma with t e(s) t^-1 = theta(s).
  static GroupPtr hnn(GroupPtr h, GroupPtr sigma, std::vector<Elem> sigma_into_h,
                      std::vector<Elem> theta_into_h);

  Kind kind() const { return kind_; }
  size_t order() const;  // 0 = infinite
  const std::vector<GroupPtr>& factors() const { return factors_; }
  GroupPtr sigma() const { return sigma_; }
  int rank() const { return rank_; }
  const std::vector<std::vector<int>>& table() const { return table_; }

  Elem id() const;
  bool is_id(const Elem& g) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem inv(const Elem& a) const;
  Elem pow(const Elem& a, long long k) const;

  // Canonical finite generating set (all nontrivial elements for finite
  // tables; not used for BoolVectors, which has its own enumeration).
  std::vector<Elem> generators() const;

  // Canonical enumeration: BFS layers over the generators, deduplicated,
  // deterministic. enumerate(0) is the identity.
  Elem enumerate(size_t i) const;
  std::vector<Elem> ball(int radius) const;

  // Left-invariant word/chain norm |g|; closed form where available, BFS
  // otherwise. d(g,h) = |g^-1 h|.
  long long word_norm(const Elem& g) const;
  // Some element of norm exactly n (witnesses unboundedness/surjectivity).
  Elem norm_witness(long long n) const;
  // Same, but inside factor k of a free product.
  Elem norm_witness_in_factor(int k, long long n) const;

  // Free product / amalgam / HNN structure access used by pi_alpha.
  // Letters of g read left to right; side is the factor index (0/1), or for
  // HNN side -1 marks a stable letter with exponent in `exp`.
  struct Letter {
    int side;
    long long exp = 0;  // for stable letters
    Elem g;             // ambient-group element (single syllable / h-part)
  };
  std::vector<Letter> letters(const Elem& g) const;

  // Number of syllables of the normal form (0 for core/base elements).
  int syllable_length(const Elem& g) const;

  // Embeds an element of factor k (free products, amalgams) as an ambient
  // element; for HNN k=0 is the base group.
  Elem embed_factor(int k, const Elem& g) const;
  // The stable letter t^(eps) of an HNN group.
  Elem stable_letter(int eps) const;
  // Embeds an abstract sigma element through embedding j (0 or 1; for HNN,
  // 0 = sigma side, 1 = theta side) into the ambient group.
  Elem embed_sigma(int j, const Elem& s) const;
  // If g lies in the amalgamated/associated subgroup, returns the abstract
  // sigma element (amalgam: zero-syllable forms; HNN: base elements in
  // e(Sigma)).
  std::optional<Elem> sigma_part(const Elem& g) const;

  // Expresses g as a word in generators() (indices +-(i+1)); BFS for finite
  // tables, closed forms otherwise.
  std::vector<int> express(const Elem& g) const;

  std::string to_string(const Elem& g) const;
  Elem parse(const std::string& s) const;
  std::string describe() const;

  // Word reduction: fold a raw letter sequence (each letter an ambient
  // element) into normal form. Idempotent by construction.
  Elem reduce(const std::vector<Elem>& letters) const;

 private:
  Group() = default;

  // amalgam/HNN internals
  Elem sigma_image(int j, const Elem& s) const;  // evaluate gen-image word
  // canonical left-coset decomposition in factor j: g = rep * e_j(s)
  std::pair<Elem, Elem> coset_decompose(int j, const Elem& g) const;
  // canonical right-coset decomposition in the HNN base: g = e(s) * rep,
  // where e is the sigma (side=0) or theta (side=1) embedding
  std::pair<Elem, Elem> right_coset_decompose(int side, const Elem& g) const;
  // candidate sigma elements for coset decompositions (finite sigma: all;
  // infinite cyclic sigma: powers up to a sound norm bound)
  std::vector<Elem> sigma_candidates(int j, const Elem& g) const;
  bool rank_less(const Elem& a, const Elem& b) const;

  struct AmalgamWord;
  struct HnnWord;
  AmalgamWord am_unpack(const Elem& g) const;
  Elem am_pack(const AmalgamWord& w) const;
  void am_emit(AmalgamWord& w, int factor, const Elem& y) const;
  HnnWord hnn_unpack(const Elem& g) const;
  Elem hnn_pack(const HnnWord& w) const;
  void hnn_pre_h(HnnWord& w, const Elem& x) const;
  void hnn_pre_t(HnnWord& w, int eps) const;

  bool extend_layer() const;
  void ensure_enum(size_t upto) const;

  Kind kind_ = Kind::FiniteTable;
  std::vector<std::vector<int>> table_;
  std::vector<std::string> names_;
  int rank_ = 0;
  std::vector<GroupPtr> factors_;
  GroupPtr sigma_;
  std::vector<Elem> sigma_into_0_, sigma_into_1_;

  mutable std::vector<Elem> enum_cache_;
  mutable std::vector<size_t> layer_ends_;
  mutable std::map<Elem, long long> norm_cache_;
};

// A graph of groups: vertex groups, edges with edge groups and the two
// monomorphisms (as generator images), and a chosen maximal subtree.
struct GraphOfGroups {
  struct Edge {
    int src = 0, dst = 0;
    GroupPtr sigma;
    std::vector<Elem> into_src;  // s_e generator images in the source group
    std::vector<Elem> into_dst;  // r_e generator images in the target group
    bool in_tree = false;
  };
  std::vector<GroupPtr> vertices;
  std::vector<Edge> edges;
};

// Fundamental group of a graph of groups whose edges form a tree plus loops:
// folds the tree by iterated amalgamation, then attaches HNN letters.
// Returns the group together with, for each vertex, the embedding of the
// vertex group (as a function applied to elements).
struct FoldedGraph {
  GroupPtr group;
  // vertex element -> ambient element (empty for vertices outside the
  // folded component)
  std::vector<std::function<Elem(const Elem&)>> vertex_embed;
};
FoldedGraph fundamental_group(const GraphOfGroups& g, const std::vector<int>& drop_edges,
                              int root);

}  // namespace ury
