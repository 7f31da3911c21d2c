#include "ury/group.hpp"

#include <algorithm>
#include <set>

namespace ury {

namespace {

// flat payload helpers for composite words
void append_block(Elem& out, long long tag, const Elem& payload) {
  out.push_back(tag);
  out.push_back(static_cast<long long>(payload.size()));
  out.insert(out.end(), payload.begin(), payload.end());
}

}  // namespace

struct Group::AmalgamWord {
  std::vector<std::pair<int, Elem>> syl;  // alternating canonical coset reps
  Elem sigma;                             // abstract sigma element, trailing
};

struct Group::HnnWord {
  std::vector<Elem> h;    // h[0] t^eps[0] h[1] ... t^eps[n-1] h[n]
  std::vector<int> eps;
};

// ---------------------------------------------------------------- factories

GroupPtr Group::finite_table(std::vector<std::vector<int>> table,
                             std::vector<std::string> names) {
  auto g = std::shared_ptr<Group>(new Group());
  g->kind_ = Kind::FiniteTable;
  size_t n = table.size();
  if (n == 0) throw Error(Errc::SchemaError, "empty table");
  for (auto& row : table)
    if (row.size() != n) throw Error(Errc::SchemaError, "table not square");
  for (size_t j = 0; j < n; ++j)
    if (table[0][j] != static_cast<int>(j) || table[j][0] != static_cast<int>(j))
      throw Error(Errc::SchemaError, "index 0 must be the identity");
  for (size_t i = 0; i < n; ++i) {
    std::set<int> row(table[i].begin(), table[i].end());
    if (row.size() != n) throw Error(Errc::SchemaError, "row is not a permutation");
  }
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t k = 0; k < n; ++k)
        if (table[table[i][j]][k] != table[i][table[j][k]])
          throw Error(Errc::SchemaError, "table not associative");
  if (names.empty())
    for (size_t i = 0; i < n; ++i) names.push_back("g" + std::to_string(i));
  g->table_ = std::move(table);
  g->names_ = std::move(names);
  return g;
}

GroupPtr Group::trivial() { return cyclic(1); }

GroupPtr Group::cyclic(int n) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) {
    names.push_back(std::to_string(i));
    for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  }
  return finite_table(std::move(t), std::move(names));
}

GroupPtr Group::integers() {
  auto g = std::shared_ptr<Group>(new Group());
  g->kind_ = Kind::Integers;
  return g;
}

GroupPtr Group::bool_vectors() {
  auto g = std::shared_ptr<Group>(new Group());
  g->kind_ = Kind::BoolVectors;
  return g;
}

GroupPtr Group::free_group(int rank) {
  auto g = std::shared_ptr<Group>(new Group());
  g->kind_ = Kind::FreeGroup;
  g->rank_ = rank;
  return g;
}

GroupPtr Group::free_product(std::vector<GroupPtr> factors) {
  auto g = std::shared_ptr<Group>(new Group());
  g->kind_ = Kind::FreeProduct;
  g->factors_ = std::move(factors);
  return g;
}

namespace {
// Accepts generator images listed either for the full generator list of
// sigma or just for its "positive half" when generators come in inverse
// pairs (Integers, FreeGroup).
std::vector<Elem> complete_images(const GroupPtr& sigma, std::vector<Elem> images,
                                  const GroupPtr& host) {
  size_t want = sigma->generators().size();
  if (images.size() == want) return images;
  if (images.size() * 2 == want) {
    std::vector<Elem> full;
    for (const auto& im : images) {
      full.push_back(im);
      full.push_back(host->inv(im));
    }
    return full;
  }
  throw Error(Errc::SchemaError, "wrong number of embedding images");
}
}  // namespace

GroupPtr Group::amalgam(GroupPtr g1, GroupPtr g2, GroupPtr sigma,
                        std::vector<Elem> sigma_into_1, std::vector<Elem> sigma_into_2) {
  auto g = std::shared_ptr<Group>(new Group());
  g->kind_ = Kind::Amalgam;
  g->factors_ = {g1, g2};
  g->sigma_ = sigma;
  g->sigma_into_0_ = complete_images(sigma, std::move(sigma_into_1), g1);
  g->sigma_into_1_ = complete_images(sigma, std::move(sigma_into_2), g2);
  return g;
}

GroupPtr Group::hnn(GroupPtr h, GroupPtr sigma, std::vector<Elem> sigma_into_h,
                    std::vector<Elem> theta_into_h) {
  auto g = std::shared_ptr<Group>(new Group());
  g->kind_ = Kind::Hnn;
  g->factors_ = {h};
  g->sigma_ = sigma;
  g->sigma_into_0_ = complete_images(sigma, std::move(sigma_into_h), h);
  g->sigma_into_1_ = complete_images(sigma, std::move(theta_into_h), h);
  return g;
}

size_t Group::order() const {
  switch (kind_) {
    case Kind::FiniteTable: return table_.size();
    default: return 0;
  }
}

// ------------------------------------------------------------- basic algebra

Elem Group::id() const {
  switch (kind_) {
    case Kind::FiniteTable: return {0};
    case Kind::Integers: return {0};
    case Kind::BoolVectors: return {};
    case Kind::FreeGroup: return {};
    case Kind::FreeProduct: return {};
    case Kind::Amalgam: {
      AmalgamWord w;
      w.sigma = sigma_->id();
      return am_pack(w);
    }
    case Kind::Hnn: {
      HnnWord w;
      w.h = {factors_[0]->id()};
      return hnn_pack(w);
    }
  }
  return {};
}

bool Group::is_id(const Elem& g) const { return g == id(); }

Elem Group::mul(const Elem& a, const Elem& b) const {
  switch (kind_) {
    case Kind::FiniteTable:
      return {table_[a[0]][b[0]]};
    case Kind::Integers:
      return {a[0] + b[0]};
    case Kind::BoolVectors: {
      Elem out;
      std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                    std::back_inserter(out));
      return out;
    }
    case Kind::FreeGroup: {
      Elem out = a;
      for (long long letter : b) {
        if (!out.empty() && out.back() == -letter) out.pop_back();
        else out.push_back(letter);
      }
      return out;
    }
    case Kind::FreeProduct: {
      // unpack syllables of both, merge at the junction
      auto unpack = [&](const Elem& e) {
        std::vector<std::pair<int, Elem>> syl;
        size_t i = 0;
        while (i < e.size()) {
          int f = static_cast<int>(e[i]);
          size_t len = static_cast<size_t>(e[i + 1]);
          syl.emplace_back(f, Elem(e.begin() + i + 2, e.begin() + i + 2 + len));
          i += 2 + len;
        }
        return syl;
      };
      auto syl = unpack(a);
      for (auto& [f, child] : unpack(b)) {
        if (!syl.empty() && syl.back().first == f) {
          Elem prod = factors_[f]->mul(syl.back().second, child);
          syl.pop_back();
          if (!factors_[f]->is_id(prod)) syl.emplace_back(f, prod);
        } else {
          syl.emplace_back(f, child);
        }
      }
      Elem out;
      for (auto& [f, child] : syl) append_block(out, f, child);
      return out;
    }
    case Kind::Amalgam: {
      AmalgamWord w = am_unpack(a);
      AmalgamWord wb = am_unpack(b);
      for (auto& [f, y] : wb.syl) am_emit(w, f, y);
      w.sigma = sigma_->mul(w.sigma, wb.sigma);
      return am_pack(w);
    }
    case Kind::Hnn: {
      HnnWord w = hnn_unpack(b);
      HnnWord wa = hnn_unpack(a);
      size_t n = wa.eps.size();
      hnn_pre_h(w, wa.h[n]);
      for (size_t i = n; i-- > 0;) {
        hnn_pre_t(w, wa.eps[i]);
        hnn_pre_h(w, wa.h[i]);
      }
      return hnn_pack(w);
    }
  }
  return {};
}

Elem Group::inv(const Elem& a) const {
  switch (kind_) {
    case Kind::FiniteTable: {
      for (size_t j = 0; j < table_.size(); ++j)
        if (table_[a[0]][j] == 0) return {static_cast<long long>(j)};
      throw Error(Errc::SchemaError, "no inverse in table");
    }
    case Kind::Integers:
      return {-a[0]};
    case Kind::BoolVectors:
      return a;
    case Kind::FreeGroup: {
      Elem out;
      for (auto it = a.rbegin(); it != a.rend(); ++it) out.push_back(-*it);
      return out;
    }
    case Kind::FreeProduct: {
      std::vector<std::pair<int, Elem>> syl;
      size_t i = 0;
      while (i < a.size()) {
        int f = static_cast<int>(a[i]);
        size_t len = static_cast<size_t>(a[i + 1]);
        syl.emplace_back(f, Elem(a.begin() + i + 2, a.begin() + i + 2 + len));
        i += 2 + len;
      }
      Elem out;
      for (auto it = syl.rbegin(); it != syl.rend(); ++it)
        append_block(out, it->first, factors_[it->first]->inv(it->second));
      return out;
    }
    case Kind::Amalgam: {
      AmalgamWord a_w = am_unpack(a);
      AmalgamWord w;
      w.sigma = sigma_->inv(a_w.sigma);
      for (auto it = a_w.syl.rbegin(); it != a_w.syl.rend(); ++it)
        am_emit(w, it->first, factors_[it->first]->inv(it->second));
      return am_pack(w);
    }
    case Kind::Hnn: {
      HnnWord a_w = hnn_unpack(a);
      HnnWord w;
      w.h = {factors_[0]->inv(a_w.h[0])};
      for (size_t i = 0; i < a_w.eps.size(); ++i) {
        hnn_pre_t(w, -a_w.eps[i]);
        hnn_pre_h(w, factors_[0]->inv(a_w.h[i + 1]));
      }
      return hnn_pack(w);
    }
  }
  return {};
}

Elem Group::pow(const Elem& a, long long k) const {
  if (k < 0) return pow(inv(a), -k);
  Elem acc = id();
  Elem base = a;
  while (k > 0) {
    if (k & 1) acc = mul(acc, base);
    base = mul(base, base);
    k >>= 1;
  }
  return acc;
}

// ------------------------------------------------------- amalgam normal form

Group::AmalgamWord Group::am_unpack(const Elem& g) const {
  AmalgamWord w;
  if (g.empty()) { w.sigma = sigma_->id(); return w; }
  size_t m = static_cast<size_t>(g[0]);
  size_t i = 1;
  for (size_t s = 0; s < m; ++s) {
    int f = static_cast<int>(g[i]);
    size_t len = static_cast<size_t>(g[i + 1]);
    w.syl.emplace_back(f, Elem(g.begin() + i + 2, g.begin() + i + 2 + len));
    i += 2 + len;
  }
  w.sigma = Elem(g.begin() + i, g.end());
  return w;
}

Elem Group::am_pack(const AmalgamWord& w) const {
  Elem out;
  out.push_back(static_cast<long long>(w.syl.size()));
  for (const auto& [f, y] : w.syl) append_block(out, f, y);
  out.insert(out.end(), w.sigma.begin(), w.sigma.end());
  return out;
}

// Appends raw factor letter y (in factor f) to the normalized word w;
// restores the alternating canonical-coset-representative form.
void Group::am_emit(AmalgamWord& w, int f, const Elem& y) const {
  const GroupPtr& G = factors_[f];
  Elem z = G->mul(sigma_image(f, w.sigma), y);
  auto [rep, s] = coset_decompose(f, z);
  if (G->is_id(rep)) { w.sigma = s; return; }
  if (!w.syl.empty() && w.syl.back().first == f) {
    Elem merged = G->mul(w.syl.back().second, rep);
    w.syl.pop_back();
    auto [rep2, s2] = coset_decompose(f, merged);
    Elem combined = sigma_->mul(s2, s);
    if (G->is_id(rep2)) { w.sigma = combined; return; }
    w.syl.emplace_back(f, rep2);
    w.sigma = combined;
    return;
  }
  w.syl.emplace_back(f, rep);
  w.sigma = s;
}

// ----------------------------------------------------------- HNN normal form

Group::HnnWord Group::hnn_unpack(const Elem& g) const {
  HnnWord w;
  size_t n = static_cast<size_t>(g[0]);
  size_t i = 1;
  for (size_t k = 0; k <= n; ++k) {
    size_t len = static_cast<size_t>(g[i]);
    w.h.emplace_back(g.begin() + i + 1, g.begin() + i + 1 + len);
    i += 1 + len;
    if (k < n) {
      w.eps.push_back(static_cast<int>(g[i]));
      ++i;
    }
  }
  return w;
}

Elem Group::hnn_pack(const HnnWord& w) const {
  Elem out;
  out.push_back(static_cast<long long>(w.eps.size()));
  for (size_t k = 0; k < w.h.size(); ++k) {
    out.push_back(static_cast<long long>(w.h[k].size()));
    out.insert(out.end(), w.h[k].begin(), w.h[k].end());
    if (k < w.eps.size()) out.push_back(w.eps[k]);
  }
  return out;
}

void Group::hnn_pre_h(HnnWord& w, const Elem& x) const {
  w.h[0] = factors_[0]->mul(x, w.h[0]);
}

// Premultiplies by t^eps, using t e(s) = theta(s) t to push sigma parts left
// and collapsing Britton pinches t^eps e(s) t^-eps.
void Group::hnn_pre_t(HnnWord& w, int eps) const {
  int side = eps == 1 ? 0 : 1;
  auto [s, rep] = right_coset_decompose(side, w.h[0]);
  int other = eps == 1 ? 1 : 0;
  if (!w.eps.empty() && factors_[0]->is_id(rep) && w.eps[0] == -eps) {
    w.h.erase(w.h.begin());
    w.eps.erase(w.eps.begin());
    hnn_pre_h(w, sigma_image(other, s));
    return;
  }
  w.h[0] = rep;
  w.eps.insert(w.eps.begin(), eps);
  w.h.insert(w.h.begin(), sigma_image(other, s));
}

// ------------------------------------------------------ coset decompositions

Elem Group::sigma_image(int j, const Elem& s) const {
  const auto& images = j == 0 ? sigma_into_0_ : sigma_into_1_;
  const GroupPtr& host = kind_ == Kind::Hnn ? factors_[0] : factors_[j];
  Elem out = host->id();
  for (int letter : sigma_->express(s)) {
    out = host->mul(out, images[letter - 1]);
  }
  return out;
}

std::vector<Elem> Group::sigma_candidates(int j, const Elem& g) const {
  const GroupPtr& host = kind_ == Kind::Hnn ? factors_[0] : factors_[j];
  std::vector<Elem> out;
  if (sigma_->order() > 0) {
    for (size_t i = 0; i < sigma_->order(); ++i) out.push_back(sigma_->enumerate(i));
    return out;
  }
  if (sigma_->kind() == Kind::Integers) {
    // powers z^k; |g e(z^-k)| >= |e(z^k)| - |g|, so once |e(z^k)| clears
    // 2|g| no candidate can beat the k=0 one
    out.push_back(sigma_->id());
    long long bound = 2 * host->word_norm(g) + 2;
    for (long long k = 1;; ++k) {
      out.push_back({k});
      out.push_back({-k});
      long long norm_k = host->word_norm(sigma_image(j, {k}));
      if (norm_k > bound) break;
      if (k > 4096) throw Error(Errc::SearchExhausted, "sigma candidate range");
    }
    return out;
  }
  throw Error(Errc::SchemaError, "unsupported sigma kind for coset decomposition");
}

std::pair<Elem, Elem> Group::coset_decompose(int j, const Elem& g) const {
  const GroupPtr& G = factors_[j];
  Elem best_rep = g;
  Elem best_s = sigma_->id();
  bool first = true;
  for (const Elem& s : sigma_candidates(j, g)) {
    Elem cand = G->mul(g, G->inv(sigma_image(j, s)));
    if (first || G->rank_less(cand, best_rep)) {
      best_rep = cand;
      best_s = s;
      first = false;
    }
  }
  return {best_rep, best_s};
}

std::pair<Elem, Elem> Group::right_coset_decompose(int side, const Elem& g) const {
  const GroupPtr& H = factors_[0];
  Elem best_rep = g;
  Elem best_s = sigma_->id();
  bool first = true;
  for (const Elem& s : sigma_candidates(side, g)) {
    Elem cand = H->mul(H->inv(sigma_image(side, s)), g);
    if (first || H->rank_less(cand, best_rep)) {
      best_rep = cand;
      best_s = s;
      first = false;
    }
  }
  return {best_s, best_rep};
}

bool Group::rank_less(const Elem& a, const Elem& b) const {
  long long na = word_norm(a), nb = word_norm(b);
  if (na != nb) return na < nb;
  return a < b;
}

// ----------------------------------------------------------------- structure

std::vector<Elem> Group::generators() const {
  std::vector<Elem> out;
  switch (kind_) {
    case Kind::FiniteTable:
      for (size_t i = 1; i < table_.size(); ++i) out.push_back({static_cast<long long>(i)});
      break;
    case Kind::Integers:
      out = {{1}, {-1}};
      break;
    case Kind::BoolVectors:
      throw Error(Errc::SchemaError, "BoolVectors has no finite generating set");
    case Kind::FreeGroup:
      for (int i = 1; i <= rank_; ++i) {
        out.push_back({i});
        out.push_back({-i});
      }
      break;
    case Kind::FreeProduct:
    case Kind::Amalgam:
      for (size_t f = 0; f < factors_.size(); ++f)
        for (const auto& g : factors_[f]->generators())
          out.push_back(embed_factor(static_cast<int>(f), g));
      break;
    case Kind::Hnn:
      for (const auto& g : factors_[0]->generators()) out.push_back(embed_factor(0, g));
      out.push_back(stable_letter(1));
      out.push_back(stable_letter(-1));
      break;
  }
  return out;
}

Elem Group::embed_factor(int k, const Elem& g) const {
  switch (kind_) {
    case Kind::FreeProduct: {
      Elem out;
      if (!factors_[k]->is_id(g)) append_block(out, k, g);
      return out;
    }
    case Kind::Amalgam: {
      AmalgamWord w;
      w.sigma = sigma_->id();
      am_emit(w, k, g);
      return am_pack(w);
    }
    case Kind::Hnn: {
      HnnWord w;
      w.h = {g};
      return hnn_pack(w);
    }
    default:
      throw Error(Errc::SchemaError, "embed_factor on a non-composite group");
  }
}

Elem Group::stable_letter(int eps) const {
  if (kind_ != Kind::Hnn) throw Error(Errc::SchemaError, "no stable letter");
  HnnWord w;
  w.h = {factors_[0]->id(), factors_[0]->id()};
  w.eps = {eps};
  return hnn_pack(w);
}

Elem Group::embed_sigma(int j, const Elem& s) const {
  switch (kind_) {
    case Kind::Amalgam: {
      AmalgamWord w;
      w.sigma = s;
      (void)j;
      return am_pack(w);
    }
    case Kind::Hnn:
      return embed_factor(0, sigma_image(j, s));
    default:
      throw Error(Errc::SchemaError, "embed_sigma on a non-composite group");
  }
}

std::optional<Elem> Group::sigma_part(const Elem& g) const {
  switch (kind_) {
    case Kind::Amalgam: {
      AmalgamWord w = am_unpack(g);
      if (w.syl.empty()) return w.sigma;
      return std::nullopt;
    }
    case Kind::Hnn: {
      HnnWord w = hnn_unpack(g);
      if (!w.eps.empty()) return std::nullopt;
      auto [s, rep] = right_coset_decompose(0, w.h[0]);
      if (factors_[0]->is_id(rep)) return s;
      return std::nullopt;
    }
    default:
      return std::nullopt;
  }
}

std::vector<Group::Letter> Group::letters(const Elem& g) const {
  std::vector<Letter> out;
  switch (kind_) {
    case Kind::FreeProduct: {
      size_t i = 0;
      while (i < g.size()) {
        int f = static_cast<int>(g[i]);
        size_t len = static_cast<size_t>(g[i + 1]);
        Elem child(g.begin() + i + 2, g.begin() + i + 2 + len);
        out.push_back({f, 0, embed_factor(f, child)});
        i += 2 + len;
      }
      break;
    }
    case Kind::Amalgam: {
      AmalgamWord w = am_unpack(g);
      for (const auto& [f, rep] : w.syl) out.push_back({f, 0, embed_factor(f, rep)});
      if (!sigma_->is_id(w.sigma)) out.push_back({0, 0, embed_sigma(0, w.sigma)});
      break;
    }
    case Kind::Hnn: {
      HnnWord w = hnn_unpack(g);
      for (size_t k = 0; k < w.h.size(); ++k) {
        if (!factors_[0]->is_id(w.h[k])) out.push_back({0, 0, embed_factor(0, w.h[k])});
        if (k < w.eps.size()) out.push_back({-1, w.eps[k], stable_letter(w.eps[k])});
      }
      break;
    }
    default:
      if (!is_id(g)) out.push_back({0, 0, g});
      break;
  }
  return out;
}

int Group::syllable_length(const Elem& g) const {
  switch (kind_) {
    case Kind::FreeProduct: {
      int n = 0;
      size_t i = 0;
      while (i < g.size()) {
        ++n;
        i += 2 + static_cast<size_t>(g[i + 1]);
      }
      return n;
    }
    case Kind::Amalgam:
      return static_cast<int>(am_unpack(g).syl.size());
    case Kind::Hnn:
      return static_cast<int>(hnn_unpack(g).eps.size());
    default:
      return 0;
  }
}

// -------------------------------------------------------------- enumeration

bool Group::extend_layer() const {
  auto gens = generators();
  size_t layer = layer_ends_.size() - 1;
  size_t begin = layer == 0 ? 0 : layer_ends_[layer - 1];
  size_t end = layer_ends_[layer];
  std::vector<Elem> next;
  for (size_t i = begin; i < end; ++i)
    for (const auto& s : gens) {
      Elem g = mul(enum_cache_[i], s);
      if (norm_cache_.count(g)) continue;
      norm_cache_[g] = static_cast<long long>(layer) + 1;
      next.push_back(g);
    }
  if (next.empty()) return false;
  std::sort(next.begin(), next.end());
  for (auto& g : next) enum_cache_.push_back(std::move(g));
  layer_ends_.push_back(enum_cache_.size());
  return true;
}

void Group::ensure_enum(size_t upto) const {
  if (kind_ == Kind::BoolVectors) {
    // element i = bit positions of i; norms are contiguous blocks
    while (enum_cache_.size() <= upto) {
      size_t i = enum_cache_.size();
      Elem e;
      for (long long b = 0; (1ull << b) <= i; ++b)
        if (i & (1ull << b)) e.push_back(b);
      enum_cache_.push_back(e);
    }
    return;
  }
  if (enum_cache_.empty()) {
    enum_cache_.push_back(id());
    layer_ends_.push_back(1);
    norm_cache_[id()] = 0;
  }
  while (enum_cache_.size() <= upto)
    if (!extend_layer())
      throw Error(Errc::SearchExhausted, "enumeration beyond group order");
}

Elem Group::enumerate(size_t i) const {
  ensure_enum(i);
  return enum_cache_[i];
}

std::vector<Elem> Group::ball(int radius) const {
  if (kind_ == Kind::BoolVectors) {
    size_t count = radius <= 0 ? 1 : (1ull << radius);
    ensure_enum(count - 1);
    return std::vector<Elem>(enum_cache_.begin(), enum_cache_.begin() + count);
  }
  ensure_enum(0);
  while (layer_ends_.size() <= static_cast<size_t>(radius))
    if (!extend_layer()) break;
  size_t end = layer_ends_[std::min(static_cast<size_t>(radius), layer_ends_.size() - 1)];
  return std::vector<Elem>(enum_cache_.begin(), enum_cache_.begin() + end);
}

long long Group::word_norm(const Elem& g) const {
  switch (kind_) {
    case Kind::FiniteTable:
      return is_id(g) ? 0 : 1;
    case Kind::Integers:
      return g[0] >= 0 ? g[0] : -g[0];
    case Kind::BoolVectors:
      return g.empty() ? 0 : g.back() + 1;
    case Kind::FreeGroup:
      return static_cast<long long>(g.size());
    case Kind::FreeProduct: {
      long long n = 0;
      size_t i = 0;
      while (i < g.size()) {
        int f = static_cast<int>(g[i]);
        size_t len = static_cast<size_t>(g[i + 1]);
        n += factors_[f]->word_norm(Elem(g.begin() + i + 2, g.begin() + i + 2 + len));
        i += 2 + len;
      }
      return n;
    }
    case Kind::Amalgam:
    case Kind::Hnn: {
      auto it = norm_cache_.find(g);
      if (it != norm_cache_.end()) return it->second;
      for (int r = 0; r <= 24; ++r) {
        ball(r);
        it = norm_cache_.find(g);
        if (it != norm_cache_.end()) return it->second;
      }
      throw Error(Errc::SearchExhausted, "word norm beyond radius 24");
    }
  }
  return 0;
}

Elem Group::norm_witness(long long n) const {
  if (n == 0) return id();
  switch (kind_) {
    case Kind::FiniteTable:
      if (n == 1 && table_.size() > 1) return {1};
      throw Error(Errc::SearchExhausted, "finite group has bounded norm");
    case Kind::Integers:
      return {n};
    case Kind::BoolVectors:
      return {n - 1};
    case Kind::FreeGroup:
      return Elem(static_cast<size_t>(n), 1);
    case Kind::FreeProduct:
      return norm_witness_in_factor(0, n);
    case Kind::Amalgam:
    case Kind::Hnn: {
      ball(static_cast<int>(n));
      if (layer_ends_.size() <= static_cast<size_t>(n))
        throw Error(Errc::SearchExhausted, "no witness at that norm");
      size_t begin = n == 0 ? 0 : layer_ends_[n - 1];
      return enum_cache_[begin];
    }
  }
  throw Error(Errc::SearchExhausted, "no witness");
}

Elem Group::norm_witness_in_factor(int k, long long n) const {
  if (kind_ != Kind::FreeProduct)
    throw Error(Errc::SchemaError, "factor witnesses need a free product");
  return embed_factor(k, factors_[k]->norm_witness(n));
}

// ------------------------------------------------------------------ words

std::vector<int> Group::express(const Elem& g) const {
  switch (kind_) {
    case Kind::FiniteTable: {
      // BFS words over generators(); generator i (1-based) is element i
      std::vector<int> out;
      Elem cur = g;
      // table generators are all elements; a one-letter word suffices
      if (is_id(g)) return out;
      out.push_back(static_cast<int>(g[0]));  // generators()[i-1] = element i
      return out;
    }
    case Kind::Integers: {
      std::vector<int> out;
      long long n = g[0];
      for (long long i = 0; i < (n >= 0 ? n : -n); ++i) out.push_back(n >= 0 ? 1 : 2);
      return out;
    }
    case Kind::FreeGroup: {
      std::vector<int> out;
      for (long long letter : g)
        out.push_back(letter > 0 ? static_cast<int>(2 * letter - 1)
                                 : static_cast<int>(-2 * letter));
      return out;
    }
    default:
      throw Error(Errc::SchemaError, "express unsupported for this kind");
  }
}

Elem Group::reduce(const std::vector<Elem>& letters) const {
  Elem out = id();
  for (const auto& l : letters) out = mul(out, l);
  return out;
}

// -------------------------------------------------------------------- text

std::string Group::to_string(const Elem& g) const {
  switch (kind_) {
    case Kind::FiniteTable:
      return names_[g[0]];
    case Kind::Integers:
      return std::to_string(g[0]);
    case Kind::BoolVectors: {
      if (g.empty()) return "e";
      std::string s = "{";
      for (size_t i = 0; i < g.size(); ++i)
        s += (i ? "," : "") + std::to_string(g[i]);
      return s + "}";
    }
    case Kind::FreeGroup: {
      if (g.empty()) return "1";
      std::string s;
      for (long long letter : g)
        s += static_cast<char>((letter > 0 ? 'a' + letter : 'A' - letter) - 1);
      return s;
    }
    case Kind::FreeProduct: {
      if (g.empty()) return "1";
      std::string s;
      size_t i = 0;
      while (i < g.size()) {
        int f = static_cast<int>(g[i]);
        size_t len = static_cast<size_t>(g[i + 1]);
        if (!s.empty()) s += "*";
        s += "f" + std::to_string(f) + ":" +
             factors_[f]->to_string(Elem(g.begin() + i + 2, g.begin() + i + 2 + len));
        i += 2 + len;
      }
      return s;
    }
    case Kind::Amalgam: {
      AmalgamWord w = am_unpack(g);
      std::string s;
      for (const auto& [f, rep] : w.syl) {
        if (!s.empty()) s += "*";
        s += "f" + std::to_string(f) + ":" + factors_[f]->to_string(rep);
      }
      if (!sigma_->is_id(w.sigma) || s.empty()) {
        if (!s.empty()) s += "*";
        s += "s:" + sigma_->to_string(w.sigma);
      }
      return s;
    }
    case Kind::Hnn: {
      HnnWord w = hnn_unpack(g);
      std::string s;
      for (size_t k = 0; k < w.h.size(); ++k) {
        if (!factors_[0]->is_id(w.h[k])) {
          if (!s.empty()) s += "*";
          s += "h:" + factors_[0]->to_string(w.h[k]);
        }
        if (k < w.eps.size()) {
          if (!s.empty()) s += "*";
          s += w.eps[k] == 1 ? "t" : "T";
        }
      }
      return s.empty() ? "1" : s;
    }
  }
  return "?";
}

Elem Group::parse(const std::string& str) const {
  switch (kind_) {
    case Kind::FiniteTable:
      for (size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == str) return {static_cast<long long>(i)};
      throw Error(Errc::InvalidLetter, "unknown element " + str);
    case Kind::Integers:
      try {
        return {std::stoll(str)};
      } catch (const std::logic_error&) {
        throw Error(Errc::InvalidLetter, "bad integer " + str);
      }
    case Kind::FreeGroup: {
      if (str == "1") return {};
      Elem raw;
      for (char c : str) {
        long long letter;
        if (c >= 'a' && c < 'a' + rank_) letter = c - 'a' + 1;
        else if (c >= 'A' && c < 'A' + rank_) letter = -(c - 'A' + 1);
        else throw Error(Errc::InvalidLetter, std::string("bad letter ") + c);
        raw.push_back(letter);
      }
      return mul(Elem{}, raw);  // free reduction
    }
    case Kind::FreeProduct:
    case Kind::Amalgam:
    case Kind::Hnn: {
      if (str == "1") return id();
      Elem acc = id();
      size_t pos = 0;
      while (pos < str.size()) {
        size_t star = str.find('*', pos);
        std::string piece = str.substr(pos, star == std::string::npos ? star : star - pos);
        pos = star == std::string::npos ? str.size() : star + 1;
        if (piece == "t") acc = mul(acc, stable_letter(1));
        else if (piece == "T") acc = mul(acc, stable_letter(-1));
        else if (piece.rfind("h:", 0) == 0)
          acc = mul(acc, embed_factor(0, factors_[0]->parse(piece.substr(2))));
        else if (piece.rfind("s:", 0) == 0)
          acc = mul(acc, embed_sigma(0, sigma_->parse(piece.substr(2))));
        else if (piece.rfind("f", 0) == 0) {
          size_t colon = piece.find(':');
          if (colon == std::string::npos) throw Error(Errc::InvalidLetter, piece);
          int f = std::stoi(piece.substr(1, colon - 1));
          acc = mul(acc, embed_factor(f, factors_[f]->parse(piece.substr(colon + 1))));
        } else {
          throw Error(Errc::InvalidLetter, piece);
        }
      }
      return acc;
    }
    default:
      throw Error(Errc::SchemaError, "parse unsupported");
  }
}

std::string Group::describe() const {
  switch (kind_) {
    case Kind::FiniteTable: return "finite(" + std::to_string(table_.size()) + ")";
    case Kind::Integers: return "Z";
    case Kind::BoolVectors: return "sum(Z/2)";
    case Kind::FreeGroup: return "F" + std::to_string(rank_);
    case Kind::FreeProduct: {
      std::string s;
      for (const auto& f : factors_) s += (s.empty() ? "" : " * ") + f->describe();
      return s;
    }
    case Kind::Amalgam:
      return factors_[0]->describe() + " *_" + sigma_->describe() + " " +
             factors_[1]->describe();
    case Kind::Hnn:
      return "HNN(" + factors_[0]->describe() + "," + sigma_->describe() + ")";
  }
  return "?";
}

// ---------------------------------------------------------- graph of groups

FoldedGraph fundamental_group(const GraphOfGroups& g, const std::vector<int>& drop_edges,
                              int root) {
  std::set<int> dropped(drop_edges.begin(), drop_edges.end());
  size_t nv = g.vertices.size();

  // component of root over non-dropped edges
  std::vector<bool> in_comp(nv, false);
  in_comp[root] = true;
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t e = 0; e < g.edges.size(); ++e) {
      if (dropped.count(static_cast<int>(e))) continue;
      const auto& ed = g.edges[e];
      if (in_comp[ed.src] != in_comp[ed.dst]) {
        in_comp[ed.src] = in_comp[ed.dst] = true;
        changed = true;
      }
    }
  }

  // start from the vertex groups; fold tree edges, then attach loops
  std::vector<int> rep(nv);  // current folded-component representative
  std::vector<GroupPtr> cur(nv);
  std::vector<std::function<Elem(const Elem&)>> embed(nv);
  for (size_t v = 0; v < nv; ++v) {
    rep[v] = static_cast<int>(v);
    cur[v] = g.vertices[v];
    embed[v] = [](const Elem& x) { return x; };
  }
  auto find = [&](int v) {
    while (rep[v] != v) v = rep[v];
    return v;
  };

  std::vector<size_t> loops;
  for (size_t e = 0; e < g.edges.size(); ++e) {
    if (dropped.count(static_cast<int>(e))) continue;
    const auto& ed = g.edges[e];
    if (!in_comp[ed.src]) continue;
    int a = find(ed.src), b = find(ed.dst);
    if (a == b) { loops.push_back(e); continue; }
    // amalgamate cur[a] and cur[b] over sigma, transported embeddings
    std::vector<Elem> into_a, into_b;
    for (const auto& im : ed.into_src) into_a.push_back(embed[ed.src](im));
    for (const auto& im : ed.into_dst) into_b.push_back(embed[ed.dst](im));
    GroupPtr am = Group::amalgam(cur[a], cur[b], ed.sigma, into_a, into_b);
    for (size_t v = 0; v < nv; ++v) {
      if (!in_comp[v]) continue;
      int r = find(static_cast<int>(v));
      if (r == a) {
        auto prev = embed[v];
        embed[v] = [am, prev](const Elem& x) { return am->embed_factor(0, prev(x)); };
      } else if (r == b) {
        auto prev = embed[v];
        embed[v] = [am, prev](const Elem& x) { return am->embed_factor(1, prev(x)); };
      }
    }
    rep[b] = a;
    cur[a] = am;
  }

  int r0 = find(root);
  for (size_t e : loops) {
    const auto& ed = g.edges[e];
    std::vector<Elem> into_s, into_r;
    for (const auto& im : ed.into_src) into_s.push_back(embed[ed.src](im));
    for (const auto& im : ed.into_dst) into_r.push_back(embed[ed.dst](im));
    // relation: t r_e(x) t^-1 = s_e(x); base embedding is via r_e side
    GroupPtr h = Group::hnn(cur[r0], ed.sigma, into_r, into_s);
    for (size_t v = 0; v < nv; ++v) {
      if (!in_comp[v]) continue;
      auto prev = embed[v];
      embed[v] = [h, prev](const Elem& x) { return h->embed_factor(0, prev(x)); };
    }
    cur[r0] = h;
  }

  FoldedGraph out;
  out.group = cur[r0];
  out.vertex_embed.resize(nv);
  for (size_t v = 0; v < nv; ++v)
    if (in_comp[v]) out.vertex_embed[v] = embed[v];
  return out;
}

}  // namespace ury
