#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>
#include <vector>

#include "ury/group.hpp"

using namespace ury;

namespace {

// Independent oracle for the genus-2 surface group
//   F2 *_<[a,b]> F2  =  <a,b,c,d | [a,b][c,d]^-1>
// via Dehn's algorithm: a freely reduced word is trivial iff greedily
// replacing relator subwords longer than half the relator by the shorter
// complement reduces it to the empty word. Letters: a,b,c,d / A,B,C,D.
struct Dehn {
  std::string relator = "abABdcDC";  // [a,b][c,d]^-1 cyclically reduced

  static char invc(char c) { return c >= 'a' ? c - 32 : c + 32; }

  static std::string free_reduce(std::string w) {
    std::string out;
    for (char c : w) {
      if (!out.empty() && out.back() == invc(c)) out.pop_back();
      else out.push_back(c);
    }
    return out;
  }

  static std::string inv_word(const std::string& w) {
    std::string out;
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(invc(*it));
    return out;
  }

  std::vector<std::string> relator_forms() const {
    std::vector<std::string> out;
    std::string r = relator;
    for (size_t i = 0; i < r.size(); ++i) {
      out.push_back(r);
      out.push_back(inv_word(r));
      r = r.substr(1) + r[0];
    }
    return out;
  }

  bool is_trivial(std::string w) const {
    w = free_reduce(w);
    auto forms = relator_forms();
    size_t half = relator.size() / 2;
    bool progress = true;
    while (progress && !w.empty()) {
      progress = false;
      for (const auto& r : forms) {
        for (size_t len = r.size(); len > half && !progress; --len) {
          std::string head = r.substr(0, len);
          auto pos = w.find(head);
          if (pos == std::string::npos) continue;
          std::string tail = inv_word(r.substr(len));
          w = free_reduce(w.substr(0, pos) + tail + w.substr(pos + len));
          progress = true;
        }
        if (progress) break;
      }
    }
    return w.empty();
  }
};

// maps a surface-amalgam element to a word in a,b,c,d by expanding factor
// syllables (factor 0 -> a,b; factor 1 -> c,d) and sigma parts as [a,b]^k
std::string to_surface_word(const GroupPtr& G, const Elem& g);

std::string free_letters(const Elem& e, char base) {
  std::string out;
  for (long long letter : e) {
    char c = static_cast<char>((letter > 0 ? base + letter : (base - 32) - letter) - 1);
    out.push_back(c);
  }
  return out;
}

std::string to_surface_word(const GroupPtr& G, const Elem& g) {
  std::string w;
  for (const auto& letter : G->letters(g)) {
    // letter.g is a one-syllable amalgam element or a sigma part; recover the
    // underlying free-group word via to_string
    std::string s = G->to_string(letter.g);
    // forms: "f0:<word>" | "f1:<word>" | "s:<int>"
    if (s.rfind("f0:", 0) == 0) {
      w += free_letters(G->factors()[0]->parse(s.substr(3)), 'a');
    } else if (s.rfind("f1:", 0) == 0) {
      w += free_letters(G->factors()[1]->parse(s.substr(3)), 'c');
    } else if (s.rfind("s:", 0) == 0) {
      long long k = std::stoll(s.substr(2));
      std::string comm = "abAB";
      std::string commInv = "baBA";
      for (long long i = 0; i < (k > 0 ? k : -k); ++i) w += (k > 0 ? comm : commInv);
    }
  }
  return w;
}

GroupPtr surface_group() {
  auto f2a = Group::free_group(2);
  auto f2b = Group::free_group(2);
  Elem comm = {1, 2, -1, -2};  // [a,b] = abAB
  return Group::amalgam(f2a, f2b, Group::integers(), {comm}, {comm});
}

}  // namespace

TEST_CASE("free product reduction") {
  auto G = Group::free_product({Group::integers(), Group::integers()});
  // a^0 b^2 a^1 -> b^2 a
  Elem w = G->reduce({G->embed_factor(0, {0}), G->embed_factor(1, {2}),
                      G->embed_factor(0, {1})});
  CHECK(G->to_string(w) == "f1:2*f0:1");
  CHECK(G->syllable_length(w) == 2);
  // reduce is idempotent
  CHECK(G->reduce({w}) == w);
  // inverse and cancellation
  CHECK(G->is_id(G->mul(w, G->inv(w))));
}

TEST_CASE("free product associativity on sampled triples") {
  auto G = Group::free_product({Group::integers(), Group::cyclic(2)});
  auto ball = G->ball(3);
  for (size_t i = 0; i < ball.size(); i += 3)
    for (size_t j = 0; j < ball.size(); j += 5)
      for (size_t k = 0; k < ball.size(); k += 7) {
        CHECK(G->mul(G->mul(ball[i], ball[j]), ball[k]) ==
              G->mul(ball[i], G->mul(ball[j], ball[k])));
      }
}

TEST_CASE("HNN with trivial sigma behaves like a free extension") {
  auto H = Group::free_group(2);
  auto G = Group::hnn(H, Group::trivial(), {}, {});
  Elem t = G->stable_letter(1);
  Elem tinv = G->stable_letter(-1);
  CHECK(G->is_id(G->mul(t, tinv)));
  Elem a = G->embed_factor(0, {1});
  Elem w = G->reduce({t, a, tinv});
  CHECK_FALSE(G->is_id(w));
  CHECK(G->syllable_length(w) == 2);
  // oracle: HNN(F2, {1}, id) is F3; compare against free reduction there
  auto F3 = Group::free_group(3);
  auto to_f3 = [&](const Elem& g) {
    Elem out = F3->id();
    for (const auto& letter : G->letters(g)) {
      if (letter.side == -1) {
        out = F3->mul(out, letter.exp == 1 ? Elem{3} : Elem{-3});
      } else {
        std::string s = G->to_string(letter.g);
        out = F3->mul(out, F3->parse(s.substr(2)));
      }
    }
    return out;
  };
  auto ball = G->ball(3);
  for (size_t i = 0; i < ball.size(); i += 5)
    for (size_t j = 0; j < ball.size(); j += 7) {
      Elem p = G->mul(ball[i], ball[j]);
      CHECK(to_f3(p) == F3->mul(to_f3(ball[i]), to_f3(ball[j])));
    }
}

TEST_CASE("HNN pinch: t sigma t^-1 = theta(sigma)") {
  // H = Z/4, Sigma = {0,2} = Z/2 embedded as 2, theta sends it to itself
  auto H = Group::cyclic(4);
  auto sigma = Group::cyclic(2);
  auto G = Group::hnn(H, sigma, {{2}}, {{2}});
  Elem t = G->stable_letter(1);
  Elem s = G->embed_factor(0, {2});
  Elem pinched = G->reduce({t, s, G->inv(t)});
  CHECK(pinched == G->embed_factor(0, {2}));  // theta(s)
  CHECK(G->syllable_length(pinched) == 0);
  // non-pinch: t h t^-1 with h outside Sigma stays length 2
  Elem h = G->embed_factor(0, {1});
  CHECK(G->syllable_length(G->reduce({t, h, G->inv(t)})) == 2);
}

TEST_CASE("amalgam normal form: finite-index sigma inside Z") {
  // Z *_{2Z} Z, both embeddings z -> 2
  auto G = Group::amalgam(Group::integers(), Group::integers(), Group::integers(),
                          {{2}}, {{2}});
  // e_0(2) = e_1(2) as sigma elements
  Elem left = G->embed_factor(0, {2});
  Elem right = G->embed_factor(1, {2});
  CHECK(left == right);
  CHECK(G->syllable_length(left) == 0);
  // 1 (factor 0) and 1 (factor 1) are genuinely different
  Elem a = G->embed_factor(0, {1});
  Elem b = G->embed_factor(1, {1});
  CHECK_FALSE(a == b);
  Elem w = G->mul(a, b);
  CHECK(G->syllable_length(w) == 2);
  // a * a = e0(2) lands in sigma
  CHECK(G->syllable_length(G->mul(a, a)) == 0);
  CHECK(G->is_id(G->mul(w, G->inv(w))));
}

TEST_CASE("surface group amalgam against the Dehn oracle") {
  auto G = surface_group();
  Dehn oracle;
  // sigma really is identified across the two factors
  Elem c0 = G->embed_factor(0, {1, 2, -1, -2});
  Elem c1 = G->embed_factor(1, {1, 2, -1, -2});
  CHECK(c0 == c1);
  CHECK(G->syllable_length(c0) == 0);
  CHECK(oracle.is_trivial(to_surface_word(G, c0) + Dehn::inv_word("cdCD")));

  // random-ish products: group triviality must agree with the oracle
  std::vector<Elem> probes;
  probes.push_back(G->embed_factor(0, {1}));
  probes.push_back(G->embed_factor(1, {2}));
  probes.push_back(G->embed_factor(0, {2, 1}));
  probes.push_back(G->embed_factor(1, {-1}));
  probes.push_back(c0);
  int checked = 0;
  for (const auto& x : probes)
    for (const auto& y : probes) {
      Elem p = G->mul(x, y);
      // verify p * (xy)^-1 is trivial both ways
      Elem q = G->mul(p, G->inv(G->mul(x, y)));
      CHECK(G->is_id(q));
      std::string word = to_surface_word(G, x) + to_surface_word(G, y) +
                         Dehn::inv_word(to_surface_word(G, p));
      CHECK(oracle.is_trivial(word));
      // and p itself is trivial iff the oracle says so
      CHECK(G->is_id(p) == oracle.is_trivial(to_surface_word(G, p)));
      ++checked;
    }
  CHECK(checked == 25);
}

TEST_CASE("left-invariant metrics") {
  auto Z = Group::integers();
  CHECK(Z->word_norm({5}) == 5);            // Cayley metric d(0,5)=5
  CHECK(Z->word_norm({0}) == 0);            // d(g,g)=0
  CHECK(Z->word_norm({-3}) == 3);
  CHECK(Z->norm_witness(7) == Elem{7});

  // chain metric on the direct sum of Z/2: d(e,g) = min{n : g in Gamma_n}
  auto B = Group::bool_vectors();
  CHECK(B->word_norm({}) == 0);
  CHECK(B->word_norm({0}) == 1);
  CHECK(B->word_norm({0, 4}) == 5);
  CHECK(B->norm_witness(3) == Elem{2});
  // left invariance: d(kg, kh) = d(g,h), i.e. |(kg)^-1 (kh)| = |g^-1 h|
  Elem k = {1, 2}, g = {0}, h = {2, 3};
  CHECK(B->word_norm(B->mul(B->inv(B->mul(k, g)), B->mul(k, h))) ==
        B->word_norm(B->mul(B->inv(g), h)));

  auto F2 = Group::free_group(2);
  CHECK(F2->word_norm({1, 2, -1}) == 3);
  CHECK(F2->word_norm(F2->norm_witness(9)) == 9);

  auto G = Group::free_product({Group::integers(), Group::integers()});
  CHECK(G->word_norm(G->norm_witness_in_factor(1, 6)) == 6);
  // unboundedness witnessed up to a requested bound
  for (long long n = 0; n <= 12; ++n) CHECK(G->word_norm(G->norm_witness(n)) == n);
}

TEST_CASE("canonical enumeration is deterministic and deduplicated") {
  auto G = Group::free_product({Group::integers(), Group::cyclic(2)});
  auto b2 = G->ball(2);
  std::set<Elem> seen(b2.begin(), b2.end());
  CHECK(seen.size() == b2.size());
  CHECK(G->enumerate(0) == G->id());
  // ball(2) of Z * Z/2 with gens {+-1, s}: layer1 = 3, layer2: elements of
  // norm 2
  CHECK(b2.size() >= 7);
  // finite group enumeration exhausts
  auto C3 = Group::cyclic(3);
  CHECK(C3->ball(5).size() == 3);
  CHECK_THROWS_AS(C3->enumerate(3), Error);
}

TEST_CASE("graph of groups folding") {
  // two vertices, one edge: amalgam
  GraphOfGroups g;
  g.vertices = {Group::integers(), Group::integers()};
  GraphOfGroups::Edge e;
  e.src = 0;
  e.dst = 1;
  e.sigma = Group::integers();
  e.into_src = {{2}};
  e.into_dst = {{3}};
  e.in_tree = true;
  g.edges = {e};
  auto folded = fundamental_group(g, {}, 0);
  CHECK(folded.group->kind() == Group::Kind::Amalgam);
  // the edge relation holds: s_e(x) = r_e(x) inside the amalgam
  CHECK(folded.vertex_embed[0]({2}) == folded.vertex_embed[1]({3}));

  // one vertex, one loop: HNN
  GraphOfGroups h;
  h.vertices = {Group::free_group(2)};
  GraphOfGroups::Edge loop;
  loop.src = 0;
  loop.dst = 0;
  loop.sigma = Group::trivial();
  loop.into_src = {};
  loop.into_dst = {};
  g.edges = {loop};
  h.edges = {loop};
  auto folded2 = fundamental_group(h, {}, 0);
  CHECK(folded2.group->kind() == Group::Kind::Hnn);
}
