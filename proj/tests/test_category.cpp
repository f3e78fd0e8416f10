#include "doctest.h"

#include <random>
#include <set>

#include "catrep/category.hpp"

using namespace catrep;

namespace {

std::uint64_t falling(std::uint64_t s, std::uint64_t r) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < r; ++i) out *= s - i;
  return out;
}

std::uint64_t binom(std::uint64_t s, std::uint64_t r) {
  if (r > s) return 0;
  return falling(s, r) / falling(r, r);
}

std::uint64_t power(std::uint64_t b, std::uint64_t e) {
  std::uint64_t out = 1;
  while (e--) out *= b;
  return out;
}

std::vector<Category> all_kinds() {
  return {Category(Kind::FI), Category(Kind::OI), Category(Kind::FI_G, Group::cyclic(2)),
          Category(Kind::OI_G, Group::cyclic(3))};
}

Morphism eval(const Category& cat, std::uint32_t source, const std::vector<GeneratorStep>& word) {
  Morphism m = cat.identity(source);
  for (const auto& step : word) m = cat.compose(cat.generator(step), m);
  return m;
}

// Closure of a set of endomorphisms under composition.
std::set<Morphism> closure(const Category& cat, std::uint32_t s, const std::vector<Morphism>& gens) {
  std::set<Morphism> seen{cat.identity(s)};
  std::vector<Morphism> frontier{cat.identity(s)};
  while (!frontier.empty()) {
    auto m = frontier.back();
    frontier.pop_back();
    for (const auto& g : gens) {
      auto n = cat.compose(g, m);
      if (seen.insert(n).second) frontier.push_back(n);
    }
  }
  return seen;
}

}  // namespace

TEST_CASE("hom set sizes match closed forms") {
  for (const auto& cat : all_kinds()) {
    for (std::uint32_t r = 0; r <= 6; ++r)
      for (std::uint32_t s = 0; s <= 6; ++s) {
        std::uint64_t base = cat.order_preserving() ? binom(s, r) : (r <= s ? falling(s, r) : 0);
        std::uint64_t expected = base * power(cat.label_count(), r);
        if (r > s) expected = 0;
        REQUIRE(cat.hom_size(r, s) == expected);
        const auto& h = cat.hom(r, s);
        CHECK(std::is_sorted(h.begin(), h.end()));
        CHECK(std::adjacent_find(h.begin(), h.end()) == h.end());
        for (const auto& m : h) CHECK(cat.valid(m));
      }
  }
  CHECK(Category(Kind::FI).hom_size(1, 2) == 2);
  CHECK(Category(Kind::OI).hom_size(2, 4) == 6);
  CHECK(Category(Kind::OI_G, Group::cyclic(2)).hom_size(1, 2) == 4);
}

TEST_CASE("composition examples") {
  Category oi(Kind::OI);
  Morphism a{1, 2, {2}, {}};
  Morphism b{2, 3, {1, 3}, {}};
  CHECK(oi.compose(b, a) == Morphism{1, 3, {3}, {}});
  CHECK(oi.compose(oi.identity(2), a) == a);

  Category oig(Kind::OI_G, Group::cyclic(2));
  Morphism alpha{1, 1, {1}, {1}};
  Morphism beta{1, 2, {2}, {1}};
  CHECK(oig.compose(beta, alpha) == Morphism{1, 2, {2}, {0}});
  CHECK_THROWS_AS(oig.compose(alpha, beta), CategoryError);
}

TEST_CASE("composition is associative on random triples") {
  std::mt19937_64 rng(11);
  auto pick = [&](const std::vector<Morphism>& v) { return v[rng() % v.size()]; };
  for (const auto& cat : all_kinds()) {
    for (int trial = 0; trial < 200; ++trial) {
      std::uint32_t a = rng() % 3, b = a + rng() % 2, c = b + rng() % 2, d = c + rng() % 2;
      auto f = pick(cat.hom(a, b)), g = pick(cat.hom(b, c)), h = pick(cat.hom(c, d));
      CHECK(cat.compose(h, cat.compose(g, f)) == cat.compose(cat.compose(h, g), f));
    }
  }
}

TEST_CASE("embedding examples, functoriality and faithfulness") {
  Category oi(Kind::OI), fi(Kind::FI);
  CHECK(oi.embed(Morphism{1, 2, {2}, {}}) == Morphism{2, 3, {1, 3}, {}});
  CHECK(fi.embed(Morphism{1, 2, {2}, {}}) == Morphism{2, 3, {2, 3}, {}});
  CHECK(fi.embed(fi.identity(2)) == fi.identity(3));
  CHECK(oi.mu_witness(1) == Morphism{1, 2, {2}, {}});
  CHECK(fi.mu_witness(1) == Morphism{1, 2, {1}, {}});

  for (const auto& cat : all_kinds()) {
    for (std::uint32_t r = 0; r <= 3; ++r)
      for (std::uint32_t s = r; s <= 4; ++s) {
        std::set<Morphism> images;
        for (const auto& a : cat.hom(r, s)) {
          images.insert(cat.embed(a));
          // Naturality of the witnesses.
          CHECK(cat.compose(cat.embed(a), cat.mu_witness(r)) == cat.compose(cat.mu_witness(s), a));
          for (std::uint32_t t = s; t <= std::min<std::uint32_t>(s + 1, 4); ++t)
            for (const auto& b : cat.hom(s, t))
              CHECK(cat.embed(cat.compose(b, a)) == cat.compose(cat.embed(b), cat.embed(a)));
        }
        CHECK(images.size() == cat.hom_size(r, s));
      }
    for (std::uint32_t s = 0; s <= 3; ++s)
      for (auto g : cat.mu_witness(s).labels) CHECK(g == cat.group()->identity());
  }
}

TEST_CASE("naturality of the witnesses is exhaustive up to degree five") {
  for (const auto& cat : {Category(Kind::FI), Category(Kind::OI)})
    for (std::uint32_t r = 0; r <= 5; ++r)
      for (std::uint32_t s = r; s <= 5; ++s)
        for (const auto& a : cat.hom(r, s))
          REQUIRE(cat.compose(cat.embed(a), cat.mu_witness(r)) == cat.compose(cat.mu_witness(s), a));
}

TEST_CASE("factorization through the predecessor") {
  Category oi(Kind::OI);
  auto [beta, gamma] = oi.factor_through_predecessor(Morphism{1, 3, {3}, {}});
  CHECK(beta == Morphism{1, 2, {2}, {}});
  CHECK(gamma == Morphism{2, 3, {2, 3}, {}});

  Category fi(Kind::FI);
  auto [b0, g0] = fi.factor_through_predecessor(Morphism{0, 2, {}, {}});
  CHECK(fi.compose(g0, b0) == Morphism{0, 2, {}, {}});

  for (const auto& cat : all_kinds())
    for (std::uint32_t r = 0; r <= 3; ++r)
      for (std::uint32_t s = r + 1; s <= 5; ++s)
        for (const auto& a : cat.hom(r, s)) {
          auto [b, g] = cat.factor_through_predecessor(a);
          CHECK(cat.compose(g, b) == a);
          if (cat.decorated())
            for (auto x : g.labels) CHECK(x == cat.group()->identity());
        }
}

TEST_CASE("end generators generate C(s,s)") {
  Category oi(Kind::OI);
  CHECK(oi.end_generators(3).empty());
  Category fi(Kind::FI);
  CHECK(fi.end_generators(3).size() == 2);
  CHECK(closure(fi, 3, fi.end_generators(3)).size() == 6);
  Category fig(Kind::FI_G, Group::cyclic(2));
  CHECK(fig.end_generators(2).size() == 2);
  CHECK(closure(fig, 2, fig.end_generators(2)).size() == 8);
  for (const auto& cat : all_kinds())
    for (std::uint32_t s = 0; s <= 4; ++s)
      CHECK(closure(cat, s, cat.end_generators(s)).size() == cat.hom_size(s, s));
}

TEST_CASE("words evaluate back to the morphism") {
  auto s3 = Group::from_table({{0, 1, 2, 3, 4, 5},
                               {1, 0, 3, 2, 5, 4},
                               {2, 4, 0, 5, 1, 3},
                               {3, 5, 1, 4, 0, 2},
                               {4, 2, 5, 0, 3, 1},
                               {5, 3, 4, 1, 2, 0}});
  auto kinds = all_kinds();
  kinds.emplace_back(Kind::FI_G, s3);
  kinds.emplace_back(Kind::OI_G, s3);
  for (const auto& cat : kinds)
    for (std::uint32_t r = 0; r <= 3; ++r)
      for (std::uint32_t s = r; s <= 4; ++s)
        for (const auto& a : cat.hom(r, s)) REQUIRE(eval(cat, r, cat.word(a)) == a);
}

TEST_CASE("spanning trees reach every morphism") {
  for (const auto& cat : all_kinds())
    for (std::uint32_t r = 0; r <= 3; ++r)
      for (std::uint32_t s = r; s <= 4; ++s) {
        const auto& tree = cat.hom_tree(r, s);
        const auto& order = cat.hom_tree_order(r, s);
        REQUIRE(order.size() == cat.hom_size(r, s));
        std::vector<bool> done(order.size(), false);
        for (auto x : order) {
          const auto& node = tree[x];
          if (node.parent == HomTreeNode::kRoot) {
            CHECK(cat.hom(r, s)[x] == cat.identity(s));
          } else {
            if (node.step.degree == s) CHECK(done[node.parent]);
            CHECK(cat.compose(cat.generator(node.step), cat.hom(r, node.step.degree)[node.parent]) == cat.hom(r, s)[x]);
          }
          done[x] = true;
        }
      }
}

TEST_CASE("groups") {
  auto g = Group::parse("Z/4");
  CHECK(g.order() == 4);
  CHECK(g.multiply(3, 2) == 1);
  CHECK(g.inverse(1) == 3);
  CHECK(Group::parse("table:0 1;1 0").order() == 2);
  CHECK_THROWS_AS(Group::parse("table:0 1;0 1"), CategoryError);
  CHECK_THROWS_AS(Group::parse("Z/0"), CategoryError);
  CHECK_THROWS_AS(Category(Kind::FI_G), CategoryError);
}

TEST_CASE("morphism text encoding round trips") {
  Category oig(Kind::OI_G, Group::cyclic(2));
  Morphism m{2, 4, {1, 3}, {1, 0}};
  CHECK(encode(m, oig) == "2->4:[1,3](1,0)");
  CHECK(parse_morphism("2->4:[1,3](1,0)", oig) == m);
  Category fi(Kind::FI);
  CHECK(encode(Morphism{0, 2, {}, {}}, fi) == "0->2:[]");
  CHECK(parse_morphism("2->3:[3,1]", fi) == Morphism{2, 3, {3, 1}, {}});
  CHECK_THROWS_AS(parse_morphism("2->3:[3,3]", fi), CategoryError);
  CHECK_THROWS_AS(parse_morphism("2->3:[3,1](0,0)", fi), CategoryError);
  CHECK_THROWS_AS(parse_morphism("1->2:[2]", oig), CategoryError);
}
