#include "doctest.h"

#include <random>

#include "catrep/corpus.hpp"
#include "catrep/module.hpp"
#include "catrep/presentation.hpp"

using namespace catrep;

namespace {

std::size_t falling(std::size_t n, std::size_t r) {
  std::size_t out = 1;
  for (std::size_t i = 0; i < r; ++i) out *= n - i;
  return n < r ? 0 : out;
}

std::size_t binom(std::size_t n, std::size_t r) { return n < r ? 0 : falling(n, r) / falling(r, r); }

std::size_t power(std::size_t b, std::size_t e) {
  std::size_t out = 1;
  while (e--) out *= b;
  return out;
}

std::size_t closed_form(const Category& cat, std::size_t s, std::size_t n) {
  std::size_t count = cat.order_preserving() ? binom(n, s) : falling(n, s);
  return count * power(cat.label_count(), s);
}

std::vector<Category> kinds() {
  return {Category(Kind::FI), Category(Kind::OI), Category(Kind::FI_G, Group::cyclic(2)),
          Category(Kind::OI_G, Group::cyclic(3))};
}

// The all-ones map M(1) -> M(0): the generator goes to the unique map 0 -> 1.
template <class F>
ModuleMap<F> augmentation(const ModulePtr<F>& m1, const ModulePtr<F>& m0) {
  ModuleMap<F> f{m1, m0, {}};
  const F& field = m1->field();
  for (int t = 0; t <= m1->horizon(); ++t) {
    Mat<F> a(field, m0->dim(t), m1->dim(t));
    for (std::size_t j = 0; j < m1->dim(t); ++j) a(0, j) = field.one();
    f.mats.push_back(std::move(a));
  }
  return f;
}

}  // namespace

TEST_CASE("free module dimensions match hom counts") {
  PrimeField f(101);
  for (const auto& cat : kinds())
    for (int s = 0; s <= 3; ++s) {
      auto m = free_module(cat, f, s, 6);
      for (int n = 0; n <= 6; ++n) CHECK(m.dim(n) == closed_form(cat, s, n));
    }
}

TEST_CASE("the action on a free module is post-composition") {
  PrimeField f(7);
  for (const auto& cat : kinds()) {
    const int h = cat.decorated() ? 3 : 4;
    for (std::uint32_t s = 0; s <= 2; ++s) {
      auto m = free_module(cat, f, int(s), h);
      for (std::uint32_t t = s; t <= std::uint32_t(h); ++t)
        for (std::uint32_t u = t; u <= std::uint32_t(h); ++u)
          for (const auto& alpha : cat.hom(t, u)) {
            auto a = act(m, alpha);
            const auto& basis = cat.hom(s, t);
            for (std::size_t j = 0; j < basis.size(); ++j) {
              auto target = cat.index_of(cat.compose(alpha, basis[j]));
              for (std::size_t i = 0; i < a.rows(); ++i) CHECK(a(i, j) == (i == target ? 1u : 0u));
            }
          }
    }
  }
}

TEST_CASE("direct sums and truncation") {
  RationalField q;
  Category oi(Kind::OI);
  auto v = direct_sum(free_module(oi, q, 1, 5), free_module(oi, q, 0, 5));
  CHECK(v.dims() == std::vector<std::size_t>{1, 2, 3, 4, 5, 6});
  CHECK(visible_generating_degree(v) == 1);
  auto t = truncate(v, 3);
  CHECK(t.dims() == std::vector<std::size_t>{1, 2, 3, 4});
  std::mt19937_64 rng(5);
  CHECK_FALSE(functoriality_failure(v, rng, 50));
}

TEST_CASE("generating degree of free and zero modules") {
  PrimeField f(3);
  for (const auto& cat : kinds())
    for (int s = 0; s <= 2; ++s) CHECK(visible_generating_degree(free_module(cat, f, s, 4)) == s);
  CHECK(visible_generating_degree(TruncatedModule<PrimeField>::zero(Category(Kind::FI), f, 4)) == -1);
}

TEST_CASE("the submodule IM(1) of OI M(1) and its quotient") {
  RationalField q;
  Category oi(Kind::OI);
  auto m1 = share(free_module(oi, q, 1, 5));
  // The map 1 -> 2 with image {2}.
  std::vector<Mat<RationalField>> gens(3);
  gens[2] = Mat<RationalField>(q, m1->dim(2), 1);
  gens[2](oi.index_of(Morphism{1, 2, {2}, {}}), 0) = q.one();
  auto im = generated_submodule(m1, gens, 5);
  // Maps 1 -> n avoiding the value 1: n - 1 of them.
  CHECK(im.dims() == std::vector<std::size_t>{0, 0, 1, 2, 3, 4});
  auto [quo, proj] = quotient(im);
  CHECK(quo->dims() == std::vector<std::size_t>{0, 1, 1, 1, 1, 1});
  CHECK_FALSE(naturality_failure(proj));
  std::mt19937_64 rng(1);
  CHECK_FALSE(functoriality_failure(*quo, rng, 50));
}

TEST_CASE("kernel of the augmentation M(1) -> M(0)") {
  PrimeField f(2);
  for (const auto& cat : {Category(Kind::OI), Category(Kind::FI)}) {
    auto m1 = share(free_module(cat, f, 1, 5));
    auto m0 = share(free_module(cat, f, 0, 5));
    auto aug = augmentation(m1, m0);
    REQUIRE_FALSE(naturality_failure(aug));
    auto [k, incl] = kernel_of_map(aug);
    for (int n = 0; n <= 5; ++n) CHECK(k->dim(n) == (n == 0 ? 0 : m1->dim(n) - 1));
    CHECK(is_injective(incl));
    auto [img, _] = image_of_map(aug);
    CHECK(img->dims() == std::vector<std::size_t>{0, 1, 1, 1, 1, 1});
  }
}

TEST_CASE("canonical submodule bases do not depend on the spanning set") {
  PrimeField f(5);
  Category fi(Kind::FI);
  auto m = share(free_module(fi, f, 1, 4));
  std::vector<Mat<PrimeField>> a(2), b(2);
  a[1] = Mat<PrimeField>(f, 1, 1);
  a[1](0, 0) = 1;
  b[1] = Mat<PrimeField>(f, 1, 1);
  b[1](0, 0) = 3;
  auto sa = generated_submodule(m, a, 4), sb = generated_submodule(m, b, 4);
  CHECK(same_submodule(sa, sb, 4));
  for (int t = 0; t <= 4; ++t) CHECK(sa.basis[t] == sb.basis[t]);
  CHECK(sa.dims() == m->dims());
}

TEST_CASE("random presented modules are functors") {
  for (const auto& cat : {Category(Kind::OI), Category(Kind::FI), Category(Kind::OI_G, Group::cyclic(2))}) {
    FieldSpec spec = FieldSpec::parse("fp:101");
    auto corpus = random_corpus(cat, spec, 11, 8);
    std::mt19937_64 rng(2);
    for (const auto& p : corpus) {
      auto v = from_presentation(p, PrimeField(101), 4).module;
      CHECK_FALSE(functoriality_failure(*v, rng, 20));
    }
  }
}
