#include "doctest.h"

#include "catrep/corpus.hpp"
#include "catrep/homology.hpp"
#include "catrep/presentation.hpp"
#include "catrep/theorems.hpp"

using namespace catrep;

namespace {

template <class F>
ModulePtr<F> parse_module(const std::string& body, const F& f, int h) {
  return from_presentation(parse_presentation("catrep-presentation 1\n" + body), f, h).module;
}

ResolutionOptions depth(int d, bool pad = false) {
  ResolutionOptions opt;
  opt.depth = d;
  opt.pad = pad;
  return opt;
}

// In a minimal projective resolution P^i / m P^i = Tor_i(V), P^i is generated
// in degrees >= i, and a projective generated by W in degree t has dimension
// dim W |C(t,n)| / |C(t,t)| in degree n. Hence, with depth h,
//   dim V_n = sum_i (-1)^i sum_t dim Tor_i(V)_t |C(t,n)| / |C(t,t)|.
template <class F>
void check_euler(const TruncatedModule<F>& v, const HomologyReport& r) {
  const auto& cat = v.category();
  REQUIRE(r.depth >= v.horizon());
  REQUIRE(r.complete);
  for (int n = 0; n <= v.horizon(); ++n) {
    long long sum = 0;
    for (int i = 0; i <= r.depth; ++i)
      for (int t = 0; t <= n; ++t) {
        const auto orbits = static_cast<long long>(cat.hom_size(t, n) / cat.hom_size(t, t));
        sum += (i % 2 ? -1 : 1) * r.tor[i][t] * orbits;
      }
    CHECK(sum == static_cast<long long>(v.dim(n)));
  }
}

std::vector<Category> kinds() {
  return {Category(Kind::OI), Category(Kind::FI), Category(Kind::OI_G, Group::cyclic(2)),
          Category(Kind::FI_G, Group::cyclic(2))};
}

}  // namespace

TEST_CASE("Tor of a free module is its top") {
  PrimeField f(101);
  for (const auto& cat : kinds())
    for (int s = 0; s <= 2; ++s) {
      auto m = free_module(cat, f, s, 4);
      auto r = tor_groups(m, depth(2));
      for (int t = 0; t <= 4; ++t) CHECK(r.tor[0][t] == (t == s ? (long long)cat.hom_size(s, s) : 0));
      for (int i = 1; i <= 2; ++i) CHECK(r.hd[i] == -1);
      CHECK(r.gd == s);
      CHECK(r.reg == s);
      CHECK(r.failures.empty());
    }
}

TEST_CASE("M(1)/IM(1) over OI") {
  auto v = parse_module("category oi\ngen a deg 1\nrel 2: 1->2:[2]@a\n", PrimeField(101), 6);
  auto r = tor_groups(*v, depth(3));
  CHECK(r.hd[0] == 1);
  CHECK(r.hd[1] == 2);
  CHECK(r.generator_degrees[1] == std::vector<int>{2});
  for (int i = 0; i <= 3; ++i) {
    CHECK(r.hd[i] == i + 1);
    CHECK(r.tor[i][i + 1] == 1);
  }
  CHECK(r.reg == 1);
  CHECK(r.failures.empty());
}

TEST_CASE("Euler characteristic of resolutions") {
  for (const auto& cat : kinds()) {
    const int h = cat.decorated() ? 3 : 4;
    for (const char* field : {"fp:101", "fp:2", "q"}) {
      auto spec = FieldSpec::parse(field);
      for (const auto& p : random_corpus(cat, spec, 17, 5))
        with_field(spec, [&](auto fld) {
          auto v = from_presentation(p, fld, h).module;
          auto r = tor_groups(*v, depth(h));
          CHECK(r.failures.empty());
          check_euler(*v, r);
        });
    }
  }
}

TEST_CASE("padded and minimal resolutions give the same Tor") {
  for (const auto& cat : {Category(Kind::OI), Category(Kind::FI)}) {
    auto spec = FieldSpec::parse("fp:101");
    for (const auto& p : random_corpus(cat, spec, 5, 6)) {
      auto v = from_presentation(p, PrimeField(101), 5).module;
      auto a = resolve(*v, depth(3)), b = resolve(*v, depth(3, true));
      CHECK(a.tor == b.tor);
      CHECK(b.failures.empty());
    }
  }
}

TEST_CASE("zero module") {
  auto z = TruncatedModule<PrimeField>::zero(Category(Kind::FI), PrimeField(5), 4);
  auto r = tor_groups(z, depth(2));
  CHECK(r.gd == -1);
  CHECK(r.reg == -1);
  CHECK(r.hd == std::vector<int>{-1, -1, -1});
  auto fit = hilbert_fit(z.dims(), -1);
  CHECK(fit.found);
  CHECK(fit.degree() == -1);
  CHECK(fit.degree_within_gd());
  CHECK(polynomial_text(fit.coefficients) == "0");
}

TEST_CASE("Hilbert fits of free modules") {
  RationalField q;
  auto fit = hilbert_fit(free_module(Category(Kind::OI), q, 1, 6).dims(), 1);
  REQUIRE(fit.found);
  CHECK(fit.onset == 0);
  CHECK(fit.coefficients == std::vector<mpq_class>{0, 1});
  CHECK(polynomial_text(fit.coefficients) == "n");

  fit = hilbert_fit(free_module(Category(Kind::FI), q, 2, 6).dims(), 2);
  REQUIRE(fit.found);
  CHECK(polynomial_text(fit.coefficients) == "n^2 - n");
  CHECK(fit.matches);

  fit = hilbert_fit(free_module(Category(Kind::OI), q, 2, 6).dims(), 2);
  REQUIRE(fit.found);
  CHECK(polynomial_text(fit.coefficients) == "1/2*n^2 - 1/2*n");
  for (long n = 0; n <= 20; ++n) CHECK(evaluate(fit.coefficients, n) == mpq_class(n * (n - 1) / 2));
}

TEST_CASE("Hilbert fits with a late onset") {
  // dims 1,0,0,... : the zero polynomial from degree 1 on.
  auto fit = hilbert_fit({1, 0, 0, 0, 0}, 0);
  REQUIRE(fit.found);
  CHECK(fit.onset == 1);
  CHECK(fit.degree() == -1);
  // 0,1,1,1,...
  fit = hilbert_fit({0, 1, 1, 1, 1}, 1);
  REQUIRE(fit.found);
  CHECK(fit.onset == 1);
  CHECK(polynomial_text(fit.coefficients) == "1");
  // 5,3,2,4,6,8: linear from degree 2.
  fit = hilbert_fit({5, 3, 2, 4, 6, 8}, 1);
  REQUIRE(fit.found);
  CHECK(fit.onset == 2);
  CHECK(polynomial_text(fit.coefficients) == "2*n - 2");
}

TEST_CASE("no Hilbert fit when the horizon is too short") {
  auto fit = hilbert_fit({0, 0, 1}, 2);
  CHECK_FALSE(fit.found);
  CHECK_FALSE(fit.reason.empty());
  fit = hilbert_fit({1, 2, 4, 8, 16}, 1);
  CHECK_FALSE(fit.found);
}

TEST_CASE("shifted free modules have regularity s") {
  for (const auto& cat : {Category(Kind::OI), Category(Kind::FI)})
    CHECK(shifted_free_regularity(cat, PrimeField(101), 2, 2, 5, 4000) == std::vector<int>{0, 1, 2});
}

TEST_CASE("verify on M(1)/IM(1) skips the bounds that need mu injective") {
  auto v = parse_module("category oi\ngen a deg 1\nrel 2: 1->2:[2]@a\n", PrimeField(101), 6);
  VerifyOptions opt;
  opt.hypothesis_bound = 2;
  auto rep = verify_theorems(v, opt);
  CHECK_FALSE(rep.mu_injective_visible);
  CHECK(rep.hypothesis_holds);
  CHECK(rep.count(CheckStatus::Violation) == 0);
  CHECK(rep.visible_failures() == 0);
  int skipped = 0;
  for (const auto& c : rep.checks)
    if (c.status == CheckStatus::Skipped && c.reason.find("not injective") != std::string::npos) ++skipped;
  CHECK(skipped == 5);
}

TEST_CASE("finitely supported modules satisfy the support bound") {
  // M(0) killed in degree 3: supported in degrees 0..2.
  auto v = parse_module("category oi\ngen a deg 0\nrel 3: 0->3:[]@a\n", PrimeField(101), 7);
  CHECK(v->dims() == std::vector<std::size_t>{1, 1, 1, 0, 0, 0, 0, 0});
  VerifyOptions opt;
  opt.hypothesis_bound = 2;
  auto rep = verify_theorems(v, opt);
  REQUIRE(rep.support_bound);
  CHECK(*rep.support_bound == 2);
  CHECK(rep.v.reg == 2);
  bool seen = false;
  for (const auto& c : rep.checks)
    if (c.name.find("N0") != std::string::npos) {
      seen = true;
      CHECK(c.status == CheckStatus::Pass);
    }
  CHECK(seen);
  CHECK(rep.count(CheckStatus::Violation) == 0);
}

TEST_CASE("verify over a random corpus finds no violations") {
  for (const auto& cat : {Category(Kind::OI), Category(Kind::FI)}) {
    auto spec = FieldSpec::parse("fp:101");
    VerifyOptions opt;
    opt.hypothesis_bound = 2;
    for (const auto& p : random_corpus(cat, spec, 9, 6)) {
      auto rep = verify_theorems(from_presentation(p, PrimeField(101), 5).module, opt);
      CHECK(rep.count(CheckStatus::Violation) == 0);
      CHECK(rep.visible_failures() == 0);
    }
  }
}
