#include "doctest.h"

#include "catrep/corpus.hpp"
#include "catrep/presentation.hpp"

using namespace catrep;

namespace {

std::size_t binom(std::size_t n, std::size_t r) {
  if (r > n) return 0;
  std::size_t out = 1;
  for (std::size_t i = 0; i < r; ++i) out = out * (n - i) / (i + 1);
  return out;
}

void expect_error(const std::string& text, std::size_t line, std::size_t column) {
  try {
    parse_presentation(text);
    FAIL("no error for:\n" << text);
  } catch (const ParseError& e) {
    CHECK(e.line() == line);
    CHECK(e.column() == column);
  }
}

}  // namespace

TEST_CASE("parsing the torsion example") {
  auto p = parse_presentation(
      "catrep-presentation 1\n"
      "# comment\n"
      "category oi\n"
      "field fp:101\n"
      "horizon 6\n"
      "\n"
      "gen a deg 1\n"
      "rel 2: 1->2:[2]@a\n");
  CHECK(p.category.kind() == Kind::OI);
  REQUIRE(p.field);
  CHECK(p.field->prime == 101);
  CHECK(p.horizon == 6);
  REQUIRE(p.generators.size() == 1);
  CHECK(p.generators[0].degree == 1);
  REQUIRE(p.relations.size() == 1);
  CHECK(p.relations[0].terms[0].coefficient == 1);
  auto v = from_presentation(p, PrimeField(101), 6).module;
  CHECK(v->dims() == std::vector<std::size_t>{0, 1, 1, 1, 1, 1, 1});
}

TEST_CASE("symmetric quotient of FI M(2) has binomial dimensions") {
  auto text =
      "catrep-presentation 1\n"
      "category fi\n"
      "gen a deg 2\n"
      "rel 2: 1*2->2:[1,2]@a + -1*2->2:[2,1]@a\n";
  auto p = parse_presentation(text);
  for (auto dims : {from_presentation(p, RationalField(), 5).module->dims(),
                    from_presentation(p, PrimeField(2), 5).module->dims()})
    for (std::size_t n = 0; n <= 5; ++n) CHECK(dims[n] == binom(n, 2));
}

TEST_CASE("degree-zero torsion in FI") {
  auto p = parse_presentation("catrep-presentation 1\ncategory fi\ngen a deg 0\nrel 1: 0->1:[]@a\n");
  auto v = from_presentation(p, RationalField(), 5).module;
  CHECK(v->dims() == std::vector<std::size_t>{1, 0, 0, 0, 0, 0});
  CHECK(v->gd_bound() == 0);
}

TEST_CASE("rational coefficients reduce into prime fields") {
  // 2*a - 2*a over F_3 after 1/2 -> 2: a relation that vanishes.
  auto p = parse_presentation(
      "catrep-presentation 1\ncategory oi\ngen a deg 0\nrel 0: 1/2*0->0:[]@a + -2*0->0:[]@a\n");
  CHECK(from_presentation(p, PrimeField(3), 2).module->dims() == std::vector<std::size_t>{1, 1, 1});
  CHECK(from_presentation(p, RationalField(), 2).module->dims() == std::vector<std::size_t>{0, 0, 0});
}

TEST_CASE("overrides replace header values") {
  PresentationOverrides ov;
  ov.kind = Kind::FI;
  ov.horizon = 3;
  auto p = parse_presentation("catrep-presentation 1\ncategory oi\nhorizon 6\ngen a deg 1\n", ov);
  CHECK(p.category.kind() == Kind::FI);
  CHECK(p.horizon == 3);
}

TEST_CASE("decorated categories need a group") {
  auto p = parse_presentation("catrep-presentation 1\ncategory oi_g\ngroup Z/2\ngen a deg 1\n");
  CHECK(p.category.label_count() == 2);
  CHECK(from_presentation(p, PrimeField(5), 3).module->dims() == std::vector<std::size_t>{0, 2, 4, 6});
  expect_error("catrep-presentation 1\ncategory fi_g\ngen a deg 1\n", 1, 1);
}

TEST_CASE("parse errors carry line and column") {
  expect_error("", 1, 1);
  expect_error("catrep 1\n", 1, 1);
  expect_error("catrep-presentation 2\n", 1, 22);
  expect_error("catrep-presentation 1\ncategory xx\n", 2, 10);
  expect_error("catrep-presentation 1\ncategory oi\ngen a deg x\n", 3, 11);
  expect_error("catrep-presentation 1\ncategory oi\ngen a deg 1\ngen a deg 2\n", 4, 5);
  expect_error("catrep-presentation 1\ncategory oi\ngen a deg 1\nrel 2: 1->2:[3]@a\n", 4, 8);
  expect_error("catrep-presentation 1\ncategory oi\ngen a deg 1\nrel 2: 1->2:[2]@b\n", 4, 8);
  expect_error("catrep-presentation 1\ncategory oi\ngen a deg 1\nrel 3: 1->2:[2]@a\n", 4, 8);
  expect_error("catrep-presentation 1\ncategory oi\ngen a deg 1\nrel 2: 1->2:[2]@a +\n", 4, 20);
  expect_error("catrep-presentation 1\ncategory oi\ngen a deg 1\nfield q\n", 4, 1);
  expect_error("catrep-presentation 1\ncategory oi\nfield fp:4\n", 3, 7);
  expect_error("catrep-presentation 1\ncategory oi\ngen a deg 1\nrel 2: x*1->2:[2]@a\n", 4, 8);
}

TEST_CASE("normalization merges like terms and drops zeros") {
  auto p = parse_presentation(
      "catrep-presentation 1\ncategory oi\ngen a deg 1\ngen b deg 1\n"
      "rel 2: 1->2:[2]@b + 2*1->2:[2]@a + -1*1->2:[2]@b + 1->2:[1]@a\n"
      "rel 1: 1->1:[1]@a + -1*1->1:[1]@a\n");
  auto n = normalized(p);
  REQUIRE(n.relations.size() == 1);
  REQUIRE(n.relations[0].terms.size() == 2);
  CHECK(n.relations[0].terms[0].morphism.images == std::vector<std::uint32_t>{1});
  CHECK(n.relations[0].terms[1].coefficient == 2);
  CHECK(write_presentation(p) ==
        "catrep-presentation 1\ncategory oi\ngen a deg 1\ngen b deg 1\nrel 2: 1*1->2:[1]@a + 2*1->2:[2]@a\n");
}

TEST_CASE("written presentations re-parse to the same module") {
  for (const auto& cat : {Category(Kind::OI), Category(Kind::FI), Category(Kind::FI_G, Group::cyclic(2))}) {
    for (const char* field : {"q", "fp:7"}) {
      auto spec = FieldSpec::parse(field);
      for (auto p : random_corpus(cat, spec, 3, 10)) {
        p.field = spec;
        p.horizon = 4;
        auto text = write_presentation(p);
        auto back = parse_presentation(text);
        CHECK(write_presentation(back) == text);
        with_field(spec, [&](auto f) {
          auto a = from_presentation(p, f, 4).module;
          auto b = from_presentation(back, f, 4).module;
          CHECK(*a == *b);
        });
      }
    }
  }
}
