#include "doctest.h"

#include <random>

#include "catrep/field.hpp"
#include "catrep/matrix.hpp"

using namespace catrep;

namespace {

template <class F>
Mat<F> make(const F& f, std::vector<std::vector<long long>> rows) {
  Mat<F> m(f, rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = f.from_int(rows[i][j]);
  return m;
}

// All vectors of F_p^n, for brute-force checks.
std::vector<std::vector<std::uint32_t>> all_vectors(std::uint32_t p, std::size_t n) {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> v(n, 0);
  while (true) {
    out.push_back(v);
    std::size_t i = 0;
    while (i < n && ++v[i] == p) v[i++] = 0;
    if (i == n) break;
  }
  return out;
}

}  // namespace

TEST_CASE("prime field arithmetic") {
  PrimeField f(101);
  CHECK(f.add(100, 5) == 4);
  CHECK(f.sub(3, 7) == 97);
  CHECK(f.neg(0) == 0);
  for (std::uint32_t a = 1; a < 101; ++a) CHECK(f.mul(a, f.inv(a)) == 1);
  CHECK(f.from_rational(mpq_class(-3, 2)) == f.mul(f.from_int(-3), f.inv(2)));
  CHECK_THROWS_AS(f.from_rational(mpq_class(1, 101)), FieldError);
  CHECK_THROWS_AS(PrimeField(100), FieldError);
}

TEST_CASE("field specs") {
  CHECK(FieldSpec::parse("q").rational);
  auto s = FieldSpec::parse("fp:7");
  CHECK(!s.rational);
  CHECK(s.prime == 7);
  CHECK(s.to_string() == "fp:7");
  CHECK_THROWS_AS(FieldSpec::parse("fp:9"), FieldError);
  CHECK_THROWS_AS(FieldSpec::parse("fp:"), FieldError);
  CHECK_THROWS_AS(FieldSpec::parse("r"), FieldError);
  CHECK(parse_rational("-6/4") == mpq_class(-3, 2));
  CHECK_THROWS_AS(parse_rational("1/0"), FieldError);
  CHECK_THROWS_AS(parse_rational("1.5"), FieldError);
}

TEST_CASE("rationals stay in lowest terms and the growth guard fires") {
  RationalField q;
  auto x = q.mul(mpq_class(2, 3), mpq_class(3, 4));
  CHECK(x.get_num() == 1);
  CHECK(x.get_den() == 2);
  RationalField small(8);
  CHECK_THROWS_AS(small.mul(mpq_class(255), mpq_class(255)), RationalGrowthError);
}

TEST_CASE("row_reduce examples") {
  RationalField q;
  auto z = row_reduce(Mat<RationalField>(q, 2, 3));
  CHECK(z.pivots.empty());
  CHECK(z.reduced.is_zero());

  auto id = Mat<RationalField>::identity(q, 3);
  auto e = row_reduce(id);
  CHECK(e.reduced == id);
  CHECK(e.pivots == std::vector<std::size_t>{0, 1, 2});

  auto r = row_reduce(make(q, {{1, 2}, {2, 4}}));
  CHECK(r.reduced == make(q, {{1, 2}, {0, 0}}));
  CHECK(r.pivots == std::vector<std::size_t>{0});
}

TEST_CASE("kernel of [1 1] over F_2 by enumeration") {
  PrimeField f(2);
  auto a = make(f, {{1, 1}});
  auto k = kernel_basis(a);
  REQUIRE(k.cols() == 1);
  // Nonzero kernel vectors of [1 1] in F_2^2, found by enumeration.
  std::vector<std::vector<std::uint32_t>> kernel;
  for (auto& v : all_vectors(2, 2))
    if ((v[0] + v[1]) % 2 == 0 && (v[0] || v[1])) kernel.push_back(v);
  REQUIRE(kernel.size() == 1);
  CHECK(k.column(0) == kernel[0]);
  CHECK(kernel_basis(Mat<PrimeField>::identity(f, 3)).cols() == 0);
  CHECK(kernel_basis(Mat<PrimeField>(f, 2, 4)).cols() == 4);
}

TEST_CASE("membership") {
  RationalField q;
  auto x = solve(make(q, {{2}}), Vec<RationalField>{mpq_class(3)});
  REQUIRE(x);
  CHECK((*x)[0] == mpq_class(3, 2));
  CHECK(!solve(Mat<RationalField>(q, 1, 1), Vec<RationalField>{mpq_class(1)}));
  auto b = Vec<RationalField>{mpq_class(5), mpq_class(-7, 3)};
  CHECK(*solve(Mat<RationalField>::identity(q, 2), b) == b);
}

TEST_CASE("complement of span{(1,1)} in F_3^2") {
  PrimeField f(3);
  auto s = make(f, {{1}, {1}});
  auto c = complement_basis(s);
  REQUIRE(c.cols() == 1);
  // The complement vector is outside the span: compare with all multiples of (1,1).
  auto v = c.column(0);
  for (std::uint32_t t = 0; t < 3; ++t) CHECK(!(v[0] == t && v[1] == t));
  CHECK(rank(hstack(s, c)) == 2);
  CHECK(complement_basis(Mat<PrimeField>::identity(f, 2)).cols() == 0);
  CHECK(complement_basis(Mat<PrimeField>(f, 2, 1)).cols() == 2);
}

TEST_CASE("random matrices: idempotence, rank-nullity, complements") {
  std::mt19937_64 rng(7);
  PrimeField f(5);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t rows = rng() % 6, cols = rng() % 6;
    Mat<PrimeField> a(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) a(i, j) = (rng() % 3 == 0) ? 0 : rng() % 5;
    auto e = row_reduce(a);
    CHECK(row_reduce(e.reduced).reduced == e.reduced);
    auto k = kernel_basis(a);
    CHECK(e.rank() + k.cols() == cols);
    CHECK(multiply(a, k).is_zero());
    CHECK(rank(k) == k.cols());
    CHECK(rank(a) <= std::min(rows, cols));
    auto c = complement_basis(a);
    CHECK(rank(hstack(a, c)) == rows);

    EchelonSpace<PrimeField> space(f, rows);
    for (std::size_t j = 0; j < cols; ++j) space.insert(a.column(j));
    CHECK(space.dim() == e.rank());
    auto canon = span_basis(a);
    CHECK(space.rref().reduced == transpose(canon));
  }
}
