#include "doctest.h"

#include "gpq/builtins.hpp"
#include "gpq/error.hpp"
#include "gpq/quotcov.hpp"
#include "gpq/random.hpp"

using namespace gpq;

namespace {

const Ring& FT() { return Ring::funcfield2(); }
Vec ft(std::vector<const char*> xs) {
  Vec v;
  for (const char* s : xs) v.push_back(parse_scalar(FT(), s));
  return v;
}

// x1 x2 + t x3^2 over F_2(t), codefect F_2(t^2): not a dominant form
GenPseudoQuadraticForm ft_three() {
  auto p = AdmissiblePair::validate(FT(), AntiAuto::identity(), FT().one());
  Mat g = zero_mat(FT(), 3, 3);
  g[0][1] = g[1][0] = FT().one();
  Vec vals = zero_vec(FT(), 3);
  vals[2] = FT().generator();
  return GenPseudoQuadraticForm(p, g, vals, ClosedSubgroup::generated(p, {FT().one()}));
}

}  // namespace

TEST_CASE("dominant cover of the F_2(t) hyperbolic line") {
  auto q = funcfield_hyperbolic_form();
  auto spec = dominant_spec(q);
  auto c = cover_form(spec);
  CHECK(c.dim() == 3);
  CHECK(c.codefect().is_zero());
  CHECK(!is_trivial(c));
  for (auto x : {ft({"t", "t"}), ft({"1", "t^2+1"}), ft({"t", "t^3"}), ft({"1/t", "t^3+t"})}) {
    REQUIRE(is_singular(q, x));
    Vec lx = lift_point(spec, x);
    CHECK(is_singular(c, lx));
    CHECK(drop_cover(spec, lx) == x);
  }
  CHECK_THROWS_WITH_AS(lift_point(spec, ft({"1", "t"})), doctest::Contains("singular"), Error);
}

TEST_CASE("quotient of the cover gives the form back") {
  for (const auto& q : {funcfield_hyperbolic_form(), ft_three()}) {
    auto c = dominant_cover(q);
    std::size_t n = q.dim();
    Basis u{unit_vec(FT(), c.dim(), n)};
    CHECK(admits_quotient(c, u));
    CHECK(!admits_quotient(c, {unit_vec(FT(), c.dim(), 0)}));
    auto quot = quotient_form(c, u);
    CHECK(quot.form.dim() == n);
    CHECK(same_form(quot.form, q));
    auto rec = reconstruct_cover(c, u);
    CHECK(rank(rec.alpha) == c.dim());
  }
}

TEST_CASE("reconstruction through a skew complement") {
  auto q = ft_three();
  auto c = dominant_cover(q);
  // move U off the coordinate axes
  Rng rng(11);
  Mat a = random_invertible(FT(), c.dim(), rng, SampleBounds{2, false, 2}, 4);
  auto inv = inverse(a);
  REQUIRE(inv);
  auto moved = change_basis(c, [&] {
    Basis b;
    for (std::size_t j = 0; j < c.dim(); ++j) {
      Vec col;
      for (std::size_t i = 0; i < c.dim(); ++i) col.push_back(a[i][j]);
      b.push_back(col);
    }
    return b;
  }());
  // preimage of the tagged axis
  Basis u{mat_vec(*inv, unit_vec(FT(), c.dim(), c.dim() - 1))};
  CHECK(radical(moved.f()).size() == 2);
  CHECK(admits_quotient(moved, u));
  auto rec = reconstruct_cover(moved, u, std::nullopt, 3, 48);
  CHECK(rec.cover.dim() == moved.dim());
  CHECK(same_form(rec.quotient.form, rec.spec.base()));
}

TEST_CASE("changing the singular basis is an isomorphism of covers") {
  auto q = ft_three();
  Basis e{ft({"1", "0", "0"}), ft({"0", "1", "0"}), ft({"t", "1", "1"})};
  Basis e2{ft({"1", "0", "0"}), ft({"1", "1", "0"}), ft({"1", "t", "1"})};
  check_singular_basis(q, e);
  check_singular_basis(q, e2);
  CoverSpec s1(q, q.codefect().generators(), {}, e), s2(q, q.codefect().generators(), {}, e2);
  auto c1 = cover_form(s1), c2 = cover_form(s2);
  Mat d = basis_change_iso(s1, e, e2);
  Rng rng(5);
  for (int k = 0; k < 40; ++k) {
    Vec v = random_vec(FT(), c1.dim(), rng);
    CHECK(c1.eval(v) == c2.eval(mat_vec(d, v)));
  }
  for (int k = 0; k < 10; ++k) {
    Vec x = random_vec(FT(), 3, rng);
    auto dv = difference_map(q, e, e2, x);
    CHECK(dv.direct == dv.closed);
  }
}

TEST_CASE("cover errors") {
  const Ring& f3 = Ring::finite_field(3);
  auto s = symplectic_form(f3, 1);
  CHECK_THROWS_WITH_AS(dominant_cover(s), doctest::Contains("trivial"), Error);
  auto h = hyperbolic_form(f3, 1);
  CHECK(same_form(dominant_cover(h), h));
  auto q = funcfield_hyperbolic_form();
  Basis bad{ft({"1", "t"}), ft({"0", "1"})};
  CHECK_THROWS_AS(CoverSpec(q, q.codefect().generators(), {}, bad), Error);
}
