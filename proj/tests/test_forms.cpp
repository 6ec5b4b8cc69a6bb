#include "doctest.h"

#include "gpq/error.hpp"
#include "gpq/forms.hpp"

using namespace gpq;

namespace {

const Ring& FT() { return Ring::funcfield2(); }
const Ring& HQ() { return Ring::quaternions(); }
Scalar tt(const char* s) { return parse_scalar(FT(), s); }
Scalar hq(const char* s) { return parse_scalar(HQ(), s); }

Mat gram_of(const Ring& r, std::vector<std::vector<const char*>> rows) {
  Mat g;
  for (auto& row : rows) {
    Vec v;
    for (const char* s : row) v.push_back(parse_scalar(r, s));
    g.push_back(v);
  }
  return g;
}

Vec vec_of(const Ring& r, std::vector<const char*> xs) {
  Vec v;
  for (const char* s : xs) v.push_back(parse_scalar(r, s));
  return v;
}

GenPseudoQuadraticForm quaternion_form() {
  auto p = AdmissiblePair::validate(HQ(), AntiAuto::conjugation(), hq("-1"));
  Mat g = gram_of(HQ(), {{"0", "1", "0", "0"}, {"-1", "0", "0", "0"}, {"0", "0", "0", "1"}, {"0", "0", "-1", "0"}});
  return GenPseudoQuadraticForm(p, g, zero_vec(HQ(), 4), ClosedSubgroup::zero(p));
}

GenPseudoQuadraticForm ft_hyperbolic() {
  auto p = AdmissiblePair::validate(FT(), AntiAuto::identity(), FT().one());
  return GenPseudoQuadraticForm(p, gram_of(FT(), {{"0", "1"}, {"1", "0"}}), zero_vec(FT(), 2),
                                ClosedSubgroup::generated(p, {FT().one()}));
}

}  // namespace

TEST_CASE("sesquilinear evaluation") {
  auto p = AdmissiblePair::validate(FT(), AntiAuto::identity(), FT().one());
  SesquilinearForm f(p, gram_of(FT(), {{"0", "1"}, {"1", "0"}}));
  CHECK(f.eval(vec_of(FT(), {"1", "0"}), vec_of(FT(), {"0", "1"})).is_one());
  Vec x = vec_of(FT(), {"t^2+1", "1/t"});
  CHECK(f.eval(x, x).is_zero());
  auto q = quaternion_form();
  CHECK(q.f().eval(vec_of(HQ(), {"1", "0", "0", "0"}), vec_of(HQ(), {"0", "i", "0", "0"})) == hq("i"));
}

TEST_CASE("reflexivity") {
  const Ring& f5 = Ring::finite_field(5);
  auto p5 = AdmissiblePair::validate(f5, AntiAuto::identity(), f5.one());
  CHECK(check_reflexive(p5, gram_of(f5, {{"1", "2"}, {"2", "3"}})));
  CHECK(!check_reflexive(p5, gram_of(f5, {{"0", "1"}, {"0", "0"}})));
  CHECK_THROWS_WITH_AS(SesquilinearForm(p5, gram_of(f5, {{"0", "1"}, {"0", "0"}})), doctest::Contains("(2,1)"),
                       Error);
  const Ring& f2 = Ring::finite_field(2);
  auto pm = AdmissiblePair::validate(f2, AntiAuto::identity(), -f2.one());
  CHECK(check_reflexive(pm, gram_of(f2, {{"0", "1"}, {"1", "0"}})));
}

TEST_CASE("radical") {
  auto p = AdmissiblePair::validate(FT(), AntiAuto::identity(), FT().one());
  CHECK(radical(SesquilinearForm(p, gram_of(FT(), {{"0", "1"}, {"1", "0"}}))).empty());
  auto rad = radical(SesquilinearForm(p, gram_of(FT(), {{"0", "1", "0"}, {"1", "0", "0"}, {"0", "0", "0"}})));
  REQUIRE(rad.size() == 1);
  CHECK(rad[0] == unit_vec(FT(), 3, 2));
}

TEST_CASE("trace-valued criterion") {
  const Ring& f2 = Ring::finite_field(2);
  auto p2 = AdmissiblePair::validate(f2, AntiAuto::identity(), f2.one());
  CHECK(is_trace_valued(p2, gram_of(f2, {{"0", "1"}, {"1", "0"}})));
  CHECK(!is_trace_valued(p2, gram_of(f2, {{"1", "0"}, {"0", "1"}})));
  const Ring& f3 = Ring::finite_field(3);
  auto p3 = AdmissiblePair::validate(f3, AntiAuto::identity(), f3.one());
  CHECK(is_trace_valued(p3, gram_of(f3, {{"1", "2"}, {"2", "1"}})));
  CHECK_THROWS_WITH_AS(GenPseudoQuadraticForm(p2, gram_of(f2, {{"1", "0"}, {"0", "1"}}), zero_vec(f2, 2),
                                              ClosedSubgroup::zero(p2)),
                       doctest::Contains("(1,1)"), Error);
}

TEST_CASE("quaternion form values") {
  auto q = quaternion_form();
  CHECK(q.eval(vec_of(HQ(), {"1", "0", "0", "0"})).is_zero());
  CHECK(q.eval(vec_of(HQ(), {"i", "i", "0", "0"})).is_zero());
  CHECK(q.eval(vec_of(HQ(), {"1", "i", "0", "0"})) == hq("i"));
  CHECK(!is_singular(q, vec_of(HQ(), {"1", "i", "0", "0"})));
  auto f = sesquilinearization(q);
  CHECK(f.gram()[1][0] == hq("-1"));
}

TEST_CASE("F_2(t) hyperbolic with codefect K^2") {
  auto q = ft_hyperbolic();
  CHECK(!q.eval(vec_of(FT(), {"1", "t"})).is_zero());
  CHECK(q.eval(vec_of(FT(), {"1", "t^2"})).is_zero());
  CHECK(is_singular(q, vec_of(FT(), {"1", "t^2"})));
  CHECK(is_singular(q, zero_vec(FT(), 2)));
  CHECK(!is_trivial(q));
  CHECK(sesquilinearization(q).gram() == q.gram());
}

TEST_CASE("triviality") {
  auto p = AdmissiblePair::validate(FT(), AntiAuto::identity(), FT().one());
  GenPseudoQuadraticForm full(p, gram_of(FT(), {{"0", "1"}, {"1", "0"}}), zero_vec(FT(), 2), ClosedSubgroup::full(p));
  CHECK(is_trivial(full));
  CHECK_THROWS_WITH_AS(sesquilinearization(full), doctest::Contains("full"), Error);
  GenPseudoQuadraticForm zero(p, zero_mat(FT(), 2, 2), zero_vec(FT(), 2), ClosedSubgroup::zero(p));
  CHECK(is_trivial(zero));
}

TEST_CASE("facilitating form on a symplectic basis") {
  const Ring& f2 = Ring::finite_field(2);
  auto p = AdmissiblePair::validate(f2, AntiAuto::identity(), f2.one());
  Mat g = gram_of(f2, {{"0", "1", "0", "0"}, {"1", "0", "0", "0"}, {"0", "0", "0", "1"}, {"0", "0", "1", "0"}});
  GenPseudoQuadraticForm q(p, g, zero_vec(f2, 4), ClosedSubgroup::full(p));
  Basis e;
  for (std::size_t i = 0; i < 4; ++i) e.push_back(unit_vec(f2, 4, i));
  Vec x = vec_of(f2, {"1", "1", "0", "0"});
  CHECK(facilitating_eval(q, e, x, x).is_one());
  CHECK(facilitating_eval(q, e, e[0], e[0]).is_zero());
}

TEST_CASE("difference map on basis vectors") {
  auto q = ft_hyperbolic();
  Basis e{vec_of(FT(), {"1", "0"}), vec_of(FT(), {"0", "1"})};
  Basis ep{vec_of(FT(), {"1", "t^2"}), vec_of(FT(), {"0", "1"})};
  for (const Vec& x : {e[0], e[1], vec_of(FT(), {"t", "1/(t+1)"})}) {
    auto d = difference_map(q, e, ep, x);
    CHECK(d.direct == d.closed);
    CHECK(q.codefect().contains(d.direct));
    CHECK(difference_map(q, e, e, x).direct.is_zero());
  }
}

TEST_CASE("scaling and automorphisms") {
  const Ring& f4 = Ring::finite_field(2, 2);
  auto p = AdmissiblePair::validate(f4, AntiAuto::frobenius(1), f4.one());
  Mat g = gram_of(f4, {{"0", "1"}, {"1", "0"}});
  GenPseudoQuadraticForm q(p, g, zero_vec(f4, 2), ClosedSubgroup::zero(p));
  Scalar w = f4.generator();
  auto s = scale_form(w, q);
  CHECK(s.pair().epsilon() == w * w);
  CHECK(same_form(scale_form(w.inv(), s), q));
  CHECK(same_form(scale_form(f4.one(), q), q));
  CHECK(same_form(apply_automorphism(0, q), q));
  auto pw = AdmissiblePair::validate(f4, AntiAuto::frobenius(1), w);
  GenPseudoQuadraticForm qw(pw, gram_of(f4, {{"0", "1"}, {"w", "0"}}), zero_vec(f4, 2), ClosedSubgroup::zero(pw));
  CHECK_THROWS_WITH_AS(apply_automorphism(1, qw), doctest::Contains("epsilon"), Error);
}
