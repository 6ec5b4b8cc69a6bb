#include "doctest.h"

#include <set>

#include "gpq/admissible.hpp"
#include "gpq/error.hpp"

using namespace gpq;

namespace {

const Ring& F4() { return Ring::finite_field(2, 2); }
const Ring& FT() { return Ring::funcfield2(); }
const Ring& HQ() { return Ring::quaternions(); }
Scalar tt(const char* s) { return parse_scalar(FT(), s); }
Scalar hq(const char* s) { return parse_scalar(HQ(), s); }

}  // namespace

TEST_CASE("pair validation") {
  CHECK_NOTHROW(AdmissiblePair::validate(HQ(), AntiAuto::conjugation(), hq("-1")));
  CHECK_NOTHROW(AdmissiblePair::validate(Ring::finite_field(5), AntiAuto::identity(), Ring::finite_field(5).one()));
  CHECK_NOTHROW(AdmissiblePair::validate(F4(), AntiAuto::frobenius(1), F4().generator()));
  CHECK_THROWS_WITH_AS(AdmissiblePair::validate(Ring::finite_field(5), AntiAuto::identity(),
                                                Ring::finite_field(5).from_int(2)),
                       doctest::Contains("eps^sigma"), Error);
  // conjugation with eps = i: i^σ i = 1 but σ² = id differs from conjugation by i
  CHECK_THROWS_AS(AdmissiblePair::validate(HQ(), AntiAuto::conjugation(), hq("i")), Error);
}

TEST_CASE("lower subgroup by enumeration over F_4") {
  auto p = AdmissiblePair::validate(F4(), AntiAuto::frobenius(1), F4().one());
  std::set<std::uint32_t> image;
  for (const Scalar& s : F4().elements()) image.insert((s - p.apply_sigma(s)).code());
  for (const Scalar& t : F4().elements()) CHECK(p.in_lower(t) == (image.count(t.code()) == 1));
  CHECK(p.in_lower(F4().one()));
  CHECK(!p.in_lower(F4().generator()));
  CHECK(p.lower().rank() == 1);
}

TEST_CASE("quaternion lower subgroup is the centre") {
  auto p = AdmissiblePair::validate(HQ(), AntiAuto::conjugation(), hq("-1"));
  CHECK(p.in_lower(hq("3/2")));
  CHECK(!p.in_lower(hq("i")));
  CHECK(p.in_upper(hq("5")));
  CHECK(!p.in_upper(hq("j")));
  CHECK(p.canonical(hq("7 + i - 2k")) == hq("i - 2k"));
}

TEST_CASE("upper subgroup membership") {
  auto p = AdmissiblePair::validate(FT(), AntiAuto::identity(), FT().one());
  CHECK(p.in_upper(tt("(t^3+1)/(t+1)^2")));
  const Ring& f5 = Ring::finite_field(5);
  auto p5 = AdmissiblePair::validate(f5, AntiAuto::identity(), f5.one());
  CHECK(!p5.in_upper(f5.from_int(2)));
}

TEST_CASE("trace type") {
  const Ring& f5 = Ring::finite_field(5);
  const Ring& f2 = Ring::finite_field(2);
  CHECK(AdmissiblePair::validate(f5, AntiAuto::identity(), f5.one()).trace_type());
  CHECK(!AdmissiblePair::validate(f2, AntiAuto::identity(), f2.one()).trace_type());
  CHECK(AdmissiblePair::validate(F4(), AntiAuto::frobenius(1), F4().one()).trace_type());
  CHECK(!AdmissiblePair::validate(FT(), AntiAuto::identity(), FT().one()).trace_type());
  CHECK(AdmissiblePair::validate(HQ(), AntiAuto::conjugation(), hq("-1")).trace_type());
}

TEST_CASE("circ action") {
  auto p = AdmissiblePair::validate(FT(), AntiAuto::identity(), FT().one());
  CosetElement t(p, tt("t"));
  CHECK(circ(t, tt("t+1")).rep() == tt("t^3+t"));
  CHECK(circ(t, FT().zero()).is_zero());
  CHECK(circ(t, FT().one()) == t);
}

TEST_CASE("scale_pair") {
  auto p = AdmissiblePair::validate(F4(), AntiAuto::frobenius(1), F4().one());
  Scalar w = F4().generator();
  CHECK(scale_pair(F4().one(), p) == p);
  CHECK(scale_pair(w, p).epsilon() == w * w);
  CHECK(scale_pair(w.inv(), scale_pair(w, p)) == p);
  auto h = AdmissiblePair::validate(HQ(), AntiAuto::conjugation(), hq("-1"));
  auto h2 = scale_pair(hq("2"), h);
  CHECK(h2.epsilon() == hq("-1"));
  CHECK(h2.sigma() == AntiAuto::conjugation());
  CHECK_THROWS_AS(scale_pair(F4().zero(), p), Error);
}

TEST_CASE("closed subgroup membership and reduction") {
  auto p = AdmissiblePair::validate(FT(), AntiAuto::identity(), FT().one());
  auto r = ClosedSubgroup::generated(p, {FT().one()});
  CHECK(r.kind() == ClosedSubgroup::Kind::generated);
  CHECK(r.contains(tt("t^2")));
  CHECK(!r.contains(tt("t")));
  CHECK(r.reduce(tt("t^2+t")) == tt("t"));
  auto z = ClosedSubgroup::zero(p);
  CHECK(z.contains(FT().zero()));
  CHECK(!z.contains(tt("t^2")));
  CHECK(z.reduce(tt("t^2+t")) == tt("t^2+t"));
  auto f = ClosedSubgroup::full(p);
  CHECK(f.contains(tt("t")));
  CHECK(f.reduce(tt("t")).is_zero());
  CHECK(ClosedSubgroup::generated(p, {FT().zero()}).is_zero());
  CHECK(ClosedSubgroup::generated(p, {FT().one(), tt("t")}).is_full());
}

TEST_CASE("codefect grammar round trip") {
  auto p = parse_pair(FT(), "pair(sigma = id, eps = 1)");
  auto r = parse_codefect(p, "codefect(gens = [1, t^2+1])");
  CHECK(r.str() == "codefect(gens = [1, t^2+1])");
  CHECK(parse_codefect(p, "codefect(zero)").is_zero());
  CHECK(parse_codefect(p, "codefect(full)").is_full());
  CHECK_THROWS_AS(parse_codefect(p, "codefect(half)"), ParseError);
}

TEST_CASE("circ coordinates over F_2(t)") {
  auto p = AdmissiblePair::validate(FT(), AntiAuto::identity(), FT().one());
  auto mu = circ_coords(p, {FT().one()}, tt("(t^4+1)/t^2"));
  REQUIRE(mu);
  CHECK((*mu)[0] == tt("(t^2+1)/t"));
  CHECK(!circ_coords(p, {FT().one()}, tt("t")));
  auto b = circ_basis(p, {FT().one(), tt("t^2"), tt("t")});
  CHECK(b.size() == 2);
}
