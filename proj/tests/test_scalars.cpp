#include "doctest.h"

#include "gpq/error.hpp"
#include "gpq/scalars.hpp"

using namespace gpq;

namespace {

// F_2[x]/(x^2+x+1) by hand, bit 0 = 1, bit 1 = x
unsigned f4_mul(unsigned a, unsigned b) {
  unsigned prod = 0;
  for (int i = 0; i < 2; ++i)
    if (b >> i & 1) prod ^= a << i;
  if (prod & 4) prod ^= 0b111;
  return prod;
}

Scalar tt(const char* s) { return parse_scalar(Ring::funcfield2(), s); }
Scalar hq(const char* s) { return parse_scalar(Ring::quaternions(), s); }

}  // namespace

TEST_CASE("F_4 multiplication table matches x^2+x+1") {
  const Ring& f4 = Ring::finite_field(2, 2);
  for (unsigned a = 0; a < 4; ++a)
    for (unsigned b = 0; b < 4; ++b) CHECK((f4.element(a) * f4.element(b)).code() == f4_mul(a, b));
  Scalar w = f4.generator();
  CHECK(w * w == w + f4.one());
  CHECK((w * w).str() == "w+1");
}

TEST_CASE("prime field arithmetic") {
  const Ring& f5 = Ring::finite_field(5);
  CHECK((f5.from_int(3) * f5.from_int(4)).str() == "2");
  CHECK(f5.from_int(3).inv() == f5.from_int(2));
  CHECK(-f5.from_int(1) == f5.from_int(4));
  CHECK_THROWS_AS(f5.one() / f5.zero(), Error);
}

TEST_CASE("larger fields have primitive generators") {
  for (auto [p, n] : {std::pair{2u, 4u}, {3u, 2u}, {2u, 8u}, {5u, 2u}, {3u, 3u}, {2u, 9u}}) {
    const Ring& r = Ring::finite_field(p, n);
    Scalar w = r.generator();
    Scalar x = w;
    std::uint32_t ord = 1;
    while (!x.is_one()) {
      x = x * w;
      ++ord;
    }
    CHECK(ord == r.order() - 1);
  }
}

TEST_CASE("quaternion relations") {
  Scalar i = hq("i"), j = hq("j"), k = hq("k");
  CHECK(i * j == k);
  CHECK(j * i == -k);
  CHECK(i * i == hq("-1"));
  CHECK(hq("1 + 2i - 3/4k").str() == "1 + 2i - 3/4k");
  CHECK(hq("(1+i)").inv() * hq("1+i") == hq("1"));
  CHECK(conjugate(i) == -i);
}

TEST_CASE("rational function field arithmetic") {
  CHECK(tt("1/t") + tt("1/(t+1)") == tt("1/(t^2+t)"));
  CHECK((tt("1/t") + tt("1/(t+1)")).str() == "1/(t^2+t)");
  CHECK(tt("(t^3+t)/(t^2+1)") == tt("t"));
  CHECK(tt("t^2+t") / tt("t") == tt("t+1"));
  Scalar a = tt("(t^3+1)/(t^2+t+1)");
  CHECK((a - a).is_zero());
  CHECK((a / a).is_one());
}

TEST_CASE("degree cap raises overflow") {
  Scalar t = tt("t");
  CHECK_NOTHROW(t.pow(64));
  CHECK_THROWS_WITH_AS(t.pow(65), doctest::Contains("degree"), Error);
}

TEST_CASE("decompose_char2 examples") {
  auto [a0, a1] = decompose_char2(tt("t^3+t^2"));
  CHECK(a0 == tt("t^2"));
  CHECK(a1 == tt("t^2"));
  auto [b0, b1] = decompose_char2(tt("1/t"));
  CHECK(b0.is_zero());
  CHECK(b1 == tt("1/t^2"));
  auto [c0, c1] = decompose_char2(tt("1"));
  CHECK(c0.is_one());
  CHECK(c1.is_zero());
}

TEST_CASE("anti-automorphisms") {
  const Ring& f4 = Ring::finite_field(2, 2);
  Scalar w = f4.generator();
  CHECK(AntiAuto::frobenius(1).apply(w) == w * w);
  CHECK(AntiAuto::identity().apply(w) == w);
  CHECK(AntiAuto::conjugation().apply(hq("i")) == hq("-i"));
  CHECK(AntiAuto::frobenius(2).normalized(f4) == AntiAuto::identity());
  CHECK(!AntiAuto::conjugation().compatible(f4));
  CHECK(parse_antiauto(f4, "frob^1") == AntiAuto::frobenius(1));
}

TEST_CASE("square roots in characteristic 2") {
  const Ring& f8 = Ring::finite_field(2, 3);
  for (const Scalar& x : f8.elements()) CHECK(sqrt_char2(x * x) == x);
  CHECK(sqrt_char2(tt("(t^4+1)/t^2")) == tt("(t^2+1)/t"));
  CHECK_THROWS_AS(sqrt_char2(tt("t")), Error);
}
