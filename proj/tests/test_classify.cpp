#include "doctest.h"

#include "gpq/builtins.hpp"
#include "gpq/classify.hpp"
#include "gpq/error.hpp"

using namespace gpq;

namespace {

EmbeddedGeometry geometry_from(const GenPseudoQuadraticForm& q) {
  PolarSpace s = q.codefect().is_full() ? polar_space(q.f()) : polar_space(q);
  return geometry_of(s, q.ring());
}

}  // namespace

TEST_CASE("catalogue forms are recovered up to proportionality") {
  for (const auto& nf : finite_catalogue()) {
    CAPTURE(nf.name);
    auto g = geometry_from(nf.form);
    auto c = classify(g);
    bool alt = nf.form.codefect().is_full();
    CHECK((c.verdict == Verdict::alternating) == alt);
    if (alt) {
      CHECK(proportional_gram(nf.form.gram(), c.f.gram()).has_value());
    } else {
      CHECK(proportional_test(nf.form, c.form).has_value());
      CHECK(c.gr.r.is_zero());
    }
    CHECK(c.gr.e.size() == g.dim);
  }
}

TEST_CASE("hull of finite polar spaces") {
  const Ring& f2 = Ring::finite_field(2);
  const Ring& f3 = Ring::finite_field(3);
  {
    auto g = geometry_from(symplectic_form(f2, 2));
    auto h = hull(classify(g), g);
    CHECK(h.branch == "char2-extension");
    CHECK(h.form.dim() == 5);
    for (const Vec& v : h.lifted) CHECK(is_singular(h.form, v));
    auto s = polar_space(h.form);
    CHECK(s.points.size() == g.points.size());
    CHECK(s.lines.size() == g.lines.size());
  }
  {
    auto g = geometry_from(symplectic_form(f3, 2));
    auto h = hull(classify(g), g);
    CHECK(h.branch == "identity");
    CHECK(h.lifted == g.points);
  }
  {
    auto g = geometry_from(hyperbolic_form(f2, 2));
    auto h = hull(classify(g), g);
    CHECK(h.branch == "identity");
  }
}

TEST_CASE("geometry validation") {
  const Ring& f2 = Ring::finite_field(2);
  auto g = geometry_from(parabolic_form(f2, 2));
  validate_geometry(g);

  auto short_line = g;
  short_line.lines[0].pop_back();
  CHECK_THROWS_WITH_AS(validate_geometry(short_line), doctest::Contains("line 0"), Error);

  auto dup = g;
  dup.points.push_back(dup.points[0]);
  CHECK_THROWS_WITH_AS(validate_geometry(dup), doctest::Contains("repeated"), Error);

  auto no_lines = g;
  no_lines.lines.clear();
  CHECK_THROWS_WITH_AS(validate_geometry(no_lines), doctest::Contains("rank"), Error);

  // dropping a line breaks one-or-all for points on it
  auto missing = g;
  missing.lines.erase(missing.lines.begin());
  CHECK_THROWS_WITH_AS(validate_geometry(missing), doctest::Contains("one-or-all"), Error);

  auto grid5 = geometry_from(hyperbolic_form(Ring::finite_field(5), 2));
  try {
    validate_geometry(grid5);
    FAIL("grid accepted");
  } catch (const Error& e) {
    CHECK(e.code() == "grid-unsupported");
  }
  validate_geometry(geometry_from(hyperbolic_form(Ring::finite_field(3), 2)));
}

TEST_CASE("proportionality") {
  const Ring& f4 = Ring::finite_field(2, 2);
  auto h = hermitian_form(f4, 4);
  Scalar w = f4.generator();
  auto hw = scale_form(w, h);
  auto k = proportional_test(h, hw);
  REQUIRE(k);
  CHECK(*k == w);
  CHECK(!proportional_test(h, hyperbolic_form(f4, 2)));
}
