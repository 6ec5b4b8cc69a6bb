#include "doctest.h"

#include "gpq/builtins.hpp"
#include "gpq/error.hpp"
#include "gpq/io.hpp"

using namespace gpq;

TEST_CASE("ring grammar") {
  CHECK(&parse_ring("field(2, 2)") == &Ring::finite_field(2, 2));
  CHECK(&parse_ring("field(9)") == &Ring::finite_field(3, 2));
  CHECK(&parse_ring(" funcfield2(t) ") == &Ring::funcfield2());
  CHECK(&parse_ring("quaternions()") == &Ring::quaternions());
  CHECK_THROWS_AS(parse_ring("field(6)"), ParseError);
  CHECK_THROWS_AS(parse_ring("field(4, 1)"), ParseError);
  CHECK_THROWS_AS(parse_ring("reals()"), ParseError);
}

TEST_CASE("form text round trip") {
  for (const auto& q : {funcfield_hyperbolic_form(), quaternion_form(), hermitian_form(Ring::finite_field(2, 2), 3),
                        symplectic_form(Ring::finite_field(3), 2)}) {
    auto back = parse_form(form_to_text(q));
    CHECK(same_form(back, q));
    auto again = parse_form(form_to_json(q).dump());
    CHECK(same_form(again, q));
    CHECK(dump(form_to_json(again)) == dump(form_to_json(q)));
  }
}

TEST_CASE("multi-line brackets, comments and wrapped JSON") {
  auto q = parse_form(
      "# comment\n"
      "ring = field(5, 1)\n"
      "pair = pair(sigma = id, eps = 1)   # trailing\n"
      "dim = 2\n"
      "gram = [[2, 1],\n"
      "        [1, 0]]\n"
      "values = [1, 0]\n");
  CHECK(q.dim() == 2);
  CHECK(q.codefect().is_zero());
  CHECK(q.values()[0].is_one());
  Json wrapped{{"form", form_to_json(q)}, {"provenance", {{"op", "cover"}}}};
  CHECK(same_form(parse_form(wrapped.dump()), q));
}

TEST_CASE("form diagnostics") {
  const char* base = "ring = field(5, 1)\npair = pair(sigma = id, eps = 1)\ndim = 2\n";
  try {
    parse_form(std::string(base) + "gram = [[0, 1], [1, x]]\n");
    FAIL("accepted");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
  }
  CHECK_THROWS_WITH_AS(parse_form(std::string(base) + "gram = [[0, 1], [3, 0]]\n"), doctest::Contains("(2,1)"), Error);
  CHECK_THROWS_WITH_AS(parse_form(std::string(base) + "gram = [[0, 1], [1, 0]]\ncolour = red\n"),
                       doctest::Contains("colour"), ParseError);
  CHECK_THROWS_AS(parse_form("ring = field(5, 1)\ndim = 2\ngram = [[0, 1], [1, 0]]\n"), ParseError);
  // diagonal must be trace-valued: for (id, -1) over F_5 it must vanish
  CHECK_THROWS_WITH_AS(
      parse_form("ring = field(5, 1)\npair = pair(sigma = id, eps = -1)\ndim = 2\ngram = [[1, 1], [-1, 0]]\n"),
      doctest::Contains("(1,1)"), Error);
}

TEST_CASE("geometry files") {
  const Ring& f2 = Ring::finite_field(2);
  auto g = geometry_of(polar_space(hyperbolic_form(f2, 2)), f2);
  auto text = geometry_to_text(g);
  auto back = parse_geometry(text);
  CHECK(back.dim == 4);
  CHECK(back.points == g.points);
  CHECK(back.lines == g.lines);
  CHECK_THROWS_AS(parse_geometry("ambient = field(2, 1), dim = 3\npoint 1 0\n"), ParseError);
  CHECK_THROWS_AS(parse_geometry("ambient = field(2, 1), dim = 3\nplane 1 0 0\n"), ParseError);
  try {
    parse_geometry("ambient = field(2, 1), dim = 2\npoint 1 1\nline 0 x\n");
    FAIL("accepted");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
}

TEST_CASE("reports are key-sorted with exact strings") {
  const Ring& f4 = Ring::finite_field(2, 2);
  auto j = polar_to_json(polar_space(hermitian_form(f4, 4)));
  std::string s = dump(j);
  CHECK(s.find("\"dim\"") < s.find("\"lines\""));
  CHECK(s.find("\"lines\"") < s.find("\"num_lines\""));
  CHECK(j["num_points"] == 45);
  CHECK(j["points"][0][0].is_string());
}
