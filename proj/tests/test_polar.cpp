#include "doctest.h"

#include <functional>
#include <set>

#include "gpq/builtins.hpp"
#include "gpq/error.hpp"
#include "gpq/polar.hpp"

using namespace gpq;

namespace {

// brute force over F_p with plain integers
using IV = std::vector<int>;

std::vector<IV> prime_points(int p, int n) {
  std::vector<IV> out;
  int total = 1;
  for (int i = 0; i < n; ++i) total *= p;
  for (int c = 1; c < total; ++c) {
    IV v(n);
    int x = c;
    for (int i = 0; i < n; ++i) v[i] = x % p, x /= p;
    int lead = 0;
    while (v[lead] == 0) ++lead;
    if (v[lead] == 1) out.push_back(v);
  }
  return out;
}

IV norm(IV v, int p) {
  int lead = 0;
  while (v[lead] == 0) ++lead;
  int inv = 1;
  while (v[lead] * inv % p != 1) ++inv;
  for (int& x : v) x = x * inv % p;
  return v;
}

struct Counts {
  std::size_t points = 0, lines = 0;
};

Counts oracle(int p, int n, const std::function<int(const IV&)>& q) {
  std::vector<IV> pts;
  for (const IV& v : prime_points(p, n))
    if (q(v) % p == 0) pts.push_back(v);
  std::set<IV> sing(pts.begin(), pts.end());
  std::set<std::set<IV>> lines;
  for (std::size_t a = 0; a < pts.size(); ++a)
    for (std::size_t b = a + 1; b < pts.size(); ++b) {
      std::set<IV> l{pts[a]};
      bool ok = true;
      for (int c = 0; c < p && ok; ++c) {
        IV v(n);
        for (int i = 0; i < n; ++i) v[i] = (c * pts[a][i] + pts[b][i]) % p;
        IV w = norm(v, p);
        ok = sing.count(w) > 0;
        l.insert(w);
      }
      if (ok) lines.insert(l);
    }
  return {pts.size(), lines.size()};
}

}  // namespace

TEST_CASE("projective point order") {
  const Ring& f3 = Ring::finite_field(3);
  auto pts = projective_points(f3, 3);
  CHECK(pts.size() == 13);
  CHECK(projective_size(f3, 3) == 13);
  std::set<std::vector<std::uint32_t>> keys;
  for (const Vec& v : pts) {
    CHECK(projective_normalize(v) == v);
    keys.insert(point_key(v));
  }
  CHECK(keys.size() == 13);
}

TEST_CASE("quadric enumeration against brute force") {
  for (int p : {2, 3}) {
    const Ring& r = Ring::finite_field(p);
    auto hyp = polar_space(hyperbolic_form(r, 2));
    auto o = oracle(p, 4, [](const IV& x) { return x[0] * x[1] + x[2] * x[3]; });
    CHECK(hyp.points.size() == o.points);
    CHECK(hyp.lines.size() == o.lines);
    CHECK(hyp.rank == 2);

    auto par = polar_space(parabolic_form(r, 2));
    o = oracle(p, 5, [](const IV& x) { return x[0] * x[1] + x[2] * x[3] + x[4] * x[4]; });
    CHECK(par.points.size() == o.points);
    CHECK(par.lines.size() == o.lines);
    CHECK(par.rank == 2);
  }
  auto q5 = polar_space(hyperbolic_form(Ring::finite_field(2), 3));
  CHECK(q5.points.size() == 35);
  CHECK(q5.rank == 3);
  auto e5 = polar_space(elliptic_form(Ring::finite_field(2), 3));
  auto o = oracle(2, 6, [](const IV& x) { return x[0] * x[1] + x[2] * x[3] + x[4] * x[4] + x[4] * x[5] + x[5] * x[5]; });
  CHECK(e5.points.size() == o.points);
  CHECK(e5.lines.size() == o.lines);
}

TEST_CASE("small generalized quadrangles") {
  const Ring& f2 = Ring::finite_field(2);
  auto hyp = polar_space(hyperbolic_form(f2, 2));
  CHECK(hyp.points.size() == 9);
  CHECK(hyp.lines.size() == 6);
  auto w = polar_space(symplectic_form(f2, 2).f());
  CHECK(w.points.size() == 15);
  CHECK(w.lines.size() == 15);
  CHECK(w.rank == 2);
  auto par = polar_space(parabolic_form(f2, 2));
  CHECK(par.points.size() == 15);
  // Q(4,2) and W(3,2) are dual, not isomorphic, but both have 15 lines
  CHECK(par.lines.size() == 15);
  const Ring& f4 = Ring::finite_field(2, 2);
  auto h = polar_space(hermitian_form(f4, 4));
  CHECK(h.points.size() == 45);
  CHECK(h.lines.size() == 27);
}

TEST_CASE("every line has q+1 points") {
  const Ring& f3 = Ring::finite_field(3);
  auto s = polar_space(parabolic_form(f3, 2));
  for (const auto& l : s.lines) CHECK(l.size() == 4);
  for (std::size_t i = 0; i < s.points.size(); ++i) CHECK(s.index_of(s.points[i]) == i);
}

TEST_CASE("subspaces and radicals") {
  const Ring& f2 = Ring::finite_field(2);
  auto q = parabolic_form(f2, 2);
  auto rq = radical_of_q(q);
  CHECK(rq.rad_q.empty());
  // in char 2 the parabolic Gram has a 1-dim radical
  CHECK(radical(q.f()).size() == 1);
  CHECK(nondegenerate_rank(polar_space(q)) == 2);
  CHECK(is_subspace(polar_space(q), polar_space(q.f())));
  CHECK_THROWS_AS(is_subspace(polar_space(q), polar_space(hyperbolic_form(f2, 2))), Error);
}
