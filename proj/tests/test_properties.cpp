#include "doctest.h"

#include "gpq/builtins.hpp"
#include "gpq/classify.hpp"
#include "gpq/error.hpp"
#include "gpq/quotcov.hpp"
#include "gpq/random.hpp"
#include "gpq/verify.hpp"

using namespace gpq;

namespace {

std::vector<const Ring*> rings() {
  return {&Ring::finite_field(2, 2), &Ring::finite_field(3, 2), &Ring::finite_field(5), &Ring::funcfield2(),
          &Ring::quaternions()};
}

const Ring& FTR() { return Ring::funcfield2(); }

SampleBounds bounds_for(const Ring& r) { return r.kind() == RingKind::quaternions ? SampleBounds{0, true, 4} : SampleBounds{3, true, 4}; }

std::vector<AdmissiblePair> pairs_for(const Ring& r) {
  std::vector<AdmissiblePair> out;
  if (r.kind() == RingKind::quaternions) {
    out.push_back(AdmissiblePair::validate(r, AntiAuto::conjugation(), -r.one()));
    out.push_back(AdmissiblePair::validate(r, AntiAuto::conjugation(), r.one()));
    return out;
  }
  out.push_back(AdmissiblePair::validate(r, AntiAuto::identity(), r.one()));
  out.push_back(AdmissiblePair::validate(r, AntiAuto::identity(), -r.one()));
  if (r.finite() && r.n() == 2) out.push_back(AdmissiblePair::validate(r, AntiAuto::frobenius(1), r.one()));
  return out;
}

std::vector<GenPseudoQuadraticForm> sample_forms() {
  std::vector<GenPseudoQuadraticForm> out{quaternion_form(), funcfield_hyperbolic_form()};
  for (const auto& nf : finite_catalogue())
    if (!nf.form.codefect().is_full()) out.push_back(nf.form);
  Rng rng(99);
  for (int i = 0; i < 4; ++i) out.push_back(random_ft_instance(rng, 2 + i % 3, i % 2).q);
  return out;
}

}  // namespace

TEST_CASE("ring axioms on random elements") {
  Rng rng(1);
  for (const Ring* r : rings()) {
    CAPTURE(r->spec());
    auto b = bounds_for(*r);
    for (int s = 0; s < 60; ++s) {
      Scalar a = random_scalar(*r, rng, b), x = random_scalar(*r, rng, b), c = random_scalar(*r, rng, b);
      CHECK((a + x) + c == a + (x + c));
      CHECK((a * x) * c == a * (x * c));
      CHECK(a * (x + c) == a * x + a * c);
      CHECK((x + c) * a == x * a + c * a);
      CHECK(a - a == r->zero());
      if (!a.is_zero()) {
        CHECK((a * a.inv()).is_one());
        CHECK((a.inv() * a).is_one());
      }
      if (r->commutative()) CHECK(a * x == x * a);
    }
  }
}

TEST_CASE("anti-automorphisms reverse products and respect sums") {
  Rng rng(2);
  for (const Ring* r : rings())
    for (const auto& p : pairs_for(*r)) {
      auto b = bounds_for(*r);
      for (int s = 0; s < 30; ++s) {
        Scalar a = random_scalar(*r, rng, b), x = random_scalar(*r, rng, b);
        CHECK(p.apply_sigma(a * x) == p.apply_sigma(x) * p.apply_sigma(a));
        CHECK(p.apply_sigma(a + x) == p.apply_sigma(a) + p.apply_sigma(x));
        // σ² is conjugation by ε
        CHECK(p.apply_sigma(p.apply_sigma(a)) * p.epsilon() == p.epsilon() * a);
      }
    }
}

TEST_CASE("lower subgroup sits inside the upper one") {
  Rng rng(3);
  for (const Ring* r : rings())
    for (const auto& p : pairs_for(*r)) {
      CAPTURE(p.str());
      auto b = bounds_for(*r);
      for (int s = 0; s < 30; ++s) {
        Scalar t = random_scalar(*r, rng, b);
        Scalar low = t - p.apply_sigma(t) * p.epsilon();
        CHECK(p.in_lower(low));
        CHECK(p.in_upper(low));
        CHECK(p.canonical(low).is_zero());
        CHECK(p.canonical(t) == p.canonical(t + low));
      }
    }
}

TEST_CASE("circ is an action by right multiplication") {
  Rng rng(4);
  for (const Ring* r : rings())
    for (const auto& p : pairs_for(*r)) {
      auto b = bounds_for(*r);
      for (int s = 0; s < 20; ++s) {
        CosetElement t(p, random_scalar(*r, rng, b)), u(p, random_scalar(*r, rng, b));
        Scalar l = random_scalar(*r, rng, b), m = random_scalar(*r, rng, b);
        CHECK(circ(circ(t, l), m) == circ(t, l * m));
        CHECK(circ(t + u, l) == circ(t, l) + circ(u, l));
        CHECK(circ(t, r->one()) == t);
      }
    }
}

TEST_CASE("Q'1 and Q'2 on sample forms") {
  Rng rng(5);
  for (const auto& q : sample_forms()) {
    CAPTURE(q.pair().str());
    auto b = bounds_for(q.ring());
    SesquilinearForm f = q.f();
    for (int s = 0; s < 100; ++s) {
      Vec x = random_vec(q.ring(), q.dim(), rng, b), y = random_vec(q.ring(), q.dim(), rng, b);
      Scalar l = random_scalar(q.ring(), rng, b);
      CHECK(eval_q(q, scale_right(x, l)) == q.codefect().reduce(circ(eval_q(q, x), l)));
      CHECK(eval_q(q, add(x, y)) - eval_q(q, x) - eval_q(q, y) ==
            q.codefect().reduce(CosetElement(q.pair(), f.eval(x, y))));
      CHECK(f.eval(y, x) == q.pair().apply_sigma(f.eval(x, y)) * q.pair().epsilon());
    }
  }
}

TEST_CASE("scaling commutes with evaluation") {
  Rng rng(6);
  for (const auto& q : sample_forms()) {
    auto b = bounds_for(q.ring());
    Scalar k = random_nonzero(q.ring(), rng, b);
    auto qk = scale_form(k, q);
    for (int s = 0; s < 30; ++s) {
      Vec x = random_vec(q.ring(), q.dim(), rng, b);
      CHECK(qk.codefect().contains(qk.raw(x) - k * q.raw(x)));
      CHECK(is_singular(q, x) == is_singular(qk, x));
    }
  }
}

TEST_CASE("polar spaces satisfy the one-or-all axiom") {
  for (const auto& nf : finite_catalogue()) {
    CAPTURE(nf.name);
    PolarSpace s = nf.form.codefect().is_full() ? polar_space(nf.form.f()) : polar_space(nf.form);
    CHECK_NOTHROW(validate_geometry(geometry_of(s, nf.form.ring())));
    for (const auto& l : s.lines) CHECK(l.size() == nf.form.ring().order() + 1);
    if (!nf.form.codefect().is_full()) CHECK(is_subspace(s, polar_space(nf.form.f())));
  }
}

TEST_CASE("cover radical is the old radical plus S") {
  Rng rng(7);
  for (int i = 0; i < 10; ++i) {
    auto inst = random_ft_instance(rng, 2 + i % 3, 1);
    auto spec = dominant_spec(inst.q, inst.e);
    auto cf = cover_form(spec);
    CHECK(radical(cf.f()).size() == radical(inst.q.f()).size() + spec.s_basis().size());
    // x = e_1 a + e_2 b with g_E(x,x) = a f(e_1,e_2) b = c μ², a nonzero element of R̄
    Scalar f12 = inst.q.f().eval(inst.e[0], inst.e[1]);
    Scalar c = inst.q.codefect().generators()[0];
    for (int s = 0; s < 10 && !f12.is_zero(); ++s) {
      Scalar a = random_nonzero(FTR(), rng, {2, false, 0}), mu = random_nonzero(FTR(), rng, {2, false, 0});
      Scalar bb = (a * f12).inv() * c * mu * mu;
      Vec x = add(scale_right(inst.e[0], a), scale_right(inst.e[1], bb));
      REQUIRE(is_singular(inst.q, x));
      Vec lx = lift_point(spec, x);
      CHECK(!is_zero(Vec(lx.begin() + static_cast<std::ptrdiff_t>(inst.q.dim()), lx.end())));
      CHECK(is_singular(cf, lx));
    }
    for (const Vec& v : inst.e) {
      Vec lv = lift_point(spec, v);
      CHECK(is_singular(cf, lv));
      CHECK(drop_cover(spec, lv) == v);
    }
  }
}

TEST_CASE("codefect of a classified geometry does not depend on the basis") {
  for (const auto& nf : finite_catalogue()) {
    CAPTURE(nf.name);
    PolarSpace s = nf.form.codefect().is_full() ? polar_space(nf.form.f()) : polar_space(nf.form);
    auto g = geometry_of(s, nf.form.ring());
    auto rec = recover_sesquilinear(g);
    auto a = build_gamma_and_r(g, rec.f);
    // reversed greedy scan gives another basis
    Span sp(g.dim);
    Basis e2;
    for (auto it = g.points.rbegin(); it != g.points.rend(); ++it)
      if (sp.add(*it)) e2.push_back(*it);
    auto b = build_gamma_and_r(g, rec.f, e2);
    CHECK(a.r.same(b.r));
    // no point lies in the radical of f
    Span rad(g.dim, radical(rec.f));
    for (const Vec& x : g.points) CHECK(!rad.contains(x));
  }
}

TEST_CASE("hull is idempotent") {
  const Ring& f2 = Ring::finite_field(2);
  auto g = geometry_of(polar_space(symplectic_form(f2, 2).f()), f2);
  auto h = hull(classify(g), g);
  auto g2 = geometry_of(polar_space(h.form), f2);
  auto h2 = hull(classify(g2), g2);
  CHECK(h2.branch == "identity");
  for (const auto& nf : finite_catalogue()) {
    if (nf.form.codefect().is_full()) continue;
    auto gq = geometry_of(polar_space(nf.form), nf.form.ring());
    CHECK(hull(classify(gq), gq).branch == "identity");
  }
}
