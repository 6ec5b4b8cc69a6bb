#include "gpq/verify.hpp"

#include <algorithm>
#include <chrono>
#include <set>

#include "gpq/builtins.hpp"
#include "gpq/classify.hpp"
#include "gpq/error.hpp"
#include "gpq/quotcov.hpp"

namespace gpq {

namespace {

const Ring& FT() { return Ring::funcfield2(); }

struct Tally {
  SuiteResult& r;
  void check(bool ok, const std::string& what) {
    ++r.checks;
    if (!ok) {
      ++r.failures;
      if (r.detail.empty()) r.detail = what;
    }
  }
};

int degree_of(const Scalar& s) {
  const Frac2& f = s.fraction();
  return std::max(f.num.degree(), f.den.degree());
}

std::vector<Scalar> codefect_gens(const GenPseudoQuadraticForm& q) { return q.codefect().generators(); }

PolarSpace space_of(const GenPseudoQuadraticForm& q) {
  return q.codefect().is_full() ? polar_space(q.f()) : polar_space(q);
}

Basis random_singular_basis(const GenPseudoQuadraticForm& q, const std::vector<Vec>& pts, Rng& rng) {
  std::vector<Vec> shuffled = pts;
  std::shuffle(shuffled.begin(), shuffled.end(), rng);
  Span sp(q.dim());
  Basis out;
  for (const Vec& v : shuffled)
    if (sp.add(v)) out.push_back(scale_right(v, random_nonzero(q.ring(), rng)));
  if (out.size() != q.dim()) fail("no-singular-basis", "singular points do not span");
  return out;
}

bool same_up_to_sampling(const GenPseudoQuadraticForm& a, const GenPseudoQuadraticForm& b, Rng& rng, int samples,
                         Tally& t, const std::string& what) {
  bool ok = a.codefect().same(b.codefect()) && same_form(a, b);
  t.check(ok, what + ": forms differ");
  for (int s = 0; s < samples; ++s) {
    Vec x = random_vec(a.ring(), a.dim(), rng);
    bool eq = eval_q(a, x) == eval_q(b, x);
    t.check(eq, what + ": values differ at a sampled vector");
    ok = ok && eq;
  }
  return ok;
}

// --- suites ---------------------------------------------------------------

void round_trip(const GenPseudoQuadraticForm& q, const Basis& e, const std::vector<Scalar>& s_gens,
                const std::vector<Scalar>& t_gens, Rng& rng, Tally& t, const std::string& what) {
  CoverSpec spec(q, s_gens, t_gens, e);
  auto c = cover_form(spec);
  Basis u;
  for (std::size_t k = q.dim(); k < c.dim(); ++k) u.push_back(unit_vec(q.ring(), c.dim(), k));
  t.check(admits_quotient(c, u), what + ": cover does not admit the quotient");
  auto quot = quotient_form(c, u);
  same_up_to_sampling(quot.form, q, rng, 500, t, what);
}

void suite_round_trip(Rng& rng, Tally& t) {
  for (int i = 0; i < 100; ++i) {
    std::size_t dim = 2 + static_cast<std::size_t>(i % 3);
    std::size_t rank = i % 4 == 0 ? 0 : 1;
    auto inst = random_ft_instance(rng, dim, rank);
    std::string what = "random form " + std::to_string(i);
    auto gens = codefect_gens(inst.q);
    round_trip(inst.q, inst.e, gens, {}, rng, t, what);
    if (!gens.empty()) {
      // same S̄, different generator list, hence a different S̄ basis
      Scalar mu = random_nonzero(FT(), rng, {2, false, 2});
      round_trip(inst.q, inst.e, {gens[0] * mu * mu}, {}, rng, t, what + " (rescaled S)");
      round_trip(inst.q, inst.e, {}, gens, rng, t, what + " (S = 0)");
    }
  }
  auto fh = funcfield_hyperbolic_form();
  round_trip(fh, find_singular_basis(fh), codefect_gens(fh), {}, rng, t, "funcfield-hyperbolic");
  auto qh = quaternion_form();
  round_trip(qh, find_singular_basis(qh), {}, {}, rng, t, "quaternion");
  for (const auto& nf : finite_catalogue()) {
    if (is_trivial(nf.form)) continue;
    round_trip(nf.form, find_singular_basis(nf.form), {}, {}, rng, t, nf.name);
  }
}

void suite_forms_theorem(Rng& rng, Tally& t) {
  std::vector<GenPseudoQuadraticForm> forms{funcfield_hyperbolic_form(), quaternion_form()};
  for (int i = 0; i < 20; ++i) forms.push_back(random_ft_instance(rng, 2 + i % 3, 1).q);
  for (const auto& nf : finite_catalogue()) forms.push_back(nf.form);
  for (const auto& q : forms) {
    if (q.codefect().is_full()) continue;
    for (const Scalar& g : q.codefect().generators())
      t.check(q.pair().in_upper(g), "codefect generator " + g.str() + " is outside K^{sigma,eps}");
  }
  for (const auto& nf : finite_catalogue()) {
    if (nf.form.codefect().is_full()) continue;
    SesquilinearForm f = nf.form.f();
    for (const Vec& x : enumerate_points(nf.form)) t.check(f.eval(x, x).is_zero(), nf.name + ": singular point not isotropic");
  }
}

void suite_classification(Tally& t) {
  for (const auto& nf : finite_catalogue()) {
    auto g = geometry_of(space_of(nf.form), nf.form.ring());
    auto c = classify(g);
    bool alt = nf.form.codefect().is_full();
    t.check((c.verdict == Verdict::alternating) == alt, nf.name + ": wrong verdict");
    if (alt)
      t.check(proportional_gram(nf.form.gram(), c.f.gram()).has_value(), nf.name + ": recovered f not proportional");
    else
      t.check(proportional_test(nf.form, c.form).has_value(), nf.name + ": recovered q not proportional");
  }
}

void suite_char2_hull(Tally& t) {
  const Ring& f2 = Ring::finite_field(2);
  auto w = symplectic_form(f2, 2);
  auto sf = polar_space(w.f());
  auto g = geometry_of(sf, f2);
  auto h = hull(classify(g), g);
  t.check(h.branch == "char2-extension", "W(3,2) hull branch is " + h.branch);
  t.check(h.form.dim() == 5, "hull is not 5-dimensional");
  t.check(h.form.codefect().is_zero() && is_trivial(h.form) == false, "hull is not a quadratic form");
  auto s = polar_space(h.form);
  t.check(s.points.size() == 15, "hull has " + std::to_string(s.points.size()) + " points, expected 15");
  t.check(s.lines.size() == 15, "hull has " + std::to_string(s.lines.size()) + " lines, expected 15");
  auto drop = [](const Vec& v) { return projective_normalize(Vec(v.begin(), v.end() - 1)); };
  std::set<std::vector<std::uint32_t>> image;
  for (const Vec& v : s.points) {
    Vec x = drop(v);
    t.check(!is_zero(x) && sf.has_point(x), "projection leaves S_f");
    image.insert(point_key(x));
  }
  t.check(image.size() == sf.points.size() && image.size() == s.points.size(), "projection is not a point bijection");
  std::set<std::set<std::size_t>> lines_f, lines_img;
  for (const auto& l : sf.lines) lines_f.insert(std::set<std::size_t>(l.begin(), l.end()));
  for (const auto& l : s.lines) {
    std::set<std::size_t> img;
    for (std::size_t i : l) img.insert(sf.index_of(drop(s.points[i])));
    lines_img.insert(img);
  }
  t.check(lines_img == lines_f, "projection is not a line bijection");
  std::set<std::vector<std::uint32_t>> lifted;
  for (const Vec& v : h.lifted) lifted.insert(point_key(v));
  std::set<std::vector<std::uint32_t>> hull_pts;
  for (const Vec& v : s.points) hull_pts.insert(point_key(v));
  t.check(lifted == hull_pts, "lifted points differ from the hull's singular points");
}

void suite_enumeration(Tally& t) {
  for (const auto& lock : enumeration_locks()) {
    PolarSpace s = lock.build();
    t.check(s.points.size() == lock.points,
            lock.name + ": " + std::to_string(s.points.size()) + " points, expected " + std::to_string(lock.points));
    if (lock.lines != PolarSpace::npos)
      t.check(s.lines.size() == lock.lines,
              lock.name + ": " + std::to_string(s.lines.size()) + " lines, expected " + std::to_string(lock.lines));
    t.check(s.rank == lock.rank, lock.name + ": rank " + std::to_string(s.rank) + ", expected " + std::to_string(lock.rank));
  }
}

void suite_quaternion(Rng& rng, Tally& t) {
  auto q = quaternion_form();
  const Ring& h = q.ring();
  SampleBounds b{0, true, 6};
  for (int s = 0; s < 1000; ++s) {
    Vec x = random_vec(h, 4, rng, b), y = random_vec(h, 4, rng, b);
    Scalar lam = random_scalar(h, rng, b);
    t.check(eval_q(q, scale_right(x, lam)) == q.codefect().reduce(circ(eval_q(q, x), lam)), "(Q'1) fails");
    CosetElement lhs = eval_q(q, add(x, y)) - eval_q(q, x) - eval_q(q, y);
    t.check(lhs == q.codefect().reduce(CosetElement(q.pair(), q.f().eval(x, y))), "(Q'2) fails");
  }
  auto f = sesquilinearization(q, rng(), 64);
  t.check(check_reflexive(f.pair(), f.gram()), "sesquilinearization is not reflexive");
  t.check(f.pair().epsilon() == -h.one(), "sesquilinearization has eps != -1");
  for (int s = 0; s < 200; ++s) {
    Scalar a = random_scalar(h, rng, b);
    if (s % 4 == 0) a = Scalar::quat(h, a.quaternion().c[0], 0, 0, 0);
    const auto& c = a.quaternion().c;
    bool real = c[1] == 0 && c[2] == 0 && c[3] == 0;
    t.check(q.pair().in_lower(a) == real, "K_{sigma,eps} membership differs from the real-part test at " + a.str());
  }
}

struct DiffInstance {
  GenPseudoQuadraticForm q;
  Basis e;
  std::vector<Vec> points;  // finite fields only
};

void suite_difference_map(Rng& rng, Tally& t) {
  std::vector<DiffInstance> inst;
  for (int i = 0; i < 6; ++i) {
    auto fi = random_ft_instance(rng, 2 + i % 3, i % 2);
    inst.push_back({fi.q, fi.e, {}});
  }
  for (unsigned p : {2u, 3u}) {
    const Ring& r = Ring::finite_field(p);
    for (const auto& q : {hyperbolic_form(r, 2), parabolic_form(r, 2), elliptic_form(r, 3)}) {
      auto pts = enumerate_points(q);
      inst.push_back({q, random_singular_basis(q, pts, rng), pts});
    }
  }
  for (int s = 0; s < 200; ++s) {
    const DiffInstance& d = inst[static_cast<std::size_t>(s) % inst.size()];
    Basis e2 = d.points.empty() ? perturb_singular_basis(d.q, d.e, rng) : random_singular_basis(d.q, d.points, rng);
    Vec x = random_vec(d.q.ring(), d.q.dim(), rng);
    auto fwd = difference_map(d.q, d.e, e2, x);
    auto back = difference_map(d.q, e2, d.e, x);
    t.check(fwd.direct == fwd.closed, "direct and closed difference maps differ");
    t.check(back.direct == -fwd.direct, "delta(E',E) != -delta(E,E')");
  }
}

void suite_basis_change(Rng& rng, Tally& t) {
  std::vector<FtInstance> inst;
  for (int i = 0; i < 5; ++i) inst.push_back(random_ft_instance(rng, 2 + i % 3, 1));
  auto fh = funcfield_hyperbolic_form();
  inst.push_back({fh, find_singular_basis(fh)});
  for (std::size_t i = 0; i < inst.size(); ++i) {
    const auto& q = inst[i].q;
    Basis e2 = perturb_singular_basis(q, inst[i].e, rng);
    CoverSpec s1(q, codefect_gens(q), {}, inst[i].e), s2(q, codefect_gens(q), {}, e2);
    auto c1 = cover_form(s1), c2 = cover_form(s2);
    Mat d = basis_change_iso(s1, inst[i].e, e2);
    t.check(rank(d) == c1.dim(), "Delta is not invertible");
    for (int s = 0; s < 500; ++s) {
      Vec v = random_vec(FT(), c1.dim(), rng);
      t.check(eval_q(c1, v) == eval_q(c2, mat_vec(d, v)), "instance " + std::to_string(i) + ": q_E(v) != q_E'(Delta v)");
    }
  }
}

void suite_trace_type(Tally& t) {
  std::size_t seen = 0;
  for (const auto& nf : finite_catalogue()) {
    auto g = geometry_of(space_of(nf.form), nf.form.ring());
    auto c = classify(g);
    if (!c.f.pair().trace_type()) continue;
    ++seen;
    t.check(c.gr.r.is_zero() || c.gr.r.is_full(), nf.name + ": intermediate codefect " + c.gr.r.str());
  }
  t.check(seen > 0, "no trace-type geometry was classified");
}

const char* suite_names[kSuiteCount] = {
    "cover/quotient round trip",   "codefect inside K^{sigma,eps}; singular implies isotropic",
    "classification soundness",    "char-2 hull of W(3,2)",
    "enumeration regressions",     "quaternion exceptional form",
    "difference-map closed form",  "basis-change isomorphism of covers",
    "trace-type dichotomy"};

const double suite_budgets[kSuiteCount] = {60, 0, 120, 0, 10, 0, 0, 0, 0};

}  // namespace

FtInstance random_ft_instance(Rng& rng, std::size_t n, std::size_t codefect_rank, int max_degree) {
  require(codefect_rank <= 1, "invalid-argument", "codefect rank 2 is the full group over F_2(t)");
  const Ring& r = FT();
  auto pair = AdmissiblePair::validate(r, AntiAuto::identity(), r.one());
  for (;;) {
    Mat h = zero_mat(r, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) h[i][j] = h[j][i] = random_scalar(r, rng, {2, false, 0});
    if (h[0][1].is_zero()) h[0][1] = h[1][0] = r.one();
    Mat m = random_invertible(r, n, rng, {1, false, 0}, 3);
    Mat mi = *inverse(m);
    Mat g = mat_mul(transpose(mi), mat_mul(h, mi));
    Vec vals;
    for (std::size_t i = 0; i < n; ++i) {
      Scalar acc = r.zero();
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = k + 1; l < n; ++l) acc += mi[k][i] * h[k][l] * mi[l][i];
      vals.push_back(acc);
    }
    int deg = 0;
    for (const Vec& row : g)
      for (const Scalar& s : row) deg = std::max(deg, degree_of(s));
    for (const Scalar& s : vals) deg = std::max(deg, degree_of(s));
    if (deg > max_degree) continue;
    auto cod = codefect_rank == 0 ? ClosedSubgroup::zero(pair)
                                  : ClosedSubgroup::generated(pair, {random_nonzero(r, rng, {2, false, 0})});
    GenPseudoQuadraticForm q(pair, g, vals, cod);
    Basis e;
    for (std::size_t j = 0; j < n; ++j) {
      Vec col;
      for (std::size_t i = 0; i < n; ++i) col.push_back(m[i][j]);
      e.push_back(col);
    }
    return {q, e};
  }
}

Basis perturb_singular_basis(const GenPseudoQuadraticForm& q, const Basis& e, Rng& rng) {
  const Ring& r = q.ring();
  Basis out = e;
  std::shuffle(out.begin(), out.end(), rng);
  SampleBounds small{1, false, 2};
  for (Vec& v : out) v = scale_right(v, random_nonzero(r, rng, small));
  SesquilinearForm f = q.f();
  for (int step = 0; step < 3; ++step) {
    std::size_t i = rng() % out.size(), j = rng() % out.size();
    if (i == j) continue;
    Scalar fij = f.eval(out[i], out[j]);
    Scalar lam;
    if (fij.is_zero())
      lam = random_scalar(r, rng, small);
    else if (!q.codefect().is_zero() && !q.codefect().generators().empty()) {
      Scalar mu = random_nonzero(r, rng, small);
      // f(e_i,e_j)λ lands in R̄
      lam = fij.inv() * q.codefect().pair().apply_sigma(mu) * q.codefect().generators()[0] * mu;
    } else
      continue;
    Vec cand = add(out[i], scale_right(out[j], lam));
    if (is_singular(q, cand)) out[i] = cand;
  }
  check_singular_basis(q, out);
  return out;
}

std::vector<EnumerationLock> enumeration_locks() {
  const Ring& f2 = Ring::finite_field(2);
  return {
      {"Q+(3,2)", [&f2] { return polar_space(hyperbolic_form(f2, 2)); }, 9, 6, 2},
      {"W(3,2)", [&f2] { return polar_space(symplectic_form(f2, 2).f()); }, 15, 15, 2},
      {"Q+(5,2)", [&f2] { return polar_space(hyperbolic_form(f2, 3)); }, 35, PolarSpace::npos, 3},
      {"Q(4,2)", [&f2] { return polar_space(parabolic_form(f2, 2)); }, 15, PolarSpace::npos, 2},
  };
}

SuiteResult run_suite(int id, std::uint64_t seed) {
  require(id >= 1 && id <= kSuiteCount, "invalid-argument", "suite must be 1.." + std::to_string(kSuiteCount));
  SuiteResult r;
  r.id = id;
  r.name = suite_names[id - 1];
  r.budget = suite_budgets[id - 1];
  Tally t{r};
  Rng rng(seed * 1000003u + static_cast<std::uint64_t>(id));
  auto start = std::chrono::steady_clock::now();
  try {
    switch (id) {
      case 1: suite_round_trip(rng, t); break;
      case 2: suite_forms_theorem(rng, t); break;
      case 3: suite_classification(t); break;
      case 4: suite_char2_hull(t); break;
      case 5: suite_enumeration(t); break;
      case 6: suite_quaternion(rng, t); break;
      case 7: suite_difference_map(rng, t); break;
      case 8: suite_basis_change(rng, t); break;
      case 9: suite_trace_type(t); break;
    }
  } catch (const Error& e) {
    t.check(false, e.code() + ": " + e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace gpq
