#include "gpq/quotcov.hpp"

#include "gpq/error.hpp"
#include "gpq/polar.hpp"
#include "gpq/random.hpp"

namespace gpq {

namespace {

// B-dimension of the ∘-span of one nonzero element of K̄∘; zero when K̄∘ = 0
std::size_t circ_line_dim(const AdmissiblePair& p) {
  for (const Vec& b : p.upper().basis()) {
    Scalar s = from_base_coords(p.ring(), b);
    if (!p.canonical(s).is_zero()) return ClosedSubgroup::generated(p, {s}).base_dim();
  }
  return 0;
}

Vec concat(const Vec& a, const Vec& b) {
  Vec out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Scalar g_e_of(const GenPseudoQuadraticForm& q, const Basis& e, const Vec& x) {
  auto lam = coordinates(e, x);
  if (!lam) fail("basis-not-spanning", "vector outside the span of the basis");
  SesquilinearForm f = q.f();
  Scalar acc = q.ring().zero();
  for (std::size_t i = 0; i < e.size(); ++i) {
    if ((*lam)[i].is_zero()) continue;
    Scalar ls = q.pair().apply_sigma((*lam)[i]);
    for (std::size_t j = i + 1; j < e.size(); ++j)
      if (!(*lam)[j].is_zero()) acc += ls * f.eval(e[i], e[j]) * (*lam)[j];
  }
  return acc;
}

}  // namespace

bool admits_quotient(const GenPseudoQuadraticForm& q, const Basis& u) {
  if (u.empty()) return true;
  for (const Vec& v : u)
    if (!is_zero(mat_vec(q.gram(), v))) return false;
  Span su(q.dim(), u);
  if (su.rank() == 0) return true;
  if (q.codefect().is_full()) return false;
  std::size_t d1 = circ_line_dim(q.pair());
  ClosedSubgroup r = q.codefect();
  for (const Vec& v : su.basis()) {
    ClosedSubgroup next = r.with({q.raw(v)});
    if (next.is_full() || next.base_dim() != r.base_dim() + d1) return false;
    r = next;
  }
  return true;
}

Vec Quotient::project(const Vec& x) const {
  Span su(x.size(), u);
  Vec w = su.reduce(x);
  Vec out;
  for (std::size_t k : keep) out.push_back(w[k]);
  return out;
}

Quotient quotient_form(const GenPseudoQuadraticForm& q, const Basis& u) {
  if (!admits_quotient(q, u))
    fail("quotient-not-defined", "U must lie in Rad(f) and meet Rad(q) trivially");
  Span su(q.dim(), u);
  std::vector<bool> pivot(q.dim(), false);
  for (std::size_t p : su.pivots()) pivot[p] = true;
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < q.dim(); ++i)
    if (!pivot[i]) keep.push_back(i);
  std::vector<Scalar> extra;
  for (const Vec& v : su.basis()) extra.push_back(q.raw(v));
  GenPseudoQuadraticForm r = restrict_coords(q, keep);
  GenPseudoQuadraticForm form(q.pair(), r.gram(), r.values(), q.codefect().with(extra), r.space());
  return Quotient{form, su.basis(), keep};
}

CoverSpec::CoverSpec(const GenPseudoQuadraticForm& q, const std::vector<Scalar>& s_gens,
                     const std::vector<Scalar>& t_gens, const Basis& e)
    : q_(q),
      s_(ClosedSubgroup::generated(q.pair(), s_gens)),
      t_(ClosedSubgroup::generated(q.pair(), t_gens)),
      s_gens_(s_gens),
      t_gens_(t_gens),
      e_(e) {
  if (is_trivial(q)) fail("trivial-form", "covers of trivial forms are not supported");
  const ClosedSubgroup& r = q.codefect();
  if (s_.is_full() || t_.is_full() || !r.contains(s_) || !r.contains(t_))
    fail("not-a-direct-sum", "S and T must lie inside the codefect");
  ClosedSubgroup sum = s_.joined(t_);
  if (!sum.same(r)) fail("not-a-direct-sum", "S + T differs from the codefect");
  if (s_.base_dim() + t_.base_dim() != r.base_dim()) fail("not-a-direct-sum", "S and T intersect nontrivially");
  check_singular_basis(q, e);
  s_basis_ = circ_basis(q.pair(), s_gens);
  std::vector<Vec> cols;
  for (const Vec& v : s_.preimage().basis()) cols.push_back(v);
  s_cols_ = cols.size();
  for (const Vec& v : t_.preimage().basis()) cols.push_back(v);
  decomp_ = from_columns(cols, base_degree(q.ring()));
}

Vec CoverSpec::theta(const Scalar& r) const {
  if (s_basis_.empty()) return {};
  auto sol = solve(decomp_, base_coords(r));
  if (!sol) fail("not-in-codefect", "element " + r.str() + " is outside S + T");
  const Ring& b = decomp_[0][0].ring();
  Vec sc = zero_vec(b, decomp_.size());
  for (std::size_t k = 0; k < s_cols_; ++k)
    for (std::size_t i = 0; i < sc.size(); ++i) sc[i] += decomp_[i][k] * (*sol)[k];
  Scalar s = from_base_coords(q_.ring(), sc);
  auto mu = circ_coords(q_.pair(), s_basis_, s);
  if (!mu) fail("internal", "projection onto S left the span of its basis");
  return *mu;
}

Scalar CoverSpec::s_element(const Vec& mu) const {
  Scalar acc = q_.ring().zero();
  for (std::size_t k = 0; k < s_basis_.size(); ++k) acc += q_.pair().twist(s_basis_[k], mu[k]);
  return acc;
}

GenPseudoQuadraticForm cover_form(const CoverSpec& spec) {
  const GenPseudoQuadraticForm& q = spec.base();
  const Ring& r = q.ring();
  std::size_t n = q.dim(), m = spec.s_basis().size();
  Mat g = zero_mat(r, n + m, n + m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g[i][j] = q.gram()[i][j];
  std::vector<Scalar> vals;
  for (std::size_t i = 0; i < n; ++i) vals.push_back(g_e_of(q, spec.basis(), unit_vec(r, n, i)));
  VectorSpaceSpec sp = q.space();
  sp.dim = n + m;
  for (std::size_t k = 0; k < m; ++k) {
    vals.push_back(spec.s_basis()[k]);
    sp.labels.push_back("s" + std::to_string(k + 1));
    sp.twist.push_back(spec.s_basis()[k]);
  }
  return GenPseudoQuadraticForm(q.pair(), g, vals, spec.t(), sp);
}

GenPseudoQuadraticForm cover_form(const GenPseudoQuadraticForm& q, const std::vector<Scalar>& s_gens,
                                  const std::vector<Scalar>& t_gens, const Basis& e) {
  return cover_form(CoverSpec(q, s_gens, t_gens, e));
}

Vec lift_point(const CoverSpec& spec, const Vec& x) {
  if (!is_singular(spec.base(), x)) fail("not-singular", "only singular vectors lift");
  Vec mu = spec.theta(g_e_of(spec.base(), spec.basis(), x));
  for (Scalar& s : mu) s = -s;
  return concat(x, mu);
}

Vec drop_cover(const CoverSpec& spec, const Vec& v) {
  return Vec(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(spec.base().dim()));
}

Basis find_singular_basis(const GenPseudoQuadraticForm& q, std::uint64_t seed) {
  const Ring& r = q.ring();
  std::size_t n = q.dim();
  Span got(n);
  Basis out;
  auto take = [&](const Vec& v) {
    if (is_singular(q, v) && got.add(v)) out.push_back(v);
  };
  for (std::size_t i = 0; i < n; ++i) take(unit_vec(r, n, i));
  if (out.size() == n) return out;
  if (r.finite()) {
    for (const Vec& v : enumerate_points(q)) {
      take(v);
      if (out.size() == n) return out;
    }
  } else {
    Rng rng(seed);
    SampleBounds small{2, false, 2};
    for (int attempt = 0; attempt < 20000 && out.size() < n; ++attempt) {
      Vec v = random_vec(r, n, rng, small);
      if (!got.contains(v)) take(v);
    }
    if (out.size() == n) return out;
  }
  fail("no-singular-basis", "could not find a basis of singular vectors");
}

CoverSpec dominant_spec(const GenPseudoQuadraticForm& q, const std::optional<Basis>& e) {
  if (is_trivial(q)) fail("trivial-form", "a trivial form has no dominant cover");
  Basis basis = e ? *e : find_singular_basis(q);
  return CoverSpec(q, q.codefect().generators(), {}, basis);
}

GenPseudoQuadraticForm dominant_cover(const GenPseudoQuadraticForm& q, const std::optional<Basis>& e) {
  if (is_trivial(q)) fail("trivial-form", "a trivial form has no dominant cover");
  if (q.codefect().is_zero()) return q;
  return cover_form(dominant_spec(q, e));
}

Mat basis_change_iso(const CoverSpec& spec, const Basis& e, const Basis& e_prime) {
  const GenPseudoQuadraticForm& q = spec.base();
  check_singular_basis(q, e);
  check_singular_basis(q, e_prime);
  const Ring& r = q.ring();
  std::size_t n = q.dim(), m = spec.s_basis().size();
  Mat d = identity_mat(r, n + m);
  if (m == 0) return d;
  for (std::size_t j = 0; j < n; ++j) {
    auto dv = difference_map(q, e, e_prime, unit_vec(r, n, j));
    if (dv.direct != dv.closed) fail("invariant-violation", "difference map disagrees with its closed form");
    Vec mu = spec.theta(dv.direct.rep());
    for (std::size_t k = 0; k < m; ++k) d[n + k][j] = mu[k];
  }
  return d;
}

Reconstruction reconstruct_cover(const GenPseudoQuadraticForm& qt, const Basis& u, const std::optional<Basis>& e,
                                 std::uint64_t seed, int samples) {
  if (qt.codefect().is_full()) fail("trivial-form", "the form has full codefect");
  Quotient quot = quotient_form(qt, u);
  const GenPseudoQuadraticForm& q = quot.form;
  std::vector<Scalar> s_gens;
  for (const Vec& v : quot.u) s_gens.push_back(qt.raw(v));
  Basis basis = e ? *e : find_singular_basis(q, seed);
  CoverSpec spec(q, s_gens, qt.codefect().generators(), basis);
  GenPseudoQuadraticForm cover = cover_form(spec);

  const Ring& r = qt.ring();
  std::size_t n = qt.dim(), w = quot.keep.size(), m = spec.s_basis().size();
  if (m != quot.u.size()) fail("internal", "S basis size differs from dim U");
  Mat alpha = zero_mat(r, w + m, n);
  auto set_col = [&](std::size_t j, const Vec& c) {
    for (std::size_t i = 0; i < w + m; ++i) alpha[i][j] = c[i];
  };
  std::vector<bool> done(n, false);
  // W part: π_U(w) corrected by θ of q̃(w) - g_E(π w, π w), which lies in R̄
  for (std::size_t a = 0; a < w; ++a) {
    std::size_t j = quot.keep[a];
    Vec pw = unit_vec(r, w, a);
    Scalar dlt = qt.raw(unit_vec(r, n, j)) - g_e_of(q, basis, pw);
    set_col(j, concat(pw, spec.theta(dlt)));
    done[j] = true;
  }
  // U part: u_k = std_p + w', so α(std_p) = α(u_k) - α(w')
  const std::vector<std::size_t> piv = Span(n, quot.u).pivots();
  for (std::size_t k = 0; k < quot.u.size(); ++k) {
    Vec col = concat(zero_vec(r, w), spec.theta(qt.raw(quot.u[k])));
    Vec wp = quot.u[k];
    wp[piv[k]] = r.zero();
    Vec img = mat_vec(alpha, wp);
    set_col(piv[k], sub(col, img));
  }
  if (rank(alpha) != n) fail("verification-failed", "reconstruction map is not bijective");
  Rng rng(seed);
  for (int s = 0; s < samples; ++s) {
    Vec v = random_vec(r, n, rng);
    if (qt.eval(v) != cover.eval(mat_vec(alpha, v)))
      fail("verification-failed", "reconstruction map does not carry the form onto the cover");
  }
  return Reconstruction{quot, spec, cover, alpha};
}

}  // namespace gpq
