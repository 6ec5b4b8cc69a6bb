#include "gpq/forms.hpp"

#include "gpq/error.hpp"
#include "gpq/random.hpp"

namespace gpq {

namespace {

std::string entry(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

void check_square(const Mat& g, const Ring& r) {
  for (const Vec& row : g) {
    require(row.size() == g.size(), "dimension-mismatch", "Gram matrix is not square");
    for (const Scalar& s : row) require(&s.ring() == &r, "ring-mismatch", "Gram entry outside the pair's ring");
  }
}

void check_dim(const Vec& x, std::size_t n) {
  require(x.size() == n, "dimension-mismatch",
          "vector of length " + std::to_string(x.size()) + " in a space of dimension " + std::to_string(n));
}

}  // namespace

VectorSpaceSpec VectorSpaceSpec::standard(const Ring& r, std::size_t n) {
  VectorSpaceSpec s;
  s.ring = &r;
  s.dim = n;
  for (std::size_t i = 0; i < n; ++i) s.labels.push_back("e" + std::to_string(i + 1));
  s.twist.assign(n, std::nullopt);
  return s;
}

std::size_t VectorSpaceSpec::tagged_count() const {
  std::size_t c = 0;
  for (const auto& t : twist) c += t.has_value();
  return c;
}

bool check_reflexive(const AdmissiblePair& p, const Mat& g) {
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j)
      if (g[j][i] != p.apply_sigma(g[i][j]) * p.epsilon()) return false;
  return true;
}

bool is_trace_valued(const AdmissiblePair& p, const Mat& g) {
  Scalar meps = -p.epsilon();
  for (std::size_t i = 0; i < g.size(); ++i) {
    // G_ii = s - s^σ(-ε) for some s, i.e. G_ii ∈ K_{σ,-ε}
    AdmissiblePair neg = AdmissiblePair::validate(p.ring(), p.sigma(), meps);
    if (!neg.in_lower(g[i][i])) return false;
  }
  return true;
}

bool is_trace_valued(const SesquilinearForm& f) { return is_trace_valued(f.pair(), f.gram()); }

bool is_alternating(const SesquilinearForm& f) {
  for (std::size_t i = 0; i < f.dim(); ++i)
    if (!f.gram()[i][i].is_zero()) return false;
  // diagonal zero does not force f(x,x) = 0 unless the cross terms cancel
  const AdmissiblePair& p = f.pair();
  return p.sigma().kind() == AntiAuto::Kind::identity && (-p.epsilon()).is_one();
}

SesquilinearForm::SesquilinearForm(const AdmissiblePair& p, Mat gram) : pair_(p), gram_(std::move(gram)) {
  check_square(gram_, p.ring());
  for (std::size_t i = 0; i < gram_.size(); ++i)
    for (std::size_t j = 0; j < gram_.size(); ++j)
      if (gram_[j][i] != p.apply_sigma(gram_[i][j]) * p.epsilon())
        fail("not-reflexive", "Gram entry " + entry(j, i) + " = " + gram_[j][i].str() + " differs from G" +
                                  entry(i, j) + "^sigma * eps = " + (p.apply_sigma(gram_[i][j]) * p.epsilon()).str());
}

Scalar SesquilinearForm::eval(const Vec& x, const Vec& y) const {
  check_dim(x, dim());
  check_dim(y, dim());
  Scalar acc = ring().zero();
  for (std::size_t i = 0; i < dim(); ++i) {
    if (x[i].is_zero()) continue;
    Scalar xs = pair_.apply_sigma(x[i]);
    for (std::size_t j = 0; j < dim(); ++j)
      if (!gram_[i][j].is_zero() && !y[j].is_zero()) acc += xs * gram_[i][j] * y[j];
  }
  return acc;
}

GenPseudoQuadraticForm::GenPseudoQuadraticForm(const AdmissiblePair& p, Mat gram, std::vector<Scalar> values,
                                               ClosedSubgroup codefect, std::optional<VectorSpaceSpec> space)
    : pair_(p), gram_(std::move(gram)), codefect_(std::move(codefect)) {
  check_square(gram_, p.ring());
  std::size_t n = gram_.size();
  require(values.size() == n, "dimension-mismatch", "need one basis value per coordinate");
  require(codefect_.pair() == p, "pair-mismatch", "codefect belongs to a different pair");
  SesquilinearForm f(p, gram_);
  Scalar meps = -p.epsilon();
  AdmissiblePair neg = AdmissiblePair::validate(p.ring(), p.sigma(), meps);
  for (std::size_t i = 0; i < n; ++i)
    if (!neg.in_lower(gram_[i][i]))
      fail("not-trace-valued", "diagonal Gram entry " + entry(i, i) + " = " + gram_[i][i].str() +
                                   " is not of the form s + s^sigma eps");
  if (!codefect_.is_full() && !codefect_.within_upper())
    fail("invalid-codefect", "codefect generator outside K^{sigma,eps}: " + codefect_.str());
  for (Scalar& v : values) {
    require(&v.ring() == &p.ring(), "ring-mismatch", "basis value outside the pair's ring");
    values_.push_back(p.canonical(v));
  }
  space_ = space ? *space : VectorSpaceSpec::standard(p.ring(), n);
  require(space_.dim == n, "dimension-mismatch", "space spec dimension differs from Gram size");
}

Scalar GenPseudoQuadraticForm::raw(const Vec& x) const {
  check_dim(x, dim());
  Scalar acc = ring().zero();
  for (std::size_t i = 0; i < dim(); ++i) {
    if (x[i].is_zero()) continue;
    Scalar xs = pair_.apply_sigma(x[i]);
    for (std::size_t j = i + 1; j < dim(); ++j)
      if (!gram_[i][j].is_zero() && !x[j].is_zero()) acc += xs * gram_[i][j] * x[j];
    if (!values_[i].is_zero()) acc += xs * values_[i] * x[i];
  }
  return acc;
}

Scalar GenPseudoQuadraticForm::eval(const Vec& x) const { return pair_.canonical(codefect_.reduce(raw(x))); }

BasisChange basis_change(const Basis& e, const Basis& e_prime) {
  require(e.size() == e_prime.size(), "dimension-mismatch", "bases of different sizes");
  BasisChange bc{e, e_prime, {}};
  std::size_t n = e.size();
  if (n == 0) return bc;
  const Ring& r = e[0][0].ring();
  bc.alpha = zero_mat(r, n, n);
  for (std::size_t k = 0; k < n; ++k) {
    auto c = coordinates(e_prime, e[k]);
    if (!c) fail("basis-not-spanning", "target list is not a basis containing the source");
    for (std::size_t i = 0; i < n; ++i) bc.alpha[i][k] = (*c)[i];
  }
  if (!inverse(bc.alpha)) fail("basis-not-spanning", "transition matrix is singular");
  return bc;
}

Scalar eval_f(const SesquilinearForm& f, const Vec& x, const Vec& y) { return f.eval(x, y); }

Basis radical(const SesquilinearForm& f) {
  if (f.dim() == 0) return {};
  Span s(f.dim(), right_kernel(f.gram(), f.dim()));
  return s.basis();
}

CosetElement eval_q(const GenPseudoQuadraticForm& q, const Vec& x) { return CosetElement(q.pair(), q.eval(x)); }

SesquilinearForm sesquilinearization(const GenPseudoQuadraticForm& q, std::uint64_t seed, int samples) {
  if (q.codefect().is_full())
    fail("full-codefect", "every trace-valued form is a sesquilinearization when the codefect is full");
  SesquilinearForm f = q.f();
  Rng rng(seed);
  for (int s = 0; s < samples; ++s) {
    Vec x = random_vec(q.ring(), q.dim(), rng);
    Vec y = random_vec(q.ring(), q.dim(), rng);
    Scalar d = q.raw(add(x, y)) - q.raw(x) - q.raw(y) - f.eval(x, y);
    if (!q.codefect().contains(q.pair().canonical(d)))
      fail("q2-violation", "q(x+y) - q(x) - q(y) differs from f(x,y) modulo the codefect");
  }
  return f;
}

bool is_singular(const GenPseudoQuadraticForm& q, const Vec& x) {
  if (!q.eval(x).is_zero()) return false;
  if (!q.f().eval(x, x).is_zero()) fail("invariant-violation", "a singular vector is not isotropic");
  return true;
}

bool is_trivial(const GenPseudoQuadraticForm& q) {
  if (q.codefect().is_full()) return true;
  for (const Vec& row : q.gram())
    for (const Scalar& s : row)
      if (!s.is_zero()) return false;
  for (const Scalar& v : q.values())
    if (!q.codefect().contains(v)) return false;
  return true;
}

bool same_form(const GenPseudoQuadraticForm& a, const GenPseudoQuadraticForm& b) {
  if (a.pair() != b.pair() || a.dim() != b.dim()) return false;
  if (!a.codefect().same(b.codefect())) return false;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (a.gram()[i][j] != b.gram()[i][j]) return false;
    if (!a.codefect().contains(a.pair().canonical(a.values()[i] - b.values()[i]))) return false;
  }
  return true;
}

void check_singular_basis(const GenPseudoQuadraticForm& q, const Basis& e) {
  require(e.size() == q.dim(), "basis-not-spanning", "basis has the wrong number of vectors");
  for (std::size_t i = 0; i < e.size(); ++i)
    if (!is_singular(q, e[i])) fail("basis-not-singular", "basis vector " + std::to_string(i + 1) + " is not singular");
  if (rank(from_columns(e, q.dim())) < q.dim()) fail("basis-not-spanning", "basis vectors are dependent");
}

namespace {

Scalar g_e(const GenPseudoQuadraticForm& q, const Basis& e, const Vec& lam, const Vec& mu) {
  SesquilinearForm f = q.f();
  Scalar acc = q.ring().zero();
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (lam[i].is_zero()) continue;
    Scalar ls = q.pair().apply_sigma(lam[i]);
    for (std::size_t j = i + 1; j < e.size(); ++j)
      if (!mu[j].is_zero()) acc += ls * f.eval(e[i], e[j]) * mu[j];
  }
  return acc;
}

Vec coords_in(const Basis& e, const Vec& x) {
  auto c = coordinates(e, x);
  if (!c) fail("basis-not-spanning", "vector outside the span of the basis");
  return *c;
}

}  // namespace

Scalar facilitating_eval(const GenPseudoQuadraticForm& q, const Basis& e, const Vec& x, const Vec& y) {
  check_singular_basis(q, e);
  return g_e(q, e, coords_in(e, x), coords_in(e, y));
}

DifferenceValue difference_map(const GenPseudoQuadraticForm& q, const Basis& e, const Basis& ep, const Vec& x) {
  check_singular_basis(q, e);
  check_singular_basis(q, ep);
  Vec lam = coords_in(e, x);
  Vec lamp = coords_in(ep, x);
  Scalar direct = g_e(q, e, lam, lam) - g_e(q, ep, lamp, lamp);
  Scalar closed = q.ring().zero();
  for (std::size_t i = 0; i < e.size(); ++i) {
    Vec c = coords_in(ep, e[i]);
    closed -= q.pair().twist(g_e(q, ep, c, c), lam[i]);
  }
  return {CosetElement(q.pair(), direct), CosetElement(q.pair(), closed)};
}

GenPseudoQuadraticForm scale_form(const Scalar& kappa, const GenPseudoQuadraticForm& q) {
  if (kappa.is_zero()) fail("zero-scalar", "scaling factor must be nonzero");
  if (q.codefect().is_full()) fail("full-codefect", "cannot scale a form with full codefect");
  AdmissiblePair p = scale_pair(kappa, q.pair());
  Mat g = q.gram();
  for (Vec& row : g)
    for (Scalar& s : row) s = kappa * s;
  std::vector<Scalar> vals;
  for (const Scalar& v : q.values()) vals.push_back(kappa * v);
  std::vector<Scalar> gens;
  for (const Scalar& r : q.codefect().generators()) gens.push_back(kappa * r);
  return GenPseudoQuadraticForm(p, g, vals, ClosedSubgroup::generated(p, gens), q.space());
}

Vec apply_automorphism(unsigned k, const Vec& x) {
  Vec y;
  for (const Scalar& s : x) y.push_back(Scalar::ff(s.ring(), s.ring().ff_frobenius(s.code(), k)));
  return y;
}

GenPseudoQuadraticForm apply_automorphism(unsigned k, const GenPseudoQuadraticForm& q) {
  const Ring& r = q.ring();
  if (!r.finite()) fail("unsupported-ring", "ring automorphisms are only supported over finite fields");
  auto rho = [&](const Scalar& s) { return Scalar::ff(r, r.ff_frobenius(s.code(), k)); };
  // Frobenius powers commute with every automorphism of a finite field.
  if (rho(q.pair().epsilon()) != q.pair().epsilon())
    fail("automorphism-not-stabilizing", "the automorphism moves epsilon = " + q.pair().epsilon().str());
  Mat g = q.gram();
  for (Vec& row : g)
    for (Scalar& s : row) s = rho(s);
  std::vector<Scalar> vals;
  for (const Scalar& v : q.values()) vals.push_back(rho(v));
  ClosedSubgroup c = ClosedSubgroup::zero(q.pair());
  if (q.codefect().is_full()) {
    c = ClosedSubgroup::full(q.pair());
  } else {
    std::vector<Scalar> gens;
    for (const Scalar& x : q.codefect().generators()) gens.push_back(rho(x));
    c = ClosedSubgroup::generated(q.pair(), gens);
  }
  return GenPseudoQuadraticForm(q.pair(), g, vals, c, q.space());
}

GenPseudoQuadraticForm restrict_coords(const GenPseudoQuadraticForm& q, const std::vector<std::size_t>& keep) {
  Mat g(keep.size(), Vec(keep.size()));
  std::vector<Scalar> vals;
  VectorSpaceSpec sp;
  sp.ring = &q.ring();
  sp.dim = keep.size();
  for (std::size_t a = 0; a < keep.size(); ++a) {
    for (std::size_t b = 0; b < keep.size(); ++b) g[a][b] = q.gram()[keep[a]][keep[b]];
    vals.push_back(q.values()[keep[a]]);
    sp.labels.push_back(q.space().labels[keep[a]]);
    sp.twist.push_back(q.space().twist[keep[a]]);
  }
  return GenPseudoQuadraticForm(q.pair(), g, vals, q.codefect(), sp);
}

GenPseudoQuadraticForm change_basis(const GenPseudoQuadraticForm& q, const Basis& basis) {
  require(basis.size() == q.dim(), "basis-not-spanning", "basis has the wrong number of vectors");
  if (rank(from_columns(basis, q.dim())) < q.dim()) fail("basis-not-spanning", "basis vectors are dependent");
  SesquilinearForm f = q.f();
  std::size_t n = q.dim();
  Mat g(n, Vec(n));
  std::vector<Scalar> vals;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) g[a][b] = f.eval(basis[a], basis[b]);
    vals.push_back(q.raw(basis[a]));
  }
  return GenPseudoQuadraticForm(q.pair(), g, vals, q.codefect());
}

}  // namespace gpq
