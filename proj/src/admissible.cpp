#include "gpq/admissible.hpp"

#include <cctype>

#include "gpq/error.hpp"
#include "gpq/textutil.hpp"

namespace gpq {

// ---------------------------------------------------------------- base field

std::size_t base_degree(const Ring& r) {
  switch (r.kind()) {
    case RingKind::finite_field:
      return r.n();
    case RingKind::funcfield2:
      return 2;
    case RingKind::quaternions:
      return 4;
  }
  return 0;
}

Vec base_coords(const Scalar& t) {
  const Ring& r = t.ring();
  switch (r.kind()) {
    case RingKind::finite_field: {
      const Ring& fp = Ring::finite_field(r.p(), 1);
      Vec c;
      c.reserve(r.n());
      for (unsigned i = 0; i < r.n(); ++i) c.push_back(Scalar::ff(fp, r.ff_digit(t.code(), i)));
      return c;
    }
    case RingKind::funcfield2: {
      auto [u0, u1] = decompose_char2(t);
      return {u0, u1};
    }
    case RingKind::quaternions: {
      const auto& q = t.quaternion().c;
      return {Scalar::quat(r, q[0], 0, 0, 0), Scalar::quat(r, q[1], 0, 0, 0), Scalar::quat(r, q[2], 0, 0, 0),
              Scalar::quat(r, q[3], 0, 0, 0)};
    }
  }
  return {};
}

Scalar from_base_coords(const Ring& r, const Vec& c) {
  require(c.size() == base_degree(r), "dimension-mismatch", "coordinate count differs from base degree");
  switch (r.kind()) {
    case RingKind::finite_field: {
      std::uint32_t code = 0, pw = 1;
      for (unsigned i = 0; i < r.n(); ++i) {
        code += c[i].code() * pw;
        pw *= r.p();
      }
      return Scalar::ff(r, code);
    }
    case RingKind::funcfield2:
      return c[0] + r.generator() * c[1];
    case RingKind::quaternions:
      return Scalar::quat(r, c[0].quaternion().c[0], c[1].quaternion().c[0], c[2].quaternion().c[0],
                          c[3].quaternion().c[0]);
  }
  return {};
}

std::vector<Scalar> base_basis(const Ring& r) {
  std::vector<Scalar> out;
  switch (r.kind()) {
    case RingKind::finite_field: {
      std::uint32_t pw = 1;
      for (unsigned i = 0; i < r.n(); ++i, pw *= r.p()) out.push_back(Scalar::ff(r, pw));
      break;
    }
    case RingKind::funcfield2:
      out = {r.one(), r.generator()};
      break;
    case RingKind::quaternions:
      out = {Scalar::quat(r, 1, 0, 0, 0), Scalar::quat(r, 0, 1, 0, 0), Scalar::quat(r, 0, 0, 1, 0),
             Scalar::quat(r, 0, 0, 0, 1)};
      break;
  }
  return out;
}

namespace {

const Ring& base_ring(const Ring& r) { return r.finite() ? Ring::finite_field(r.p(), 1) : r; }

// image of t -> t - t^σ eps
Span lower_of(const Ring& r, const AntiAuto& s, const Scalar& eps) {
  Span out(base_degree(r));
  for (const Scalar& b : base_basis(r)) out.add(base_coords(b - s.apply(b) * eps));
  return out;
}

// kernel of t -> t + t^σ eps
Span upper_of(const Ring& r, const AntiAuto& s, const Scalar& eps) {
  std::vector<Vec> cols;
  for (const Scalar& b : base_basis(r)) cols.push_back(base_coords(b + s.apply(b) * eps));
  std::size_t m = base_degree(r);
  Mat a = from_columns(cols, m);
  return Span(m, right_kernel(a, m));
}

bool same_span(const Span& a, const Span& b) {
  if (a.rank() != b.rank()) return false;
  for (std::size_t i = 0; i < a.rank(); ++i)
    if (a.basis()[i] != b.basis()[i]) return false;
  return true;
}

}  // namespace

// ---------------------------------------------------------------- pairs

struct AdmissiblePair::Data {
  const Ring* ring;
  AntiAuto sigma = AntiAuto::identity();
  Scalar eps;
  Span lower, upper;
  bool trace_type = false;
};

AdmissiblePair AdmissiblePair::validate(const Ring& r, const AntiAuto& sigma_in, const Scalar& eps) {
  AntiAuto sigma = sigma_in.normalized(r);
  require(eps.valid() && &eps.ring() == &r, "ring-mismatch", "epsilon is not an element of " + r.spec());
  if (eps.is_zero()) fail("not-admissible", "epsilon is zero");
  if (!(sigma.apply(eps) * eps).is_one())
    fail("not-admissible", "eps^sigma * eps = 1 fails for sigma = " + sigma.str() + ", eps = " + eps.str());
  std::vector<Scalar> gens;
  if (r.kind() == RingKind::quaternions)
    gens = {Scalar::quat(r, 0, 1, 0, 0), Scalar::quat(r, 0, 0, 1, 0)};
  else
    gens = {r.generator()};
  for (const Scalar& g : gens) {
    Scalar lhs = sigma.apply(sigma.apply(g));
    Scalar rhs = eps * g * eps.inv();
    if (lhs != rhs)
      fail("not-admissible", "t^(sigma^2) = eps t eps^-1 fails at t = " + g.str() + " for sigma = " + sigma.str());
  }
  auto d = std::make_shared<Data>();
  d->ring = &r;
  d->sigma = sigma;
  d->eps = eps;
  d->lower = lower_of(r, sigma, eps);
  d->upper = upper_of(r, sigma, eps);
  Scalar meps = -eps;
  d->trace_type = lower_of(r, sigma, meps).rank() == upper_of(r, sigma, meps).rank();
  AdmissiblePair p;
  p.d_ = std::move(d);
  return p;
}

const Ring& AdmissiblePair::ring() const { return *d_->ring; }
const AntiAuto& AdmissiblePair::sigma() const { return d_->sigma; }
const Scalar& AdmissiblePair::epsilon() const { return d_->eps; }
const Span& AdmissiblePair::lower() const { return d_->lower; }
const Span& AdmissiblePair::upper() const { return d_->upper; }
bool AdmissiblePair::trace_type() const { return d_->trace_type; }

bool AdmissiblePair::in_lower(const Scalar& t) const {
  require(&t.ring() == d_->ring, "ring-mismatch", "element outside the pair's ring");
  if (d_->lower.rank() == 0) return t.is_zero();
  return d_->lower.contains(base_coords(t));
}

bool AdmissiblePair::in_upper(const Scalar& t) const {
  require(&t.ring() == d_->ring, "ring-mismatch", "element outside the pair's ring");
  return (t + d_->sigma.apply(t) * d_->eps).is_zero();
}

Scalar AdmissiblePair::canonical(const Scalar& t) const {
  require(&t.ring() == d_->ring, "ring-mismatch", "element outside the pair's ring");
  if (d_->lower.rank() == 0) return t;
  return from_base_coords(*d_->ring, d_->lower.reduce(base_coords(t)));
}

Scalar AdmissiblePair::twist(const Scalar& t, const Scalar& lambda) const {
  return d_->sigma.apply(lambda) * t * lambda;
}

std::string AdmissiblePair::str() const {
  return "pair(sigma = " + d_->sigma.str() + ", eps = " + d_->eps.str() + ")";
}

bool AdmissiblePair::operator==(const AdmissiblePair& o) const {
  if (d_ == o.d_) return true;
  return d_->ring == o.d_->ring && d_->sigma == o.d_->sigma && d_->eps == o.d_->eps;
}

AdmissiblePair scale_pair(const Scalar& kappa, const AdmissiblePair& p) {
  if (kappa.is_zero()) fail("zero-scalar", "scaling factor must be nonzero");
  require(&kappa.ring() == &p.ring(), "ring-mismatch", "scaling factor outside the pair's ring");
  AntiAuto s = p.sigma().conjugated_by(kappa);
  Scalar eps = kappa * p.apply_sigma(kappa).inv() * p.epsilon();
  return AdmissiblePair::validate(p.ring(), s, eps);
}

CosetElement CosetElement::operator+(const CosetElement& o) const {
  require(pair_ == o.pair_, "pair-mismatch", "cosets of different pairs");
  return CosetElement(pair_, rep_ + o.rep_);
}

CosetElement CosetElement::operator-(const CosetElement& o) const {
  require(pair_ == o.pair_, "pair-mismatch", "cosets of different pairs");
  return CosetElement(pair_, rep_ - o.rep_);
}

CosetElement circ(const CosetElement& t, const Scalar& lambda) {
  return CosetElement(t.pair(), t.pair().twist(t.rep(), lambda));
}

// ---------------------------------------------------------------- subgroups

ClosedSubgroup ClosedSubgroup::zero(const AdmissiblePair& p) {
  ClosedSubgroup g(p);
  g.pre_ = p.lower();
  return g;
}

ClosedSubgroup ClosedSubgroup::full(const AdmissiblePair& p) {
  ClosedSubgroup g(p);
  std::size_t m = base_degree(p.ring());
  const Ring& b = base_ring(p.ring());
  g.pre_ = Span(m);
  for (std::size_t i = 0; i < m; ++i) g.pre_.add(unit_vec(b, m, i));
  g.full_tag_ = true;
  return g;
}

ClosedSubgroup ClosedSubgroup::generated(const AdmissiblePair& p, const std::vector<Scalar>& gens) {
  ClosedSubgroup g = zero(p);
  for (const Scalar& x : gens) g.absorb(x);
  return g;
}

// R gains the B-span of {λ^σ g λ}, which polarization reduces to the values
// on a B-basis of K and the cross terms between basis pairs. Over F_2(t) this
// is K²g, closed under ∘ because r∘λ = rλ² with λ² ∈ K².
void ClosedSubgroup::absorb(const Scalar& x) {
  require(&x.ring() == &pair_.ring(), "ring-mismatch", "generator outside the pair's ring");
  Scalar g = pair_.canonical(x);
  if (g.is_zero()) return;
  gens_.push_back(g);
  if (full_tag_) return;
  auto basis = base_basis(pair_.ring());
  std::vector<Scalar> q;
  for (const Scalar& b : basis) q.push_back(pair_.twist(g, b));
  for (std::size_t a = 0; a < basis.size(); ++a) {
    pre_.add(base_coords(q[a]));
    for (std::size_t c = a + 1; c < basis.size(); ++c)
      pre_.add(base_coords(pair_.twist(g, basis[a] + basis[c]) - q[a] - q[c]));
  }
}

ClosedSubgroup::Kind ClosedSubgroup::kind() const {
  if (full_tag_ || pre_.rank() == pre_.dim()) return Kind::full;
  if (pre_.rank() == pair_.lower().rank()) return Kind::zero;
  return Kind::generated;
}

bool ClosedSubgroup::contains(const Scalar& t) const {
  if (is_full()) return true;
  if (pre_.rank() == 0) return t.is_zero();
  return pre_.contains(base_coords(t));
}

bool ClosedSubgroup::contains(const CosetElement& t) const {
  require(t.pair() == pair_, "pair-mismatch", "coset of a different pair");
  return contains(t.rep());
}

Scalar ClosedSubgroup::reduce(const Scalar& t) const {
  if (is_full()) return pair_.ring().zero();
  if (pre_.rank() == 0) return t;
  return from_base_coords(pair_.ring(), pre_.reduce(base_coords(t)));
}

CosetElement ClosedSubgroup::reduce(const CosetElement& t) const {
  require(t.pair() == pair_, "pair-mismatch", "coset of a different pair");
  return CosetElement(pair_, reduce(t.rep()));
}

ClosedSubgroup ClosedSubgroup::with(const std::vector<Scalar>& more) const {
  ClosedSubgroup g = *this;
  for (const Scalar& x : more) g.absorb(x);
  return g;
}

ClosedSubgroup ClosedSubgroup::joined(const ClosedSubgroup& o) const {
  require(pair_ == o.pair_, "pair-mismatch", "subgroups of different pairs");
  if (o.is_full()) return o.with(gens_);
  return with(o.gens_);
}

bool ClosedSubgroup::same(const ClosedSubgroup& o) const {
  if (pair_ != o.pair_) return false;
  if (is_full() || o.is_full()) return is_full() && o.is_full();
  return same_span(pre_, o.pre_);
}

bool ClosedSubgroup::contains(const ClosedSubgroup& o) const {
  require(pair_ == o.pair_, "pair-mismatch", "subgroups of different pairs");
  if (is_full()) return true;
  if (o.is_full()) return false;
  for (const Vec& v : o.pre_.basis())
    if (!pre_.contains(v)) return false;
  return true;
}

bool ClosedSubgroup::within_upper() const {
  for (const Scalar& g : gens_)
    if (!pair_.in_upper(g)) return false;
  return true;
}

std::string ClosedSubgroup::str() const {
  switch (kind()) {
    case Kind::zero:
      return "codefect(zero)";
    case Kind::full:
      return "codefect(full)";
    case Kind::generated:
      break;
  }
  std::string s = "codefect(gens = [";
  for (std::size_t i = 0; i < gens_.size(); ++i) s += (i ? ", " : "") + gens_[i].str();
  return s + "])";
}

std::optional<Vec> circ_coords(const AdmissiblePair& p, const std::vector<Scalar>& basis, const Scalar& r) {
  const Ring& ring = p.ring();
  if (basis.empty()) {
    if (p.in_lower(r)) return Vec{};
    return std::nullopt;
  }
  // K̄∘ ≠ 0 only for σ = id in characteristic 2, where s∘μ = sμ² and
  // K_{σ,ε} = 0; solve for ν = μ² over K² and take square roots.
  if (p.sigma().kind() != AntiAuto::Kind::identity || ring.characteristic() != 2)
    fail("unsupported", "∘-coordinates need sigma = id in characteristic 2");
  std::optional<Vec> nu;
  if (ring.finite()) {
    Mat a(1, Vec(basis.begin(), basis.end()));
    nu = solve(a, Vec{r});
  } else {
    std::vector<Vec> cols;
    for (const Scalar& s : basis) cols.push_back(base_coords(s));
    nu = solve(from_columns(cols, 2), base_coords(r));
  }
  if (!nu) return std::nullopt;
  Vec mu;
  Scalar check = ring.zero();
  for (std::size_t k = 0; k < basis.size(); ++k) {
    mu.push_back(sqrt_char2((*nu)[k]));
    check += basis[k] * (*nu)[k];
  }
  if (check != r) return std::nullopt;
  return mu;
}

std::vector<Scalar> circ_basis(const AdmissiblePair& p, const std::vector<Scalar>& s) {
  std::vector<Scalar> out;
  ClosedSubgroup g = ClosedSubgroup::zero(p);
  for (const Scalar& x : s) {
    if (g.contains(x)) continue;
    out.push_back(p.canonical(x));
    g = g.with({x});
  }
  return out;
}

// ---------------------------------------------------------------- grammar

AdmissiblePair parse_pair(const Ring& r, const std::string& text) {
  std::string body = call_body(text, "pair");
  Scalar eps;
  std::optional<AntiAuto> sigma;
  for (const std::string& item : split_top(body, ',')) {
    auto [key, value] = key_value(item);
    if (key == "sigma")
      sigma = parse_antiauto(r, value);
    else if (key == "eps" || key == "epsilon")
      eps = parse_scalar(r, value);
    else
      throw ParseError("pair: unknown key '" + key + "'");
  }
  if (!sigma || !eps.valid()) throw ParseError("pair: both sigma and eps are required");
  return AdmissiblePair::validate(r, *sigma, eps);
}

ClosedSubgroup parse_codefect(const AdmissiblePair& p, const std::string& text) {
  std::string body = trim(call_body(text, "codefect"));
  if (body == "zero") return ClosedSubgroup::zero(p);
  if (body == "full") return ClosedSubgroup::full(p);
  auto [key, value] = key_value(body);
  if (key != "gens") throw ParseError("codefect: expected zero, full or gens = [...]");
  std::vector<Scalar> gens;
  for (const std::string& e : parse_list(value)) gens.push_back(parse_scalar(p.ring(), e));
  return ClosedSubgroup::generated(p, gens);
}

}  // namespace gpq
