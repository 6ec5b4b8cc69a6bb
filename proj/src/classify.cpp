#include "gpq/classify.hpp"

#include <algorithm>
#include <set>

#include "gpq/error.hpp"
#include "gpq/quotcov.hpp"

namespace gpq {

namespace {

using Keys = std::vector<std::uint32_t>;

std::vector<std::vector<bool>> collinear_matrix(const EmbeddedGeometry& g) {
  std::size_t n = g.points.size();
  std::vector<std::vector<bool>> c(n, std::vector<bool>(n, false));
  for (const auto& line : g.lines)
    for (std::size_t a : line)
      for (std::size_t b : line) c[a][b] = true;
  for (std::size_t i = 0; i < n; ++i) c[i][i] = true;
  return c;
}

std::set<Keys> point_set(const std::vector<Vec>& pts) {
  std::set<Keys> s;
  for (const Vec& v : pts) s.insert(point_key(v));
  return s;
}

std::set<std::set<Keys>> line_set(const std::vector<Vec>& pts, const std::vector<std::vector<std::size_t>>& lines) {
  std::set<std::set<Keys>> s;
  for (const auto& line : lines) {
    std::set<Keys> l;
    for (std::size_t a : line) l.insert(point_key(pts[a]));
    s.insert(l);
  }
  return s;
}

Keys gram_key(const Mat& g) {
  Keys k;
  for (const Vec& row : g)
    for (const Scalar& s : row) k.push_back(s.code());
  return k;
}

[[noreturn]] void invalid(const std::string& what) { fail("invalid-geometry", what); }

void verify_spaces(const EmbeddedGeometry& g, const std::vector<Vec>& pts,
                   const std::vector<std::vector<std::size_t>>& lines, const std::string& what) {
  auto want = point_set(g.points);
  auto got = point_set(pts);
  if (want != got) {
    for (const Vec& v : g.points)
      if (!got.count(point_key(v))) {
        std::string s;
        for (const Scalar& x : v) s += (s.empty() ? "" : " ") + x.str();
        fail("verification-failed", "geometry point (" + s + ") is not a point of " + what);
      }
    for (const Vec& v : pts)
      if (!want.count(point_key(v))) {
        std::string s;
        for (const Scalar& x : v) s += (s.empty() ? "" : " ") + x.str();
        fail("verification-failed", "point (" + s + ") of " + what + " is missing from the geometry");
      }
  }
  if (line_set(g.points, g.lines) != line_set(pts, lines))
    fail("verification-failed", "lines of the geometry differ from the lines of " + what);
}

}  // namespace

EmbeddedGeometry geometry_of(const PolarSpace& s, const Ring& r) {
  return EmbeddedGeometry{&r, s.dim, s.points, s.lines};
}

void validate_geometry(const EmbeddedGeometry& g) {
  if (g.ring == nullptr || !g.ring->finite()) invalid("the ambient field must be finite");
  const Ring& r = *g.ring;
  if (g.dim < 2) invalid("ambient dimension must be at least 2");
  std::set<Keys> seen;
  for (std::size_t i = 0; i < g.points.size(); ++i) {
    const Vec& v = g.points[i];
    if (v.size() != g.dim) invalid("point " + std::to_string(i) + " has the wrong length");
    for (const Scalar& s : v)
      if (&s.ring() != &r) invalid("point " + std::to_string(i) + " has coordinates outside the field");
    if (is_zero(v)) invalid("point " + std::to_string(i) + " is the zero vector");
    if (projective_normalize(v) != v) invalid("point " + std::to_string(i) + " is not normalized");
    if (!seen.insert(point_key(v)).second) invalid("point " + std::to_string(i) + " is repeated");
  }
  std::size_t q1 = r.order() + 1;
  for (std::size_t l = 0; l < g.lines.size(); ++l) {
    const auto& line = g.lines[l];
    for (std::size_t a : line)
      if (a >= g.points.size()) invalid("line " + std::to_string(l) + " refers to a missing point");
    if (line.size() != q1) invalid("line " + std::to_string(l) + " is not a full projective line");
    std::set<Keys> want;
    for (const Vec& v : line_points(g.points[line[0]], g.points[line[1]])) want.insert(point_key(v));
    std::set<Keys> got;
    for (std::size_t a : line) got.insert(point_key(g.points[a]));
    if (want != got) invalid("line " + std::to_string(l) + " is not a full projective line");
  }
  if (rank(from_columns(g.points, g.dim)) != g.dim) invalid("points do not span the ambient space");
  if (g.lines.empty()) invalid("rank must be at least 2: there are no lines");
  auto col = collinear_matrix(g);
  for (std::size_t l = 0; l < g.lines.size(); ++l)
    for (std::size_t p = 0; p < g.points.size(); ++p) {
      std::size_t hits = 0;
      for (std::size_t a : g.lines[l]) hits += col[p][a];
      if (hits != 1 && hits != g.lines[l].size())
        invalid("one-or-all axiom fails for point " + std::to_string(p) + " and line " + std::to_string(l));
    }
  for (std::size_t p = 0; p < g.points.size(); ++p)
    if (std::all_of(col[p].begin(), col[p].end(), [](bool b) { return b; }))
      invalid("point " + std::to_string(p) + " lies in the radical");
  std::vector<std::size_t> deg(g.points.size(), 0);
  for (const auto& line : g.lines)
    for (std::size_t a : line) ++deg[a];
  bool grid = std::all_of(deg.begin(), deg.end(), [](std::size_t d) { return d == 2; });
  if (grid && r.order() > 4) fail("grid-unsupported", "grids over fields with more than 4 elements are not classified");
}

RecoveredForm recover_sesquilinear(const EmbeddedGeometry& g) {
  validate_geometry(g);
  const Ring& r = *g.ring;
  const Ring& fp = Ring::finite_field(r.p());
  std::size_t d = g.dim, nb = r.n(), unknowns = d * d * nb;
  auto basis = base_basis(r);
  auto col = collinear_matrix(g);
  auto uidx = [&](std::size_t i, std::size_t j, std::size_t a) { return (i * d + j) * nb + a; };

  for (unsigned k = 0; k < r.n(); ++k) {
    AntiAuto sigma = k == 0 ? AntiAuto::identity() : AntiAuto::frobenius(k);
    for (const Scalar& eps : r.elements()) {
      if (eps.is_zero() || !(sigma.apply(eps) * eps).is_one()) continue;
      std::optional<AdmissiblePair> vp;
      try {
        vp = AdmissiblePair::validate(r, sigma, eps);
      } catch (const Error&) {
        continue;
      }
      const AdmissiblePair& pair = *vp;
      Mat rows;
      // K-linear functional Σ c_ij G_ij, one F_p row per base coordinate
      auto add_linear = [&](const Mat& c) {
        Mat block(nb, zero_vec(fp, unknowns));
        for (std::size_t i = 0; i < d; ++i)
          for (std::size_t j = 0; j < d; ++j) {
            if (c[i][j].is_zero()) continue;
            for (std::size_t a = 0; a < nb; ++a) {
              Vec bc = base_coords(c[i][j] * basis[a]);
              for (std::size_t row = 0; row < nb; ++row) block[row][uidx(i, j, a)] = bc[row];
            }
          }
        for (Vec& row : block) rows.push_back(std::move(row));
      };
      auto pairing = [&](const Vec& x, const Vec& y) {
        Mat c(d, Vec(d));
        for (std::size_t i = 0; i < d; ++i)
          for (std::size_t j = 0; j < d; ++j) c[i][j] = sigma.apply(x[i]) * y[j];
        return c;
      };
      for (const Vec& x : g.points) add_linear(pairing(x, x));
      for (const auto& line : g.lines) add_linear(pairing(g.points[line[0]], g.points[line[1]]));
      // G_ji - G_ij^σ ε = 0
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i; j < d; ++j) {
          Mat block(nb, zero_vec(fp, unknowns));
          for (std::size_t a = 0; a < nb; ++a) {
            Vec plus = base_coords(basis[a]);
            Vec minus = base_coords(-(sigma.apply(basis[a]) * eps));
            for (std::size_t row = 0; row < nb; ++row) {
              block[row][uidx(j, i, a)] += plus[row];
              block[row][uidx(i, j, a)] += minus[row];
            }
          }
          for (Vec& row : block) rows.push_back(std::move(row));
        }
      auto kernel = right_kernel(rows, unknowns);
      if (kernel.empty()) continue;
      std::size_t count = 1;
      for (std::size_t t = 0; t < kernel.size(); ++t) {
        count *= r.p();
        if (count > (1u << 20))
          fail("ambiguous", "Gram solution space of F_p-dimension " + std::to_string(kernel.size()) +
                                " is too large for (sigma, eps) = (" + sigma.str() + ", " + eps.str() + ")");
      }
      std::vector<Scalar> fix;
      for (const Scalar& c : r.elements())
        if (!c.is_zero() && sigma.apply(c) == c) fix.push_back(c);
      std::set<Keys> classes;
      Mat first;
      for (std::size_t idx = 1; idx < count; ++idx) {
        Vec coords = zero_vec(fp, unknowns);
        std::size_t c = idx;
        for (const Vec& kv : kernel) {
          Scalar m = fp.element(static_cast<std::uint32_t>(c % r.p()));
          c /= r.p();
          if (!m.is_zero()) coords = add(coords, scale_right(kv, m));
        }
        Mat gram(d, Vec(d));
        for (std::size_t i = 0; i < d; ++i)
          for (std::size_t j = 0; j < d; ++j) {
            Vec bc(coords.begin() + static_cast<std::ptrdiff_t>(uidx(i, j, 0)),
                   coords.begin() + static_cast<std::ptrdiff_t>(uidx(i, j, 0) + nb));
            gram[i][j] = from_base_coords(r, bc);
          }
        SesquilinearForm f(pair, gram);
        bool ok = true;
        for (std::size_t a = 0; a < g.points.size() && ok; ++a)
          for (std::size_t b = a + 1; b < g.points.size() && ok; ++b)
            if (!col[a][b] && f.eval(g.points[a], g.points[b]).is_zero()) ok = false;
        if (!ok) continue;
        Keys best;
        Mat best_gram;
        for (const Scalar& s : fix) {
          Mat sg = gram;
          for (Vec& row : sg)
            for (Scalar& x : row) x = s * x;
          Keys key = gram_key(sg);
          if (best.empty() || key < best) {
            best = key;
            best_gram = sg;
          }
        }
        if (classes.insert(best).second && classes.size() == 1) first = best_gram;
      }
      if (classes.empty()) continue;
      if (classes.size() > 1)
        fail("ambiguous", std::to_string(classes.size()) + " non-proportional forms fit the geometry for (" +
                              sigma.str() + ", " + eps.str() + ")");
      return RecoveredForm{SesquilinearForm(pair, first), kernel.size()};
    }
  }
  fail("no-form-found", "no reflexive sesquilinear form embeds the geometry in its polar space");
}

Scalar gamma_e(const SesquilinearForm& f, const Basis& e, const Vec& x) {
  auto lam = coordinates(e, x);
  if (!lam) fail("basis-not-spanning", "vector outside the span of the basis");
  Scalar acc = f.ring().zero();
  for (std::size_t i = 0; i < e.size(); ++i) {
    if ((*lam)[i].is_zero()) continue;
    Scalar ls = f.pair().apply_sigma((*lam)[i]);
    for (std::size_t j = i + 1; j < e.size(); ++j)
      if (!(*lam)[j].is_zero()) acc += ls * f.eval(e[i], e[j]) * (*lam)[j];
  }
  return acc;
}

GammaR build_gamma_and_r(const EmbeddedGeometry& g, const SesquilinearForm& f, const std::optional<Basis>& e) {
  GammaR out{{}, {}, ClosedSubgroup::zero(f.pair()), std::nullopt};
  if (e) {
    out.e = *e;
  } else {
    std::vector<Vec> sorted = g.points;
    std::sort(sorted.begin(), sorted.end(), [](const Vec& a, const Vec& b) { return point_key(a) < point_key(b); });
    Span sp(g.dim);
    for (const Vec& v : sorted)
      if (sp.add(v)) out.e.push_back(v);
  }
  if (out.e.size() != g.dim) fail("basis-not-spanning", "points do not contain a basis");
  for (const Vec& x : g.points) {
    Scalar gx = f.pair().canonical(gamma_e(f, out.e, x));
    out.gamma.push_back(gx);
    if (!out.r.is_full() && !out.r.contains(gx)) out.r = out.r.with({gx});
  }
  if (!out.r.is_full()) {
    Vec vals;
    for (std::size_t i = 0; i < g.dim; ++i) vals.push_back(gamma_e(f, out.e, unit_vec(f.ring(), g.dim, i)));
    out.q.emplace(f.pair(), f.gram(), vals, out.r);
  }
  return out;
}

Classification classify(const EmbeddedGeometry& g) {
  RecoveredForm rec = recover_sesquilinear(g);
  const SesquilinearForm& f = rec.f;
  GammaR gr = build_gamma_and_r(g, f);
  if (gr.q) {
    const GenPseudoQuadraticForm& q = *gr.q;
    auto pts = enumerate_points(q);
    verify_spaces(g, pts, enumerate_lines(q, pts), "S_q");
    return Classification{Verdict::pseudo_quadratic, f, gr, q};
  }
  for (std::size_t i = 0; i < f.dim(); ++i)
    if (!f.gram()[i][i].is_zero()) fail("verification-failed", "R is full but f has a nonzero diagonal entry");
  if (f.pair().sigma().kind() != AntiAuto::Kind::identity || f.pair().epsilon() != -f.ring().one())
    fail("verification-failed", "R is full but f is not alternating");
  auto pts = enumerate_points(f);
  verify_spaces(g, pts, enumerate_lines(f, pts), "S_f");
  GenPseudoQuadraticForm alt(f.pair(), f.gram(), zero_vec(f.ring(), f.dim()), ClosedSubgroup::full(f.pair()));
  return Classification{Verdict::alternating, f, gr, alt};
}

Hull hull(const Classification& c, const EmbeddedGeometry& g) {
  const Ring& r = c.f.ring();
  if (c.verdict == Verdict::pseudo_quadratic) {
    if (c.gr.r.is_zero()) return Hull{"identity", c.form, g.points};
    CoverSpec spec(c.form, c.form.codefect().generators(), {}, c.gr.e);
    Hull h{"dominant-cover", cover_form(spec), {}};
    for (const Vec& x : g.points) h.lifted.push_back(projective_normalize(lift_point(spec, x)));
    return h;
  }
  if (r.characteristic() != 2) return Hull{"identity", c.form, g.points};
  // V ⊕ K̄ with t∘λ = tλ², q̃(x + t̄) = γ_E(x) + t
  std::size_t n = c.f.dim();
  auto pair = AdmissiblePair::validate(r, AntiAuto::identity(), r.one());
  Mat gram = zero_mat(r, n + 1, n + 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) gram[i][j] = c.f.gram()[i][j];
  Vec vals;
  for (std::size_t i = 0; i < n; ++i) vals.push_back(gamma_e(c.f, c.gr.e, unit_vec(r, n, i)));
  vals.push_back(r.one());
  VectorSpaceSpec sp = VectorSpaceSpec::standard(r, n + 1);
  sp.labels[n] = "t";
  sp.twist[n] = r.one();
  GenPseudoQuadraticForm qt(pair, gram, vals, ClosedSubgroup::zero(pair), sp);
  Hull h{"char2-extension", qt, {}};
  for (const Vec& x : g.points) {
    Vec v = x;
    v.push_back(sqrt_char2(gamma_e(c.f, c.gr.e, x)));
    h.lifted.push_back(projective_normalize(v));
  }
  return h;
}

std::optional<Scalar> proportional_gram(const Mat& g1, const Mat& g2) {
  if (g1.size() != g2.size()) return std::nullopt;
  std::optional<Scalar> kappa;
  for (std::size_t i = 0; i < g1.size() && !kappa; ++i)
    for (std::size_t j = 0; j < g1.size() && !kappa; ++j)
      if (!g1[i][j].is_zero()) kappa = g2[i][j] * g1[i][j].inv();
  if (!kappa || kappa->is_zero()) return std::nullopt;
  for (std::size_t i = 0; i < g1.size(); ++i)
    for (std::size_t j = 0; j < g1.size(); ++j)
      if (*kappa * g1[i][j] != g2[i][j]) return std::nullopt;
  return kappa;
}

std::optional<Scalar> proportional_test(const GenPseudoQuadraticForm& q1, const GenPseudoQuadraticForm& q2) {
  if (q1.dim() != q2.dim() || &q1.ring() != &q2.ring()) return std::nullopt;
  if (q1.codefect().is_full() || q2.codefect().is_full()) {
    if (!(q1.codefect().is_full() && q2.codefect().is_full())) return std::nullopt;
    return proportional_gram(q1.gram(), q2.gram());
  }
  std::optional<Scalar> kappa;
  for (std::size_t i = 0; i < q1.dim() && !kappa; ++i)
    for (std::size_t j = 0; j < q1.dim() && !kappa; ++j)
      if (!q1.gram()[i][j].is_zero()) kappa = q2.gram()[i][j] * q1.gram()[i][j].inv();
  for (std::size_t i = 0; i < q1.dim() && !kappa; ++i)
    if (!q1.codefect().contains(q1.values()[i])) kappa = q2.values()[i] * q1.values()[i].inv();
  if (!kappa || kappa->is_zero()) return std::nullopt;
  try {
    if (same_form(scale_form(*kappa, q1), q2)) return kappa;
  } catch (const Error&) {
  }
  return std::nullopt;
}

}  // namespace gpq
