#include "gpq/polar.hpp"

#include <algorithm>
#include <set>
#include <cstdlib>
#include <functional>
#include <thread>

#include "gpq/error.hpp"

namespace gpq {

namespace {

constexpr std::size_t kPointCap = 10'000'000;
constexpr std::size_t kLineCap = 20'000;  // points, for the quadratic line search

void require_finite(const Ring& r) {
  if (!r.finite()) fail("infinite-ring", "enumeration needs a finite field, got " + r.spec());
}

// Block with pivot at position p holds q^(n-1-p) points; blocks run from the
// last pivot to the first, which is ascending lexicographic order of codes.
Vec decode_point(const Ring& r, std::size_t n, std::size_t idx) {
  std::size_t q = r.order();
  for (std::size_t p = n; p-- > 0;) {
    std::size_t len = 1;
    for (std::size_t k = p + 1; k < n; ++k) len *= q;
    if (idx < len) {
      Vec v = zero_vec(r, n);
      v[p] = r.one();
      for (std::size_t k = n; k-- > p + 1;) {
        v[k] = r.element(static_cast<std::uint32_t>(idx % q));
        idx /= q;
      }
      return v;
    }
    idx -= len;
  }
  fail("internal", "point index out of range");
}

std::vector<Vec> filter_points(const Ring& r, std::size_t n, const std::function<bool(const Vec&)>& keep) {
  require_finite(r);
  std::size_t total = projective_size(r, n);
  if (total > kPointCap) fail("size-cap-exceeded", "projective space has more than 10^7 points");
  std::size_t w = std::max<std::size_t>(1, std::min(worker_count(), total / 64 + 1));
  std::vector<std::vector<Vec>> parts(w);
  auto run = [&](std::size_t k) {
    std::size_t lo = total * k / w, hi = total * (k + 1) / w;
    for (std::size_t i = lo; i < hi; ++i) {
      Vec v = decode_point(r, n, i);
      if (keep(v)) parts[k].push_back(std::move(v));
    }
  };
  if (w == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errs(w);
    for (std::size_t k = 0; k < w; ++k)
      pool.emplace_back([&, k] {
        try {
          run(k);
        } catch (...) {
          errs[k] = std::current_exception();
        }
      });
    for (auto& t : pool) t.join();
    for (auto& e : errs)
      if (e) std::rethrow_exception(e);
  }
  std::vector<Vec> out;
  for (auto& part : parts)
    for (auto& v : part) out.push_back(std::move(v));
  return out;
}

using Collinear = std::vector<std::vector<bool>>;

std::vector<std::vector<std::size_t>> find_lines(const std::vector<Vec>& points,
                                                 const std::function<bool(const Vec&, const Vec&)>& perp) {
  std::size_t n = points.size();
  if (n > kLineCap) fail("size-cap-exceeded", "line search is limited to 20000 points");
  std::map<std::vector<std::uint32_t>, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(point_key(points[i]), i);
  Collinear done(n, std::vector<bool>(n, false));
  std::vector<std::vector<std::size_t>> lines;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (done[i][j] || !perp(points[i], points[j])) continue;
      std::vector<std::size_t> line;
      for (const Vec& v : line_points(points[i], points[j])) {
        auto it = index.find(point_key(v));
        if (it == index.end()) fail("invariant-violation", "a line through two perpendicular points leaves the point set");
        line.push_back(it->second);
      }
      std::sort(line.begin(), line.end());
      for (std::size_t a : line)
        for (std::size_t b : line) done[a][b] = true;
      lines.push_back(std::move(line));
    }
  std::sort(lines.begin(), lines.end());
  return lines;
}

Collinear collinearity(const PolarSpace& s) {
  std::size_t n = s.points.size();
  Collinear c(n, std::vector<bool>(n, false));
  for (const auto& line : s.lines)
    for (std::size_t a : line)
      for (std::size_t b : line) c[a][b] = true;
  for (std::size_t i = 0; i < n; ++i) c[i][i] = true;
  return c;
}

void rank_search(const PolarSpace& s, const Collinear& col, const std::vector<std::size_t>& cand, const Span& span,
                 std::size_t depth, std::size_t& best) {
  best = std::max(best, depth);
  if (best == s.dim) return;
  for (std::size_t a = 0; a < cand.size(); ++a) {
    if (depth + (cand.size() - a) <= best) return;
    std::size_t p = cand[a];
    if (span.contains(s.points[p])) continue;
    Span next = span;
    next.add(s.points[p]);
    std::vector<std::size_t> rest;
    for (std::size_t b = a + 1; b < cand.size(); ++b)
      if (col[p][cand[b]] && !next.contains(s.points[cand[b]])) rest.push_back(cand[b]);
    rank_search(s, col, rest, next, depth + 1, best);
    if (best == s.dim) return;
  }
}

void check_radical(const PolarSpace& s) {
  for (const Vec& r : s.radical) {
    std::size_t i = s.index_of(projective_normalize(r));
    if (i == PolarSpace::npos) fail("invariant-violation", "radical point missing from the point set");
  }
  Collinear col = collinearity(s);
  for (const Vec& r : s.radical) {
    std::size_t i = s.index_of(projective_normalize(r));
    for (std::size_t j = 0; j < s.points.size(); ++j)
      if (!col[i][j]) fail("invariant-violation", "radical point not collinear with every point");
  }
}

}  // namespace

std::size_t worker_count() {
  if (const char* w = std::getenv("GPQ_WORKERS")) {
    long v = std::strtol(w, nullptr, 10);
    if (v >= 1) return static_cast<std::size_t>(std::min(v, 64L));
  }
  return 1;
}

std::size_t projective_size(const Ring& r, std::size_t n) {
  require_finite(r);
  std::size_t total = 0, len = 1;
  for (std::size_t k = 0; k < n; ++k) {
    total += len;
    if (total > kPointCap || len > kPointCap) return kPointCap + 1;
    len *= r.order();
  }
  return total;
}

std::vector<Vec> projective_points(const Ring& r, std::size_t n) {
  return filter_points(r, n, [](const Vec&) { return true; });
}

std::vector<std::uint32_t> point_key(const Vec& v) {
  std::vector<std::uint32_t> k;
  k.reserve(v.size());
  for (const Scalar& s : v) k.push_back(s.code());
  return k;
}

std::vector<Vec> line_points(const Vec& x, const Vec& y) {
  const Ring& r = x[0].ring();
  std::vector<Vec> out{projective_normalize(y)};
  for (const Scalar& a : r.elements()) out.push_back(projective_normalize(add(scale_right(x, r.one()), scale_right(y, a))));
  std::sort(out.begin(), out.end(), [](const Vec& a, const Vec& b) { return point_key(a) < point_key(b); });
  return out;
}

std::size_t PolarSpace::index_of(const Vec& v) const {
  auto it = index.find(point_key(v));
  return it == index.end() ? npos : it->second;
}

std::vector<Vec> enumerate_points(const GenPseudoQuadraticForm& q) {
  return filter_points(q.ring(), q.dim(), [&](const Vec& v) { return q.eval(v).is_zero(); });
}

std::vector<Vec> enumerate_points(const SesquilinearForm& f) {
  return filter_points(f.ring(), f.dim(), [&](const Vec& v) { return f.eval(v, v).is_zero(); });
}

std::vector<std::vector<std::size_t>> enumerate_lines(const GenPseudoQuadraticForm& q, const std::vector<Vec>& points) {
  SesquilinearForm f = q.f();
  return find_lines(points, [&](const Vec& x, const Vec& y) { return f.eval(x, y).is_zero(); });
}

std::vector<std::vector<std::size_t>> enumerate_lines(const SesquilinearForm& f, const std::vector<Vec>& points) {
  return find_lines(points, [&](const Vec& x, const Vec& y) { return f.eval(x, y).is_zero(); });
}

PolarSpace make_space(std::string source, std::size_t dim, std::vector<Vec> points,
                      std::vector<std::vector<std::size_t>> lines) {
  PolarSpace s;
  s.source = std::move(source);
  s.dim = dim;
  s.points = std::move(points);
  s.lines = std::move(lines);
  for (std::size_t i = 0; i < s.points.size(); ++i) s.index.emplace(point_key(s.points[i]), i);
  s.rank = polar_rank(s);
  return s;
}

PolarSpace polar_space(const GenPseudoQuadraticForm& q) {
  auto pts = enumerate_points(q);
  auto lines = enumerate_lines(q, pts);
  PolarSpace s = make_space("q", q.dim(), std::move(pts), std::move(lines));
  s.radical = radical_of_q(q).rad_q;
  check_radical(s);
  return s;
}

PolarSpace polar_space(const SesquilinearForm& f) {
  auto pts = enumerate_points(f);
  auto lines = enumerate_lines(f, pts);
  PolarSpace s = make_space("f", f.dim(), std::move(pts), std::move(lines));
  s.radical = radical(f);
  check_radical(s);
  return s;
}

std::size_t polar_rank(const PolarSpace& s) {
  if (s.points.empty()) return 0;
  Collinear col = collinearity(s);
  std::vector<std::size_t> all(s.points.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  std::size_t best = 0;
  rank_search(s, col, all, Span(s.dim), 0, best);
  return best;
}

QuadRadical radical_of_q(const GenPseudoQuadraticForm& q) {
  require_finite(q.ring());
  Basis rf = radical(q.f());
  QuadRadical out;
  std::size_t d = rf.size();
  std::size_t qq = q.ring().order(), count = 1;
  for (std::size_t k = 0; k < d; ++k) {
    count *= qq;
    if (count > (1u << 20)) fail("size-cap-exceeded", "radical of f is too large to enumerate");
  }
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = a; b < d; ++b) {
      Scalar lhs = q.eval(add(rf[a], rf[b]));
      Scalar rhs = q.pair().canonical(q.codefect().reduce(q.eval(rf[a]) + q.eval(rf[b])));
      if (lhs != rhs) fail("invariant-violation", "q is not additive on the radical of f");
    }
  Span rq(q.dim());
  for (std::size_t idx = 0; idx < count; ++idx) {
    Vec v = zero_vec(q.ring(), q.dim());
    std::size_t c = idx;
    for (std::size_t k = 0; k < d; ++k) {
      v = add(v, scale_right(rf[k], q.ring().element(static_cast<std::uint32_t>(c % qq))));
      c /= qq;
    }
    if (q.eval(v).is_zero()) rq.add(v);
  }
  out.rad_q = rq.basis();
  out.image_dim = d - rq.rank();
  return out;
}

bool is_subspace(const PolarSpace& inner, const PolarSpace& outer) {
  if (inner.dim != outer.dim) fail("ambient-mismatch", "polar spaces live in different projective spaces");
  if (!inner.points.empty() && !outer.points.empty() && &inner.points[0][0].ring() != &outer.points[0][0].ring())
    fail("ambient-mismatch", "polar spaces over different fields");
  std::vector<bool> in_inner(outer.points.size(), false);
  for (const Vec& p : inner.points) {
    std::size_t i = outer.index_of(p);
    if (i == PolarSpace::npos) return false;
    in_inner[i] = true;
  }
  std::set<std::vector<std::size_t>> outer_lines(outer.lines.begin(), outer.lines.end());
  for (const auto& line : inner.lines) {
    std::vector<std::size_t> mapped;
    for (std::size_t a : line) mapped.push_back(outer.index_of(inner.points[a]));
    std::sort(mapped.begin(), mapped.end());
    if (!outer_lines.count(mapped)) return false;
  }
  for (const auto& line : outer.lines) {
    std::size_t hits = 0;
    for (std::size_t a : line) hits += in_inner[a];
    if (hits > 1 && hits < line.size()) return false;
  }
  return true;
}

SpanSide spans_or_totally_singular(const GenPseudoQuadraticForm& q) {
  auto pts = enumerate_points(q);
  if (rank(from_columns(pts, q.dim())) == q.dim()) return SpanSide::spans;
  SesquilinearForm f = q.f();
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      if (!f.eval(pts[i], pts[j]).is_zero() || !q.eval(add(pts[i], pts[j])).is_zero())
        fail("invariant-violation", "singular points neither span nor form a totally singular subspace");
  return SpanSide::totally_singular;
}

std::size_t nondegenerate_rank(const PolarSpace& s) {
  Collinear col = collinearity(s);
  Span rad(s.dim);
  for (std::size_t i = 0; i < s.points.size(); ++i) {
    bool all = true;
    for (std::size_t j = 0; j < s.points.size() && all; ++j) all = col[i][j];
    if (all) rad.add(s.points[i]);
  }
  return s.rank - rad.rank();
}

bool is_totally_singular_line(const GenPseudoQuadraticForm& q, const Vec& x, const Vec& y) {
  return is_singular(q, x) && is_singular(q, y) && q.f().eval(x, y).is_zero();
}

}  // namespace gpq
