#include "gpq/linalg.hpp"

#include <algorithm>

#include "gpq/error.hpp"

namespace gpq {

Vec zero_vec(const Ring& r, std::size_t n) { return Vec(n, r.zero()); }

Vec unit_vec(const Ring& r, std::size_t n, std::size_t i) {
  Vec v = zero_vec(r, n);
  v.at(i) = r.one();
  return v;
}

Mat zero_mat(const Ring& r, std::size_t rows, std::size_t cols) { return Mat(rows, zero_vec(r, cols)); }

Mat identity_mat(const Ring& r, std::size_t n) {
  Mat m = zero_mat(r, n, n);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = r.one();
  return m;
}

Vec add(const Vec& a, const Vec& b) {
  require(a.size() == b.size(), "dimension-mismatch", "vector lengths differ");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  require(a.size() == b.size(), "dimension-mismatch", "vector lengths differ");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec scale_right(const Vec& v, const Scalar& lambda) {
  Vec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] * lambda;
  return r;
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Vec mat_vec(const Mat& m, const Vec& x) {
  Vec r;
  r.reserve(m.size());
  for (const Vec& row : m) {
    require(row.size() == x.size(), "dimension-mismatch", "matrix/vector sizes differ");
    Scalar acc = x.empty() ? Scalar() : x[0].ring().zero();
    for (std::size_t j = 0; j < x.size(); ++j)
      if (!row[j].is_zero() && !x[j].is_zero()) acc += row[j] * x[j];
    r.push_back(acc);
  }
  return r;
}

Mat mat_mul(const Mat& a, const Mat& b) {
  std::size_t cols = b.empty() ? 0 : b[0].size();
  Mat r(a.size(), Vec(cols));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      Scalar acc = a[i][0].ring().zero();
      for (std::size_t k = 0; k < b.size(); ++k) acc += a[i][k] * b[k][j];
      r[i][j] = acc;
    }
  return r;
}

Mat transpose(const Mat& m) {
  if (m.empty()) return {};
  Mat t(m[0].size(), Vec(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
  return t;
}

Mat from_columns(const std::vector<Vec>& cols, std::size_t rows) {
  Mat m(rows, Vec(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j) {
    require(cols[j].size() == rows, "dimension-mismatch", "column length differs");
    for (std::size_t i = 0; i < rows; ++i) m[i][j] = cols[j][i];
  }
  return m;
}

Echelon left_rref(Mat a) {
  Echelon e;
  if (a.empty()) return e;
  std::size_t cols = a[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c].is_zero()) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    Scalar inv = a[r][c].inv();
    for (std::size_t j = c; j < cols; ++j)
      if (!a[r][j].is_zero()) a[r][j] = inv * a[r][j];
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      Scalar f = a[i][c];
      for (std::size_t j = c; j < cols; ++j)
        if (!a[r][j].is_zero()) a[i][j] -= f * a[r][j];
    }
    e.pivots.push_back(c);
    ++r;
  }
  a.resize(r);
  e.rows = std::move(a);
  return e;
}

std::size_t rank(const Mat& a) { return left_rref(a).pivots.size(); }

std::vector<Vec> right_kernel(const Mat& a, std::size_t cols) {
  if (a.empty()) {
    std::vector<Vec> out;
    return out;
  }
  const Ring& ring = a[0][0].ring();
  Echelon e = left_rref(a);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : e.pivots) is_pivot[c] = true;
  std::vector<Vec> out;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vec x = zero_vec(ring, cols);
    x[f] = ring.one();
    for (std::size_t r = 0; r < e.rows.size(); ++r) x[e.pivots[r]] = -e.rows[r][f];
    out.push_back(std::move(x));
  }
  return out;
}

std::optional<Vec> solve(const Mat& a, const Vec& b) {
  require(a.size() == b.size(), "dimension-mismatch", "system sizes differ");
  if (a.empty()) return Vec{};
  std::size_t cols = a[0].size();
  const Ring& ring = b[0].ring();
  Mat aug = a;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  Echelon e = left_rref(aug);
  if (!e.pivots.empty() && e.pivots.back() == cols) return std::nullopt;
  Vec x = zero_vec(ring, cols);
  for (std::size_t r = 0; r < e.rows.size(); ++r) x[e.pivots[r]] = e.rows[r][cols];
  return x;
}

std::optional<Mat> inverse(const Mat& a) {
  std::size_t n = a.size();
  if (n == 0) return Mat{};
  const Ring& ring = a[0][0].ring();
  Mat aug = a;
  for (std::size_t i = 0; i < n; ++i) {
    require(aug[i].size() == n, "dimension-mismatch", "matrix not square");
    for (std::size_t j = 0; j < n; ++j) aug[i].push_back(i == j ? ring.one() : ring.zero());
  }
  Echelon e = left_rref(aug);
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  Mat inv(n, Vec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = e.rows[i][n + j];
  return inv;
}

Span::Span(std::size_t dim, const std::vector<Vec>& vs) : dim_(dim) {
  for (const Vec& v : vs) add(v);
}

Vec Span::reduce(const Vec& v) const {
  require(v.size() == dim_, "dimension-mismatch", "vector outside ambient space");
  Vec w = v;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Scalar c = w[piv_[r]];
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j)
      if (!rows_[r][j].is_zero()) w[j] -= rows_[r][j] * c;
  }
  return w;
}

bool Span::contains(const Vec& v) const { return is_zero(reduce(v)); }

bool Span::add(const Vec& v) {
  Vec w = reduce(v);
  std::size_t p = 0;
  while (p < dim_ && w[p].is_zero()) ++p;
  if (p == dim_) return false;
  w = scale_right(w, w[p].inv());
  for (Vec& row : rows_) {
    const Scalar c = row[p];
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j)
      if (!w[j].is_zero()) row[j] -= w[j] * c;
  }
  auto pos = std::lower_bound(piv_.begin(), piv_.end(), p) - piv_.begin();
  piv_.insert(piv_.begin() + pos, p);
  rows_.insert(rows_.begin() + pos, std::move(w));
  return true;
}

std::optional<Vec> coordinates(const std::vector<Vec>& basis, const Vec& x) {
  if (basis.empty()) {
    if (is_zero(x)) return Vec{};
    return std::nullopt;
  }
  Mat m = from_columns(basis, x.size());
  if (rank(m) < basis.size()) return std::nullopt;
  auto sol = solve(m, x);
  return sol;
}

Vec projective_normalize(const Vec& v) {
  for (const Scalar& s : v)
    if (!s.is_zero()) return scale_right(v, s.inv());
  return v;
}

}  // namespace gpq
