#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "gpq/scalars.hpp"

namespace gpq {

using Vec = std::vector<Scalar>;
using Mat = std::vector<Vec>;  // row-major

Vec zero_vec(const Ring& r, std::size_t n);
Vec unit_vec(const Ring& r, std::size_t n, std::size_t i);
Mat zero_mat(const Ring& r, std::size_t rows, std::size_t cols);
Mat identity_mat(const Ring& r, std::size_t n);

Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale_right(const Vec& v, const Scalar& lambda);  // v * lambda
bool is_zero(const Vec& v);

// (M x)_i = sum_j M_ij x_j
Vec mat_vec(const Mat& m, const Vec& x);
Mat mat_mul(const Mat& a, const Mat& b);
Mat transpose(const Mat& m);
// matrix whose columns are the given vectors
Mat from_columns(const std::vector<Vec>& cols, std::size_t rows);

// Reduced row echelon form under left row operations, the right setting for
// equation systems A x = b with unknowns multiplied on the right.
struct Echelon {
  Mat rows;
  std::vector<std::size_t> pivots;
};
Echelon left_rref(Mat a);
std::size_t rank(const Mat& a);
// basis of {x : A x = 0}
std::vector<Vec> right_kernel(const Mat& a, std::size_t cols);
std::optional<Vec> solve(const Mat& a, const Vec& b);
std::optional<Mat> inverse(const Mat& a);

// Right span of vectors, kept in reduced echelon form with pivot entries 1.
class Span {
 public:
  explicit Span(std::size_t dim = 0) : dim_(dim) {}
  Span(std::size_t dim, const std::vector<Vec>& vs);

  bool add(const Vec& v);  // true if the span grew
  Vec reduce(const Vec& v) const;
  bool contains(const Vec& v) const;
  std::size_t rank() const { return rows_.size(); }
  std::size_t dim() const { return dim_; }
  const std::vector<Vec>& basis() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return piv_; }

 private:
  std::size_t dim_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> piv_;
};

// Coordinates lambda with x = sum_i basis[i] * lambda_i; nullopt if x is
// outside the span or the basis is dependent.
std::optional<Vec> coordinates(const std::vector<Vec>& basis, const Vec& x);

// Scale on the right so that the first nonzero coordinate is 1.
Vec projective_normalize(const Vec& v);

}  // namespace gpq
