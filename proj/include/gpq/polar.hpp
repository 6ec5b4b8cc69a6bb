#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gpq/forms.hpp"

namespace gpq {

// All normalized representatives of PG(n-1, q), sorted by coordinate codes.
std::vector<Vec> projective_points(const Ring& r, std::size_t n);
std::size_t projective_size(const Ring& r, std::size_t n);  // (q^n - 1)/(q - 1), saturating
std::vector<std::uint32_t> point_key(const Vec& v);

// Points and lines of S_q or S_f. Lines are sorted lists of point indices.
struct PolarSpace {
  std::string source;  // "q" or "f"
  std::size_t dim = 0;
  std::vector<Vec> points;
  std::vector<std::vector<std::size_t>> lines;
  std::size_t rank = 0;
  Basis radical;

  std::size_t index_of(const Vec& v) const;  // npos if absent
  bool has_point(const Vec& v) const { return index_of(v) != npos; }
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  std::map<std::vector<std::uint32_t>, std::size_t> index;
};

std::vector<Vec> enumerate_points(const GenPseudoQuadraticForm& q);
std::vector<Vec> enumerate_points(const SesquilinearForm& f);
std::vector<std::vector<std::size_t>> enumerate_lines(const GenPseudoQuadraticForm& q, const std::vector<Vec>& points);
std::vector<std::vector<std::size_t>> enumerate_lines(const SesquilinearForm& f, const std::vector<Vec>& points);

// all points of the projective line through [x] and [y]
std::vector<Vec> line_points(const Vec& x, const Vec& y);

PolarSpace polar_space(const GenPseudoQuadraticForm& q);
PolarSpace polar_space(const SesquilinearForm& f);
// Builds the index and computes the rank from point and line lists.
PolarSpace make_space(std::string source, std::size_t dim, std::vector<Vec> points,
                      std::vector<std::vector<std::size_t>> lines);

// Largest number of independent, pairwise collinear points.
std::size_t polar_rank(const PolarSpace& s);

struct QuadRadical {
  Basis rad_q;
  std::size_t image_dim = 0;
};
QuadRadical radical_of_q(const GenPseudoQuadraticForm& q);

bool is_subspace(const PolarSpace& inner, const PolarSpace& outer);

enum class SpanSide { spans, totally_singular };
SpanSide spans_or_totally_singular(const GenPseudoQuadraticForm& q);

// rank of the quotient of the polar space by its radical
std::size_t nondegenerate_rank(const PolarSpace& s);

// membership queries usable over any ring
bool is_totally_singular_line(const GenPseudoQuadraticForm& q, const Vec& x, const Vec& y);

std::size_t worker_count();

}  // namespace gpq
