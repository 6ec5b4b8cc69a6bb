#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace gpq {

// Polynomial over F_2; bit i of the word array is the coefficient of t^i.
// The word vector never carries trailing zero words, so zero is empty.
class Poly2 {
 public:
  Poly2() = default;
  explicit Poly2(std::uint64_t low);
  static Poly2 monomial(int degree);

  int degree() const;  // -1 for zero
  bool is_zero() const { return w_.empty(); }
  bool is_one() const { return w_.size() == 1 && w_[0] == 1; }
  bool bit(int i) const;
  void set_bit(int i, bool v = true);

  Poly2 operator+(const Poly2& o) const;
  Poly2& operator+=(const Poly2& o);
  Poly2 operator*(const Poly2& o) const;
  Poly2 shifted(int k) const;  // multiply by t^k
  std::pair<Poly2, Poly2> divmod(const Poly2& d) const;
  Poly2 operator/(const Poly2& d) const { return divmod(d).first; }
  Poly2 operator%(const Poly2& d) const { return divmod(d).second; }

  // Monomials t^(2i) land on i (even part) or t^(2i+1) on i (odd part).
  Poly2 even_part() const;
  Poly2 odd_part() const;
  // p(t) -> p(t^2)
  Poly2 spread() const;

  bool operator==(const Poly2& o) const { return w_ == o.w_; }
  bool operator!=(const Poly2& o) const { return w_ != o.w_; }
  // degree first, then coefficients from the top
  int compare(const Poly2& o) const;

  std::string str(const std::string& var) const;
  const std::vector<std::uint64_t>& words() const { return w_; }

 private:
  void trim();
  std::vector<std::uint64_t> w_;
};

Poly2 gcd(Poly2 a, Poly2 b);

}  // namespace gpq
