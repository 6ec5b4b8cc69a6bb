#include "gpq/poly2.hpp"

#include <bit>
#include <stdexcept>

namespace gpq {

Poly2::Poly2(std::uint64_t low) {
  if (low) w_.push_back(low);
}

Poly2 Poly2::monomial(int degree) {
  Poly2 p;
  p.set_bit(degree);
  return p;
}

void Poly2::trim() {
  while (!w_.empty() && w_.back() == 0) w_.pop_back();
}

int Poly2::degree() const {
  if (w_.empty()) return -1;
  return static_cast<int>(w_.size() - 1) * 64 + 63 - std::countl_zero(w_.back());
}

bool Poly2::bit(int i) const {
  std::size_t k = static_cast<std::size_t>(i) / 64;
  if (k >= w_.size()) return false;
  return (w_[k] >> (i % 64)) & 1u;
}

void Poly2::set_bit(int i, bool v) {
  std::size_t k = static_cast<std::size_t>(i) / 64;
  if (k >= w_.size()) {
    if (!v) return;
    w_.resize(k + 1, 0);
  }
  std::uint64_t m = std::uint64_t{1} << (i % 64);
  if (v)
    w_[k] |= m;
  else
    w_[k] &= ~m;
  trim();
}

Poly2& Poly2::operator+=(const Poly2& o) {
  if (o.w_.size() > w_.size()) w_.resize(o.w_.size(), 0);
  for (std::size_t i = 0; i < o.w_.size(); ++i) w_[i] ^= o.w_[i];
  trim();
  return *this;
}

Poly2 Poly2::operator+(const Poly2& o) const {
  Poly2 r = *this;
  r += o;
  return r;
}

Poly2 Poly2::shifted(int k) const {
  if (is_zero() || k == 0) return *this;
  Poly2 r;
  std::size_t ws = static_cast<std::size_t>(k) / 64;
  int bs = k % 64;
  r.w_.assign(w_.size() + ws + 1, 0);
  for (std::size_t i = 0; i < w_.size(); ++i) {
    r.w_[i + ws] |= w_[i] << bs;
    if (bs) r.w_[i + ws + 1] |= w_[i] >> (64 - bs);
  }
  r.trim();
  return r;
}

Poly2 Poly2::operator*(const Poly2& o) const {
  if (is_zero() || o.is_zero()) return {};
  const Poly2& a = w_.size() <= o.w_.size() ? *this : o;
  const Poly2& b = w_.size() <= o.w_.size() ? o : *this;
  Poly2 r;
  r.w_.assign(a.w_.size() + b.w_.size() + 1, 0);
  for (std::size_t i = 0; i < a.w_.size(); ++i) {
    std::uint64_t word = a.w_[i];
    while (word) {
      int bit = std::countr_zero(word);
      word &= word - 1;
      for (std::size_t j = 0; j < b.w_.size(); ++j) {
        r.w_[i + j] ^= b.w_[j] << bit;
        if (bit) r.w_[i + j + 1] ^= b.w_[j] >> (64 - bit);
      }
    }
  }
  r.trim();
  return r;
}

std::pair<Poly2, Poly2> Poly2::divmod(const Poly2& d) const {
  if (d.is_zero()) throw std::domain_error("polynomial division by zero");
  Poly2 q, r = *this;
  int dd = d.degree();
  while (r.degree() >= dd) {
    int s = r.degree() - dd;
    q.set_bit(s);
    r += d.shifted(s);
  }
  return {q, r};
}

Poly2 Poly2::even_part() const {
  Poly2 r;
  for (int i = 0; i <= degree(); i += 2)
    if (bit(i)) r.set_bit(i / 2);
  return r;
}

Poly2 Poly2::odd_part() const {
  Poly2 r;
  for (int i = 1; i <= degree(); i += 2)
    if (bit(i)) r.set_bit(i / 2);
  return r;
}

Poly2 Poly2::spread() const {
  Poly2 r;
  for (int i = 0; i <= degree(); ++i)
    if (bit(i)) r.set_bit(2 * i);
  return r;
}

int Poly2::compare(const Poly2& o) const {
  int a = degree(), b = o.degree();
  if (a != b) return a < b ? -1 : 1;
  for (std::size_t i = w_.size(); i-- > 0;)
    if (w_[i] != o.w_[i]) return w_[i] < o.w_[i] ? -1 : 1;
  return 0;
}

std::string Poly2::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::string s;
  for (int i = degree(); i >= 0; --i) {
    if (!bit(i)) continue;
    if (!s.empty()) s += "+";
    if (i == 0)
      s += "1";
    else if (i == 1)
      s += var;
    else
      s += var + "^" + std::to_string(i);
  }
  return s;
}

Poly2 gcd(Poly2 a, Poly2 b) {
  while (!b.is_zero()) {
    Poly2 r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace gpq
