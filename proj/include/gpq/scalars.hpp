#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gpq/poly2.hpp"

namespace gpq {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

enum class RingKind { finite_field, funcfield2, quaternions };

class Scalar;

// Coefficient ring. Instances are interned and immutable; compare by address.
//
// F_{p^n} is F_p[w]/(m(w)) with m the Conway polynomial where tabulated,
// otherwise the least primitive monic polynomial (coefficients compared as
// base-p integers c_0 + c_1 p + ...). Element codes use the same encoding.
class Ring {
 public:
  static const Ring& finite_field(unsigned p, unsigned n = 1);
  static const Ring& funcfield2(const std::string& var = "t");
  static const Ring& quaternions();

  RingKind kind() const { return kind_; }
  bool finite() const { return kind_ == RingKind::finite_field; }
  bool commutative() const { return kind_ != RingKind::quaternions; }
  unsigned characteristic() const { return p_; }
  unsigned p() const { return p_; }
  unsigned n() const { return n_; }
  std::uint32_t order() const { return q_; }  // finite fields only
  const std::string& var() const { return var_; }
  const std::vector<unsigned>& modulus() const { return modulus_; }
  std::string spec() const;

  int degree_cap() const { return 64; }
  unsigned height_cap_bits() const { return 8192; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long v) const;
  Scalar element(std::uint32_t code) const;  // finite fields
  Scalar generator() const;                  // w, t, or i
  std::vector<Scalar> elements() const;      // finite fields, in code order

  std::uint32_t ff_add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t ff_neg(std::uint32_t a) const;
  std::uint32_t ff_mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t ff_inv(std::uint32_t a) const;
  std::uint32_t ff_frobenius(std::uint32_t a, unsigned k) const;
  unsigned ff_digit(std::uint32_t a, unsigned i) const;

  Ring(const Ring&) = delete;
  Ring& operator=(const Ring&) = delete;

 private:
  Ring() = default;
  void build_tables();

  RingKind kind_{};
  unsigned p_ = 0, n_ = 0;
  std::uint32_t q_ = 0;
  std::string var_;
  std::vector<unsigned> modulus_;  // c_0..c_n, monic
  std::vector<std::uint32_t> exp_, log_;
  std::vector<std::uint32_t> pow_p_;
};

struct Frac2 {
  Poly2 num, den;
};

struct Quat {
  std::array<Rational, 4> c;  // 1, i, j, k
};

// Exact ring element. Payloads are canonical: fractions are reduced with a
// monic denominator, so equality of values is equality of payloads.
class Scalar {
 public:
  Scalar() = default;

  static Scalar ff(const Ring& r, std::uint32_t code);
  static Scalar frac(const Ring& r, Poly2 num, Poly2 den);
  static Scalar quat(const Ring& r, Rational a, Rational b, Rational c, Rational d);

  const Ring& ring() const;
  bool valid() const { return ring_ != nullptr; }
  bool is_zero() const;
  bool is_one() const;

  std::uint32_t code() const { return std::get<std::uint32_t>(v_); }
  const Frac2& fraction() const { return *std::get<std::shared_ptr<const Frac2>>(v_); }
  const Quat& quaternion() const { return *std::get<std::shared_ptr<const Quat>>(v_); }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;  // a * o^{-1}
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar inv() const;
  Scalar pow(long e) const;

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }
  // total order on payloads of one ring
  int compare(const Scalar& o) const;
  bool operator<(const Scalar& o) const { return compare(o) < 0; }

  std::string str() const;

 private:
  void check_same(const Scalar& o) const;
  const Ring* ring_ = nullptr;
  std::variant<std::uint32_t, std::shared_ptr<const Frac2>, std::shared_ptr<const Quat>> v_;
};

Scalar parse_scalar(const Ring& r, const std::string& text);

// Quaternion conjugation a - bi - cj - dk.
Scalar conjugate(const Scalar& q);

// u = u0 + t*u1 with u0, u1 in F_2(t^2).
std::pair<Scalar, Scalar> decompose_char2(const Scalar& u);

// Square root of an element known to be a square in characteristic 2:
// any element of a finite field of characteristic 2, or an element of
// F_2(t^2) inside F_2(t).
Scalar sqrt_char2(const Scalar& u);

// t -> c * base(t) * c^{-1}, base one of identity, x -> x^{p^k}, conjugation.
class AntiAuto {
 public:
  enum class Kind { identity, frobenius, conjugation };

  static AntiAuto identity() { return AntiAuto(Kind::identity, 0); }
  static AntiAuto frobenius(unsigned k) { return AntiAuto(Kind::frobenius, k); }
  static AntiAuto conjugation() { return AntiAuto(Kind::conjugation, 0); }

  Kind kind() const { return kind_; }
  unsigned power() const { return k_; }
  bool twisted() const { return inner_.valid(); }
  const Scalar& inner() const { return inner_; }

  bool compatible(const Ring& r) const;
  // Identity-equivalent Frobenius powers collapse to identity; inner
  // factors are scaled to a leading coefficient of 1.
  AntiAuto normalized(const Ring& r) const;
  // t -> kappa t^sigma kappa^{-1}
  AntiAuto conjugated_by(const Scalar& kappa) const;
  Scalar apply(const Scalar& t) const;

  bool operator==(const AntiAuto& o) const;
  bool operator!=(const AntiAuto& o) const { return !(*this == o); }
  std::string str() const;

 private:
  AntiAuto(Kind k, unsigned power) : kind_(k), k_(power) {}
  Kind kind_;
  unsigned k_;
  Scalar inner_;
};

AntiAuto parse_antiauto(const Ring& r, const std::string& text);

}  // namespace gpq
