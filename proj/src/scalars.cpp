#include "gpq/scalars.hpp"

#include <cctype>
#include <map>
#include <mutex>
#include <tuple>

#include "gpq/error.hpp"

namespace gpq {

namespace {

bool is_prime(unsigned p) {
  if (p < 2) return false;
  for (unsigned d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Conway polynomials, coefficients c_0..c_n.
const std::map<std::pair<unsigned, unsigned>, std::vector<unsigned>>& conway_table() {
  static const std::map<std::pair<unsigned, unsigned>, std::vector<unsigned>> t = {
      {{2, 2}, {1, 1, 1}},
      {{2, 3}, {1, 1, 0, 1}},
      {{2, 4}, {1, 1, 0, 0, 1}},
      {{2, 5}, {1, 0, 1, 0, 0, 1}},
      {{2, 6}, {1, 1, 0, 1, 1, 0, 1}},
      {{2, 7}, {1, 1, 0, 0, 0, 0, 0, 1}},
      {{2, 8}, {1, 0, 1, 1, 1, 0, 0, 0, 1}},
      {{3, 2}, {2, 2, 1}},
      {{3, 3}, {1, 2, 0, 1}},
      {{3, 4}, {2, 0, 0, 2, 1}},
      {{5, 2}, {2, 4, 1}},
      {{5, 3}, {3, 3, 0, 1}},
      {{7, 2}, {3, 6, 1}},
      {{7, 3}, {4, 0, 6, 1}},
      {{11, 2}, {2, 7, 1}},
      {{13, 2}, {2, 12, 1}},
  };
  return t;
}

void check_rational(const Rational& x, unsigned cap) {
  using boost::multiprecision::msb;
  auto n = boost::multiprecision::numerator(x);
  auto d = boost::multiprecision::denominator(x);
  if (n != 0 && msb(abs(n)) >= cap) fail("overflow", "rational height exceeds cap");
  if (msb(d) >= cap) fail("overflow", "rational height exceeds cap");
}

}  // namespace

// ---------------------------------------------------------------- Ring

const Ring& Ring::finite_field(unsigned p, unsigned n) {
  static std::mutex mu;
  static std::map<std::pair<unsigned, unsigned>, std::unique_ptr<Ring>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(p, n);
  auto it = cache.find(key);
  if (it != cache.end()) return *it->second;
  if (!is_prime(p)) fail("invalid-ring", "field characteristic " + std::to_string(p) + " is not prime");
  if (n < 1) fail("invalid-ring", "field degree must be at least 1");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < n; ++i) {
    q *= p;
    if (q > (1u << 16)) fail("size-cap-exceeded", "field order exceeds 2^16");
  }
  std::unique_ptr<Ring> r(new Ring());
  r->kind_ = RingKind::finite_field;
  r->p_ = p;
  r->n_ = n;
  r->q_ = static_cast<std::uint32_t>(q);
  r->var_ = "w";
  r->build_tables();
  const Ring& ref = *r;
  cache.emplace(key, std::move(r));
  return ref;
}

const Ring& Ring::funcfield2(const std::string& var) {
  static std::mutex mu;
  static std::map<std::string, std::unique_ptr<Ring>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(var);
  if (it != cache.end()) return *it->second;
  if (var.empty() || var == "i" || var == "j" || var == "k")
    fail("invalid-ring", "bad indeterminate name '" + var + "'");
  for (char c : var)
    if (!std::isalpha(static_cast<unsigned char>(c))) fail("invalid-ring", "bad indeterminate name '" + var + "'");
  std::unique_ptr<Ring> r(new Ring());
  r->kind_ = RingKind::funcfield2;
  r->p_ = 2;
  r->n_ = 0;
  r->var_ = var;
  const Ring& ref = *r;
  cache.emplace(var, std::move(r));
  return ref;
}

const Ring& Ring::quaternions() {
  static const Ring* r = [] {
    Ring* x = new Ring();
    x->kind_ = RingKind::quaternions;
    x->p_ = 0;
    x->n_ = 0;
    return x;
  }();
  return *r;
}

std::string Ring::spec() const {
  switch (kind_) {
    case RingKind::finite_field:
      return "field(" + std::to_string(p_) + ", " + std::to_string(n_) + ")";
    case RingKind::funcfield2:
      return "funcfield2(" + var_ + ")";
    case RingKind::quaternions:
      return "quaternions()";
  }
  return {};
}

unsigned Ring::ff_digit(std::uint32_t a, unsigned i) const { return (a / pow_p_[i]) % p_; }

std::uint32_t Ring::ff_add(std::uint32_t a, std::uint32_t b) const {
  if (p_ == 2) return a ^ b;
  std::uint32_t r = 0;
  for (unsigned i = 0; i < n_; ++i) r += ((ff_digit(a, i) + ff_digit(b, i)) % p_) * pow_p_[i];
  return r;
}

std::uint32_t Ring::ff_neg(std::uint32_t a) const {
  if (p_ == 2) return a;
  std::uint32_t r = 0;
  for (unsigned i = 0; i < n_; ++i) r += ((p_ - ff_digit(a, i)) % p_) * pow_p_[i];
  return r;
}

std::uint32_t Ring::ff_mul(std::uint32_t a, std::uint32_t b) const {
  if (a == 0 || b == 0) return 0;
  return exp_[(log_[a] + log_[b]) % (q_ - 1)];
}

std::uint32_t Ring::ff_inv(std::uint32_t a) const {
  if (a == 0) fail("division-by-zero", "inverse of zero");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

std::uint32_t Ring::ff_frobenius(std::uint32_t a, unsigned k) const {
  if (a == 0) return 0;
  std::uint64_t e = log_[a];
  for (unsigned i = 0; i < k % n_; ++i) e = (e * p_) % (q_ - 1);
  return exp_[e];
}

void Ring::build_tables() {
  pow_p_.assign(n_ + 1, 1);
  for (unsigned i = 1; i <= n_; ++i) pow_p_[i] = pow_p_[i - 1] * p_;

  // multiplication of codes as polynomials modulo a monic modulus
  auto mulmod = [this](std::uint32_t a, std::uint32_t b, const std::vector<unsigned>& m) {
    std::vector<unsigned> prod(2 * n_, 0);
    for (unsigned i = 0; i < n_; ++i)
      for (unsigned j = 0; j < n_; ++j)
        prod[i + j] = (prod[i + j] + ((a / pow_p_[i]) % p_) * ((b / pow_p_[j]) % p_)) % p_;
    for (unsigned d = 2 * n_ - 1; d >= n_ && d < 2 * n_; --d) {
      unsigned c = prod[d];
      if (!c) continue;
      for (unsigned i = 0; i <= n_; ++i)
        prod[d - n_ + i] = (prod[d - n_ + i] + (p_ - (c * m[i]) % p_)) % p_;
    }
    std::uint32_t r = 0;
    for (unsigned i = 0; i < n_; ++i) r += prod[i] * pow_p_[i];
    return r;
  };

  auto fill_from = [&](std::uint32_t g, const std::vector<unsigned>& m) {
    exp_.assign(q_, 0);
    log_.assign(q_, 0);
    std::uint32_t x = 1;
    for (std::uint32_t e = 0; e + 1 < q_; ++e) {
      if (e > 0 && x == 1) return false;
      exp_[e] = x;
      log_[x] = e;
      x = mulmod(x, g, m);
    }
    return x == 1;
  };

  if (n_ == 1) {
    modulus_ = {0, 1};
    for (std::uint32_t g = 1; g < q_; ++g)
      if (fill_from(g, modulus_)) return;
    fail("internal", "no primitive root found");
  }

  auto it = conway_table().find({p_, n_});
  if (it != conway_table().end()) {
    modulus_ = it->second;
    if (!fill_from(p_, modulus_)) fail("internal", "tabulated modulus is not primitive");
    return;
  }
  // least primitive monic polynomial of degree n
  for (std::uint32_t low = 1; low < q_; ++low) {
    std::vector<unsigned> m(n_ + 1, 0);
    for (unsigned i = 0; i < n_; ++i) m[i] = (low / pow_p_[i]) % p_;
    m[n_] = 1;
    if (m[0] == 0) continue;
    if (fill_from(p_, m)) {
      modulus_ = m;
      return;
    }
  }
  fail("internal", "no primitive polynomial found");
}

Scalar Ring::zero() const {
  switch (kind_) {
    case RingKind::finite_field:
      return Scalar::ff(*this, 0);
    case RingKind::funcfield2:
      return Scalar::frac(*this, Poly2(), Poly2(1));
    case RingKind::quaternions:
      return Scalar::quat(*this, 0, 0, 0, 0);
  }
  return {};
}

Scalar Ring::one() const { return from_int(1); }

Scalar Ring::from_int(long v) const {
  switch (kind_) {
    case RingKind::finite_field: {
      long m = v % static_cast<long>(p_);
      if (m < 0) m += p_;
      return Scalar::ff(*this, static_cast<std::uint32_t>(m));
    }
    case RingKind::funcfield2:
      return Scalar::frac(*this, Poly2(static_cast<std::uint64_t>(v & 1)), Poly2(1));
    case RingKind::quaternions:
      return Scalar::quat(*this, Rational(v), 0, 0, 0);
  }
  return {};
}

Scalar Ring::element(std::uint32_t code) const {
  if (kind_ != RingKind::finite_field || code >= q_) fail("ring-mismatch", "element code outside field");
  return Scalar::ff(*this, code);
}

Scalar Ring::generator() const {
  switch (kind_) {
    case RingKind::finite_field:
      return n_ == 1 ? Scalar::ff(*this, exp_.size() > 1 ? exp_[1] : 1) : Scalar::ff(*this, p_);
    case RingKind::funcfield2:
      return Scalar::frac(*this, Poly2::monomial(1), Poly2(1));
    case RingKind::quaternions:
      return Scalar::quat(*this, 0, 1, 0, 0);
  }
  return {};
}

std::vector<Scalar> Ring::elements() const {
  if (kind_ != RingKind::finite_field) fail("infinite-ring", "ring " + spec() + " is not finite");
  std::vector<Scalar> out;
  out.reserve(q_);
  for (std::uint32_t c = 0; c < q_; ++c) out.push_back(Scalar::ff(*this, c));
  return out;
}

// ---------------------------------------------------------------- Scalar

Scalar Scalar::ff(const Ring& r, std::uint32_t code) {
  Scalar s;
  s.ring_ = &r;
  s.v_ = code;
  return s;
}

Scalar Scalar::frac(const Ring& r, Poly2 num, Poly2 den) {
  if (den.is_zero()) fail("division-by-zero", "zero denominator");
  if (num.is_zero()) {
    den = Poly2(1);
  } else {
    Poly2 g = gcd(num, den);
    if (!g.is_one()) {
      num = num / g;
      den = den / g;
    }
  }
  if (num.degree() > r.degree_cap() || den.degree() > r.degree_cap())
    fail("overflow", "polynomial degree exceeds cap " + std::to_string(r.degree_cap()));
  Scalar s;
  s.ring_ = &r;
  s.v_ = std::make_shared<const Frac2>(Frac2{std::move(num), std::move(den)});
  return s;
}

Scalar Scalar::quat(const Ring& r, Rational a, Rational b, Rational c, Rational d) {
  for (const Rational* x : {&a, &b, &c, &d}) check_rational(*x, r.height_cap_bits());
  Scalar s;
  s.ring_ = &r;
  s.v_ = std::make_shared<const Quat>(Quat{{std::move(a), std::move(b), std::move(c), std::move(d)}});
  return s;
}

const Ring& Scalar::ring() const {
  if (!ring_) fail("invalid-element", "uninitialized ring element");
  return *ring_;
}

void Scalar::check_same(const Scalar& o) const {
  if (!ring_ || ring_ != o.ring_) fail("ring-mismatch", "operands belong to different rings");
}

bool Scalar::is_zero() const {
  switch (ring().kind()) {
    case RingKind::finite_field:
      return code() == 0;
    case RingKind::funcfield2:
      return fraction().num.is_zero();
    case RingKind::quaternions: {
      const auto& q = quaternion().c;
      return q[0] == 0 && q[1] == 0 && q[2] == 0 && q[3] == 0;
    }
  }
  return false;
}

bool Scalar::is_one() const { return *this == ring().one(); }

Scalar Scalar::operator+(const Scalar& o) const {
  check_same(o);
  switch (ring_->kind()) {
    case RingKind::finite_field:
      return ff(*ring_, ring_->ff_add(code(), o.code()));
    case RingKind::funcfield2: {
      const Frac2& a = fraction();
      const Frac2& b = o.fraction();
      if (a.den == b.den) return frac(*ring_, a.num + b.num, a.den);
      return frac(*ring_, a.num * b.den + b.num * a.den, a.den * b.den);
    }
    case RingKind::quaternions: {
      const auto& a = quaternion().c;
      const auto& b = o.quaternion().c;
      return quat(*ring_, a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]);
    }
  }
  return {};
}

Scalar Scalar::operator-() const {
  switch (ring().kind()) {
    case RingKind::finite_field:
      return ff(*ring_, ring_->ff_neg(code()));
    case RingKind::funcfield2:
      return *this;
    case RingKind::quaternions: {
      const auto& a = quaternion().c;
      return quat(*ring_, -a[0], -a[1], -a[2], -a[3]);
    }
  }
  return {};
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  check_same(o);
  switch (ring_->kind()) {
    case RingKind::finite_field:
      return ff(*ring_, ring_->ff_mul(code(), o.code()));
    case RingKind::funcfield2: {
      const Frac2& a = fraction();
      const Frac2& b = o.fraction();
      return frac(*ring_, a.num * b.num, a.den * b.den);
    }
    case RingKind::quaternions: {
      const auto& a = quaternion().c;
      const auto& b = o.quaternion().c;
      return quat(*ring_, a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
                  a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
                  a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
                  a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0]);
    }
  }
  return {};
}

Scalar Scalar::inv() const {
  if (is_zero()) fail("division-by-zero", "division by zero");
  switch (ring_->kind()) {
    case RingKind::finite_field:
      return ff(*ring_, ring_->ff_inv(code()));
    case RingKind::funcfield2:
      return frac(*ring_, fraction().den, fraction().num);
    case RingKind::quaternions: {
      const auto& a = quaternion().c;
      Rational nrm = a[0] * a[0] + a[1] * a[1] + a[2] * a[2] + a[3] * a[3];
      return quat(*ring_, a[0] / nrm, -a[1] / nrm, -a[2] / nrm, -a[3] / nrm);
    }
  }
  return {};
}

Scalar Scalar::operator/(const Scalar& o) const {
  check_same(o);
  return *this * o.inv();
}

Scalar Scalar::pow(long e) const {
  Scalar base = e < 0 ? inv() : *this;
  unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  Scalar r = ring().one();
  while (k) {
    if (k & 1) r = r * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return r;
}

bool Scalar::operator==(const Scalar& o) const { return compare(o) == 0; }

int Scalar::compare(const Scalar& o) const {
  check_same(o);
  switch (ring_->kind()) {
    case RingKind::finite_field:
      return code() < o.code() ? -1 : (code() > o.code() ? 1 : 0);
    case RingKind::funcfield2: {
      int c = fraction().num.compare(o.fraction().num);
      return c ? c : fraction().den.compare(o.fraction().den);
    }
    case RingKind::quaternions: {
      const auto& a = quaternion().c;
      const auto& b = o.quaternion().c;
      for (int i = 0; i < 4; ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
      return 0;
    }
  }
  return 0;
}

std::string Scalar::str() const {
  const Ring& r = ring();
  switch (r.kind()) {
    case RingKind::finite_field: {
      std::uint32_t a = code();
      if (r.n() == 1) return std::to_string(a);
      if (a == 0) return "0";
      std::string s;
      for (unsigned i = r.n(); i-- > 0;) {
        unsigned c = r.ff_digit(a, i);
        if (!c) continue;
        if (!s.empty()) s += "+";
        if (i == 0) {
          s += std::to_string(c);
          continue;
        }
        if (c != 1) s += std::to_string(c);
        s += r.var();
        if (i > 1) s += "^" + std::to_string(i);
      }
      return s;
    }
    case RingKind::funcfield2: {
      const Frac2& f = fraction();
      std::string num = f.num.str(r.var());
      if (f.den.is_one()) return num;
      auto wrap = [](const std::string& x) {
        return x.find('+') == std::string::npos ? x : "(" + x + ")";
      };
      return wrap(num) + "/" + wrap(f.den.str(r.var()));
    }
    case RingKind::quaternions: {
      const auto& q = quaternion().c;
      static const char* unit[4] = {"", "i", "j", "k"};
      std::string s;
      for (int i = 0; i < 4; ++i) {
        if (q[i] == 0) continue;
        bool neg = q[i] < 0;
        Rational mag = neg ? Rational(-q[i]) : q[i];
        std::string coef = mag.str();
        if (i > 0 && mag == 1) coef.clear();
        if (s.empty())
          s += neg ? "-" : "";
        else
          s += neg ? " - " : " + ";
        s += coef + unit[i];
      }
      return s.empty() ? "0" : s;
    }
  }
  return {};
}

Scalar conjugate(const Scalar& q) {
  if (q.ring().kind() != RingKind::quaternions) fail("incompatible-antiauto", "conjugation needs quaternions");
  const auto& a = q.quaternion().c;
  return Scalar::quat(q.ring(), a[0], -a[1], -a[2], -a[3]);
}

std::pair<Scalar, Scalar> decompose_char2(const Scalar& u) {
  const Ring& r = u.ring();
  if (r.kind() != RingKind::funcfield2) fail("ring-mismatch", "decompose_char2 needs F_2(t)");
  const Frac2& f = u.fraction();
  Poly2 n = f.num * f.den;
  Poly2 d2 = f.den.spread();
  return {Scalar::frac(r, n.even_part().spread(), d2), Scalar::frac(r, n.odd_part().spread(), d2)};
}

Scalar sqrt_char2(const Scalar& u) {
  const Ring& r = u.ring();
  if (r.characteristic() != 2) fail("not-a-square", "square roots need characteristic 2");
  if (r.kind() == RingKind::finite_field) return Scalar::ff(r, r.ff_frobenius(u.code(), r.n() - 1));
  const Frac2& f = u.fraction();
  if (!f.num.odd_part().is_zero() || !f.den.odd_part().is_zero())
    fail("not-a-square", u.str() + " is not in F_2(t^2)");
  return Scalar::frac(r, f.num.even_part(), f.den.even_part());
}

// ---------------------------------------------------------------- parsing

namespace {

class ExprParser {
 public:
  ExprParser(const Ring& r, const std::string& s) : r_(r), s_(s) {}

  Scalar run() {
    Scalar v = expr();
    skip();
    if (pos_ != s_.size()) error("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void error(const std::string& msg) {
    throw ParseError("element '" + s_ + "': " + msg, 0, pos_ + 1);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool starts_atom() {
    char c = peek();
    return std::isalnum(static_cast<unsigned char>(c)) || c == '(';
  }

  Scalar expr() {
    Scalar acc = r_.zero();
    bool first = true;
    for (;;) {
      char c = peek();
      bool neg = false;
      if (c == '+' || c == '-') {
        neg = c == '-';
        ++pos_;
      } else if (!first) {
        break;
      }
      Scalar t = term();
      acc = neg ? acc - t : acc + t;
      first = false;
    }
    return acc;
  }

  Scalar term() {
    Scalar acc = power();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc = acc * power();
      } else if (c == '/') {
        ++pos_;
        acc = acc / power();
      } else if (starts_atom()) {
        acc = acc * power();
      } else {
        return acc;
      }
    }
  }

  Scalar power() {
    Scalar b = atom();
    if (peek() == '^') {
      ++pos_;
      bool neg = false;
      if (peek() == '-') {
        neg = true;
        ++pos_;
      }
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) error("exponent expected");
      long e = std::stol(s_.substr(start, pos_ - start));
      b = b.pow(neg ? -e : e);
    }
    return b;
  }

  Scalar atom() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      Scalar v = expr();
      if (peek() != ')') error("')' expected");
      ++pos_;
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      BigInt v(s_.substr(start, pos_ - start));
      switch (r_.kind()) {
        case RingKind::finite_field:
          return r_.from_int(static_cast<long>(v % r_.p()));
        case RingKind::funcfield2:
          return r_.from_int(static_cast<long>(v % 2));
        case RingKind::quaternions:
          return Scalar::quat(r_, Rational(v), 0, 0, 0);
      }
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      if (r_.kind() == RingKind::quaternions) {
        ++pos_;
      } else {
        while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      }
      std::string id = s_.substr(start, pos_ - start);
      if (r_.kind() == RingKind::quaternions) {
        if (id == "i") return Scalar::quat(r_, 0, 1, 0, 0);
        if (id == "j") return Scalar::quat(r_, 0, 0, 1, 0);
        if (id == "k") return Scalar::quat(r_, 0, 0, 0, 1);
      } else if (id == r_.var() && !(r_.finite() && r_.n() == 1)) {
        return r_.kind() == RingKind::finite_field ? Scalar::ff(r_, r_.p()) : r_.generator();
      }
      pos_ = start;
      error("unknown symbol '" + id + "'");
    }
    error(c ? "unexpected '" + std::string(1, c) + "'" : "unexpected end of input");
  }

  const Ring& r_;
  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

Scalar parse_scalar(const Ring& r, const std::string& text) {
  std::string s = text;
  if (s.size() >= 2 && s.front() == '"' && s.back() == '"') s = s.substr(1, s.size() - 2);
  try {
    return ExprParser(r, s).run();
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError("element '" + s + "': " + e.what());
  }
}

// ---------------------------------------------------------------- AntiAuto

bool AntiAuto::compatible(const Ring& r) const {
  switch (kind_) {
    case Kind::identity:
      return r.commutative();
    case Kind::frobenius:
      return r.finite();
    case Kind::conjugation:
      return r.kind() == RingKind::quaternions;
  }
  return false;
}

AntiAuto AntiAuto::normalized(const Ring& r) const {
  if (!compatible(r)) fail("incompatible-antiauto", "anti-automorphism " + str() + " does not act on " + r.spec());
  AntiAuto a = *this;
  if (a.kind_ == Kind::frobenius) {
    a.k_ %= r.n();
    if (a.k_ == 0) a.kind_ = Kind::identity;
  }
  if (r.commutative()) {
    a.inner_ = Scalar();
    return a;
  }
  if (a.inner_.valid()) {
    const auto& c = a.inner_.quaternion().c;
    int lead = 0;
    while (lead < 4 && c[lead] == 0) ++lead;
    if (lead == 4) fail("division-by-zero", "zero inner factor");
    if (c[1] == 0 && c[2] == 0 && c[3] == 0) {
      a.inner_ = Scalar();
    } else {
      Rational s = c[lead];
      a.inner_ = Scalar::quat(r, c[0] / s, c[1] / s, c[2] / s, c[3] / s);
    }
  }
  return a;
}

AntiAuto AntiAuto::conjugated_by(const Scalar& kappa) const {
  if (kappa.is_zero()) fail("zero-scalar", "conjugating factor must be nonzero");
  AntiAuto a = *this;
  a.inner_ = inner_.valid() ? kappa * inner_ : kappa;
  return a.normalized(kappa.ring());
}

Scalar AntiAuto::apply(const Scalar& t) const {
  const Ring& r = t.ring();
  if (!compatible(r)) fail("incompatible-antiauto", "anti-automorphism " + str() + " does not act on " + r.spec());
  Scalar s;
  switch (kind_) {
    case Kind::identity:
      s = t;
      break;
    case Kind::frobenius:
      s = Scalar::ff(r, r.ff_frobenius(t.code(), k_));
      break;
    case Kind::conjugation:
      s = conjugate(t);
      break;
  }
  if (inner_.valid()) s = inner_ * s * inner_.inv();
  return s;
}

bool AntiAuto::operator==(const AntiAuto& o) const {
  if (kind_ != o.kind_ || k_ != o.k_ || inner_.valid() != o.inner_.valid()) return false;
  return !inner_.valid() || inner_ == o.inner_;
}

std::string AntiAuto::str() const {
  std::string base;
  switch (kind_) {
    case Kind::identity:
      base = "id";
      break;
    case Kind::frobenius:
      base = "frob^" + std::to_string(k_);
      break;
    case Kind::conjugation:
      base = "conj";
      break;
  }
  if (inner_.valid()) base += "[" + inner_.str() + "]";
  return base;
}

AntiAuto parse_antiauto(const Ring& r, const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  AntiAuto a = AntiAuto::identity();
  std::string inner;
  auto br = s.find('[');
  if (br != std::string::npos) {
    if (s.back() != ']') throw ParseError("anti-automorphism '" + text + "': ']' expected");
    inner = s.substr(br + 1, s.size() - br - 2);
    s = s.substr(0, br);
  }
  if (s == "id" || s == "identity") {
    a = AntiAuto::identity();
  } else if (s == "conj") {
    a = AntiAuto::conjugation();
  } else if (s == "frob") {
    a = AntiAuto::frobenius(1);
  } else if (s.rfind("frob^", 0) == 0 && s.size() > 5 &&
             s.find_first_not_of("0123456789", 5) == std::string::npos) {
    a = AntiAuto::frobenius(static_cast<unsigned>(std::stoul(s.substr(5))));
  } else {
    throw ParseError("anti-automorphism '" + text + "' is not id, frob^k or conj");
  }
  if (!inner.empty()) {
    if (a.kind() != AntiAuto::Kind::conjugation)
      throw ParseError("inner factor only applies to conj");
    return a.conjugated_by(parse_scalar(r, inner));
  }
  return a;
}

}  // namespace gpq
