#include "gpq/random.hpp"

namespace gpq {

Scalar random_scalar(const Ring& r, Rng& rng, const SampleBounds& b) {
  switch (r.kind()) {
    case RingKind::finite_field:
      return Scalar::ff(r, static_cast<std::uint32_t>(rng() % r.order()));
    case RingKind::funcfield2: {
      Poly2 num;
      for (int i = 0; i <= b.degree; ++i)
        if (rng() & 1) num.set_bit(i);
      Poly2 den(1);
      if (b.fractions && (rng() % 3 == 0)) {
        den = Poly2();
        while (den.is_zero())
          for (int i = 0; i <= 2; ++i)
            if (rng() & 1) den.set_bit(i);
      }
      return Scalar::frac(r, num, den);
    }
    case RingKind::quaternions: {
      auto comp = [&] {
        long n = static_cast<long>(rng() % (2 * b.height + 1)) - b.height;
        long d = static_cast<long>(rng() % b.height) + 1;
        return Rational(n, d);
      };
      Rational a = comp(), x = comp(), y = comp(), z = comp();
      return Scalar::quat(r, a, x, y, z);
    }
  }
  return {};
}

Scalar random_nonzero(const Ring& r, Rng& rng, const SampleBounds& b) {
  for (;;) {
    Scalar s = random_scalar(r, rng, b);
    if (!s.is_zero()) return s;
  }
}

Vec random_vec(const Ring& r, std::size_t n, Rng& rng, const SampleBounds& b) {
  Vec v;
  v.reserve(n);
  for (std::size_t i = 0; i < n; ++i) v.push_back(random_scalar(r, rng, b));
  return v;
}

Mat random_invertible(const Ring& r, std::size_t n, Rng& rng, const SampleBounds& b, int steps) {
  Mat m = identity_mat(r, n);
  if (n < 2) {
    if (n == 1) m[0][0] = random_nonzero(r, rng, {0, false, 3});
    return m;
  }
  for (int s = 0; s < steps; ++s) {
    std::size_t i = rng() % n, j = rng() % (n - 1);
    if (j >= i) ++j;
    Scalar c = random_scalar(r, rng, b);
    // column operation col_j += col_i * c keeps det = 1
    for (std::size_t row = 0; row < n; ++row) m[row][j] += m[row][i] * c;
  }
  return m;
}

}  // namespace gpq
