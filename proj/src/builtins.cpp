#include "gpq/builtins.hpp"

#include "gpq/error.hpp"
#include "gpq/textutil.hpp"

namespace gpq {

namespace {

AdmissiblePair id_pair(const Ring& r) { return AdmissiblePair::validate(r, AntiAuto::identity(), r.one()); }

// least ν (by code) with x^2 + x + ν irreducible
Scalar anisotropic_nu(const Ring& r) {
  for (const Scalar& nu : r.elements()) {
    bool root = false;
    for (const Scalar& x : r.elements())
      if ((x * x + x + nu).is_zero()) root = true;
    if (!root) return nu;
  }
  fail("internal", "no irreducible quadratic found");
}

void put_hyperbolic(Mat& g, std::size_t a, const AdmissiblePair& p) {
  g[a][a + 1] = p.ring().one();
  g[a + 1][a] = p.apply_sigma(p.ring().one()) * p.epsilon();
}

}  // namespace

GenPseudoQuadraticForm hyperbolic_form(const Ring& r, std::size_t m) {
  auto p = id_pair(r);
  Mat g = zero_mat(r, 2 * m, 2 * m);
  for (std::size_t k = 0; k < m; ++k) put_hyperbolic(g, 2 * k, p);
  return GenPseudoQuadraticForm(p, g, zero_vec(r, 2 * m), ClosedSubgroup::zero(p));
}

GenPseudoQuadraticForm elliptic_form(const Ring& r, std::size_t m) {
  require(m >= 1, "invalid-argument", "elliptic form needs m >= 1");
  auto p = id_pair(r);
  std::size_t n = 2 * m;
  Mat g = zero_mat(r, n, n);
  for (std::size_t k = 0; k + 1 < m; ++k) put_hyperbolic(g, 2 * k, p);
  Scalar nu = anisotropic_nu(r);
  std::size_t a = n - 2;
  g[a][a] = r.from_int(2);
  g[a][a + 1] = r.one();
  g[a + 1][a] = r.one();
  g[a + 1][a + 1] = nu + nu;
  Vec vals = zero_vec(r, n);
  vals[a] = r.one();
  vals[a + 1] = nu;
  return GenPseudoQuadraticForm(p, g, vals, ClosedSubgroup::zero(p));
}

GenPseudoQuadraticForm parabolic_form(const Ring& r, std::size_t m) {
  auto p = id_pair(r);
  std::size_t n = 2 * m + 1;
  Mat g = zero_mat(r, n, n);
  for (std::size_t k = 0; k < m; ++k) put_hyperbolic(g, 2 * k, p);
  g[n - 1][n - 1] = r.from_int(2);
  Vec vals = zero_vec(r, n);
  vals[n - 1] = r.one();
  return GenPseudoQuadraticForm(p, g, vals, ClosedSubgroup::zero(p));
}

GenPseudoQuadraticForm symplectic_form(const Ring& r, std::size_t m) {
  auto p = AdmissiblePair::validate(r, AntiAuto::identity(), -r.one());
  Mat g = zero_mat(r, 2 * m, 2 * m);
  for (std::size_t k = 0; k < m; ++k) put_hyperbolic(g, 2 * k, p);
  return GenPseudoQuadraticForm(p, g, zero_vec(r, 2 * m), ClosedSubgroup::full(p));
}

GenPseudoQuadraticForm hermitian_form(const Ring& r, std::size_t n) {
  require(r.finite() && r.n() % 2 == 0, "invalid-argument", "Hermitian forms need a field F_{q^2}");
  auto p = AdmissiblePair::validate(r, AntiAuto::frobenius(r.n() / 2), r.one());
  Mat g = zero_mat(r, n, n);
  for (std::size_t k = 0; k + 1 < n; k += 2) put_hyperbolic(g, k, p);
  Vec vals = zero_vec(r, n);
  if (n % 2 == 1) {
    Scalar omega;
    for (const Scalar& w : r.elements())
      if ((w + p.apply_sigma(w)).is_one()) {
        omega = w;
        break;
      }
    g[n - 1][n - 1] = r.one();
    vals[n - 1] = omega;
  }
  return GenPseudoQuadraticForm(p, g, vals, ClosedSubgroup::zero(p));
}

GenPseudoQuadraticForm quaternion_form() {
  const Ring& h = Ring::quaternions();
  auto p = AdmissiblePair::validate(h, AntiAuto::conjugation(), -h.one());
  Mat g = zero_mat(h, 4, 4);
  put_hyperbolic(g, 0, p);
  put_hyperbolic(g, 2, p);
  return GenPseudoQuadraticForm(p, g, zero_vec(h, 4), ClosedSubgroup::zero(p));
}

GenPseudoQuadraticForm funcfield_hyperbolic_form() {
  const Ring& r = Ring::funcfield2();
  auto p = id_pair(r);
  Mat g = zero_mat(r, 2, 2);
  put_hyperbolic(g, 0, p);
  return GenPseudoQuadraticForm(p, g, zero_vec(r, 2), ClosedSubgroup::generated(p, {r.one()}));
}

std::vector<NamedForm> finite_catalogue() {
  std::vector<NamedForm> out;
  const Ring& f2 = Ring::finite_field(2);
  const Ring& f3 = Ring::finite_field(3);
  const Ring& f4 = Ring::finite_field(2, 2);
  for (const Ring* r : {&f2, &f3, &f4}) {
    std::string q = std::to_string(r->order());
    out.push_back({"hyperbolic Q+(3," + q + ")", hyperbolic_form(*r, 2)});
    out.push_back({"parabolic Q(4," + q + ")", parabolic_form(*r, 2)});
    out.push_back({"symplectic W(3," + q + ")", symplectic_form(*r, 2)});
  }
  out.push_back({"elliptic Q-(5,2)", elliptic_form(f2, 3)});
  out.push_back({"elliptic Q-(5,3)", elliptic_form(f3, 3)});
  out.push_back({"hermitian H(3,4)", hermitian_form(f4, 4)});
  out.push_back({"hermitian H(4,4)", hermitian_form(f4, 5)});
  return out;
}

std::vector<std::string> builtin_names() {
  return {"hyperbolic(p, n, m)", "elliptic(p, n, m)", "parabolic(p, n, m)", "symplectic(p, n, m)",
          "hermitian(p, n, dim)", "quaternion()", "funcfield-hyperbolic()"};
}

GenPseudoQuadraticForm builtin_by_name(const std::string& name) {
  std::string t = trim(name);
  auto open = t.find('(');
  if (open == std::string::npos || t.back() != ')') throw ParseError("built-in: expected name(args), got '" + t + "'");
  std::string head = trim(t.substr(0, open));
  std::string body = t.substr(open + 1, t.size() - open - 2);
  std::vector<unsigned long> args;
  for (const std::string& a : split_top(body, ',')) {
    if (a.empty()) continue;
    try {
      args.push_back(std::stoul(a));
    } catch (const std::exception&) {
      throw ParseError("built-in: bad argument '" + a + "'");
    }
  }
  if (head == "quaternion" && args.empty()) return quaternion_form();
  if (head == "funcfield-hyperbolic" && args.empty()) return funcfield_hyperbolic_form();
  if (args.size() != 3) throw ParseError("built-in '" + head + "' takes (p, n, m)");
  const Ring& r = Ring::finite_field(static_cast<unsigned>(args[0]), static_cast<unsigned>(args[1]));
  std::size_t m = args[2];
  if (head == "hyperbolic") return hyperbolic_form(r, m);
  if (head == "elliptic") return elliptic_form(r, m);
  if (head == "parabolic") return parabolic_form(r, m);
  if (head == "symplectic") return symplectic_form(r, m);
  if (head == "hermitian") return hermitian_form(r, m);
  throw ParseError("unknown built-in '" + head + "'");
}

}  // namespace gpq
