#pragma once

#include <string>
#include <vector>

#include "gpq/forms.hpp"

namespace gpq {

// x_1 x_2 + ... + x_{2m-1} x_{2m}, pair (id, 1)
GenPseudoQuadraticForm hyperbolic_form(const Ring& r, std::size_t m);
// m-1 hyperbolic pairs plus x^2 + xy + ν y^2 with x^2 + x + ν irreducible
GenPseudoQuadraticForm elliptic_form(const Ring& r, std::size_t m);
// m hyperbolic pairs plus x^2, dimension 2m+1
GenPseudoQuadraticForm parabolic_form(const Ring& r, std::size_t m);
// alternating Gram, full codefect; its polar space is S_f = W(2m-1, q)
GenPseudoQuadraticForm symplectic_form(const Ring& r, std::size_t m);
// Hermitian over F_{q^2} with σ = x ↦ x^q, ε = 1, dimension n; an odd n
// ends with a diagonal coordinate of value ω where ω + ω^σ = 1
GenPseudoQuadraticForm hermitian_form(const Ring& r, std::size_t n);
// x_1^σ x_2 + x_3^σ x_4 + Q over H(Q), pair (conj, -1)
GenPseudoQuadraticForm quaternion_form();
// x_1 x_2 over F_2(t) modulo the codefect F_2(t^2)
GenPseudoQuadraticForm funcfield_hyperbolic_form();

struct NamedForm {
  std::string name;
  GenPseudoQuadraticForm form;
};
// Small forms over F_2, F_3, F_4 used by the classification checks.
std::vector<NamedForm> finite_catalogue();
GenPseudoQuadraticForm builtin_by_name(const std::string& name);
std::vector<std::string> builtin_names();

}  // namespace gpq
