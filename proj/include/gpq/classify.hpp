#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gpq/forms.hpp"
#include "gpq/polar.hpp"

namespace gpq {

// Point-line geometry embedded in PG(dim-1, K), K finite. Lines are lists of
// indices into `points`.
struct EmbeddedGeometry {
  const Ring* ring = nullptr;
  std::size_t dim = 0;
  std::vector<Vec> points;
  std::vector<std::vector<std::size_t>> lines;
};

EmbeddedGeometry geometry_of(const PolarSpace& s, const Ring& r);
// Fails with invalid-geometry naming the violated axiom, or grid-unsupported.
void validate_geometry(const EmbeddedGeometry& g);

struct RecoveredForm {
  SesquilinearForm f;
  std::size_t solution_dim = 0;  // F_p-dimension of the Gram solution space
};
RecoveredForm recover_sesquilinear(const EmbeddedGeometry& g);

struct GammaR {
  Basis e;                     // e(S)-basis chosen from the points
  std::vector<Scalar> gamma;   // γ_E at each geometry point
  ClosedSubgroup r;
  std::optional<GenPseudoQuadraticForm> q;  // set unless R̄ = K̄
};
GammaR build_gamma_and_r(const EmbeddedGeometry& g, const SesquilinearForm& f, const std::optional<Basis>& e = std::nullopt);
// γ_E(x) = Σ_{i<j} λ_i^σ f(e_i,e_j) λ_j for x = Σ e_i λ_i
Scalar gamma_e(const SesquilinearForm& f, const Basis& e, const Vec& x);

enum class Verdict { pseudo_quadratic, alternating };

struct Classification {
  Verdict verdict;
  SesquilinearForm f;
  GammaR gr;
  GenPseudoQuadraticForm form;  // q, or the alternating form with full codefect
};
Classification classify(const EmbeddedGeometry& g);

struct Hull {
  std::string branch;  // "identity", "dominant-cover" or "char2-extension"
  GenPseudoQuadraticForm form;
  std::vector<Vec> lifted;  // images of the geometry points, in order
};
Hull hull(const Classification& c, const EmbeddedGeometry& g);

// κ with scale_form(κ, q1) = q2, if any
std::optional<Scalar> proportional_test(const GenPseudoQuadraticForm& q1, const GenPseudoQuadraticForm& q2);
// κ with κ G1 = G2 for sesquilinear forms
std::optional<Scalar> proportional_gram(const Mat& g1, const Mat& g2);

}  // namespace gpq
