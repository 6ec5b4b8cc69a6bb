#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gpq/forms.hpp"

namespace gpq {

// U ⊆ Rad(f) and U ∩ Rad(q) = 0
bool admits_quotient(const GenPseudoQuadraticForm& q, const Basis& u);

// V/U realised on the complement W spanned by the standard vectors at the
// non-pivot positions of the echelonized U.
struct Quotient {
  GenPseudoQuadraticForm form;
  Basis u;                            // echelonized
  std::vector<std::size_t> keep;      // coordinates spanning W
  Vec project(const Vec& x) const;    // π_U in W coordinates
};
Quotient quotient_form(const GenPseudoQuadraticForm& q, const Basis& u);

// Decomposition R̄ = S̄ ⊕ T̄ and a q-singular basis E. The cover lives on
// V ⊕ S̄ with coordinates (x_1..x_n, μ_1..μ_m), the vector Σ s_k∘μ_k of S̄
// carried by the tagged coordinates μ.
class CoverSpec {
 public:
  CoverSpec(const GenPseudoQuadraticForm& q, const std::vector<Scalar>& s_gens, const std::vector<Scalar>& t_gens,
            const Basis& e);

  const GenPseudoQuadraticForm& base() const { return q_; }
  const ClosedSubgroup& s() const { return s_; }
  const ClosedSubgroup& t() const { return t_; }
  const std::vector<Scalar>& s_basis() const { return s_basis_; }
  const std::vector<Scalar>& s_gens() const { return s_gens_; }
  const std::vector<Scalar>& t_gens() const { return t_gens_; }
  const Basis& basis() const { return e_; }
  std::size_t dim() const { return q_.dim() + s_basis_.size(); }

  // θ(r̄) in ∘-coordinates of the S̄ basis; r must lie in R
  Vec theta(const Scalar& r) const;
  // element of K represented by ∘-coordinates μ
  Scalar s_element(const Vec& mu) const;

 private:
  GenPseudoQuadraticForm q_;
  ClosedSubgroup s_, t_;
  std::vector<Scalar> s_gens_, t_gens_, s_basis_;
  Basis e_;
  Mat decomp_;          // columns: base coords of S and T preimage bases
  std::size_t s_cols_;  // leading columns belonging to S
};

GenPseudoQuadraticForm cover_form(const CoverSpec& spec);
GenPseudoQuadraticForm cover_form(const GenPseudoQuadraticForm& q, const std::vector<Scalar>& s_gens,
                                  const std::vector<Scalar>& t_gens, const Basis& e);

// x - θ(g_E(x,x)) for a q-singular x
Vec lift_point(const CoverSpec& spec, const Vec& x);
// projection of V ⊕ S̄ onto V along S̄
Vec drop_cover(const CoverSpec& spec, const Vec& v);

// A q-singular ordered basis: the standard basis when it qualifies, else
// points in enumeration order (finite fields) or a bounded random search.
Basis find_singular_basis(const GenPseudoQuadraticForm& q, std::uint64_t seed = 7);

CoverSpec dominant_spec(const GenPseudoQuadraticForm& q, const std::optional<Basis>& e = std::nullopt);
GenPseudoQuadraticForm dominant_cover(const GenPseudoQuadraticForm& q, const std::optional<Basis>& e = std::nullopt);

// Matrix of Δ_{E,E'} on V ⊕ S̄: x + r̄ ↦ x + θ(δ_{E,E'}(x)) + r̄
Mat basis_change_iso(const CoverSpec& spec, const Basis& e, const Basis& e_prime);

// q̃ is isomorphic to a cover of q̃_U: α maps Ṽ onto W ⊕ S̄ with S̄ the
// ∘-span of q̃(U) and T̄ the codefect of q̃.
struct Reconstruction {
  Quotient quotient;
  CoverSpec spec;
  GenPseudoQuadraticForm cover;
  Mat alpha;  // columns are images of the standard basis of Ṽ
};
Reconstruction reconstruct_cover(const GenPseudoQuadraticForm& qt, const Basis& u,
                                 const std::optional<Basis>& e = std::nullopt, std::uint64_t seed = 7,
                                 int samples = 64);

}  // namespace gpq
