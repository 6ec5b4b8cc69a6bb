#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gpq/admissible.hpp"
#include "gpq/linalg.hpp"

namespace gpq {

// Coordinates of a right K-vector space in a fixed ordered basis. A
// coordinate may be tagged with an element s of K̄∘: its value μ then stands
// for s∘μ in a cover block, so ordinary right multiplication of coordinates
// realises the twisted action on that block.
struct VectorSpaceSpec {
  const Ring* ring = nullptr;
  std::size_t dim = 0;
  std::vector<std::string> labels;
  std::vector<std::optional<Scalar>> twist;

  static VectorSpaceSpec standard(const Ring& r, std::size_t n);
  bool tagged(std::size_t i) const { return i < twist.size() && twist[i].has_value(); }
  std::size_t tagged_count() const;
};

class SesquilinearForm {
 public:
  // Throws not-reflexive when G_ji = G_ij^σ ε fails.
  SesquilinearForm(const AdmissiblePair& p, Mat gram);

  const AdmissiblePair& pair() const { return pair_; }
  const Mat& gram() const { return gram_; }
  std::size_t dim() const { return gram_.size(); }
  const Ring& ring() const { return pair_.ring(); }

  Scalar eval(const Vec& x, const Vec& y) const;

 private:
  AdmissiblePair pair_;
  Mat gram_;
};

// Generalized pseudo-quadratic form in facilitating shape:
// q(x) = Σ_{i<j} x_i^σ G_ij x_j + Σ_i x_i^σ g_i x_i  (mod R).
class GenPseudoQuadraticForm {
 public:
  // Validates reflexivity, trace-valuedness and R̄ ⊆ K̄∘ when R̄ is not full.
  GenPseudoQuadraticForm(const AdmissiblePair& p, Mat gram, std::vector<Scalar> values, ClosedSubgroup codefect,
                         std::optional<VectorSpaceSpec> space = std::nullopt);

  const AdmissiblePair& pair() const { return pair_; }
  const Ring& ring() const { return pair_.ring(); }
  const Mat& gram() const { return gram_; }
  const std::vector<Scalar>& values() const { return values_; }
  const ClosedSubgroup& codefect() const { return codefect_; }
  const VectorSpaceSpec& space() const { return space_; }
  std::size_t dim() const { return gram_.size(); }
  SesquilinearForm f() const { return SesquilinearForm(pair_, gram_); }

  // Σ_{i<j} x_i^σ G_ij x_j + Σ_i x_i^σ g_i x_i, before any reduction
  Scalar raw(const Vec& x) const;
  // canonical representative of q(x) in K̄/R̄
  Scalar eval(const Vec& x) const;

 private:
  AdmissiblePair pair_;
  Mat gram_;
  std::vector<Scalar> values_;
  ClosedSubgroup codefect_;
  VectorSpaceSpec space_;
};

using Basis = std::vector<Vec>;

// e_k = Σ_i e'_i α_ik
struct BasisChange {
  Basis source, target;
  Mat alpha;
};
BasisChange basis_change(const Basis& e, const Basis& e_prime);

Scalar eval_f(const SesquilinearForm& f, const Vec& x, const Vec& y);
bool check_reflexive(const AdmissiblePair& p, const Mat& gram);
// Right kernel of the Gram matrix, echelonized.
Basis radical(const SesquilinearForm& f);
// Diagonal test: G_ii ∈ K_{σ,−ε} for all i. Cross terms
// λ_i^σ G_ij λ_j + (λ_i^σ G_ij λ_j)^σ ε already lie in K_{σ,−ε}, and the
// diagonal terms λ^σ G_ii λ stay there by ∘-stability, so this suffices.
bool is_trace_valued(const AdmissiblePair& p, const Mat& gram);
bool is_trace_valued(const SesquilinearForm& f);
bool is_alternating(const SesquilinearForm& f);

CosetElement eval_q(const GenPseudoQuadraticForm& q, const Vec& x);
// Checks (Q'2) on `samples` random pairs drawn from `seed` before returning f.
SesquilinearForm sesquilinearization(const GenPseudoQuadraticForm& q, std::uint64_t seed = 7, int samples = 32);
bool is_singular(const GenPseudoQuadraticForm& q, const Vec& x);
bool is_trivial(const GenPseudoQuadraticForm& q);

// same pair, Gram, codefect, and basis values modulo the codefect
bool same_form(const GenPseudoQuadraticForm& a, const GenPseudoQuadraticForm& b);

// g_E(x, y) in E-coordinates; E must consist of q-singular vectors
Scalar facilitating_eval(const GenPseudoQuadraticForm& q, const Basis& e, const Vec& x, const Vec& y);
void check_singular_basis(const GenPseudoQuadraticForm& q, const Basis& e);

struct DifferenceValue {
  CosetElement direct;  // ḡ_E(x,x) − ḡ_E'(x,x)
  CosetElement closed;  // −Σ_i ḡ_E'(e_i,e_i)∘λ_i
};
DifferenceValue difference_map(const GenPseudoQuadraticForm& q, const Basis& e, const Basis& e_prime, const Vec& x);

GenPseudoQuadraticForm scale_form(const Scalar& kappa, const GenPseudoQuadraticForm& q);
// x -> x^(p^k) applied to all data; finite fields only
GenPseudoQuadraticForm apply_automorphism(unsigned k, const GenPseudoQuadraticForm& q);
Vec apply_automorphism(unsigned k, const Vec& x);

// Restriction to the coordinates `keep` (in order).
GenPseudoQuadraticForm restrict_coords(const GenPseudoQuadraticForm& q, const std::vector<std::size_t>& keep);
// The same form written in a new basis (columns of `basis` in old coordinates).
GenPseudoQuadraticForm change_basis(const GenPseudoQuadraticForm& q, const Basis& basis);

}  // namespace gpq
