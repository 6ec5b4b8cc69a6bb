#pragma once

#include <memory>
#include <string>
#include <vector>

#include "gpq/linalg.hpp"
#include "gpq/scalars.hpp"

namespace gpq {

// Coordinates of K over a central subfield B that sigma fixes: F_p for
// F_{p^n} (digits of the element code), Q for H(Q) (components, stored as
// real quaternions), F_2(t^2) for F_2(t) (the pair from decompose_char2).
// Every additive subgroup that arises below is a B-subspace of K.
std::size_t base_degree(const Ring& r);
Vec base_coords(const Scalar& t);
Scalar from_base_coords(const Ring& r, const Vec& c);
std::vector<Scalar> base_basis(const Ring& r);  // b_a with coords e_a

class AdmissiblePair {
 public:
  static AdmissiblePair validate(const Ring& r, const AntiAuto& sigma, const Scalar& eps);

  const Ring& ring() const;
  const AntiAuto& sigma() const;
  const Scalar& epsilon() const;

  // K_{sigma,eps} = {t - t^sigma eps}
  bool in_lower(const Scalar& t) const;
  // K^{sigma,eps} = {t : t = -t^sigma eps}
  bool in_upper(const Scalar& t) const;
  bool trace_type() const;
  const Span& lower() const;
  const Span& upper() const;

  // canonical representative of t + K_{sigma,eps}: coordinates reduced
  // against the echelon basis of K_{sigma,eps}
  Scalar canonical(const Scalar& t) const;
  Scalar apply_sigma(const Scalar& t) const { return sigma().apply(t); }
  // lambda^sigma t lambda, not reduced
  Scalar twist(const Scalar& t, const Scalar& lambda) const;

  std::string str() const;
  bool operator==(const AdmissiblePair& o) const;
  bool operator!=(const AdmissiblePair& o) const { return !(*this == o); }

 private:
  struct Data;
  std::shared_ptr<const Data> d_;
};

// (kappa t^sigma kappa^{-1}, kappa kappa^{-sigma} eps)
AdmissiblePair scale_pair(const Scalar& kappa, const AdmissiblePair& p);

// Element of K/K_{sigma,eps}; the representative is always canonical.
class CosetElement {
 public:
  CosetElement(const AdmissiblePair& p, const Scalar& t) : pair_(p), rep_(p.canonical(t)) {}

  const AdmissiblePair& pair() const { return pair_; }
  const Scalar& rep() const { return rep_; }
  bool is_zero() const { return rep_.is_zero(); }

  CosetElement operator+(const CosetElement& o) const;
  CosetElement operator-(const CosetElement& o) const;
  CosetElement operator-() const { return CosetElement(pair_, -rep_); }
  bool operator==(const CosetElement& o) const { return pair_ == o.pair_ && rep_ == o.rep_; }
  bool operator!=(const CosetElement& o) const { return !(*this == o); }

 private:
  AdmissiblePair pair_;
  Scalar rep_;
};

// t̄∘λ = (λ^σ t λ)‾
CosetElement circ(const CosetElement& t, const Scalar& lambda);

// A ∘-closed subgroup R̄ of K̄, held as its preimage R ⊆ K, a B-subspace
// containing K_{σ,ε}.
class ClosedSubgroup {
 public:
  enum class Kind { zero, full, generated };

  static ClosedSubgroup zero(const AdmissiblePair& p);
  static ClosedSubgroup full(const AdmissiblePair& p);
  static ClosedSubgroup generated(const AdmissiblePair& p, const std::vector<Scalar>& gens);

  const AdmissiblePair& pair() const { return pair_; }
  Kind kind() const;
  bool is_zero() const { return kind() == Kind::zero; }
  bool is_full() const { return kind() == Kind::full; }
  const std::vector<Scalar>& generators() const { return gens_; }
  const Span& preimage() const { return pre_; }
  // B-dimension of R̄ = R / K_{σ,ε}
  std::size_t base_dim() const { return pre_.rank() - pair_.lower().rank(); }

  bool contains(const Scalar& t) const;
  bool contains(const CosetElement& t) const;
  // canonical representative of t + R
  Scalar reduce(const Scalar& t) const;
  CosetElement reduce(const CosetElement& t) const;

  ClosedSubgroup joined(const ClosedSubgroup& o) const;
  ClosedSubgroup with(const std::vector<Scalar>& more) const;
  // same subgroup, regardless of generators
  bool same(const ClosedSubgroup& o) const;
  bool contains(const ClosedSubgroup& o) const;
  // R̄ ⊆ K̄∘: every generator lies in K^{σ,ε}
  bool within_upper() const;

  std::string str() const;

 private:
  ClosedSubgroup(const AdmissiblePair& p) : pair_(p) {}
  void absorb(const Scalar& g);
  AdmissiblePair pair_;
  std::vector<Scalar> gens_;
  bool full_tag_ = false;
  Span pre_;
};

// Coordinates mu with sum_k basis_k ∘ mu_k = r (mod K_{σ,ε}); basis must be
// ∘-independent elements of K̄∘. nullopt if r is outside their ∘-span.
std::optional<Vec> circ_coords(const AdmissiblePair& p, const std::vector<Scalar>& basis, const Scalar& r);

// Greedy ∘-basis of the closed subgroup: members of s taken in order when
// they fall outside the ∘-span of those already taken.
std::vector<Scalar> circ_basis(const AdmissiblePair& p, const std::vector<Scalar>& s);

ClosedSubgroup parse_codefect(const AdmissiblePair& p, const std::string& text);
AdmissiblePair parse_pair(const Ring& r, const std::string& text);

}  // namespace gpq
