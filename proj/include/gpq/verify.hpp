#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "gpq/forms.hpp"
#include "gpq/polar.hpp"
#include "gpq/random.hpp"

namespace gpq {

struct SuiteResult {
  int id = 0;
  std::string name;
  std::size_t checks = 0, failures = 0;
  double seconds = 0, budget = 0;  // budget 0 = untimed
  std::string detail;              // first failure, if any
  bool passed() const { return failures == 0 && (budget == 0 || seconds <= budget); }
};

constexpr int kSuiteCount = 9;
constexpr std::uint64_t kDefaultSeed = 42;

SuiteResult run_suite(int id, std::uint64_t seed = kDefaultSeed);

// Random form over F_2(t) built on a known singular basis: q is x ↦ γ(M^{-1}x)
// with γ(λ) = Σ_{i<j} λ_i H_ij λ_j, H alternating, M unimodular. Entries of
// the Gram matrix and values have degree at most max_degree.
struct FtInstance {
  GenPseudoQuadraticForm q;
  Basis e;  // columns of M
};
FtInstance random_ft_instance(Rng& rng, std::size_t dim, std::size_t codefect_rank, int max_degree = 8);

// Another singular basis of q obtained from e by permuting, scaling and
// shearing within the singular vectors.
Basis perturb_singular_basis(const GenPseudoQuadraticForm& q, const Basis& e, Rng& rng);

struct EnumerationLock {
  std::string name;
  std::function<PolarSpace()> build;
  std::size_t points, lines, rank;  // lines == npos when not locked
};
std::vector<EnumerationLock> enumeration_locks();

}  // namespace gpq
