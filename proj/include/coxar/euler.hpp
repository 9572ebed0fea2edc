#pragma once

// The non-symmetric Euler form <x, y>: from a compatible system via
// <beta_i, alpha_j> = delta_ij, in closed form through (1 - C^{-1})^{-1},
// and recursively on I-hat via the mesh relations.

#include "coxar/arq.hpp"

#include <optional>
#include <vector>

namespace coxar {

struct EulerTable {
  IntMatrix ref_gram;    // <x, y> = x^T ref_gram y in reference coordinates
  IntMatrix on_lattice;  // Gram matrix in the beta basis of the canonical system
  bool operator==(const EulerTable&) const = default;
};

/// <x, y> for two roots, read off ref_gram.
Int euler_pairing(const RootSystem& rs, const EulerTable& table, int x, int y);

/// The unique form with <beta_i^Pi, alpha_j^Pi> = delta_ij.
EulerTable euler_form_from_pi(const CoxeterContext& ctx, const SimpleSystem& pi);

/// (x, (1 - C^{-1})^{-1} y), checked against ((1 - C)^{-1} x, y) and for
/// integrality.
EulerTable euler_form_closed(const CoxeterContext& ctx);

/// Fundamental weights for pi as rational vectors in reference coordinates.
/// Verifies (omega_i, alpha_j) = delta_ij, (1 - C) omega_i = beta_i, and that
/// 1 - C maps the weight lattice onto the root lattice.
std::vector<RatVector> fundamental_weights(const CoxeterContext& ctx, const SimpleSystem& pi);

/// Replaces one seed value of the recursion; used to show the seeds are forced.
struct SeedPerturbation {
  IhatVertex source;
  IhatVertex target;  // must lie on one of the two seed levels of `source`
  Int delta = 1;
};

class WraparoundError : public InvariantError {
 public:
  using InvariantError::InvariantError;
};

/// <q1, q2> on I-hat, indexed by IhatQuiver::index on both sides. Computed
/// per row from the seeds <(i,n),(j,n)> = delta_ij and <(i,n),(j,n+1)> =
/// number of edges i - j, propagated through one period; the regenerated seed
/// levels must match (WraparoundError otherwise).
IntMatrix euler_form_ihat(const IhatQuiver& ihat, const std::optional<SeedPerturbation>& perturbation = std::nullopt);

struct SymmetrizedCheck {
  IntMatrix gram;            // symmetrized form on the slice basis
  std::vector<Int> minors;   // leading principal minors of gram
  IntMatrix change_of_basis; // unimodular U with U^T gram U = Cartan
  bool positive_definite = false;
  bool congruent_to_cartan = false;
  bool all_norm_two = false;     // (q, q) = 2 for every vertex q
  bool distinct_vectors = false; // vertices reduce to distinct lattice vectors
  bool ok() const { return positive_definite && congruent_to_cartan && all_norm_two && distinct_vectors; }
};

/// Symmetrizes the I-hat form on the slice basis of `reference`.
SymmetrizedCheck symmetrized_form_check(const IhatQuiver& ihat, const IntMatrix& ihat_form,
                                        const HeightFunction& reference);

}  // namespace coxar
