#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kanweigh/fincat.hpp"
#include "kanweigh/promod.hpp"
#include "kanweigh/setfun.hpp"

namespace kanweigh {

/// φ as a retract of the representable at `object`: retraction ∘ section = id_φ.
struct RetractWitness {
  int object = -1;
  Components section;     // φ ⇒ Y object
  Components retraction;  // Y object ⇒ φ
  Components idempotent;  // section ∘ retraction on Y object
};

/// Exhaustive search over representables; φ is a presheaf (a functor on opposite(B)).
std::optional<RetractWitness> find_retract(const SetFunctor& phi);

struct SmallProjectiveVerdict {
  bool projective = false;
  std::optional<RetractWitness> retract;
  std::optional<CocontinuityRefutation> refutation;
};

/// Decides small projectivity twice, through the module I ⇸ B having a right adjoint
/// and through retract search, and throws InternalError if they disagree.
SmallProjectiveVerdict is_small_projective(const SetFunctor& phi);

/// Idempotent splitting of a category with the embedding b ↦ id_b.
struct CauchyCompletion {
  CatPtr category;
  Functor embedding;
  /// The idempotent of the base that each object splits.
  std::vector<int> idempotents;
  /// Equivalence with the full subcategory of presheaves that are retracts of representables.
  EquivalenceCertificate retracts;
  /// Presheaf model of each retract class, indexed by the objects of that subcategory.
  std::vector<SetFunctor> retract_models;
};
CauchyCompletion cauchy_completion(const CatPtr& b);

/// O(φ)(b) = Nat(φ, Yb), a copresheaf on B.
SetFunctor isbell_o(const CatPtr& b, const SetFunctor& phi);
/// Spec(ψ)(b) = Nat(ψ, Y′b), a presheaf on B.
SetFunctor isbell_spec(const CatPtr& b, const SetFunctor& psi);

/// φ ⇒ Spec O φ, sending x ∈ φ(b) to evaluation at x.
Components isbell_unit(const CatPtr& b, const SetFunctor& phi);
/// ψ ⇒ O Spec ψ, sending y ∈ ψ(c) to evaluation at y.
Components isbell_counit(const CatPtr& b, const SetFunctor& psi);

struct IsbellReport {
  bool ok = true;
  std::string failure;
  int pairs = 0;
  /// Samples found small projective, whose unit or counit was checked invertible.
  int projective_presheaves = 0;
  int projective_copresheaves = 0;
};

/// Checks Nat(φ, Spec ψ) ≅ Nat(ψ, O φ) by transposition on every sample pair, and
/// invertibility of unit and counit on every small-projective sample.
IsbellReport isbell_adjunction_check(const CatPtr& b, const std::vector<SetFunctor>& presheaves,
                                     const std::vector<SetFunctor>& copresheaves);

/// Representables plus every functor on `c` with total size ≤ 4, canonical order.
std::vector<SetFunctor> default_isbell_grid(const CatPtr& c);

}  // namespace kanweigh
