#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kanweigh/setfun.hpp"
#include "kanweigh/weighted.hpp"

namespace kanweigh {

/// A finite list of colimit weights.
using WeightClass = std::vector<Weight>;

/// A presheaf reached while closing the representables under a weight class.
struct ClosureElement {
  SetFunctor presheaf;
  int stage = 0;
  /// Stage 0: the representable it came from.
  int representable = -1;
  /// Later stages: the weight used and the diagram, as element indices and transformations.
  int weight = -1;
  std::vector<int> values;
  std::vector<Components> along;
};

struct ClosureResult {
  CatPtr category;
  std::vector<ClosureElement> elements;
  int depth = 0;
  /// Stages actually run; smaller than depth only at a fixpoint.
  int stages = 0;
  bool fixpoint = false;
};

/// Stage 0 holds the representables; each later stage adds every Φ-weighted colimit of
/// diagrams in earlier elements, kept only when not isomorphic to an element already found.
ClosureResult closure_iterate(const WeightClass& phi, const CatPtr& b, int depth);

/// The diagram recorded by a non-representable element.
Diagram witness_diagram(const ClosureResult& r, const WeightClass& phi, int index);
/// Recomputes an element from its witness and returns the isomorphism to the stored presheaf.
std::optional<Components> replay(const ClosureResult& r, const WeightClass& phi, int index);

struct MembershipVerdict {
  bool member = false;
  int depth = 0;
  int element = -1;
  int stage = -1;
  /// Every element the witness depends on, in index order.
  std::vector<int> chain;
  std::optional<Components> iso;
  ClosureResult closure;
};
/// Bounded search of ψ in the closure; a negative answer only covers the depth searched.
MembershipVerdict saturation_member(const SetFunctor& psi, const WeightClass& phi, const CatPtr& b, int depth);

/// F ∗ G for a presheaf F on A and G : A → presheaves on C.
SetFunctor lan_extend(const Diagram& g, const SetFunctor& f);

struct AtomVerdict {
  bool atom = true;
  std::vector<int> failing;
  std::vector<ComparisonVerdict> verdicts;
};
/// Whether Hom(a, −) sends each computed colimit to a colimit.
AtomVerdict atom_check(const SetFunctor& a, const std::vector<WeightedColimit>& instances);

/// A universal arrow from a presheaf into the representables: η : P ⇒ Yb through which
/// every P ⇒ Yb' factors uniquely.
struct Reflection {
  int object = -1;
  Components unit;
};
std::optional<Reflection> find_reflection(const SetFunctor& p);

}  // namespace kanweigh
