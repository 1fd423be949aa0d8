#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "kanweigh/setfun.hpp"

namespace kanweigh {

/// A set functor used as a weight, tagged with the kind of (co)limit it indexes.
struct Weight {
  SetFunctor functor;
  Variance variance;
};

/// A diagram of shape `shape` in the functor category [ambient, Set].
/// Finite sets are the case ambient = unit_category().
struct Diagram {
  CatPtr shape;
  CatPtr ambient;
  std::vector<SetFunctor> at;
  /// along[m] : at[src m] ⇒ at[tgt m].
  std::vector<Components> along;

  std::vector<std::string> law_violations() const;
  /// The set-valued diagram obtained by evaluating at an ambient object.
  SetFunctor at_point(int x) const;
};

/// A set-valued functor read as a diagram in finite sets.
Diagram set_diagram(const SetFunctor& f);
/// A one-object functor in [unit, Set] holding the given set.
SetFunctor point_set(const std::vector<std::string>& elements);
/// The Yoneda embedding B → [opposite(B), Set] as a diagram of shape B.
Diagram yoneda_diagram(const Yoneda& y);

struct WeightedLimit {
  Weight weight;
  Diagram diagram;
  Elements el;
  SetFunctor object;
  /// Pointwise conical limits over el(ψ), one per ambient object.
  std::vector<ConicalLimit> pointwise;
  /// counit[d][w] : object ⇒ diagram.at[d], the projection at (d, w).
  std::vector<std::vector<Components>> counit;
};

struct WeightedColimit {
  Weight weight;
  Diagram diagram;
  Elements el;
  SetFunctor object;
  std::vector<ConicalColimit> pointwise;
  /// unit[d][w] : diagram.at[d] ⇒ object, the injection at (d, w).
  std::vector<std::vector<Components>> unit;
};

/// {ψ, T} computed as the conical limit over el(ψ), pointwise in the ambient.
WeightedLimit weighted_limit(const Weight& psi, const Diagram& t);
/// φ ∗ S computed as the conical colimit over opposite(el(φ)), pointwise in the ambient.
WeightedColimit weighted_colimit(const Weight& phi, const Diagram& s);

/// Ambient competitors for universal-property checks: the representables of the
/// ambient plus every functor on it with sets of size ≤ scale.
std::vector<SetFunctor> competitors(const CatPtr& ambient, int scale);
/// Checks [Z, {ψ,T}] ≅ [D,Set](ψ, [Z, T−]) via the counit for every competitor Z.
std::optional<std::string> universal_property_failure(const WeightedLimit& l, const std::vector<SetFunctor>& zs);
/// Checks [φ∗S, Z] ≅ [D,Set](φ, [S−, Z]) via the unit for every competitor Z.
std::optional<std::string> universal_property_failure(const WeightedColimit& c, const std::vector<SetFunctor>& zs);

/// A functor between functor categories [X, Set] → [X', Set].
class AmbientFunctor {
 public:
  virtual ~AmbientFunctor() = default;
  virtual CatPtr source() const = 0;
  virtual CatPtr target() const = 0;
  virtual SetFunctor on_object(const SetFunctor& z) const = 0;
  virtual Components on_morphism(const SetFunctor& z, const SetFunctor& z2, const Components& alpha) const = 0;
  virtual std::string describe() const = 0;
};

class IdentityAmbient : public AmbientFunctor {
 public:
  explicit IdentityAmbient(CatPtr x) : x_(std::move(x)) {}
  CatPtr source() const override { return x_; }
  CatPtr target() const override { return x_; }
  SetFunctor on_object(const SetFunctor& z) const override { return z; }
  Components on_morphism(const SetFunctor&, const SetFunctor&, const Components& a) const override { return a; }
  std::string describe() const override { return "identity"; }

 private:
  CatPtr x_;
};

/// Evaluation at an ambient object: [X, Set] → Set.
class Evaluation : public AmbientFunctor {
 public:
  Evaluation(CatPtr x, int point) : x_(std::move(x)), point_(point) {}
  CatPtr source() const override { return x_; }
  CatPtr target() const override { return unit_category(); }
  SetFunctor on_object(const SetFunctor& z) const override;
  Components on_morphism(const SetFunctor& z, const SetFunctor& z2, const Components& a) const override;
  std::string describe() const override;

 private:
  CatPtr x_;
  int point_;
};

/// The hom functor [P, −]: [X, Set] → Set.
class HomFrom : public AmbientFunctor {
 public:
  explicit HomFrom(SetFunctor p) : p_(std::move(p)) {}
  CatPtr source() const override { return p_.source; }
  CatPtr target() const override { return unit_category(); }
  SetFunctor on_object(const SetFunctor& z) const override;
  Components on_morphism(const SetFunctor& z, const SetFunctor& z2, const Components& a) const override;
  std::string describe() const override { return "hom from a fixed object"; }

 private:
  SetFunctor p_;
};

/// Applies an ambient functor to every value of a diagram.
Diagram transport(const AmbientFunctor& f, const Diagram& d);

/// A canonical comparison map together with its invertibility verdict.
struct ComparisonVerdict {
  bool invertible = false;
  /// The map, one table per point of the ambient.
  std::vector<Table> map;
  std::vector<Table> inverse;
  std::string witness;
  int lhs_size = 0;
  int rhs_size = 0;
};

/// Whether F sends the computed limit to a limit: the comparison F{ψ,T} → {ψ,FT}.
ComparisonVerdict preserves(const AmbientFunctor& f, const WeightedLimit& l);
/// Whether F sends the computed colimit to a colimit: the comparison φ∗FS → F(φ∗S).
ComparisonVerdict preserves(const AmbientFunctor& f, const WeightedColimit& c);

/// The comparison φ ∗ {ψ, S} → {ψ, φ ∗ S} for S on product(opposite(K), L).
ComparisonVerdict commutes_at(const Weight& phi, const Weight& psi, const SetFunctor& s);

struct CommutationReport {
  bool clean = true;
  int bound = 0;
  long long checked = 0;
  std::optional<SetFunctor> counterexample;
  ComparisonVerdict verdict;
};
/// Tries every S with sets ≤ bound in canonical order and returns the first failure.
CommutationReport commutation_search(const Weight& phi, const Weight& psi, int bound);

struct FlatnessVerdict {
  bool flat = false;
  std::string witness;
};
/// Decides flatness for finite limits by filteredness of opposite(el(φ)).
FlatnessVerdict is_flat_finlim(const Weight& phi);

}  // namespace kanweigh
