#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "kanweigh/setfun.hpp"
#include "kanweigh/weighted.hpp"

namespace kanweigh {

/// A module (profunctor) A ⇸ B: a set functor on product(opposite(B), A).
/// carrier(b, a) lives at object pair_object(b, a).
struct Module {
  CatPtr source;  // A
  CatPtr target;  // B
  SetFunctor carrier;

  static Module make(CatPtr source, CatPtr target, SetFunctor carrier);
  std::vector<std::string> law_violations() const;

  int at(int b, int a) const { return carrier.source->pair_object(b, a); }
  const std::vector<std::string>& set(int b, int a) const { return carrier.elements[at(b, a)]; }
  /// f(u, v) for u : b' → b in B and v : a → a' in A.
  int act(int u, int v, int x) const { return carrier.apply(carrier.source->pair_morphism(u, v), x); }
};

/// The category product(opposite(B), A) that carries modules A ⇸ B.
CatPtr module_shape(const CatPtr& a, const CatPtr& b);

/// The hom module 1_A : A ⇸ A.
Module hom_module(const CatPtr& a);

/// g ∘ f with the classes of each coend kept so elements can be located.
struct ModuleComposite {
  Module module;
  /// class_of[(c,a)][offset[(c,a)][b] + y * |f(b,a)| + z] for y ∈ g(c,b), z ∈ f(b,a).
  std::vector<std::vector<int>> class_of;
  std::vector<std::vector<int>> offset;
  /// block_width[(c,a)][b] = |f(b,a)|.
  std::vector<std::vector<int>> block_width;
  /// Least representative (b, y, z) of every class.
  std::vector<std::vector<std::array<int, 3>>> representatives;

  int locate(int c, int a, int b, int y, int z) const;
};

/// (gf)(c,a) = ∫^b g(c,b) × f(b,a). g : B ⇸ C, f : A ⇸ B.
ModuleComposite compose_modules(const Module& g, const Module& f);
/// [[f,h]](c,b) = Nat(f(b,−), h(c,−)). f : A ⇸ B, h : A ⇸ C; result B ⇸ C.
Module rext(const Module& f, const Module& h);
/// {|g,h|}(b,a) = Nat(g(−,b), h(−,a)) over opposite(C). g : B ⇸ C, h : A ⇸ C; result A ⇸ B.
Module rlift(const Module& g, const Module& h);
/// T_*(b,a) = B(b, Ta) and T^*(a,b) = B(Ta, b).
std::pair<Module, Module> functor_modules(const Functor& t);
/// For ρ : T ⇒ S given by morphisms ρ_a : Ta → Sa: ρ_* : T_* → S_* and ρ^* : S^* → T^*.
std::pair<Components, Components> induced_morphisms(const Functor& t, const Functor& s, const std::vector<int>& rho);

/// A module morphism between modules with identical shape, by exhaustive search.
std::optional<Components> module_iso(const Module& m, const Module& n);
/// All module morphisms m → n.
NatSet module_morphisms(const Module& m, const Module& n);

/// Sizes of Mod(gf, h), Mod(g, [[f,h]]), Mod(f, {|g,h|}) and whether pasting gives bijections.
struct MateReport {
  std::size_t composite = 0;
  std::size_t extension = 0;
  std::size_t lifting = 0;
  bool bijective = false;
  std::string failure;
};
MateReport mate_bijections(const Module& g, const Module& f, const Module& h);

/// A module adjunction f ⊣ g with f : A ⇸ B, g : B ⇸ A.
struct AdjunctionCertificate {
  Module left;
  Module right;
  /// η : 1_A → g f, components on the carrier of `gf`.
  Components unit;
  /// ε : f g → 1_B, components on the carrier of `fg`.
  Components counit;
  bool triangle_left = false;
  bool triangle_right = false;
};

struct AdjunctionCheck {
  bool ok = false;
  std::string failure;
};
AdjunctionCheck check_adjunction(const Module& f, const Module& g, const Components& unit, const Components& counit);

/// A colimit that Hom(f(−,a), −) fails to preserve.
struct CocontinuityRefutation {
  int object = -1;
  std::string instance;
  ComparisonVerdict verdict;
};

struct RightAdjointVerdict {
  bool exists = false;
  std::optional<AdjunctionCertificate> certificate;
  /// First object (a', a) at which t f → {|f,f|} is not invertible.
  std::string respect_failure;
  std::optional<CocontinuityRefutation> refutation;
};

/// Decides whether f : A ⇸ B has a right adjoint by computing t = {|f, 1_B|} and
/// checking that the comparison t f → {|f, f|} is invertible.
RightAdjointVerdict has_right_adjoint(const Module& f);
/// Exhaustive search over unit/counit pairs.
std::optional<AdjunctionCertificate> search_adjunction(const Module& f, const Module& g);

/// f° : B^op ⇸ A^op with f°(a,b) = f(b,a).
Module dual_module(const Module& f);
/// g has a left adjoint iff g° has a right adjoint; the left adjoint is the dual of that.
RightAdjointVerdict has_left_adjoint(const Module& g);

/// φ presheaf on B as a module I ⇸ B.
Module presheaf_module(const SetFunctor& phi);
/// ψ copresheaf on B as a module B ⇸ I.
Module copresheaf_module(const SetFunctor& psi);

/// Tries the empty colimit, 1 ⊔ 1, and φ ∗ Y for φ the presheaf itself; returns the
/// first colimit of presheaves on B that Hom(φ, −) does not preserve.
std::optional<CocontinuityRefutation> cocontinuity_refutation(const SetFunctor& phi);

}  // namespace kanweigh
