#pragma once

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace kanweigh {

/// Canonical name of a generated pair, e.g. "⟨x,y⟩".
std::string pair_name(const std::string& left, const std::string& right);
/// Canonical name of a generated tuple, e.g. "⟨a,b,c⟩"; the empty tuple is "⟨⟩".
std::string tuple_name(const std::vector<std::string>& parts);

struct MorphismSpec {
  std::string name;
  std::string src;
  std::string tgt;
};

class FinCat;
using CatPtr = std::shared_ptr<const FinCat>;

/// A finite category with a total composition table.
///
/// Objects and morphisms are addressed by dense indices; identifiers are kept
/// for I/O and for identity-based equality. compose(g, f) reads "g after f"
/// and is -1 when tgt(f) != src(g).
class FinCat {
 public:
  struct Morphism {
    std::string name;
    int src;
    int tgt;
  };

  /// Builds and exhaustively validates a category. `compose` maps (g, f)
  /// names to g∘f; pairs involving an identity may be omitted and are filled
  /// by the identity laws. Throws InvalidInput listing every violation.
  static FinCat make(std::vector<std::string> objects, std::vector<MorphismSpec> morphisms,
                     const std::vector<std::pair<std::string, std::string>>& identities,
                     const std::vector<std::pair<std::pair<std::string, std::string>, std::string>>& compose);

  int num_objects() const noexcept { return static_cast<int>(objects_.size()); }
  int num_morphisms() const noexcept { return static_cast<int>(morphisms_.size()); }
  const std::string& object_name(int o) const { return objects_[o]; }
  const std::string& morphism_name(int m) const { return morphisms_[m].name; }
  const Morphism& morphism(int m) const { return morphisms_[m]; }
  int src(int m) const { return morphisms_[m].src; }
  int tgt(int m) const { return morphisms_[m].tgt; }
  int identity(int o) const { return identities_[o]; }
  bool is_identity(int m) const { return identities_[src(m)] == m; }
  int compose(int g, int f) const { return table_[static_cast<std::size_t>(g) * morphisms_.size() + f]; }
  const std::vector<int>& hom(int a, int b) const { return homs_[static_cast<std::size_t>(a) * objects_.size() + b]; }
  /// Position of m inside hom(src(m), tgt(m)).
  int hom_position(int m) const { return hom_pos_[m]; }

  std::optional<int> find_object(const std::string& name) const;
  std::optional<int> find_morphism(const std::string& name) const;

  /// Set when this category was produced by product(); used to slice
  /// functors on products (module carriers) back into their factors.
  const CatPtr& left_factor() const noexcept { return left_; }
  const CatPtr& right_factor() const noexcept { return right_; }
  bool is_product() const noexcept { return left_ != nullptr; }
  /// Object index of the pair (i, j) in a product category.
  int pair_object(int i, int j) const;
  /// Morphism index of the pair (u, v) in a product category.
  int pair_morphism(int u, int v) const;

  /// Every violated category law, naming the offending identifiers.
  std::vector<std::string> law_violations() const;

  /// Identifier equality: same objects, morphisms, identities, and table.
  friend bool operator==(const FinCat& a, const FinCat& b);

 private:
  FinCat() = default;
  void index();

  std::vector<std::string> objects_;
  std::vector<Morphism> morphisms_;
  std::vector<int> identities_;
  std::vector<int> table_;
  std::vector<std::vector<int>> homs_;
  std::vector<int> hom_pos_;
  std::unordered_map<std::string, int> object_index_;
  std::unordered_map<std::string, int> morphism_index_;
  CatPtr left_;
  CatPtr right_;

  friend CatPtr opposite(const CatPtr& c);
  friend CatPtr product(const CatPtr& c, const CatPtr& d);
};

/// Same identifiers, arrows reversed, composition transposed. Involutive on the nose.
CatPtr opposite(const CatPtr& c);
/// Pairs of objects and of morphisms, composed componentwise; pair order is
/// lexicographic in (left index, right index).
CatPtr product(const CatPtr& c, const CatPtr& d);

/// A functor between finite categories.
struct Functor {
  CatPtr source;
  CatPtr target;
  std::vector<int> on_objects;
  std::vector<int> on_morphisms;

  /// Validates sources/targets, identities and composition exhaustively.
  static Functor make(CatPtr source, CatPtr target, std::vector<int> on_objects, std::vector<int> on_morphisms);
  std::vector<std::string> law_violations() const;
};

/// The unit category: one object "*" with only its identity "id_*".
CatPtr unit_category();

Functor identity_functor(const CatPtr& c);
/// g after f.
Functor compose(const Functor& g, const Functor& f);
/// The two projections out of product(c, d), which must have been built by product().
std::pair<Functor, Functor> projections(const CatPtr& prod);

/// Exhaustive search for an isomorphism of categories (bijective on objects and morphisms).
std::optional<Functor> find_isomorphism(const CatPtr& c, const CatPtr& d);

/// An isomorphism x ≅ y inside a category: forward then backward morphism.
std::optional<std::pair<int, int>> find_object_iso(const FinCat& c, int x, int y);

/// Certificate that a functor is an equivalence of categories.
struct EquivalenceCertificate {
  bool ok = false;
  std::string failure;
  /// For every target object d: a source object a and an iso F(a) → d (and its inverse).
  std::vector<int> preimage;
  std::vector<std::pair<int, int>> isos;
};

/// Full faithfulness checked on every hom-set, essential surjectivity by exhaustive iso search.
EquivalenceCertificate certify_equivalence(const Functor& f);
/// Full faithfulness only; returns the first failing pair description or nullopt.
std::optional<std::string> fully_faithful_failure(const Functor& f);

}  // namespace kanweigh
