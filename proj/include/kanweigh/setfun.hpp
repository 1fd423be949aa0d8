#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "kanweigh/fincat.hpp"

namespace kanweigh {

/// A total function between finite sets given by its table.
using Table = std::vector<int>;
/// Components of a natural transformation, one table per source object.
using Components = std::vector<Table>;

/// A functor from a finite category into finite sets.
///
/// Also used for presheaves (source = opposite(B)), weights, and diagrams.
/// Elements are indices 0..size(o)-1; `elements` keeps their identifiers.
struct SetFunctor {
  CatPtr source;
  std::vector<std::vector<std::string>> elements;
  /// action[m] maps elements of src(m) to elements of tgt(m).
  std::vector<Table> action;

  /// Validates shapes, identities, and composition exhaustively.
  static SetFunctor make(CatPtr source, std::vector<std::vector<std::string>> elements, std::vector<Table> action);
  std::vector<std::string> law_violations() const;

  int size(int o) const { return static_cast<int>(elements[o].size()); }
  int total() const;
  int apply(int m, int x) const { return action[m][x]; }
};

using SetFunctorPtr = std::shared_ptr<const SetFunctor>;

/// A natural transformation together with its endpoints.
struct NatTrans {
  SetFunctorPtr from;
  SetFunctorPtr to;
  Components components;
};

/// The constant functor at the given set (identities everywhere).
SetFunctor constant_functor(const CatPtr& c, const std::vector<std::string>& set);
/// The constant functor at the one-point set.
SetFunctor terminal_functor(const CatPtr& c);
/// F restricted along T: the functor F∘T on T's source.
SetFunctor restrict_along(const SetFunctor& f, const Functor& t);
/// Reads a functor on product(c, d) at a fixed left object: the functor H(i, -) on d.
SetFunctor slice_left(const SetFunctor& h, int i);
/// Reads a functor on product(c, d) at a fixed right object: the functor H(-, j) on c.
SetFunctor slice_right(const SetFunctor& h, int j);

std::vector<std::string> naturality_violations(const SetFunctor& f, const SetFunctor& g, const Components& c);
bool is_natural(const SetFunctor& f, const SetFunctor& g, const Components& c);
Components identity_components(const SetFunctor& f);
/// Vertical composite "second after first".
Components compose_components(const Components& second, const Components& first);
bool is_bijective(const SetFunctor& f, const SetFunctor& g, const Components& c);
/// Inverse of a componentwise bijection.
Components invert_components(const Components& c);
/// Canonical identifier for a component family, e.g. "[a:{x↦y},b:{}]".
std::string describe_components(const SetFunctor& f, const SetFunctor& g, const Components& c);

/// All natural transformations F ⇒ G in lexicographic order of component tables.
struct NatSet {
  std::vector<Components> members;
  std::size_t size() const { return members.size(); }
  /// Index of a family in `members`, or -1.
  int index_of(const Components& c) const;
  void build_index();

 private:
  std::map<Components, int> index_;
};

/// Backtracking enumeration with naturality pruning; the first variable's
/// choices are split across OpenMP threads and merged in canonical order.
NatSet nat_set(const SetFunctor& f, const SetFunctor& g);
/// Reference: odometer over every component family, filtered afterwards.
NatSet nat_set_serial(const SetFunctor& f, const SetFunctor& g);

/// A natural isomorphism F ≅ G found by exhaustive search.
std::optional<Components> find_iso(const SetFunctor& f, const SetFunctor& g);

/// Limit of a set-valued diagram: compatible tuples (one element per object).
struct ConicalLimit {
  std::vector<std::string> names;
  /// tuples[t][j] is the projection of element t to the diagram at object j.
  std::vector<std::vector<int>> tuples;
  int size() const { return static_cast<int>(tuples.size()); }
  int index_of(const std::vector<int>& tuple) const;
};
ConicalLimit conical_limit(const SetFunctor& d);

/// Colimit of a set-valued diagram as a quotient of the disjoint union.
struct ConicalColimit {
  std::vector<std::string> names;
  /// cocone[j][x] is the class of element x of the diagram at object j.
  std::vector<Table> cocone;
  /// Least representative (object, element) of every class.
  std::vector<std::pair<int, int>> representatives;
  int size() const { return static_cast<int>(names.size()); }
};
ConicalColimit conical_colimit(const SetFunctor& d);

/// End of H on product(opposite(K), K): families x_k ∈ H(k,k) with
/// H(f,id)(x_k') = H(id,f)(x_k) for every f: k → k'.
struct End {
  std::vector<std::string> names;
  std::vector<std::vector<int>> families;
  int size() const { return static_cast<int>(families.size()); }
};
End end(const SetFunctor& h);

/// Coend of H on product(opposite(K), K): ⨿_k H(k,k) modulo the relation generated
/// by H(f,id)(y) ~ H(id,f)(y).
struct Coend {
  std::vector<std::string> names;
  /// class_of[k][y] for y ∈ H(k,k).
  std::vector<Table> class_of;
  std::vector<std::pair<int, int>> representatives;
  int size() const { return static_cast<int>(names.size()); }
};
Coend coend(const SetFunctor& h);
/// The map between coends induced by a natural transformation H ⇒ H'.
Table coend_map(const SetFunctor& h, const Coend& ch, const Coend& ch2, const Components& alpha);

/// Representable presheaves B(-,b) (functors on opposite(B)) and the action of
/// B's morphisms by postcomposition. Elements of B(c,b) are the morphisms of
/// hom(c,b) in index order, named by their identifiers.
struct Yoneda {
  CatPtr category;
  CatPtr opposite_category;
  std::vector<SetFunctor> representables;
  /// on_morphisms[g] : Y(src g) ⇒ Y(tgt g).
  std::vector<Components> on_morphisms;
};
Yoneda yoneda(const CatPtr& b);
/// Compares nat_set(Yb, Yb') against hom(b, b') for every pair; nullopt when fully faithful.
std::optional<std::string> yoneda_full_faithfulness_failure(const Yoneda& y);

enum class Variance { limit, colimit };

/// Category of elements of a functor φ on K with its projection.
///
/// For the limit variance this is el(φ): objects (k, x), morphisms f with
/// φ(f)(x) = x'. For the colimit variance it is opposite(el(φ)) projecting to
/// opposite(K); colimits over it compute φ-weighted colimits.
struct Elements {
  CatPtr category;
  Functor projection;
  /// (object of K, element) for every object of `category`.
  std::vector<std::pair<int, int>> points;
};
Elements elements(const SetFunctor& phi, Variance variance);

/// Every functor on `c` with all sets of size ≤ max_size, in canonical order:
/// by number of empty sets, then total element count, then size vector, then
/// action tables. `visit` returns false to stop early. A nonnegative
/// `max_total` also bounds the total element count.
void for_each_set_functor(const CatPtr& c, int max_size, const std::function<bool(const SetFunctor&)>& visit,
                          int min_size = 0, int max_total = -1);
std::vector<SetFunctor> all_set_functors(const CatPtr& c, int max_size, int min_size = 0, int max_total = -1);

}  // namespace kanweigh
