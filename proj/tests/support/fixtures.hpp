#pragma once

#include <string>
#include <utility>
#include <vector>

#include "kanweigh/fincat.hpp"
#include "kanweigh/promod.hpp"
#include "kanweigh/setfun.hpp"

namespace kanweigh::fixtures {

CatPtr empty();
CatPtr unit();
/// a → b with one non-identity arrow f.
CatPtr arrow();
/// One object x with an idempotent e.
CatPtr idem();
/// One object x with an involution s.
CatPtr z2();
CatPtr discrete_pair();
/// a ⇉ b via f and g.
CatPtr parallel_pair();
/// a → c ← b.
CatPtr cospan();
/// a ← c → b.
CatPtr span();
/// a ⇄ b, mutually inverse.
CatPtr walking_iso();

/// Every fixture category with a short label, in a fixed order.
std::vector<std::pair<std::string, CatPtr>> all_categories();

/// A set functor given by sizes (elements named by index) and per-morphism tables.
SetFunctor functor(const CatPtr& c, const std::vector<int>& sizes,
                   const std::vector<std::pair<std::string, Table>>& tables);

/// Every functor a → b, enumerated exhaustively.
std::vector<Functor> all_functors(const CatPtr& a, const CatPtr& b);

/// Small modules x ⇸ y: functor modules in both directions, the terminal module,
/// and (when an end is the unit) presheaf or copresheaf modules with sets ≤ 1.
std::vector<Module> modules_between(const CatPtr& x, const CatPtr& y);

}  // namespace kanweigh::fixtures
