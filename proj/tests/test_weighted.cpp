#include <doctest.h>

#include <cmath>

#include "fixtures.hpp"
#include "kanweigh/error.hpp"
#include "kanweigh/weighted.hpp"
#include "oracles.hpp"

using namespace kanweigh;
namespace fx = kanweigh::fixtures;

namespace {

Weight lim(SetFunctor f) { return {std::move(f), Variance::limit}; }
Weight colim(SetFunctor f) { return {std::move(f), Variance::colimit}; }

// Weights used against set-valued diagrams: every functor on the category with sets ≤ 1,
// plus the representables and a two-element constant.
std::vector<SetFunctor> sample_weights(const CatPtr& c) {
  auto out = all_set_functors(c, 1);
  auto y = yoneda(opposite(c));
  for (auto r : y.representables) {
    r.source = c;
    out.push_back(r);
  }
  out.push_back(constant_functor(c, {"0", "1"}));
  return out;
}

}  // namespace

TEST_CASE("weighted limit examples") {
  auto dp = fx::discrete_pair();
  auto t = set_diagram(fx::functor(dp, {2, 1}, {}));
  CHECK(weighted_limit(lim(terminal_functor(dp)), t).object.size(0) == 2);

  auto pp = fx::parallel_pair();
  auto swap = fx::functor(pp, {2, 2}, {{"f", {0, 1}}, {"g", {1, 0}}});
  auto eq = weighted_limit(lim(terminal_functor(pp)), set_diagram(swap));
  CHECK(eq.object.size(0) == 0);
  CHECK(oracles::limit_size_by_cones(terminal_functor(pp), swap) == 0);

  // Representable weight K(k, −) gives evaluation at k.
  for (const auto& [name, c] : fx::all_categories()) {
    CAPTURE(name);
    auto y = yoneda(opposite(c));
    for_each_set_functor(c, 2, [&](const SetFunctor& d) {
      for (int k = 0; k < c->num_objects(); ++k) {
        auto rep = y.representables[k];
        rep.source = c;
        CHECK(weighted_limit(lim(rep), set_diagram(d)).object.size(0) == d.size(k));
      }
      return true;
    });
  }
}

TEST_CASE("weighted colimit examples") {
  auto dp = fx::discrete_pair();
  auto s = set_diagram(fx::functor(dp, {2, 1}, {}));
  CHECK(weighted_colimit(colim(terminal_functor(dp)), s).object.size(0) == 3);
  auto pp = fx::parallel_pair();
  auto swap = fx::functor(opposite(pp), {2, 2}, {{"f", {0, 1}}, {"g", {1, 0}}});
  CHECK(weighted_colimit(colim(terminal_functor(pp)), set_diagram(swap)).object.size(0) == 1);
}

TEST_CASE("Delta-1 weights reduce to conical (co)limits") {
  for (const auto& [name, c] : fx::all_categories()) {
    CAPTURE(name);
    for_each_set_functor(c, 2, [&](const SetFunctor& d) {
      auto l = weighted_limit(lim(terminal_functor(c)), set_diagram(d));
      CHECK(l.object.size(0) == conical_limit(d).size());
      return true;
    });
    for_each_set_functor(opposite(c), 2, [&](const SetFunctor& d) {
      auto w = weighted_colimit(colim(terminal_functor(c)), set_diagram(d));
      CHECK(w.object.size(0) == conical_colimit(d).size());
      return true;
    });
  }
}

TEST_CASE("weighted (co)limits agree with cone and cocone enumeration") {
  for (const auto& [name, c] : fx::all_categories()) {
    if (c->num_objects() > 3) continue;
    CAPTURE(name);
    auto weights = sample_weights(c);
    auto diagrams = all_set_functors(c, 2);
    auto co_diagrams = all_set_functors(opposite(c), 2);
    for (const auto& w : weights) {
      for (std::size_t i = 0; i < diagrams.size(); i += 5) {
        auto l = weighted_limit(lim(w), set_diagram(diagrams[i]));
        CHECK(l.object.size(0) == oracles::limit_size_by_cones(w, diagrams[i]));
      }
      for (std::size_t i = 0; i < co_diagrams.size(); i += 5) {
        auto k = weighted_colimit(colim(w), set_diagram(co_diagrams[i]));
        CHECK(k.object.size(0) == oracles::colimit_size_by_quotient(w, co_diagrams[i]));
        CHECK(std::llround(std::pow(2.0, k.object.size(0))) == oracles::cocone_count(w, co_diagrams[i], 2));
      }
    }
  }
}

TEST_CASE("universal properties hold against competitors") {
  auto pp = fx::parallel_pair();
  auto swap = fx::functor(pp, {2, 2}, {{"f", {0, 1}}, {"g", {1, 0}}});
  auto l = weighted_limit(lim(terminal_functor(pp)), set_diagram(swap));
  CHECK(!universal_property_failure(l, competitors(unit_category(), 3)));
  auto co = fx::functor(opposite(pp), {2, 2}, {{"f", {0, 1}}, {"g", {1, 0}}});
  auto k = weighted_colimit(colim(terminal_functor(pp)), set_diagram(co));
  CHECK(!universal_property_failure(k, competitors(unit_category(), 3)));

  // A corrupted counit is caught.
  auto dp = fx::discrete_pair();
  auto prod = weighted_limit(lim(terminal_functor(dp)), set_diagram(fx::functor(dp, {2, 2}, {})));
  prod.counit[0][0][0] = {0, 0, 1, 1};
  prod.counit[1][0][0] = {0, 0, 1, 1};
  CHECK(universal_property_failure(prod, competitors(unit_category(), 2)).has_value());

  // Presheaf-valued: the Yoneda diagram.
  for (const auto& [name, c] : fx::all_categories()) {
    if (c->num_objects() > 2) continue;
    CAPTURE(name);
    auto y = yoneda(c);
    auto comps = competitors(y.opposite_category, 1);
    for_each_set_functor(y.opposite_category, 2, [&](const SetFunctor& phi) {
      auto r = weighted_colimit(colim(phi), yoneda_diagram(y));
      CHECK(!universal_property_failure(r, comps));
      return true;
    });
  }
}

TEST_CASE("phi * Y is isomorphic to phi") {
  for (const auto& [name, c] : fx::all_categories()) {
    CAPTURE(name);
    auto y = yoneda(c);
    auto d = yoneda_diagram(y);
    CHECK(d.law_violations().empty());
    for_each_set_functor(y.opposite_category, 4, [&](const SetFunctor& phi) {
      if (phi.total() > 4) return true;
      auto r = weighted_colimit(colim(phi), d);
      auto iso = find_iso(r.object, phi);
      CHECK(iso.has_value());
      return true;
    });
  }
}

TEST_CASE("preservation") {
  auto dp = fx::discrete_pair();
  auto one_one = weighted_colimit(colim(terminal_functor(dp)), set_diagram(fx::functor(opposite(dp), {1, 1}, {})));
  CHECK(preserves(IdentityAmbient(unit_category()), one_one).invertible);
  auto hom2 = HomFrom(fx::functor(fx::unit(), {2}, {}));
  auto v = preserves(hom2, one_one);
  CHECK(!v.invertible);
  CHECK(v.lhs_size == 2);
  CHECK(v.rhs_size == 4);
  CHECK(v.witness.find("not surjective") != std::string::npos);

  // Evaluation preserves every colimit of representables.
  for (const auto& [name, c] : fx::all_categories()) {
    CAPTURE(name);
    auto y = yoneda(c);
    for_each_set_functor(y.opposite_category, 2, [&](const SetFunctor& phi) {
      auto r = weighted_colimit(colim(phi), yoneda_diagram(y));
      for (int b = 0; b < c->num_objects(); ++b) CHECK(preserves(Evaluation(y.opposite_category, b), r).invertible);
      CHECK(preserves(IdentityAmbient(y.opposite_category), r).invertible);
      return true;
    });
  }
  // Limits are preserved by hom functors.
  auto prod = weighted_limit(lim(terminal_functor(dp)), set_diagram(fx::functor(dp, {2, 3}, {})));
  CHECK(preserves(hom2, prod).invertible);
}

TEST_CASE("commutation comparison") {
  auto dp = fx::discrete_pair();
  auto coprod = colim(terminal_functor(dp));
  auto prod = lim(terminal_functor(dp));
  auto shape = product(opposite(dp), dp);
  auto v = commutes_at(coprod, prod, terminal_functor(shape));
  CHECK(!v.invertible);
  CHECK(v.lhs_size == 2);
  CHECK(v.rhs_size == 4);

  // Δ1 on the arrow has a terminal object, so its colimits are evaluations.
  auto arrow = fx::arrow();
  auto shape2 = product(opposite(arrow), dp);
  for_each_set_functor(shape2, 2, [&](const SetFunctor& s) {
    CHECK(commutes_at(colim(terminal_functor(arrow)), prod, s).invertible);
    return true;
  });
}

TEST_CASE("commutation search") {
  auto dp = fx::discrete_pair();
  auto report = commutation_search(colim(terminal_functor(dp)), lim(terminal_functor(dp)), 1);
  CHECK(!report.clean);
  REQUIRE(report.counterexample);
  CHECK(report.counterexample->total() == 4);
  CHECK(report.verdict.lhs_size == 2);
  CHECK(report.verdict.rhs_size == 4);

  for (const auto& [name, c] : fx::all_categories()) {
    if (c->num_objects() == 0 || c->num_objects() > 2) continue;
    CAPTURE(name);
    auto y = yoneda(c);
    auto rep = y.representables[0];
    auto r = commutation_search(colim(rep), lim(terminal_functor(dp)), 2);
    CHECK(r.clean);
    CHECK(r.checked > 0);
  }
}

TEST_CASE("flatness") {
  for (const auto& [name, c] : fx::all_categories()) {
    CAPTURE(name);
    auto y = yoneda(c);
    for (const auto& r : y.representables) CHECK(is_flat_finlim(colim(r)).flat);
  }
  auto two = is_flat_finlim(colim(fx::functor(fx::unit(), {2}, {})));
  CHECK(!two.flat);
  CHECK(two.witness.find("no cocone") != std::string::npos);
  CHECK(is_flat_finlim(colim(terminal_functor(fx::arrow()))).flat);
  CHECK(!is_flat_finlim(colim(terminal_functor(fx::parallel_pair()))).flat);
  CHECK(!is_flat_finlim(colim(SetFunctor{fx::empty(), {}, {}})).flat);
}

TEST_CASE("flat colimits of flat weights are flat") {
  // G flat on the arrow, H : arrow^op → [X, Set] sending both objects to flat presheaves.
  auto arrow = fx::arrow();
  auto x = fx::walking_iso();
  auto y = yoneda(opposite(x));
  for (auto& r : y.representables) r.source = x;
  Diagram h{opposite(arrow), x, {y.representables[0], y.representables[1]}, {}};
  h.along.push_back(identity_components(y.representables[0]));
  h.along.push_back(identity_components(y.representables[1]));
  // arrow^op has f : b → a, realised by postcomposition with an iso.
  h.along.push_back(y.on_morphisms[*x->find_morphism("v")]);
  REQUIRE(h.law_violations().empty());
  auto g = colim(terminal_functor(arrow));
  REQUIRE(is_flat_finlim(g).flat);
  auto out = weighted_colimit(g, h);
  CHECK(is_flat_finlim(colim(out.object)).flat);
}
