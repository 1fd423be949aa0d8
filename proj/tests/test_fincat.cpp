#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "fixtures.hpp"
#include "kanweigh/error.hpp"
#include "kanweigh/fincat.hpp"

using namespace kanweigh;
namespace fx = kanweigh::fixtures;

namespace {

std::vector<std::string> violations_of(const std::vector<std::string>& objects, const std::vector<MorphismSpec>& morphisms,
                                       const std::vector<std::pair<std::string, std::string>>& ids,
                                       const std::vector<std::pair<std::pair<std::string, std::string>, std::string>>& table) {
  try {
    FinCat::make(objects, morphisms, ids, table);
  } catch (const InvalidInput& e) {
    return e.violations();
  }
  return {};
}

bool mentions(const std::vector<std::string>& v, const std::string& needle) {
  return std::any_of(v.begin(), v.end(), [&](const auto& s) { return s.find(needle) != std::string::npos; });
}

// Brute force over all object and morphism bijections.
bool isomorphic_by_brute_force(const CatPtr& c, const CatPtr& d) {
  if (c->num_objects() != d->num_objects() || c->num_morphisms() != d->num_morphisms()) return false;
  std::vector<int> po(c->num_objects());
  std::iota(po.begin(), po.end(), 0);
  do {
    std::vector<int> pm(c->num_morphisms());
    std::iota(pm.begin(), pm.end(), 0);
    do {
      if (Functor{c, d, po, pm}.law_violations().empty()) return true;
    } while (std::next_permutation(pm.begin(), pm.end()));
  } while (std::next_permutation(po.begin(), po.end()));
  return false;
}

}  // namespace

TEST_CASE("fixture categories satisfy every law") {
  for (const auto& [name, c] : fx::all_categories()) {
    CAPTURE(name);
    CHECK(c->law_violations().empty());
    CHECK(c->num_objects() <= 4);
    CHECK(c->num_morphisms() <= 16);
  }
}

TEST_CASE("validation of category documents") {
  SUBCASE("walking idempotent is valid") { CHECK(fx::idem()->num_morphisms() == 2); }
  SUBCASE("an involution is a valid category") {
    CHECK(violations_of({"x"}, {{"id", "x", "x"}, {"e", "x", "x"}}, {{"x", "id"}}, {{{"e", "e"}, "id"}}).empty());
  }
  SUBCASE("non-associative table is rejected naming the law") {
    auto v = violations_of({"x"}, {{"id", "x", "x"}, {"e", "x", "x"}, {"f", "x", "x"}}, {{"x", "id"}},
                           {{{"e", "e"}, "f"}, {{"e", "f"}, "e"}, {{"f", "e"}, "f"}, {{"f", "f"}, "f"}});
    CHECK(mentions(v, "associativity"));
    CHECK(mentions(v, "table inconsistent with declared compose entries"));
  }
  SUBCASE("dangling identifiers are rejected") {
    auto v = violations_of({"a"}, {{"id", "a", "a"}, {"f", "a", "zz"}}, {{"a", "id"}}, {});
    CHECK(mentions(v, "zz"));
  }
  SUBCASE("missing composite is rejected") {
    auto v = violations_of({"x"}, {{"id", "x", "x"}, {"e", "x", "x"}}, {{"x", "id"}}, {});
    CHECK(!v.empty());
  }
  SUBCASE("composite with wrong endpoints is rejected") {
    auto v = violations_of({"a", "b"}, {{"id_a", "a", "a"}, {"id_b", "b", "b"}, {"f", "a", "b"}, {"g", "b", "a"}},
                           {{"a", "id_a"}, {"b", "id_b"}}, {{{"g", "f"}, "f"}, {{"f", "g"}, "id_b"}});
    CHECK(!v.empty());
  }
  SUBCASE("identity must be an endomorphism") {
    auto v = violations_of({"a", "b"}, {{"id_a", "a", "b"}, {"id_b", "b", "b"}}, {{"a", "id_a"}, {"b", "id_b"}}, {});
    CHECK(!v.empty());
  }
}

TEST_CASE("constant functor from the arrow to the unit") {
  auto f = Functor::make(fx::arrow(), fx::unit(), {0, 0}, {0, 0, 0});
  CHECK(f.law_violations().empty());
  CHECK_THROWS_AS(Functor::make(fx::unit(), fx::arrow(), {0}, {2}), InvalidInput);
}

TEST_CASE("opposite") {
  CHECK(*opposite(fx::unit()) == *fx::unit());
  auto op2 = opposite(fx::arrow());
  CHECK(op2->hom(1, 0).size() == 1);
  CHECK(op2->hom(0, 1).empty());
  for (const auto& [name, c] : fx::all_categories()) {
    CAPTURE(name);
    CHECK(*opposite(opposite(c)) == *c);
    CHECK(opposite(c)->law_violations().empty());
  }
  auto iso = find_isomorphism(opposite(fx::idem()), fx::idem());
  REQUIRE(iso);
  CHECK(iso->on_objects == std::vector<int>{0});
  CHECK(isomorphic_by_brute_force(opposite(fx::idem()), fx::idem()));
  CHECK(!(*opposite(fx::arrow()) == *fx::arrow()));
}

TEST_CASE("product") {
  auto p = product(fx::arrow(), fx::arrow());
  CHECK(p->num_objects() == 4);
  CHECK(p->num_morphisms() == 9);
  CHECK(p->law_violations().empty());
  for (const auto& [name, c] : fx::all_categories()) {
    CAPTURE(name);
    auto iso = find_isomorphism(product(fx::unit(), c), c);
    CHECK(iso.has_value());
  }
  auto q = product(fx::arrow(), fx::idem());
  auto [l, r] = projections(q);
  CHECK(l.law_violations().empty());
  CHECK(r.law_violations().empty());
  CHECK(q->object_name(q->pair_object(1, 0)) == "⟨b,x⟩");
}

TEST_CASE("product is associative up to a found isomorphism") {
  const std::vector<CatPtr> small{fx::arrow(), fx::idem(), fx::discrete_pair()};
  for (const auto& a : small)
    for (const auto& b : small) {
      auto left = product(product(a, b), fx::z2());
      auto right = product(a, product(b, fx::z2()));
      CHECK(find_isomorphism(left, right).has_value());
    }
}

TEST_CASE("isomorphism search agrees with brute force") {
  auto cats = fx::all_categories();
  for (const auto& [n1, c] : cats)
    for (const auto& [n2, d] : cats) {
      if (c->num_morphisms() > 5) continue;
      CAPTURE(n1);
      CAPTURE(n2);
      CHECK(find_isomorphism(c, d).has_value() == isomorphic_by_brute_force(c, d));
    }
}

TEST_CASE("equivalence certificates") {
  auto unit = fx::unit();
  auto iso = fx::walking_iso();
  auto incl = Functor::make(unit, iso, {0}, {0});
  auto cert = certify_equivalence(incl);
  CHECK(cert.ok);
  CHECK(cert.preimage == std::vector<int>{0, 0});
  auto into_arrow = Functor::make(unit, fx::arrow(), {0}, {0});
  CHECK(!certify_equivalence(into_arrow).ok);
}
