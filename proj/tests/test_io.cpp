#include <doctest.h>

#include "fixtures.hpp"
#include "kanweigh/certificates.hpp"
#include "kanweigh/error.hpp"
#include "kanweigh/io.hpp"

using namespace kanweigh;
namespace fx = kanweigh::fixtures;
using io::json;

TEST_CASE("documents round-trip through the loader") {
  io::Loader l;
  for (const auto& [name, c] : fx::all_categories()) {
    CAPTURE(name);
    auto back = l.category(io::to_json(*c), {});
    CHECK(*back == *c);
    auto op = l.category(io::to_json(*opposite(c)), {});
    CHECK(*op == *opposite(c));
    for (const auto& f : all_set_functors(c, 1)) {
      auto g = l.set_functor(io::to_json(f), {});
      CHECK(g.elements == f.elements);
      CHECK(g.action == f.action);
    }
  }
  auto t = fx::all_functors(fx::arrow(), fx::idem()).front();
  auto u = l.functor(io::to_json(t), {});
  CHECK(u.on_morphisms == t.on_morphisms);

  auto [lower, upper] = functor_modules(fx::all_functors(fx::arrow(), fx::cospan()).back());
  auto m = l.module(io::to_json(upper), {});
  CHECK(*m.source == *upper.source);
  CHECK(*m.target == *upper.target);
  CHECK(m.carrier.elements == upper.carrier.elements);
}

TEST_CASE("identity entries may be omitted") {
  io::Loader l;
  json idem = {{"objects", {"x"}},
               {"morphisms", {{{"id", "1"}, {"src", "x"}, {"tgt", "x"}}, {{"id", "e"}, {"src", "x"}, {"tgt", "x"}}}},
               {"identities", {{"x", "1"}}},
               {"compose", {{"e|e", "e"}}}};
  auto c = l.category(idem, {});
  CHECK(c->compose(*c->find_morphism("e"), *c->find_morphism("1")) == *c->find_morphism("e"));
  json f = {{"source", idem}, {"on_objects", {{"x", {"p", "q"}}}}, {"on_morphisms", {{"e", {{"p", "p"}, {"q", "p"}}}}}};
  CHECK(l.set_functor(f, {}).law_violations().empty());
}

TEST_CASE("malformed documents are rejected with reasons") {
  io::Loader l;
  json bad = {{"objects", {"x"}}, {"morphisms", {{{"id", "e"}, {"src", "x"}, {"tgt", "x"}}}}, {"identities", {{"x", "e"}}},
              {"compose", {{"e|e", "nope"}}}};
  CHECK_THROWS_AS(l.category(bad, {}), InvalidInput);
  json z2 = {{"objects", {"x"}},
             {"morphisms", {{{"id", "1"}, {"src", "x"}, {"tgt", "x"}}, {{"id", "s"}, {"src", "x"}, {"tgt", "x"}}}},
             {"identities", {{"x", "1"}}},
             {"compose", {{"s|s", "1"}}}};
  auto c = l.category(z2, {});
  json partial = {{"source", z2}, {"on_objects", {{"x", {"p", "q"}}}}, {"on_morphisms", json::object()}};
  try {
    l.set_functor(partial, {});
    FAIL("expected InvalidInput");
  } catch (const InvalidInput& e) {
    CHECK_FALSE(e.violations().empty());
  }
  CHECK_THROWS_AS(l.read("no/such/file.json"), InvalidInput);
}

TEST_CASE("tampered certificates fail to verify") {
  auto y = yoneda(fx::idem());
  auto phi = y.representables[0];
  auto r = weighted_colimit({phi, Variance::colimit}, yoneda_diagram(y));
  auto iso = find_iso(r.object, phi);
  REQUIRE(iso);
  auto cert = certificates::isomorphism(r.object, phi, *iso);
  CHECK_FALSE(certificates::verify(cert));
  auto& comps = cert["components"];
  for (auto& [obj, map] : comps.items())
    if (map.size() >= 2) {
      auto first = map.begin();
      *first = (std::next(first)).value();
    }
  CHECK(certificates::verify(cert).has_value());

  auto dp = fx::discrete_pair();
  Weight coprod{terminal_functor(dp), Variance::colimit};
  Weight prod{terminal_functor(dp), Variance::limit};
  auto report = commutation_search(coprod, prod, 1);
  REQUIRE(report.counterexample);
  auto ce = certificates::counterexample(coprod, prod, *report.counterexample);
  CHECK_FALSE(certificates::verify(ce));
  auto wrong = ce;
  wrong["rhs_size"] = 3;
  CHECK(certificates::verify(wrong).has_value());

  auto [lower, upper] = functor_modules(fx::all_functors(fx::arrow(), fx::arrow()).front());
  auto v = has_right_adjoint(lower);
  REQUIRE(v.exists);
  auto adj = certificates::adjunction(*v.certificate);
  CHECK_FALSE(certificates::verify(adj));
  auto broken = adj;
  broken["unit"] = json::object();
  CHECK(certificates::verify(broken).has_value());

  CHECK_THROWS_AS(certificates::verify_all(json{{"result", 1}}), InvalidInput);
  CHECK_THROWS_AS(certificates::verify_all(json{{"a", {cert}}, {"b", ce}}), InvalidInput);
  CHECK(certificates::verify_all(json{{"a", {adj, ce}}, {"b", ce}}).size() == 3);
}
