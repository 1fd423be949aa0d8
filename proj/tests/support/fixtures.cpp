#include "fixtures.hpp"

#include <functional>
#include <memory>

namespace kanweigh::fixtures {

namespace {

CatPtr make(std::vector<std::string> objects, std::vector<MorphismSpec> morphisms,
            const std::vector<std::pair<std::string, std::string>>& ids,
            const std::vector<std::pair<std::pair<std::string, std::string>, std::string>>& table) {
  return std::make_shared<const FinCat>(FinCat::make(std::move(objects), std::move(morphisms), ids, table));
}

}  // namespace

CatPtr empty() {
  static const CatPtr c = make({}, {}, {}, {});
  return c;
}

CatPtr unit() { return unit_category(); }

CatPtr arrow() {
  static const CatPtr c =
      make({"a", "b"}, {{"id_a", "a", "a"}, {"id_b", "b", "b"}, {"f", "a", "b"}}, {{"a", "id_a"}, {"b", "id_b"}}, {});
  return c;
}

CatPtr idem() {
  static const CatPtr c = make({"x"}, {{"id", "x", "x"}, {"e", "x", "x"}}, {{"x", "id"}}, {{{"e", "e"}, "e"}});
  return c;
}

CatPtr z2() {
  static const CatPtr c = make({"x"}, {{"id", "x", "x"}, {"s", "x", "x"}}, {{"x", "id"}}, {{{"s", "s"}, "id"}});
  return c;
}

CatPtr discrete_pair() {
  static const CatPtr c = make({"a", "b"}, {{"id_a", "a", "a"}, {"id_b", "b", "b"}}, {{"a", "id_a"}, {"b", "id_b"}}, {});
  return c;
}

CatPtr parallel_pair() {
  static const CatPtr c = make({"a", "b"}, {{"id_a", "a", "a"}, {"id_b", "b", "b"}, {"f", "a", "b"}, {"g", "a", "b"}},
                               {{"a", "id_a"}, {"b", "id_b"}}, {});
  return c;
}

CatPtr cospan() {
  static const CatPtr c =
      make({"a", "b", "c"},
           {{"id_a", "a", "a"}, {"id_b", "b", "b"}, {"id_c", "c", "c"}, {"p", "a", "c"}, {"q", "b", "c"}},
           {{"a", "id_a"}, {"b", "id_b"}, {"c", "id_c"}}, {});
  return c;
}

CatPtr span() {
  static const CatPtr c =
      make({"a", "b", "c"},
           {{"id_a", "a", "a"}, {"id_b", "b", "b"}, {"id_c", "c", "c"}, {"p", "c", "a"}, {"q", "c", "b"}},
           {{"a", "id_a"}, {"b", "id_b"}, {"c", "id_c"}}, {});
  return c;
}

CatPtr walking_iso() {
  static const CatPtr c = make({"a", "b"},
                               {{"id_a", "a", "a"}, {"id_b", "b", "b"}, {"u", "a", "b"}, {"v", "b", "a"}},
                               {{"a", "id_a"}, {"b", "id_b"}}, {{{"v", "u"}, "id_a"}, {{"u", "v"}, "id_b"}});
  return c;
}

std::vector<std::pair<std::string, CatPtr>> all_categories() {
  return {{"empty", empty()},         {"unit", unit()},       {"arrow", arrow()},
          {"idem", idem()},           {"z2", z2()},           {"discrete_pair", discrete_pair()},
          {"parallel_pair", parallel_pair()}, {"cospan", cospan()}, {"span", span()},
          {"walking_iso", walking_iso()}};
}

SetFunctor functor(const CatPtr& c, const std::vector<int>& sizes,
                   const std::vector<std::pair<std::string, Table>>& tables) {
  std::vector<std::vector<std::string>> elements;
  for (int s : sizes) {
    elements.emplace_back();
    for (int i = 0; i < s; ++i) elements.back().push_back(std::to_string(i));
  }
  std::vector<Table> action(c->num_morphisms());
  for (int o = 0; o < c->num_objects(); ++o)
    for (int i = 0; i < sizes[o]; ++i) action[c->identity(o)].push_back(i);
  for (const auto& [name, t] : tables) action[*c->find_morphism(name)] = t;
  return SetFunctor::make(c, std::move(elements), std::move(action));
}

std::vector<Functor> all_functors(const CatPtr& a, const CatPtr& b) {
  std::vector<Functor> out;
  const int na = a->num_objects();
  const int ma = a->num_morphisms();
  Functor f{a, b, std::vector<int>(na, 0), std::vector<int>(ma, 0)};
  std::function<void(int)> morphisms = [&](int m) {
    if (m == ma) {
      if (f.law_violations().empty()) out.push_back(f);
      return;
    }
    for (int t : b->hom(f.on_objects[a->src(m)], f.on_objects[a->tgt(m)])) {
      f.on_morphisms[m] = t;
      morphisms(m + 1);
    }
  };
  std::function<void(int)> objects = [&](int o) {
    if (o == na) {
      morphisms(0);
      return;
    }
    for (int t = 0; t < b->num_objects(); ++t) {
      f.on_objects[o] = t;
      objects(o + 1);
    }
  };
  objects(0);
  return out;
}

std::vector<Module> modules_between(const CatPtr& x, const CatPtr& y) {
  std::vector<Module> out;
  for (const auto& t : all_functors(x, y)) out.push_back(functor_modules(t).first);
  for (const auto& t : all_functors(y, x)) out.push_back(functor_modules(t).second);
  out.push_back(Module::make(x, y, terminal_functor(module_shape(x, y))));
  if (*x == *unit_category())
    for (const auto& p : all_set_functors(opposite(y), 1)) out.push_back(presheaf_module(p));
  if (*y == *unit_category())
    for (const auto& p : all_set_functors(x, 1)) out.push_back(copresheaf_module(p));
  return out;
}

}  // namespace kanweigh::fixtures
