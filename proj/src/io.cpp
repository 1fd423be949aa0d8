#include "kanweigh/io.hpp"

#include <openssl/evp.h>

#include <fstream>
#include <set>
#include <sstream>

#include "kanweigh/error.hpp"

namespace kanweigh::io {

namespace fs = std::filesystem;

namespace {

[[noreturn]] void invalid(const std::string& what) { throw InvalidInput({what}); }

const json& field(const json& doc, const char* key, const std::string& what) {
  if (!doc.is_object() || !doc.contains(key)) invalid(what + ": missing \"" + key + "\"");
  return doc.at(key);
}

std::string text(const json& v, const std::string& what) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  invalid(what + ": expected a string identifier");
}

int object_of(const FinCat& c, const std::string& name, const std::string& what) {
  auto o = c.find_object(name);
  if (!o) invalid(what + ": unknown object '" + name + "'");
  return *o;
}

int morphism_of(const FinCat& c, const std::string& name, const std::string& what) {
  auto m = c.find_morphism(name);
  if (!m) invalid(what + ": unknown morphism '" + name + "'");
  return *m;
}

int element_of(const SetFunctor& f, int o, const std::string& name, const std::string& what) {
  const auto& els = f.elements[o];
  for (std::size_t i = 0; i < els.size(); ++i)
    if (els[i] == name) return static_cast<int>(i);
  invalid(what + ": '" + name + "' is not an element at '" + f.source->object_name(o) + "'");
}

}  // namespace

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr);
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 15];
  }
  return out;
}

json Loader::read(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) invalid("cannot read '" + path.string() + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  const auto bytes = ss.str();
  digests_[path.lexically_normal().generic_string()] = sha256_hex(bytes);
  try {
    return json::parse(bytes);
  } catch (const json::parse_error& e) {
    invalid("'" + path.string() + "' is not valid JSON: " + e.what());
  }
}

CatPtr Loader::category(const json& doc, const fs::path& base) {
  if (doc.is_string()) {
    const auto path = base / doc.get<std::string>();
    return category(read(path), path.parent_path());
  }
  if (!doc.is_object()) invalid("category: expected an object or a path");
  if (doc.contains("opposite")) return opposite(category(doc.at("opposite"), base));
  if (doc.contains("product")) {
    const auto& p = doc.at("product");
    if (!p.is_array() || p.size() != 2) invalid("category: \"product\" takes two categories");
    return product(category(p[0], base), category(p[1], base));
  }
  std::vector<std::string> objects;
  for (const auto& o : field(doc, "objects", "category")) objects.push_back(text(o, "category objects"));
  std::vector<MorphismSpec> morphisms;
  for (const auto& m : field(doc, "morphisms", "category"))
    morphisms.push_back({text(field(m, "id", "morphism"), "morphism id"), text(field(m, "src", "morphism"), "morphism src"),
                         text(field(m, "tgt", "morphism"), "morphism tgt")});
  std::vector<std::pair<std::string, std::string>> identities;
  for (const auto& [o, m] : field(doc, "identities", "category").items()) identities.push_back({o, text(m, "identity")});
  std::vector<std::pair<std::pair<std::string, std::string>, std::string>> table;
  if (doc.contains("compose")) {
    std::set<std::string> names;
    for (const auto& m : morphisms) names.insert(m.name);
    for (const auto& [key, value] : doc.at("compose").items()) {
      // "g|f": accept the unique split into two declared morphisms.
      std::vector<std::pair<std::string, std::string>> splits;
      for (std::size_t i = key.find('|'); i != std::string::npos; i = key.find('|', i + 1)) {
        auto g = key.substr(0, i), f = key.substr(i + 1);
        if (names.count(g) && names.count(f)) splits.push_back({g, f});
      }
      if (splits.size() != 1) invalid("compose key '" + key + "' does not name a pair of declared morphisms");
      table.push_back({splits[0], text(value, "compose value")});
    }
  }
  return std::make_shared<const FinCat>(FinCat::make(objects, morphisms, identities, table));
}

Functor Loader::functor(const json& doc, const fs::path& base) {
  auto source = category(field(doc, "source", "functor"), base);
  auto target = category(field(doc, "target", "functor"), base);
  std::vector<int> objects(source->num_objects(), -1), morphisms(source->num_morphisms(), -1);
  for (const auto& [o, v] : field(doc, "on_objects", "functor").items())
    objects[object_of(*source, o, "functor")] = object_of(*target, text(v, "functor"), "functor");
  if (doc.contains("on_morphisms"))
    for (const auto& [m, v] : doc.at("on_morphisms").items())
      morphisms[morphism_of(*source, m, "functor")] = morphism_of(*target, text(v, "functor"), "functor");
  for (int o = 0; o < source->num_objects(); ++o)
    if (morphisms[source->identity(o)] < 0 && objects[o] >= 0) morphisms[source->identity(o)] = target->identity(objects[o]);
  return Functor::make(source, target, objects, morphisms);
}

SetFunctor Loader::set_functor(const json& doc, const fs::path& base, CatPtr source) {
  if (!source) source = category(field(doc, "source", "set functor"), base);
  const auto& c = *source;
  std::vector<std::vector<std::string>> elements(c.num_objects());
  std::vector<char> seen(c.num_objects(), 0);
  for (const auto& [o, els] : field(doc, "on_objects", "set functor").items()) {
    const int i = object_of(c, o, "set functor");
    seen[i] = 1;
    for (const auto& e : els) elements[i].push_back(text(e, "set functor element"));
  }
  std::vector<std::string> problems;
  for (int o = 0; o < c.num_objects(); ++o)
    if (!seen[o]) problems.push_back("set functor: no set given for object '" + c.object_name(o) + "'");
  if (!problems.empty()) throw InvalidInput(problems);
  SetFunctor f{source, elements, std::vector<Table>(c.num_morphisms())};
  std::vector<char> given(c.num_morphisms(), 0);
  if (doc.contains("on_morphisms"))
    for (const auto& [m, map] : doc.at("on_morphisms").items()) {
      const int i = morphism_of(c, m, "set functor");
      given[i] = 1;
      f.action[i].assign(elements[c.src(i)].size(), -1);
      for (const auto& [x, y] : map.items())
        f.action[i][element_of(f, c.src(i), x, "set functor")] = element_of(f, c.tgt(i), text(y, "set functor"), "set functor");
      for (std::size_t x = 0; x < f.action[i].size(); ++x)
        if (f.action[i][x] < 0)
          problems.push_back("set functor: '" + m + "' does not map '" + elements[c.src(i)][x] + "'");
    }
  for (int m = 0; m < c.num_morphisms(); ++m) {
    if (given[m]) continue;
    if (!c.is_identity(m)) {
      problems.push_back("set functor: no action given for morphism '" + c.morphism_name(m) + "'");
      continue;
    }
    f.action[m].resize(elements[c.src(m)].size());
    for (std::size_t x = 0; x < f.action[m].size(); ++x) f.action[m][x] = static_cast<int>(x);
  }
  if (!problems.empty()) throw InvalidInput(problems);
  return SetFunctor::make(f.source, f.elements, f.action);
}

Weight Loader::weight(const json& doc, const fs::path& base, bool op) {
  const auto v = text(field(doc, "variance", "weight"), "weight variance");
  if (v != "limit" && v != "colimit") invalid("weight: variance must be \"limit\" or \"colimit\"");
  CatPtr source = category(field(doc, "source", "weight"), base);
  if (op) source = opposite(source);
  return {set_functor(doc, base, source), v == "limit" ? Variance::limit : Variance::colimit};
}

Module Loader::module(const json& doc, const fs::path& base) {
  auto shape = category(field(doc, "source", "module"), base);
  if (!shape->is_product()) invalid("module: source must be a product category");
  auto target = opposite(shape->left_factor());
  return Module::make(shape->right_factor(), target, set_functor(doc, base, shape));
}

Diagram Loader::diagram(const json& doc, const fs::path& base) {
  if (doc.is_object() && doc.contains("yoneda")) return yoneda_diagram(yoneda(category(doc.at("yoneda"), base)));
  if (doc.is_object() && doc.contains("shape")) {
    Diagram d;
    d.shape = category(doc.at("shape"), base);
    d.ambient = category(field(doc, "ambient", "diagram"), base);
    d.at.resize(d.shape->num_objects());
    std::vector<char> seen(d.shape->num_objects(), 0);
    for (const auto& [o, f] : field(doc, "at", "diagram").items()) {
      const int i = object_of(*d.shape, o, "diagram");
      d.at[i] = set_functor(f, base, d.ambient);
      seen[i] = 1;
    }
    for (int o = 0; o < d.shape->num_objects(); ++o)
      if (!seen[o]) invalid("diagram: no value at '" + d.shape->object_name(o) + "'");
    d.along.resize(d.shape->num_morphisms());
    std::vector<char> given(d.shape->num_morphisms(), 0);
    if (doc.contains("along"))
      for (const auto& [m, c] : doc.at("along").items()) {
        const int i = morphism_of(*d.shape, m, "diagram");
        d.along[i] = components_from_json(c, d.at[d.shape->src(i)], d.at[d.shape->tgt(i)]);
        given[i] = 1;
      }
    for (int m = 0; m < d.shape->num_morphisms(); ++m) {
      if (given[m]) continue;
      if (!d.shape->is_identity(m)) invalid("diagram: no transformation along '" + d.shape->morphism_name(m) + "'");
      d.along[m] = identity_components(d.at[d.shape->src(m)]);
    }
    auto v = d.law_violations();
    if (!v.empty()) throw InvalidInput(v);
    return d;
  }
  return set_diagram(set_functor(doc, base));
}

json to_json(const FinCat& c) {
  json objects = json::array(), morphisms = json::array(), identities = json::object(), compose = json::object();
  for (int o = 0; o < c.num_objects(); ++o) {
    objects.push_back(c.object_name(o));
    identities[c.object_name(o)] = c.morphism_name(c.identity(o));
  }
  for (int m = 0; m < c.num_morphisms(); ++m)
    morphisms.push_back({{"id", c.morphism_name(m)}, {"src", c.object_name(c.src(m))}, {"tgt", c.object_name(c.tgt(m))}});
  for (int g = 0; g < c.num_morphisms(); ++g)
    for (int f = 0; f < c.num_morphisms(); ++f) {
      const int gf = c.compose(g, f);
      if (gf < 0 || c.is_identity(g) || c.is_identity(f)) continue;
      compose[c.morphism_name(g) + "|" + c.morphism_name(f)] = c.morphism_name(gf);
    }
  return {{"objects", objects}, {"morphisms", morphisms}, {"identities", identities}, {"compose", compose}};
}

json to_json(const Functor& f) {
  json objects = json::object(), morphisms = json::object();
  for (int o = 0; o < f.source->num_objects(); ++o)
    objects[f.source->object_name(o)] = f.target->object_name(f.on_objects[o]);
  for (int m = 0; m < f.source->num_morphisms(); ++m)
    morphisms[f.source->morphism_name(m)] = f.target->morphism_name(f.on_morphisms[m]);
  return {{"source", to_json(*f.source)}, {"target", to_json(*f.target)}, {"on_objects", objects}, {"on_morphisms", morphisms}};
}

namespace {

json set_functor_body(const SetFunctor& f) {
  const auto& c = *f.source;
  json objects = json::object(), morphisms = json::object();
  for (int o = 0; o < c.num_objects(); ++o) objects[c.object_name(o)] = f.elements[o];
  for (int m = 0; m < c.num_morphisms(); ++m) {
    json map = json::object();
    for (int x = 0; x < f.size(c.src(m)); ++x) map[f.elements[c.src(m)][x]] = f.elements[c.tgt(m)][f.action[m][x]];
    morphisms[c.morphism_name(m)] = map;
  }
  return {{"on_objects", objects}, {"on_morphisms", morphisms}};
}

}  // namespace

json to_json(const SetFunctor& f) {
  auto doc = set_functor_body(f);
  doc["source"] = to_json(*f.source);
  return doc;
}

json to_json(const Weight& w) {
  auto doc = to_json(w.functor);
  doc["variance"] = w.variance == Variance::limit ? "limit" : "colimit";
  return doc;
}

json to_json(const Module& m) {
  auto doc = set_functor_body(m.carrier);
  doc["source"] = {{"product", {{{"opposite", to_json(*m.target)}}, to_json(*m.source)}}};
  return doc;
}

json to_json(const Diagram& d) {
  json at = json::object(), along = json::object();
  for (int o = 0; o < d.shape->num_objects(); ++o) at[d.shape->object_name(o)] = to_json(d.at[o]);
  for (int m = 0; m < d.shape->num_morphisms(); ++m)
    if (!d.shape->is_identity(m))
      along[d.shape->morphism_name(m)] = components_json(d.at[d.shape->src(m)], d.at[d.shape->tgt(m)], d.along[m]);
  return {{"shape", to_json(*d.shape)}, {"ambient", to_json(*d.ambient)}, {"at", at}, {"along", along}};
}

json components_json(const SetFunctor& from, const SetFunctor& to, const Components& c) {
  json out = json::object();
  for (int o = 0; o < from.source->num_objects(); ++o) {
    json map = json::object();
    for (int x = 0; x < from.size(o); ++x) map[from.elements[o][x]] = to.elements[o][c[o][x]];
    out[from.source->object_name(o)] = map;
  }
  return out;
}

Components components_from_json(const json& doc, const SetFunctor& from, const SetFunctor& to) {
  const auto& c = *from.source;
  Components out(c.num_objects());
  for (int o = 0; o < c.num_objects(); ++o) {
    const auto& map = field(doc, c.object_name(o).c_str(), "components");
    for (int x = 0; x < from.size(o); ++x) {
      const auto& e = from.elements[o][x];
      if (!map.contains(e)) invalid("components: no image for '" + e + "' at '" + c.object_name(o) + "'");
      out[o].push_back(element_of(to, o, text(map.at(e), "components"), "components"));
    }
  }
  return out;
}

json verdict_json(const ComparisonVerdict& v) {
  json doc{{"invertible", v.invertible}, {"lhs_size", v.lhs_size}, {"rhs_size", v.rhs_size}};
  if (!v.witness.empty()) doc["witness"] = v.witness;
  return doc;
}

std::string dump(const json& doc) { return doc.dump(2, ' ', false) + "\n"; }

}  // namespace kanweigh::io
