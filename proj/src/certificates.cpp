#include "kanweigh/certificates.hpp"

#include <array>

#include "kanweigh/error.hpp"

namespace kanweigh::certificates {

namespace {

constexpr std::array kinds{"isomorphism",    "module-adjunction",          "fully-faithful",          "equivalence",
                           "retract",        "colimit-witness",            "commutation-counterexample",
                           "cocontinuity-refutation"};

json tagged(const char* kind, json body) {
  body["kind"] = kind;
  return body;
}

std::optional<std::string> transformation_failure(const SetFunctor& f, const SetFunctor& g, const Components& c,
                                                  const std::string& what) {
  auto v = naturality_violations(f, g, c);
  if (!v.empty()) return what + " is not natural: " + v.front();
  return std::nullopt;
}

SetFunctor representable_on(const CatPtr& presheaf_source, int object) {
  auto r = yoneda(opposite(presheaf_source)).representables.at(object);
  r.source = presheaf_source;
  return r;
}

std::optional<std::string> check(const json& c, const std::filesystem::path& base) {
  io::Loader l;
  const std::string kind = c.at("kind");
  if (kind == "isomorphism") {
    auto from = l.set_functor(c.at("from"), base);
    auto to = l.set_functor(c.at("to"), base);
    if (!(*from.source == *to.source)) return "functors have different sources";
    auto comps = io::components_from_json(c.at("components"), from, to);
    if (auto f = transformation_failure(from, to, comps, "map")) return f;
    if (!is_bijective(from, to, comps)) return "map is not bijective";
    return std::nullopt;
  }
  if (kind == "module-adjunction") {
    auto f = l.module(c.at("left"), base);
    auto g = l.module(c.at("right"), base);
    if (!(*f.source == *g.target) || !(*f.target == *g.source)) return "modules do not form a pair A ⇸ B, B ⇸ A";
    auto gf = compose_modules(g, f).module;
    auto fg = compose_modules(f, g).module;
    auto unit = io::components_from_json(c.at("unit"), hom_module(f.source).carrier, gf.carrier);
    auto counit = io::components_from_json(c.at("counit"), fg.carrier, hom_module(f.target).carrier);
    auto r = check_adjunction(f, g, unit, counit);
    if (!r.ok) return r.failure;
    return std::nullopt;
  }
  if (kind == "fully-faithful") return fully_faithful_failure(l.functor(c.at("functor"), base));
  if (kind == "equivalence") {
    auto r = certify_equivalence(l.functor(c.at("functor"), base));
    if (!r.ok) return r.failure;
    return std::nullopt;
  }
  if (kind == "retract") {
    auto phi = l.set_functor(c.at("presheaf"), base);
    const std::string name = c.at("object");
    auto b = opposite(phi.source);
    int object = -1;
    for (int o = 0; o < b->num_objects(); ++o)
      if (b->object_name(o) == name) object = o;
    if (object < 0) return "unknown object '" + name + "'";
    auto rep = representable_on(phi.source, object);
    auto section = io::components_from_json(c.at("section"), phi, rep);
    auto retraction = io::components_from_json(c.at("retraction"), rep, phi);
    if (auto f = transformation_failure(phi, rep, section, "section")) return f;
    if (auto f = transformation_failure(rep, phi, retraction, "retraction")) return f;
    if (compose_components(retraction, section) != identity_components(phi)) return "retraction ∘ section is not the identity";
    return std::nullopt;
  }
  if (kind == "colimit-witness") {
    auto w = l.weight(c.at("weight"), base);
    auto d = l.diagram(c.at("diagram"), base);
    auto object = l.set_functor(c.at("object"), base);
    auto colim = weighted_colimit(w, d).object;
    if (!(*colim.source == *object.source)) return "object lives over a different category";
    if (!find_iso(colim, object)) return "object is not isomorphic to the recomputed colimit";
    return std::nullopt;
  }
  if (kind == "commutation-counterexample") {
    auto phi = l.weight(c.at("colimit_weight"), base);
    auto psi = l.weight(c.at("limit_weight"), base);
    auto shape = product(opposite(phi.functor.source), psi.functor.source);
    auto s = l.set_functor(c.at("diagram"), base, shape);
    auto v = commutes_at(phi, psi, s);
    if (v.invertible) return "comparison is invertible";
    if (v.lhs_size != c.at("lhs_size").get<int>() || v.rhs_size != c.at("rhs_size").get<int>())
      return "comparison sizes differ from the recorded ones";
    return std::nullopt;
  }
  if (kind == "cocontinuity-refutation") {
    auto phi = l.set_functor(c.at("presheaf"), base);
    auto r = cocontinuity_refutation(phi);
    if (!r) return "every probe is preserved";
    if (r->instance != c.at("instance").get<std::string>()) return "first failing probe is '" + r->instance + "'";
    if (r->verdict.lhs_size != c.at("lhs_size").get<int>() || r->verdict.rhs_size != c.at("rhs_size").get<int>())
      return "comparison sizes differ from the recorded ones";
    return std::nullopt;
  }
  return "unknown certificate kind '" + kind + "'";
}

void collect(const json& doc, const json::json_pointer& at, std::vector<std::pair<json::json_pointer, const json*>>& out) {
  if (doc.is_object()) {
    if (is_certificate(doc)) {
      out.emplace_back(at, &doc);
      return;
    }
    for (const auto& [k, v] : doc.items()) collect(v, at / k, out);
  } else if (doc.is_array()) {
    for (std::size_t i = 0; i < doc.size(); ++i) collect(doc[i], at / i, out);
  }
}

}  // namespace

json isomorphism(const SetFunctor& from, const SetFunctor& to, const Components& c) {
  return tagged("isomorphism", {{"from", io::to_json(from)}, {"to", io::to_json(to)}, {"components", io::components_json(from, to, c)}});
}

json adjunction(const AdjunctionCertificate& cert) {
  const auto& f = cert.left;
  const auto& g = cert.right;
  auto gf = compose_modules(g, f).module;
  auto fg = compose_modules(f, g).module;
  return tagged("module-adjunction", {{"left", io::to_json(f)},
                                      {"right", io::to_json(g)},
                                      {"unit", io::components_json(hom_module(f.source).carrier, gf.carrier, cert.unit)},
                                      {"counit", io::components_json(fg.carrier, hom_module(f.target).carrier, cert.counit)}});
}

json fully_faithful(const Functor& f) { return tagged("fully-faithful", {{"functor", io::to_json(f)}}); }

json equivalence(const Functor& f) { return tagged("equivalence", {{"functor", io::to_json(f)}}); }

json retract(const SetFunctor& phi, const RetractWitness& w) {
  auto rep = representable_on(phi.source, w.object);
  return tagged("retract", {{"presheaf", io::to_json(phi)},
                            {"object", phi.source->object_name(w.object)},
                            {"section", io::components_json(phi, rep, w.section)},
                            {"retraction", io::components_json(rep, phi, w.retraction)}});
}

json colimit_witness(const Weight& phi, const Diagram& d, const SetFunctor& object) {
  return tagged("colimit-witness", {{"weight", io::to_json(phi)}, {"diagram", io::to_json(d)}, {"object", io::to_json(object)}});
}

json counterexample(const Weight& phi, const Weight& psi, const SetFunctor& s) {
  auto v = commutes_at(phi, psi, s);
  return tagged("commutation-counterexample", {{"colimit_weight", io::to_json(phi)},
                                               {"limit_weight", io::to_json(psi)},
                                               {"diagram", io::to_json(s)},
                                               {"lhs_size", v.lhs_size},
                                               {"rhs_size", v.rhs_size}});
}

json refutation(const SetFunctor& presheaf, const CocontinuityRefutation& r) {
  return tagged("cocontinuity-refutation", {{"presheaf", io::to_json(presheaf)},
                                            {"instance", r.instance},
                                            {"lhs_size", r.verdict.lhs_size},
                                            {"rhs_size", r.verdict.rhs_size}});
}

bool is_certificate(const json& doc) {
  if (!doc.is_object() || !doc.contains("kind") || !doc.at("kind").is_string()) return false;
  const auto& k = doc.at("kind").get_ref<const std::string&>();
  for (const char* known : kinds)
    if (k == known) return true;
  return false;
}

std::optional<std::string> verify(const json& cert, const std::filesystem::path& base) {
  try {
    return check(cert, base);
  } catch (const InvalidInput& e) {
    return e.violations().empty() ? std::string("invalid certificate") : e.violations().front();
  } catch (const json::exception& e) {
    return std::string("malformed certificate: ") + e.what();
  }
}

json verify_all(const json& doc, const std::filesystem::path& base) {
  std::vector<std::pair<json::json_pointer, const json*>> found;
  collect(doc, json::json_pointer{}, found);
  if (found.empty()) throw InvalidInput({"no certificate found"});
  json out = json::array();
  std::vector<std::string> failures;
  for (const auto& [at, cert] : found) {
    if (auto f = verify(*cert, base)) failures.push_back(at.to_string() + ": " + *f);
    out.push_back({{"kind", cert->at("kind")}, {"at", at.to_string()}});
  }
  if (!failures.empty()) throw InvalidInput(failures);
  return out;
}

}  // namespace kanweigh::certificates
