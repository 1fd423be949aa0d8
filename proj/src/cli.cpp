#include "kanweigh/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>

#include "kanweigh/cauchy_isbell.hpp"
#include "kanweigh/certificates.hpp"
#include "kanweigh/closure.hpp"
#include "kanweigh/error.hpp"
#include "kanweigh/io.hpp"
#include "kanweigh/promod.hpp"
#include "kanweigh/weighted.hpp"

namespace kanweigh::cli {

namespace fs = std::filesystem;
using io::json;

namespace {

struct Options {
  bool op = false;
  std::string out;
  std::uint64_t max_candidates = Caps{}.max_candidates;
  std::uint64_t max_set_size = Caps{}.max_set_size;
  int depth = 2;
  bool timing = false;
};

class Session {
 public:
  explicit Session(Options opt) : opt_(std::move(opt)) {}

  const Options& options() const { return opt_; }
  io::Loader& loader() { return loader_; }

  json doc(const std::string& path) { return loader_.read(path); }
  fs::path base(const std::string& path) const { return fs::path(path).parent_path(); }

  CatPtr category(const std::string& path, bool flip) {
    auto c = loader_.category(doc(path), base(path));
    return flip ? opposite(c) : c;
  }
  SetFunctor set_functor(const std::string& path) {
    auto d = doc(path);
    auto src = loader_.category(d.at("source"), base(path));
    return loader_.set_functor(d, base(path), opt_.op ? opposite(src) : src);
  }
  Weight weight(const std::string& path) { return loader_.weight(doc(path), base(path), opt_.op); }
  Module module(const std::string& path) { return loader_.module(doc(path), base(path)); }
  Diagram diagram(const std::string& path) { return loader_.diagram(doc(path), base(path)); }

 private:
  Options opt_;
  io::Loader loader_;
};

json sizes_json(const SetFunctor& f) {
  json out = json::object();
  for (int o = 0; o < f.source->num_objects(); ++o) out[f.source->object_name(o)] = f.size(o);
  return out;
}

json refutation_json(const CocontinuityRefutation& r, const SetFunctor& presheaf) {
  return {{"instance", r.instance}, {"comparison", io::verdict_json(r.verdict)},
          {"certificate", certificates::refutation(presheaf, r)}};
}

json cmd_validate(Session& s, const std::string& file, bool certificate, const std::string& kind) {
  auto d = s.doc(file);
  const auto base = s.base(file);
  if (certificate) {
    auto checked = certificates::verify_all(d, base);
    return {{"valid", true}, {"certificates", checked}};
  }
  std::string k = kind;
  if (k.empty()) {
    if (d.contains("objects") || d.contains("opposite") || d.contains("product")) k = "category";
    else if (d.contains("variance")) k = "weight";
    else if (d.contains("target")) k = "functor";
    else if (d.contains("shape") || d.contains("yoneda")) k = "diagram";
    else if (d.contains("source") && d.at("source").is_object() && d.at("source").contains("product")) k = "module";
    else k = "set-functor";
  }
  auto& l = s.loader();
  if (k == "category") {
    auto c = l.category(d, base);
    if (s.options().op) c = opposite(c);
    return {{"valid", true}, {"kind", k}, {"objects", c->num_objects()}, {"morphisms", c->num_morphisms()}};
  }
  if (k == "weight") l.weight(d, base, s.options().op);
  else if (k == "functor") l.functor(d, base);
  else if (k == "diagram") l.diagram(d, base);
  else if (k == "module") l.module(d, base);
  else if (k == "set-functor") s.set_functor(file);
  else throw InvalidInput({"unknown document kind '" + k + "'"});
  return {{"valid", true}, {"kind", k}};
}

json cmd_limit(Session& s, const std::string& w, const std::string& d, bool limit) {
  auto weight = s.weight(w);
  auto diagram = s.diagram(d);
  const auto scale = 1;
  json out;
  if (limit) {
    auto l = weighted_limit(weight, diagram);
    auto failure = universal_property_failure(l, competitors(diagram.ambient, scale));
    out = {{"object", io::to_json(l.object)}, {"sizes", sizes_json(l.object)}};
    out["universal_property"] = failure ? *failure : "verified at scale " + std::to_string(scale);
  } else {
    auto c = weighted_colimit(weight, diagram);
    auto failure = universal_property_failure(c, competitors(diagram.ambient, scale));
    out = {{"object", io::to_json(c.object)}, {"sizes", sizes_json(c.object)}};
    out["universal_property"] = failure ? *failure : "verified at scale " + std::to_string(scale);
  }
  return out;
}

json cmd_commute(Session& s, const std::string& cw, const std::string& lw, const std::string& at, bool search, int max_size) {
  auto phi = s.weight(cw);
  auto psi = s.weight(lw);
  if (!at.empty()) {
    auto d = s.doc(at);
    auto shape = product(opposite(phi.functor.source), psi.functor.source);
    auto sf = s.loader().set_functor(d, s.base(at), shape);
    auto v = commutes_at(phi, psi, sf);
    json out = io::verdict_json(v);
    if (!v.invertible) out["certificate"] = certificates::counterexample(phi, psi, sf);
    return out;
  }
  if (!search) throw InvalidInput({"commute needs --at or --search"});
  auto r = commutation_search(phi, psi, max_size);
  json out{{"clean", r.clean}, {"bound", r.bound}, {"checked", r.checked}};
  if (r.counterexample) {
    out["counterexample"] = {{"diagram", io::to_json(*r.counterexample)}, {"comparison", io::verdict_json(r.verdict)},
                             {"sizes", sizes_json(*r.counterexample)}};
    out["certificate"] = certificates::counterexample(phi, psi, *r.counterexample);
  }
  return out;
}

json cmd_flat(Session& s, const std::string& w) {
  auto v = is_flat_finlim(s.weight(w));
  json out{{"flat", v.flat}};
  if (!v.flat) out["witness"] = v.witness;
  return out;
}

json cmd_adjoint(Session& s, const std::string& m, bool left) {
  auto f = s.module(m);
  auto subject = left ? dual_module(f) : f;
  auto v = has_right_adjoint(subject);
  json out{{left ? "has_left_adjoint" : "has_right_adjoint", v.exists}};
  if (v.exists) {
    const auto& cert = *v.certificate;
    out[left ? "left_adjoint" : "right_adjoint"] = io::to_json(left ? dual_module(cert.right) : cert.right);
    out["certificate"] = certificates::adjunction(cert);
    if (left) out["certificate_note"] = "adjunction between the dual modules";
  } else {
    out["respect_failure"] = v.respect_failure;
    if (v.refutation) {
      auto fa = slice_right(subject.carrier, v.refutation->object);
      out["refutation"] = refutation_json(*v.refutation, fa);
      out["refutation"]["object"] = subject.source->object_name(v.refutation->object);
    }
  }
  return out;
}

json cmd_cauchy(Session& s, const std::string& c) {
  auto b = s.category(c, s.options().op);
  auto q = cauchy_completion(b);
  const auto& qc = *q.category;
  json objects = json::array(), homs = json::array(), idempotents = json::object();
  for (int p = 0; p < qc.num_objects(); ++p) {
    objects.push_back(qc.object_name(p));
    idempotents[qc.object_name(p)] = b->morphism_name(q.idempotents[p]);
    json row = json::array();
    for (int r = 0; r < qc.num_objects(); ++r) row.push_back(qc.hom(p, r).size());
    homs.push_back(row);
  }
  json retracts = json::array();
  for (const auto& m : q.retract_models)
    if (auto w = find_retract(m)) retracts.push_back(certificates::retract(m, *w));
  json out{{"objects", objects},
           {"hom_sizes", homs},
           {"idempotents", idempotents},
           {"category", io::to_json(qc)},
           {"embedding", io::to_json(q.embedding)},
           {"retract_equivalence", {{"ok", q.retracts.ok}}},
           {"certificates", {certificates::fully_faithful(q.embedding)}}};
  if (!q.retracts.ok) out["retract_equivalence"]["failure"] = q.retracts.failure;
  for (auto& r : retracts) out["certificates"].push_back(std::move(r));
  return out;
}

json cmd_isbell(Session& s, const std::string& c, const std::string& presheaf, const std::string& copresheaf, bool check) {
  auto b = s.category(c, false);
  if (!presheaf.empty()) {
    auto phi = s.set_functor(presheaf);
    if (!(*phi.source == *opposite(b)))
      throw InvalidInput({"presheaf must be declared on the opposite of the category (see --op)"});
    auto o = isbell_o(b, phi);
    auto sp = is_small_projective(phi);
    auto unit = isbell_unit(b, phi);
    auto twice = isbell_spec(b, o);
    const bool invertible = is_bijective(phi, twice, unit);
    json out{{"o", io::to_json(o)}, {"sizes", sizes_json(o)}, {"small_projective", sp.projective}, {"unit_invertible", invertible}};
    if (invertible) out["certificate"] = certificates::isomorphism(phi, twice, unit);
    if (sp.retract) out["retract"] = certificates::retract(phi, *sp.retract);
    return out;
  }
  if (!copresheaf.empty()) {
    auto psi = s.set_functor(copresheaf);
    if (!(*psi.source == *b)) throw InvalidInput({"copresheaf must be declared on the category"});
    auto spec = isbell_spec(b, psi);
    auto sp = is_small_projective(psi);
    auto counit = isbell_counit(b, psi);
    auto twice = isbell_o(b, spec);
    const bool invertible = is_bijective(psi, twice, counit);
    json out{{"spec", io::to_json(spec)}, {"sizes", sizes_json(spec)}, {"small_projective", sp.projective},
             {"counit_invertible", invertible}};
    if (invertible) out["certificate"] = certificates::isomorphism(psi, twice, counit);
    return out;
  }
  if (!check) throw InvalidInput({"isbell needs --presheaf, --copresheaf or --check"});
  auto presheaves = default_isbell_grid(opposite(b));
  auto copresheaves = default_isbell_grid(b);
  auto r = isbell_adjunction_check(b, presheaves, copresheaves);
  json out{{"ok", r.ok},
           {"presheaves", presheaves.size()},
           {"copresheaves", copresheaves.size()},
           {"pairs", r.pairs},
           {"projective_presheaves", r.projective_presheaves},
           {"projective_copresheaves", r.projective_copresheaves}};
  if (!r.ok) out["failure"] = r.failure;
  return out;
}

json cmd_closure(Session& s, const std::string& c, const std::vector<std::string>& weights, const std::string& member) {
  auto b = s.category(c, false);
  WeightClass phi;
  for (const auto& w : weights) phi.push_back(s.weight(w));
  const int depth = s.options().depth;
  json out{{"depth", depth}};
  ClosureResult r;
  if (!member.empty()) {
    auto psi = s.set_functor(member);
    auto v = saturation_member(psi, phi, b, depth);
    r = v.closure;
    json m{{"member", v.member}, {"depth", v.depth}};
    if (v.member) {
      m["element"] = v.element;
      m["stage"] = v.stage;
      m["chain"] = v.chain;
      m["certificate"] = certificates::isomorphism(psi, r.elements[v.element].presheaf, *v.iso);
    } else {
      m["verdict"] = "not found by depth " + std::to_string(depth);
    }
    out["membership"] = m;
  } else {
    r = closure_iterate(phi, b, depth);
  }
  json elements = json::array();
  for (std::size_t i = 0; i < r.elements.size(); ++i) {
    const auto& e = r.elements[i];
    json el{{"index", i}, {"stage", e.stage}, {"presheaf", io::to_json(e.presheaf)}, {"sizes", sizes_json(e.presheaf)}};
    if (e.weight < 0) {
      el["witness"] = {{"representable", b->object_name(e.representable)}};
    } else {
      el["witness"] = {{"weight", e.weight}, {"values", e.values}};
      el["certificate"] = certificates::colimit_witness(phi[e.weight], witness_diagram(r, phi, static_cast<int>(i)), e.presheaf);
    }
    elements.push_back(std::move(el));
  }
  out["elements"] = elements;
  out["stages"] = r.stages;
  out["fixpoint"] = r.fixpoint;
  return out;
}

json module_result(const Module& m) {
  return {{"module", io::to_json(m)}, {"sizes", sizes_json(m.carrier)}};
}

}  // namespace

int run(int argc, char** argv) {
  CLI::App app{"Exact weighted limits, modules and completions over finite sets"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--op", opt.op, "Read set-functor documents over the opposite of their declared source");
  app.add_option("--out", opt.out, "Write the report to this path instead of standard output");
  app.add_option("--max-candidates", opt.max_candidates, "Enumeration cap")
      ->envname("KANWEIGH_MAX_CANDIDATES")
      ->capture_default_str();
  app.add_option("--max-set-size", opt.max_set_size, "Largest set a constructed presheaf may hold")->capture_default_str();
  app.add_option("--depth", opt.depth, "Closure depth")->capture_default_str();
  app.add_flag("--timing", opt.timing, "Add wall time to the report");

  std::string file, kind, weight_path, diagram_path, colimit_weight, limit_weight, at, module_path, category;
  std::string presheaf, copresheaf, member, first, second;
  bool certificate = false, search = false, left = false, check = false;
  int max_size = 1;
  std::vector<std::string> weights;

  auto* validate = app.add_subcommand("validate", "Validate a document or re-verify certificates");
  validate->add_option("file", file)->required();
  validate->add_flag("--certificate", certificate, "Treat the file as a certificate or a report and re-verify");
  validate->add_option("--kind", kind, "category | functor | set-functor | weight | module | diagram");
  auto* limit = app.add_subcommand("limit", "Weighted limit of a diagram");
  auto* colimit = app.add_subcommand("colimit", "Weighted colimit of a diagram");
  for (auto* sub : {limit, colimit}) {
    sub->add_option("--weight", weight_path)->required();
    sub->add_option("--diagram", diagram_path)->required();
  }
  auto* commute = app.add_subcommand("commute", "Commutation of colimits with limits");
  commute->add_option("--colimit-weight", colimit_weight)->required();
  commute->add_option("--limit-weight", limit_weight)->required();
  commute->add_option("--at", at, "A functor on product(opposite(K), L)");
  commute->add_flag("--search", search);
  commute->add_option("--max-size", max_size)->capture_default_str();
  auto* flat = app.add_subcommand("flat", "Flatness of a weight for finite limits");
  flat->add_option("--weight", weight_path)->required();
  auto* adjoint = app.add_subcommand("adjoint", "Decide whether a module has a right adjoint");
  adjoint->add_option("--module", module_path)->required();
  adjoint->add_flag("--left", left, "Decide a left adjoint instead");
  auto* compose = app.add_subcommand("mod-compose", "Compose modules g after f");
  auto* rlift_cmd = app.add_subcommand("rlift", "Right lifting of h through g");
  auto* rext_cmd = app.add_subcommand("rext", "Right extension of h along f");
  for (auto* sub : {compose, rlift_cmd, rext_cmd}) {
    sub->add_option("first", first)->required();
    sub->add_option("second", second)->required();
  }
  auto* cauchy = app.add_subcommand("cauchy", "Cauchy completion by splitting idempotents");
  cauchy->add_option("--category", category)->required();
  auto* isbell = app.add_subcommand("isbell", "Isbell conjugates and the Isbell adjunction");
  isbell->add_option("--category", category)->required();
  isbell->add_option("--presheaf", presheaf);
  isbell->add_option("--copresheaf", copresheaf);
  isbell->add_flag("--check", check);
  auto* closure = app.add_subcommand("closure", "Closure of the representables under weighted colimits");
  closure->add_option("--category", category)->required();
  closure->add_option("--weights", weights)->expected(0, -1);
  closure->add_option("--member", member);
  for (auto* sub : app.get_subcommands([](CLI::App*) { return true; })) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  caps().max_candidates = opt.max_candidates;
  caps().max_set_size = opt.max_set_size;
  auto* sub = app.get_subcommands().front();
  const std::string name = sub->get_name();
  json args = json::array();
  for (int i = 1; i < argc; ++i) args.push_back(argv[i]);

  Session session(opt);
  json report{{"command", name}, {"arguments", args}};
  int code = 0;
  const auto start = std::chrono::steady_clock::now();
  try {
    json result;
    if (name == "validate") result = cmd_validate(session, file, certificate, kind);
    else if (name == "limit" || name == "colimit") result = cmd_limit(session, weight_path, diagram_path, name == "limit");
    else if (name == "commute") result = cmd_commute(session, colimit_weight, limit_weight, at, search, max_size);
    else if (name == "flat") result = cmd_flat(session, weight_path);
    else if (name == "adjoint") result = cmd_adjoint(session, module_path, left);
    else if (name == "mod-compose") result = module_result(compose_modules(session.module(first), session.module(second)).module);
    else if (name == "rlift") result = module_result(rlift(session.module(first), session.module(second)));
    else if (name == "rext") result = module_result(rext(session.module(first), session.module(second)));
    else if (name == "cauchy") result = cmd_cauchy(session, category);
    else if (name == "isbell") result = cmd_isbell(session, category, presheaf, copresheaf, check);
    else if (name == "closure") result = cmd_closure(session, category, weights, member);
    report["result"] = result;
  } catch (const InvalidInput& e) {
    code = 1;
    report["valid"] = false;
    report["violations"] = e.violations();
  } catch (const CapExceeded& e) {
    code = 2;
    report["error"] = {{"cap", e.cap()}, {"limit", e.limit()}, {"where", e.where()}};
  } catch (const InternalError& e) {
    std::cerr << "kanweigh: internal error: " << e.what() << "\n";
    return 3;
  }
  report["inputs"] = session.loader().digests();
  report["caps"] = {{"max_candidates", opt.max_candidates}, {"max_set_size", opt.max_set_size}, {"depth", opt.depth}};
  if (opt.timing)
    report["wall_time_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();

  const auto text = io::dump(report);
  if (opt.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(opt.out, std::ios::binary);
    if (!out) {
      std::cerr << "kanweigh: cannot write '" << opt.out << "'\n";
      return 1;
    }
    out << text;
  }
  return code;
}

}  // namespace kanweigh::cli
