#include "kanweigh/cauchy_isbell.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <tuple>

#include "kanweigh/error.hpp"

namespace kanweigh {

namespace {

struct Transform {
  SetFunctor functor;
  std::vector<NatSet> sets;
};

// Representables of b re-sourced onto the given presheaf shape.
std::vector<SetFunctor> representables_on(const Yoneda& y, const CatPtr& shape) {
  auto out = y.representables;
  for (auto& r : out) r.source = shape;
  return out;
}

Transform transform(const SetFunctor& in, const Yoneda& y, const CatPtr& result_source) {
  const auto reps = representables_on(y, in.source);
  const auto& c = *y.category;
  Transform t{SetFunctor{result_source, {}, {}}, {}};
  for (int o = 0; o < c.num_objects(); ++o) {
    auto ns = nat_set(in, reps[o]);
    ns.build_index();
    std::vector<std::string> names;
    for (const auto& m : ns.members) names.push_back(describe_components(in, reps[o], m));
    t.functor.elements.push_back(std::move(names));
    t.sets.push_back(std::move(ns));
  }
  for (int g = 0; g < c.num_morphisms(); ++g) {
    Table tab;
    for (const auto& alpha : t.sets[c.src(g)].members) {
      const int i = t.sets[c.tgt(g)].index_of(compose_components(y.on_morphisms[g], alpha));
      if (i < 0) throw InternalError("Yoneda action leaves the nat-set");
      tab.push_back(i);
    }
    t.functor.action.push_back(std::move(tab));
  }
  return t;
}

// O(φ) is a functor on B, built from Y on B.
Transform o_transform(const CatPtr& b, const SetFunctor& phi) {
  if (!(*phi.source == *opposite(b))) throw InvalidInput({"presheaf is not defined on the opposite of the category"});
  return transform(phi, yoneda(b), b);
}

// Spec(ψ) is a functor on B^op, built from Y′ = Y on B^op.
Transform spec_transform(const CatPtr& b, const SetFunctor& psi) {
  if (!(*psi.source == *b)) throw InvalidInput({"copresheaf is not defined on the category"});
  return transform(psi, yoneda(opposite(b)), opposite(b));
}

std::string unique_name(std::string name, const std::set<std::string>& taken) {
  while (taken.count(name)) name += "'";
  return name;
}

// Fixed points of an idempotent acting by postcomposition on a representable.
SetFunctor image_presheaf(const FinCat& b, const CatPtr& shape, int c, const std::function<bool(int, int)>& fixed) {
  SetFunctor im{shape, {}, std::vector<Table>(b.num_morphisms())};
  std::vector<std::vector<int>> members(b.num_objects());
  for (int d = 0; d < b.num_objects(); ++d) {
    std::vector<std::string> names;
    const auto& hom = b.hom(d, c);
    for (int i = 0; i < static_cast<int>(hom.size()); ++i)
      if (fixed(d, i)) {
        members[d].push_back(hom[i]);
        names.push_back(b.morphism_name(hom[i]));
      }
    im.elements.push_back(std::move(names));
  }
  for (int g = 0; g < b.num_morphisms(); ++g) {
    // g : d → d' in B acts as im(d') → im(d), h ↦ h ∘ g.
    const int d = b.src(g);
    for (int h : members[b.tgt(g)]) {
      const int hg = b.compose(h, g);
      const auto it = std::find(members[d].begin(), members[d].end(), hg);
      if (it == members[d].end()) throw InternalError("image of an idempotent is not a subpresheaf");
      im.action[g].push_back(static_cast<int>(it - members[d].begin()));
    }
  }
  return im;
}

}  // namespace

std::optional<RetractWitness> find_retract(const SetFunctor& phi) {
  const auto y = yoneda(opposite(phi.source));
  const auto reps = representables_on(y, phi.source);
  const auto id = identity_components(phi);
  for (int b = 0; b < static_cast<int>(reps.size()); ++b) {
    const auto sections = nat_set(phi, reps[b]);
    if (sections.size() == 0) continue;
    const auto retractions = nat_set(reps[b], phi);
    for (const auto& r : retractions.members)
      for (const auto& s : sections.members)
        if (compose_components(r, s) == id) return RetractWitness{b, s, r, compose_components(s, r)};
  }
  return std::nullopt;
}

SmallProjectiveVerdict is_small_projective(const SetFunctor& phi) {
  SmallProjectiveVerdict out;
  auto adj = has_right_adjoint(presheaf_module(phi));
  out.retract = find_retract(phi);
  out.projective = adj.exists;
  if (adj.exists != out.retract.has_value())
    throw InternalError("small projectivity: module adjointness and retract search disagree");
  if (!adj.exists) out.refutation = adj.refutation;
  return out;
}

CauchyCompletion cauchy_completion(const CatPtr& bp) {
  const auto& b = *bp;
  CauchyCompletion out;
  std::vector<std::string> names;
  std::set<std::string> taken;
  for (int o = 0; o < b.num_objects(); ++o) {
    out.idempotents.push_back(b.identity(o));
    names.push_back(b.object_name(o));
    taken.insert(names.back());
  }
  for (int m = 0; m < b.num_morphisms(); ++m)
    if (!b.is_identity(m) && b.compose(m, m) == m) {
      out.idempotents.push_back(m);
      names.push_back(unique_name(b.morphism_name(m), taken));
      taken.insert(names.back());
    }
  const int n = static_cast<int>(out.idempotents.size());

  CandidateBudget budget("cauchy completion");
  std::vector<MorphismSpec> morphisms;
  std::vector<std::pair<std::string, std::string>> identities;
  std::map<std::tuple<int, int, int>, std::string> by_parts;
  std::map<std::string, int> base_of;
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      const int ep = out.idempotents[p];
      const int eq = out.idempotents[q];
      for (int f : b.hom(b.src(ep), b.src(eq))) {
        budget.charge();
        if (b.compose(eq, b.compose(f, ep)) != f) continue;
        auto name = tuple_name({names[p], b.morphism_name(f), names[q]});
        morphisms.push_back({name, names[p], names[q]});
        by_parts[{p, f, q}] = name;
        base_of[name] = f;
      }
    }
  for (int p = 0; p < n; ++p) identities.push_back({names[p], by_parts.at({p, out.idempotents[p], p})});
  std::vector<std::pair<std::pair<std::string, std::string>, std::string>> table;
  for (const auto& [k1, name1] : by_parts)
    for (const auto& [k2, name2] : by_parts) {
      const auto [p, f, q] = k1;
      const auto [q2, g, r] = k2;
      if (q != q2) continue;
      table.push_back({{name2, name1}, by_parts.at({p, b.compose(g, f), r})});
    }
  out.category = std::make_shared<const FinCat>(FinCat::make(names, morphisms, identities, table));
  const auto& qc = *out.category;

  std::vector<int> on_objects(b.num_objects()), on_morphisms(b.num_morphisms());
  for (int o = 0; o < b.num_objects(); ++o) on_objects[o] = o;
  for (int m = 0; m < b.num_morphisms(); ++m)
    on_morphisms[m] = *qc.find_morphism(by_parts.at({b.src(m), m, b.tgt(m)}));
  out.embedding = Functor::make(bp, out.category, on_objects, on_morphisms);

  // Oracle: retracts of representables, found from idempotent endo-transformations of Yc.
  const auto shape = opposite(bp);
  const auto y = yoneda(bp);
  const auto reps = representables_on(y, shape);
  for (int c = 0; c < b.num_objects(); ++c) {
    for (const auto& e : nat_set(reps[c], reps[c]).members) {
      if (compose_components(e, e) != e) continue;
      auto im = image_presheaf(b, shape, c, [&](int d, int i) { return e[d][i] == i; });
      bool seen = false;
      for (const auto& m : out.retract_models)
        if (find_iso(m, im)) {
          seen = true;
          break;
        }
      if (!seen) out.retract_models.push_back(std::move(im));
    }
  }
  const int nr = static_cast<int>(out.retract_models.size());
  std::vector<std::string> r_objects;
  for (int i = 0; i < nr; ++i) r_objects.push_back("r" + std::to_string(i));
  std::vector<MorphismSpec> r_morphisms;
  std::vector<std::pair<std::string, std::string>> r_ids;
  std::vector<std::vector<NatSet>> homs(nr);
  for (int i = 0; i < nr; ++i)
    for (int j = 0; j < nr; ++j) {
      auto ns = nat_set(out.retract_models[i], out.retract_models[j]);
      ns.build_index();
      for (std::size_t k = 0; k < ns.size(); ++k)
        r_morphisms.push_back({tuple_name({r_objects[i], r_objects[j], std::to_string(k)}), r_objects[i], r_objects[j]});
      homs[i].push_back(std::move(ns));
    }
  auto r_name = [&](int i, int j, int k) { return tuple_name({r_objects[i], r_objects[j], std::to_string(k)}); };
  for (int i = 0; i < nr; ++i)
    r_ids.push_back({r_objects[i], r_name(i, i, homs[i][i].index_of(identity_components(out.retract_models[i])))});
  std::vector<std::pair<std::pair<std::string, std::string>, std::string>> r_table;
  for (int i = 0; i < nr; ++i)
    for (int j = 0; j < nr; ++j)
      for (int k = 0; k < nr; ++k)
        for (std::size_t f = 0; f < homs[i][j].size(); ++f)
          for (std::size_t g = 0; g < homs[j][k].size(); ++g) {
            const int gf = homs[i][k].index_of(compose_components(homs[j][k].members[g], homs[i][j].members[f]));
            r_table.push_back({{r_name(j, k, static_cast<int>(g)), r_name(i, j, static_cast<int>(f))}, r_name(i, k, gf)});
          }
  auto rc = std::make_shared<const FinCat>(FinCat::make(r_objects, r_morphisms, r_ids, r_table));

  // Q → R: the splitting of p goes to the retract class of its image, f to postcomposition.
  std::vector<SetFunctor> images;
  std::vector<Components> to_model;
  std::vector<int> f_objects;
  for (int p = 0; p < n; ++p) {
    const int e = out.idempotents[p];
    const int c = b.src(e);
    images.push_back(image_presheaf(b, shape, c, [&](int d, int i) { return b.compose(e, b.hom(d, c)[i]) == b.hom(d, c)[i]; }));
    int found = -1;
    for (int j = 0; j < nr && found < 0; ++j)
      if (auto iso = find_iso(images.back(), out.retract_models[j])) {
        found = j;
        to_model.push_back(*iso);
      }
    if (found < 0) throw InternalError("split idempotent is not a retract of a representable");
    f_objects.push_back(found);
  }
  std::vector<int> f_morphisms;
  for (int m = 0; m < qc.num_morphisms(); ++m) {
    const int p = qc.src(m);
    const int q = qc.tgt(m);
    const int f = base_of.at(qc.morphism_name(m));
    // h ↦ f ∘ h between the images, read through the model isomorphisms.
    const auto& ip = images[p];
    const auto& iq = images[q];
    Components post(b.num_objects());
    for (int d = 0; d < b.num_objects(); ++d)
      for (const auto& hn : ip.elements[d]) {
        const int h = *b.find_morphism(hn);
        const auto& names_q = iq.elements[d];
        const auto it = std::find(names_q.begin(), names_q.end(), b.morphism_name(b.compose(f, h)));
        if (it == names_q.end()) throw InternalError("postcomposition leaves the image");
        post[d].push_back(static_cast<int>(it - names_q.begin()));
      }
    const auto moved = compose_components(to_model[q], compose_components(post, invert_components(to_model[p])));
    const int k = homs[f_objects[p]][f_objects[q]].index_of(moved);
    if (k < 0) throw InternalError("transported morphism is not natural");
    f_morphisms.push_back(*rc->find_morphism(r_name(f_objects[p], f_objects[q], k)));
  }
  out.retracts = certify_equivalence(Functor::make(out.category, rc, f_objects, f_morphisms));
  return out;
}

SetFunctor isbell_o(const CatPtr& b, const SetFunctor& phi) { return o_transform(b, phi).functor; }

SetFunctor isbell_spec(const CatPtr& b, const SetFunctor& psi) { return spec_transform(b, psi).functor; }

Components isbell_unit(const CatPtr& b, const SetFunctor& phi) {
  const auto o = o_transform(b, phi);
  const auto s = spec_transform(b, o.functor);
  Components unit(b->num_objects());
  for (int d = 0; d < b->num_objects(); ++d)
    for (int x = 0; x < phi.size(d); ++x) {
      Components ev(b->num_objects());
      for (int c = 0; c < b->num_objects(); ++c)
        for (const auto& alpha : o.sets[c].members) ev[c].push_back(alpha[d][x]);
      const int i = s.sets[d].index_of(ev);
      if (i < 0) throw InternalError("evaluation is not natural");
      unit[d].push_back(i);
    }
  return unit;
}

Components isbell_counit(const CatPtr& b, const SetFunctor& psi) {
  const auto s = spec_transform(b, psi);
  const auto o = o_transform(b, s.functor);
  Components counit(b->num_objects());
  for (int c = 0; c < b->num_objects(); ++c)
    for (int y = 0; y < psi.size(c); ++y) {
      Components ev(b->num_objects());
      for (int d = 0; d < b->num_objects(); ++d)
        for (const auto& alpha : s.sets[d].members) ev[d].push_back(alpha[c][y]);
      const int i = o.sets[c].index_of(ev);
      if (i < 0) throw InternalError("evaluation is not natural");
      counit[c].push_back(i);
    }
  return counit;
}

IsbellReport isbell_adjunction_check(const CatPtr& b, const std::vector<SetFunctor>& presheaves,
                                     const std::vector<SetFunctor>& copresheaves) {
  IsbellReport r;
  const int n = b->num_objects();
  std::vector<Transform> os, specs;
  for (const auto& phi : presheaves) os.push_back(o_transform(b, phi));
  for (const auto& psi : copresheaves) specs.push_back(spec_transform(b, psi));
  for (std::size_t i = 0; i < presheaves.size(); ++i)
    for (std::size_t j = 0; j < copresheaves.size(); ++j) {
      const auto& phi = presheaves[i];
      const auto& psi = copresheaves[j];
      const auto& o = os[i];
      const auto& s = specs[j];
      const auto lhs = nat_set(phi, s.functor);
      auto rhs = nat_set(psi, o.functor);
      rhs.build_index();
      std::vector<char> hit(rhs.size(), 0);
      for (const auto& alpha : lhs.members) {
        Components beta(n);
        for (int c = 0; c < n; ++c)
          for (int y = 0; y < psi.size(c); ++y) {
            Components fam(n);
            for (int d = 0; d < n; ++d)
              for (int x = 0; x < phi.size(d); ++x) fam[d].push_back(s.sets[d].members[alpha[d][x]][c][y]);
            beta[c].push_back(o.sets[c].index_of(fam));
          }
        const int k = rhs.index_of(beta);
        if (k < 0 || hit[k]) {
          r.ok = false;
          r.failure = "transpose is not a bijection for presheaf #" + std::to_string(i) + " and copresheaf #" +
                      std::to_string(j);
          return r;
        }
        hit[k] = 1;
      }
      if (lhs.size() != rhs.size()) {
        r.ok = false;
        r.failure = "hom-set sizes differ for presheaf #" + std::to_string(i) + " and copresheaf #" + std::to_string(j) +
                    ": " + std::to_string(lhs.size()) + " vs " + std::to_string(rhs.size());
        return r;
      }
      ++r.pairs;
    }
  for (std::size_t i = 0; i < presheaves.size(); ++i) {
    if (!is_small_projective(presheaves[i]).projective) continue;
    ++r.projective_presheaves;
    const auto twice = isbell_spec(b, os[i].functor);
    if (!is_bijective(presheaves[i], twice, isbell_unit(b, presheaves[i]))) {
      r.ok = false;
      r.failure = "unit is not invertible at small-projective presheaf #" + std::to_string(i);
      return r;
    }
  }
  for (std::size_t j = 0; j < copresheaves.size(); ++j) {
    if (!is_small_projective(copresheaves[j]).projective) continue;
    ++r.projective_copresheaves;
    const auto twice = isbell_o(b, specs[j].functor);
    if (!is_bijective(copresheaves[j], twice, isbell_counit(b, copresheaves[j]))) {
      r.ok = false;
      r.failure = "counit is not invertible at small-projective copresheaf #" + std::to_string(j);
      return r;
    }
  }
  return r;
}

std::vector<SetFunctor> default_isbell_grid(const CatPtr& c) {
  std::vector<SetFunctor> out;
  for (auto r : yoneda(opposite(c)).representables) {
    r.source = c;
    out.push_back(std::move(r));
  }
  for (auto& f : all_set_functors(c, 4, 0, 4)) out.push_back(std::move(f));
  return out;
}

}  // namespace kanweigh
