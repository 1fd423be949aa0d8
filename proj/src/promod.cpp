#include "kanweigh/promod.hpp"

#include <array>
#include <numeric>

#include "kanweigh/error.hpp"

namespace kanweigh {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a < b) parent[b] = a;
    else if (b < a) parent[a] = b;
  }
};

// A module whose elements are nat-sets, kept so members can be located.
struct NatModule {
  Module module;
  std::vector<NatSet> sets;
};

CatPtr discrete(int n) {
  std::vector<std::string> objects;
  std::vector<MorphismSpec> morphisms;
  std::vector<std::pair<std::string, std::string>> ids;
  for (int i = 0; i < n; ++i) {
    objects.push_back(std::to_string(i));
    morphisms.push_back({"id_" + std::to_string(i), objects.back(), objects.back()});
    ids.push_back({objects.back(), morphisms.back().name});
  }
  return std::make_shared<const FinCat>(FinCat::make(objects, morphisms, ids, {}));
}

void require_same(const CatPtr& x, const CatPtr& y, const std::string& what) {
  if (!(*x == *y)) throw InvalidInput({what});
}

NatModule rext_full(const Module& f, const Module& h) {
  require_same(f.source, h.source, "right extension: modules have different sources");
  const auto& a = *f.source;
  const auto& b = *f.target;
  const auto& c = *h.target;
  auto shape = module_shape(f.target, h.target);
  NatModule out{Module{f.target, h.target, SetFunctor{shape, {}, {}}}, {}};
  for (int ci = 0; ci < c.num_objects(); ++ci)
    for (int bi = 0; bi < b.num_objects(); ++bi) {
      auto fb = slice_left(f.carrier, bi);
      auto hc = slice_left(h.carrier, ci);
      hc.source = fb.source;
      auto ns = nat_set(fb, hc);
      ns.build_index();
      std::vector<std::string> names;
      for (const auto& m : ns.members) names.push_back(describe_components(fb, hc, m));
      out.module.carrier.elements.push_back(std::move(names));
      out.sets.push_back(std::move(ns));
    }
  for (int w = 0; w < c.num_morphisms(); ++w)
    for (int u = 0; u < b.num_morphisms(); ++u) {
      const int from = shape->pair_object(c.tgt(w), b.src(u));
      const int to = shape->pair_object(c.src(w), b.tgt(u));
      Table tab;
      for (const auto& alpha : out.sets[from].members) {
        Components moved(a.num_objects());
        for (int ai = 0; ai < a.num_objects(); ++ai) {
          const int ida = a.identity(ai);
          for (int x = 0; x < f.carrier.size(f.at(b.tgt(u), ai)); ++x)
            moved[ai].push_back(h.act(w, ida, alpha[ai][f.act(u, ida, x)]));
        }
        const int i = out.sets[to].index_of(moved);
        if (i < 0) throw InternalError("right extension action leaves the nat-set");
        tab.push_back(i);
      }
      out.module.carrier.action.push_back(std::move(tab));
    }
  return out;
}

NatModule rlift_full(const Module& g, const Module& h) {
  require_same(g.target, h.target, "right lifting: modules have different targets");
  const auto& a = *h.source;
  const auto& b = *g.source;
  const auto& c = *g.target;
  auto shape = module_shape(h.source, g.source);
  NatModule out{Module{h.source, g.source, SetFunctor{shape, {}, {}}}, {}};
  for (int bi = 0; bi < b.num_objects(); ++bi)
    for (int ai = 0; ai < a.num_objects(); ++ai) {
      auto gb = slice_right(g.carrier, bi);
      auto ha = slice_right(h.carrier, ai);
      ha.source = gb.source;
      auto ns = nat_set(gb, ha);
      ns.build_index();
      std::vector<std::string> names;
      for (const auto& m : ns.members) names.push_back(describe_components(gb, ha, m));
      out.module.carrier.elements.push_back(std::move(names));
      out.sets.push_back(std::move(ns));
    }
  // (u, v) with u : b' → b in B and v : a → a' in A sends α to h(−,v) α g(−,u).
  for (int u = 0; u < b.num_morphisms(); ++u)
    for (int v = 0; v < a.num_morphisms(); ++v) {
      const int from = shape->pair_object(b.tgt(u), a.src(v));
      const int to = shape->pair_object(b.src(u), a.tgt(v));
      Table tab;
      for (const auto& alpha : out.sets[from].members) {
        Components moved(c.num_objects());
        for (int ci = 0; ci < c.num_objects(); ++ci) {
          const int idc = c.identity(ci);
          for (int y = 0; y < g.carrier.size(g.at(ci, b.src(u))); ++y)
            moved[ci].push_back(h.act(idc, v, alpha[ci][g.act(idc, u, y)]));
        }
        const int i = out.sets[to].index_of(moved);
        if (i < 0) throw InternalError("right lifting action leaves the nat-set");
        tab.push_back(i);
      }
      out.module.carrier.action.push_back(std::move(tab));
    }
  return out;
}

struct Composites {
  ModuleComposite gf;  // g ∘ f : A ⇸ A
  ModuleComposite fg;  // f ∘ g : B ⇸ B
};

AdjunctionCheck check_with(const Module& f, const Module& g, const Composites& k, const Components& unit,
                           const Components& counit) {
  AdjunctionCheck out;
  const auto& a = *f.source;
  const auto& b = *f.target;
  const auto one_a = hom_module(f.source);
  const auto one_b = hom_module(f.target);
  if (auto v = naturality_violations(one_a.carrier, k.gf.module.carrier, unit); !v.empty()) {
    out.failure = "unit is not a module morphism: " + v.front();
    return out;
  }
  if (auto v = naturality_violations(k.fg.module.carrier, one_b.carrier, counit); !v.empty()) {
    out.failure = "counit is not a module morphism: " + v.front();
    return out;
  }
  for (int ai = 0; ai < a.num_objects(); ++ai) {
    const int diag = k.gf.module.at(ai, ai);
    const int cls = unit[diag][a.hom_position(a.identity(ai))];
    const auto [bp, y0, z0] = k.gf.representatives[diag][cls];
    for (int bi = 0; bi < b.num_objects(); ++bi)
      for (int x = 0; x < f.carrier.size(f.at(bi, ai)); ++x) {
        const int e = k.fg.locate(bi, bp, ai, x, y0);
        const int w = b.hom(bi, bp)[counit[k.fg.module.at(bi, bp)][e]];
        if (f.act(w, a.identity(ai), z0) != x) {
          out.failure = "triangle for the left adjoint fails at (" + b.object_name(bi) + "," + a.object_name(ai) +
                        ") on '" + f.set(bi, ai)[x] + "'";
          return out;
        }
      }
    for (int bi = 0; bi < b.num_objects(); ++bi)
      for (int y = 0; y < g.carrier.size(g.at(ai, bi)); ++y) {
        const int e = k.fg.locate(bp, bi, ai, z0, y);
        const int w = b.hom(bp, bi)[counit[k.fg.module.at(bp, bi)][e]];
        if (g.act(a.identity(ai), w, y0) != y) {
          out.failure = "triangle for the right adjoint fails at (" + a.object_name(ai) + "," + b.object_name(bi) +
                        ") on '" + g.set(ai, bi)[y] + "'";
          return out;
        }
      }
  }
  out.ok = true;
  return out;
}

}  // namespace

CatPtr module_shape(const CatPtr& a, const CatPtr& b) { return product(opposite(b), a); }

std::vector<std::string> Module::law_violations() const {
  if (!carrier.source->is_product() || !(*carrier.source->left_factor() == *opposite(target)) ||
      !(*carrier.source->right_factor() == *source))
    return {"module carrier must live on product(opposite(target), source)"};
  return carrier.law_violations();
}

Module Module::make(CatPtr source, CatPtr target, SetFunctor carrier) {
  Module m{std::move(source), std::move(target), std::move(carrier)};
  auto v = m.law_violations();
  if (!v.empty()) throw InvalidInput(v);
  return m;
}

Module hom_module(const CatPtr& a) {
  const auto& c = *a;
  auto shape = module_shape(a, a);
  Module m{a, a, SetFunctor{shape, {}, {}}};
  for (int x = 0; x < c.num_objects(); ++x)
    for (int y = 0; y < c.num_objects(); ++y) {
      std::vector<std::string> names;
      for (int h : c.hom(x, y)) names.push_back(c.morphism_name(h));
      m.carrier.elements.push_back(std::move(names));
    }
  for (int u = 0; u < c.num_morphisms(); ++u)
    for (int v = 0; v < c.num_morphisms(); ++v) {
      Table tab;
      for (int h : c.hom(c.tgt(u), c.src(v))) tab.push_back(c.hom_position(c.compose(v, c.compose(h, u))));
      m.carrier.action.push_back(std::move(tab));
    }
  return m;
}

int ModuleComposite::locate(int c, int a, int b, int y, int z) const {
  const int o = module.at(c, a);
  return class_of[o][offset[o][b] + y * block_width[o][b] + z];
}

ModuleComposite compose_modules(const Module& g, const Module& f) {
  require_same(g.source, f.target, "module composite: middle categories differ");
  const auto& a = *f.source;
  const auto& b = *f.target;
  const auto& c = *g.target;
  auto shape = module_shape(f.source, g.target);
  ModuleComposite out{Module{f.source, g.target, SetFunctor{shape, {}, {}}}, {}, {}, {}, {}};
  const int no = shape->num_objects();
  out.class_of.resize(no);
  out.offset.resize(no);
  out.block_width.resize(no);
  out.representatives.resize(no);
  out.module.carrier.elements.resize(no);
  CandidateBudget budget("module composite");
  for (int ci = 0; ci < c.num_objects(); ++ci)
    for (int ai = 0; ai < a.num_objects(); ++ai) {
      const int o = shape->pair_object(ci, ai);
      std::vector<std::array<int, 3>> points;
      for (int bi = 0; bi < b.num_objects(); ++bi) {
        out.offset[o].push_back(static_cast<int>(points.size()));
        const int zn = f.carrier.size(f.at(bi, ai));
        out.block_width[o].push_back(zn);
        for (int y = 0; y < g.carrier.size(g.at(ci, bi)); ++y)
          for (int z = 0; z < zn; ++z) points.push_back({bi, y, z});
      }
      budget.charge(points.size());
      UnionFind uf(static_cast<int>(points.size()));
      const int idc = c.identity(ci);
      const int ida = a.identity(ai);
      for (int u = 0; u < b.num_morphisms(); ++u) {
        const int b0 = b.src(u);
        const int b1 = b.tgt(u);
        for (int y = 0; y < g.carrier.size(g.at(ci, b0)); ++y)
          for (int z = 0; z < f.carrier.size(f.at(b1, ai)); ++z) {
            const int lhs = out.offset[o][b1] + g.act(idc, u, y) * out.block_width[o][b1] + z;
            const int rhs = out.offset[o][b0] + y * out.block_width[o][b0] + f.act(u, ida, z);
            uf.unite(lhs, rhs);
          }
      }
      std::vector<int> cls(points.size(), -1);
      for (std::size_t p = 0; p < points.size(); ++p) {
        if (uf.find(static_cast<int>(p)) != static_cast<int>(p)) continue;
        cls[p] = static_cast<int>(out.representatives[o].size());
        out.representatives[o].push_back(points[p]);
        const auto [bi, y, z] = points[p];
        out.module.carrier.elements[o].push_back(
            tuple_name({b.object_name(bi), g.set(ci, bi)[y], f.set(bi, ai)[z]}));
      }
      for (std::size_t p = 0; p < points.size(); ++p) out.class_of[o].push_back(cls[uf.find(static_cast<int>(p))]);
    }
  for (int w = 0; w < c.num_morphisms(); ++w)
    for (int v = 0; v < a.num_morphisms(); ++v) {
      const int from = shape->pair_object(c.tgt(w), a.src(v));
      const int to = shape->pair_object(c.src(w), a.tgt(v));
      Table tab;
      for (const auto& [bi, y, z] : out.representatives[from]) {
        const int idb = b.identity(bi);
        tab.push_back(out.class_of[to][out.offset[to][bi] + g.act(w, idb, y) * out.block_width[to][bi] +
                                       f.act(idb, v, z)]);
      }
      out.module.carrier.action.push_back(std::move(tab));
    }
  if (auto v = out.module.carrier.law_violations(); !v.empty())
    throw InternalError("module composite is not bifunctorial: " + v.front());
  return out;
}

Module rext(const Module& f, const Module& h) { return rext_full(f, h).module; }

Module rlift(const Module& g, const Module& h) { return rlift_full(g, h).module; }

std::pair<Module, Module> functor_modules(const Functor& t) {
  const auto& a = *t.source;
  const auto& b = *t.target;
  auto lower_shape = module_shape(t.source, t.target);
  Module lower{t.source, t.target, SetFunctor{lower_shape, {}, {}}};
  for (int bi = 0; bi < b.num_objects(); ++bi)
    for (int ai = 0; ai < a.num_objects(); ++ai) {
      std::vector<std::string> names;
      for (int h : b.hom(bi, t.on_objects[ai])) names.push_back(b.morphism_name(h));
      lower.carrier.elements.push_back(std::move(names));
    }
  for (int u = 0; u < b.num_morphisms(); ++u)
    for (int v = 0; v < a.num_morphisms(); ++v) {
      Table tab;
      for (int h : b.hom(b.tgt(u), t.on_objects[a.src(v)]))
        tab.push_back(b.hom_position(b.compose(t.on_morphisms[v], b.compose(h, u))));
      lower.carrier.action.push_back(std::move(tab));
    }
  auto upper_shape = module_shape(t.target, t.source);
  Module upper{t.target, t.source, SetFunctor{upper_shape, {}, {}}};
  for (int ai = 0; ai < a.num_objects(); ++ai)
    for (int bi = 0; bi < b.num_objects(); ++bi) {
      std::vector<std::string> names;
      for (int h : b.hom(t.on_objects[ai], bi)) names.push_back(b.morphism_name(h));
      upper.carrier.elements.push_back(std::move(names));
    }
  for (int u = 0; u < a.num_morphisms(); ++u)
    for (int v = 0; v < b.num_morphisms(); ++v) {
      Table tab;
      for (int h : b.hom(t.on_objects[a.tgt(u)], b.src(v)))
        tab.push_back(b.hom_position(b.compose(v, b.compose(h, t.on_morphisms[u]))));
      upper.carrier.action.push_back(std::move(tab));
    }
  return {lower, upper};
}

std::pair<Components, Components> induced_morphisms(const Functor& t, const Functor& s, const std::vector<int>& rho) {
  const auto& a = *t.source;
  const auto& b = *t.target;
  Components lower;
  for (int bi = 0; bi < b.num_objects(); ++bi)
    for (int ai = 0; ai < a.num_objects(); ++ai) {
      Table tab;
      for (int h : b.hom(bi, t.on_objects[ai])) tab.push_back(b.hom_position(b.compose(rho[ai], h)));
      lower.push_back(std::move(tab));
    }
  Components upper;
  for (int ai = 0; ai < a.num_objects(); ++ai)
    for (int bi = 0; bi < b.num_objects(); ++bi) {
      Table tab;
      for (int h : b.hom(s.on_objects[ai], bi)) tab.push_back(b.hom_position(b.compose(h, rho[ai])));
      upper.push_back(std::move(tab));
    }
  return {lower, upper};
}

std::optional<Components> module_iso(const Module& m, const Module& n) {
  if (!(*m.source == *n.source) || !(*m.target == *n.target)) return std::nullopt;
  return find_iso(m.carrier, n.carrier);
}

NatSet module_morphisms(const Module& m, const Module& n) { return nat_set(m.carrier, n.carrier); }

MateReport mate_bijections(const Module& g, const Module& f, const Module& h) {
  const auto gf = compose_modules(g, f);
  const auto ext = rext_full(f, h);
  const auto lift = rlift_full(g, h);
  auto m0 = nat_set(gf.module.carrier, h.carrier);
  auto m1 = nat_set(g.carrier, ext.module.carrier);
  auto m2 = nat_set(f.carrier, lift.module.carrier);
  m1.build_index();
  m2.build_index();
  MateReport r{m0.size(), m1.size(), m2.size(), false, {}};
  const auto& a = *f.source;
  const auto& b = *f.target;
  const auto& c = *g.target;
  std::vector<char> hit1(m1.size(), 0), hit2(m2.size(), 0);
  for (const auto& theta : m0.members) {
    // Transpose into g → [[f,h]].
    Components t1(g.carrier.source->num_objects());
    for (int ci = 0; ci < c.num_objects(); ++ci)
      for (int bi = 0; bi < b.num_objects(); ++bi)
        for (int y = 0; y < g.carrier.size(g.at(ci, bi)); ++y) {
          Components alpha(a.num_objects());
          for (int ai = 0; ai < a.num_objects(); ++ai)
            for (int z = 0; z < f.carrier.size(f.at(bi, ai)); ++z)
              alpha[ai].push_back(theta[gf.module.at(ci, ai)][gf.locate(ci, ai, bi, y, z)]);
          const int i = ext.sets[ext.module.at(ci, bi)].index_of(alpha);
          if (i < 0) {
            r.failure = "pasting into the right extension is not natural";
            return r;
          }
          t1[g.at(ci, bi)].push_back(i);
        }
    // Transpose into f → {|g,h|}.
    Components t2(f.carrier.source->num_objects());
    for (int bi = 0; bi < b.num_objects(); ++bi)
      for (int ai = 0; ai < a.num_objects(); ++ai)
        for (int z = 0; z < f.carrier.size(f.at(bi, ai)); ++z) {
          Components alpha(c.num_objects());
          for (int ci = 0; ci < c.num_objects(); ++ci)
            for (int y = 0; y < g.carrier.size(g.at(ci, bi)); ++y)
              alpha[ci].push_back(theta[gf.module.at(ci, ai)][gf.locate(ci, ai, bi, y, z)]);
          const int i = lift.sets[lift.module.at(bi, ai)].index_of(alpha);
          if (i < 0) {
            r.failure = "pasting into the right lifting is not natural";
            return r;
          }
          t2[f.at(bi, ai)].push_back(i);
        }
    const int i1 = m1.index_of(t1);
    const int i2 = m2.index_of(t2);
    if (i1 < 0 || i2 < 0) {
      r.failure = "a pasted transpose is not a module morphism";
      return r;
    }
    if (hit1[i1] || hit2[i2]) {
      r.failure = "pasting is not injective";
      return r;
    }
    hit1[i1] = hit2[i2] = 1;
  }
  if (r.composite != r.extension || r.composite != r.lifting) {
    r.failure = "pasting is not surjective";
    return r;
  }
  r.bijective = true;
  return r;
}

AdjunctionCheck check_adjunction(const Module& f, const Module& g, const Components& unit, const Components& counit) {
  if (!(*f.source == *g.target) || !(*f.target == *g.source))
    throw InvalidInput({"adjunction check: modules do not form a pair A ⇸ B, B ⇸ A"});
  Composites k{compose_modules(g, f), compose_modules(f, g)};
  return check_with(f, g, k, unit, counit);
}

std::optional<CocontinuityRefutation> cocontinuity_refutation(const SetFunctor& phi) {
  const auto x = phi.source;
  HomFrom hom(phi);
  auto pair = discrete(2);
  auto none = discrete(0);
  auto one = terminal_functor(x);

  auto empty_colim = weighted_colimit(Weight{SetFunctor{none, {}, {}}, Variance::colimit},
                                      Diagram{opposite(none), x, {}, {}});
  auto v = preserves(hom, empty_colim);
  if (!v.invertible) return CocontinuityRefutation{-1, "empty colimit", v};

  auto coproduct = weighted_colimit(Weight{terminal_functor(pair), Variance::colimit},
                                    Diagram{opposite(pair), x, {one, one},
                                            {identity_components(one), identity_components(one)}});
  v = preserves(hom, coproduct);
  if (!v.invertible) return CocontinuityRefutation{-1, "binary coproduct 1 ⊔ 1", v};

  auto y = yoneda(opposite(x));
  for (auto& r : y.representables) r.source = x;
  y.opposite_category = x;
  auto self = weighted_colimit(Weight{phi, Variance::colimit}, yoneda_diagram(y));
  v = preserves(hom, self);
  if (!v.invertible) return CocontinuityRefutation{-1, "the presheaf as a colimit of representables", v};
  return std::nullopt;
}

RightAdjointVerdict has_right_adjoint(const Module& f) {
  const auto& a = *f.source;
  const auto& b = *f.target;
  const auto one_b = hom_module(f.target);
  auto t = rlift_full(f, one_b);

  // t(a,b) must agree with Nat(f(−,a), Yb).
  const auto y = yoneda(f.target);
  for (int ai = 0; ai < a.num_objects(); ++ai) {
    auto fa = slice_right(f.carrier, ai);
    for (int bi = 0; bi < b.num_objects(); ++bi) {
      auto rep = y.representables[bi];
      rep.source = fa.source;
      if (nat_set(fa, rep).size() != t.sets[t.module.at(ai, bi)].size())
        throw InternalError("lifting through the hom module disagrees with maps into representables");
    }
  }

  const auto tf = compose_modules(t.module, f);
  const auto ff = rlift_full(f, f);
  RightAdjointVerdict out;
  // κ : t f → {|f, f|}, [(b, τ, x)] ↦ (y ↦ f(τ(y), id_a)(x)).
  Components kappa(tf.module.carrier.source->num_objects());
  for (int a1 = 0; a1 < a.num_objects() && out.respect_failure.empty(); ++a1)
    for (int a0 = 0; a0 < a.num_objects() && out.respect_failure.empty(); ++a0) {
      const int o = tf.module.at(a1, a0);
      std::vector<char> hit(ff.sets[ff.module.at(a1, a0)].size(), 0);
      for (const auto& [bi, tau_i, x] : tf.representatives[o]) {
        const auto& tau = t.sets[t.module.at(a1, bi)].members[tau_i];
        Components alpha(b.num_objects());
        for (int b2 = 0; b2 < b.num_objects(); ++b2)
          for (int yy = 0; yy < f.carrier.size(f.at(b2, a1)); ++yy) {
            const int w = b.hom(b2, bi)[tau[b2][yy]];
            alpha[b2].push_back(f.act(w, a.identity(a0), x));
          }
        const int i = ff.sets[ff.module.at(a1, a0)].index_of(alpha);
        if (i < 0) throw InternalError("comparison into the lifting is not natural");
        if (hit[i]) {
          out.respect_failure = "comparison is not injective at (" + a.object_name(a1) + "," + a.object_name(a0) + ")";
          break;
        }
        hit[i] = 1;
        kappa[o].push_back(i);
      }
      if (out.respect_failure.empty() && kappa[o].size() != hit.size())
        out.respect_failure = "comparison is not surjective at (" + a.object_name(a1) + "," + a.object_name(a0) + ")";
    }

  if (!out.respect_failure.empty()) {
    for (int ai = 0; ai < a.num_objects(); ++ai) {
      auto fa = slice_right(f.carrier, ai);
      if (auto r = cocontinuity_refutation(fa)) {
        r->object = ai;
        out.refutation = r;
        return out;
      }
    }
    throw InternalError("respect check failed but every cocontinuity probe passed");
  }

  const auto kappa_inv = invert_components(kappa);
  const auto one_a = hom_module(f.source);
  Components unit(one_a.carrier.source->num_objects());
  for (int a1 = 0; a1 < a.num_objects(); ++a1)
    for (int a0 = 0; a0 < a.num_objects(); ++a0)
      for (int u : a.hom(a1, a0)) {
        Components fu(b.num_objects());
        for (int bi = 0; bi < b.num_objects(); ++bi)
          for (int x = 0; x < f.carrier.size(f.at(bi, a1)); ++x) fu[bi].push_back(f.act(b.identity(bi), u, x));
        const int i = ff.sets[ff.module.at(a1, a0)].index_of(fu);
        if (i < 0) throw InternalError("f(−,u) is not natural");
        unit[one_a.at(a1, a0)].push_back(kappa_inv[tf.module.at(a1, a0)][i]);
      }
  auto ft = compose_modules(f, t.module);
  Components counit(ft.module.carrier.source->num_objects());
  for (int b1 = 0; b1 < b.num_objects(); ++b1)
    for (int b0 = 0; b0 < b.num_objects(); ++b0)
      for (const auto& [ai, x, tau_i] : ft.representatives[ft.module.at(b1, b0)]) {
        const auto& tau = t.sets[t.module.at(ai, b0)].members[tau_i];
        counit[ft.module.at(b1, b0)].push_back(tau[b1][x]);
      }
  Composites k{tf, ft};
  auto check = check_with(f, t.module, k, unit, counit);
  if (!check.ok) throw InternalError("computed unit and counit fail: " + check.failure);
  out.exists = true;
  out.certificate = AdjunctionCertificate{f, t.module, unit, counit, true, true};
  return out;
}

std::optional<AdjunctionCertificate> search_adjunction(const Module& f, const Module& g) {
  if (!(*f.source == *g.target) || !(*f.target == *g.source))
    throw InvalidInput({"adjunction search: modules do not form a pair A ⇸ B, B ⇸ A"});
  Composites k{compose_modules(g, f), compose_modules(f, g)};
  const auto units = nat_set(hom_module(f.source).carrier, k.gf.module.carrier);
  const auto counits = nat_set(k.fg.module.carrier, hom_module(f.target).carrier);
  check_space(static_cast<long double>(units.size()) * counits.size(), "adjunction search");
  for (const auto& e : units.members)
    for (const auto& c : counits.members)
      if (check_with(f, g, k, e, c).ok) return AdjunctionCertificate{f, g, e, c, true, true};
  return std::nullopt;
}

Module dual_module(const Module& f) {
  auto src = opposite(f.target);
  auto tgt = opposite(f.source);
  auto shape = module_shape(src, tgt);
  const auto& p = *f.carrier.source;
  Module d{src, tgt, SetFunctor{shape, {}, {}}};
  const int na = f.source->num_objects();
  const int nb = f.target->num_objects();
  for (int ai = 0; ai < na; ++ai)
    for (int bi = 0; bi < nb; ++bi) d.carrier.elements.push_back(f.carrier.elements[p.pair_object(bi, ai)]);
  for (int u = 0; u < f.source->num_morphisms(); ++u)
    for (int v = 0; v < f.target->num_morphisms(); ++v) d.carrier.action.push_back(f.carrier.action[p.pair_morphism(v, u)]);
  return d;
}

RightAdjointVerdict has_left_adjoint(const Module& g) { return has_right_adjoint(dual_module(g)); }

Module presheaf_module(const SetFunctor& phi) {
  auto b = opposite(phi.source);
  Module m{unit_category(), b, SetFunctor{module_shape(unit_category(), b), phi.elements, phi.action}};
  return m;
}

Module copresheaf_module(const SetFunctor& psi) {
  Module m{psi.source, unit_category(), SetFunctor{module_shape(psi.source, unit_category()), psi.elements, psi.action}};
  return m;
}

}  // namespace kanweigh
