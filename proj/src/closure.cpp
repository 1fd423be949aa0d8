#include "kanweigh/closure.hpp"

#include <functional>
#include <map>

#include "kanweigh/error.hpp"

namespace kanweigh {

namespace {

std::vector<int> sizes_of(const SetFunctor& f) {
  std::vector<int> out;
  for (const auto& e : f.elements) out.push_back(static_cast<int>(e.size()));
  return out;
}

// Every functor `shape` → presheaves whose values are among the first `known` elements.
void for_each_diagram(const CatPtr& shape, const std::vector<ClosureElement>& elements, int known,
                      CandidateBudget& budget,
                      const std::function<void(const std::vector<int>&, const std::vector<Components>&)>& visit) {
  const auto& c = *shape;
  const int n = c.num_objects();
  const int nm = c.num_morphisms();
  std::map<std::pair<int, int>, NatSet> homs;
  auto hom = [&](int i, int j) -> const NatSet& {
    auto it = homs.find({i, j});
    if (it == homs.end()) it = homs.emplace(std::pair{i, j}, nat_set(elements[i].presheaf, elements[j].presheaf)).first;
    return it->second;
  };
  std::vector<int> free;
  for (int m = 0; m < nm; ++m)
    if (!c.is_identity(m)) free.push_back(m);

  std::vector<int> values(n, 0);
  if (n > 0 && known == 0) return;
  while (true) {
    budget.charge();
    std::vector<Components> along(nm);
    std::vector<char> assigned(nm, 0);
    for (int o = 0; o < n; ++o) {
      along[c.identity(o)] = identity_components(elements[values[o]].presheaf);
      assigned[c.identity(o)] = 1;
    }
    auto consistent = [&](int m) {
      for (int g = 0; g < nm; ++g) {
        if (!assigned[g]) continue;
        for (int h = 0; h < nm; ++h) {
          if (!assigned[h]) continue;
          const int gh = c.compose(g, h);
          if (gh < 0 || !assigned[gh]) continue;
          if (g != m && h != m && gh != m) continue;
          if (compose_components(along[g], along[h]) != along[gh]) return false;
        }
      }
      return true;
    };
    std::function<void(std::size_t)> go = [&](std::size_t i) {
      if (i == free.size()) {
        visit(values, along);
        return;
      }
      const int m = free[i];
      for (const auto& t : hom(values[c.src(m)], values[c.tgt(m)]).members) {
        budget.charge();
        along[m] = t;
        assigned[m] = 1;
        if (consistent(m)) go(i + 1);
        assigned[m] = 0;
      }
    };
    go(0);
    int k = n - 1;
    while (k >= 0 && ++values[k] == known) values[k--] = 0;
    if (k < 0) break;
  }
}

void require_weights(const WeightClass& phi) {
  std::vector<std::string> v;
  for (std::size_t i = 0; i < phi.size(); ++i) {
    if (phi[i].variance != Variance::colimit) v.push_back("weight #" + std::to_string(i) + " is not a colimit weight");
    for (const auto& e : phi[i].functor.law_violations()) v.push_back("weight #" + std::to_string(i) + ": " + e);
  }
  if (!v.empty()) throw InvalidInput(v);
}

}  // namespace

ClosureResult closure_iterate(const WeightClass& phi, const CatPtr& b, int depth) {
  require_weights(phi);
  if (depth < 0) throw InvalidInput({"depth must be nonnegative"});
  ClosureResult r;
  r.category = b;
  r.depth = depth;
  const auto x = opposite(b);
  const auto y = yoneda(b);
  for (int o = 0; o < b->num_objects(); ++o) {
    ClosureElement e;
    e.presheaf = y.representables[o];
    e.presheaf.source = x;
    e.representable = o;
    r.elements.push_back(std::move(e));
  }
  CandidateBudget budget("closure");
  for (int s = 1; s <= depth; ++s) {
    const int known = static_cast<int>(r.elements.size());
    bool added = false;
    for (std::size_t w = 0; w < phi.size(); ++w) {
      const auto shape = opposite(phi[w].functor.source);
      for_each_diagram(shape, r.elements, known, budget, [&](const std::vector<int>& values, const std::vector<Components>& along) {
        Diagram d{shape, x, {}, along};
        for (int v : values) d.at.push_back(r.elements[v].presheaf);
        auto colim = weighted_colimit(phi[w], d).object;
        for (const auto& e : colim.elements) check_set_size(e.size(), "closure");
        const auto sz = sizes_of(colim);
        for (const auto& e : r.elements)
          if (sizes_of(e.presheaf) == sz && find_iso(e.presheaf, colim)) return;
        ClosureElement e;
        e.presheaf = std::move(colim);
        e.stage = s;
        e.weight = static_cast<int>(w);
        e.values = values;
        e.along = along;
        r.elements.push_back(std::move(e));
        added = true;
      });
    }
    r.stages = s;
    if (!added) {
      r.fixpoint = true;
      break;
    }
  }
  return r;
}

Diagram witness_diagram(const ClosureResult& r, const WeightClass& phi, int index) {
  const auto& e = r.elements.at(index);
  if (e.weight < 0) throw InvalidInput({"element is a representable and has no diagram"});
  Diagram d{opposite(phi.at(e.weight).functor.source), opposite(r.category), {}, e.along};
  for (int v : e.values) d.at.push_back(r.elements.at(v).presheaf);
  return d;
}

std::optional<Components> replay(const ClosureResult& r, const WeightClass& phi, int index) {
  const auto& e = r.elements.at(index);
  if (e.weight < 0) {
    auto rep = yoneda(r.category).representables.at(e.representable);
    rep.source = e.presheaf.source;
    return find_iso(rep, e.presheaf);
  }
  auto colim = weighted_colimit(phi.at(e.weight), witness_diagram(r, phi, index)).object;
  return find_iso(colim, e.presheaf);
}

MembershipVerdict saturation_member(const SetFunctor& psi, const WeightClass& phi, const CatPtr& b, int depth) {
  if (!(*psi.source == *opposite(b))) throw InvalidInput({"presheaf is not defined on the opposite of the category"});
  MembershipVerdict v;
  v.depth = depth;
  v.closure = closure_iterate(phi, b, depth);
  const auto sz = sizes_of(psi);
  for (std::size_t i = 0; i < v.closure.elements.size(); ++i) {
    const auto& e = v.closure.elements[i];
    if (sizes_of(e.presheaf) != sz) continue;
    if (auto iso = find_iso(psi, e.presheaf)) {
      v.member = true;
      v.element = static_cast<int>(i);
      v.stage = e.stage;
      v.iso = iso;
      break;
    }
  }
  if (!v.member) return v;
  std::vector<char> seen(v.closure.elements.size(), 0);
  std::function<void(int)> walk = [&](int i) {
    if (seen[i]) return;
    seen[i] = 1;
    for (int j : v.closure.elements[i].values) walk(j);
  };
  walk(v.element);
  for (std::size_t i = 0; i < seen.size(); ++i)
    if (seen[i]) v.chain.push_back(static_cast<int>(i));
  return v;
}

SetFunctor lan_extend(const Diagram& g, const SetFunctor& f) {
  if (!(*f.source == *opposite(g.shape))) throw InvalidInput({"presheaf is not defined on the opposite of the diagram shape"});
  return weighted_colimit(Weight{f, Variance::colimit}, g).object;
}

AtomVerdict atom_check(const SetFunctor& a, const std::vector<WeightedColimit>& instances) {
  AtomVerdict v;
  HomFrom hom(a);
  for (std::size_t i = 0; i < instances.size(); ++i) {
    auto c = preserves(hom, instances[i]);
    if (!c.invertible) {
      v.atom = false;
      v.failing.push_back(static_cast<int>(i));
    }
    v.verdicts.push_back(std::move(c));
  }
  return v;
}

std::optional<Reflection> find_reflection(const SetFunctor& p) {
  const auto b = opposite(p.source);
  const auto y = yoneda(b);
  auto reps = y.representables;
  for (auto& r : reps) r.source = p.source;
  std::vector<NatSet> into;
  for (const auto& r : reps) into.push_back(nat_set(p, r));
  for (int o = 0; o < b->num_objects(); ++o)
    for (const auto& eta : into[o].members) {
      bool universal = true;
      for (int o2 = 0; o2 < b->num_objects() && universal; ++o2)
        for (const auto& alpha : into[o2].members) {
          int hits = 0;
          for (int g : b->hom(o, o2))
            if (compose_components(y.on_morphisms[g], eta) == alpha) ++hits;
          if (hits != 1) {
            universal = false;
            break;
          }
        }
      if (universal) return Reflection{o, eta};
    }
  return std::nullopt;
}

}  // namespace kanweigh
