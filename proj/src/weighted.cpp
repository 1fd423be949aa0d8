#include "kanweigh/weighted.hpp"

#include <exception>
#include <map>

#include "kanweigh/error.hpp"

namespace kanweigh {

namespace {

std::vector<int> element_offsets(const SetFunctor& phi) {
  std::vector<int> off;
  int n = 0;
  for (int d = 0; d < phi.source->num_objects(); ++d) {
    off.push_back(n);
    n += phi.size(d);
  }
  return off;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidInput({what});
}

// d ↦ a nat-set indexed by position, with the induced action.
struct HomFamily {
  SetFunctor functor;
  std::vector<NatSet> sets;
};

std::string competitor_label(const SetFunctor& z) {
  std::string s = "competitor with set sizes (";
  for (int o = 0; o < z.source->num_objects(); ++o) s += (o ? "," : "") + std::to_string(z.size(o));
  return s + ")";
}

ComparisonVerdict bijection_verdict(std::vector<Table> map, const std::vector<int>& rhs_sizes,
                                    const std::vector<std::vector<std::string>>& lhs_names,
                                    const std::vector<std::vector<std::string>>& rhs_names) {
  ComparisonVerdict v;
  v.map = std::move(map);
  v.invertible = true;
  for (std::size_t x = 0; x < v.map.size(); ++x) {
    v.lhs_size += static_cast<int>(v.map[x].size());
    v.rhs_size += rhs_sizes[x];
    Table inv(rhs_sizes[x], -1);
    for (std::size_t e = 0; e < v.map[x].size() && v.invertible; ++e) {
      const int t = v.map[x][e];
      if (inv[t] >= 0) {
        v.invertible = false;
        v.witness = "not injective: '" + lhs_names[x][inv[t]] + "' and '" + lhs_names[x][e] + "' both map to '" +
                    rhs_names[x][t] + "'";
      }
      inv[t] = static_cast<int>(e);
    }
    for (int t = 0; t < rhs_sizes[x] && v.invertible; ++t)
      if (inv[t] < 0) {
        v.invertible = false;
        v.witness = "not surjective: '" + rhs_names[x][t] + "' is not in the image";
      }
    v.inverse.push_back(std::move(inv));
  }
  if (!v.invertible) v.inverse.clear();
  return v;
}

}  // namespace

std::vector<std::string> Diagram::law_violations() const {
  std::vector<std::string> out;
  if (static_cast<int>(at.size()) != shape->num_objects() || static_cast<int>(along.size()) != shape->num_morphisms()) {
    out.push_back("diagram does not cover its shape");
    return out;
  }
  for (int j = 0; j < shape->num_objects(); ++j) {
    if (!(*at[j].source == *ambient)) out.push_back("diagram value at '" + shape->object_name(j) + "' lives elsewhere");
    for (auto& v : at[j].law_violations()) out.push_back(v);
  }
  if (!out.empty()) return out;
  for (int m = 0; m < shape->num_morphisms(); ++m)
    for (auto& v : naturality_violations(at[shape->src(m)], at[shape->tgt(m)], along[m]))
      out.push_back("diagram map '" + shape->morphism_name(m) + "': " + v);
  if (!out.empty()) return out;
  for (int j = 0; j < shape->num_objects(); ++j)
    if (along[shape->identity(j)] != identity_components(at[j]))
      out.push_back("diagram does not preserve the identity of '" + shape->object_name(j) + "'");
  for (int g = 0; g < shape->num_morphisms(); ++g)
    for (int f = 0; f < shape->num_morphisms(); ++f) {
      const int gf = shape->compose(g, f);
      if (gf >= 0 && along[gf] != compose_components(along[g], along[f]))
        out.push_back("diagram does not preserve " + shape->morphism_name(g) + "∘" + shape->morphism_name(f));
    }
  return out;
}

SetFunctor Diagram::at_point(int x) const {
  SetFunctor f{shape, {}, {}};
  for (const auto& a : at) f.elements.push_back(a.elements[x]);
  for (const auto& m : along) f.action.push_back(m[x]);
  return f;
}

SetFunctor point_set(const std::vector<std::string>& elements) {
  Table id(elements.size());
  for (std::size_t i = 0; i < elements.size(); ++i) id[i] = static_cast<int>(i);
  return SetFunctor{unit_category(), {elements}, {id}};
}

Diagram set_diagram(const SetFunctor& f) {
  Diagram d{f.source, unit_category(), {}, {}};
  for (const auto& e : f.elements) d.at.push_back(point_set(e));
  for (const auto& t : f.action) d.along.push_back({t});
  return d;
}

Diagram yoneda_diagram(const Yoneda& y) {
  return Diagram{y.category, y.opposite_category, y.representables, y.on_morphisms};
}

WeightedLimit weighted_limit(const Weight& psi, const Diagram& t) {
  require(psi.variance == Variance::limit, "weighted limit needs a limit-variance weight");
  require(*psi.functor.source == *t.shape, "weight and diagram have different shapes");
  const auto& x = *t.ambient;
  WeightedLimit out{psi, t, elements(psi.functor, Variance::limit), SetFunctor{t.ambient, {}, {}}, {}, {}};
  const auto& proj = out.el.projection;
  for (int p = 0; p < x.num_objects(); ++p) {
    out.pointwise.push_back(conical_limit(restrict_along(t.at_point(p), proj)));
    out.object.elements.push_back(out.pointwise.back().names);
  }
  for (int xi = 0; xi < x.num_morphisms(); ++xi) {
    const auto& from = out.pointwise[x.src(xi)];
    const auto& to = out.pointwise[x.tgt(xi)];
    Table tab;
    for (const auto& tuple : from.tuples) {
      std::vector<int> moved(tuple.size());
      for (std::size_t e = 0; e < tuple.size(); ++e) moved[e] = t.at[proj.on_objects[e]].apply(xi, tuple[e]);
      const int i = to.index_of(moved);
      if (i < 0) throw InternalError("limit action leaves the pointwise limit");
      tab.push_back(i);
    }
    out.object.action.push_back(std::move(tab));
  }
  const auto off = element_offsets(psi.functor);
  out.counit.resize(t.shape->num_objects());
  for (int d = 0; d < t.shape->num_objects(); ++d)
    for (int w = 0; w < psi.functor.size(d); ++w) {
      Components c;
      for (int p = 0; p < x.num_objects(); ++p) {
        Table tab;
        for (const auto& tuple : out.pointwise[p].tuples) tab.push_back(tuple[off[d] + w]);
        c.push_back(std::move(tab));
      }
      out.counit[d].push_back(std::move(c));
    }
  return out;
}

WeightedColimit weighted_colimit(const Weight& phi, const Diagram& s) {
  require(phi.variance == Variance::colimit, "weighted colimit needs a colimit-variance weight");
  require(*opposite(phi.functor.source) == *s.shape, "diagram shape is not the opposite of the weight's domain");
  const auto& x = *s.ambient;
  WeightedColimit out{phi, s, elements(phi.functor, Variance::colimit), SetFunctor{s.ambient, {}, {}}, {}, {}};
  const auto& proj = out.el.projection;
  for (int p = 0; p < x.num_objects(); ++p) {
    out.pointwise.push_back(conical_colimit(restrict_along(s.at_point(p), proj)));
    out.object.elements.push_back(out.pointwise.back().names);
  }
  for (int xi = 0; xi < x.num_morphisms(); ++xi) {
    const auto& from = out.pointwise[x.src(xi)];
    const auto& to = out.pointwise[x.tgt(xi)];
    Table tab;
    for (auto [e, v] : from.representatives) tab.push_back(to.cocone[e][s.at[proj.on_objects[e]].apply(xi, v)]);
    out.object.action.push_back(std::move(tab));
  }
  const auto off = element_offsets(phi.functor);
  out.unit.resize(s.shape->num_objects());
  for (int d = 0; d < s.shape->num_objects(); ++d)
    for (int w = 0; w < phi.functor.size(d); ++w) {
      Components c;
      for (int p = 0; p < x.num_objects(); ++p) c.push_back(out.pointwise[p].cocone[off[d] + w]);
      out.unit[d].push_back(std::move(c));
    }
  return out;
}

std::vector<SetFunctor> competitors(const CatPtr& ambient, int scale) {
  std::vector<SetFunctor> out;
  auto y = yoneda(opposite(ambient));
  for (auto& r : y.representables) {
    r.source = ambient;
    out.push_back(std::move(r));
  }
  for (auto& f : all_set_functors(ambient, scale)) out.push_back(std::move(f));
  return out;
}

std::optional<std::string> universal_property_failure(const WeightedLimit& l, const std::vector<SetFunctor>& zs) {
  const auto& shape = *l.diagram.shape;
  const auto& psi = l.weight.functor;
  for (const auto& z : zs) {
    auto lhs = nat_set(z, l.object);
    HomFamily fam{SetFunctor{l.diagram.shape, {}, {}}, {}};
    for (int d = 0; d < shape.num_objects(); ++d) {
      fam.sets.push_back(nat_set(z, l.diagram.at[d]));
      fam.sets.back().build_index();
      std::vector<std::string> names;
      for (std::size_t i = 0; i < fam.sets.back().size(); ++i) names.push_back(std::to_string(i));
      fam.functor.elements.push_back(std::move(names));
    }
    for (int f = 0; f < shape.num_morphisms(); ++f) {
      Table tab;
      for (const auto& a : fam.sets[shape.src(f)].members)
        tab.push_back(fam.sets[shape.tgt(f)].index_of(compose_components(l.diagram.along[f], a)));
      fam.functor.action.push_back(std::move(tab));
    }
    auto rhs = nat_set(psi, fam.functor);
    rhs.build_index();
    std::vector<char> hit(rhs.size(), 0);
    for (const auto& beta : lhs.members) {
      Components cone(shape.num_objects());
      for (int d = 0; d < shape.num_objects(); ++d)
        for (int w = 0; w < psi.size(d); ++w)
          cone[d].push_back(fam.sets[d].index_of(compose_components(l.counit[d][w], beta)));
      const int i = rhs.index_of(cone);
      if (i < 0) return competitor_label(z) + ": composite with the counit is not a cone";
      if (hit[i]) return competitor_label(z) + ": two maps give the same cone";
      hit[i] = 1;
    }
    if (lhs.size() != rhs.size())
      return competitor_label(z) + ": " + std::to_string(rhs.size()) + " cones but " + std::to_string(lhs.size()) +
             " maps into the limit";
  }
  return std::nullopt;
}

std::optional<std::string> universal_property_failure(const WeightedColimit& c, const std::vector<SetFunctor>& zs) {
  const auto& phi = c.weight.functor;
  const auto& d = *phi.source;
  for (const auto& z : zs) {
    auto lhs = nat_set(c.object, z);
    HomFamily fam{SetFunctor{phi.source, {}, {}}, {}};
    for (int o = 0; o < d.num_objects(); ++o) {
      fam.sets.push_back(nat_set(c.diagram.at[o], z));
      fam.sets.back().build_index();
      std::vector<std::string> names;
      for (std::size_t i = 0; i < fam.sets.back().size(); ++i) names.push_back(std::to_string(i));
      fam.functor.elements.push_back(std::move(names));
    }
    // f : o → o' in D is S(f) : S o' → S o, acting on [S o, Z] by precomposition.
    for (int f = 0; f < d.num_morphisms(); ++f) {
      Table tab;
      for (const auto& a : fam.sets[d.src(f)].members)
        tab.push_back(fam.sets[d.tgt(f)].index_of(compose_components(a, c.diagram.along[f])));
      fam.functor.action.push_back(std::move(tab));
    }
    auto rhs = nat_set(phi, fam.functor);
    rhs.build_index();
    std::vector<char> hit(rhs.size(), 0);
    for (const auto& beta : lhs.members) {
      Components cocone(d.num_objects());
      for (int o = 0; o < d.num_objects(); ++o)
        for (int w = 0; w < phi.size(o); ++w)
          cocone[o].push_back(fam.sets[o].index_of(compose_components(beta, c.unit[o][w])));
      const int i = rhs.index_of(cocone);
      if (i < 0) return competitor_label(z) + ": composite with the unit is not a cocone";
      if (hit[i]) return competitor_label(z) + ": two maps give the same cocone";
      hit[i] = 1;
    }
    if (lhs.size() != rhs.size())
      return competitor_label(z) + ": " + std::to_string(rhs.size()) + " cocones but " + std::to_string(lhs.size()) +
             " maps out of the colimit";
  }
  return std::nullopt;
}

SetFunctor Evaluation::on_object(const SetFunctor& z) const { return point_set(z.elements[point_]); }

Components Evaluation::on_morphism(const SetFunctor&, const SetFunctor&, const Components& a) const {
  return {a[point_]};
}

std::string Evaluation::describe() const { return "evaluation at '" + x_->object_name(point_) + "'"; }

SetFunctor HomFrom::on_object(const SetFunctor& z) const {
  auto ns = nat_set(p_, z);
  std::vector<std::string> names;
  for (const auto& m : ns.members) names.push_back(describe_components(p_, z, m));
  return point_set(names);
}

Components HomFrom::on_morphism(const SetFunctor& z, const SetFunctor& z2, const Components& a) const {
  auto from = nat_set(p_, z);
  auto to = nat_set(p_, z2);
  Table tab;
  for (const auto& b : from.members) tab.push_back(to.index_of(compose_components(a, b)));
  return {tab};
}

Diagram transport(const AmbientFunctor& f, const Diagram& d) {
  Diagram out{d.shape, f.target(), {}, {}};
  for (const auto& a : d.at) out.at.push_back(f.on_object(a));
  for (int m = 0; m < d.shape->num_morphisms(); ++m)
    out.along.push_back(f.on_morphism(d.at[d.shape->src(m)], d.at[d.shape->tgt(m)], d.along[m]));
  return out;
}

ComparisonVerdict preserves(const AmbientFunctor& f, const WeightedLimit& l) {
  auto image = weighted_limit(l.weight, transport(f, l.diagram));
  auto fl = f.on_object(l.object);
  const auto& psi = l.weight.functor;
  const auto off = element_offsets(psi);
  std::vector<Components> fmu(l.el.points.size());
  for (int d = 0; d < psi.source->num_objects(); ++d)
    for (int w = 0; w < psi.size(d); ++w) fmu[off[d] + w] = f.on_morphism(l.object, l.diagram.at[d], l.counit[d][w]);
  std::vector<Table> map;
  std::vector<int> rhs_sizes;
  for (int p = 0; p < f.target()->num_objects(); ++p) {
    Table tab;
    for (int e = 0; e < fl.size(p); ++e) {
      std::vector<int> tuple;
      for (const auto& m : fmu) tuple.push_back(m[p][e]);
      const int i = image.pointwise[p].index_of(tuple);
      if (i < 0) throw InternalError("transported counit is not a cone");
      tab.push_back(i);
    }
    map.push_back(std::move(tab));
    rhs_sizes.push_back(image.object.size(p));
  }
  return bijection_verdict(std::move(map), rhs_sizes, fl.elements, image.object.elements);
}

ComparisonVerdict preserves(const AmbientFunctor& f, const WeightedColimit& c) {
  auto image = weighted_colimit(c.weight, transport(f, c.diagram));
  auto fc = f.on_object(c.object);
  const auto& phi = c.weight.functor;
  const auto off = element_offsets(phi);
  std::vector<Components> flambda(c.el.points.size());
  for (int d = 0; d < phi.source->num_objects(); ++d)
    for (int w = 0; w < phi.size(d); ++w) flambda[off[d] + w] = f.on_morphism(c.diagram.at[d], c.object, c.unit[d][w]);
  std::vector<Table> map;
  std::vector<int> rhs_sizes;
  for (int p = 0; p < f.target()->num_objects(); ++p) {
    Table tab;
    for (auto [e, v] : image.pointwise[p].representatives) tab.push_back(flambda[e][p][v]);
    map.push_back(std::move(tab));
    rhs_sizes.push_back(fc.size(p));
  }
  return bijection_verdict(std::move(map), rhs_sizes, image.object.elements, fc.elements);
}

ComparisonVerdict commutes_at(const Weight& phi, const Weight& psi, const SetFunctor& s) {
  require(phi.variance == Variance::colimit && psi.variance == Variance::limit,
          "commutation needs a colimit weight and a limit weight");
  const auto& p = *s.source;
  require(p.is_product() && *p.left_factor() == *opposite(phi.functor.source) && *p.right_factor() == *psi.functor.source,
          "commutation diagram must live on opposite(K) × L");
  const auto& kop = p.left_factor();
  const auto& l = p.right_factor();

  // S read as K^op → [L, Set] and as L → [K^op, Set].
  Diagram by_k{kop, l, {}, {}};
  for (int k = 0; k < kop->num_objects(); ++k) by_k.at.push_back(slice_left(s, k));
  for (int u = 0; u < kop->num_morphisms(); ++u) {
    Components c;
    for (int j = 0; j < l->num_objects(); ++j) c.push_back(s.action[p.pair_morphism(u, l->identity(j))]);
    by_k.along.push_back(std::move(c));
  }
  Diagram by_l{l, kop, {}, {}};
  for (int j = 0; j < l->num_objects(); ++j) by_l.at.push_back(slice_right(s, j));
  for (int v = 0; v < l->num_morphisms(); ++v) {
    Components c;
    for (int k = 0; k < kop->num_objects(); ++k) c.push_back(s.action[p.pair_morphism(kop->identity(k), v)]);
    by_l.along.push_back(std::move(c));
  }

  auto colim = weighted_colimit(phi, by_k);
  auto rhs = weighted_limit(psi, set_diagram(colim.object));
  auto lim = weighted_limit(psi, by_l);
  auto lhs = weighted_colimit(phi, set_diagram(lim.object));

  const auto& lhs_pt = lhs.pointwise[0];
  // Every member of a class must land on the same cone.
  Table map(lhs_pt.size(), -1);
  for (std::size_t e = 0; e < lhs.el.points.size(); ++e) {
    const auto [k, a] = lhs.el.points[e];
    for (int c = 0; c < lim.object.size(k); ++c) {
      const auto& tuple = lim.pointwise[k].tuples[c];
      std::vector<int> image(tuple.size());
      for (std::size_t o = 0; o < tuple.size(); ++o) {
        const int j = lim.el.points[o].first;
        image[o] = colim.unit[k][a][j][tuple[o]];
      }
      const int target = rhs.pointwise[0].index_of(image);
      if (target < 0) throw InternalError("comparison image is not a cone");
      int& slot = map[lhs_pt.cocone[e][c]];
      if (slot >= 0 && slot != target) throw InternalError("comparison is not constant on a class");
      slot = target;
    }
  }
  return bijection_verdict({map}, {rhs.object.size(0)}, lhs.object.elements, rhs.object.elements);
}

CommutationReport commutation_search(const Weight& phi, const Weight& psi, int bound) {
  CommutationReport report;
  report.bound = bound;
  auto shape = product(opposite(phi.functor.source), psi.functor.source);
  std::vector<SetFunctor> batch;
  auto flush = [&]() {
    std::vector<char> failed(batch.size(), 0);
    std::vector<ComparisonVerdict> verdicts(batch.size());
    std::exception_ptr error;
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < batch.size(); ++i) {
      try {
        verdicts[i] = commutes_at(phi, psi, batch[i]);
        failed[i] = !verdicts[i].invertible;
      } catch (...) {
#pragma omp critical(kanweigh_commutation_failure)
        if (!error) error = std::current_exception();
      }
    }
    if (error) std::rethrow_exception(error);
    for (std::size_t i = 0; i < batch.size(); ++i) {
      ++report.checked;
      if (failed[i]) {
        report.clean = false;
        report.counterexample = batch[i];
        report.verdict = verdicts[i];
        return false;
      }
    }
    batch.clear();
    return true;
  };
  bool more = true;
  for_each_set_functor(shape, bound, [&](const SetFunctor& s) {
    batch.push_back(s);
    if (batch.size() >= 256) more = flush();
    return more;
  });
  if (more && !batch.empty()) flush();
  return report;
}

FlatnessVerdict is_flat_finlim(const Weight& phi) {
  require(phi.variance == Variance::colimit, "flatness is defined for colimit weights");
  auto el = elements(phi.functor, Variance::colimit);
  const auto& e = *el.category;
  FlatnessVerdict v;
  if (e.num_objects() == 0) {
    v.witness = "category of elements is empty";
    return v;
  }
  for (int a = 0; a < e.num_objects(); ++a)
    for (int b = a + 1; b < e.num_objects(); ++b) {
      bool cocone = false;
      for (int c = 0; c < e.num_objects() && !cocone; ++c) cocone = !e.hom(a, c).empty() && !e.hom(b, c).empty();
      if (!cocone) {
        v.witness = "objects '" + e.object_name(a) + "' and '" + e.object_name(b) + "' have no cocone";
        return v;
      }
    }
  for (int a = 0; a < e.num_objects(); ++a)
    for (int b = 0; b < e.num_objects(); ++b) {
      const auto& h = e.hom(a, b);
      for (std::size_t i = 0; i < h.size(); ++i)
        for (std::size_t j = i + 1; j < h.size(); ++j) {
          bool coequalized = false;
          for (int c = 0; c < e.num_objects() && !coequalized; ++c)
            for (int w : e.hom(b, c))
              if (e.compose(w, h[i]) == e.compose(w, h[j])) {
                coequalized = true;
                break;
              }
          if (!coequalized) {
            v.witness = "parallel arrows '" + e.morphism_name(h[i]) + "' and '" + e.morphism_name(h[j]) +
                        "' are not coequalized";
            return v;
          }
        }
    }
  v.flat = true;
  return v;
}

}  // namespace kanweigh
