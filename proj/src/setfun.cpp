#include "kanweigh/setfun.hpp"

#include <algorithm>
#include <exception>
#include <numeric>
#include <set>
#include <tuple>

#include <omp.h>

#include "kanweigh/error.hpp"

namespace kanweigh {

namespace {

std::vector<std::string> index_names(int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back(std::to_string(i));
  return out;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  // Keeps the smaller index as root so roots are least representatives.
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b) parent[b] = a;
    else parent[a] = b;
  }
};

// One variable per (object, element of F). A constraint (m, x) ties the
// variable of (src m, x) to that of (tgt m, F(m)(x)); it is checked once
// both are assigned, i.e. at the later of the two variable indices.
struct NatProblem {
  const SetFunctor& f;
  const SetFunctor& g;
  bool injective;
  std::vector<int> var_object;
  std::vector<int> var_element;
  std::vector<int> offset;
  std::vector<std::vector<std::pair<int, int>>> checks;  // (morphism, source variable)

  NatProblem(const SetFunctor& f_, const SetFunctor& g_, bool inj) : f(f_), g(g_), injective(inj) {
    const auto& c = *f.source;
    for (int k = 0; k < c.num_objects(); ++k) {
      offset.push_back(static_cast<int>(var_object.size()));
      for (int x = 0; x < f.size(k); ++x) {
        var_object.push_back(k);
        var_element.push_back(x);
      }
    }
    checks.resize(var_object.size());
    for (int m = 0; m < c.num_morphisms(); ++m) {
      if (c.is_identity(m)) continue;
      for (int x = 0; x < f.size(c.src(m)); ++x) {
        const int a = offset[c.src(m)] + x;
        const int b = offset[c.tgt(m)] + f.apply(m, x);
        checks[std::max(a, b)].push_back({m, a});
      }
    }
  }

  int num_vars() const { return static_cast<int>(var_object.size()); }

  bool ok(const std::vector<int>& val, int v) const {
    const auto& c = *f.source;
    for (auto [m, a] : checks[v]) {
      const int b = offset[c.tgt(m)] + f.apply(m, var_element[a]);
      if (g.apply(m, val[a]) != val[b]) return false;
    }
    if (injective) {
      const int k = var_object[v];
      for (int u = offset[k]; u < v; ++u)
        if (val[u] == val[v]) return false;
    }
    return true;
  }

  Components unpack(const std::vector<int>& val) const {
    Components out(f.source->num_objects());
    for (int v = 0; v < num_vars(); ++v) out[var_object[v]].push_back(val[v]);
    return out;
  }

  // Depth-first extension of a partial assignment of the first `depth` variables.
  template <class Emit>
  bool extend(std::vector<int>& val, int depth, CandidateBudget& budget, Emit&& emit) const {
    if (depth == num_vars()) return emit(val);
    const int range = g.size(var_object[depth]);
    for (int y = 0; y < range; ++y) {
      budget.charge();
      val[depth] = y;
      if (!ok(val, depth)) continue;
      if (!extend(val, depth + 1, budget, emit)) return false;
    }
    return true;
  }
};

bool sizes_admit(const SetFunctor& f, const SetFunctor& g) {
  for (int k = 0; k < f.source->num_objects(); ++k)
    if (f.size(k) > 0 && g.size(k) == 0) return false;
  return true;
}

void require_same_source(const SetFunctor& f, const SetFunctor& g, const char* where) {
  if (!(*f.source == *g.source))
    throw InvalidInput({std::string(where) + ": functors have different source categories"});
}

}  // namespace

int SetFunctor::total() const {
  int t = 0;
  for (const auto& e : elements) t += static_cast<int>(e.size());
  return t;
}

std::vector<std::string> SetFunctor::law_violations() const {
  std::vector<std::string> out;
  const auto& c = *source;
  if (static_cast<int>(elements.size()) != c.num_objects()) {
    out.push_back("set functor does not assign a set to every object");
    return out;
  }
  if (static_cast<int>(action.size()) != c.num_morphisms()) {
    out.push_back("set functor does not assign a function to every morphism");
    return out;
  }
  for (int o = 0; o < c.num_objects(); ++o) {
    std::set<std::string> seen(elements[o].begin(), elements[o].end());
    if (seen.size() != elements[o].size()) out.push_back("duplicate element in set at '" + c.object_name(o) + "'");
  }
  for (int m = 0; m < c.num_morphisms(); ++m) {
    const auto& t = action[m];
    bool shape = static_cast<int>(t.size()) == size(c.src(m));
    for (int y : t) shape = shape && y >= 0 && y < size(c.tgt(m));
    if (!shape) out.push_back("function for '" + c.morphism_name(m) + "' is not total into its target set");
  }
  if (!out.empty()) return out;
  for (int o = 0; o < c.num_objects(); ++o) {
    const auto& t = action[c.identity(o)];
    for (int x = 0; x < size(o); ++x)
      if (t[x] != x) {
        out.push_back("identity '" + c.morphism_name(c.identity(o)) + "' does not act as the identity on '" +
                      elements[o][x] + "'");
        break;
      }
  }
  for (int g = 0; g < c.num_morphisms(); ++g)
    for (int f = 0; f < c.num_morphisms(); ++f) {
      const int gf = c.compose(g, f);
      if (gf < 0) continue;
      for (int x = 0; x < size(c.src(f)); ++x)
        if (action[gf][x] != action[g][action[f][x]]) {
          out.push_back("composition " + c.morphism_name(g) + "∘" + c.morphism_name(f) + " differs on '" +
                        elements[c.src(f)][x] + "'");
          break;
        }
    }
  return out;
}

SetFunctor SetFunctor::make(CatPtr source, std::vector<std::vector<std::string>> elements, std::vector<Table> action) {
  SetFunctor f{std::move(source), std::move(elements), std::move(action)};
  auto v = f.law_violations();
  if (!v.empty()) throw InvalidInput(v);
  return f;
}

SetFunctor constant_functor(const CatPtr& c, const std::vector<std::string>& set) {
  SetFunctor f{c, std::vector<std::vector<std::string>>(c->num_objects(), set), {}};
  Table id(set.size());
  std::iota(id.begin(), id.end(), 0);
  f.action.assign(c->num_morphisms(), id);
  return f;
}

SetFunctor terminal_functor(const CatPtr& c) { return constant_functor(c, {"*"}); }

SetFunctor restrict_along(const SetFunctor& f, const Functor& t) {
  SetFunctor out{t.source, {}, {}};
  for (int o : t.on_objects) out.elements.push_back(f.elements[o]);
  for (int m : t.on_morphisms) out.action.push_back(f.action[m]);
  return out;
}

SetFunctor slice_left(const SetFunctor& h, int i) {
  const auto& p = *h.source;
  const auto& d = p.right_factor();
  const int id = p.left_factor()->identity(i);
  SetFunctor out{d, {}, {}};
  for (int j = 0; j < d->num_objects(); ++j) out.elements.push_back(h.elements[p.pair_object(i, j)]);
  for (int v = 0; v < d->num_morphisms(); ++v) out.action.push_back(h.action[p.pair_morphism(id, v)]);
  return out;
}

SetFunctor slice_right(const SetFunctor& h, int j) {
  const auto& p = *h.source;
  const auto& c = p.left_factor();
  const int id = p.right_factor()->identity(j);
  SetFunctor out{c, {}, {}};
  for (int i = 0; i < c->num_objects(); ++i) out.elements.push_back(h.elements[p.pair_object(i, j)]);
  for (int u = 0; u < c->num_morphisms(); ++u) out.action.push_back(h.action[p.pair_morphism(u, id)]);
  return out;
}

std::vector<std::string> naturality_violations(const SetFunctor& f, const SetFunctor& g, const Components& c) {
  std::vector<std::string> out;
  const auto& cat = *f.source;
  if (static_cast<int>(c.size()) != cat.num_objects()) {
    out.push_back("transformation does not give a component at every object");
    return out;
  }
  for (int k = 0; k < cat.num_objects(); ++k) {
    bool shape = static_cast<int>(c[k].size()) == f.size(k);
    for (int y : c[k]) shape = shape && y >= 0 && y < g.size(k);
    if (!shape) out.push_back("component at '" + cat.object_name(k) + "' is not a total function");
  }
  if (!out.empty()) return out;
  for (int m = 0; m < cat.num_morphisms(); ++m) {
    const int a = cat.src(m);
    const int b = cat.tgt(m);
    for (int x = 0; x < f.size(a); ++x)
      if (g.apply(m, c[a][x]) != c[b][f.apply(m, x)]) {
        out.push_back("naturality square for '" + cat.morphism_name(m) + "' fails at '" + f.elements[a][x] + "'");
        break;
      }
  }
  return out;
}

bool is_natural(const SetFunctor& f, const SetFunctor& g, const Components& c) {
  return naturality_violations(f, g, c).empty();
}

Components identity_components(const SetFunctor& f) {
  Components out;
  for (const auto& e : f.elements) {
    Table t(e.size());
    std::iota(t.begin(), t.end(), 0);
    out.push_back(std::move(t));
  }
  return out;
}

Components compose_components(const Components& second, const Components& first) {
  Components out(first.size());
  for (std::size_t k = 0; k < first.size(); ++k)
    for (int x : first[k]) out[k].push_back(second[k][x]);
  return out;
}

bool is_bijective(const SetFunctor& f, const SetFunctor& g, const Components& c) {
  for (int k = 0; k < f.source->num_objects(); ++k) {
    if (f.size(k) != g.size(k)) return false;
    std::vector<char> hit(g.size(k), 0);
    for (int y : c[k]) {
      if (hit[y]) return false;
      hit[y] = 1;
    }
  }
  return true;
}

Components invert_components(const Components& c) {
  Components out(c.size());
  for (std::size_t k = 0; k < c.size(); ++k) {
    out[k].assign(c[k].size(), -1);
    for (std::size_t x = 0; x < c[k].size(); ++x) out[k][c[k][x]] = static_cast<int>(x);
  }
  return out;
}

std::string describe_components(const SetFunctor& f, const SetFunctor& g, const Components& c) {
  std::string out = "[";
  for (int k = 0; k < f.source->num_objects(); ++k) {
    if (k) out += ",";
    out += f.source->object_name(k) + ":{";
    for (int x = 0; x < f.size(k); ++x) {
      if (x) out += ",";
      out += f.elements[k][x] + "↦" + g.elements[k][c[k][x]];
    }
    out += "}";
  }
  return out + "]";
}

int NatSet::index_of(const Components& c) const {
  if (!index_.empty()) {
    auto it = index_.find(c);
    return it == index_.end() ? -1 : it->second;
  }
  auto it = std::lower_bound(members.begin(), members.end(), c);
  if (it == members.end() || *it != c) return -1;
  return static_cast<int>(it - members.begin());
}

void NatSet::build_index() {
  index_.clear();
  for (std::size_t i = 0; i < members.size(); ++i) index_.emplace(members[i], static_cast<int>(i));
}

NatSet nat_set(const SetFunctor& f, const SetFunctor& g) {
  require_same_source(f, g, "nat_set");
  NatSet out;
  if (!sizes_admit(f, g)) return out;
  NatProblem problem(f, g, false);
  CandidateBudget budget("nat_set");
  const int n = problem.num_vars();

  // Split the search tree at a shallow depth with enough prefixes to share out.
  std::vector<std::vector<int>> prefixes{{}};
  int depth = 0;
  while (depth < n && prefixes.size() < 64) {
    std::vector<std::vector<int>> next;
    for (auto& p : prefixes) {
      std::vector<int> val(n, 0);
      std::copy(p.begin(), p.end(), val.begin());
      for (int y = 0; y < g.size(problem.var_object[depth]); ++y) {
        budget.charge();
        val[depth] = y;
        if (!problem.ok(val, depth)) continue;
        next.emplace_back(val.begin(), val.begin() + depth + 1);
      }
    }
    prefixes = std::move(next);
    ++depth;
  }

  std::vector<std::vector<Components>> found(prefixes.size());
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < prefixes.size(); ++i) {
    try {
      std::vector<int> val(n, 0);
      std::copy(prefixes[i].begin(), prefixes[i].end(), val.begin());
      problem.extend(val, depth, budget, [&](const std::vector<int>& v) {
        found[i].push_back(problem.unpack(v));
        return true;
      });
    } catch (...) {
#pragma omp critical(kanweigh_nat_set_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  for (auto& chunk : found)
    for (auto& c : chunk) out.members.push_back(std::move(c));
  return out;
}

NatSet nat_set_serial(const SetFunctor& f, const SetFunctor& g) {
  require_same_source(f, g, "nat_set_serial");
  NatSet out;
  const auto& c = *f.source;
  long double space = 1;
  for (int k = 0; k < c.num_objects(); ++k)
    for (int x = 0; x < f.size(k); ++x) space *= g.size(k);
  check_space(space, "nat_set_serial");
  if (space == 0) return out;
  Components cand(c.num_objects());
  for (int k = 0; k < c.num_objects(); ++k) cand[k].assign(f.size(k), 0);
  while (true) {
    if (is_natural(f, g, cand)) out.members.push_back(cand);
    // Odometer step: the last digit varies fastest, giving lexicographic order.
    int k = c.num_objects() - 1;
    int x = k >= 0 ? f.size(k) - 1 : -1;
    while (k >= 0) {
      if (x < 0) {
        --k;
        if (k >= 0) x = f.size(k) - 1;
        continue;
      }
      if (++cand[k][x] < g.size(k)) break;
      cand[k][x] = 0;
      --x;
    }
    if (k < 0) break;
  }
  return out;
}

std::optional<Components> find_iso(const SetFunctor& f, const SetFunctor& g) {
  require_same_source(f, g, "find_iso");
  for (int k = 0; k < f.source->num_objects(); ++k)
    if (f.size(k) != g.size(k)) return std::nullopt;
  NatProblem problem(f, g, true);
  CandidateBudget budget("find_iso");
  std::vector<int> val(problem.num_vars(), 0);
  std::optional<Components> out;
  problem.extend(val, 0, budget, [&](const std::vector<int>& v) {
    out = problem.unpack(v);
    return false;
  });
  return out;
}

int ConicalLimit::index_of(const std::vector<int>& tuple) const {
  auto it = std::lower_bound(tuples.begin(), tuples.end(), tuple);
  if (it == tuples.end() || *it != tuple) return -1;
  return static_cast<int>(it - tuples.begin());
}

ConicalLimit conical_limit(const SetFunctor& d) {
  const auto& j = *d.source;
  const int n = j.num_objects();
  // Constraints for a morphism are checked once both endpoints are chosen.
  std::vector<std::vector<int>> checks(n);
  for (int m = 0; m < j.num_morphisms(); ++m)
    if (!j.is_identity(m)) checks[std::max(j.src(m), j.tgt(m))].push_back(m);
  ConicalLimit out;
  CandidateBudget budget("conical_limit");
  std::vector<int> val(n, 0);
  std::function<void(int)> go = [&](int k) {
    if (k == n) {
      out.tuples.push_back(val);
      std::vector<std::string> parts;
      for (int i = 0; i < n; ++i) parts.push_back(d.elements[i][val[i]]);
      out.names.push_back(tuple_name(parts));
      return;
    }
    for (int x = 0; x < d.size(k); ++x) {
      budget.charge();
      val[k] = x;
      bool good = true;
      for (int m : checks[k]) good = good && d.apply(m, val[j.src(m)]) == val[j.tgt(m)];
      if (good) go(k + 1);
    }
  };
  go(0);
  return out;
}

ConicalColimit conical_colimit(const SetFunctor& d) {
  const auto& j = *d.source;
  std::vector<int> offset;
  std::vector<std::pair<int, int>> points;
  for (int k = 0; k < j.num_objects(); ++k) {
    offset.push_back(static_cast<int>(points.size()));
    for (int x = 0; x < d.size(k); ++x) points.push_back({k, x});
  }
  UnionFind uf(static_cast<int>(points.size()));
  for (int m = 0; m < j.num_morphisms(); ++m)
    for (int x = 0; x < d.size(j.src(m)); ++x) uf.unite(offset[j.src(m)] + x, offset[j.tgt(m)] + d.apply(m, x));
  ConicalColimit out;
  std::vector<int> class_of_root(points.size(), -1);
  for (std::size_t p = 0; p < points.size(); ++p) {
    const int r = uf.find(static_cast<int>(p));
    if (r != static_cast<int>(p)) continue;
    class_of_root[p] = out.size();
    out.representatives.push_back(points[p]);
    out.names.push_back(pair_name(j.object_name(points[p].first), d.elements[points[p].first][points[p].second]));
  }
  out.cocone.resize(j.num_objects());
  for (std::size_t p = 0; p < points.size(); ++p)
    out.cocone[points[p].first].push_back(class_of_root[uf.find(static_cast<int>(p))]);
  return out;
}

namespace {

// Factor category K of a functor on product(opposite(K), K).
int diagonal_size(const SetFunctor& h, const char* where) {
  const auto& p = *h.source;
  if (!p.is_product() || p.left_factor()->num_objects() != p.right_factor()->num_objects() ||
      !(*opposite(p.left_factor()) == *p.right_factor()))
    throw InvalidInput({std::string(where) + ": functor is not defined on a product opposite(K) × K"});
  return p.right_factor()->num_objects();
}

}  // namespace

End end(const SetFunctor& h) {
  const int n = diagonal_size(h, "end");
  const auto& p = *h.source;
  const auto& k = *p.right_factor();
  std::vector<std::vector<int>> checks(n);
  for (int f = 0; f < k.num_morphisms(); ++f)
    if (!k.is_identity(f)) checks[std::max(k.src(f), k.tgt(f))].push_back(f);
  End out;
  CandidateBudget budget("end");
  std::vector<int> val(n, 0);
  std::function<void(int)> go = [&](int i) {
    if (i == n) {
      out.families.push_back(val);
      std::vector<std::string> parts;
      for (int a = 0; a < n; ++a) parts.push_back(h.elements[p.pair_object(a, a)][val[a]]);
      out.names.push_back(tuple_name(parts));
      return;
    }
    for (int x = 0; x < h.size(p.pair_object(i, i)); ++x) {
      budget.charge();
      val[i] = x;
      bool good = true;
      for (int f : checks[i]) {
        const int a = k.src(f);
        const int b = k.tgt(f);
        // H(f, id_b)(x_b) = H(id_a, f)(x_a) in H(a, b).
        const int lhs = h.apply(p.pair_morphism(f, k.identity(b)), val[b]);
        const int rhs = h.apply(p.pair_morphism(k.identity(a), f), val[a]);
        good = good && lhs == rhs;
      }
      if (good) go(i + 1);
    }
  };
  go(0);
  return out;
}

Coend coend(const SetFunctor& h) {
  const int n = diagonal_size(h, "coend");
  const auto& p = *h.source;
  const auto& k = *p.right_factor();
  std::vector<int> offset;
  std::vector<std::pair<int, int>> points;
  for (int a = 0; a < n; ++a) {
    offset.push_back(static_cast<int>(points.size()));
    for (int y = 0; y < h.size(p.pair_object(a, a)); ++y) points.push_back({a, y});
  }
  UnionFind uf(static_cast<int>(points.size()));
  for (int f = 0; f < k.num_morphisms(); ++f) {
    const int a = k.src(f);
    const int b = k.tgt(f);
    // y ∈ H(b, a): H(f, id_a)(y) ∈ H(a, a) ~ H(id_b, f)(y) ∈ H(b, b).
    for (int y = 0; y < h.size(p.pair_object(b, a)); ++y) {
      const int l = h.apply(p.pair_morphism(f, k.identity(a)), y);
      const int r = h.apply(p.pair_morphism(k.identity(b), f), y);
      uf.unite(offset[a] + l, offset[b] + r);
    }
  }
  Coend out;
  std::vector<int> class_of_root(points.size(), -1);
  for (std::size_t q = 0; q < points.size(); ++q) {
    if (uf.find(static_cast<int>(q)) != static_cast<int>(q)) continue;
    class_of_root[q] = out.size();
    out.representatives.push_back(points[q]);
    const auto [a, y] = points[q];
    out.names.push_back(pair_name(k.object_name(a), h.elements[p.pair_object(a, a)][y]));
  }
  out.class_of.resize(n);
  for (std::size_t q = 0; q < points.size(); ++q)
    out.class_of[points[q].first].push_back(class_of_root[uf.find(static_cast<int>(q))]);
  return out;
}

Table coend_map(const SetFunctor& h, const Coend& ch, const Coend& ch2, const Components& alpha) {
  const auto& p = *h.source;
  Table out;
  for (auto [a, y] : ch.representatives) {
    const int d = p.pair_object(a, a);
    out.push_back(ch2.class_of[a][alpha[d][y]]);
  }
  return out;
}

Yoneda yoneda(const CatPtr& b) {
  Yoneda y{b, opposite(b), {}, {}};
  const auto& c = *b;
  for (int t = 0; t < c.num_objects(); ++t) {
    SetFunctor rep{y.opposite_category, {}, {}};
    for (int s = 0; s < c.num_objects(); ++s) {
      std::vector<std::string> names;
      for (int h : c.hom(s, t)) names.push_back(c.morphism_name(h));
      rep.elements.push_back(std::move(names));
    }
    // u : a → a' in B acts B(a', t) → B(a, t) by h ↦ h∘u.
    for (int u = 0; u < c.num_morphisms(); ++u) {
      Table tab;
      for (int h : c.hom(c.tgt(u), t)) tab.push_back(c.hom_position(c.compose(h, u)));
      rep.action.push_back(std::move(tab));
    }
    y.representables.push_back(std::move(rep));
  }
  for (int g = 0; g < c.num_morphisms(); ++g) {
    Components comp;
    for (int s = 0; s < c.num_objects(); ++s) {
      Table tab;
      for (int h : c.hom(s, c.src(g))) tab.push_back(c.hom_position(c.compose(g, h)));
      comp.push_back(std::move(tab));
    }
    y.on_morphisms.push_back(std::move(comp));
  }
  return y;
}

std::optional<std::string> yoneda_full_faithfulness_failure(const Yoneda& y) {
  const auto& c = *y.category;
  for (int a = 0; a < c.num_objects(); ++a)
    for (int b = 0; b < c.num_objects(); ++b) {
      const auto ns = nat_set(y.representables[a], y.representables[b]);
      const auto& hom = c.hom(a, b);
      if (ns.size() != hom.size())
        return "nat(Y" + c.object_name(a) + ", Y" + c.object_name(b) + ") has " + std::to_string(ns.size()) +
               " members but hom has " + std::to_string(hom.size());
      std::set<Components> images;
      for (int g : hom) {
        if (!is_natural(y.representables[a], y.representables[b], y.on_morphisms[g]))
          return "postcomposition with '" + c.morphism_name(g) + "' is not natural";
        images.insert(y.on_morphisms[g]);
      }
      if (images.size() != hom.size())
        return "postcomposition is not injective on hom(" + c.object_name(a) + "," + c.object_name(b) + ")";
    }
  return std::nullopt;
}

Elements elements(const SetFunctor& phi, Variance variance) {
  const auto& k = *phi.source;
  std::vector<std::string> objects;
  std::vector<std::pair<int, int>> points;
  std::vector<int> offset;
  for (int o = 0; o < k.num_objects(); ++o) {
    offset.push_back(static_cast<int>(points.size()));
    for (int x = 0; x < phi.size(o); ++x) {
      points.push_back({o, x});
      objects.push_back(pair_name(k.object_name(o), phi.elements[o][x]));
    }
  }
  std::vector<MorphismSpec> morphisms;
  std::vector<int> mor_offset;
  std::vector<int> base;
  for (int f = 0; f < k.num_morphisms(); ++f) {
    mor_offset.push_back(static_cast<int>(morphisms.size()));
    const int a = k.src(f);
    for (int x = 0; x < phi.size(a); ++x) {
      morphisms.push_back({pair_name(k.morphism_name(f), phi.elements[a][x]), objects[offset[a] + x],
                           objects[offset[k.tgt(f)] + phi.apply(f, x)]});
      base.push_back(f);
    }
  }
  std::vector<std::pair<std::string, std::string>> identities;
  for (int o = 0; o < k.num_objects(); ++o)
    for (int x = 0; x < phi.size(o); ++x)
      identities.push_back({objects[offset[o] + x], morphisms[mor_offset[k.identity(o)] + x].name});
  std::vector<std::pair<std::pair<std::string, std::string>, std::string>> table;
  for (int g = 0; g < k.num_morphisms(); ++g)
    for (int f = 0; f < k.num_morphisms(); ++f) {
      const int gf = k.compose(g, f);
      if (gf < 0 || k.is_identity(g) || k.is_identity(f)) continue;
      for (int x = 0; x < phi.size(k.src(f)); ++x) {
        const int y = phi.apply(f, x);
        table.push_back({{morphisms[mor_offset[g] + y].name, morphisms[mor_offset[f] + x].name},
                         morphisms[mor_offset[gf] + x].name});
      }
    }
  auto el = std::make_shared<const FinCat>(FinCat::make(objects, morphisms, identities, table));
  std::vector<int> on_objects;
  for (auto [o, x] : points) on_objects.push_back(o);
  Elements out;
  out.points = std::move(points);
  if (variance == Variance::limit) {
    out.category = el;
    out.projection = Functor{el, phi.source, on_objects, base};
  } else {
    out.category = opposite(el);
    out.projection = Functor{out.category, opposite(phi.source), on_objects, base};
  }
  return out;
}

void for_each_set_functor(const CatPtr& c, int max_size, const std::function<bool(const SetFunctor&)>& visit,
                          int min_size, int max_total) {
  const int n = c->num_objects();
  std::vector<std::vector<int>> vectors{{}};
  for (int o = 0; o < n; ++o) {
    std::vector<std::vector<int>> next;
    for (const auto& v : vectors)
      for (int s = min_size; s <= max_size; ++s) {
        next.push_back(v);
        next.back().push_back(s);
      }
    vectors = std::move(next);
  }
  auto key = [](const std::vector<int>& v) {
    const int empties = static_cast<int>(std::count(v.begin(), v.end(), 0));
    const int total = std::accumulate(v.begin(), v.end(), 0);
    return std::tuple{empties, total, v};
  };
  if (max_total >= 0)
    std::erase_if(vectors, [&](const auto& v) { return std::accumulate(v.begin(), v.end(), 0) > max_total; });
  std::sort(vectors.begin(), vectors.end(), [&](const auto& a, const auto& b) { return key(a) < key(b); });

  CandidateBudget budget("set functor enumeration");
  const int nm = c->num_morphisms();
  for (const auto& sizes : vectors) {
    SetFunctor f{c, {}, std::vector<Table>(nm)};
    for (int s : sizes) f.elements.push_back(index_names(s));
    for (int o = 0; o < n; ++o) {
      f.action[c->identity(o)].resize(sizes[o]);
      std::iota(f.action[c->identity(o)].begin(), f.action[c->identity(o)].end(), 0);
    }
    std::vector<int> free;
    for (int m = 0; m < nm; ++m)
      if (!c->is_identity(m)) free.push_back(m);
    std::vector<char> assigned(nm, 0);
    for (int o = 0; o < n; ++o) assigned[c->identity(o)] = 1;
    auto consistent = [&](int m) {
      for (int g = 0; g < nm; ++g) {
        if (!assigned[g]) continue;
        for (int h = 0; h < nm; ++h) {
          if (!assigned[h]) continue;
          if (g != m && h != m && c->compose(g, h) != m) continue;
          const int gh = c->compose(g, h);
          if (gh < 0 || !assigned[gh]) continue;
          for (int x = 0; x < sizes[c->src(h)]; ++x)
            if (f.action[gh][x] != f.action[g][f.action[h][x]]) return false;
        }
      }
      return true;
    };
    bool keep_going = true;
    std::function<void(std::size_t)> go = [&](std::size_t i) {
      if (!keep_going) return;
      if (i == free.size()) {
        keep_going = visit(f);
        return;
      }
      const int m = free[i];
      const int a = sizes[c->src(m)];
      const int b = sizes[c->tgt(m)];
      if (a > 0 && b == 0) return;
      Table t(a, 0);
      assigned[m] = 1;
      while (true) {
        budget.charge();
        f.action[m] = t;
        if (consistent(m)) go(i + 1);
        if (!keep_going) break;
        int d = a - 1;
        while (d >= 0 && ++t[d] == b) t[d--] = 0;
        if (d < 0) break;
      }
      assigned[m] = 0;
    };
    go(0);
    if (!keep_going) return;
  }
}

std::vector<SetFunctor> all_set_functors(const CatPtr& c, int max_size, int min_size, int max_total) {
  std::vector<SetFunctor> out;
  for_each_set_functor(
      c, max_size,
      [&](const SetFunctor& f) {
        out.push_back(f);
        return true;
      },
      min_size, max_total);
  return out;
}

}  // namespace kanweigh
