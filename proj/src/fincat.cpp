#include "kanweigh/fincat.hpp"

#include <algorithm>
#include <functional>

#include "kanweigh/error.hpp"

namespace kanweigh {

std::string pair_name(const std::string& left, const std::string& right) {
  return "⟨" + left + "," + right + "⟩";
}

std::string tuple_name(const std::vector<std::string>& parts) {
  std::string out = "⟨";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ",";
    out += parts[i];
  }
  return out + "⟩";
}

FinCat FinCat::make(std::vector<std::string> objects, std::vector<MorphismSpec> morphisms,
                    const std::vector<std::pair<std::string, std::string>>& identities,
                    const std::vector<std::pair<std::pair<std::string, std::string>, std::string>>& compose) {
  std::vector<std::string> errors;
  FinCat c;
  c.objects_ = std::move(objects);
  for (int i = 0; i < c.num_objects(); ++i) {
    if (!c.object_index_.emplace(c.objects_[i], i).second) errors.push_back("duplicate object '" + c.objects_[i] + "'");
  }
  for (auto& m : morphisms) {
    auto s = c.object_index_.find(m.src);
    auto t = c.object_index_.find(m.tgt);
    if (s == c.object_index_.end()) errors.push_back("morphism '" + m.name + "' has dangling source '" + m.src + "'");
    if (t == c.object_index_.end()) errors.push_back("morphism '" + m.name + "' has dangling target '" + m.tgt + "'");
    int idx = static_cast<int>(c.morphisms_.size());
    if (!c.morphism_index_.emplace(m.name, idx).second) errors.push_back("duplicate morphism '" + m.name + "'");
    c.morphisms_.push_back({m.name, s == c.object_index_.end() ? -1 : s->second,
                            t == c.object_index_.end() ? -1 : t->second});
  }
  if (!errors.empty()) throw InvalidInput(errors);

  c.identities_.assign(c.objects_.size(), -1);
  for (const auto& [obj, mor] : identities) {
    auto o = c.object_index_.find(obj);
    auto m = c.morphism_index_.find(mor);
    if (o == c.object_index_.end()) {
      errors.push_back("identity declared for unknown object '" + obj + "'");
      continue;
    }
    if (m == c.morphism_index_.end()) {
      errors.push_back("identity of '" + obj + "' names unknown morphism '" + mor + "'");
      continue;
    }
    const auto& mm = c.morphisms_[m->second];
    if (mm.src != o->second || mm.tgt != o->second)
      errors.push_back("identity '" + mor + "' of '" + obj + "' is not an endomorphism of it");
    c.identities_[o->second] = m->second;
  }
  for (int o = 0; o < c.num_objects(); ++o)
    if (c.identities_[o] < 0) errors.push_back("object '" + c.objects_[o] + "' has no identity");
  if (!errors.empty()) throw InvalidInput(errors);

  const std::size_t n = c.morphisms_.size();
  c.table_.assign(n * n, -1);
  for (const auto& [gf, result] : compose) {
    auto g = c.morphism_index_.find(gf.first);
    auto f = c.morphism_index_.find(gf.second);
    auto r = c.morphism_index_.find(result);
    const std::string key = gf.first + "|" + gf.second;
    if (g == c.morphism_index_.end() || f == c.morphism_index_.end() || r == c.morphism_index_.end()) {
      errors.push_back("compose entry '" + key + "' references an unknown morphism");
      continue;
    }
    if (c.morphisms_[f->second].tgt != c.morphisms_[g->second].src) {
      errors.push_back("compose entry '" + key + "' is not a composable pair");
      continue;
    }
    c.table_[g->second * n + f->second] = r->second;
  }
  // Identity laws fill the unlisted entries; listed ones are checked by law_violations().
  for (std::size_t f = 0; f < n; ++f) {
    const int tf = c.morphisms_[f].tgt;
    const int sf = c.morphisms_[f].src;
    auto& left = c.table_[c.identities_[tf] * n + f];
    if (left < 0) left = static_cast<int>(f);
    auto& right = c.table_[f * n + c.identities_[sf]];
    if (right < 0) right = static_cast<int>(f);
  }
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t f = 0; f < n; ++f)
      if (c.morphisms_[f].tgt == c.morphisms_[g].src && c.table_[g * n + f] < 0)
        errors.push_back("missing compose entry '" + c.morphisms_[g].name + "|" + c.morphisms_[f].name + "'");
  if (!errors.empty()) throw InvalidInput(errors);

  c.index();
  auto laws = c.law_violations();
  if (!laws.empty()) throw InvalidInput(laws);
  return c;
}

void FinCat::index() {
  const std::size_t k = objects_.size();
  homs_.assign(k * k, {});
  hom_pos_.assign(morphisms_.size(), 0);
  for (int m = 0; m < num_morphisms(); ++m) {
    auto& h = homs_[morphisms_[m].src * k + morphisms_[m].tgt];
    hom_pos_[m] = static_cast<int>(h.size());
    h.push_back(m);
  }
  if (object_index_.empty())
    for (int i = 0; i < num_objects(); ++i) object_index_.emplace(objects_[i], i);
  if (morphism_index_.empty())
    for (int i = 0; i < num_morphisms(); ++i) morphism_index_.emplace(morphisms_[i].name, i);
}

std::optional<int> FinCat::find_object(const std::string& name) const {
  auto it = object_index_.find(name);
  if (it == object_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> FinCat::find_morphism(const std::string& name) const {
  auto it = morphism_index_.find(name);
  if (it == morphism_index_.end()) return std::nullopt;
  return it->second;
}

int FinCat::pair_object(int i, int j) const { return i * right_->num_objects() + j; }
int FinCat::pair_morphism(int u, int v) const { return u * right_->num_morphisms() + v; }

std::vector<std::string> FinCat::law_violations() const {
  std::vector<std::string> out;
  const int n = num_morphisms();
  auto nm = [&](int m) { return m < 0 ? std::string("<undefined>") : morphisms_[m].name; };
  for (int g = 0; g < n; ++g) {
    for (int f = 0; f < n; ++f) {
      const int gf = compose(g, f);
      if (tgt(f) != src(g)) {
        if (gf >= 0) out.push_back("composite defined for non-composable pair " + nm(g) + "|" + nm(f));
        continue;
      }
      if (gf < 0) {
        out.push_back("composite undefined for " + nm(g) + "|" + nm(f));
        continue;
      }
      if (src(gf) != src(f) || tgt(gf) != tgt(g))
        out.push_back("composite " + nm(g) + "∘" + nm(f) + " = " + nm(gf) + " has wrong source/target");
    }
  }
  if (!out.empty()) return out;
  for (int f = 0; f < n; ++f) {
    if (compose(identity(tgt(f)), f) != f) out.push_back("identity law: id∘" + nm(f) + " ≠ " + nm(f));
    if (compose(f, identity(src(f))) != f) out.push_back("identity law: " + nm(f) + "∘id ≠ " + nm(f));
  }
  for (int h = 0; h < n; ++h)
    for (int g = 0; g < n; ++g) {
      if (tgt(g) != src(h)) continue;
      const int hg = compose(h, g);
      for (int f = 0; f < n; ++f) {
        if (tgt(f) != src(g)) continue;
        const int left = compose(hg, f);
        const int right = compose(h, compose(g, f));
        if (left != right)
          out.push_back("associativity: (" + nm(h) + "∘" + nm(g) + ")∘" + nm(f) + " = " + nm(left) + " but " +
                        nm(h) + "∘(" + nm(g) + "∘" + nm(f) + ") = " + nm(right) +
                        "; table inconsistent with declared compose entries");
      }
    }
  return out;
}

bool operator==(const FinCat& a, const FinCat& b) {
  if (a.objects_ != b.objects_ || a.identities_ != b.identities_ || a.table_ != b.table_) return false;
  if (a.morphisms_.size() != b.morphisms_.size()) return false;
  for (std::size_t i = 0; i < a.morphisms_.size(); ++i) {
    const auto& x = a.morphisms_[i];
    const auto& y = b.morphisms_[i];
    if (x.name != y.name || x.src != y.src || x.tgt != y.tgt) return false;
  }
  return true;
}

CatPtr opposite(const CatPtr& c) {
  std::shared_ptr<FinCat> op(new FinCat());
  op->objects_ = c->objects_;
  op->identities_ = c->identities_;
  op->morphisms_.reserve(c->morphisms_.size());
  for (const auto& m : c->morphisms_) op->morphisms_.push_back({m.name, m.tgt, m.src});
  const std::size_t n = c->morphisms_.size();
  op->table_.assign(n * n, -1);
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t f = 0; f < n; ++f) op->table_[g * n + f] = c->table_[f * n + g];
  // The opposite of a product is not tagged as a product: its factors would be
  // the opposites, which are built on demand by callers that need them.
  op->index();
  return op;
}

CatPtr product(const CatPtr& c, const CatPtr& d) {
  std::shared_ptr<FinCat> p(new FinCat());
  for (const auto& x : c->objects_)
    for (const auto& y : d->objects_) p->objects_.push_back(pair_name(x, y));
  for (const auto& u : c->morphisms_)
    for (const auto& v : d->morphisms_)
      p->morphisms_.push_back({pair_name(u.name, v.name), u.src * d->num_objects() + v.src,
                               u.tgt * d->num_objects() + v.tgt});
  for (int i = 0; i < c->num_objects(); ++i)
    for (int j = 0; j < d->num_objects(); ++j)
      p->identities_.push_back(c->identity(i) * d->num_morphisms() + d->identity(j));
  const std::size_t n = p->morphisms_.size();
  const int dm = d->num_morphisms();
  p->table_.assign(n * n, -1);
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t f = 0; f < n; ++f) {
      const int u = c->compose(static_cast<int>(g) / dm, static_cast<int>(f) / dm);
      const int v = d->compose(static_cast<int>(g) % dm, static_cast<int>(f) % dm);
      if (u >= 0 && v >= 0) p->table_[g * n + f] = u * dm + v;
    }
  p->left_ = c;
  p->right_ = d;
  p->index();
  return p;
}

std::vector<std::string> Functor::law_violations() const {
  std::vector<std::string> out;
  if (static_cast<int>(on_objects.size()) != source->num_objects() ||
      static_cast<int>(on_morphisms.size()) != source->num_morphisms()) {
    out.push_back("functor maps do not cover the source category");
    return out;
  }
  for (int o = 0; o < source->num_objects(); ++o)
    if (on_objects[o] < 0 || on_objects[o] >= target->num_objects())
      out.push_back("object '" + source->object_name(o) + "' is unmapped");
  for (int m = 0; m < source->num_morphisms(); ++m)
    if (on_morphisms[m] < 0 || on_morphisms[m] >= target->num_morphisms())
      out.push_back("morphism '" + source->morphism_name(m) + "' is unmapped");
  if (!out.empty()) return out;
  for (int m = 0; m < source->num_morphisms(); ++m) {
    const int fm = on_morphisms[m];
    if (target->src(fm) != on_objects[source->src(m)] || target->tgt(fm) != on_objects[source->tgt(m)])
      out.push_back("morphism '" + source->morphism_name(m) + "' is sent to '" + target->morphism_name(fm) +
                    "' with mismatched source/target");
  }
  if (!out.empty()) return out;
  for (int o = 0; o < source->num_objects(); ++o)
    if (on_morphisms[source->identity(o)] != target->identity(on_objects[o]))
      out.push_back("identity of '" + source->object_name(o) + "' is not preserved");
  for (int g = 0; g < source->num_morphisms(); ++g)
    for (int f = 0; f < source->num_morphisms(); ++f) {
      const int gf = source->compose(g, f);
      if (gf < 0) continue;
      if (on_morphisms[gf] != target->compose(on_morphisms[g], on_morphisms[f]))
        out.push_back("composition " + source->morphism_name(g) + "∘" + source->morphism_name(f) +
                      " is not preserved");
    }
  return out;
}

Functor Functor::make(CatPtr source, CatPtr target, std::vector<int> on_objects, std::vector<int> on_morphisms) {
  Functor f{std::move(source), std::move(target), std::move(on_objects), std::move(on_morphisms)};
  auto v = f.law_violations();
  if (!v.empty()) throw InvalidInput(v);
  return f;
}

CatPtr unit_category() {
  static const CatPtr unit =
      std::make_shared<const FinCat>(FinCat::make({"*"}, {{"id_*", "*", "*"}}, {{"*", "id_*"}}, {}));
  return unit;
}

Functor identity_functor(const CatPtr& c) {
  Functor f{c, c, {}, {}};
  for (int i = 0; i < c->num_objects(); ++i) f.on_objects.push_back(i);
  for (int i = 0; i < c->num_morphisms(); ++i) f.on_morphisms.push_back(i);
  return f;
}

Functor compose(const Functor& g, const Functor& f) {
  if (!(*f.target == *g.source)) throw InvalidInput({"functor composite: middle categories differ"});
  Functor h{f.source, g.target, {}, {}};
  for (int o : f.on_objects) h.on_objects.push_back(g.on_objects[o]);
  for (int m : f.on_morphisms) h.on_morphisms.push_back(g.on_morphisms[m]);
  return h;
}

std::pair<Functor, Functor> projections(const CatPtr& prod) {
  if (!prod->is_product()) throw InvalidInput({"projections requested on a category not built by product()"});
  const auto& l = prod->left_factor();
  const auto& r = prod->right_factor();
  Functor pl{prod, l, {}, {}};
  Functor pr{prod, r, {}, {}};
  for (int o = 0; o < prod->num_objects(); ++o) {
    pl.on_objects.push_back(o / r->num_objects());
    pr.on_objects.push_back(o % r->num_objects());
  }
  for (int m = 0; m < prod->num_morphisms(); ++m) {
    pl.on_morphisms.push_back(m / r->num_morphisms());
    pr.on_morphisms.push_back(m % r->num_morphisms());
  }
  return {pl, pr};
}

std::optional<Functor> find_isomorphism(const CatPtr& c, const CatPtr& d) {
  if (c->num_objects() != d->num_objects() || c->num_morphisms() != d->num_morphisms()) return std::nullopt;
  const int k = c->num_objects();
  const int n = c->num_morphisms();
  std::vector<int> perm(k);
  for (int i = 0; i < k; ++i) perm[i] = i;
  do {
    bool sizes_match = true;
    for (int a = 0; a < k && sizes_match; ++a)
      for (int b = 0; b < k && sizes_match; ++b)
        sizes_match = c->hom(a, b).size() == d->hom(perm[a], perm[b]).size();
    if (!sizes_match) continue;
    std::vector<int> fm(n, -1);
    std::vector<char> used(n, 0);
    for (int o = 0; o < k; ++o) {
      fm[c->identity(o)] = d->identity(perm[o]);
      used[d->identity(perm[o])] = 1;
    }
    auto consistent = [&](int m) {
      for (int x = 0; x < n; ++x) {
        if (fm[x] < 0) continue;
        for (auto [g, f] : {std::pair{m, x}, std::pair{x, m}}) {
          const int gf = c->compose(g, f);
          if (gf < 0 || fm[gf] < 0) continue;
          if (d->compose(fm[g], fm[f]) != fm[gf]) return false;
        }
      }
      for (int g = 0; g < n; ++g) {
        if (fm[g] < 0) continue;
        for (int f = 0; f < n; ++f) {
          if (fm[f] < 0 || c->compose(g, f) != m) continue;
          if (d->compose(fm[g], fm[f]) != fm[m]) return false;
        }
      }
      return true;
    };
    std::function<bool(int)> assign = [&](int m) -> bool {
      if (m == n) return true;
      if (fm[m] >= 0) return assign(m + 1);
      for (int cand : d->hom(perm[c->src(m)], perm[c->tgt(m)])) {
        if (used[cand]) continue;
        fm[m] = cand;
        used[cand] = 1;
        if (consistent(m) && assign(m + 1)) return true;
        used[cand] = 0;
        fm[m] = -1;
      }
      return false;
    };
    if (assign(0)) {
      Functor f{c, d, perm, fm};
      if (f.law_violations().empty()) return f;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

std::optional<std::pair<int, int>> find_object_iso(const FinCat& c, int x, int y) {
  for (int f : c.hom(x, y))
    for (int g : c.hom(y, x))
      if (c.compose(g, f) == c.identity(x) && c.compose(f, g) == c.identity(y)) return std::pair{f, g};
  return std::nullopt;
}

std::optional<std::string> fully_faithful_failure(const Functor& f) {
  const auto& s = *f.source;
  const auto& t = *f.target;
  for (int a = 0; a < s.num_objects(); ++a)
    for (int b = 0; b < s.num_objects(); ++b) {
      std::vector<int> image;
      for (int m : s.hom(a, b)) image.push_back(f.on_morphisms[m]);
      std::sort(image.begin(), image.end());
      const bool injective = std::adjacent_find(image.begin(), image.end()) == image.end();
      if (!injective) return "not faithful on hom(" + s.object_name(a) + "," + s.object_name(b) + ")";
      if (image.size() != t.hom(f.on_objects[a], f.on_objects[b]).size())
        return "not full on hom(" + s.object_name(a) + "," + s.object_name(b) + ")";
    }
  return std::nullopt;
}

EquivalenceCertificate certify_equivalence(const Functor& f) {
  EquivalenceCertificate cert;
  if (auto fail = fully_faithful_failure(f)) {
    cert.failure = *fail;
    return cert;
  }
  const auto& t = *f.target;
  for (int d = 0; d < t.num_objects(); ++d) {
    bool found = false;
    for (int a = 0; a < f.source->num_objects() && !found; ++a) {
      if (auto iso = find_object_iso(t, f.on_objects[a], d)) {
        cert.preimage.push_back(a);
        cert.isos.push_back(*iso);
        found = true;
      }
    }
    if (!found) {
      cert.failure = "object '" + t.object_name(d) + "' is not isomorphic to any image object";
      cert.preimage.clear();
      cert.isos.clear();
      return cert;
    }
  }
  cert.ok = true;
  return cert;
}

}  // namespace kanweigh
