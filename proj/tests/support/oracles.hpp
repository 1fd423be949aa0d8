#pragma once

#include <utility>
#include <vector>

#include "kanweigh/setfun.hpp"

namespace kanweigh::oracles {

/// Every component family F ⇒ G, filtered by naturality afterwards.
std::vector<Components> brute_nat(const SetFunctor& f, const SetFunctor& g);

/// Connected components of an undirected graph on n vertices.
int component_count(int n, const std::vector<std::pair<int, int>>& edges);

/// |{ψ, T}| for set-valued T: the number of cones ψ ⇒ T.
int limit_size_by_cones(const SetFunctor& psi, const SetFunctor& t);

/// |φ ∗ S| for set-valued S on opposite(D): the quotient of ⨿ φ(d) × S(d)
/// by (d', φ(f)w, x) ~ (d, w, S(f)x), found by graph search.
int colimit_size_by_quotient(const SetFunctor& phi, const SetFunctor& s);

/// Number of cocones from S into an n-element set weighted by φ, i.e. |Nat(φ, Fun(S−, n))|.
long long cocone_count(const SetFunctor& phi, const SetFunctor& s, int n);

}  // namespace kanweigh::oracles
