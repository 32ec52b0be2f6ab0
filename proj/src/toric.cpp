#include "gbke/toric.hpp"

#include "gbke/errors.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <thread>

namespace gbke {

WalkBinomial oriented(WalkBinomial b) {
  if (canonical_greater(b.minus, b.plus)) std::swap(b.plus, b.minus);
  return b;
}

Polynomial to_polynomial(const Ring& ring, const WalkBinomial& b) {
  if (b.plus.size() != ring->num_vars() || b.minus.size() != ring->num_vars())
    throw DomainError("binomial length does not match ring");
  return Polynomial::binomial(ring, b.plus, b.minus);
}

WalkBinomial to_walk(const Polynomial& p) {
  const Field& k = p.ring()->field();
  if (p.size() != 2 || !k.is_zero(k.add(p.terms()[0].coeff, p.terms()[1].coeff)))
    throw DomainError("not a pure difference binomial: " + p.to_string());
  WalkBinomial b{p.terms()[0].exp, p.terms()[1].exp};
  return oriented(std::move(b));
}

bool is_toric_member(const WalkBinomial& b, const LabeledGraph& g) {
  if (b.plus.size() != g.num_edges() || b.minus.size() != g.num_edges())
    throw DomainError("binomial length does not match the edge count");
  std::map<int, long> balance;
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    const Edge& e = g.edges()[i];
    const long d = static_cast<long>(b.plus[i]) - static_cast<long>(b.minus[i]);
    balance[e.u] += d;
    balance[e.v] += d;
  }
  return std::all_of(balance.begin(), balance.end(), [](const auto& kv) { return kv.second == 0; });
}

bool sidewise_divides(const WalkBinomial& a, const WalkBinomial& b) {
  if (a == b || (a.plus == b.minus && a.minus == b.plus)) return false;
  return (divides(a.plus, b.plus) && divides(a.minus, b.minus)) ||
         (divides(a.plus, b.minus) && divides(a.minus, b.plus));
}

std::vector<WalkBinomial> primitive_filter(std::vector<WalkBinomial> bs) {
  for (auto& b : bs) b = oriented(std::move(b));
  std::sort(bs.begin(), bs.end());
  bs.erase(std::unique(bs.begin(), bs.end()), bs.end());
  std::vector<WalkBinomial> out;
  for (const auto& b : bs) {
    const bool divided = std::any_of(bs.begin(), bs.end(),
                                     [&](const WalkBinomial& a) { return sidewise_divides(a, b); });
    if (!divided) out.push_back(b);
  }
  return out;
}

namespace {

struct WalkSearch {
  const LabeledGraph& g;
  std::size_t max_len;
  std::uint64_t budget;
  int start = 0;
  std::vector<std::vector<std::pair<std::size_t, int>>> adj;  // vertex slot -> (edge var, other slot)
  std::vector<int> slot_vertex;
  std::vector<std::uint32_t> used;
  std::vector<int> parity;
  std::vector<int> visits;
  Exponent plus, minus;
  std::uint64_t partial = 0;
  std::vector<WalkBinomial> found;

  WalkSearch(const LabeledGraph& graph, std::size_t len, std::uint64_t limit)
      : g(graph), max_len(len), budget(limit) {
    const auto& vs = g.vertices();
    slot_vertex = vs;
    adj.resize(vs.size());
    auto slot = [&](int v) {
      return static_cast<int>(std::lower_bound(vs.begin(), vs.end(), v) - vs.begin());
    };
    for (std::size_t i = 0; i < g.num_edges(); ++i) {
      const Edge& e = g.edges()[i];
      adj[slot(e.u)].push_back({i, slot(e.v)});
      adj[slot(e.v)].push_back({i, slot(e.u)});
    }
    used.assign(g.num_edges(), 0);
    parity.assign(g.num_edges(), -1);
    visits.assign(vs.size(), 0);
    plus.assign(g.num_edges(), 0);
    minus.assign(g.num_edges(), 0);
  }

  void run(int s) {
    start = s;
    visits[s] = 1;
    dfs(s, 0);
    visits[s] = 0;
  }

  void dfs(int cur, std::size_t len) {
    if (++partial > budget)
      throw ResourceError("primitive walk oracle exceeded " + std::to_string(budget) +
                          " partial walks");
    if (len == max_len) return;
    const int p = static_cast<int>(len % 2);
    for (const auto& [e, w] : adj[cur]) {
      if (w < start) continue;
      if (used[e] == 2 || (used[e] == 1 && parity[e] != p)) continue;
      const bool closing = w == start && p == 1;
      if (!closing && visits[w] == 2) continue;
      ++used[e];
      parity[e] = p;
      (p == 0 ? plus : minus)[e] += 1;
      if (closing) {
        found.push_back(oriented({plus, minus}));
      } else {
        ++visits[w];
        dfs(w, len + 1);
        --visits[w];
      }
      (p == 0 ? plus : minus)[e] -= 1;
      if (--used[e] == 0) parity[e] = -1;
    }
  }
};

}  // namespace

std::vector<WalkBinomial> primitive_oracle(const LabeledGraph& g, const OracleOptions& opts) {
  const std::size_t max_len = opts.max_len ? opts.max_len : 4 * g.num_edges();
  const int nv = static_cast<int>(g.vertices().size());
  std::vector<WalkBinomial> all;
  const unsigned threads = std::max(1u, opts.threads);
  std::vector<std::vector<WalkBinomial>> per(threads);
  std::vector<std::exception_ptr> errors(threads);
  // Each worker owns a search state and walks its share of start vertices.
  auto work = [&](unsigned t) {
    try {
      WalkSearch s(g, max_len, opts.max_partial_walks);
      for (int v = static_cast<int>(t); v < nv; v += static_cast<int>(threads)) s.run(v);
      per[t] = std::move(s.found);
    } catch (...) {
      errors[t] = std::current_exception();
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  for (auto& v : per) all.insert(all.end(), v.begin(), v.end());
  return primitive_filter(std::move(all));
}

std::vector<WalkBinomial> primitive_oracle_kernel(const LabeledGraph& g, std::uint64_t max_nodes) {
  const std::size_t m = g.num_edges();
  const auto& vs = g.vertices();
  auto slot = [&](int v) { return static_cast<std::size_t>(std::lower_bound(vs.begin(), vs.end(), v) - vs.begin()); };
  std::vector<std::size_t> remaining(vs.size(), 0);
  for (const auto& e : g.edges()) {
    ++remaining[slot(e.u)];
    ++remaining[slot(e.v)];
  }
  std::vector<long> sum(vs.size(), 0);
  std::vector<int> x(m, 0);
  std::vector<std::vector<int>> sols;
  std::uint64_t nodes = 0;

  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (++nodes > max_nodes) throw ResourceError("kernel oracle exceeded its node budget");
    if (i == m) {
      if (std::any_of(x.begin(), x.end(), [](int v) { return v != 0; })) sols.push_back(x);
      return;
    }
    const std::size_t a = slot(g.edges()[i].u), b = slot(g.edges()[i].v);
    --remaining[a];
    --remaining[b];
    for (int val = -2; val <= 2; ++val) {
      sum[a] += val;
      sum[b] += val;
      const bool ok = std::labs(sum[a]) <= 2 * static_cast<long>(remaining[a]) &&
                      std::labs(sum[b]) <= 2 * static_cast<long>(remaining[b]);
      if (ok) {
        x[i] = val;
        self(self, i + 1);
      }
      sum[a] -= val;
      sum[b] -= val;
    }
    x[i] = 0;
    ++remaining[a];
    ++remaining[b];
  };
  rec(rec, 0);

  // y is below x when it has the same signs and no larger magnitudes.
  auto below = [](const std::vector<int>& y, const std::vector<int>& z) {
    for (std::size_t i = 0; i < y.size(); ++i) {
      if (y[i] == 0) continue;
      if ((y[i] > 0) != (z[i] > 0) || z[i] == 0 || std::abs(y[i]) > std::abs(z[i])) return false;
    }
    return y != z;
  };
  std::vector<WalkBinomial> out;
  for (const auto& z : sols) {
    if (std::any_of(sols.begin(), sols.end(), [&](const auto& y) { return below(y, z); })) continue;
    WalkBinomial b{Exponent(m, 0), Exponent(m, 0)};
    for (std::size_t i = 0; i < m; ++i) {
      if (z[i] > 0) b.plus[i] = static_cast<std::uint32_t>(z[i]);
      if (z[i] < 0) b.minus[i] = static_cast<std::uint32_t>(-z[i]);
    }
    out.push_back(oriented(std::move(b)));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

UniversalBasis basis_from_walks(const LabeledGraph& g, const std::vector<WalkBinomial>& walks,
                                const Field& field, std::string provenance) {
  const Ring ring = g.ring(field);
  std::vector<Polynomial> elems;
  elems.reserve(walks.size());
  for (const auto& w : walks) elems.push_back(to_polynomial(ring, w));
  return UniversalBasis(ring, std::move(elems), std::move(provenance));
}

std::vector<WalkBinomial> walks_of(const LabeledGraph& g, const UniversalBasis& U) {
  const auto& names = U.ring()->var_names();
  if (names.size() != g.num_edges()) throw DomainError("basis ring does not match the graph's edges");
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] != g.edges()[i].name)
      throw DomainError("basis variable '" + names[i] + "' does not match edge '" +
                        g.edges()[i].name + "'");
  std::vector<WalkBinomial> out;
  out.reserve(U.size());
  for (const auto& f : U.elements()) out.push_back(to_walk(f));
  return out;
}

ToricBasis oracle_basis(const LabeledGraph& g, const Field& field) {
  return {g, basis_from_walks(g, primitive_oracle(g), field, "oracle")};
}

namespace {

// Re-indexes an exponent from one graph's edge order to another's by edge id.
Exponent remap(const Exponent& e, const LabeledGraph& from, const LabeledGraph& to) {
  Exponent out(to.num_edges(), 0);
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    out[to.var_of(from.edges()[i].id)] = e[i];
  }
  return out;
}

WalkBinomial remap(const WalkBinomial& b, const LabeledGraph& from, const LabeledGraph& to) {
  return {remap(b.plus, from, to), remap(b.minus, from, to)};
}

std::vector<WalkBinomial> remap_all(const std::vector<WalkBinomial>& bs, const LabeledGraph& from,
                                    const LabeledGraph& to) {
  std::vector<WalkBinomial> out;
  out.reserve(bs.size());
  for (const auto& b : bs) out.push_back(oriented(remap(b, from, to)));
  return out;
}

// Keeps input order; appends only binomials not yet present up to sign.
void append_unique(std::vector<WalkBinomial>& out, const WalkBinomial& b) {
  const WalkBinomial o = oriented(b);
  if (std::find(out.begin(), out.end(), o) == out.end()) out.push_back(o);
}

}  // namespace

ToricBasis glue_vertex(const LabeledGraph& G, const UniversalBasis& U_G, const LabeledGraph& B,
                       const UniversalBasis& U_B, int vG, int vB) {
  if (!G.has_vertex(vG)) throw DomainError("glue vertex " + std::to_string(vG) + " not in G");
  if (!B.has_vertex(vB)) throw DomainError("glue vertex " + std::to_string(vB) + " not in B");
  if (!B.is_bipartite()) throw DomainError("vertex gluing needs a bipartite graph");
  if (!(U_G.ring()->field() == U_B.ring()->field())) throw DomainError("bases over different fields");
  for (int v : B.vertices())
    if (v != vB && G.has_vertex(v))
      throw DomainError("vertex id " + std::to_string(v) + " occurs in both graphs");
  LabeledGraph out = G;
  for (const auto& e : B.edges()) {
    if (G.has_edge(e.id)) throw DomainError("edge id " + std::to_string(e.id) + " occurs in both graphs");
    out.add_edge(e.id, e.u == vB ? vG : e.u, e.v == vB ? vG : e.v, e.name);
  }
  for (int v : B.vertices())
    if (v != vB) out.add_vertex(v);
  std::vector<WalkBinomial> walks = remap_all(walks_of(G, U_G), G, out);
  for (const auto& b : remap_all(walks_of(B, U_B), B, out)) append_unique(walks, b);
  return {out, basis_from_walks(out, walks, U_G.ring()->field(), U_G.provenance())};
}

ToricBasis glue_cycle(const LabeledGraph& G, const UniversalBasis& U_G, std::size_t cycle_len,
                      int eG, const CycleGlueOptions& opts) {
  if (cycle_len < 4 || cycle_len % 2 != 0) throw DomainError("cycle length must be even and at least 4");
  const Edge glued = G.edge(eG);
  const std::size_t fresh = cycle_len - 1;
  if (opts.edge_ids.size() > fresh || opts.names.size() > fresh)
    throw DomainError("too many ids or names for the new cycle edges");

  LabeledGraph out;
  for (int v : G.vertices()) out.add_vertex(v);
  for (const auto& e : G.edges())
    out.add_edge(e.id, e.u, e.v, e.id == eG && !opts.rename.empty() ? opts.rename : e.name);

  int next_id = G.next_edge_id();
  for (int id : opts.edge_ids) next_id = std::max(next_id, id + 1);
  int next_vertex = G.next_vertex_id();
  std::vector<int> path_ids;
  int prev = glued.u;
  for (std::size_t i = 0; i < fresh; ++i) {
    const int id = i < opts.edge_ids.size() ? opts.edge_ids[i] : next_id++;
    const int to = i + 1 == fresh ? glued.v : next_vertex++;
    out.add_edge(id, prev, to, i < opts.names.size() ? opts.names[i] : std::string{});
    path_ids.push_back(id);
    prev = to;
  }

  const std::size_t n = out.num_edges();
  const std::size_t e = out.var_of(eG);
  // Path edges c1..c_{2k-1}: the cycle binomial is (c2 c4 ..) e - (c1 c3 ..).
  Exponent u2(n, 0), v2(n, 0);
  for (std::size_t i = 0; i < fresh; ++i) (i % 2 == 1 ? u2 : v2)[out.var_of(path_ids[i])] += 1;
  Exponent cycle_plus = u2;
  cycle_plus[e] += 1;

  std::vector<WalkBinomial> walks = remap_all(walks_of(G, U_G), G, out);
  const std::size_t through = static_cast<std::size_t>(std::count_if(
      walks.begin(), walks.end(), [&](const WalkBinomial& b) { return b.plus[e] + b.minus[e] > 0; }));
  std::vector<WalkBinomial> result = walks;
  append_unique(result, {cycle_plus, v2});
  for (std::size_t i = 0; i < walks.size(); ++i) {
    WalkBinomial g = walks[i];
    if (g.plus[e] == 0 && g.minus[e] == 0) continue;
    if (g.plus[e] == 0) std::swap(g.plus, g.minus);
    const std::uint32_t l = g.plus[e];
    Exponent u1 = g.plus;
    u1[e] = 0;
    Exponent plus = u1, minus = g.minus;
    for (std::size_t j = 0; j < n; ++j) {
      plus[j] += l * v2[j];
      minus[j] += l * u2[j];
    }
    append_unique(result, {plus, minus});
  }
  if (result.size() != walks.size() + 1 + through)
    throw std::logic_error("cycle gluing produced a duplicate binomial");
  return {out, basis_from_walks(out, result, U_G.ring()->field(), U_G.provenance())};
}

ToricBasis star_subdivide(const LabeledGraph& G, const UniversalBasis& U_G, int v,
                          const SubdivideOptions& opts) {
  if (!G.has_vertex(v)) throw DomainError("unknown vertex " + std::to_string(v));
  const auto inc = G.incident(v);
  if (inc.size() != 2)
    throw DomainError("star subdivision needs a degree-2 vertex; vertex " + std::to_string(v) +
                      " has degree " + std::to_string(inc.size()));
  const Edge x = G.edge(inc[0]), y = G.edge(inc[1]);
  const int p = x.other(v), q = y.other(v);

  int next_id = G.next_edge_id();
  const int xp = opts.x_prime_id >= 0 ? opts.x_prime_id : next_id++;
  const int yp = opts.y_prime_id >= 0 ? opts.y_prime_id : std::max(next_id, xp + 1);
  int next_vertex = G.next_vertex_id();
  const int A = opts.vertex_a >= 0 ? opts.vertex_a : next_vertex++;
  const int B = opts.vertex_b >= 0 ? opts.vertex_b : std::max(next_vertex, A + 1);
  if (G.has_vertex(A) || G.has_vertex(B) || A == B) throw DomainError("new vertex ids collide");

  auto fresh_name = [&](const Edge& e, int id) {
    const std::string primed = e.name + "'";
    return G.has_name(primed) ? "e" + std::to_string(id) : primed;
  };
  LabeledGraph out;
  for (int w : G.vertices()) out.add_vertex(w);
  for (const auto& e : G.edges()) {
    if (e.id == x.id)
      out.add_edge(e.id, p, B, e.name);
    else if (e.id == y.id)
      out.add_edge(e.id, A, q, e.name);
    else
      out.add_edge(e.id, e.u, e.v, e.name);
  }
  out.add_edge(yp, B, v, fresh_name(y, yp));
  out.add_edge(xp, v, A, fresh_name(x, xp));

  const std::size_t ix = out.var_of(x.id), iy = out.var_of(y.id);
  const std::size_t ixp = out.var_of(xp), iyp = out.var_of(yp);
  std::vector<WalkBinomial> walks = remap_all(walks_of(G, U_G), G, out);
  for (auto& b : walks) {
    for (Exponent* side : {&b.plus, &b.minus}) {
      (*side)[ixp] = (*side)[ix];
      (*side)[iyp] = (*side)[iy];
    }
    b = oriented(std::move(b));
  }
  return {out, basis_from_walks(out, walks, U_G.ring()->field(), U_G.provenance())};
}

UniversalBasis star_contract_basis(const LabeledGraph& G, const UniversalBasis& U_G, int v) {
  if (!G.has_vertex(v)) throw DomainError("unknown vertex " + std::to_string(v));
  const auto star = G.incident(v);
  std::vector<std::string> names;
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < G.num_edges(); ++i) {
    const Edge& e = G.edges()[i];
    if (std::find(star.begin(), star.end(), e.id) != star.end()) continue;
    keep.push_back(i);
    names.push_back(e.name);
  }
  if (keep.empty()) throw DomainError("star contraction leaves no edges");
  const Ring ring = make_ring(U_G.ring()->field(), names);
  std::vector<WalkBinomial> images;
  for (const auto& b : walks_of(G, U_G)) {
    WalkBinomial img{Exponent(keep.size(), 0), Exponent(keep.size(), 0)};
    for (std::size_t j = 0; j < keep.size(); ++j) {
      img.plus[j] = b.plus[keep[j]];
      img.minus[j] = b.minus[keep[j]];
    }
    const Exponent common = gcd(img.plus, img.minus);
    for (std::size_t j = 0; j < keep.size(); ++j) {
      img.plus[j] -= common[j];
      img.minus[j] -= common[j];
    }
    if (img.plus == img.minus) continue;  // zero after substitution
    append_unique(images, img);
  }
  std::vector<Polynomial> elems;
  for (const auto& b : images) elems.push_back(Polynomial::binomial(ring, b.plus, b.minus));
  return UniversalBasis(ring, std::move(elems), U_G.provenance());
}

LabeledGraph star_contract_graph(const LabeledGraph& G, int v) {
  if (!G.has_vertex(v)) throw DomainError("unknown vertex " + std::to_string(v));
  const auto nbrs = G.neighbours(v);
  auto merged = [&](int w) { return std::binary_search(nbrs.begin(), nbrs.end(), w) ? v : w; };
  LabeledGraph out;
  for (int w : G.vertices())
    if (!std::binary_search(nbrs.begin(), nbrs.end(), w)) out.add_vertex(w);
  for (const auto& e : G.edges()) {
    if (e.u == v || e.v == v) continue;
    const int a = merged(e.u), b = merged(e.v);
    if (a == b)
      throw DomainError("star contraction at " + std::to_string(v) + " turns edge " + e.name +
                        " into a loop");
    if (out.has_vertex(a) && out.has_vertex(b) && out.edge_between(a, b))
      throw DomainError("star contraction at " + std::to_string(v) + " creates parallel edges");
    out.add_edge(e.id, a, b, e.name);
  }
  return out;
}

ContractResult star_contract(const LabeledGraph& G, const UniversalBasis& U_G, int v, bool reduce) {
  LabeledGraph graph = star_contract_graph(G, v);
  UniversalBasis basis = star_contract_basis(G, U_G, v);
  const bool exact = G.degree(v) == 2 && graph.degree(v) == 2;
  if (reduce) basis = reduce_primitive(basis);
  // Cross-check the variable layout against the graph's edge order.
  (void)walks_of(graph, basis);
  return {std::move(graph), std::move(basis), !exact && !reduce};
}

UniversalBasis reduce_primitive(const UniversalBasis& U) {
  std::vector<WalkBinomial> walks;
  for (const auto& f : U.elements()) walks.push_back(to_walk(f));
  std::vector<Polynomial> kept;
  for (std::size_t i = 0; i < walks.size(); ++i) {
    const bool divided = std::any_of(walks.begin(), walks.end(),
                                     [&](const WalkBinomial& a) { return sidewise_divides(a, walks[i]); });
    if (!divided) kept.push_back(U.elements()[i]);
  }
  return UniversalBasis(U.ring(), std::move(kept), U.provenance());
}

}  // namespace gbke
