#include "gbke/graph.hpp"

#include "gbke/errors.hpp"

#include <algorithm>
#include <deque>

namespace gbke {

void LabeledGraph::add_vertex(int v) {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) vertices_.insert(it, v);
}

void LabeledGraph::add_edge(int id, int u, int v, std::string name) {
  if (u == v) throw DomainError("loop at vertex " + std::to_string(u));
  if (has_edge(id)) throw DomainError("edge id " + std::to_string(id) + " already used");
  if (has_vertex(u) && has_vertex(v) && edge_between(u, v))
    throw DomainError("parallel edge between " + std::to_string(u) + " and " + std::to_string(v));
  if (name.empty()) name = "e" + std::to_string(id);
  if (has_name(name)) throw DomainError("edge name '" + name + "' already used");
  add_vertex(u);
  add_vertex(v);
  Edge e{id, u, v, std::move(name)};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), id,
                             [](const Edge& a, int x) { return a.id < x; });
  edges_.insert(it, std::move(e));
}

void LabeledGraph::remove_edge(int id) { edges_.erase(edges_.begin() + static_cast<long>(var_of(id))); }

void LabeledGraph::remove_vertex(int v) {
  if (!incident(v).empty()) throw DomainError("vertex " + std::to_string(v) + " is not isolated");
  vertices_.erase(std::remove(vertices_.begin(), vertices_.end(), v), vertices_.end());
}

bool LabeledGraph::has_vertex(int v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

std::optional<std::size_t> LabeledGraph::index_of(int id) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), id,
                             [](const Edge& a, int x) { return a.id < x; });
  if (it == edges_.end() || it->id != id) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

std::size_t LabeledGraph::var_of(int id) const {
  auto i = index_of(id);
  if (!i) throw DomainError("unknown edge id " + std::to_string(id));
  return *i;
}

const Edge& LabeledGraph::edge(int id) const { return edges_[var_of(id)]; }

std::optional<int> LabeledGraph::edge_between(int u, int v) const {
  for (const auto& e : edges_)
    if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) return e.id;
  return std::nullopt;
}

bool LabeledGraph::has_name(const std::string& name) const {
  return std::any_of(edges_.begin(), edges_.end(), [&](const Edge& e) { return e.name == name; });
}

std::vector<int> LabeledGraph::incident(int v) const {
  std::vector<int> out;
  for (const auto& e : edges_)
    if (e.u == v || e.v == v) out.push_back(e.id);
  return out;
}

std::vector<int> LabeledGraph::neighbours(int v) const {
  std::vector<int> out;
  for (const auto& e : edges_)
    if (e.u == v || e.v == v) out.push_back(e.other(v));
  std::sort(out.begin(), out.end());
  return out;
}

bool LabeledGraph::is_bipartite() const {
  std::map<int, int> colour;
  for (int s : vertices_) {
    if (colour.count(s)) continue;
    colour[s] = 0;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      const int x = queue.front();
      queue.pop_front();
      for (int y : neighbours(x)) {
        auto it = colour.find(y);
        if (it == colour.end()) {
          colour[y] = 1 - colour[x];
          queue.push_back(y);
        } else if (it->second == colour[x]) {
          return false;
        }
      }
    }
  }
  return true;
}

Ring LabeledGraph::ring(const Field& field) const {
  if (edges_.empty()) throw DomainError("graph has no edges");
  std::vector<std::string> names;
  for (const auto& e : edges_) names.push_back(e.name);
  return make_ring(field, names);
}

LabeledGraph cycle_graph(std::size_t len, int first_vertex, int first_edge) {
  if (len < 3) throw DomainError("cycle needs at least 3 vertices");
  LabeledGraph g;
  for (std::size_t i = 0; i < len; ++i)
    g.add_edge(first_edge + static_cast<int>(i), first_vertex + static_cast<int>(i),
               first_vertex + static_cast<int>((i + 1) % len));
  return g;
}

LabeledGraph path_graph(std::size_t len, int first_vertex, int first_edge) {
  LabeledGraph g;
  g.add_vertex(first_vertex);
  for (std::size_t i = 0; i < len; ++i)
    g.add_edge(first_edge + static_cast<int>(i), first_vertex + static_cast<int>(i),
               first_vertex + static_cast<int>(i) + 1);
  return g;
}

LabeledGraph complete_bipartite_graph(std::size_t m, std::size_t n, int first_vertex,
                                      int first_edge) {
  LabeledGraph g;
  int id = first_edge;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      g.add_edge(id++, first_vertex + static_cast<int>(i), first_vertex + static_cast<int>(m + j));
  return g;
}

LabeledGraph complete_graph(std::size_t n) {
  LabeledGraph g;
  int id = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) g.add_edge(id++, static_cast<int>(i), static_cast<int>(j));
  return g;
}

nlohmann::json graph_to_json(const LabeledGraph& g) {
  nlohmann::json edges = nlohmann::json::array(), names = nlohmann::json::array();
  for (const auto& e : g.edges()) {
    edges.push_back({e.id, e.u, e.v});
    names.push_back(e.name);
  }
  return {{"vertices", g.vertices()}, {"edges", edges}, {"names", names}};
}

LabeledGraph graph_from_json(const nlohmann::json& j) {
  try {
    LabeledGraph g;
    if (j.contains("vertices"))
      for (const auto& v : j.at("vertices")) g.add_vertex(v.get<int>());
    const auto& edges = j.at("edges");
    const bool named = j.contains("names");
    if (named && j.at("names").size() != edges.size())
      throw DomainError("graph JSON: names and edges differ in length");
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const auto& e = edges[i];
      if (!e.is_array() || e.size() != 3) throw DomainError("graph JSON: edge must be [id, u, v]");
      g.add_edge(e[0].get<int>(), e[1].get<int>(), e[2].get<int>(),
                 named ? j.at("names")[i].get<std::string>() : std::string{});
    }
    return g;
  } catch (const nlohmann::json::exception& ex) {
    throw DomainError(std::string("graph JSON: ") + ex.what());
  }
}

}  // namespace gbke
