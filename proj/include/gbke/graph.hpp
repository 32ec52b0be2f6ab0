#pragma once

#include "gbke/ring.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gbke {

struct Edge {
  int id = 0;
  int u = 0;
  int v = 0;
  std::string name;

  int other(int x) const { return x == u ? v : u; }
  bool operator==(const Edge&) const = default;
};

/// Finite simple graph whose edge ids double as ring variables: the i-th
/// edge in ascending id order is variable i.
class LabeledGraph {
 public:
  LabeledGraph() = default;

  void add_vertex(int v);
  /// DomainError on loops, parallel edges, reused ids or names. Missing
  /// endpoints are added. An empty name becomes "e<id>".
  void add_edge(int id, int u, int v, std::string name = {});
  void remove_edge(int id);
  void remove_vertex(int v);  // must be isolated

  const std::vector<int>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t num_edges() const { return edges_.size(); }

  bool has_vertex(int v) const;
  bool has_edge(int id) const { return index_of(id).has_value(); }
  std::optional<std::size_t> index_of(int id) const;
  /// Variable index of an edge. DomainError on unknown ids.
  std::size_t var_of(int id) const;
  const Edge& edge(int id) const;
  std::optional<int> edge_between(int u, int v) const;
  bool has_name(const std::string& name) const;

  /// Incident edge ids, ascending.
  std::vector<int> incident(int v) const;
  std::size_t degree(int v) const { return incident(v).size(); }
  std::vector<int> neighbours(int v) const;

  int next_edge_id() const { return edges_.empty() ? 0 : edges_.back().id + 1; }
  int next_vertex_id() const { return vertices_.empty() ? 0 : vertices_.back() + 1; }

  /// Two-colouring by BFS.
  bool is_bipartite() const;

  Ring ring(const Field& field) const;

  bool operator==(const LabeledGraph&) const = default;

 private:
  std::vector<int> vertices_;  // ascending
  std::vector<Edge> edges_;    // ascending id
};

/// Simple cycle on `len` vertices with edge ids first_edge.., vertex ids
/// first_vertex.., edge i joining vertex i and i+1.
LabeledGraph cycle_graph(std::size_t len, int first_vertex = 0, int first_edge = 0);
LabeledGraph path_graph(std::size_t len, int first_vertex = 0, int first_edge = 0);
LabeledGraph complete_bipartite_graph(std::size_t m, std::size_t n, int first_vertex = 0,
                                      int first_edge = 0);
LabeledGraph complete_graph(std::size_t n);

// {"vertices": [..], "edges": [[id, u, v], ..], "names": [..]}
nlohmann::json graph_to_json(const LabeledGraph& g);
LabeledGraph graph_from_json(const nlohmann::json& j);

}  // namespace gbke
