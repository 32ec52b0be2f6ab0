#pragma once

#include "gbke/build_script.hpp"
#include "gbke/toric.hpp"

#include <set>
#include <string>
#include <vector>

namespace fixtures {

using namespace gbke;

inline LabeledGraph named_graph(const std::vector<std::tuple<std::string, int, int>>& edges, int first_id) {
  LabeledGraph g;
  int id = first_id;
  for (const auto& [name, u, v] : edges) g.add_edge(id++, u, v, name);
  return g;
}

// Vertices 1..6; a: 1-2, b: 3-2, c: 3-5, d: 5-6, e: 6-4, f: 3-4, g: 1-3, h: 4-5.
inline LabeledGraph eight_edge_graph() {
  return named_graph({{"a", 1, 2}, {"b", 3, 2}, {"c", 3, 5}, {"d", 5, 6},
                      {"e", 6, 4}, {"f", 3, 4}, {"g", 1, 3}, {"h", 4, 5}}, 0);
}

// Bipartite, vertices 11..16; edges i..o get ids 8..14.
inline LabeledGraph seven_edge_bipartite() {
  return named_graph({{"i", 13, 15}, {"j", 12, 13}, {"k", 11, 12}, {"l", 11, 14},
                      {"m", 14, 16}, {"n", 15, 16}, {"o", 13, 14}}, 8);
}

// 6-cycle a..f on vertices 0..5 with chord g joining 1 and 4:
// a: 0-1, b: 1-2, c: 2-3, d: 3-4, e: 4-5, f: 5-0. Vertex 5 carries e and f.
inline LabeledGraph hexagon_chord_graph() {
  return named_graph({{"a", 0, 1}, {"b", 1, 2}, {"c", 2, 3}, {"d", 3, 4},
                      {"e", 4, 5}, {"f", 5, 0}, {"g", 1, 4}}, 0);
}

inline LabeledGraph hexagon_graph() {
  return named_graph({{"a", 0, 1}, {"b", 1, 2}, {"c", 2, 3}, {"d", 3, 4}, {"e", 4, 5}, {"f", 5, 0}}, 0);
}

inline std::set<std::string> strings(const UniversalBasis& U) {
  std::set<std::string> out;
  for (const auto& f : U.elements()) out.insert(f.to_string());
  return out;
}

// Canonical text of each binomial, sign chosen so the canonically larger
// monomial leads.
inline std::set<std::string> canonical_strings(const Ring& r, const std::vector<std::string>& polys) {
  std::set<std::string> out;
  for (const auto& s : polys) out.insert(to_polynomial(r, to_walk(Polynomial::parse(r, s))).to_string());
  return out;
}

inline std::set<std::string> canonical_strings(const UniversalBasis& U) {
  std::set<std::string> out;
  for (const auto& f : U.elements()) out.insert(to_polynomial(U.ring(), to_walk(f)).to_string());
  return out;
}

inline std::set<WalkBinomial> as_set(const std::vector<WalkBinomial>& v) { return {v.begin(), v.end()}; }

}  // namespace fixtures
