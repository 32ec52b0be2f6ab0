#pragma once

#include "gbke/graph.hpp"
#include "gbke/ugb.hpp"

#include <cstdint>
#include <vector>

namespace gbke {

/// Binomial x^plus - x^minus over a graph's edge ring.
struct WalkBinomial {
  Exponent plus;
  Exponent minus;

  bool operator==(const WalkBinomial&) const = default;
  auto operator<=>(const WalkBinomial&) const = default;
};

/// Orients so that plus is the canonically larger side.
WalkBinomial oriented(WalkBinomial b);
Polynomial to_polynomial(const Ring& ring, const WalkBinomial& b);
/// DomainError unless p is c*(x^a - x^b).
WalkBinomial to_walk(const Polynomial& p);

/// phi_G(plus) == phi_G(minus): every vertex sees equal incidence counts on
/// both sides. Exponents are indexed by the graph's variable order.
bool is_toric_member(const WalkBinomial& b, const LabeledGraph& g);

/// True when a sidewise divides b (in either orientation) and a != b up to sign.
bool sidewise_divides(const WalkBinomial& a, const WalkBinomial& b);

/// Dedupes up to sign, drops every binomial that another one sidewise
/// divides, and sorts.
std::vector<WalkBinomial> primitive_filter(std::vector<WalkBinomial> bs);

struct OracleOptions {
  /// 0 means 4 * |E|.
  std::size_t max_len = 0;
  std::uint64_t max_partial_walks = 10'000'000;
  unsigned threads = 1;
};

/// Primitive binomials of I_G from closed even walks in which every edge
/// occurs on one side only and at most twice. ResourceError past the walk
/// budget.
std::vector<WalkBinomial> primitive_oracle(const LabeledGraph& g, const OracleOptions& opts = {});

/// Independent second oracle: integer kernel vectors of the incidence map with
/// entries in [-2, 2], reduced to the conformally minimal ones.
std::vector<WalkBinomial> primitive_oracle_kernel(const LabeledGraph& g,
                                                  std::uint64_t max_nodes = 50'000'000);

struct ToricBasis {
  LabeledGraph graph;
  UniversalBasis basis;
};

UniversalBasis basis_from_walks(const LabeledGraph& g, const std::vector<WalkBinomial>& walks,
                                const Field& field, std::string provenance = {});
std::vector<WalkBinomial> walks_of(const LabeledGraph& g, const UniversalBasis& U);
/// Graph together with its oracle basis.
ToricBasis oracle_basis(const LabeledGraph& g, const Field& field = default_field());

/// Identifies vG in G with vB in B. B must be bipartite; the remaining vertex
/// ids, edge ids and edge names of the two graphs must be disjoint.
ToricBasis glue_vertex(const LabeledGraph& G, const UniversalBasis& U_G, const LabeledGraph& B,
                       const UniversalBasis& U_B, int vG, int vB);

struct CycleGlueOptions {
  /// Ids and names of the 2k-1 new edges, in path order from the edge's
  /// first endpoint. Missing entries are allocated from next_edge_id / "e<id>".
  std::vector<int> edge_ids;
  std::vector<std::string> names;
  /// New name for the glued edge; empty keeps it.
  std::string rename;
};

/// Glues an even cycle of length cycle_len along edge eG.
ToricBasis glue_cycle(const LabeledGraph& G, const UniversalBasis& U_G, std::size_t cycle_len,
                      int eG, const CycleGlueOptions& opts = {});

struct SubdivideOptions {
  /// Ids of x', y' and of the two new vertices; -1 allocates.
  int x_prime_id = -1;
  int y_prime_id = -1;
  int vertex_a = -1;
  int vertex_b = -1;
};

/// Star subdivision at a degree-2 vertex v with incident edges x < y (by id):
/// basis image under x -> x x', y -> y y'.
ToricBasis star_subdivide(const LabeledGraph& G, const UniversalBasis& U_G, int v,
                          const SubdivideOptions& opts = {});

/// Image of U under pi_v (edges at v set to 1) over the ring of the remaining
/// edges. Zero and constant images are dropped, shared factors cancelled and
/// duplicates removed up to sign. No simplicity requirement.
UniversalBasis star_contract_basis(const LabeledGraph& G, const UniversalBasis& U_G, int v);

/// Contracted graph with every neighbour of v merged into v.
/// DomainError when the result has loops or parallel edges.
LabeledGraph star_contract_graph(const LabeledGraph& G, int v);

struct ContractResult {
  LabeledGraph graph;
  UniversalBasis basis;
  /// False only when v has degree 2 before and after, where the image is
  /// exactly the primitive set.
  bool possibly_nonreduced = true;
};

ContractResult star_contract(const LabeledGraph& G, const UniversalBasis& U_G, int v,
                             bool reduce = false);

/// Drops elements that another element sidewise divides.
UniversalBasis reduce_primitive(const UniversalBasis& U);

}  // namespace gbke
