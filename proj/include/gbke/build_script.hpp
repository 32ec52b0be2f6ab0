#pragma once

#include "gbke/toric.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace gbke {

struct BuildStep {
  /// glue_vertex | glue_cycle | star_subdivide | star_contract
  std::string op;
  nlohmann::json args = nlohmann::json::object();

  bool operator==(const BuildStep&) const = default;
};

/// Recipe for a graph and its universal basis.
///
/// base: {"kind": "cycle", "len": n, "names": [...]} or
///       {"kind": "explicit", "graph": <graph json>, "basis": ["a*g - b*f", ...]}
///       (basis omitted: computed by the walk oracle).
/// Step args left out are drawn from an Rng seeded with `seed`.
struct BuildScript {
  nlohmann::json base = {{"kind", "cycle"}, {"len", 4}};
  std::uint64_t seed = 0;
  std::vector<BuildStep> steps;

  bool operator==(const BuildScript&) const = default;
};

struct BuildResult {
  LabeledGraph graph;
  UniversalBasis basis;
  /// Basis size after the base and after each step.
  std::vector<std::size_t> sizes;
  /// The script with every randomly drawn argument filled in.
  BuildScript resolved;
  /// Set once an unreduced star contraction has run.
  bool possibly_nonreduced = false;
};

/// Replays a script. Failures are reported as DomainError naming the step.
BuildResult build(const BuildScript& script, const Field& field = default_field());

nlohmann::json script_to_json(const BuildScript& s);
BuildScript script_from_json(const nlohmann::json& j);

struct RandomScriptOptions {
  std::size_t steps = 4;
  std::size_t max_edges = 12;
  /// Leave the last star contraction unreduced when it ends the script.
  bool reduce_final_contraction = false;
};

/// Seeded random script whose graph never exceeds max_edges. Every argument is
/// explicit, so the result replays without the Rng.
BuildScript random_script(std::uint64_t seed, const RandomScriptOptions& opts = {});

/// The hexagon with a chord: universal basis {ag - bf, ce - dg, ace - bdf}
/// over variables a..g.
BuildScript hexagon_chord_script();

}  // namespace gbke
