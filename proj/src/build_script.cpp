#include "gbke/build_script.hpp"

#include "gbke/errors.hpp"
#include "gbke/random.hpp"

#include <algorithm>

namespace gbke {

using nlohmann::json;

namespace {

struct State {
  LabeledGraph graph;
  std::optional<UniversalBasis> basis;
  bool nonreduced = false;
};

template <class T>
T arg_or(const json& args, const char* key, T fallback) {
  return args.contains(key) ? args.at(key).get<T>() : fallback;
}

LabeledGraph bipartite_from_spec(const json& spec, int first_vertex, int first_edge) {
  const std::string kind = spec.at("kind").get<std::string>();
  if (kind == "cycle") {
    const auto len = spec.at("len").get<std::size_t>();
    if (len % 2 != 0) throw DomainError("odd cycle is not bipartite");
    return cycle_graph(len, first_vertex, first_edge);
  }
  if (kind == "path") return path_graph(spec.at("len").get<std::size_t>(), first_vertex, first_edge);
  if (kind == "complete_bipartite")
    return complete_bipartite_graph(spec.at("m").get<std::size_t>(), spec.at("n").get<std::size_t>(),
                                    first_vertex, first_edge);
  if (kind == "explicit") return graph_from_json(spec.at("graph"));
  throw DomainError("unknown bipartite kind '" + kind + "'");
}

State make_base(const json& base, const Field& field) {
  const std::string kind = base.at("kind").get<std::string>();
  State s;
  if (kind == "cycle") {
    const auto len = base.at("len").get<std::size_t>();
    s.graph = cycle_graph(len);
    if (base.contains("names")) {
      LabeledGraph named;
      const auto names = base.at("names").get<std::vector<std::string>>();
      if (names.size() != len) throw DomainError("base names must match the cycle length");
      for (const auto& e : s.graph.edges()) named.add_edge(e.id, e.u, e.v, names[static_cast<std::size_t>(e.id)]);
      s.graph = named;
    }
  } else if (kind == "explicit") {
    s.graph = graph_from_json(base.at("graph"));
  } else {
    throw DomainError("unknown base kind '" + kind + "'");
  }
  if (base.contains("basis")) {
    const Ring ring = s.graph.ring(field);
    std::vector<Polynomial> elems;
    for (const auto& t : base.at("basis")) elems.push_back(Polynomial::parse(ring, t.get<std::string>()));
    s.basis.emplace(ring, std::move(elems), "build-script");
    for (const auto& w : walks_of(s.graph, *s.basis))
      if (!is_toric_member(w, s.graph)) throw DomainError("base basis element is not in the toric ideal");
  } else {
    s.basis = basis_from_walks(s.graph, primitive_oracle(s.graph), field, "build-script");
  }
  return s;
}

int pick(const std::vector<int>& xs, Rng& rng, const char* what) {
  if (xs.empty()) throw DomainError(std::string("no candidate ") + what);
  return xs[rng.below(xs.size())];
}

std::vector<int> degree_two_vertices(const LabeledGraph& g) {
  std::vector<int> out;
  for (int v : g.vertices())
    if (g.degree(v) == 2) out.push_back(v);
  return out;
}

std::vector<int> contractible_vertices(const LabeledGraph& g) {
  std::vector<int> out;
  for (int v : g.vertices()) {
    if (g.degree(v) == 0 || g.degree(v) == g.num_edges()) continue;
    try {
      (void)star_contract_graph(g, v);
      out.push_back(v);
    } catch (const DomainError&) {
    }
  }
  return out;
}

// Applies one step, filling any missing args from rng into `step.args`.
void apply(State& s, BuildStep& step, Rng& rng, const Field& field) {
  json& a = step.args;
  const UniversalBasis& U = *s.basis;
  if (step.op == "glue_vertex") {
    if (!a.contains("bipartite")) {
      const std::uint64_t r = rng.below(3);
      a["bipartite"] = r == 0 ? json{{"kind", "path"}, {"len", 1 + rng.below(2)}}
                              : json{{"kind", "cycle"}, {"len", r == 1 ? 4 : 6}};
    }
    if (!a.contains("v")) a["v"] = pick(s.graph.vertices(), rng, "vertex");
    const LabeledGraph B =
        bipartite_from_spec(a.at("bipartite"), s.graph.next_vertex_id(), s.graph.next_edge_id());
    if (!a.contains("vb")) a["vb"] = B.vertices().front();
    const UniversalBasis UB = B.num_edges() ? basis_from_walks(B, primitive_oracle(B), field)
                                            : throw DomainError("empty bipartite graph");
    auto out = glue_vertex(s.graph, U, B, UB, a.at("v").get<int>(), a.at("vb").get<int>());
    s.graph = std::move(out.graph);
    s.basis = std::move(out.basis);
  } else if (step.op == "glue_cycle") {
    if (!a.contains("len")) a["len"] = rng.below(2) ? 6 : 4;
    if (!a.contains("edge")) {
      std::vector<int> ids;
      for (const auto& e : s.graph.edges()) ids.push_back(e.id);
      a["edge"] = pick(ids, rng, "edge");
    }
    CycleGlueOptions o;
    o.edge_ids = arg_or(a, "ids", std::vector<int>{});
    o.names = arg_or(a, "names", std::vector<std::string>{});
    o.rename = arg_or(a, "rename", std::string{});
    auto out = glue_cycle(s.graph, U, a.at("len").get<std::size_t>(), a.at("edge").get<int>(), o);
    s.graph = std::move(out.graph);
    s.basis = std::move(out.basis);
  } else if (step.op == "star_subdivide") {
    if (!a.contains("v")) a["v"] = pick(degree_two_vertices(s.graph), rng, "degree-2 vertex");
    auto out = star_subdivide(s.graph, U, a.at("v").get<int>());
    s.graph = std::move(out.graph);
    s.basis = std::move(out.basis);
  } else if (step.op == "star_contract") {
    if (!a.contains("v")) a["v"] = pick(contractible_vertices(s.graph), rng, "contractible vertex");
    if (!a.contains("reduce")) a["reduce"] = false;
    auto out = star_contract(s.graph, U, a.at("v").get<int>(), a.at("reduce").get<bool>());
    s.graph = std::move(out.graph);
    s.basis = std::move(out.basis);
    s.nonreduced = s.nonreduced || out.possibly_nonreduced;
  } else {
    throw DomainError("unknown build op '" + step.op + "'");
  }
}

}  // namespace

BuildResult build(const BuildScript& script, const Field& field) {
  Rng rng(script.seed);
  State s;
  try {
    s = make_base(script.base, field);
  } catch (const DomainError& e) {
    throw DomainError(std::string("build base: ") + e.what());
  } catch (const json::exception& e) {
    throw DomainError(std::string("build base: ") + e.what());
  }
  BuildResult r{s.graph, *s.basis, {s.basis->size()}, script, false};
  for (std::size_t i = 0; i < r.resolved.steps.size(); ++i) {
    try {
      apply(s, r.resolved.steps[i], rng, field);
    } catch (const DomainError& e) {
      throw DomainError("build step " + std::to_string(i) + " (" + r.resolved.steps[i].op + "): " + e.what());
    } catch (const json::exception& e) {
      throw DomainError("build step " + std::to_string(i) + " (" + r.resolved.steps[i].op + "): " + e.what());
    }
    r.sizes.push_back(s.basis->size());
  }
  r.graph = std::move(s.graph);
  r.basis = std::move(*s.basis);
  r.possibly_nonreduced = s.nonreduced;
  return r;
}

json script_to_json(const BuildScript& s) {
  json steps = json::array();
  for (const auto& st : s.steps) steps.push_back({{"op", st.op}, {"args", st.args}});
  return {{"base", s.base}, {"seed", s.seed}, {"steps", steps}};
}

BuildScript script_from_json(const json& j) {
  try {
    BuildScript s;
    s.base = j.at("base");
    s.seed = j.value("seed", std::uint64_t{0});
    if (j.contains("steps"))
      for (const auto& st : j.at("steps"))
        s.steps.push_back({st.at("op").get<std::string>(), st.value("args", json::object())});
    return s;
  } catch (const json::exception& e) {
    throw DomainError(std::string("build script JSON: ") + e.what());
  }
}

BuildScript random_script(std::uint64_t seed, const RandomScriptOptions& opts) {
  Rng rng(seed);
  BuildScript script;
  script.seed = seed;
  script.base = {{"kind", "cycle"}, {"len", rng.below(2) ? 6 : 4}};
  const Field field = default_field();
  State s = make_base(script.base, field);
  static const char* ops[] = {"glue_vertex", "glue_cycle", "star_subdivide", "star_contract"};
  for (std::size_t i = 0; i < opts.steps; ++i) {
    const bool last = i + 1 == opts.steps;
    // A few draws per step; a step that cannot be placed is skipped.
    for (int attempt = 0; attempt < 8; ++attempt) {
      BuildStep step{ops[rng.below(4)], json::object()};
      if (step.op == "star_contract") step.args["reduce"] = !(last && !opts.reduce_final_contraction);
      State trial = s;
      try {
        apply(trial, step, rng, field);
      } catch (const DomainError&) {
        continue;
      }
      if (trial.graph.num_edges() > opts.max_edges || trial.basis->size() == 0) continue;
      s = std::move(trial);
      script.steps.push_back(std::move(step));
      break;
    }
  }
  return script;
}

BuildScript hexagon_chord_script() {
  BuildScript s;
  // Square a, b, g, f on vertices 0..3, then a 4-cycle glued along g.
  s.base = {{"kind", "explicit"},
            {"graph",
             {{"vertices", {0, 1, 2, 3}},
              {"edges", {{0, 0, 1}, {1, 1, 2}, {6, 2, 3}, {5, 3, 0}}},
              {"names", {"a", "b", "g", "f"}}}}};
  s.steps.push_back({"glue_cycle", {{"len", 4}, {"edge", 6}, {"ids", {2, 3, 4}}, {"names", {"c", "d", "e"}}}});
  return s;
}

}  // namespace gbke
