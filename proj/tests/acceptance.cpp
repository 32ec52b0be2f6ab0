// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
#include "fixtures.hpp"

#include "gbke/groebner.hpp"
#include "gbke/protocol.hpp"
#include "gbke/random.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

using namespace gbke;
using namespace fixtures;

namespace {

struct Outcome {
  bool ok = true;
  std::string failures;
  std::ostringstream note;

  void check(bool cond, const std::string& what) {
    if (cond) return;
    failures += (ok ? "" : "; ") + what;
    ok = false;
  }
};

using Clock = std::chrono::steady_clock;

bool report(int id, double limit_s, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto t0 = Clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.check(false, std::string("exception: ") + e.what());
  }
  const double s = std::chrono::duration<double>(Clock::now() - t0).count();
  o.check(s < limit_s, "over time limit");
  std::printf("criterion %d: %s (%.3f s, limit %.0f s) %s%s%s\n", id, o.ok ? "PASS" : "FAIL", s, limit_s,
              o.failures.c_str(), o.failures.empty() ? "" : " | ", o.note.str().c_str());
  std::fflush(stdout);
  return o.ok;
}

Ring seven() { return make_ring(default_field(), "abcdefg"); }

Polynomial P(const Ring& r, const std::string& s) { return Polynomial::parse(r, s); }

UniversalBasis hexagon_chord_basis() {
  const Ring r = seven();
  return UniversalBasis(r, {P(r, "a*g - b*f"), P(r, "c*e - d*g"), P(r, "a*c*e - b*d*f")});
}

UniversalBasis oracle_ugb(const LabeledGraph& g) {
  return basis_from_walks(g, primitive_oracle(g), default_field());
}

std::set<std::string> texts(const std::vector<Polynomial>& G) {
  std::set<std::string> out;
  for (const auto& f : G) out.insert(f.to_string());
  return out;
}

// Larger constructed instance used by the cost and round-trip criteria.
BuildScript large_script() {
  RandomScriptOptions o;
  o.steps = 8;
  o.max_edges = 20;
  o.reduce_final_contraction = true;
  return random_script(31, o);
}

void criterion1(Outcome& o) {
  const UniversalBasis U = hexagon_chord_basis();
  const KeyList keys = enumerate_keys(U, {});
  std::set<std::string> got;
  for (const auto& k : keys.keys) got.insert(k.eta_raw);
  const std::set<std::string> want{"10000010010100", "100000101010100001001", "101010010000010001001",
                                   "01000100010100", "01000100001001"};
  o.check(keys.keys.size() == 5, "expected 5 keys, got " + std::to_string(keys.keys.size()));
  o.check(got == want, "bitstrings differ");
  const Ring r = U.ring();
  o.check(texts(trim(U, MonomialOrder::lex(7))) == texts({P(r, "a*g - b*f"), P(r, "c*e - d*g")}),
          "trim under lex differs");
}

void criterion2(Outcome& o) {
  const Ring r = seven();
  const auto order = MonomialOrder::lex_by_names(*r, {"d", "a", "b", "c", "e", "f", "g"});
  const auto G = buchberger({P(r, "a*g - b*f"), P(r, "c*e - d*g")}, order);
  o.check(reduce_groebner_basis(G, order) == G, "basis not reduced");
  o.check(is_groebner_basis(G, order), "not a Groebner basis");
  const MonomialSet in = min_mono_gens(leading_monomials(G, order));
  o.check(in == min_mono_gens({parse_monomial(*r, "a*g"), parse_monomial(*r, "b*d*f"), parse_monomial(*r, "d*g")}),
          "initial ideal differs");
  o.check(s_polynomial(P(r, "d*g - c*e"), P(r, "a*g - b*f"), order) == P(r, "b*d*f - a*c*e"),
          "S-polynomial differs");
}

void criterion3(Outcome& o) {
  {
    const LabeledGraph G = eight_edge_graph(), H = seven_edge_bipartite();
    const auto out = glue_vertex(G, oracle_ugb(G), H, oracle_ugb(H), 1, 11);
    o.check(canonical_strings(out.basis) ==
                canonical_strings(out.basis.ring(), {"c*e - d*f", "a*c*f - b*g*h", "a*c^2*e - b*d*g*h",
                                                     "a*d*f^2 - b*e*g*h", "i*m - n*o", "j*l - o*k",
                                                     "i*k*m - j*l*n"}),
            "(a) vertex gluing differs");
  }
  {
    const LabeledGraph G = hexagon_chord_graph();
    const Ring r = G.ring(default_field());
    const UniversalBasis U(r, {P(r, "a*c*e - b*d*f"), P(r, "a*e - f*g"), P(r, "b*d - c*g")});
    o.check(canonical_strings(U) == canonical_strings(oracle_ugb(G)), "(b) source basis differs from oracle");
    const UniversalBasis img = star_contract_basis(G, U, 5);
    o.check(canonical_strings(img) == canonical_strings(img.ring(), {"a*c - b*d", "a - g", "b*d - c*g"}),
            "(b) star contraction differs");
  }
  {
    const LabeledGraph G = hexagon_graph();
    CycleGlueOptions opt;
    opt.names = {"g", "h", "i"};
    opt.rename = "k";
    const auto out = glue_cycle(G, oracle_ugb(G), 4, 3, opt);
    o.check(canonical_strings(out.basis) ==
                canonical_strings(out.basis.ring(), {"a*c*e - b*f*k", "h*k - i*g", "a*c*e*h - b*f*g*i"}),
            "(c) cycle gluing differs");
  }
}

void criterion4(Outcome& o) {
  std::size_t max_edges = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const BuildScript s = random_script(seed);
    const BuildResult res = build(s);
    max_edges = std::max(max_edges, res.graph.num_edges());
    if (as_set(walks_of(res.graph, reduce_primitive(res.basis))) != as_set(primitive_oracle(res.graph))) {
      o.check(false, "seed " + std::to_string(seed) + " differs from the oracle");
    }
  }
  o.check(max_edges <= 12, "graph exceeds 12 edges");
  o.note << "100 scripts, up to " << max_edges << " edges";
}

std::vector<std::pair<std::string, UniversalBasis>> universal_instances() {
  std::vector<std::pair<std::string, UniversalBasis>> out;
  out.emplace_back("hexagon-chord", hexagon_chord_basis());
  const LabeledGraph G = eight_edge_graph(), H = seven_edge_bipartite();
  out.emplace_back("vertex-glued", glue_vertex(G, oracle_ugb(G), H, oracle_ugb(H), 1, 11).basis);
  BuildScript s = hexagon_chord_script();
  s.steps.push_back({"glue_cycle", {{"len", 6}}});
  s.steps.push_back({"star_subdivide", json::object()});
  s.seed = 3;
  out.emplace_back("hexagon-chord+hexagon+subdivide", build(s).basis);
  RandomScriptOptions ro;
  ro.steps = 6;
  ro.max_edges = 14;
  ro.reduce_final_contraction = true;
  out.emplace_back("random-script-5", build(random_script(5, ro)).basis);
  return out;
}

void criterion5(Outcome& o) {
  std::size_t total = 0;
  for (const auto& [name, U] : universal_instances()) {
    const Bundle b = init(U);
    if (b.priv.keys.sampled) {
      o.check(false, name + ": key list not exact");
      continue;
    }
    std::set<std::vector<Exponent>> listed;
    for (const auto& k : b.priv.keys.keys) listed.insert(k.gens.monomials);
    const std::size_t n = U.ring()->num_vars();
    Rng rng(1000 + total);
    std::size_t bad_gb = 0, outside = 0;
    for (int i = 0; i < 500; ++i) {
      const MonomialOrder order = random_monomial_order(n, rng);
      if (!verify_gb_under_order(U, order)) ++bad_gb;
      if (!listed.count(keygen_with_order(b.pub, order).key.gens.monomials)) ++outside;
    }
    o.check(bad_gb == 0, name + ": " + std::to_string(bad_gb) + " orders break the Groebner property");
    o.check(outside == 0, name + ": " + std::to_string(outside) + " keys outside the list");
    o.note << name << " (" << U.size() << " elements, " << b.priv.keys.keys.size() << " keys); ";
    total += 500;
  }
  o.note << total << " orders";
}

void criterion6(Outcome& o) {
  InitOptions on, off;
  on.tau = true;
  const Bundle small_on = init(hexagon_chord_script(), on), small_off = init(hexagon_chord_script(), off);
  const Bundle large_on = init(large_script(), on), large_off = init(large_script(), off);
  const Bundle* bundles[] = {&small_off, &small_on, &large_off, &large_on};
  Rng rng(6);
  std::size_t failures = 0;
  std::size_t max_attempts[2] = {0, 0};
  for (int i = 0; i < 1000; ++i) {
    const Bundle& b = *bundles[i % 4];
    const Session s = keygen(b.pub, rng.next());
    std::vector<std::uint8_t> pt(rng.below(64 * 1024 + 1));
    for (auto& x : pt) x = static_cast<std::uint8_t>(rng.below(256));
    const Envelope env = parse_envelope(serialize(encrypt(s, pt, b.pub, rng.next())));
    const Decrypted d = decrypt(b.priv, env, 1);
    const std::size_t N = b.priv.keys.keys.size();
    const bool mode1 = b.pub.tau.has_value();
    bool ok = d.plaintext == pt && env.mode == (mode1 ? 1 : 0);
    ok = ok && (mode1 ? d.attempts == 1 : d.attempts >= 1 && d.attempts <= N);
    if (!ok) ++failures;
    max_attempts[mode1] = std::max(max_attempts[mode1], d.attempts);
  }
  o.check(failures == 0, std::to_string(failures) + " failed cycles");
  o.note << "N = " << small_off.priv.keys.keys.size() << " and " << large_off.priv.keys.keys.size()
         << "; max attempts mode 0 = " << max_attempts[0] << ", mode 1 = " << max_attempts[1];
}

void criterion7(Outcome& o) {
  const Bundle hex = init(hexagon_chord_script());
  const AttackReport rep = attack_bounds(hex.pub, &hex.priv);
  o.check(rep.selection_bound == 8 && rep.measured == 5u, "hexagon-chord bound/measured not 8/5");
  std::size_t instances = 1;
  auto within = [&](const Bundle& b, const std::string& name) {
    const AttackReport a = attack_bounds(b.pub, &b.priv);
    o.check(a.measured && mpz_class(static_cast<unsigned long>(*a.measured)) <= a.selection_bound,
            name + " exceeds m^r");
    ++instances;
  };
  for (const auto& [name, U] : universal_instances()) within(init(U), name);
  for (std::uint64_t seed = 0; seed < 20; ++seed) within(init(random_script(seed)), "random " + std::to_string(seed));
  o.note << "bound " << rep.selection_bound.get_str() << " vs measured " << *rep.measured << "; " << instances
         << " instances within m^r";
}

void criterion8(Outcome& o) {
  const Bundle b = init(large_script());
  const std::size_t N = b.priv.keys.keys.size();
  o.check(N >= 50, "instance has only " + std::to_string(N) + " keys");
  BenchOptions opt;
  opt.trials = 300;
  opt.slack = 0.5;
  opt.seed = 8;
  opt.reps = 25;
  const BenchReport rep = bench(b.priv, b.pub, opt);
  o.check(rep.within_bound, "brute force exceeds N*C*1.5");
  o.check(rep.r_squared >= 0.9, "R^2 below 0.9");
  o.check(rep.keygen_mean_ns <= 10 * rep.baseline_ns, "keygen over 10x baseline");
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "N = %zu, C = %.0f ns, brute mean = %.0f ns (bound %.0f), R^2 = %.4f, keygen %.0f ns vs baseline %.0f ns",
                N, rep.single_decrypt_ns, rep.brute_force_mean_ns, 1.5 * static_cast<double>(N) * rep.single_decrypt_ns,
                rep.r_squared, rep.keygen_mean_ns, rep.baseline_ns);
  o.note << buf;
}

void criterion9(Outcome& o) {
  std::size_t checked = 0;
  auto run = [&](const UniversalBasis& U, const std::string& name) {
    const KeyList keys = enumerate_keys(U, {});
    const std::uint32_t k = default_k_bound(U);
    for (std::size_t i = 0; i < keys.keys.size(); ++i) {
      ++checked;
      if (!keys.witness_weights[i]) {
        o.check(false, name + ": key without witness");
        continue;
      }
      const GrobnerKey again = key_under_order(U, witness_order(*keys.witness_weights[i]), k);
      o.check(again.gens == keys.keys[i].gens, name + ": witness " + std::to_string(i) + " disagrees");
    }
  };
  for (const auto& [name, U] : universal_instances()) run(U, name);
  for (std::uint64_t seed = 0; seed < 10; ++seed) run(build(random_script(seed)).basis, "random");
  o.note << checked << " keys";
}

}  // namespace

int main() {
  bool ok = true;
  ok &= report(1, 1, criterion1);
  ok &= report(2, 1, criterion2);
  ok &= report(3, 5, criterion3);
  ok &= report(4, 600, criterion4);
  ok &= report(5, 600, criterion5);
  ok &= report(6, 300, criterion6);
  ok &= report(7, 1, criterion7);
  ok &= report(8, 300, criterion8);
  ok &= report(9, 60, criterion9);
  std::printf("%s\n", ok ? "all criteria PASS" : "some criteria FAIL");
  return ok ? 0 : 1;
}
