#include "gbke/cli.hpp"

#include "gbke/errors.hpp"
#include "gbke/groebner.hpp"
#include "gbke/protocol.hpp"
#include "gbke/random.hpp"
#include "gbke/toric.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <set>
#include <sstream>

namespace gbke {

namespace {

struct Globals {
  std::uint64_t seed = 0;
  unsigned threads = 1;
  std::string field = "fp:32003";
  std::uint32_t k_bound = 0;
  std::string mode = "exact";
  std::string tau = "off";
  std::string out;
};

EnumerateOptions enumerate_options(const Globals& g) {
  EnumerateOptions o;
  o.seed = g.seed;
  o.threads = g.threads;
  o.k_bound = g.k_bound;
  if (g.mode == "exact") {
    o.mode = EnumerateOptions::Mode::Exact;
  } else if (g.mode.rfind("sample:", 0) == 0) {
    o.mode = EnumerateOptions::Mode::Sample;
    try {
      std::size_t used = 0;
      const std::string count = g.mode.substr(7);
      o.sample_count = std::stoul(count, &used);
      if (used != count.size() || o.sample_count == 0) throw std::invalid_argument("count");
    } catch (const std::logic_error&) {
      throw DomainError("--mode sample:N needs a positive integer N");
    }
  } else {
    throw DomainError("--mode must be 'exact' or 'sample:N'");
  }
  return o;
}

bool tau_enabled(const Globals& g) {
  if (g.tau == "on") return true;
  if (g.tau == "off") return false;
  throw DomainError("--tau must be 'on' or 'off'");
}

std::vector<std::uint8_t> read_bytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot read " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_bytes(const std::string& path, const std::vector<std::uint8_t>& data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DomainError("cannot write " + path);
  out.write(reinterpret_cast<const char*>(data.data()), static_cast<std::streamsize>(data.size()));
}

// JSON goes to --out when given, otherwise to stdout.
void emit(const Globals& g, const json& j, std::ostream& out) {
  if (g.out.empty())
    out << j.dump(2) << "\n";
  else
    write_json_file(g.out, j);
}

json session_to_json(const PublicParams& pub, const Session& s) {
  KeyList one;
  one.keys.push_back(s.key);
  one.witness_weights.emplace_back();
  return {{"order", order_to_json(s.order)}, {"key", keylist_to_json(*pub.ring, one).at(0)}};
}

Session session_from_json(const PublicParams& pub, const json& j) {
  try {
    KeyList one = keylist_from_json(*pub.ring, json::array({j.at("key")}));
    if (one.keys.size() != 1) throw DomainError("session must hold one key");
    return {order_from_json(j.at("order")), one.keys[0]};
  } catch (const json::exception& e) {
    throw DomainError(std::string("malformed session: ") + e.what());
  }
}

UniversalBasis load_ugb(const std::string& path) { return ugb_from_json(read_json_file(path)); }

void paper_demo(const Globals& g, std::ostream& out) {
  InitOptions o;
  o.tau = tau_enabled(g);
  o.enumerate.threads = g.threads;
  const BuildScript script = hexagon_chord_script();
  const Bundle b = init(script, o, Field::parse(g.field));
  out << "universal basis U_I:\n";
  for (const auto& f : b.priv.U.elements()) out << "  " << f << "\n";
  out << "public generators R_I:\n";
  for (const auto& f : b.pub.R) out << "  " << f << "\n";
  out << "keys (" << b.priv.keys.keys.size() << "):\n";
  const Ring& r = b.pub.ring;
  for (const auto& k : b.priv.keys.keys) {
    std::string gens;
    for (const auto& m : k.gens.monomials) gens += (gens.empty() ? "" : ", ") + format_monomial(*r, m);
    out << "  <" << gens << "> -> " << k.eta_raw << "\n";
  }
  const auto order = MonomialOrder::lex_by_names(*r, {"c", "d", "e", "f", "g", "b", "a"});
  const Session s = keygen_with_order(b.pub, order);
  out << "party B under " << order.describe(*r) << ": K_B = " << s.key.eta_raw << "\n";
  const std::string msg = "hello from party B";
  const Envelope env = encrypt(s, std::vector<std::uint8_t>(msg.begin(), msg.end()), b.pub, g.seed);
  const Decrypted d = decrypt(b.priv, env, g.threads);
  out << "party A recovered \"" << std::string(d.plaintext.begin(), d.plaintext.end()) << "\" after "
      << d.attempts << " attempt(s)\n";
  const AttackReport rep = attack_bounds(b.pub, &b.priv);
  out << "selection bound m^r = " << rep.selection_bound.get_str() << ", measured keys = " << *rep.measured
      << "\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Key establishment from universal Groebner bases of toric graph ideals", "gbke"};
  app.fallthrough();
  app.require_subcommand(0, 1);
  Globals g;
  bool demo = false;
  app.add_option("--seed", g.seed, "Seed for every random choice");
  app.add_option("--threads", g.threads, "Worker threads for enumeration and decryption")->check(CLI::Range(1u, 256u));
  app.add_option("--field", g.field, "Coefficient field: q or fp:P");
  app.add_option("--k-bound", g.k_bound, "Exponent bound k (0 = 1 + largest exponent)");
  app.add_option("--mode", g.mode, "Key enumeration: exact or sample:N");
  app.add_option("--tau", g.tau, "Attach tau to ciphertexts: on or off");
  app.add_option("--out", g.out, "Output file");
  app.add_flag("--paper-demo", demo, "Replay the seven-variable worked example end to end");

  // graph-build, also reachable as "graph build"
  std::string script_path, ugb_out;
  bool oracle_check = false;
  auto add_build_opts = [&](CLI::App* c) {
    c->add_option("--script", script_path, "Build script JSON")->required();
    c->add_option("--ugb", ugb_out, "Where to write the universal basis");
    c->add_flag("--oracle-check", oracle_check, "Compare against the walk oracle");
  };
  CLI::App* graph_build = app.add_subcommand("graph-build", "Replay a build script");
  add_build_opts(graph_build);
  CLI::App* graph = app.add_subcommand("graph", "Graph commands");
  graph->require_subcommand(1);
  CLI::App* graph_build2 = graph->add_subcommand("build", "Replay a build script");
  add_build_opts(graph_build2);

  std::string ugb_path;
  std::size_t verify_orders = 50;
  CLI::App* verify = app.add_subcommand("ugb-verify", "Check the Groebner property under sampled orders");
  verify->add_option("--ugb", ugb_path, "Universal basis JSON")->required();
  verify->add_option("--orders", verify_orders, "Number of random orders");
  std::string verify_lex;
  verify->add_option("--lex", verify_lex, "Check one lex order instead, variables largest first (dabcefg or e0,e1,...)");

  CLI::App* keys_cmd = app.add_subcommand("keys-enumerate", "List every key of a universal basis");
  keys_cmd->add_option("--ugb", ugb_path, "Universal basis JSON")->required();

  std::string pub_path = "pub.json", priv_path = "priv.json", init_ugb;
  CLI::App* proto_init = app.add_subcommand("proto-init", "Party A: build, trim and enumerate");
  auto* init_src = proto_init->add_option_group("source");
  init_src->add_option("--script", script_path, "Build script JSON");
  init_src->add_option("--ugb", init_ugb, "Universal basis JSON");
  init_src->require_option(1);
  proto_init->add_option("--pub", pub_path, "Public bundle output");
  proto_init->add_option("--priv", priv_path, "Private bundle output");

  CLI::App* keygen_cmd = app.add_subcommand("keygen", "Party B: sample an order and derive a key");
  keygen_cmd->add_option("--pub", pub_path, "Public bundle")->required();

  std::string session_path, in_path, text, ct_path;
  bool text_given = false;
  CLI::App* encrypt_cmd = app.add_subcommand("encrypt", "Party B: encrypt under the session key");
  encrypt_cmd->add_option("--pub", pub_path, "Public bundle")->required();
  encrypt_cmd->add_option("--session", session_path, "Session from keygen")->required();
  auto* pt_src = encrypt_cmd->add_option_group("plaintext");
  pt_src->add_option("--in", in_path, "Plaintext file");
  pt_src->add_option("--text", text, "Plaintext string")->each([&](const std::string&) { text_given = true; });
  pt_src->require_option(1);

  CLI::App* decrypt_cmd = app.add_subcommand("decrypt", "Party A: recover the plaintext");
  decrypt_cmd->add_option("--priv", priv_path, "Private bundle")->required();
  decrypt_cmd->add_option("--ct", ct_path, "Ciphertext envelope")->required();

  std::uint64_t m = 0, r = 0, k = 0, n = 0;
  CLI::App* attack = app.add_subcommand("attack-bounds", "Report key-count and brute-force bounds");
  attack->add_option("--pub", pub_path, "Public bundle");
  attack->add_option("--priv", priv_path, "Private bundle");
  attack->add_option("-m", m, "Largest term count");
  attack->add_option("-r", r, "Basis size");
  attack->add_option("-k", k, "Exponent bound");
  attack->add_option("-n", n, "Number of variables");

  BenchOptions bo;
  CLI::App* bench_cmd = app.add_subcommand("bench", "Time brute-force and tau decryption");
  bench_cmd->add_option("--pub", pub_path, "Public bundle")->required();
  bench_cmd->add_option("--priv", priv_path, "Private bundle")->required();
  bench_cmd->add_option("--trials", bo.trials, "Trials");
  bench_cmd->add_option("--size", bo.plaintext_size, "Plaintext bytes");
  bench_cmd->add_option("--slack", bo.slack, "Allowed slack over N*C");

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (demo) {
      paper_demo(g, out);
      return 0;
    }
    const Field field = Field::parse(g.field);
    if (*graph_build || *graph_build2) {
      const BuildResult res = build(script_from_json(read_json_file(script_path)), field);
      if (oracle_check) {
        const auto filtered = walks_of(res.graph, reduce_primitive(res.basis));
        const auto oracle = primitive_oracle(res.graph, OracleOptions{0, 10'000'000, g.threads});
        if (std::set<WalkBinomial>(filtered.begin(), filtered.end()) !=
            std::set<WalkBinomial>(oracle.begin(), oracle.end()))
          throw DomainError("constructed basis differs from the walk oracle");
        err << "oracle check passed (" << oracle.size() << " primitive binomials)\n";
      }
      emit(g, graph_to_json(res.graph), out);
      if (!ugb_out.empty()) write_json_file(ugb_out, ugb_to_json(res.basis));
      err << "basis sizes:";
      for (auto s : res.sizes) err << " " << s;
      err << (res.possibly_nonreduced ? " (possibly nonreduced)" : "") << "\n";
    } else if (*verify) {
      const UniversalBasis U = load_ugb(ugb_path);
      Rng rng(g.seed);
      const std::size_t nv = U.ring()->num_vars();
      std::size_t passed = 0;
      json failures = json::array();
      std::vector<MonomialOrder> orders;
      json extra = json::object();
      if (!verify_lex.empty()) {
        std::vector<std::string> names;
        if (verify_lex.find(',') != std::string::npos) {
          std::stringstream ss(verify_lex);
          for (std::string v; std::getline(ss, v, ',');) names.push_back(v);
        } else {
          for (char c : verify_lex) names.emplace_back(1, c);
        }
        const auto order = MonomialOrder::lex_by_names(*U.ring(), names);
        orders.push_back(order);
        // The reduced basis of the ideal under this order, for comparison.
        const auto G = buchberger(U.elements(), order);
        json basis = json::array(), initial = json::array();
        for (const auto& f : G) basis.push_back(f.to_string());
        for (const auto& e : min_mono_gens(leading_monomials(G, order)).monomials)
          initial.push_back(format_monomial(*U.ring(), e));
        extra = {{"reduced_basis", basis}, {"initial_ideal", initial}};
      } else {
        orders = {MonomialOrder::lex(nv), MonomialOrder::grevlex(nv)};
        for (std::size_t i = 0; i < verify_orders; ++i) orders.push_back(random_monomial_order(nv, rng));
      }
      for (const auto& o : orders) {
        if (verify_gb_under_order(U, o))
          ++passed;
        else
          failures.push_back(order_to_json(o));
      }
      json report = {{"orders", orders.size()}, {"passed", passed}, {"failures", failures}};
      report.update(extra);
      emit(g, report, out);
      if (passed != orders.size()) throw DomainError("not a Groebner basis under every sampled order");
    } else if (*keys_cmd) {
      const UniversalBasis U = load_ugb(ugb_path);
      const KeyList keys = enumerate_keys(U, enumerate_options(g));
      emit(g, keylist_to_json(*U.ring(), keys), out);
      err << keys.keys.size() << " keys (" << (keys.sampled ? "sampled" : "exact") << ")\n";
    } else if (*proto_init) {
      InitOptions o;
      o.k_bound = g.k_bound;
      o.tau = tau_enabled(g);
      o.enumerate = enumerate_options(g);
      const Bundle b = script_path.empty()
                           ? init(load_ugb(init_ugb), o)
                           : init(script_from_json(read_json_file(script_path)), o, field);
      write_json_file(pub_path, public_to_json(b.pub));
      write_json_file(priv_path, private_to_json(b.priv));
      err << b.priv.keys.keys.size() << " keys (" << (b.priv.keys.sampled ? "sampled" : "exact") << "), "
          << b.pub.R.size() << " public generators\n";
    } else if (*keygen_cmd) {
      const PublicParams pub = public_from_json(read_json_file(pub_path));
      emit(g, session_to_json(pub, keygen(pub, g.seed)), out);
    } else if (*encrypt_cmd) {
      const PublicParams pub = public_from_json(read_json_file(pub_path));
      const Session s = session_from_json(pub, read_json_file(session_path));
      const std::vector<std::uint8_t> pt =
          text_given ? std::vector<std::uint8_t>(text.begin(), text.end()) : read_bytes(in_path);
      const auto wire = serialize(encrypt(s, pt, pub, g.seed));
      if (g.out.empty())
        out.write(reinterpret_cast<const char*>(wire.data()), static_cast<std::streamsize>(wire.size()));
      else
        write_bytes(g.out, wire);
    } else if (*decrypt_cmd) {
      const PrivateParams priv = private_from_json(read_json_file(priv_path));
      const Decrypted d = decrypt(priv, parse_envelope(read_bytes(ct_path)), g.threads);
      if (g.out.empty())
        out.write(reinterpret_cast<const char*>(d.plaintext.data()), static_cast<std::streamsize>(d.plaintext.size()));
      else
        write_bytes(g.out, d.plaintext);
      err << "attempts: " << d.attempts << "\n";
    } else if (*attack) {
      AttackReport rep;
      if (attack->count("--pub")) {
        const PublicParams pub = public_from_json(read_json_file(pub_path));
        if (attack->count("--priv")) {
          const PrivateParams priv = private_from_json(read_json_file(priv_path));
          rep = attack_bounds(pub, &priv);
        } else {
          rep = attack_bounds(pub, nullptr);
        }
      } else {
        if (!m || !r || !k || !n) throw DomainError("attack-bounds needs --pub or all of -m -r -k -n");
        rep = attack_bounds(m, r, k, n);
      }
      emit(g, rep.to_json(), out);
    } else if (*bench_cmd) {
      bo.seed = g.seed;
      const PublicParams pub = public_from_json(read_json_file(pub_path));
      const PrivateParams priv = private_from_json(read_json_file(priv_path));
      emit(g, bench(priv, pub, bo).to_json(), out);
    } else {
      out << app.help();
      return 1;
    }
    return 0;
  } catch (const DecryptionFailure& e) {
    err << "decryption failed: " << e.what() << "\n";
    return 3;
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace gbke
