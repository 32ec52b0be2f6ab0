#include "gbke/protocol.hpp"

#include "gbke/errors.hpp"
#include "gbke/random.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstring>
#include <ctime>
#include <numeric>
#include <thread>

namespace gbke {

namespace {

constexpr std::uint8_t kVersion = 0x01;
constexpr std::string_view kMagic = "GBKE";

MonomialOrder public_order(std::size_t n) { return MonomialOrder::grevlex(n); }

std::map<Digest, std::size_t> make_tau_table(const KeyList& keys) {
  std::map<Digest, std::size_t> table;
  for (std::size_t i = 0; i < keys.keys.size(); ++i) table.emplace(tau(keys.keys[i].key_bytes), i);
  return table;
}

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  for (int s = 24; s >= 0; s -= 8) out.push_back(static_cast<std::uint8_t>(v >> s));
}

Digest keystream_block(const Digest& key, const Nonce& nonce, std::uint64_t i) {
  std::array<std::uint8_t, 8> ctr{};
  for (int b = 0; b < 8; ++b) ctr[static_cast<std::size_t>(b)] = static_cast<std::uint8_t>(i >> (56 - 8 * b));
  Sha256 h;
  h.update(key);
  h.update(nonce);
  h.update(ctr);
  return h.finish();
}

void xor_keystream(const Digest& key, const Nonce& nonce, std::vector<std::uint8_t>& data) {
  for (std::size_t off = 0, block = 0; off < data.size(); off += 32, ++block) {
    const Digest ks = keystream_block(key, nonce, block);
    for (std::size_t j = 0; j < 32 && off + j < data.size(); ++j) data[off + j] ^= ks[j];
  }
}

}  // namespace

Bundle init(const UniversalBasis& U, const InitOptions& opts, std::optional<BuildScript> script) {
  if (U.size() == 0) throw DomainError("universal basis is empty; the graph has no even closed walk");
  const std::size_t n = U.ring()->num_vars();
  std::vector<Polynomial> R = trim(U, public_order(n));
  // R and U must generate the same ideal.
  for (const auto& f : U.elements())
    if (!normal_form(f, R, public_order(n)).is_zero())
      throw std::logic_error("trimmed basis does not generate the ideal of U");

  EnumerateOptions eo = opts.enumerate;
  eo.k_bound = opts.k_bound ? opts.k_bound : default_k_bound(U);
  if (eo.k_bound <= U.max_exponent())
    throw DomainError("k-bound " + std::to_string(eo.k_bound) + " must exceed the largest exponent " +
                      std::to_string(U.max_exponent()));
  KeyList keys;
  try {
    keys = enumerate_keys(U, eo);
  } catch (const ResourceError&) {
    if (eo.mode != EnumerateOptions::Mode::Exact || !opts.sample_on_cap) throw;
    eo.mode = EnumerateOptions::Mode::Sample;
    keys = enumerate_keys(U, eo);
  }

  Bundle b{PublicParams{U.ring(), std::move(R), {}, std::string(kScheme), std::string(kMarker), std::nullopt},
           PrivateParams{U, std::move(keys), std::nullopt, std::move(script)}};
  b.pub.eta.k_bound = eo.k_bound;
  b.pub.eta.entry_bit_width = entry_bit_width(eo.k_bound);
  if (opts.tau) {
    b.pub.tau = TauSpec{};
    b.priv.tau_table = make_tau_table(b.priv.keys);
  }
  return b;
}

Bundle init(const BuildScript& script, const InitOptions& opts, const Field& field) {
  BuildResult r = build(script, field);
  return init(r.basis, opts, r.resolved);
}

Session keygen_with_order(const PublicParams& pub, const MonomialOrder& order,
                          const GroebnerLimits& limits) {
  const auto G = buchberger(pub.R, order, limits);
  return {order, canonical_key(min_mono_gens(leading_monomials(G, order)), pub.eta.k_bound)};
}

Session keygen(const PublicParams& pub, std::uint64_t seed, const GroebnerLimits& limits) {
  Rng rng(seed);
  return keygen_with_order(pub, random_monomial_order(pub.ring->num_vars(), rng), limits);
}

Digest eta(const GrobnerKey& key) { return eta_digest(key.eta_raw); }
Digest tau(const Digest& key_bytes) { return tau_digest(key_bytes); }

std::vector<std::uint8_t> serialize(const Envelope& env) {
  if (env.mode > 1 || (env.mode == 1) != env.tau_value.has_value())
    throw DomainError("envelope mode and tau field disagree");
  if (env.payload.size() > 0xffffffffu) throw DomainError("payload too large");
  std::vector<std::uint8_t> out(kMagic.begin(), kMagic.end());
  out.push_back(kVersion);
  out.push_back(env.mode);
  out.insert(out.end(), env.nonce.begin(), env.nonce.end());
  if (env.tau_value) out.insert(out.end(), env.tau_value->begin(), env.tau_value->end());
  put_u32(out, static_cast<std::uint32_t>(env.payload.size()));
  out.insert(out.end(), env.payload.begin(), env.payload.end());
  return out;
}

Envelope parse_envelope(std::span<const std::uint8_t> bytes) {
  std::size_t pos = 0;
  auto need = [&](std::size_t k) {
    if (bytes.size() - pos < k) throw DomainError("ciphertext envelope truncated");
  };
  need(6);
  if (!std::equal(kMagic.begin(), kMagic.end(), bytes.begin())) throw DomainError("bad envelope magic");
  if (bytes[4] != kVersion) throw DomainError("unsupported envelope version " + std::to_string(bytes[4]));
  Envelope env;
  env.mode = bytes[5];
  if (env.mode > 1) throw DomainError("bad envelope mode " + std::to_string(env.mode));
  pos = 6;
  need(12);
  std::copy_n(bytes.begin() + 6, 12, env.nonce.begin());
  pos += 12;
  if (env.mode == 1) {
    need(32);
    Digest t;
    std::copy_n(bytes.begin() + static_cast<long>(pos), 32, t.begin());
    env.tau_value = t;
    pos += 32;
  }
  need(4);
  std::uint32_t len = 0;
  for (int i = 0; i < 4; ++i) len = len << 8 | bytes[pos++];
  need(len);
  if (len < kMarker.size()) throw DomainError("payload shorter than the marker");
  env.payload.assign(bytes.begin() + static_cast<long>(pos), bytes.begin() + static_cast<long>(pos + len));
  pos += len;
  if (pos != bytes.size()) throw DomainError("trailing bytes after envelope");
  return env;
}

Envelope encrypt_with_nonce(const Digest& key_bytes, std::span<const std::uint8_t> plaintext,
                            bool attach_tau, const Nonce& nonce) {
  if (plaintext.size() >= 0xffffffffull - kMarker.size()) throw DomainError("plaintext too large");
  Envelope env;
  env.mode = attach_tau ? 1 : 0;
  env.nonce = nonce;
  if (attach_tau) env.tau_value = tau(key_bytes);
  env.payload.resize(kMarker.size() + plaintext.size());
  std::memcpy(env.payload.data(), kMarker.data(), kMarker.size());
  if (!plaintext.empty()) std::memcpy(env.payload.data() + kMarker.size(), plaintext.data(), plaintext.size());
  xor_keystream(key_bytes, nonce, env.payload);
  return env;
}

Envelope encrypt(const Session& s, std::span<const std::uint8_t> plaintext, const PublicParams& pub,
                 std::uint64_t nonce_seed) {
  Rng rng(nonce_seed);
  Nonce nonce;
  for (auto& b : nonce) b = static_cast<std::uint8_t>(rng.below(256));
  return encrypt_with_nonce(s.key.key_bytes, plaintext, pub.tau.has_value(), nonce);
}

bool marker_matches(const Digest& key_bytes, const Envelope& env) {
  if (env.payload.size() < kMarker.size()) return false;
  const Digest ks = keystream_block(key_bytes, env.nonce, 0);
  for (std::size_t j = 0; j < kMarker.size(); ++j)
    if ((env.payload[j] ^ ks[j]) != static_cast<std::uint8_t>(kMarker[j])) return false;
  return true;
}

std::optional<std::vector<std::uint8_t>> decrypt_single(const Digest& key_bytes, const Envelope& env) {
  if (!marker_matches(key_bytes, env)) return std::nullopt;
  std::vector<std::uint8_t> data = env.payload;
  xor_keystream(key_bytes, env.nonce, data);
  return std::vector<std::uint8_t>(data.begin() + static_cast<long>(kMarker.size()), data.end());
}

Decrypted decrypt(const PrivateParams& priv, const Envelope& env, unsigned threads) {
  const auto& keys = priv.keys.keys;
  if (env.mode == 1) {
    if (!env.tau_value) throw DomainError("mode 1 envelope without tau value");
    const auto table = priv.tau_table ? *priv.tau_table : make_tau_table(priv.keys);
    auto it = table.find(*env.tau_value);
    if (it == table.end())
      throw DecryptionFailure(std::string("tau value matches no key") +
                              (priv.keys.sampled ? " (key list is sampled)" : ""));
    auto pt = decrypt_single(keys[it->second].key_bytes, env);
    if (!pt) throw DecryptionFailure("marker mismatch under the key named by tau");
    return {std::move(*pt), 1, it->second};
  }

  std::size_t hit = keys.size();
  if (threads <= 1) {
    for (std::size_t i = 0; i < keys.size(); ++i)
      if (marker_matches(keys[i].key_bytes, env)) {
        hit = i;
        break;
      }
  } else {
    // Lowest matching index wins whatever the scheduling.
    std::atomic<std::size_t> best{keys.size()};
    {
      std::vector<std::jthread> pool;
      for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back([&, t] {
          for (std::size_t i = t; i < best.load(); i += threads)
            if (marker_matches(keys[i].key_bytes, env)) {
              std::size_t cur = best.load();
              while (i < cur && !best.compare_exchange_weak(cur, i)) {
              }
              return;
            }
        });
    }
    hit = best.load();
  }
  if (hit == keys.size())
    throw DecryptionFailure("no key in the list decrypts the envelope" +
                            std::string(priv.keys.sampled ? " (key list is sampled)" : "") + " after " +
                            std::to_string(keys.size()) + " attempts");
  auto pt = decrypt_single(keys[hit].key_bytes, env);
  return {std::move(*pt), hit + 1, hit};
}

AttackReport attack_bounds(std::uint64_t m, std::uint64_t r, std::uint64_t k, std::uint64_t n,
                           std::optional<std::uint64_t> measured) {
  AttackReport rep{m, r, k, n, {}, {}, measured};
  mpz_ui_pow_ui(rep.selection_bound.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(r));
  mpz_ui_pow_ui(rep.log2_brute_force.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(n));
  return rep;
}

AttackReport attack_bounds(const PublicParams& pub, const PrivateParams* priv) {
  std::uint64_t m = 0, r = 0;
  std::optional<std::uint64_t> measured;
  if (priv) {
    r = priv->U.size();
    for (const auto& f : priv->U.elements()) m = std::max<std::uint64_t>(m, f.size());
    measured = priv->keys.keys.size();
  }
  return attack_bounds(m, r, pub.eta.k_bound, pub.ring->num_vars(), measured);
}

json AttackReport::to_json() const {
  json j{{"m", m},
         {"r", r},
         {"k", k},
         {"n", n},
         {"selection_bound", selection_bound.get_str()},
         {"log2_brute_force", log2_brute_force.get_str()}};
  j["measured_keys"] = measured ? json(*measured) : json(nullptr);
  return j;
}

namespace {

// CPU time of the calling thread: on a shared host, wall time also counts
// cycles stolen by other guests.
double thread_cpu_ns() {
  timespec ts{};
  clock_gettime(CLOCK_THREAD_CPUTIME_ID, &ts);
  return static_cast<double>(ts.tv_sec) * 1e9 + static_cast<double>(ts.tv_nsec);
}

template <class F>
double min_time_ns(std::size_t reps, F&& f) {
  double best = 1e300;
  for (std::size_t i = 0; i < std::max<std::size_t>(1, reps); ++i) {
    const double t0 = thread_cpu_ns();
    f();
    best = std::min(best, thread_cpu_ns() - t0);
  }
  return best;
}

}  // namespace

BenchReport bench(const PrivateParams& priv, const PublicParams& pub, const BenchOptions& opts) {
  const auto& keys = priv.keys.keys;
  if (keys.empty()) throw DomainError("key list is empty");
  Rng rng(opts.seed);
  std::vector<std::uint8_t> pt(opts.plaintext_size);
  for (auto& b : pt) b = static_cast<std::uint8_t>(rng.below(256));
  PrivateParams mode0 = priv;
  mode0.tau_table.reset();
  PrivateParams mode1 = priv;
  if (!mode1.tau_table) mode1.tau_table = make_tau_table(priv.keys);

  BenchReport rep;
  rep.keys = keys.size();
  // The host's speed drifts during a run. Every timed call is therefore
  // followed by a fixed calibration workload, and a trial's cost is the median
  // over passes of (call / calibration), scaled back by the median calibration
  // time. Passes visit the trials in a fresh shuffled order.
  struct Trial {
    std::size_t idx;
    Envelope e0, e1;
    std::vector<double> brute, single, tau;
    std::size_t attempts = 0;
  };
  std::vector<Trial> trials;
  trials.reserve(opts.trials);
  for (std::size_t t = 0; t < opts.trials; ++t) {
    const std::size_t idx = rng.below(keys.size());
    Nonce nonce;
    for (auto& b : nonce) b = static_cast<std::uint8_t>(rng.below(256));
    trials.push_back({idx, encrypt_with_nonce(keys[idx].key_bytes, pt, false, nonce),
                      encrypt_with_nonce(keys[idx].key_bytes, pt, true, nonce), {}, {}, {}});
  }
  volatile std::size_t sink = 0;
  const Envelope probe = encrypt_with_nonce(Digest{}, pt, false, Nonce{});
  auto calibrate = [&] {
    return min_time_ns(1, [&] {
      for (std::size_t k = 0; k < 20; ++k) sink = sink + marker_matches(keys[k % keys.size()].key_bytes, probe);
    });
  };
  std::vector<double> calib;
  auto timed_ratio = [&](auto&& f) {
    const double t = min_time_ns(1, f);
    const double c = calibrate();
    calib.push_back(c);
    return t / c;
  };
  std::vector<std::size_t> visit(trials.size());
  std::iota(visit.begin(), visit.end(), std::size_t{0});
  for (std::size_t pass = 0; pass < std::max<std::size_t>(1, opts.reps); ++pass) {
    rng.shuffle(visit);
    for (std::size_t v : visit) {
      Trial& tr = trials[v];
      Decrypted d;
      tr.brute.push_back(timed_ratio([&] { d = decrypt(mode0, tr.e0); }));
      tr.attempts = d.attempts;
      tr.single.push_back(
          timed_ratio([&] { sink = sink + decrypt_single(keys[tr.idx].key_bytes, tr.e0)->size(); }));
      tr.tau.push_back(timed_ratio([&] { sink = sink + decrypt(mode1, tr.e1).attempts; }));
    }
  }
  auto median = [](std::vector<double> v) {
    std::nth_element(v.begin(), v.begin() + static_cast<long>(v.size() / 2), v.end());
    return v[v.size() / 2];
  };
  const double unit = median(calib);
  std::vector<double> xs, ys;
  double single_sum = 0, tau_sum = 0;
  for (const auto& tr : trials) {
    xs.push_back(static_cast<double>(tr.attempts));
    ys.push_back(median(tr.brute) * unit);
    single_sum += median(tr.single) * unit;
    tau_sum += median(tr.tau) * unit;
  }
  const double nt = static_cast<double>(opts.trials);
  rep.single_decrypt_ns = single_sum / nt;
  rep.tau_decrypt_mean_ns = tau_sum / nt;
  rep.brute_force_mean_ns = std::accumulate(ys.begin(), ys.end(), 0.0) / nt;

  const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / nt;
  const double my = rep.brute_force_mean_ns;
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
    syy += (ys[i] - my) * (ys[i] - my);
  }
  rep.slope_ns_per_attempt = sxx > 0 ? sxy / sxx : 0;
  rep.intercept_ns = my - rep.slope_ns_per_attempt * mx;
  rep.r_squared = sxx > 0 && syy > 0 ? (sxy * sxy) / (sxx * syy) : 0;

  const std::size_t n = pub.ring->num_vars();
  const std::size_t kg_trials = std::max<std::size_t>(1, std::min<std::size_t>(opts.trials, 50));
  double kg_sum = 0, base_sum = 0;
  for (std::size_t t = 0; t < kg_trials; ++t) {
    const std::uint64_t seed = rng.next();
    kg_sum += min_time_ns(opts.reps, [&] { sink = sink + keygen(pub, seed).key.eta_raw.size(); });
    Rng orng(seed);
    const MonomialOrder order = random_monomial_order(n, orng);
    base_sum += min_time_ns(opts.reps, [&] {
      sink = sink + buchberger(priv.U.elements(), order).size();
      sink = sink + decrypt_single(keys[0].key_bytes, encrypt_with_nonce(keys[0].key_bytes, pt, false, {}))->size();
    });
  }
  rep.keygen_mean_ns = kg_sum / static_cast<double>(kg_trials);
  rep.baseline_ns = base_sum / static_cast<double>(kg_trials);
  rep.within_bound = rep.brute_force_mean_ns <=
                     static_cast<double>(keys.size()) * rep.single_decrypt_ns * (1.0 + opts.slack);
  return rep;
}

json BenchReport::to_json() const {
  return {{"keys", keys},
          {"clock", "thread-cpu"},
          {"single_decrypt_ns", single_decrypt_ns},
          {"brute_force_mean_ns", brute_force_mean_ns},
          {"tau_decrypt_mean_ns", tau_decrypt_mean_ns},
          {"slope_ns_per_attempt", slope_ns_per_attempt},
          {"intercept_ns", intercept_ns},
          {"r_squared", r_squared},
          {"keygen_mean_ns", keygen_mean_ns},
          {"baseline_ns", baseline_ns},
          {"within_bound", within_bound}};
}

json public_to_json(const PublicParams& pub) {
  json R = json::array(), text = json::array();
  for (const auto& f : pub.R) {
    R.push_back(polynomial_to_json(f));
    text.push_back(f.to_string());
  }
  json j{{"ring", ring_to_json(*pub.ring)},
         {"R_I", R},
         {"R_I_text", text},
         {"eta_spec",
          {{"k_bound", pub.eta.k_bound}, {"entry_bit_width", pub.eta.entry_bit_width}, {"digest", pub.eta.digest}}},
         {"enc_spec", {{"scheme", pub.scheme}, {"marker", pub.marker}}}};
  j["tau_spec"] = pub.tau ? json{{"digest", pub.tau->digest}, {"domain_tag", pub.tau->domain_tag}} : json(nullptr);
  return j;
}

PublicParams public_from_json(const json& j) {
  try {
    Ring ring = ring_from_json(j.at("ring"));
    std::vector<Polynomial> R;
    for (const auto& p : j.at("R_I")) R.push_back(polynomial_from_json(ring, p));
    if (R.empty()) throw DomainError("public bundle has no generators");
    PublicParams pub{ring, std::move(R), {}, {}, {}, std::nullopt};
    const auto& es = j.at("eta_spec");
    pub.eta.k_bound = es.at("k_bound").get<std::uint32_t>();
    pub.eta.entry_bit_width = es.at("entry_bit_width").get<std::uint32_t>();
    pub.eta.digest = es.at("digest").get<std::string>();
    if (pub.eta.entry_bit_width != entry_bit_width(pub.eta.k_bound))
      throw DomainError("eta entry width does not match k_bound");
    if (pub.eta.digest != "SHA-256") throw DomainError("unsupported digest " + pub.eta.digest);
    pub.scheme = j.at("enc_spec").at("scheme").get<std::string>();
    pub.marker = j.at("enc_spec").at("marker").get<std::string>();
    if (pub.scheme != kScheme || pub.marker != kMarker) throw DomainError("unsupported encryption scheme");
    const auto& ts = j.at("tau_spec");
    if (!ts.is_null()) pub.tau = TauSpec{ts.at("digest").get<std::string>(), ts.at("domain_tag").get<std::string>()};
    return pub;
  } catch (const json::exception& e) {
    throw DomainError(std::string("malformed public bundle: ") + e.what());
  }
}

json private_to_json(const PrivateParams& priv) {
  json j{{"U_I", ugb_to_json(priv.U)},
         {"key_list", keylist_to_json(*priv.U.ring(), priv.keys)},
         {"coverage", priv.keys.sampled ? "sampled" : "exact"}};
  if (priv.tau_table) {
    json t = json::object();
    for (const auto& [digest, idx] : *priv.tau_table) t[to_hex(digest)] = idx;
    j["tau_table"] = t;
  } else {
    j["tau_table"] = nullptr;
  }
  j["build_script"] = priv.script ? script_to_json(*priv.script) : json(nullptr);
  return j;
}

PrivateParams private_from_json(const json& j) {
  try {
    UniversalBasis U = ugb_from_json(j.at("U_I"));
    KeyList keys = keylist_from_json(*U.ring(), j.at("key_list"));
    keys.sampled = j.at("coverage").get<std::string>() == "sampled";
    PrivateParams priv{std::move(U), std::move(keys), std::nullopt, std::nullopt};
    if (!j.at("tau_table").is_null()) {
      std::map<Digest, std::size_t> table;
      for (const auto& [hex, idx] : j.at("tau_table").items()) {
        const auto bytes = from_hex(hex);
        if (bytes.size() != 32) throw DomainError("tau table entry is not 32 bytes");
        Digest d;
        std::copy(bytes.begin(), bytes.end(), d.begin());
        const auto i = idx.get<std::size_t>();
        if (i >= priv.keys.keys.size() || tau(priv.keys.keys[i].key_bytes) != d)
          throw DomainError("tau table does not match the key list");
        table.emplace(d, i);
      }
      priv.tau_table = std::move(table);
    }
    if (j.contains("build_script") && !j.at("build_script").is_null())
      priv.script = script_from_json(j.at("build_script"));
    return priv;
  } catch (const json::exception& e) {
    throw DomainError(std::string("malformed private bundle: ") + e.what());
  }
}

}  // namespace gbke
