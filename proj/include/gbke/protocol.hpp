#pragma once

#include "gbke/build_script.hpp"
#include "gbke/json_io.hpp"
#include "gbke/ugb.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace gbke {

inline constexpr std::string_view kMarker = "GBMARKER";
inline constexpr std::string_view kScheme = "xor-sha256-keystream";

struct EtaSpec {
  std::uint32_t k_bound = 2;
  std::uint32_t entry_bit_width = 1;
  std::string digest = "SHA-256";
};

struct TauSpec {
  std::string digest = "SHA-256";
  std::string domain_tag = "GBKE-TAU";
};

/// Everything Party B needs: the ring, a generating set of I, and the fixed
/// key-derivation and cipher choices.
struct PublicParams {
  Ring ring;
  std::vector<Polynomial> R;
  EtaSpec eta;
  std::string scheme{kScheme};
  std::string marker{kMarker};
  std::optional<TauSpec> tau;
};

/// Party A's side: the universal basis, its key list and the recipe that built it.
struct PrivateParams {
  UniversalBasis U;
  KeyList keys;
  /// tau value -> index into keys; present iff tau is enabled.
  std::optional<std::map<Digest, std::size_t>> tau_table;
  std::optional<BuildScript> script;
};

struct InitOptions {
  /// 0 picks 1 + the largest exponent in U.
  std::uint32_t k_bound = 0;
  bool tau = false;
  EnumerateOptions enumerate;
  /// Exact mode falls back to sampling when the selection cap is exceeded.
  bool sample_on_cap = true;
};

struct Bundle {
  PublicParams pub;
  PrivateParams priv;
};

Bundle init(const UniversalBasis& U, const InitOptions& opts = {},
            std::optional<BuildScript> script = std::nullopt);
Bundle init(const BuildScript& script, const InitOptions& opts = {},
            const Field& field = default_field());

struct Session {
  MonomialOrder order;
  GrobnerKey key;
};

/// Party B: random order, one Buchberger run on R, key from the initial ideal.
Session keygen(const PublicParams& pub, std::uint64_t seed, const GroebnerLimits& limits = {});
Session keygen_with_order(const PublicParams& pub, const MonomialOrder& order,
                          const GroebnerLimits& limits = {});

Digest eta(const GrobnerKey& key);
Digest tau(const Digest& key_bytes);

using Nonce = std::array<std::uint8_t, 12>;

struct Envelope {
  std::uint8_t mode = 0;  // 1 when a tau value is attached
  Nonce nonce{};
  std::optional<Digest> tau_value;
  std::vector<std::uint8_t> payload;

  bool operator==(const Envelope&) const = default;
};

std::vector<std::uint8_t> serialize(const Envelope& env);
/// DomainError on bad magic, version, mode, truncation or trailing bytes.
Envelope parse_envelope(std::span<const std::uint8_t> bytes);

/// Keystream XOR over (marker || plaintext).
Envelope encrypt(const Session& s, std::span<const std::uint8_t> plaintext, const PublicParams& pub,
                 std::uint64_t nonce_seed);
Envelope encrypt_with_nonce(const Digest& key_bytes, std::span<const std::uint8_t> plaintext,
                            bool attach_tau, const Nonce& nonce);

/// Cheap check: the first keystream block reveals the marker.
bool marker_matches(const Digest& key_bytes, const Envelope& env);
/// Full decryption with one key; nullopt when the marker does not match.
std::optional<std::vector<std::uint8_t>> decrypt_single(const Digest& key_bytes, const Envelope& env);

struct Decrypted {
  std::vector<std::uint8_t> plaintext;
  std::size_t attempts = 0;
  std::size_t key_index = 0;
};

/// Mode 0 tries keys in list order (first match wins, attempts = index + 1);
/// mode 1 looks the tau value up. DecryptionFailure when nothing matches.
Decrypted decrypt(const PrivateParams& priv, const Envelope& env, unsigned threads = 1);

struct AttackReport {
  std::uint64_t m = 0;  // largest term count of an element of U
  std::uint64_t r = 0;  // |U|
  std::uint64_t k = 0;  // exponent bound
  std::uint64_t n = 0;  // number of variables
  mpz_class selection_bound;  // m^r
  mpz_class log2_brute_force;  // k^n, i.e. log2 of 2^(k^n)
  std::optional<std::uint64_t> measured;

  json to_json() const;
};

AttackReport attack_bounds(std::uint64_t m, std::uint64_t r, std::uint64_t k, std::uint64_t n,
                           std::optional<std::uint64_t> measured = std::nullopt);
AttackReport attack_bounds(const PublicParams& pub, const PrivateParams* priv);

struct BenchOptions {
  std::size_t trials = 200;
  std::size_t plaintext_size = 64;
  double slack = 0.5;
  std::uint64_t seed = 0;
  /// Passes over all trials; per trial the calibrated median is kept.
  std::size_t reps = 5;
};

struct BenchReport {
  std::size_t keys = 0;
  // Costs are thread CPU time, calibrated against a fixed workload.
  double single_decrypt_ns = 0;     // C
  double brute_force_mean_ns = 0;   // mean over trials, mode 0
  double tau_decrypt_mean_ns = 0;   // mode 1
  double slope_ns_per_attempt = 0;
  double intercept_ns = 0;
  double r_squared = 0;
  double keygen_mean_ns = 0;        // Party B
  double baseline_ns = 0;           // one single decrypt plus one Buchberger run
  bool within_bound = false;        // brute force mean <= N * C * (1 + slack)

  json to_json() const;
};

BenchReport bench(const PrivateParams& priv, const PublicParams& pub, const BenchOptions& opts = {});

json public_to_json(const PublicParams& pub);
PublicParams public_from_json(const json& j);
json private_to_json(const PrivateParams& priv);
PrivateParams private_from_json(const json& j);

}  // namespace gbke
