#pragma once

#include "gbke/digest.hpp"
#include "gbke/feasibility.hpp"
#include "gbke/groebner.hpp"
#include "gbke/monomial_set.hpp"
#include "gbke/polynomial.hpp"

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace gbke {

/// A set of polynomials that is a Groebner basis for every monomial order.
/// This is Party A's private material.
class UniversalBasis {
 public:
  UniversalBasis(Ring ring, std::vector<Polynomial> elements, std::string provenance = {});

  const Ring& ring() const { return ring_; }
  const std::vector<Polynomial>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  const std::string& provenance() const { return provenance_; }

  /// Every element is a binomial x^a - x^b with deg a = deg b and disjoint
  /// supports (the shape produced by the toric graph constructions).
  bool is_toric_shaped() const;
  /// Largest exponent entry over all terms.
  std::uint32_t max_exponent() const;

 private:
  Ring ring_;
  std::vector<Polynomial> elements_;
  std::string provenance_;
};

/// One term index per element of a UniversalBasis.
struct TermSelection {
  std::vector<std::size_t> picks;
};

using WeightVector = std::vector<mpz_class>;

/// Canonical minimal generators of an initial ideal plus derived key material.
struct GrobnerKey {
  MonomialSet gens;
  std::uint32_t k_bound = 2;
  std::string eta_raw;
  Digest key_bytes{};

  bool operator==(const GrobnerKey& o) const {
    return gens == o.gens && eta_raw == o.eta_raw && key_bytes == o.key_bytes;
  }
};

/// Total order used to list keys: generator lists compared element-wise,
/// each monomial in descending lex.
bool key_precedes(const GrobnerKey& a, const GrobnerKey& b);

struct KeyList {
  std::vector<GrobnerKey> keys;
  std::vector<std::optional<WeightVector>> witness_weights;  // parallel to keys
  bool sampled = false;
};

/// Bit width per exponent entry: ceil(log2 k), k >= 2.
std::uint32_t entry_bit_width(std::uint32_t k_bound);

/// Builds the key for a minimal generating set. DomainError if gens is not
/// minimal or an entry is >= k_bound.
GrobnerKey canonical_key(const MonomialSet& gens, std::uint32_t k_bound);

/// Buchberger criterion for U under `order`.
bool verify_gb_under_order(const UniversalBasis& U, const MonomialOrder& order,
                           const GroebnerLimits& limits = {});

/// Reduced Groebner basis under `order` extracted from U by marking leading
/// terms, discarding elements whose leading monomial is redundant and
/// inter-reducing the survivors.
std::vector<Polynomial> trim(const UniversalBasis& U, const MonomialOrder& order);

/// Nonnegative integer weight w with w.(a_sel - a_other) >= 1 for every
/// non-selected term of every element, or nullopt when no monomial order
/// selects these terms.
std::optional<WeightVector> selection_feasible(const UniversalBasis& U, const TermSelection& sel,
                                               const FeasibilityLimits& limits = {});

/// Weight order with lex tiebreak built from a witness.
MonomialOrder witness_order(const WeightVector& w);

/// Leading-term selection of U under `order`.
TermSelection selection_under(const UniversalBasis& U, const MonomialOrder& order);

/// Key read off U's leading terms under `order`.
GrobnerKey key_under_order(const UniversalBasis& U, const MonomialOrder& order,
                           std::uint32_t k_bound);

struct EnumerateOptions {
  enum class Mode { Exact, Sample };
  Mode mode = Mode::Exact;
  std::size_t sample_count = 1000;
  std::uint64_t seed = 0;
  /// 0 means 1 + max exponent of U (at least 2).
  std::uint32_t k_bound = 0;
  /// Exact mode refuses when the product of term counts exceeds this.
  std::uint64_t selection_cap = 10'000'000;
  FeasibilityLimits fm;
  unsigned threads = 1;
};

std::uint32_t default_k_bound(const UniversalBasis& U);

/// All keys (exact) or the keys of `sample_count` random orders (sample).
/// Keys are deduplicated and listed in key_precedes order; every key carries
/// a witness weight.
KeyList enumerate_keys(const UniversalBasis& U, const EnumerateOptions& opts = {});

}  // namespace gbke
