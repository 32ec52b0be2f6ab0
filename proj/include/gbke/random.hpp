#pragma once

#include "gbke/order.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace gbke {

/// Seeded generator with platform-independent draws (the standard
/// distributions are implementation-defined, so they are avoided).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, n), n > 0.
  std::uint64_t below(std::uint64_t n);
  /// Uniform in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }
  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }
  std::vector<std::size_t> permutation(std::size_t n);

 private:
  std::mt19937_64 engine_;
};

/// Lex order under a uniformly random variable permutation.
MonomialOrder random_lex_order(std::size_t n, Rng& rng);
/// Weight order with entries uniform in [1, 1000] and a random lex tiebreak.
MonomialOrder random_weight_order(std::size_t n, Rng& rng);
/// Fair coin between the two above.
MonomialOrder random_monomial_order(std::size_t n, Rng& rng);

}  // namespace gbke
