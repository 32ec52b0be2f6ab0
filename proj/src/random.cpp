#include "gbke/random.hpp"

#include <numeric>

namespace gbke {

std::uint64_t Rng::below(std::uint64_t n) {
  // Rejection sampling removes modulo bias.
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % n;
}

std::vector<std::size_t> Rng::permutation(std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  shuffle(p);
  return p;
}

MonomialOrder random_lex_order(std::size_t n, Rng& rng) {
  return MonomialOrder::lex(rng.permutation(n));
}

MonomialOrder random_weight_order(std::size_t n, Rng& rng) {
  std::vector<long long> w(n);
  for (auto& x : w) x = rng.between(1, 1000);
  return MonomialOrder::weight(w, rng.permutation(n));
}

MonomialOrder random_monomial_order(std::size_t n, Rng& rng) {
  return rng.below(2) == 0 ? random_lex_order(n, rng) : random_weight_order(n, rng);
}

}  // namespace gbke
