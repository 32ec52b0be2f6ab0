#include "gbke/feasibility.hpp"

#include "gbke/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace gbke {

namespace {

struct Row {
  std::vector<std::int64_t> a;
  std::int64_t b;
  std::vector<std::uint64_t> history;  // bitset of original rows
  std::size_t history_size() const {
    std::size_t n = 0;
    for (auto w : history) n += static_cast<std::size_t>(__builtin_popcountll(w));
    return n;
  }
};

std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_mul_overflow(x, y, &r))
    throw ResourceError("Fourier-Motzkin coefficient overflow");
  return r;
}

std::int64_t checked_add(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_add_overflow(x, y, &r))
    throw ResourceError("Fourier-Motzkin coefficient overflow");
  return r;
}

void normalize(Row& r) {
  std::int64_t g = 0;
  for (auto x : r.a) g = std::gcd(g, x);
  g = std::gcd(g, r.b);
  if (g > 1) {
    for (auto& x : r.a) x /= g;
    r.b /= g;
  }
}

bool all_zero(const std::vector<std::int64_t>& a) {
  return std::all_of(a.begin(), a.end(), [](std::int64_t x) { return x == 0; });
}

struct Stage {
  std::size_t var;
  std::vector<Row> rows;  // rows with a nonzero coefficient on var
};

// Keeps the tightest row per coefficient vector.
void dedupe(std::vector<Row>& rows) {
  std::map<std::vector<std::int64_t>, std::size_t> seen;
  std::vector<Row> out;
  out.reserve(rows.size());
  for (auto& r : rows) {
    auto [it, inserted] = seen.try_emplace(r.a, out.size());
    if (inserted) {
      out.push_back(std::move(r));
    } else if (r.b > out[it->second].b) {
      out[it->second] = std::move(r);
    }
  }
  rows = std::move(out);
}

mpq_class ceil_q(const mpq_class& q) {
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return mpq_class(r);
}

}  // namespace

std::optional<std::vector<mpq_class>> fourier_motzkin(
    const std::vector<Inequality>& input, std::size_t num_vars,
    const FeasibilityLimits& limits) {
  const std::size_t words = (input.size() + 63) / 64;
  std::vector<Row> rows;
  rows.reserve(input.size());
  for (std::size_t i = 0; i < input.size(); ++i) {
    if (input[i].coeffs.size() != num_vars)
      throw DomainError("inequality length does not match variable count");
    Row r{input[i].coeffs, input[i].rhs, std::vector<std::uint64_t>(words, 0)};
    r.history[i / 64] |= std::uint64_t{1} << (i % 64);
    normalize(r);
    rows.push_back(std::move(r));
  }

  std::vector<bool> eliminated(num_vars, false);
  std::vector<Stage> stages;
  std::size_t eliminated_count = 0;

  for (;;) {
    // Constant rows decide feasibility on their own.
    std::vector<Row> live;
    live.reserve(rows.size());
    for (auto& r : rows) {
      if (all_zero(r.a)) {
        if (r.b > 0) return std::nullopt;
      } else {
        live.push_back(std::move(r));
      }
    }
    rows = std::move(live);
    dedupe(rows);
    if (rows.empty()) break;

    // Cheapest variable to eliminate: fewest generated rows.
    std::size_t best = num_vars;
    long long best_cost = 0;
    for (std::size_t v = 0; v < num_vars; ++v) {
      if (eliminated[v]) continue;
      long long pos = 0, neg = 0;
      for (const auto& r : rows) {
        if (r.a[v] > 0) ++pos;
        if (r.a[v] < 0) ++neg;
      }
      if (pos == 0 && neg == 0) continue;
      const long long cost = pos * neg - pos - neg;
      if (best == num_vars || cost < best_cost) {
        best = v;
        best_cost = cost;
      }
    }
    if (best == num_vars) break;

    eliminated[best] = true;
    ++eliminated_count;
    Stage stage{best, {}};
    std::vector<Row> next, pos, neg;
    for (auto& r : rows) {
      if (r.a[best] > 0)
        pos.push_back(r);
      else if (r.a[best] < 0)
        neg.push_back(r);
      else
        next.push_back(std::move(r));
    }
    for (const auto& p : pos) {
      for (const auto& n : neg) {
        Row c;
        c.history.resize(words);
        for (std::size_t w = 0; w < words; ++w) c.history[w] = p.history[w] | n.history[w];
        if (c.history_size() > eliminated_count + 1) continue;  // Chernikov: redundant
        const std::int64_t mp = -n.a[best];
        const std::int64_t mn = p.a[best];
        c.a.resize(num_vars);
        for (std::size_t j = 0; j < num_vars; ++j)
          c.a[j] = checked_add(checked_mul(mp, p.a[j]), checked_mul(mn, n.a[j]));
        c.a[best] = 0;
        c.b = checked_add(checked_mul(mp, p.b), checked_mul(mn, n.b));
        normalize(c);
        next.push_back(std::move(c));
        if (next.size() > limits.max_rows)
          throw ResourceError("Fourier-Motzkin exceeded " + std::to_string(limits.max_rows) +
                              " rows");
      }
    }
    stage.rows = std::move(pos);
    stage.rows.insert(stage.rows.end(), std::make_move_iterator(neg.begin()),
                      std::make_move_iterator(neg.end()));
    stages.push_back(std::move(stage));
    rows = std::move(next);
  }

  // Back-substitution in reverse elimination order.
  std::vector<mpq_class> x(num_vars, mpq_class(0));
  for (auto st = stages.rbegin(); st != stages.rend(); ++st) {
    const std::size_t v = st->var;
    std::optional<mpq_class> lo, hi;
    for (const auto& r : st->rows) {
      mpq_class s(mpz_class(static_cast<long>(r.b)));
      for (std::size_t j = 0; j < num_vars; ++j)
        if (j != v && r.a[j] != 0) s -= mpq_class(mpz_class(static_cast<long>(r.a[j]))) * x[j];
      mpq_class bound = s / mpq_class(mpz_class(static_cast<long>(r.a[v])));
      if (r.a[v] > 0) {
        if (!lo || bound > *lo) lo = bound;
      } else {
        if (!hi || bound < *hi) hi = bound;
      }
    }
    mpq_class value(0);
    if (lo) {
      value = ceil_q(*lo);
      if (hi && value > *hi) value = *lo;
    } else if (hi) {
      value = *hi >= 0 ? mpq_class(0) : mpq_class(mpz_class(0)) - ceil_q(-*hi);
    }
    x[v] = value;
  }
  return x;
}

}  // namespace gbke
