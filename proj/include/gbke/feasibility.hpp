#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace gbke {

/// One row a.x >= b with integer data.
struct Inequality {
  std::vector<std::int64_t> coeffs;
  std::int64_t rhs = 0;
};

struct FeasibilityLimits {
  std::size_t max_rows = 200000;
};

/// Exact Fourier-Motzkin elimination over Q.
///
/// Returns a rational point satisfying every row, or nullopt when the system
/// is infeasible. Redundant combinations are pruned with Chernikov's history
/// rule and by keeping only the tightest row per coefficient vector. Throws
/// ResourceError when an intermediate system exceeds `limits.max_rows` rows
/// or an integer coefficient overflows.
std::optional<std::vector<mpq_class>> fourier_motzkin(
    const std::vector<Inequality>& rows, std::size_t num_vars,
    const FeasibilityLimits& limits = {});

}  // namespace gbke
