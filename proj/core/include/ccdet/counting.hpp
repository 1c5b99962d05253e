#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ccdet {

std::int64_t binomial(int n, int k);

// Size bookkeeping for the connection systems in dimension n, degree deg.
struct Counting {
  int n = 0;
  int deg = 0;
  std::int64_t rows_second_order = 0; // n * C(n, deg)
  std::int64_t rows_first_order = 0;  // n * C(n, deg) + n * C(n, 2)
  std::int64_t unknowns_gamma = 0;    // n^2 (n+1) / 2
  std::int64_t unknowns_v = 0;        // n^2
  std::int64_t second_order_target = 0; // n^3
  std::int64_t first_order_target = 0;  // n^2 + n^3
  std::int64_t joined_equations = 0;    // n^2 (3n + 2n^2 + 7) / 6, deg == n-1 case
  std::int64_t joined_unknowns = 0;     // n^2 (n+1)^2 / 2
  std::vector<std::string> comparisons;
};

Counting counting(int n, int deg);

} // namespace ccdet
