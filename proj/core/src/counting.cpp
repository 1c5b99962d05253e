#include "ccdet/counting.hpp"

#include <stdexcept>

namespace ccdet {

std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Counting counting(int n, int deg) {
  if (n < 1 || deg < 1 || deg > n) throw std::invalid_argument("counting: out of range");
  Counting c;
  c.n = n;
  c.deg = deg;
  const std::int64_t nn = n;
  c.rows_second_order = nn * binomial(n, deg);
  c.rows_first_order = c.rows_second_order + nn * binomial(n, 2);
  c.unknowns_gamma = nn * nn * (nn + 1) / 2;
  c.unknowns_v = nn * nn;
  c.second_order_target = nn * nn * nn;
  c.first_order_target = nn * nn + nn * nn * nn;
  c.joined_equations = nn * nn * (3 * nn + 2 * nn * nn + 7) / 6;
  c.joined_unknowns = nn * nn * (nn + 1) * (nn + 1) / 2;

  auto rel = [](std::int64_t a, std::int64_t b) {
    return a < b ? " < " : (a == b ? " == " : " > ");
  };
  c.comparisons.push_back("second-order rows vs n^3: " + std::to_string(c.rows_second_order) +
                          rel(c.rows_second_order, c.second_order_target) +
                          std::to_string(c.second_order_target));
  c.comparisons.push_back("first-order rows vs n^2+n^3: " + std::to_string(c.rows_first_order) +
                          rel(c.rows_first_order, c.first_order_target) +
                          std::to_string(c.first_order_target));
  c.comparisons.push_back("gamma unknowns: " + std::to_string(c.unknowns_gamma) +
                          ", jacobian unknowns: " + std::to_string(c.unknowns_v));
  if (deg == n - 1)
    c.comparisons.push_back("joined system: " + std::to_string(c.joined_equations) +
                            " equations, " + std::to_string(c.joined_unknowns) + " unknowns");
  return c;
}

} // namespace ccdet
