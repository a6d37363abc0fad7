#include "multiplihedra/counting.hpp"

#include <stdexcept>
#include <vector>

namespace multiplihedra {

Int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Int result = 1;
  for (int i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

Int catalan(int n) {
  if (n < 0) return 0;
  return binomial(2 * n, n) / (n + 1);
}

Int vertex_count_recursive(int n) {
  if (n < 0) throw std::invalid_argument("vertex_count_recursive: n < 0");
  std::vector<Int> a(static_cast<std::size_t>(n) + 1);
  a[0] = 0;
  for (int m = 1; m <= n; ++m) {
    Int total = catalan(m - 1);
    for (int i = 1; i <= m - 1; ++i) total += a[i] * a[m - i];
    a[static_cast<std::size_t>(m)] = total;
  }
  return a[static_cast<std::size_t>(n)];
}

Int vertex_count_closed(int n) {
  if (n < 0) throw std::invalid_argument("vertex_count_closed: n < 0");
  if (n == 0) return 0;
  Int sum = 0;
  for (int k = 1; k <= n; ++k)
    sum += binomial(2 * n - k - 1, n - 1) * binomial(2 * k - 2, k - 1);
  if (sum % n != 0) throw std::logic_error("vertex_count_closed: sum not divisible by n");
  return sum / n;
}

Int facet_count(int n) {
  if (n < 2) return 0;
  return Int(n) * (n - 1) / 2 + (Int(1) << (n - 1)) - 1;
}

}  // namespace multiplihedra
