#include "umbral/combinatorics.hpp"

#include <numeric>

namespace umbral {

Integer factorial(unsigned long n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

Integer binomial(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

Integer multinomial(std::span<const unsigned> parts) {
  const unsigned long n = std::accumulate(parts.begin(), parts.end(), 0UL);
  Integer out = factorial(n);
  for (unsigned part : parts) {
    out /= factorial(part);
  }
  return out;
}

void for_each_weak_composition(unsigned n, unsigned m,
                               const std::function<void(std::span<const unsigned>)>& visit) {
  if (m == 0) {
    if (n == 0) visit({});
    return;
  }
  // Lexicographic order: the first part runs 0..n, the tail recurses.
  std::vector<unsigned> parts(m, 0);
  std::function<void(unsigned, unsigned)> fill = [&](unsigned slot, unsigned remaining) {
    if (slot + 1 == m) {
      parts[slot] = remaining;
      visit(parts);
      return;
    }
    for (unsigned v = 0; v <= remaining; ++v) {
      parts[slot] = v;
      fill(slot + 1, remaining - v);
    }
  };
  fill(0, n);
}

}  // namespace umbral
