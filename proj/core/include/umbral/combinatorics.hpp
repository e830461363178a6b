#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "umbral/rational.hpp"

namespace umbral {

Integer factorial(unsigned long n);
Integer binomial(unsigned long n, unsigned long k);

/// n! / (i_1! ... i_m!) for parts summing to n.
Integer multinomial(std::span<const unsigned> parts);

/// Visits every weak composition of n into m parts (ordered tuples of
/// non-negative integers summing to n) in lexicographic order. m == 0
/// visits the empty tuple once when n == 0 and nothing otherwise.
void for_each_weak_composition(unsigned n, unsigned m,
                               const std::function<void(std::span<const unsigned>)>& visit);

}  // namespace umbral
