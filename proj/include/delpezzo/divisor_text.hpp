#pragma once

// Text form of surfaces and divisor classes.
//
//   surfaces:  P2 (= X0), X0 .. X6, Q
//   divisors:  3l-2e1-e2, h+3m, 2C0+3f, 0
//
// Divisors are sums of signed terms [coefficient][*]symbol. Whitespace is
// ignored, terms may come in any order and repeated symbols are summed.
// Symbols are l, e1..er on blow-ups, h and m on the quadric, and C0, f on X1.

#include <string>
#include <string_view>

#include "delpezzo/picard.hpp"

namespace delpezzo {

SurfaceModel parse_surface(std::string_view text);

DivisorClass parse_divisor(const SurfaceModel& surface, std::string_view text);

/// Canonical text: l before e1..er (h before m); zero prints as "0".
std::string format_divisor(const DivisorClass& d);

}  // namespace delpezzo
