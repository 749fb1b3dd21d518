#pragma once

#include <cstdint>
#include <string_view>

namespace qwall {

// The two halves of the partitioned box. Plus has the Neumann condition at
// the partition (levels (n - 1/2)^2), Minus the Dirichlet one (levels n^2).
// Both have Dirichlet outer walls.
enum class Side { Plus, Minus };

using LevelIndex = std::int64_t;

inline constexpr Side kSides[] = {Side::Plus, Side::Minus};

constexpr std::string_view to_string(Side side) {
  return side == Side::Plus ? "plus" : "minus";
}

// Offset of the half-line sum from half the full-lattice sum:
// sum_{n>=1} y(e_n) = -sigma/2 * y(0) + 1/2 sum_{n in Z} y(e_n).
constexpr double sigma(Side side) { return side == Side::Plus ? 0.0 : 1.0; }

// Sign alternation of the Fourier modes after Poisson resummation.
constexpr double tau(Side side) { return side == Side::Plus ? -1.0 : 1.0; }

constexpr double ground_energy(Side side) {
  return side == Side::Plus ? 0.25 : 1.0;
}

// Dimensionless level for any integer n. The closed form is symmetric under
// n -> 1 - n (Plus) or n -> -n (Minus), which the lattice sums rely on.
constexpr double energy_level_extended(Side side, LevelIndex n) {
  const double k =
      side == Side::Plus ? static_cast<double>(n) - 0.5 : static_cast<double>(n);
  return k * k;
}

// e_n - e_1, exact for every representable level. Used wherever the
// occupation exponent is built from the shifted multiplier.
constexpr double excitation_energy(Side side, LevelIndex n) {
  const double m = static_cast<double>(n);
  return side == Side::Plus ? (m - 1.0) * m : (m - 1.0) * (m + 1.0);
}

// Physical level, n >= 1. Throws DomainError otherwise.
double energy_level(Side side, LevelIndex n);

}  // namespace qwall
