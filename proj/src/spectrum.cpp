#include "qwall/spectrum.hpp"

#include <string>

#include "qwall/error.hpp"

namespace qwall {

double energy_level(Side side, LevelIndex n) {
  if (n < 1) {
    throw DomainError("energy level index must be >= 1, got " +
                      std::to_string(n));
  }
  return energy_level_extended(side, n);
}

}  // namespace qwall
