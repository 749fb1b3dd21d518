#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>

#include "detail/compensated_sum.hpp"
#include "qwall/approx.hpp"
#include "qwall/error.hpp"
#include "qwall/occupancy.hpp"

namespace qwall {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTruncation = 1e-16;
// -ln(1e-16)
constexpr double kLogTruncation = 36.841361487904734;
constexpr std::int64_t kMaxFugacityPowers = 10'000'000;

// Gaussian width a = k*b of one term of the fugacity series.
double gaussian_width(std::int64_t k, double beta) {
  if (k < 1) throw DomainError("series index k must be >= 1");
  if (!(beta > 0.0) || !std::isfinite(beta)) {
    throw DomainError("inverse temperature must be finite and > 0");
  }
  return static_cast<double>(k) * beta;
}

// Last Fourier mode with exp(-pi^2 m^2 / a) above the cutoff, plus a margin
// for the polynomial prefactor of the force series.
std::int64_t mode_cutoff(double width) {
  return static_cast<std::int64_t>(std::ceil(std::sqrt(kLogTruncation * width) / kPi)) + 2;
}

// sum_m tau^m w(m) exp(-pi^2 m^2 / a), summed from the smallest terms in.
template <typename Weight>
double fourier_modes(Side side, double width, Weight weight) {
  const double sign = tau(side);
  detail::CompensatedSum sum;
  for (std::int64_t m = mode_cutoff(width); m >= 1; --m) {
    const double mm = static_cast<double>(m * m);
    const double parity = (m % 2 == 0) ? 1.0 : sign;
    sum.add(2.0 * parity * weight(mm) * std::exp(-kPi * kPi * mm / width));
  }
  sum.add(weight(0.0));
  return sum.value();
}

double theta_direct(Side side, double width) {
  detail::CompensatedSum sum;
  for (LevelIndex n = 1;; ++n) {
    if (n > kMaxLevels) throw NumericError("theta sum exceeded 1e7 levels");
    const double term = std::exp(-width * energy_level_extended(side, n));
    sum.add(term);
    if (term == 0.0 || term < kTruncation * sum.value()) break;
  }
  return sum.value();
}

double force_direct(Side side, double width) {
  detail::CompensatedSum sum;
  for (LevelIndex n = 1;; ++n) {
    if (n > kMaxLevels) throw NumericError("force sum exceeded 1e7 levels");
    const double e = energy_level_extended(side, n);
    const double term = e * std::exp(-width * e);
    sum.add(term);
    // e*exp(-a e) peaks at a*e = 1.
    if (term == 0.0 || (width * e > 1.0 && term < kTruncation * sum.value())) {
      break;
    }
  }
  return sum.value();
}

double theta_poisson(Side side, double width) {
  const double modes = fourier_modes(side, width, [](double) { return 1.0; });
  return -0.5 * sigma(side) + std::sqrt(kPi / (4.0 * width)) * modes;
}

double force_poisson(Side side, double width) {
  const double modes = fourier_modes(side, width, [width](double mm) {
    return 1.0 - 2.0 * kPi * kPi * mm / width;
  });
  return std::sqrt(kPi / (16.0 * width * width * width)) * modes;
}

std::int64_t fugacity_cutoff(double alpha) {
  if (!(alpha > 0.0)) {
    throw DomainError("fugacity series requires alpha > 0 (q < 1)");
  }
  const double powers = std::ceil(kLogTruncation / alpha);
  if (powers > static_cast<double>(kMaxFugacityPowers)) {
    throw DomainError("fugacity series needs more than 1e7 powers of q");
  }
  return static_cast<std::int64_t>(powers);
}

template <typename Term>
double fugacity_series(double alpha, Term term) {
  const std::int64_t k_max = fugacity_cutoff(alpha);
  detail::CompensatedSum sum;
  for (std::int64_t k = k_max; k >= 1; --k) {
    sum.add(std::exp(-static_cast<double>(k) * alpha) * term(k));
  }
  return sum.value();
}

}  // namespace

double theta_partition_sum(Side side, std::int64_t k, double beta, SumPath path) {
  const double width = gaussian_width(k, beta);
  return path == SumPath::Direct ? theta_direct(side, width)
                                 : theta_poisson(side, width);
}

double poisson_force_sum(Side side, std::int64_t k, double beta, SumPath path) {
  const double width = gaussian_width(k, beta);
  return path == SumPath::Direct ? force_direct(side, width)
                                 : force_poisson(side, width);
}

double fugacity_series_total(Side side, double alpha, double beta) {
  return fugacity_series(alpha, [&](std::int64_t k) {
    return theta_partition_sum(side, k, beta, SumPath::Poisson);
  });
}

double fugacity_series_force(Side side, double alpha, double beta) {
  return fugacity_series(alpha, [&](std::int64_t k) {
    return poisson_force_sum(side, k, beta, SumPath::Poisson);
  });
}

FugacityExpansion fugacity_expansion(Side side, std::int64_t particles,
                                     double beta) {
  if (particles < 1) {
    throw DomainError("particle count must be >= 1, got " +
                      std::to_string(particles));
  }
  if (!(beta > 0.0) || !std::isfinite(beta)) {
    throw DomainError("inverse temperature must be finite and > 0");
  }
  const double n = static_cast<double>(particles);
  FugacityExpansion out;
  out.beta = beta;
  out.q_leading = 2.0 * n * std::sqrt(beta / kPi);
  out.q_subleading = 2.0 * n * (sigma(side) - std::numbers::sqrt2 * n) * beta / kPi;
  return out;
}

double delta_f_high_t(std::int64_t particles, double temperature) {
  if (particles < 1) {
    throw DomainError("particle count must be >= 1, got " +
                      std::to_string(particles));
  }
  if (!(temperature > 0.0) || !std::isfinite(temperature)) {
    throw DomainError("temperature must be finite and > 0");
  }
  return 0.5 * static_cast<double>(particles) * std::sqrt(temperature / kPi);
}

}  // namespace qwall
