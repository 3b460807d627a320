#ifndef CSFQ_CONSTANTS_HPP_
#define CSFQ_CONSTANTS_HPP_

#include <numbers>

namespace csfq {

/// Physical constants, CODATA 2018 (SI exact values). Hard-coded so that
/// every build computes identical numbers.
struct PhysicalConstants {
  //! Planck constant (J s)
  static constexpr double h = 6.62607015e-34;
  //! Elementary charge (C)
  static constexpr double e = 1.602176634e-19;
  //! Boltzmann constant (J/K)
  static constexpr double kB = 1.380649e-23;
  //! Reduced Planck constant (J s)
  static constexpr double hbar = h / (2.0 * std::numbers::pi);
  //! Magnetic flux quantum h/2e (Wb)
  static constexpr double Phi0 = h / (2.0 * e);
};

using phys = PhysicalConstants;

}  // namespace csfq

#endif  // CSFQ_CONSTANTS_HPP_
