#pragma once

// CODATA 2018 exact / recommended values, SI units.
namespace qillum::constants {

inline constexpr double pi = 3.14159265358979323846;
inline constexpr double planck = 6.62607015e-34;         // J s (exact)
inline constexpr double reduced_planck = 1.054571817e-34; // J s
inline constexpr double boltzmann = 1.380649e-23;         // J / K (exact)

}  // namespace qillum::constants
