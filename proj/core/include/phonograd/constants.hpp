#pragma once

#include "phonograd/units.hpp"

namespace phonograd {

/// CODATA 2018 values; fixed at build time.
struct PhysicalConstants {
  GravitationalConstant G{6.67430e-11};
  Action hbar{1.054571817e-34};
  HeatCapacity k_B{1.380649e-23};
  Acceleration g_surface{9.80665};
  Mass atomic_mass_unit{1.66053906660e-27};
};

inline constexpr PhysicalConstants kConstants{};

}  // namespace phonograd
