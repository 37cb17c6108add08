#include "phonograd/units.hpp"

#include "phonograd/constants.hpp"
#include "phonograd/error.hpp"

namespace phonograd {

namespace {

constexpr double kGal = 1e-2;  // m s^-2

void require_finite(Acceleration a) {
  if (!isfinite(a)) throw Error(ErrorCode::kInvalidQuantity, "acceleration is not finite");
}

}  // namespace

double to_gal(Acceleration a) {
  require_finite(a);
  return a.value() / kGal;
}

Acceleration from_gal(double gal) {
  if (!std::isfinite(gal)) throw Error(ErrorCode::kInvalidQuantity, "acceleration is not finite");
  return Acceleration{gal * kGal};
}

double to_standard_g(Acceleration a) {
  require_finite(a);
  return a / kConstants.g_surface;
}

}  // namespace phonograd
