#pragma once

// Dimensioned quantities over SI base units (length, mass, time, temperature).
// Angular frequencies are carried as s^-1 (rad/s); Hz, gal and nK exist only
// in the conversion helpers at the bottom of this file.

#include <cmath>
#include <compare>
#include <type_traits>

namespace phonograd {

template <int L, int M, int T, int K = 0>
class Quantity {
 public:
  static constexpr int length_dim = L;
  static constexpr int mass_dim = M;
  static constexpr int time_dim = T;
  static constexpr int temperature_dim = K;
  static constexpr bool dimensionless = (L == 0 && M == 0 && T == 0 && K == 0);

  constexpr Quantity() = default;
  constexpr explicit Quantity(double v) : value_(v) {}

  [[nodiscard]] constexpr double value() const { return value_; }

  // Only pure numbers decay to double.
  constexpr operator double() const
    requires dimensionless
  {
    return value_;
  }

  constexpr Quantity operator-() const { return Quantity{-value_}; }
  constexpr Quantity& operator+=(Quantity o) {
    value_ += o.value_;
    return *this;
  }
  constexpr Quantity& operator-=(Quantity o) {
    value_ -= o.value_;
    return *this;
  }
  constexpr Quantity& operator*=(double s) {
    value_ *= s;
    return *this;
  }
  constexpr Quantity& operator/=(double s) {
    value_ /= s;
    return *this;
  }

  friend constexpr Quantity operator+(Quantity a, Quantity b) { return Quantity{a.value_ + b.value_}; }
  friend constexpr Quantity operator-(Quantity a, Quantity b) { return Quantity{a.value_ - b.value_}; }
  friend constexpr Quantity operator*(double s, Quantity q) { return Quantity{s * q.value_}; }
  friend constexpr Quantity operator*(Quantity q, double s) { return Quantity{q.value_ * s}; }
  friend constexpr Quantity operator/(Quantity q, double s) { return Quantity{q.value_ / s}; }
  friend constexpr auto operator<=>(Quantity a, Quantity b) = default;

 private:
  double value_ = 0.0;
};

template <int L1, int M1, int T1, int K1, int L2, int M2, int T2, int K2>
constexpr Quantity<L1 + L2, M1 + M2, T1 + T2, K1 + K2> operator*(Quantity<L1, M1, T1, K1> a,
                                                                 Quantity<L2, M2, T2, K2> b) {
  return Quantity<L1 + L2, M1 + M2, T1 + T2, K1 + K2>{a.value() * b.value()};
}

template <int L1, int M1, int T1, int K1, int L2, int M2, int T2, int K2>
constexpr Quantity<L1 - L2, M1 - M2, T1 - T2, K1 - K2> operator/(Quantity<L1, M1, T1, K1> a,
                                                                 Quantity<L2, M2, T2, K2> b) {
  return Quantity<L1 - L2, M1 - M2, T1 - T2, K1 - K2>{a.value() / b.value()};
}

template <int L, int M, int T, int K>
constexpr Quantity<-L, -M, -T, -K> operator/(double s, Quantity<L, M, T, K> q) {
  return Quantity<-L, -M, -T, -K>{s / q.value()};
}

template <int N, int L, int M, int T, int K>
constexpr Quantity<N * L, N * M, N * T, N * K> pow(Quantity<L, M, T, K> q) {
  static_assert(N >= 0);
  double v = 1.0;
  for (int i = 0; i < N; ++i) v *= q.value();
  return Quantity<N * L, N * M, N * T, N * K>{v};
}

template <int N, int L, int M, int T, int K>
Quantity<L / N, M / N, T / N, K / N> root(Quantity<L, M, T, K> q) {
  static_assert(N > 0);
  static_assert(L % N == 0 && M % N == 0 && T % N == 0 && K % N == 0,
                "root would produce fractional dimensions");
  if constexpr (N == 2) {
    return Quantity<L / N, M / N, T / N, K / N>{std::sqrt(q.value())};
  } else if constexpr (N == 3) {
    return Quantity<L / N, M / N, T / N, K / N>{std::cbrt(q.value())};
  } else {
    return Quantity<L / N, M / N, T / N, K / N>{std::pow(q.value(), 1.0 / N)};
  }
}

template <int L, int M, int T, int K>
auto sqrt(Quantity<L, M, T, K> q) {
  return root<2>(q);
}

template <int L, int M, int T, int K>
auto cbrt(Quantity<L, M, T, K> q) {
  return root<3>(q);
}

template <int L, int M, int T, int K>
Quantity<L, M, T, K> abs(Quantity<L, M, T, K> q) {
  return Quantity<L, M, T, K>{std::fabs(q.value())};
}

template <int L, int M, int T, int K>
bool isfinite(Quantity<L, M, T, K> q) {
  return std::isfinite(q.value());
}

using Dimensionless = Quantity<0, 0, 0>;
using Length = Quantity<1, 0, 0>;
using Area = Quantity<2, 0, 0>;
using Mass = Quantity<0, 1, 0>;
using Time = Quantity<0, 0, 1>;
using Temperature = Quantity<0, 0, 0, 1>;
using AngularFrequency = Quantity<0, 0, -1>;
using AngularFrequencySq = Quantity<0, 0, -2>;
using GravityGradient = Quantity<0, 0, -2>;
using Acceleration = Quantity<1, 0, -2>;
using Energy = Quantity<2, 1, -2>;
using Action = Quantity<2, 1, -1>;
using NumberDensity = Quantity<-3, 0, 0>;
using MassDensity = Quantity<-3, 1, 0>;
using InteractionStrength = Quantity<5, 1, -2>;  // U0, J m^3
using ThreeBodyRate = Quantity<6, 0, -1>;        // D, m^6 s^-1
using Wavenumber = Quantity<-1, 0, 0>;
using GravitationalConstant = Quantity<3, -1, -2>;
using HeatCapacity = Quantity<2, 1, -2, -1>;  // k_B, J K^-1

inline constexpr double kPi = 3.14159265358979323846;

// Boundary conversions. Everything inside the engine is SI.

/// m s^-2 -> gal (1 gal = 1 cm s^-2).
double to_gal(Acceleration a);
Acceleration from_gal(double gal);

/// Acceleration in units of standard surface gravity.
double to_standard_g(Acceleration a);

constexpr AngularFrequency from_hz(double hz) { return AngularFrequency{2.0 * kPi * hz}; }
constexpr double to_hz(AngularFrequency w) { return w.value() / (2.0 * kPi); }

constexpr Temperature from_nanokelvin(double nk) { return Temperature{nk * 1e-9}; }
constexpr double to_nanokelvin(Temperature t) { return t.value() * 1e9; }

/// cm^6 s^-1 -> m^6 s^-1.
constexpr ThreeBodyRate three_body_from_cgs(double cm6_per_s) { return ThreeBodyRate{cm6_per_s * 1e-12}; }
constexpr double three_body_to_cgs(ThreeBodyRate d) { return d.value() * 1e12; }

/// m^-3 -> cm^-3.
constexpr double density_to_cgs(NumberDensity n) { return n.value() * 1e-6; }
constexpr NumberDensity density_from_cgs(double per_cm3) { return NumberDensity{per_cm3 * 1e6}; }

}  // namespace phonograd
