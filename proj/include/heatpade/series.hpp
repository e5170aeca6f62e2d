#pragma once

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace heatpade {

using Rational = boost::multiprecision::cpp_rational;

/// Exact coefficient sequence. `variable` records what the k-th entry multiplies.
struct RationalSeries {
  enum class Variable {
    InversePower,  // x^{-k}
    SquaredPower,  // (x^2)^k
  };

  std::vector<Rational> coefficients;
  Variable variable = Variable::InversePower;

  std::vector<double> to_double() const;
};

/// Coefficients a_0..a_K of the asymptotic series I1(x)/I0(x) ~ sum a_k x^{-k}.
///
/// u = I1/I0 solves u' = 1 - u/x - u^2. Matching powers of 1/x gives a_0 = 1 and
///   2 a_m = (m - 2) a_{m-1} - sum_{i=1}^{m-1} a_i a_{m-i}.
RationalSeries asymptotic_ratio_coeffs(int max_order);

/// Gamma(j/2 + 1) for integer j >= 0, kept as rational * (sqrt(pi) or 1).
struct HalfIntegerGamma {
  Rational rational;
  bool has_sqrt_pi = false;

  double value() const;
};

HalfIntegerGamma gamma_half_plus_one(int j);

/// Modified Bessel I_order(x), order in {0, 1}, x >= 0. Power series up to
/// x = 15, Hankel asymptotic form beyond.
double bessel_i(int order, double x);

/// exp(-x) I_order(x); does not overflow for large x.
double bessel_i_scaled(int order, double x);

double bessel_i1_over_i0(double x);

inline constexpr double kBesselCrossover = 15.0;

// Internal regimes, exposed so the crossover agreement can be tested.
double bessel_i_series(int order, double x);
double bessel_i_asymptotic_scaled(int order, double x);

double bessel_j0(double x);
double bessel_j1(double x);

/// n-th positive zero of J0 (n >= 1).
double j0_zero(int n);

/// First `count` positive zeros of J0, McMahon initial guesses polished by Newton.
std::vector<double> j0_zeros(int count);

/// Exact Maclaurin coefficients of tau(s) for the unit disk in powers of s^2:
/// entry k multiplies s^{2k}. For radius R, scale entry k by R^{2k+2}.
RationalSeries maclaurin_tau_disk_unit(int max_order);

/// [d_0, d_2, ..., d_{2K}] for a disk of radius R.
std::vector<double> maclaurin_tau_disk(double radius, int max_order);

}  // namespace heatpade
